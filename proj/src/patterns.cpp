#include "invsort/patterns.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <set>

namespace invsort {

namespace {

int sign3(int a, int b) { return a < b ? -1 : (a == b ? 0 : 1); }

// Depth-first embedding search. Pairwise comparison constraints are checked
// incrementally against every previously chosen position. Returns true when
// the caller should stop (first occurrence found and count_all is off).
bool embed(const Letters& w, const Letters& p, size_t pi, int from, bool pin_last,
           bool count_all, std::vector<int>& chosen, long long& count) {
  if (pi == p.size()) {
    ++count;
    return !count_all;
  }
  const bool is_last = (pi + 1 == p.size());
  int lo = from;
  int hi = static_cast<int>(w.size()) - static_cast<int>(p.size() - pi);
  if (pin_last && is_last) {
    const int last_idx = static_cast<int>(w.size()) - 1;
    if (last_idx < lo) return false;
    lo = hi = last_idx;
  }
  for (int i = lo; i <= hi; ++i) {
    bool ok = true;
    for (size_t t = 0; t < chosen.size() && ok; ++t) {
      ok = sign3(w[static_cast<size_t>(chosen[t])], w[static_cast<size_t>(i)]) ==
           sign3(p[t], p[pi]);
    }
    if (!ok) continue;
    chosen.push_back(i);
    const bool stop = embed(w, p, pi + 1, i + 1, pin_last, count_all, chosen, count);
    chosen.pop_back();
    if (stop) return true;
  }
  return false;
}

bool letters_contain(const Letters& w, const Letters& p, bool pin_last) {
  if (p.size() > w.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(p.size());
  long long count = 0;
  embed(w, p, 0, 0, pin_last, /*count_all=*/false, chosen, count);
  return count > 0;
}

bool letters_avoid_all(const Letters& w, const std::vector<Pattern>& ps) {
  for (const Pattern& p : ps) {
    if (letters_contain(w, p.word().letters(), /*pin_last=*/false)) return false;
  }
  return true;
}

// True iff appending the last letter of `prefix` kept it avoiding, assuming
// the shorter prefix avoided everything already.
bool extension_ok(const Letters& prefix, const std::vector<Pattern>& ps) {
  for (const Pattern& p : ps) {
    if (letters_contain(prefix, p.word().letters(), /*pin_last=*/true)) return false;
  }
  return true;
}

struct PrefixState {
  Letters prefix;
  std::vector<bool> used;  // Permutations only
};

void candidate_letters(const Universe& u, const PrefixState& st, Letters& out) {
  out.clear();
  const int pos = static_cast<int>(st.prefix.size());
  switch (u.kind) {
    case Universe::Kind::InversionSequences:
      for (int c = 0; c <= pos; ++c) out.push_back(c);
      break;
    case Universe::Kind::Words:
      for (int c = 0; c < u.k; ++c) out.push_back(c);
      break;
    case Universe::Kind::Permutations:
      for (int c = 1; c <= u.n; ++c) {
        if (!st.used[static_cast<size_t>(c)]) out.push_back(c);
      }
      break;
  }
}

void count_rec(const Universe& u, const std::vector<Pattern>& ps, PrefixState& st, BigInt& total) {
  if (static_cast<int>(st.prefix.size()) == u.n) {
    ++total;
    return;
  }
  Letters candidates;
  candidate_letters(u, st, candidates);
  for (int c : candidates) {
    st.prefix.push_back(c);
    if (u.kind == Universe::Kind::Permutations) st.used[static_cast<size_t>(c)] = true;
    if (extension_ok(st.prefix, ps)) count_rec(u, ps, st, total);
    if (u.kind == Universe::Kind::Permutations) st.used[static_cast<size_t>(c)] = false;
    st.prefix.pop_back();
  }
}

PrefixState make_state(const Universe& u, Letters prefix) {
  PrefixState st{std::move(prefix), {}};
  if (u.kind == Universe::Kind::Permutations) {
    st.used.assign(static_cast<size_t>(u.n) + 1, false);
    for (int c : st.prefix) st.used[static_cast<size_t>(c)] = true;
  }
  return st;
}

// All avoiding prefixes of the given depth, in lexicographic order.
std::vector<Letters> avoiding_prefixes(const Universe& u, const std::vector<Pattern>& ps, int depth) {
  std::vector<Letters> acc{Letters{}};
  for (int level = 0; level < depth; ++level) {
    std::vector<Letters> next;
    for (const Letters& prefix : acc) {
      PrefixState st = make_state(u, prefix);
      Letters candidates;
      candidate_letters(u, st, candidates);
      for (int c : candidates) {
        Letters extended = prefix;
        extended.push_back(c);
        if (extension_ok(extended, ps)) next.push_back(std::move(extended));
      }
    }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

Word reduce(const Word& w) {
  std::set<int> values(w.letters().begin(), w.letters().end());
  std::map<int, int> rank;
  int next = 0;
  for (int v : values) rank[v] = next++;
  Letters out;
  out.reserve(w.letters().size());
  for (int v : w.letters()) out.push_back(rank[v]);
  return Word(std::move(out));
}

Pattern::Pattern(Word w) : word_(reduce(w)) {
  // containment only depends on the reduced class, so unreduced input (e.g.
  // the permutation-style 312) is canonicalized rather than rejected
  if (word_.empty()) throw std::invalid_argument("patterns must be nonempty");
}

std::string Pattern::str() const {
  if (word_.max_letter() <= 9) {
    std::string out;
    for (int x : word_.letters()) out += static_cast<char>('0' + x);
    return out;
  }
  return word_.str();
}

Pattern decreasing_pattern(int m) {
  if (m < 1) throw std::invalid_argument("decreasing pattern length must be >= 1");
  Letters letters;
  for (int v = m - 1; v >= 0; --v) letters.push_back(v);
  return Pattern(Word(std::move(letters)));
}

Basis::Basis(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

Basis Basis::parse(std::string_view text) {
  std::vector<Pattern> patterns;
  size_t start = 0;
  while (start <= text.size()) {
    size_t plus = text.find('+', start);
    size_t end = plus == std::string_view::npos ? text.size() : plus;
    std::string_view tok = text.substr(start, end - start);
    if (!tok.empty()) patterns.push_back(Pattern::parse(tok));
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  if (patterns.empty()) throw std::invalid_argument("empty basis text");
  return Basis(std::move(patterns));
}

bool Basis::is_minimal() const {
  for (const Pattern& a : patterns_) {
    for (const Pattern& b : patterns_) {
      if (&a == &b) continue;
      if (contains(a.word(), b)) return false;
    }
  }
  return true;
}

std::string Basis::str() const {
  std::string out;
  for (size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out += '+';
    out += patterns_[i].str();
  }
  return out;
}

bool contains(const Word& w, const Pattern& p) {
  return letters_contain(w.letters(), p.word().letters(), /*pin_last=*/false);
}

bool avoids_all(const Word& w, const Basis& b) {
  return letters_avoid_all(w.letters(), b.patterns());
}

long long occurrence_count(const Word& w, const Pattern& p) {
  if (p.size() > w.size()) return 0;
  std::vector<int> chosen;
  long long count = 0;
  embed(w.letters(), p.word().letters(), 0, 0, /*pin_last=*/false, /*count_all=*/true, chosen,
        count);
  return count;
}

bool occurrence_ends_at_back(const Word& w, const Pattern& p) {
  return letters_contain(w.letters(), p.word().letters(), /*pin_last=*/true);
}

BigInt count_avoiders(const Universe& u, const Basis& b) {
  check_universe_guard(u);
  const auto& ps = b.patterns();
  const int budget = thread_budget();
  if (budget <= 1 || u.n < 2) {
    PrefixState st = make_state(u, {});
    BigInt total = 0;
    count_rec(u, ps, st, total);
    return total;
  }

  // Fan out over avoiding prefixes; partial counts combine by addition.
  const int depth = std::min(2, u.n);
  std::vector<Letters> prefixes = avoiding_prefixes(u, ps, depth);
  std::vector<std::future<BigInt>> futures;
  const size_t chunks = std::min<size_t>(static_cast<size_t>(budget), prefixes.size());
  for (size_t c = 0; c < chunks; ++c) {
    futures.push_back(std::async(std::launch::async, [&, c]() {
      BigInt part = 0;
      for (size_t i = c; i < prefixes.size(); i += chunks) {
        PrefixState st = make_state(u, prefixes[i]);
        count_rec(u, ps, st, part);
      }
      return part;
    }));
  }
  BigInt total = 0;
  for (auto& f : futures) total += f.get();
  return total;
}

BigInt count_avoiders_brute(const Universe& u, const Basis& b) {
  BigInt total = 0;
  for_each_member(u, [&](const Word& w) {
    if (avoids_all(w, b)) ++total;
  });
  return total;
}

}  // namespace invsort
