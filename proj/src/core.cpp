#include "invsort/core.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace invsort {

namespace {

constexpr int kEnumerationGuard = 12;     // n! universes
constexpr long long kWordGuard = 1LL << 28;  // k^n universes

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_letter(std::string_view tok) {
  tok = trim(tok);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
    throw std::invalid_argument("bad letter '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Word::Word(Letters letters) : letters_(std::move(letters)) {
  for (int x : letters_) {
    if (x < 0) throw std::invalid_argument("word letters must be nonnegative");
  }
}

Word Word::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) return Word{};
  Letters letters;
  if (text.find(',') != std::string_view::npos) {
    size_t start = 0;
    while (start <= text.size()) {
      size_t comma = text.find(',', start);
      size_t end = comma == std::string_view::npos ? text.size() : comma;
      letters.push_back(parse_letter(text.substr(start, end - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw std::invalid_argument("compact word form must be all digits: '" + std::string(text) + "'");
      }
      letters.push_back(c - '0');
    }
  }
  return Word(std::move(letters));
}

int Word::max_letter() const {
  int best = -1;
  for (int x : letters_) best = std::max(best, x);
  return best;
}

int Word::distinct_count() const {
  std::set<int> seen(letters_.begin(), letters_.end());
  return static_cast<int>(seen.size());
}

std::string Word::str() const {
  std::string out;
  for (size_t i = 0; i < letters_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

bool is_sorted(const Word& w) {
  const Letters& v = w.letters();
  return std::is_sorted(v.begin(), v.end());
}

InversionSequence::InversionSequence(Word w) : word_(std::move(w)) {
  if (!valid(word_)) {
    throw std::invalid_argument("not an inversion sequence: " + word_.str());
  }
}

bool InversionSequence::valid(const Word& w) {
  for (int i = 0; i < w.size(); ++i) {
    if (w[i] > i) return false;  // e_{i+1} <= i
  }
  return true;
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = static_cast<int>(entries_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int x : entries_) {
    if (x < 1 || x > n || seen[static_cast<size_t>(x)]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[static_cast<size_t>(x)] = true;
  }
}

InversionSequence encode(const Permutation& pi) {
  const auto& p = pi.entries();
  const int n = pi.size();
  Letters e(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    int count = 0;
    for (int j = 0; j < i; ++j) {
      if (p[static_cast<size_t>(j)] > p[static_cast<size_t>(i)]) ++count;
    }
    e[static_cast<size_t>(i)] = count;
  }
  return InversionSequence(Word(std::move(e)));
}

Permutation decode(const InversionSequence& e) {
  const int n = e.size();
  // pi_i is the (e_i+1)-th largest element of {pi_1..pi_i}; peel from the right.
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);  // ascending 1..n
  std::vector<int> result(static_cast<size_t>(n), 0);
  for (int i = n - 1; i >= 0; --i) {
    int rank = e.word()[i];  // 0 = largest
    size_t idx = pool.size() - 1 - static_cast<size_t>(rank);
    result[static_cast<size_t>(i)] = pool[idx];
    pool.erase(pool.begin() + static_cast<long>(idx));
  }
  return Permutation(std::move(result));
}

Universe Universe::inversion_sequences(int n) {
  if (n < 0) throw std::invalid_argument("universe size must be >= 0");
  return Universe{Kind::InversionSequences, n, 1};
}

Universe Universe::words(int n, int k) {
  if (n < 0) throw std::invalid_argument("universe size must be >= 0");
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  return Universe{Kind::Words, n, k};
}

Universe Universe::permutations(int n) {
  if (n < 0) throw std::invalid_argument("universe size must be >= 0");
  return Universe{Kind::Permutations, n, 1};
}

std::string Universe::str() const {
  switch (kind) {
    case Kind::InversionSequences: return "inversion-sequences(" + std::to_string(n) + ")";
    case Kind::Words: return "words(" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
    case Kind::Permutations: return "permutations(" + std::to_string(n) + ")";
  }
  return {};
}

void check_universe_guard(const Universe& u) {
  switch (u.kind) {
    case Universe::Kind::InversionSequences:
    case Universe::Kind::Permutations:
      if (u.n > kEnumerationGuard) {
        throw ResourceLimitError("enumeration guard exceeded for " + u.str() +
                                 " (max n=" + std::to_string(kEnumerationGuard) + ")");
      }
      break;
    case Universe::Kind::Words: {
      long long total = 1;
      for (int i = 0; i < u.n; ++i) {
        total *= u.k;
        if (total > kWordGuard) {
          throw ResourceLimitError("enumeration guard exceeded for " + u.str());
        }
      }
      break;
    }
  }
}

unsigned long long universe_cardinality(const Universe& u) {
  check_universe_guard(u);
  unsigned long long total = 1;
  switch (u.kind) {
    case Universe::Kind::InversionSequences:
    case Universe::Kind::Permutations:
      for (int i = 2; i <= u.n; ++i) total *= static_cast<unsigned long long>(i);
      break;
    case Universe::Kind::Words:
      for (int i = 0; i < u.n; ++i) total *= static_cast<unsigned long long>(u.k);
      break;
  }
  return total;
}

UniverseStream::UniverseStream(const Universe& u) : universe_(u) {
  check_universe_guard(u);
  reset();
}

void UniverseStream::reset() {
  done_ = false;
  fresh_ = true;
  current_.assign(static_cast<size_t>(universe_.n), 0);
  if (universe_.kind == Universe::Kind::Permutations) {
    std::iota(current_.begin(), current_.end(), 1);
  }
}

std::optional<Word> UniverseStream::next() {
  if (done_) return std::nullopt;
  if (fresh_) {
    fresh_ = false;
    return Word(current_);
  }
  switch (universe_.kind) {
    case Universe::Kind::InversionSequences: {
      // odometer with position-dependent bound e_{i+1} <= i
      for (int i = universe_.n - 1; i >= 0; --i) {
        if (current_[static_cast<size_t>(i)] < i) {
          ++current_[static_cast<size_t>(i)];
          std::fill(current_.begin() + i + 1, current_.end(), 0);
          return Word(current_);
        }
      }
      done_ = true;
      return std::nullopt;
    }
    case Universe::Kind::Words: {
      for (int i = universe_.n - 1; i >= 0; --i) {
        if (current_[static_cast<size_t>(i)] < universe_.k - 1) {
          ++current_[static_cast<size_t>(i)];
          std::fill(current_.begin() + i + 1, current_.end(), 0);
          return Word(current_);
        }
      }
      done_ = true;
      return std::nullopt;
    }
    case Universe::Kind::Permutations: {
      if (std::next_permutation(current_.begin(), current_.end())) return Word(current_);
      done_ = true;
      return std::nullopt;
    }
  }
  done_ = true;
  return std::nullopt;
}

void for_each_member(const Universe& u, const std::function<void(const Word&)>& fn) {
  UniverseStream stream(u);
  while (auto w = stream.next()) fn(*w);
}

int thread_budget() {
  const char* env = std::getenv("INVSORT_THREADS");
  if (!env) return 1;
  int value = std::atoi(env);
  return value < 1 ? 1 : value;
}

}  // namespace invsort
