#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace invsort {

using Letters = std::vector<int>;

/// Thrown when a request exceeds the explicit desk-scale guards.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite sequence of nonnegative integers.
class Word {
 public:
  Word() = default;
  explicit Word(Letters letters);

  /// Parses the canonical comma form ("0,1,2,0") or, when the text is all
  /// digits, the compact form ("0120", letters <= 9 only).
  static Word parse(std::string_view text);

  const Letters& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int operator[](int i) const { return letters_[static_cast<size_t>(i)]; }
  int max_letter() const;      // -1 for the empty word
  int distinct_count() const;  // number of distinct letters

  /// Canonical text form: comma-separated decimal letters.
  std::string str() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  Letters letters_;
};

/// True iff the letters appear in weakly increasing order.
bool is_sorted(const Word& w);

/// A word e_1..e_n with 0 <= e_i <= i-1.
class InversionSequence {
 public:
  InversionSequence() = default;
  explicit InversionSequence(Letters letters) : InversionSequence(Word(std::move(letters))) {}
  explicit InversionSequence(Word w);

  static bool valid(const Word& w);

  const Word& word() const { return word_; }
  int size() const { return word_.size(); }
  std::string str() const { return word_.str(); }

  bool operator==(const InversionSequence&) const = default;

 private:
  Word word_;
};

/// A rearrangement of 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  Word as_word() const { return Word(entries_); }
  std::string str() const { return as_word().str(); }

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

/// e_i = #{j < i : pi_j > pi_i}.
InversionSequence encode(const Permutation& pi);

/// Inverse of encode: pi_i is the (e_i+1)-th largest value not used at
/// positions i+1..n.
Permutation decode(const InversionSequence& e);

struct Universe {
  enum class Kind { InversionSequences, Words, Permutations };

  Kind kind = Kind::InversionSequences;
  int n = 0;
  int k = 1;  // alphabet size, Words only

  static Universe inversion_sequences(int n);
  static Universe words(int n, int k);
  static Universe permutations(int n);

  std::string str() const;
};

/// Lazy lexicographic stream over the members of a universe. Restartable;
/// independent streams never share state.
class UniverseStream {
 public:
  explicit UniverseStream(const Universe& u);

  std::optional<Word> next();
  void reset();

 private:
  Universe universe_;
  Letters current_;
  bool done_ = false;
  bool fresh_ = true;
};

/// Enforced by UniverseStream and the counting routines.
void check_universe_guard(const Universe& u);

void for_each_member(const Universe& u, const std::function<void(const Word&)>& fn);

/// Exact member count (n! or k^n) without enumeration; guards excessive n.
unsigned long long universe_cardinality(const Universe& u);

/// Parallelism cap for counting fan-out, from INVSORT_THREADS (default 1).
int thread_budget();

}  // namespace invsort
