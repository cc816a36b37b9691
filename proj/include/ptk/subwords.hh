#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ptk/automaton.hh"

namespace ptk {

/// True iff v is a subsequence of w (v can be embedded into w).
bool embeds(std::span<const Letter> v, std::span<const Letter> w);

/// Shortlex numbering of all words of length <= k over an n-letter alphabet.
/// Index 0 is the empty word.
class WordIndex {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  /// Largest number of words an index may hold.
  static constexpr std::size_t kMaxWords = std::size_t{1} << 24;

  /// Shared, cached instance. Throws BudgetExceeded when sum n^i exceeds kMaxWords.
  static std::shared_ptr<const WordIndex> get(std::size_t alphabet_size, std::size_t k);

  WordIndex(std::size_t alphabet_size, std::size_t k);

  std::size_t alphabet_size() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return length_.size(); }

  std::size_t length(std::size_t idx) const { return length_[idx]; }
  /// Index of (word idx)·a, or npos when the word already has length k.
  std::size_t append(std::size_t idx, Letter a) const { return append_[idx * n_ + a]; }
  std::size_t index(std::span<const Letter> w) const;
  Word word(std::size_t idx) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<std::uint8_t> length_;
  std::vector<std::size_t> append_;
  std::vector<std::size_t> offset_;  // first index of each length
};

/// A subword-closed set of words of length <= k: the canonical object of a
/// Simon class, sub_k(w). Stored as a bitset over the shortlex word index, so
/// equality is set equality and iteration is in shortlex order.
class SubwordSet {
 public:
  /// {epsilon}: the class of the empty word.
  static SubwordSet epsilon(std::size_t alphabet_size, std::size_t k);
  /// Sigma^{<=k}.
  static SubwordSet full(std::size_t alphabet_size, std::size_t k);

  std::size_t k() const noexcept { return index_->k(); }
  std::size_t alphabet_size() const noexcept { return index_->alphabet_size(); }
  const WordIndex& index() const noexcept { return *index_; }

  std::size_t size() const;
  bool contains(std::span<const Letter> w) const;
  bool contains_index(std::size_t idx) const { return (bits_[idx / 64] >> (idx % 64)) & 1u; }
  bool is_full() const;
  /// Members in shortlex order.
  std::vector<Word> members() const;
  /// Members of Sigma^{<=k} not in the set, in shortlex order.
  std::vector<Word> complement() const;
  /// Maximal members under the subword order.
  std::vector<Word> maximal_members() const;
  /// Minimal non-members under the subword order.
  std::vector<Word> minimal_non_members() const;

  /// One word per line in shortlex order, letters separated by spaces,
  /// the empty word written as "-".
  std::string serialize(const std::vector<std::string>& letter_names) const;

  const std::vector<std::uint64_t>& bits() const noexcept { return bits_; }

  friend bool operator==(const SubwordSet& a, const SubwordSet& b) {
    return a.index_->alphabet_size() == b.index_->alphabet_size() && a.index_->k() == b.index_->k() &&
           a.bits_ == b.bits_;
  }

  friend SubwordSet class_successor(const SubwordSet& s, Letter a);

 private:
  explicit SubwordSet(std::shared_ptr<const WordIndex> index);
  void insert(std::size_t idx) { bits_[idx / 64] |= std::uint64_t{1} << (idx % 64); }

  std::shared_ptr<const WordIndex> index_;
  std::vector<std::uint64_t> bits_;
};

struct SubwordSetHash {
  std::size_t operator()(const SubwordSet& s) const noexcept;
};

/// S ∪ { u·a : u ∈ S, |u| < k }. Equals sub_k(w·a) whenever S = sub_k(w).
SubwordSet class_successor(const SubwordSet& s, Letter a);

/// sub_k(w) over an alphabet of `alphabet_size` letters.
SubwordSet subwords_up_to_k(std::span<const Letter> w, std::size_t k, std::size_t alphabet_size);

/// w1 ~_k w2. The alphabet is taken to be the letters up to the largest one
/// occurring in either word.
bool k_equivalent(std::span<const Letter> w1, std::span<const Letter> w2, std::size_t k);

/// Deletes every letter whose prefix class does not grow. The result is
/// k-equivalent to w and its prefixes are pairwise non-equivalent.
Word reduce_word(std::span<const Letter> w, std::size_t k);

inline constexpr std::size_t kDefaultCanonicalBudget = 2'000'000;

/// Reachable part of the ~_k-canonical DFA plus the class behind each state.
struct CanonicalDfa {
  Automaton automaton;               // deterministic, complete, no accepting states
  std::vector<SubwordSet> classes;   // classes[q] is the class of state q
};

/// Lazy BFS from the class of the empty word. States are named by their
/// shortlex-least access word, e.g. "[a.b]", with "[-]" for the empty word.
/// Throws BudgetExceeded when more than `budget` classes are reachable and
/// InputError for an empty alphabet.
CanonicalDfa build_canonical_dfa(const std::vector<std::string>& alphabet, std::size_t k,
                                 std::size_t budget = kDefaultCanonicalBudget);

Automaton canonical_automaton(const std::vector<std::string>& alphabet, std::size_t k,
                              std::size_t budget = kDefaultCanonicalBudget);

}  // namespace ptk
