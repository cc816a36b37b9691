#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptk {

using StateId = std::uint32_t;
using Letter = std::uint32_t;

/// A word is a sequence of letter indices into some alphabet.
using Word = std::vector<Letter>;

/// Finite automaton with a nondeterministic transition relation, a set of
/// initial states and a set of accepting states. DFAs are the special case
/// with one initial state and at most one successor per (state, letter); that
/// property is computed, never stored.
///
/// States and letters carry opaque string names. Internally both are dense
/// indices in insertion order.
class Automaton {
 public:
  Automaton() = default;
  explicit Automaton(std::vector<std::string> alphabet);

  std::size_t num_letters() const noexcept { return letters_.size(); }
  const std::vector<std::string>& alphabet() const noexcept { return letters_; }
  const std::string& letter_name(Letter a) const { return letters_.at(a); }
  std::optional<Letter> find_letter(std::string_view name) const;
  /// Throws InputError for unknown names.
  Letter letter(std::string_view name) const;

  std::size_t num_states() const noexcept { return state_names_.size(); }
  /// Throws InputError if the name is already taken.
  StateId add_state(std::string name);
  const std::string& state_name(StateId q) const { return state_names_.at(q); }
  std::optional<StateId> find_state(std::string_view name) const;
  /// Throws InputError for unknown names.
  StateId state(std::string_view name) const;

  /// Duplicate transitions collapse.
  void add_transition(StateId from, Letter a, StateId to);
  /// Sorted successor set of q under a.
  std::span<const StateId> successors(StateId q, Letter a) const {
    return delta_[static_cast<std::size_t>(q) * letters_.size() + a];
  }
  std::size_t num_transitions() const;

  void set_initial(StateId q, bool on = true);
  void set_accepting(StateId q, bool on = true);
  bool is_initial(StateId q) const { return initial_.at(q) != 0; }
  bool is_accepting(StateId q) const { return accepting_.at(q) != 0; }
  std::vector<StateId> initials() const;
  std::vector<StateId> accepting_states() const;

  /// |initials| = 1 and every (state, letter) has at most one successor.
  bool is_deterministic() const;
  /// Every (state, letter) has at least one successor.
  bool is_complete() const;

 private:
  void check_state(StateId q) const;

  std::vector<std::string> letters_;
  std::map<std::string, Letter, std::less<>> letter_index_;
  std::vector<std::string> state_names_;
  std::map<std::string, StateId, std::less<>> state_index_;
  std::vector<std::vector<StateId>> delta_;  // [q * |alphabet| + a]
  std::vector<char> initial_;
  std::vector<char> accepting_;
};

/// The set I·w, sorted. Throws InputError on letters outside the alphabet.
std::vector<StateId> run(const Automaton& a, std::span<const Letter> w);

/// Same as run, starting from an arbitrary set of states.
std::vector<StateId> run_from(const Automaton& a, std::vector<StateId> from,
                              std::span<const Letter> w);

bool accepts(const Automaton& a, std::span<const Letter> w);

/// Dense transition table of a deterministic complete automaton. All the
/// DFA-side algorithms work on this view.
struct DfaTable {
  std::size_t num_states = 0;
  std::size_t num_letters = 0;
  StateId initial = 0;
  std::vector<StateId> next;  // [q * num_letters + a]
  std::vector<char> accepting;

  StateId step(StateId q, Letter a) const { return next[q * num_letters + a]; }
  StateId run(StateId q, std::span<const Letter> w) const {
    for (Letter a : w) q = step(q, a);
    return q;
  }
};

/// Throws ContractError unless `a` is deterministic and complete.
DfaTable dfa_table(const Automaton& a);

/// Name ordering that compares embedded digit runs numerically ("2" < "10").
/// Used wherever state names are listed canonically.
bool natural_less(std::string_view lhs, std::string_view rhs);

}  // namespace ptk
