#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ptk/automaton.hh"

namespace ptk {

/// A total map states -> states. Composition reads left to right:
/// (f then g)(q) = g(f(q)), matching the right action q·uv = (q·u)·v.
using StateMap = std::vector<StateId>;

struct StateMapHash {
  std::size_t operator()(const StateMap& m) const noexcept;
};

inline constexpr std::size_t kDefaultMonoidBudget = 1'000'000;

/// Transition monoid of a complete DFA: all maps induced by words, closed under
/// composition. Element 0 is the identity (the map of the empty word).
class TransitionMonoid {
 public:
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t num_states() const noexcept { return num_states_; }
  std::size_t num_letters() const noexcept { return generators_.size(); }
  std::size_t identity() const noexcept { return 0; }

  const StateMap& element(std::size_t e) const { return elements_.at(e); }
  std::size_t generator(Letter a) const { return generators_.at(a); }
  /// Shortlex-least word inducing element e.
  const Word& access_word(std::size_t e) const { return access_.at(e); }

  /// Element of "e then a".
  std::size_t times_letter(std::size_t e, Letter a) const { return cayley_[e * num_letters() + a]; }
  /// Element of "e then f".
  std::size_t compose(std::size_t e, std::size_t f) const;
  std::size_t element_of(const Word& w) const;
  std::optional<std::size_t> find(const StateMap& m) const;

  friend TransitionMonoid transition_monoid(const Automaton& dfa, std::size_t budget);

 private:
  std::size_t num_states_ = 0;
  std::vector<StateMap> elements_;
  std::vector<Word> access_;
  std::vector<std::size_t> generators_;
  std::vector<std::size_t> cayley_;  // right Cayley graph [e * |alphabet| + a]
  std::unordered_map<StateMap, std::size_t, StateMapHash> index_;
};

/// BFS closure of the letter maps of a deterministic complete automaton.
/// Throws ContractError on other input and BudgetExceeded once the element
/// count passes `budget`.
TransitionMonoid transition_monoid(const Automaton& dfa, std::size_t budget = kDefaultMonoidBudget);

/// True iff every element satisfies x^n = x^(n+1) for some n, i.e. the monoid
/// contains no nontrivial group.
bool is_aperiodic(const TransitionMonoid& m);

/// An equation between two words over single-character variables, e.g.
/// {"xy", "yx"}.
struct Identity {
  std::string lhs;
  std::string rhs;
};

enum class IdentityStrategy {
  /// Enumerate every assignment of monoid elements to every variable.
  exhaustive,
  /// Enumerate only variables that are not confined to a shared prefix or
  /// suffix of both sides; the confined ones are quantified by reachability
  /// over states (prefix) or state pairs (suffix).
  factored,
  /// factored when it removes at least one variable, otherwise exhaustive.
  automatic,
};

struct IdentityResult {
  bool holds = true;
  /// A violating assignment, variable -> element index, when !holds.
  std::map<char, std::size_t> counterexample;
  /// Number of assignments actually enumerated.
  std::size_t assignments = 0;
};

/// Decides whether `eq` holds in `m` for every assignment of elements to
/// variables. Throws BudgetExceeded if the number of assignments the chosen
/// strategy must enumerate exceeds `budget`, and InputError for an empty side
/// or a non-letter variable.
IdentityResult check_identity(const TransitionMonoid& m, const Identity& eq,
                              std::size_t budget = kDefaultMonoidBudget,
                              IdentityStrategy strategy = IdentityStrategy::automatic);

/// Value of one side of an identity under an assignment.
std::size_t evaluate(const TransitionMonoid& m, const std::string& side,
                     const std::map<char, std::size_t>& assignment);

/// Identity schemes characterizing 1-, 2- and 3-piecewise testable languages.
std::vector<Identity> kpt_identities(int level);

}  // namespace ptk
