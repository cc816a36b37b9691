#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ptk/automaton.hh"
#include "ptk/monoid.hh"
#include "ptk/subwords.hh"

namespace ptk {

enum class Verdict { yes, no, unknown };

std::string to_string(Verdict v);

/// Two k-equivalent words that drive the minimal DFA to different states:
/// proof that the language is not k-piecewise testable.
struct Certificate {
  std::size_t k = 0;
  Word w1;
  Word w2;
  /// Names of the states reached; empty when not recorded.
  std::string state1;
  std::string state2;
};

/// Clause of a piece expression: every `required` word embeds and no
/// `forbidden` word embeds.
struct PieceClause {
  std::vector<Word> required;
  std::vector<Word> forbidden;
};

/// Union of clauses. The empty expression denotes the empty language.
struct PieceExpression {
  std::vector<PieceClause> clauses;
};

// ---- specialized deciders; all expect a minimal complete DFA ----

/// Single state: Sigma* or the empty language.
bool is_0pt(const Automaton& min_dfa);

/// Which local rule of a specialized decider failed.
struct LocalViolation {
  std::string rule;
  StateId state = 0;
  Letter a = 0;
  Letter b = 0;
};

/// p·a = q implies q·a = q, and p·ab = p·ba, for all p, a, b.
std::optional<LocalViolation> find_1pt_violation(const Automaton& min_dfa);
bool is_1pt(const Automaton& min_dfa);

/// States i·w for words w containing `a`.
std::vector<StateId> reachable_containing(const Automaton& dfa, Letter a);

/// Piecewise testable, and s·ba = s·aba for every letter a, every s reached by
/// a word containing a, and every b in Sigma ∪ {epsilon}.
std::optional<LocalViolation> find_2pt_violation(const Automaton& min_dfa);
bool is_2pt(const Automaton& min_dfa);

/// Checks the three 3-PT identity schemes on the transition monoid. `unknown`
/// when the monoid or an identity check exceeds `budget`.
Verdict is_3pt(const Automaton& min_dfa, std::size_t budget = kDefaultMonoidBudget);

struct OracleResult {
  Verdict verdict = Verdict::unknown;
  std::optional<Certificate> certificate;  // set iff verdict == no
  std::size_t classes = 0;                 // distinct ~k classes visited
};

/// BFS over pairs (~k class, DFA state) from (class of epsilon, initial state).
/// `no` as soon as one class meets two states, with the two access words as
/// the certificate; `yes` once the search is exhausted; `unknown` when more
/// than `budget` classes show up.
OracleResult is_kpt_oracle(const Automaton& min_dfa, std::size_t k,
                           std::size_t budget = kDefaultCanonicalBudget);

/// Recomputes k-equivalence and the reached states. Throws InputError when a
/// word uses a letter outside the alphabet.
bool verify_certificate(const Automaton& min_dfa, const Certificate& c);

/// How a k-PT question was settled.
struct KptDecision {
  Verdict verdict = Verdict::unknown;
  std::string method;
  std::optional<Certificate> certificate;
};

/// Specialized decider for k <= 3 (the oracle when is_3pt is unknown), the
/// oracle above that. Input must be a minimal complete DFA.
KptDecision decide_kpt(const Automaton& min_dfa, std::size_t k,
                       std::size_t budget = kDefaultCanonicalBudget);

struct MinK {
  enum class Kind { exact, interval, not_pt };
  Kind kind = Kind::not_pt;
  std::size_t lo = 0;  // exact: lo == hi
  std::size_t hi = 0;
};

/// Smallest k with L(a) k-PT. Scans k upward from 0; the depth of the minimal
/// DFA is a known upper bound, so the scan stops there. An undecided k yields
/// the interval [k, depth].
MinK min_k(const Automaton& a, std::size_t budget = kDefaultCanonicalBudget);

/// One clause per reachable accepting ~k class: maximal members required,
/// minimal non-members forbidden. Throws ContractError if the language is not
/// k-PT and BudgetExceeded if the oracle runs out of budget.
PieceExpression decompose(const Automaton& min_dfa, std::size_t k,
                          std::size_t budget = kDefaultCanonicalBudget);

bool eval_piece_expression(const PieceExpression& e, std::span<const Letter> w);

/// `(a.b & !c) | (...)`; an empty clause is `TRUE`, an empty union `FALSE`.
std::string render(const PieceExpression& e, const std::vector<std::string>& alphabet);

}  // namespace ptk
