#pragma once

#include <optional>

#include "ptk/automaton.hh"

namespace ptk {

/// State q and letters a, b such that q·a and q·b have no common successor
/// under words over {a, b}.
struct ConfluenceViolation {
  StateId state;
  Letter a;
  Letter b;
};

/// Pair-BFS from (q·a, q·b) for every q and every pair a < b.
/// Throws ContractError unless `dfa` is deterministic and complete.
std::optional<ConfluenceViolation> find_confluence_violation(const Automaton& dfa);
bool is_locally_confluent(const Automaton& dfa);

/// State p together with a second maximal state in p's component of the graph
/// restricted to the self-loop letters of p.
struct UmsViolation {
  StateId state;
  StateId other_maximal;
};

/// Unique maximal state check. Components are weakly connected components of
/// G(A, Σ(p)); a state is maximal in a component when it has no edge to a
/// different state of that component. Throws ContractError unless `a` is
/// partially ordered.
std::optional<UmsViolation> find_ums_violation(const Automaton& a);
bool satisfies_ums(const Automaton& a);

/// Piecewise testability of the language of a minimal complete DFA: partially
/// ordered and locally confluent.
bool is_pt_min_dfa(const Automaton& min_dfa);

enum class NfaCertificate { yes, inconclusive };

/// Sound shortcut without determinization: `yes` when `a` is complete,
/// partially ordered and satisfies UMS.
NfaCertificate certify_pt_nfa(const Automaton& a);

/// Piecewise testability of L(a) for any automaton: certify_pt_nfa first, then
/// the minimal DFA.
bool is_pt(const Automaton& a);

}  // namespace ptk
