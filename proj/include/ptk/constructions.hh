#pragma once

#include <cstddef>
#include <vector>

#include "ptk/automaton.hh"

namespace ptk {

/// Subset construction from the initial set. The result is deterministic and
/// complete (the empty subset, when reachable, is the sink); its states are
/// the reachable subsets, named `{q1,q2,...}` with members in natural order.
Automaton determinize(const Automaton& a);

/// Moore partition refinement. Drops unreachable states first; the result is
/// the minimal complete DFA, states listed in BFS order from the initial state
/// and named after the first state of their block met in that order.
/// Throws ContractError unless `a` is deterministic and complete.
Automaton minimize(const Automaton& a);

/// minimize(determinize(a)).
Automaton minimal_dfa(const Automaton& a);

/// Routes every missing transition to a fresh non-accepting sink with
/// self-loops under all letters. A complete input is returned unchanged.
Automaton complete_with_sink(const Automaton& a);

/// True iff reachability is a partial order, i.e. every strongly connected
/// component is a single state (self-loops allowed).
bool is_partially_ordered(const Automaton& a);

/// Longest path, in transitions, of the transition graph with self-loops
/// removed. Throws CyclicError when that graph is not acyclic.
std::size_t depth(const Automaton& a);

/// Letters under which `p` has a self-loop, in alphabet order.
std::vector<Letter> self_loop_alphabet(const Automaton& a, StateId p);

/// States reachable from the initial states.
std::vector<StateId> reachable_states(const Automaton& a);

}  // namespace ptk
