#include "ptk/pt.hh"

#include <algorithm>
#include <vector>

#include "ptk/constructions.hh"
#include "ptk/errors.hh"

namespace ptk {

namespace {

bool pair_meets(const DfaTable& t, StateId p, StateId q, Letter a, Letter b) {
  const std::size_t n = t.num_states;
  std::vector<char> seen(n * n, 0);
  std::vector<std::size_t> queue{p * n + q};
  seen[p * n + q] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto x = static_cast<StateId>(queue[head] / n);
    const auto y = static_cast<StateId>(queue[head] % n);
    if (x == y) return true;
    for (Letter c : {a, b}) {
      const std::size_t next = t.step(x, c) * n + t.step(y, c);
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  return false;
}

}  // namespace

std::optional<ConfluenceViolation> find_confluence_violation(const Automaton& dfa) {
  const DfaTable t = dfa_table(dfa);
  for (StateId q = 0; q < t.num_states; ++q)
    for (Letter a = 0; a < t.num_letters; ++a)
      for (Letter b = a + 1; b < t.num_letters; ++b)
        if (!pair_meets(t, t.step(q, a), t.step(q, b), a, b)) return ConfluenceViolation{q, a, b};
  return std::nullopt;
}

bool is_locally_confluent(const Automaton& dfa) { return !find_confluence_violation(dfa); }

std::optional<UmsViolation> find_ums_violation(const Automaton& a) {
  if (!is_partially_ordered(a)) {
    throw ContractError("UMS is defined for partially ordered automata only");
  }
  const std::size_t n = a.num_states();
  for (StateId p = 0; p < n; ++p) {
    const auto gamma = self_loop_alphabet(a, p);

    // Undirected adjacency of G(A, Σ(p)); directed "has a proper out-edge".
    std::vector<std::vector<StateId>> undirected(n);
    std::vector<char> has_out(n, 0);
    for (StateId q = 0; q < n; ++q) {
      for (Letter x : gamma) {
        for (StateId r : a.successors(q, x)) {
          if (r == q) continue;
          undirected[q].push_back(r);
          undirected[r].push_back(q);
          has_out[q] = 1;
        }
      }
    }
    std::vector<char> in_component(n, 0);
    std::vector<StateId> component{p};
    in_component[p] = 1;
    for (std::size_t head = 0; head < component.size(); ++head)
      for (StateId r : undirected[component[head]])
        if (!in_component[r]) {
          in_component[r] = 1;
          component.push_back(r);
        }
    // Edges never leave a weak component, so "no proper out-edge" is maximality.
    if (has_out[p]) {
      for (StateId q : component)
        if (!has_out[q]) return UmsViolation{p, q};
    }
    for (StateId q : component)
      if (q != p && !has_out[q]) return UmsViolation{p, q};
  }
  return std::nullopt;
}

bool satisfies_ums(const Automaton& a) { return !find_ums_violation(a); }

bool is_pt_min_dfa(const Automaton& min_dfa) {
  return is_partially_ordered(min_dfa) && is_locally_confluent(min_dfa);
}

NfaCertificate certify_pt_nfa(const Automaton& a) {
  if (!a.is_complete() || !is_partially_ordered(a)) return NfaCertificate::inconclusive;
  return satisfies_ums(a) ? NfaCertificate::yes : NfaCertificate::inconclusive;
}

bool is_pt(const Automaton& a) {
  if (certify_pt_nfa(a) == NfaCertificate::yes) return true;
  return is_pt_min_dfa(minimal_dfa(a));
}

}  // namespace ptk
