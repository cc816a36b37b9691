#include "ptk/constructions.hh"

#include <algorithm>
#include <deque>
#include <map>

#include "ptk/errors.hh"

namespace ptk {

namespace {

std::string subset_name(const Automaton& a, const std::vector<StateId>& members) {
  std::vector<const std::string*> names;
  names.reserve(members.size());
  for (StateId q : members) names.push_back(&a.state_name(q));
  std::sort(names.begin(), names.end(),
            [](const std::string* x, const std::string* y) { return natural_less(*x, *y); });
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ',';
    out += *names[i];
  }
  out += '}';
  return out;
}

// Transition graph without self-loops, as adjacency lists of distinct targets.
std::vector<std::vector<StateId>> proper_edges(const Automaton& a) {
  std::vector<std::vector<StateId>> adj(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (Letter x = 0; x < a.num_letters(); ++x)
      for (StateId r : a.successors(q, x))
        if (r != q) adj[q].push_back(r);
    std::sort(adj[q].begin(), adj[q].end());
    adj[q].erase(std::unique(adj[q].begin(), adj[q].end()), adj[q].end());
  }
  return adj;
}

// Kahn order of the self-loop-free graph; shorter than |Q| iff there is a cycle.
std::vector<StateId> topological_order(const std::vector<std::vector<StateId>>& adj) {
  std::vector<std::size_t> indegree(adj.size(), 0);
  for (const auto& out : adj)
    for (StateId r : out) ++indegree[r];
  std::vector<StateId> order;
  order.reserve(adj.size());
  for (StateId q = 0; q < adj.size(); ++q)
    if (indegree[q] == 0) order.push_back(q);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (StateId r : adj[order[head]])
      if (--indegree[r] == 0) order.push_back(r);
  }
  return order;
}

}  // namespace

Automaton determinize(const Automaton& a) {
  Automaton d(a.alphabet());
  std::map<std::vector<StateId>, StateId> index;
  std::vector<std::vector<StateId>> subsets;

  auto intern = [&](std::vector<StateId> s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    const StateId id = d.add_state(subset_name(a, s));
    index.emplace(s, id);
    subsets.push_back(std::move(s));
    return id;
  };

  const StateId start = intern(a.initials());
  d.set_initial(start);
  for (StateId id = 0; id < subsets.size(); ++id) {
    for (Letter x = 0; x < a.num_letters(); ++x) {
      auto target = run_from(a, subsets[id], std::span<const Letter>(&x, 1));
      d.add_transition(id, x, intern(std::move(target)));
    }
  }
  for (StateId id = 0; id < subsets.size(); ++id) {
    const auto& s = subsets[id];
    if (std::any_of(s.begin(), s.end(), [&](StateId q) { return a.is_accepting(q); }))
      d.set_accepting(id);
  }
  return d;
}

Automaton minimize(const Automaton& a) {
  const DfaTable t = dfa_table(a);
  const std::size_t n = t.num_letters;

  std::vector<StateId> order{t.initial};
  std::vector<char> seen(t.num_states, 0);
  seen[t.initial] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Letter x = 0; x < n; ++x) {
      const StateId r = t.step(order[head], x);
      if (!seen[r]) {
        seen[r] = 1;
        order.push_back(r);
      }
    }
  }

  // Moore refinement over reachable states; block ids follow first appearance
  // in BFS order, which makes the final numbering canonical.
  std::vector<std::size_t> block(t.num_states, 0);
  std::size_t num_blocks = 0;
  {
    std::map<char, std::size_t> ids;
    for (StateId q : order) {
      auto [it, fresh] = ids.emplace(t.accepting[q], ids.size());
      block[q] = it->second;
    }
    num_blocks = ids.size();
  }
  for (;;) {
    std::map<std::vector<std::size_t>, std::size_t> ids;
    std::vector<std::size_t> refined(t.num_states, 0);
    std::vector<std::size_t> signature(n + 1);
    for (StateId q : order) {
      signature[0] = block[q];
      for (Letter x = 0; x < n; ++x) signature[x + 1] = block[t.step(q, x)];
      auto [it, fresh] = ids.emplace(signature, ids.size());
      refined[q] = it->second;
    }
    block = std::move(refined);
    if (ids.size() == num_blocks) break;
    num_blocks = ids.size();
  }

  Automaton m(a.alphabet());
  std::vector<StateId> representative(num_blocks, 0);
  std::vector<char> named(num_blocks, 0);
  for (StateId q : order) {
    if (!named[block[q]]) {
      named[block[q]] = 1;
      representative[block[q]] = q;
      m.add_state(a.state_name(q));
    }
  }
  for (std::size_t b = 0; b < num_blocks; ++b) {
    const StateId q = representative[b];
    if (t.accepting[q]) m.set_accepting(static_cast<StateId>(b));
    for (Letter x = 0; x < n; ++x)
      m.add_transition(static_cast<StateId>(b), x, static_cast<StateId>(block[t.step(q, x)]));
  }
  m.set_initial(static_cast<StateId>(block[t.initial]));
  return m;
}

Automaton minimal_dfa(const Automaton& a) { return minimize(determinize(a)); }

Automaton complete_with_sink(const Automaton& a) {
  if (a.is_complete()) return a;
  Automaton c(a.alphabet());
  for (StateId q = 0; q < a.num_states(); ++q) {
    c.add_state(a.state_name(q));
    c.set_initial(q, a.is_initial(q));
    c.set_accepting(q, a.is_accepting(q));
  }
  std::string sink_name = "sink";
  while (c.find_state(sink_name)) sink_name += '\'';
  const StateId sink = c.add_state(sink_name);
  for (StateId q = 0; q < a.num_states(); ++q) {
    for (Letter x = 0; x < a.num_letters(); ++x) {
      const auto succ = a.successors(q, x);
      if (succ.empty()) c.add_transition(q, x, sink);
      for (StateId r : succ) c.add_transition(q, x, r);
    }
  }
  for (Letter x = 0; x < a.num_letters(); ++x) c.add_transition(sink, x, sink);
  return c;
}

bool is_partially_ordered(const Automaton& a) {
  return topological_order(proper_edges(a)).size() == a.num_states();
}

std::size_t depth(const Automaton& a) {
  const auto adj = proper_edges(a);
  const auto order = topological_order(adj);
  if (order.size() != a.num_states()) {
    throw CyclicError("depth is only defined here for partially ordered automata");
  }
  std::vector<std::size_t> longest(a.num_states(), 0);
  std::size_t best = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (StateId r : adj[*it]) longest[*it] = std::max(longest[*it], longest[r] + 1);
    best = std::max(best, longest[*it]);
  }
  return best;
}

std::vector<Letter> self_loop_alphabet(const Automaton& a, StateId p) {
  if (p >= a.num_states()) throw InputError("unknown state");
  std::vector<Letter> out;
  for (Letter x = 0; x < a.num_letters(); ++x) {
    const auto succ = a.successors(p, x);
    if (std::binary_search(succ.begin(), succ.end(), p)) out.push_back(x);
  }
  return out;
}

std::vector<StateId> reachable_states(const Automaton& a) {
  std::vector<char> seen(a.num_states(), 0);
  std::deque<StateId> queue;
  for (StateId q : a.initials()) {
    seen[q] = 1;
    queue.push_back(q);
  }
  while (!queue.empty()) {
    const StateId q = queue.front();
    queue.pop_front();
    for (Letter x = 0; x < a.num_letters(); ++x)
      for (StateId r : a.successors(q, x))
        if (!seen[r]) {
          seen[r] = 1;
          queue.push_back(r);
        }
  }
  std::vector<StateId> out;
  for (StateId q = 0; q < a.num_states(); ++q)
    if (seen[q]) out.push_back(q);
  return out;
}

}  // namespace ptk
