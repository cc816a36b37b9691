#include "ptk/kpt.hh"

#include <algorithm>
#include <unordered_map>

#include "ptk/constructions.hh"
#include "ptk/errors.hh"
#include "ptk/pt.hh"

namespace ptk {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

bool is_0pt(const Automaton& min_dfa) { return min_dfa.num_states() == 1; }

std::optional<LocalViolation> find_1pt_violation(const Automaton& min_dfa) {
  const DfaTable t = dfa_table(min_dfa);
  for (StateId p = 0; p < t.num_states; ++p) {
    for (Letter a = 0; a < t.num_letters; ++a) {
      const StateId q = t.step(p, a);
      if (t.step(q, a) != q) return LocalViolation{"pa=q implies qa=q", p, a, a};
    }
  }
  for (StateId p = 0; p < t.num_states; ++p)
    for (Letter a = 0; a < t.num_letters; ++a)
      for (Letter b = a + 1; b < t.num_letters; ++b)
        if (t.step(t.step(p, a), b) != t.step(t.step(p, b), a)) return LocalViolation{"pab=pba", p, a, b};
  return std::nullopt;
}

bool is_1pt(const Automaton& min_dfa) { return !find_1pt_violation(min_dfa); }

std::vector<StateId> reachable_containing(const Automaton& dfa, Letter a) {
  const DfaTable t = dfa_table(dfa);
  if (a >= t.num_letters) throw InputError("letter index out of range");
  // node = 2 * state + (seen a ? 1 : 0)
  std::vector<char> seen(2 * t.num_states, 0);
  std::vector<std::size_t> queue{2 * static_cast<std::size_t>(t.initial)};
  seen[queue[0]] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto q = static_cast<StateId>(queue[head] / 2);
    const bool flag = queue[head] % 2;
    for (Letter x = 0; x < t.num_letters; ++x) {
      const std::size_t next = 2 * static_cast<std::size_t>(t.step(q, x)) + ((flag || x == a) ? 1 : 0);
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  std::vector<StateId> out;
  for (StateId q = 0; q < t.num_states; ++q)
    if (seen[2 * q + 1]) out.push_back(q);
  return out;
}

std::optional<LocalViolation> find_2pt_violation(const Automaton& min_dfa) {
  if (!is_partially_ordered(min_dfa)) return LocalViolation{"partially ordered", 0, 0, 0};
  if (auto v = find_confluence_violation(min_dfa)) return LocalViolation{"locally confluent", v->state, v->a, v->b};
  const DfaTable t = dfa_table(min_dfa);
  for (Letter a = 0; a < t.num_letters; ++a) {
    for (StateId s : reachable_containing(min_dfa, a)) {
      const StateId sa = t.step(s, a);
      if (sa != t.step(sa, a)) return LocalViolation{"sa=saa", s, a, a};
      for (Letter b = 0; b < t.num_letters; ++b) {
        if (t.step(t.step(s, b), a) != t.step(t.step(sa, b), a)) return LocalViolation{"sba=saba", s, a, b};
      }
    }
  }
  return std::nullopt;
}

bool is_2pt(const Automaton& min_dfa) { return !find_2pt_violation(min_dfa); }

Verdict is_3pt(const Automaton& min_dfa, std::size_t budget) {
  try {
    const TransitionMonoid m = transition_monoid(min_dfa, budget);
    for (const Identity& eq : kpt_identities(3)) {
      if (!check_identity(m, eq, budget).holds) return Verdict::no;
    }
    return Verdict::yes;
  } catch (const BudgetExceeded&) {
    return Verdict::unknown;
  }
}

namespace {

// Product BFS state: one DFA state per class as long as no conflict is found.
struct Exploration {
  std::vector<SubwordSet> classes;
  std::vector<StateId> state;
  std::vector<std::size_t> parent;  // parent class, npos for the root
  std::vector<Letter> via;
  std::optional<Certificate> conflict;
  bool exhausted = false;

  Word access(std::size_t c) const {
    Word w;
    for (; parent[c] != static_cast<std::size_t>(-1); c = parent[c]) w.push_back(via[c]);
    std::reverse(w.begin(), w.end());
    return w;
  }
};

Exploration explore(const Automaton& min_dfa, std::size_t k, std::size_t budget) {
  const DfaTable t = dfa_table(min_dfa);
  Exploration ex;
  std::unordered_map<SubwordSet, std::size_t, SubwordSetHash> ids;
  auto root = SubwordSet::epsilon(t.num_letters, k);
  ids.emplace(root, 0);
  ex.classes.push_back(std::move(root));
  ex.state.push_back(t.initial);
  ex.parent.push_back(static_cast<std::size_t>(-1));
  ex.via.push_back(0);

  for (std::size_t c = 0; c < ex.classes.size(); ++c) {
    for (Letter a = 0; a < t.num_letters; ++a) {
      SubwordSet next = class_successor(ex.classes[c], a);
      const StateId q = t.step(ex.state[c], a);
      auto it = ids.find(next);
      if (it == ids.end()) {
        if (ex.classes.size() >= budget) return ex;
        ids.emplace(next, ex.classes.size());
        ex.classes.push_back(std::move(next));
        ex.state.push_back(q);
        ex.parent.push_back(c);
        ex.via.push_back(a);
      } else if (ex.state[it->second] != q) {
        Certificate cert;
        cert.k = k;
        cert.w1 = ex.access(it->second);
        cert.w2 = ex.access(c);
        cert.w2.push_back(a);
        cert.state1 = min_dfa.state_name(ex.state[it->second]);
        cert.state2 = min_dfa.state_name(q);
        ex.conflict = std::move(cert);
        return ex;
      }
    }
  }
  ex.exhausted = true;
  return ex;
}

}  // namespace

OracleResult is_kpt_oracle(const Automaton& min_dfa, std::size_t k, std::size_t budget) {
  Exploration ex = explore(min_dfa, k, budget);
  OracleResult r;
  r.classes = ex.classes.size();
  if (ex.conflict) {
    r.verdict = Verdict::no;
    r.certificate = std::move(ex.conflict);
  } else {
    r.verdict = ex.exhausted ? Verdict::yes : Verdict::unknown;
  }
  return r;
}

bool verify_certificate(const Automaton& min_dfa, const Certificate& c) {
  const DfaTable t = dfa_table(min_dfa);
  for (const Word* w : {&c.w1, &c.w2})
    for (Letter a : *w)
      if (a >= t.num_letters) throw InputError("certificate word uses a letter outside the alphabet");
  const StateId s1 = t.run(t.initial, c.w1);
  const StateId s2 = t.run(t.initial, c.w2);
  if (s1 == s2) return false;
  if (!c.state1.empty() && c.state1 != min_dfa.state_name(s1)) return false;
  if (!c.state2.empty() && c.state2 != min_dfa.state_name(s2)) return false;
  return subwords_up_to_k(c.w1, c.k, t.num_letters) == subwords_up_to_k(c.w2, c.k, t.num_letters);
}

KptDecision decide_kpt(const Automaton& min_dfa, std::size_t k, std::size_t budget) {
  KptDecision d;
  auto from_bool = [](bool b) { return b ? Verdict::yes : Verdict::no; };
  switch (k) {
    case 0:
      d.verdict = from_bool(is_0pt(min_dfa));
      d.method = "single-state";
      return d;
    case 1:
      d.verdict = from_bool(is_1pt(min_dfa));
      d.method = "local-1";
      return d;
    case 2:
      d.verdict = from_bool(is_2pt(min_dfa));
      d.method = "local-2";
      return d;
    case 3:
      d.verdict = is_3pt(min_dfa, std::min(budget, kDefaultMonoidBudget));
      d.method = "identities-3";
      if (d.verdict != Verdict::unknown) return d;
      break;
    default:
      break;
  }
  OracleResult r = is_kpt_oracle(min_dfa, k, budget);
  d.verdict = r.verdict;
  d.method = "oracle";
  d.certificate = std::move(r.certificate);
  return d;
}

MinK min_k(const Automaton& a, std::size_t budget) {
  const Automaton m = minimal_dfa(a);
  MinK out;
  if (!is_pt_min_dfa(m)) return out;
  const std::size_t hi = depth(m);
  for (std::size_t k = 0; k < hi; ++k) {
    const Verdict v = decide_kpt(m, k, budget).verdict;
    if (v == Verdict::yes) return MinK{MinK::Kind::exact, k, k};
    if (v == Verdict::unknown) return MinK{MinK::Kind::interval, k, hi};
  }
  return MinK{MinK::Kind::exact, hi, hi};
}

PieceExpression decompose(const Automaton& min_dfa, std::size_t k, std::size_t budget) {
  Exploration ex = explore(min_dfa, k, budget);
  if (ex.conflict) throw ContractError("language is not " + std::to_string(k) + "-piecewise testable");
  if (!ex.exhausted) throw BudgetExceeded("too many ~k classes", budget, ex.classes.size() + 1);
  PieceExpression e;
  for (std::size_t c = 0; c < ex.classes.size(); ++c) {
    if (!min_dfa.is_accepting(ex.state[c])) continue;
    PieceClause clause;
    for (Word& w : ex.classes[c].maximal_members())
      if (!w.empty()) clause.required.push_back(std::move(w));
    clause.forbidden = ex.classes[c].minimal_non_members();
    e.clauses.push_back(std::move(clause));
  }
  return e;
}

bool eval_piece_expression(const PieceExpression& e, std::span<const Letter> w) {
  return std::any_of(e.clauses.begin(), e.clauses.end(), [&](const PieceClause& c) {
    return std::all_of(c.required.begin(), c.required.end(), [&](const Word& v) { return embeds(v, w); }) &&
           std::none_of(c.forbidden.begin(), c.forbidden.end(), [&](const Word& v) { return embeds(v, w); });
  });
}

std::string render(const PieceExpression& e, const std::vector<std::string>& alphabet) {
  if (e.clauses.empty()) return "FALSE";
  auto spell = [&](const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += '.';
      s += alphabet.at(w[i]);
    }
    return s;
  };
  std::string out;
  for (std::size_t i = 0; i < e.clauses.size(); ++i) {
    if (i) out += " | ";
    const auto& c = e.clauses[i];
    if (c.required.empty() && c.forbidden.empty()) {
      out += "TRUE";
      continue;
    }
    std::vector<std::string> literals;
    for (const Word& w : c.required) literals.push_back(spell(w));
    for (const Word& w : c.forbidden) literals.push_back("!" + spell(w));
    out += '(';
    for (std::size_t j = 0; j < literals.size(); ++j) {
      if (j) out += " & ";
      out += literals[j];
    }
    out += ')';
  }
  return out;
}

}  // namespace ptk
