#include "ptk/monoid.hh"

#include <algorithm>
#include <cstdint>
#include <set>

#include "ptk/errors.hh"

namespace ptk {

std::size_t StateMapHash::operator()(const StateMap& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (StateId q : m) {
    h ^= q;
    h *= 1099511628211ull;
  }
  return h;
}

TransitionMonoid transition_monoid(const Automaton& dfa, std::size_t budget) {
  const DfaTable t = dfa_table(dfa);
  TransitionMonoid m;
  m.num_states_ = t.num_states;

  StateMap id(t.num_states);
  for (StateId q = 0; q < t.num_states; ++q) id[q] = q;
  m.index_.emplace(id, 0);
  m.elements_.push_back(std::move(id));
  m.access_.emplace_back();

  for (std::size_t e = 0; e < m.elements_.size(); ++e) {
    for (Letter a = 0; a < t.num_letters; ++a) {
      StateMap next(t.num_states);
      for (StateId q = 0; q < t.num_states; ++q) next[q] = t.step(m.elements_[e][q], a);
      auto [it, fresh] = m.index_.emplace(next, m.elements_.size());
      if (fresh) {
        if (m.elements_.size() >= budget) {
          throw BudgetExceeded("transition monoid too large", budget, m.elements_.size() + 1);
        }
        Word w = m.access_[e];
        w.push_back(a);
        m.elements_.push_back(std::move(next));
        m.access_.push_back(std::move(w));
      }
      m.cayley_.push_back(it->second);
    }
  }
  m.generators_.resize(t.num_letters);
  for (Letter a = 0; a < t.num_letters; ++a) m.generators_[a] = m.cayley_[a];
  return m;
}

std::size_t TransitionMonoid::compose(std::size_t e, std::size_t f) const {
  const auto& fm = elements_.at(f);
  StateMap out(num_states_);
  for (StateId q = 0; q < num_states_; ++q) out[q] = fm[elements_.at(e)[q]];
  return index_.at(out);
}

std::size_t TransitionMonoid::element_of(const Word& w) const {
  std::size_t e = identity();
  for (Letter a : w) e = times_letter(e, a);
  return e;
}

std::optional<std::size_t> TransitionMonoid::find(const StateMap& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool is_aperiodic(const TransitionMonoid& m) {
  for (std::size_t x = 0; x < m.size(); ++x) {
    // Powers of x eventually cycle; aperiodic iff the cycle has length one.
    std::vector<std::size_t> powers{x};
    std::set<std::size_t> seen{x};
    for (;;) {
      const std::size_t next = m.compose(powers.back(), x);
      if (next == powers.back()) break;
      if (!seen.insert(next).second) return false;
      powers.push_back(next);
    }
  }
  return true;
}

std::vector<Identity> kpt_identities(int level) {
  switch (level) {
    case 1:
      return {{"x", "xx"}, {"xy", "yx"}};
    case 2:
      return {{"xyzx", "xyxzx"}, {"xyxy", "yxyx"}};
    case 3:
      return {{"xyxyxy", "yxyxyx"}, {"xzyxvxwy", "xzxyxvxwy"}, {"ywxvxyzx", "ywxvxyxzx"}};
    default:
      throw InputError("identity schemes are available for levels 1, 2 and 3 only");
  }
}

std::size_t evaluate(const TransitionMonoid& m, const std::string& side,
                     const std::map<char, std::size_t>& assignment) {
  std::size_t e = m.identity();
  for (char v : side) e = m.compose(e, assignment.at(v));
  return e;
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t budget) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && total > budget / base) {
      throw BudgetExceeded("identity check needs too many assignments", budget, budget + 1);
    }
    total *= base;
  }
  if (total > budget) {
    throw BudgetExceeded("identity check needs too many assignments", budget, total);
  }
  return total;
}

void validate(const Identity& eq) {
  if (eq.lhs.empty() || eq.rhs.empty()) throw InputError("identity sides must be nonempty");
  for (char c : eq.lhs + eq.rhs) {
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))) {
      throw InputError(std::string("identity variable must be a letter, got '") + c + "'");
    }
  }
}

std::vector<char> variables_of(const Identity& eq) {
  std::set<char> vars(eq.lhs.begin(), eq.lhs.end());
  vars.insert(eq.rhs.begin(), eq.rhs.end());
  return {vars.begin(), vars.end()};
}

// Odometer over assignments of `vars` to elements; `visit` returns false to stop.
template <class Visit>
void for_each_assignment(const std::vector<char>& vars, std::size_t size, Visit visit) {
  std::map<char, std::size_t> current;
  for (char v : vars) current[v] = 0;
  for (;;) {
    if (!visit(current)) return;
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++current[vars[i]] < size) break;
      current[vars[i]] = 0;
    }
    if (i == vars.size()) return;
  }
}

bool sides_agree(const TransitionMonoid& m, const Identity& eq,
                 const std::map<char, std::size_t>& assignment) {
  std::vector<const StateMap*> l, r;
  for (char v : eq.lhs) l.push_back(&m.element(assignment.at(v)));
  for (char v : eq.rhs) r.push_back(&m.element(assignment.at(v)));
  for (StateId q = 0; q < m.num_states(); ++q) {
    StateId a = q, b = q;
    for (const auto* f : l) a = (*f)[a];
    for (const auto* f : r) b = (*f)[b];
    if (a != b) return false;
  }
  return true;
}

IdentityResult check_exhaustive(const TransitionMonoid& m, const Identity& eq, std::size_t budget) {
  const auto vars = variables_of(eq);
  checked_power(m.size(), vars.size(), budget);
  IdentityResult result;
  for_each_assignment(vars, m.size(), [&](const std::map<char, std::size_t>& a) {
    ++result.assignments;
    if (sides_agree(m, eq, a)) return true;
    result.holds = false;
    result.counterexample = a;
    return false;
  });
  return result;
}

// Shape of an identity split as  prefix · mid · suffix  on both sides.
struct Factoring {
  std::string prefix, suffix, mid_lhs, mid_rhs;
  std::set<char> free_vars;   // quantified by reachability
  std::vector<char> bound;    // enumerated
};

Factoring factor(const Identity& eq) {
  const auto& l = eq.lhs;
  const auto& r = eq.rhs;
  const std::size_t shortest = std::min(l.size(), r.size());
  std::size_t p = 0;
  while (p < shortest && l[p] == r[p]) ++p;
  std::size_t s = 0;
  while (p + s < shortest && l[l.size() - 1 - s] == r[r.size() - 1 - s]) ++s;

  Factoring f;
  f.prefix = l.substr(0, p);
  f.suffix = l.substr(l.size() - s);
  f.mid_lhs = l.substr(p, l.size() - p - s);
  f.mid_rhs = r.substr(p, r.size() - p - s);

  for (char v : variables_of(eq)) {
    const auto in_l = std::count(l.begin(), l.end(), v);
    const auto in_r = std::count(r.begin(), r.end(), v);
    const bool once_each = in_l == 1 && in_r == 1;
    const bool in_prefix = std::count(f.prefix.begin(), f.prefix.end(), v) == 1;
    const bool in_suffix = std::count(f.suffix.begin(), f.suffix.end(), v) == 1;
    // once per side and that occurrence lies in the shared part
    if (once_each && (in_prefix || in_suffix)) {
      f.free_vars.insert(v);
    } else {
      f.bound.push_back(v);
    }
  }
  return f;
}

// One propagation layer: for each node, the node of the previous layer it
// came from (-1 if absent) and, for free tokens, the word that was read.
struct Layer {
  std::vector<std::int64_t> pred;
  std::vector<Word> word;
};

// Propagates a set of nodes through a token sequence. A bound token applies a
// fixed element; a free token closes the set under all letters. `step(node,
// element)` and `letter_step(node, letter)` define the node space.
template <class Step, class LetterStep>
std::vector<Layer> propagate(std::size_t num_nodes, const std::vector<char>& start,
                             const std::string& tokens, const std::set<char>& free_vars,
                             const std::map<char, std::size_t>& assignment,
                             std::size_t num_letters, Step step, LetterStep letter_step) {
  std::vector<Layer> layers;
  Layer first;
  first.pred.assign(num_nodes, -1);
  first.word.resize(num_nodes);
  for (std::size_t x = 0; x < num_nodes; ++x)
    if (start[x]) first.pred[x] = static_cast<std::int64_t>(x);
  layers.push_back(std::move(first));

  for (char v : tokens) {
    const Layer& prev = layers.back();
    Layer next;
    next.pred.assign(num_nodes, -1);
    next.word.resize(num_nodes);
    if (!free_vars.count(v)) {
      const std::size_t e = assignment.at(v);
      for (std::size_t x = 0; x < num_nodes; ++x) {
        if (prev.pred[x] < 0) continue;
        const std::size_t y = step(x, e);
        if (next.pred[y] < 0) next.pred[y] = static_cast<std::int64_t>(x);
      }
    } else {
      std::vector<std::size_t> queue;
      for (std::size_t x = 0; x < num_nodes; ++x) {
        if (prev.pred[x] < 0) continue;
        next.pred[x] = static_cast<std::int64_t>(x);
        queue.push_back(x);
      }
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t x = queue[head];
        for (Letter a = 0; a < num_letters; ++a) {
          const std::size_t y = letter_step(x, a);
          if (next.pred[y] >= 0) continue;
          next.pred[y] = next.pred[x];
          next.word[y] = next.word[x];
          next.word[y].push_back(a);
          queue.push_back(y);
        }
      }
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

IdentityResult check_factored(const TransitionMonoid& m, const Identity& eq, std::size_t budget) {
  const Factoring f = factor(eq);
  checked_power(m.size(), f.bound.size(), budget);
  const std::size_t nq = m.num_states();
  const std::size_t nl = m.num_letters();

  auto state_step = [&](std::size_t q, std::size_t e) -> std::size_t { return m.element(e)[q]; };
  auto state_letter = [&](std::size_t q, Letter a) -> std::size_t {
    return m.element(m.generator(a))[q];
  };
  auto pair_step = [&](std::size_t x, std::size_t e) -> std::size_t {
    const auto& g = m.element(e);
    return g[x / nq] * nq + g[x % nq];
  };
  auto pair_letter = [&](std::size_t x, Letter a) -> std::size_t {
    const auto& g = m.element(m.generator(a));
    return g[x / nq] * nq + g[x % nq];
  };
  auto apply_side = [&](std::size_t q, const std::string& side,
                        const std::map<char, std::size_t>& a) {
    for (char v : side) q = m.element(a.at(v))[q];
    return q;
  };

  IdentityResult result;
  for_each_assignment(f.bound, m.size(), [&](const std::map<char, std::size_t>& assignment) {
    ++result.assignments;
    const auto pre = propagate(nq, std::vector<char>(nq, 1), f.prefix, f.free_vars, assignment,
                               nl, state_step, state_letter);
    std::vector<char> start(nq * nq, 0);
    std::vector<std::size_t> origin(nq * nq, 0);
    for (std::size_t p = 0; p < nq; ++p) {
      if (pre.back().pred[p] < 0) continue;
      const std::size_t x = apply_side(p, f.mid_lhs, assignment) * nq + apply_side(p, f.mid_rhs, assignment);
      if (!start[x]) {
        start[x] = 1;
        origin[x] = p;
      }
    }
    const auto post = propagate(nq * nq, start, f.suffix, f.free_vars, assignment, nl, pair_step,
                                pair_letter);
    std::int64_t bad = -1;
    for (std::size_t x = 0; x < nq * nq && bad < 0; ++x)
      if (post.back().pred[x] >= 0 && x / nq != x % nq) bad = static_cast<std::int64_t>(x);
    if (bad < 0) return true;

    // Walk the layers back to recover words for the free variables.
    result.holds = false;
    result.counterexample = assignment;
    std::size_t node = static_cast<std::size_t>(bad);
    for (std::size_t i = f.suffix.size(); i > 0; --i) {
      const char v = f.suffix[i - 1];
      if (f.free_vars.count(v)) result.counterexample[v] = m.element_of(post[i].word[node]);
      node = static_cast<std::size_t>(post[i].pred[node]);
    }
    node = origin[node];
    for (std::size_t i = f.prefix.size(); i > 0; --i) {
      const char v = f.prefix[i - 1];
      if (f.free_vars.count(v)) result.counterexample[v] = m.element_of(pre[i].word[node]);
      node = static_cast<std::size_t>(pre[i].pred[node]);
    }
    return false;
  });
  return result;
}

}  // namespace

IdentityResult check_identity(const TransitionMonoid& m, const Identity& eq, std::size_t budget,
                              IdentityStrategy strategy) {
  validate(eq);
  if (strategy == IdentityStrategy::automatic) {
    strategy = factor(eq).free_vars.empty() ? IdentityStrategy::exhaustive : IdentityStrategy::factored;
  }
  return strategy == IdentityStrategy::exhaustive ? check_exhaustive(m, eq, budget)
                                                  : check_factored(m, eq, budget);
}

}  // namespace ptk
