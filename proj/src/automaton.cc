#include "ptk/automaton.hh"

#include <algorithm>

#include "ptk/errors.hh"

namespace ptk {

Automaton::Automaton(std::vector<std::string> alphabet) : letters_(std::move(alphabet)) {
  for (Letter a = 0; a < letters_.size(); ++a) {
    if (!letter_index_.emplace(letters_[a], a).second) {
      throw InputError("duplicate letter '" + letters_[a] + "'");
    }
  }
}

std::optional<Letter> Automaton::find_letter(std::string_view name) const {
  auto it = letter_index_.find(name);
  if (it == letter_index_.end()) return std::nullopt;
  return it->second;
}

Letter Automaton::letter(std::string_view name) const {
  if (auto a = find_letter(name)) return *a;
  throw InputError("unknown letter '" + std::string(name) + "'");
}

StateId Automaton::add_state(std::string name) {
  const auto id = static_cast<StateId>(state_names_.size());
  if (!state_index_.emplace(name, id).second) {
    throw InputError("duplicate state '" + name + "'");
  }
  state_names_.push_back(std::move(name));
  delta_.resize(delta_.size() + letters_.size());
  initial_.push_back(0);
  accepting_.push_back(0);
  return id;
}

std::optional<StateId> Automaton::find_state(std::string_view name) const {
  auto it = state_index_.find(name);
  if (it == state_index_.end()) return std::nullopt;
  return it->second;
}

StateId Automaton::state(std::string_view name) const {
  if (auto q = find_state(name)) return *q;
  throw InputError("unknown state '" + std::string(name) + "'");
}

void Automaton::check_state(StateId q) const {
  if (q >= state_names_.size()) throw InputError("state index out of range");
}

void Automaton::add_transition(StateId from, Letter a, StateId to) {
  check_state(from);
  check_state(to);
  if (a >= letters_.size()) throw InputError("letter index out of range");
  auto& succ = delta_[static_cast<std::size_t>(from) * letters_.size() + a];
  auto it = std::lower_bound(succ.begin(), succ.end(), to);
  if (it == succ.end() || *it != to) succ.insert(it, to);
}

std::size_t Automaton::num_transitions() const {
  std::size_t n = 0;
  for (const auto& succ : delta_) n += succ.size();
  return n;
}

void Automaton::set_initial(StateId q, bool on) {
  check_state(q);
  initial_[q] = on ? 1 : 0;
}

void Automaton::set_accepting(StateId q, bool on) {
  check_state(q);
  accepting_[q] = on ? 1 : 0;
}

std::vector<StateId> Automaton::initials() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < initial_.size(); ++q)
    if (initial_[q]) out.push_back(q);
  return out;
}

std::vector<StateId> Automaton::accepting_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < accepting_.size(); ++q)
    if (accepting_[q]) out.push_back(q);
  return out;
}

bool Automaton::is_deterministic() const {
  if (std::count(initial_.begin(), initial_.end(), 1) != 1) return false;
  return std::all_of(delta_.begin(), delta_.end(), [](const auto& s) { return s.size() <= 1; });
}

bool Automaton::is_complete() const {
  return std::all_of(delta_.begin(), delta_.end(), [](const auto& s) { return !s.empty(); });
}

std::vector<StateId> run_from(const Automaton& a, std::vector<StateId> current,
                              std::span<const Letter> w) {
  std::vector<char> mark(a.num_states(), 0);
  for (Letter x : w) {
    if (x >= a.num_letters()) throw InputError("letter index out of range");
    std::vector<StateId> next;
    for (StateId q : current) {
      for (StateId r : a.successors(q, x)) {
        if (!mark[r]) {
          mark[r] = 1;
          next.push_back(r);
        }
      }
    }
    for (StateId r : next) mark[r] = 0;
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
  return current;
}

std::vector<StateId> run(const Automaton& a, std::span<const Letter> w) {
  return run_from(a, a.initials(), w);
}

bool accepts(const Automaton& a, std::span<const Letter> w) {
  const auto reached = run(a, w);
  return std::any_of(reached.begin(), reached.end(),
                     [&](StateId q) { return a.is_accepting(q); });
}

DfaTable dfa_table(const Automaton& a) {
  if (!a.is_deterministic() || !a.is_complete()) {
    throw ContractError("operation requires a deterministic complete automaton");
  }
  DfaTable t;
  t.num_states = a.num_states();
  t.num_letters = a.num_letters();
  t.initial = a.initials().front();
  t.next.resize(t.num_states * t.num_letters);
  t.accepting.resize(t.num_states);
  for (StateId q = 0; q < t.num_states; ++q) {
    t.accepting[q] = a.is_accepting(q) ? 1 : 0;
    for (Letter x = 0; x < t.num_letters; ++x) t.next[q * t.num_letters + x] = a.successors(q, x)[0];
  }
  return t;
}

bool natural_less(std::string_view lhs, std::string_view rhs) {
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  std::size_t i = 0, j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (is_digit(lhs[i]) && is_digit(rhs[j])) {
      std::size_t ei = i, ej = j;
      while (ei < lhs.size() && is_digit(lhs[ei])) ++ei;
      while (ej < rhs.size() && is_digit(rhs[ej])) ++ej;
      // strip leading zeros, then longer run is larger
      std::size_t zi = i, zj = j;
      while (zi + 1 < ei && lhs[zi] == '0') ++zi;
      while (zj + 1 < ej && rhs[zj] == '0') ++zj;
      if (ei - zi != ej - zj) return ei - zi < ej - zj;
      const auto a = lhs.substr(zi, ei - zi), b = rhs.substr(zj, ej - zj);
      if (a != b) return a < b;
      if (ei - i != ej - j) return ei - i < ej - j;
      i = ei;
      j = ej;
    } else {
      if (lhs[i] != rhs[j]) return lhs[i] < rhs[j];
      ++i;
      ++j;
    }
  }
  return lhs.size() - i < rhs.size() - j;
}

}  // namespace ptk
