#include "ptk/extremal.hh"

#include <numeric>
#include <stdexcept>

#include "ptk/errors.hh"

namespace ptk {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::range_error("value does not fit in 64 bits");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::range_error("value does not fit in 64 bits");
  return out;
}

void require_positive(std::size_t k, std::size_t n) {
  if (k < 1 || n < 1) throw InputError("k and n must be at least 1");
}

}  // namespace

std::vector<std::string> ak_alphabet(std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i <= k; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

std::vector<std::string> indexed_alphabet(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

Automaton gen_ak(std::size_t k) {
  Automaton a(ak_alphabet(k));
  for (std::size_t i = 0; i <= k; ++i) {
    const StateId q = a.add_state(std::to_string(i));
    a.set_initial(q);
  }
  a.set_accepting(0);
  for (StateId i = 0; i <= k; ++i) {
    for (Letter j = 0; j < i; ++j) a.add_transition(i, j, i);
    for (StateId lower = 0; lower < i; ++lower) a.add_transition(i, i, lower);
  }
  return a;
}

Word gen_wk(std::size_t k) {
  Word w{0};
  for (Letter l = 1; l <= k; ++l) {
    Word next = w;
    next.push_back(l);
    next.insert(next.end(), w.begin(), w.end());
    w = std::move(next);
  }
  return w;
}

Word gen_wkn(std::size_t k, std::size_t n) {
  require_positive(k, n);
  // table[i][j] = W_{i,j}, filled row by row
  std::vector<std::vector<Word>> table(k + 1, std::vector<Word>(n + 1));
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (j == 1) {
        table[i][j] = Word(i, 0);
      } else if (i == 1) {
        for (Letter a = 0; a < j; ++a) table[i][j].push_back(a);
      } else {
        Word w = table[i][j - 1];
        w.push_back(static_cast<Letter>(j - 1));
        w.insert(w.end(), table[i - 1][j].begin(), table[i - 1][j].end());
        table[i][j] = std::move(w);
      }
    }
  }
  return table[k][n];
}

std::uint64_t pkn(std::size_t k, std::size_t n) {
  require_positive(k, n);
  // binom(k+n, k) built as a running product; each partial value is a binomial.
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t g = std::gcd(c, i);
    c = checked_mul(c / g, (n + i) / (i / g));
  }
  return c - 1;
}

std::uint64_t stirling_cycle(std::size_t n, std::size_t k) {
  // [n+1, k] = n [n, k] + [n, k-1]
  std::vector<std::uint64_t> row{1};  // row for n = 0
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<std::uint64_t> next(m + 2, 0);
    for (std::size_t j = 0; j <= m + 1; ++j) {
      const std::uint64_t keep = j <= m ? checked_mul(m, row[j]) : 0;
      const std::uint64_t fresh = j >= 1 ? row[j - 1] : 0;
      next[j] = checked_add(keep, fresh);
    }
    row = std::move(next);
  }
  return k < row.size() ? row[k] : 0;
}

std::uint64_t pkn_stirling(std::size_t k, std::size_t n) {
  require_positive(k, n);
  std::uint64_t sum = 0;
  std::uint64_t power = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    power = checked_mul(power, n);
    sum = checked_add(sum, checked_mul(stirling_cycle(k + 1, i + 1), power));
  }
  std::uint64_t factorial = 1;
  for (std::uint64_t i = 2; i <= k; ++i) factorial = checked_mul(factorial, i);
  return sum / factorial;
}

Automaton gen_tight_depth_dfa(std::size_t k, std::size_t n, std::size_t budget) {
  const Word w = gen_wkn(k, n);
  CanonicalDfa canonical = build_canonical_dfa(indexed_alphabet(n), k, budget);
  Automaton& a = canonical.automaton;
  const DfaTable t = dfa_table(a);
  StateId q = t.initial;
  a.set_accepting(q);
  for (std::size_t i = 0; i < w.size(); ++i) {
    q = t.step(q, w[i]);
    if ((i + 1) % 2 == 0) a.set_accepting(q);
  }
  return std::move(canonical.automaton);
}

Automaton gen_intersection_nfa(const std::vector<std::string>& alphabet) {
  const std::size_t n = alphabet.size();
  if (n == 0) throw InputError("alphabet must be nonempty");
  if (n > 20) throw InputError("alphabet too large for the subset automaton (max 20 letters)");
  Automaton a(alphabet);
  const std::size_t count = std::size_t{1} << n;
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::string name = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      if (!first) name += ',';
      name += alphabet[i];
      first = false;
    }
    a.add_state(name + "}");
  }
  for (std::size_t mask = 0; mask < count; ++mask)
    for (Letter x = 0; x < n; ++x)
      a.add_transition(static_cast<StateId>(mask), x, static_cast<StateId>(mask | (std::size_t{1} << x)));
  a.set_initial(0);
  a.set_accepting(static_cast<StateId>(count - 1));
  return a;
}

}  // namespace ptk
