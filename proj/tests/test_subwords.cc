#include <catch_amalgamated.hpp>

#include "oracles.hh"
#include "ptk/constructions.hh"
#include "ptk/errors.hh"
#include "ptk/extremal.hh"
#include "ptk/subwords.hh"

using namespace ptk;
using namespace ptk::test;

namespace {

std::set<Word> as_set(const SubwordSet& s) {
  const auto m = s.members();
  return {m.begin(), m.end()};
}

Word drop_last(Word w) {
  w.pop_back();
  return w;
}

}  // namespace

TEST_CASE("embeds examples") {
  CHECK(embeds(Word{}, Word{0, 1, 1}));
  CHECK(embeds(Word{}, Word{}));
  CHECK_FALSE(embeds(Word{0, 1}, Word{1, 0}));
  CHECK(embeds(Word{0, 1}, Word{0, 0, 1}));
  CHECK(embeds(Word{0, 1}, gen_wk(2)));
}

TEST_CASE("property: embeds agrees with the dynamic program") {
  Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    const Word v = random_word(rng, 4, 3);
    const Word w = random_word(rng, 8, 3);
    CHECK(embeds(v, w) == brute_embeds(v, w));
  }
}

TEST_CASE("subwords_up_to_k examples") {
  CHECK(as_set(subwords_up_to_k(Word{}, 3, 2)) == std::set<Word>{Word{}});
  const SubwordSet s = subwords_up_to_k(gen_wkn(2, 2), 2, 2);
  CHECK(s.is_full());
  CHECK(s == SubwordSet::full(2, 2));
  CHECK(as_set(s) == brute_subwords(gen_wkn(2, 2), 2));
  for (std::size_t m = 0; m <= 6; ++m)
    for (std::size_t k = 0; k <= 4; ++k) CHECK(subwords_up_to_k(Word(m, 0), k, 1).size() == std::min(m, k) + 1);
}

TEST_CASE("k_equivalent examples") {
  Rng rng(2);
  for (int i = 0; i < 20; ++i) CHECK(k_equivalent(random_word(rng, 6, 3), random_word(rng, 6, 3), 0));
  for (std::size_t k = 0; k <= 5; ++k) CHECK(k_equivalent(drop_last(gen_wk(k)), gen_wk(k), k));
  CHECK(k_equivalent(Word{0}, Word{0, 0}, 1));
  CHECK_FALSE(k_equivalent(Word{0}, Word{0, 0}, 2));
}

TEST_CASE("class_successor examples") {
  const SubwordSet eps = SubwordSet::epsilon(2, 2);
  CHECK(as_set(class_successor(eps, 0)) == std::set<Word>{Word{}, Word{0}});
  const SubwordSet ab = subwords_up_to_k(Word{0, 1}, 2, 2);
  const SubwordSet abb = class_successor(ab, 1);
  CHECK(abb == subwords_up_to_k(Word{0, 1, 1}, 2, 2));
  std::set<Word> expected = as_set(ab);
  expected.insert(Word{1, 1});
  CHECK(as_set(abb) == expected);
  const SubwordSet full = SubwordSet::full(3, 2);
  for (Letter a = 0; a < 3; ++a) CHECK(class_successor(full, a) == full);
  CHECK_THROWS_AS(class_successor(eps, 2), InputError);
}

TEST_CASE("SubwordSet invariants and order-theoretic helpers") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 8, 3);
    const SubwordSet s = subwords_up_to_k(w, 3, 3);
    const auto members = as_set(s);
    CHECK(members.count(Word{}));
    for (const Word& u : members) {
      CHECK(u.size() <= 3);
      for (std::size_t j = 0; j < u.size(); ++j) {
        Word v = u;
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
        CHECK(members.count(v));  // subword-closed
      }
    }
    for (const Word& u : s.maximal_members()) {
      CHECK(members.count(u));
      for (const Word& v : members) CHECK((v == u || !embeds(u, v)));
    }
    for (const Word& u : s.minimal_non_members()) {
      CHECK_FALSE(members.count(u));
      for (const Word& v : s.complement()) CHECK((v == u || !embeds(v, u)));
    }
  }
}

TEST_CASE("serialize spells the empty word as '-'") {
  const SubwordSet s = subwords_up_to_k(Word{1}, 1, 2);
  CHECK(s.serialize({"a", "b"}) == "-\nb\n");
}

TEST_CASE("canonical automaton examples") {
  const Automaton one = canonical_automaton({"a"}, 1);
  CHECK(one.num_states() == 2);
  CHECK(depth(canonical_automaton({"a1", "a2"}, 2)) == 5);
  CHECK(depth(canonical_automaton({"a1", "a2", "a3"}, 3)) == 19);
  CHECK_THROWS_AS(canonical_automaton({}, 2), InputError);
  CHECK_THROWS_AS(canonical_automaton({"a", "b"}, 3, 5), BudgetExceeded);
}

TEST_CASE("property: canonical automaton is partially ordered and monotone") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 0; k <= 3; ++k) {
      const CanonicalDfa c = build_canonical_dfa(indexed_alphabet(n), k);
      CHECK(is_partially_ordered(c.automaton));
      CHECK(c.automaton.is_deterministic());
      CHECK(c.automaton.is_complete());
      for (StateId q = 0; q < c.automaton.num_states(); ++q) {
        const auto from = as_set(c.classes[q]);
        for (Letter a = 0; a < n; ++a) {
          const auto to = as_set(c.classes[c.automaton.successors(q, a).front()]);
          CHECK(std::includes(to.begin(), to.end(), from.begin(), from.end()));
        }
      }
    }
  }
}

TEST_CASE("reduce_word examples") {
  CHECK(reduce_word(Word{0, 0, 0, 0}, 2) == Word{0, 0});
  CHECK(reduce_word(gen_wkn(2, 2), 2) == gen_wkn(2, 2));
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(rng, 30, 2);
    const Word r = reduce_word(w, 2);
    if (subwords_up_to_k(r, 2, 2).is_full()) CHECK(r.size() <= pkn(2, 2));
  }
}

TEST_CASE("property: k_equivalent agrees with subsequence enumeration") {
  Rng rng(5);
  std::uniform_int_distribution<std::size_t> letters(1, 3), kk(0, 3);
  for (int i = 0; i < 500; ++i) {
    const std::size_t n = letters(rng);
    const std::size_t k = kk(rng);
    Word w1 = random_word(rng, 10, n);
    // Half of the pairs are built to be close so that both outcomes occur.
    Word w2 = i % 2 ? random_word(rng, 10, n) : w1;
    if (i % 2 == 0 && !w2.empty()) w2.insert(w2.begin() + static_cast<std::ptrdiff_t>(w2.size() / 2), w2.back());
    CHECK(k_equivalent(w1, w2, k) == brute_k_equivalent(w1, w2, k));
    CHECK(as_set(subwords_up_to_k(w1, k, n)) == brute_subwords(w1, k));
  }
}

TEST_CASE("property: class_successor tracks appending a letter") {
  Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(rng, 10, 3);
    const Letter a = static_cast<Letter>(i % 3);
    const std::size_t k = 1 + i % 3;
    Word wa = w;
    wa.push_back(a);
    CHECK(class_successor(subwords_up_to_k(w, k, 3), a) == subwords_up_to_k(wa, k, 3));
  }
}

TEST_CASE("property: ~k is a congruence") {
  Rng rng(7);
  int pairs = 0;
  for (int i = 0; i < 2000 && pairs < 200; ++i) {
    const std::size_t k = 1 + i % 3;
    const Word u1 = random_word(rng, 12, 2);
    const Word u2 = reduce_word(u1, k);
    if (u1 == u2) continue;
    ++pairs;
    REQUIRE(brute_k_equivalent(u1, u2, k));
    const Word x = random_word(rng, 5, 2);
    Word u1x = u1, u2x = u2, xu1 = x, xu2 = x;
    u1x.insert(u1x.end(), x.begin(), x.end());
    u2x.insert(u2x.end(), x.begin(), x.end());
    xu1.insert(xu1.end(), u1.begin(), u1.end());
    xu2.insert(xu2.end(), u2.begin(), u2.end());
    CHECK(subwords_up_to_k(u1x, k, 2) == subwords_up_to_k(u2x, k, 2));
    CHECK(subwords_up_to_k(xu1, k, 2) == subwords_up_to_k(xu2, k, 2));
  }
  CHECK(pairs >= 100);
}

TEST_CASE("property: reduce_word is equivalent with strictly growing prefix classes") {
  Rng rng(8);
  for (int i = 0; i < 300; ++i) {
    const std::size_t k = 1 + i % 3;
    const Word w = random_word(rng, 14, 3);
    const Word r = reduce_word(w, k);
    CHECK(brute_k_equivalent(w, r, k));
    for (std::size_t j = 0; j < r.size(); ++j) {
      const Word shorter(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(j));
      const Word longer(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(j + 1));
      CHECK(brute_subwords(shorter, k) != brute_subwords(longer, k));
    }
  }
}
