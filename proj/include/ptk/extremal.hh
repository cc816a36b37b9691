#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ptk/automaton.hh"
#include "ptk/subwords.hh"

namespace ptk {

/// Letters a_0 .. a_k, the alphabet of gen_ak(k).
std::vector<std::string> ak_alphabet(std::size_t k);

/// Letters a_1 .. a_n, the alphabet of gen_wkn(k, n).
std::vector<std::string> indexed_alphabet(std::size_t n);

/// NFA with states 0..k, all initial, state 0 accepting; state i loops on
/// every a_j with j < i and goes under a_i to each of 0..i-1. Its language is
/// (k+1)-PT but not k-PT while its minimal DFA has depth 2^(k+1) - 1.
Automaton gen_ak(std::size_t k);

/// w_0 = a_0, w_l = w_{l-1} a_l w_{l-1}; letter i of the result is a_i.
/// Length 2^(k+1) - 1.
Word gen_wk(std::size_t k);

/// W_{k,1} = a_1^k, W_{1,n} = a_1 ... a_n, W_{k,n} = W_{k,n-1} a_n W_{k-1,n}.
/// Letter index i stands for a_{i+1}. Length pkn(k, n).
/// Throws InputError unless k, n >= 1.
Word gen_wkn(std::size_t k, std::size_t n);

/// binom(k+n, k) - 1, the longest word over n letters whose prefixes have
/// pairwise distinct sub_k sets. Throws InputError unless k, n >= 1 and
/// std::range_error on 64-bit overflow.
std::uint64_t pkn(std::size_t k, std::size_t n);

/// Same value through Stirling numbers of the first kind:
/// (1/k!) * sum_{i=1..k} [k+1, i+1] n^i.
std::uint64_t pkn_stirling(std::size_t k, std::size_t n);

/// Unsigned Stirling number of the first kind [n, k] (cycle count).
std::uint64_t stirling_cycle(std::size_t n, std::size_t k);

/// ~k-canonical DFA over a_1..a_n accepting the classes of the even-length
/// prefixes of W_{k,n}. Its minimal DFA has depth exactly pkn(k, n).
Automaton gen_tight_depth_dfa(std::size_t k, std::size_t n,
                              std::size_t budget = kDefaultCanonicalBudget);

/// Subset automaton over the given letters with X·a = X ∪ {a}, initial {},
/// accepting the full set: the words containing every letter.
/// Throws InputError for an empty alphabet or more than 20 letters.
Automaton gen_intersection_nfa(const std::vector<std::string>& alphabet);

}  // namespace ptk
