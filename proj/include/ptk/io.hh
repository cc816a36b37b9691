#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "ptk/automaton.hh"

namespace ptk {

/// Reads the line-oriented automaton format:
///
///     # comment
///     alphabet: a b
///     states: 0 1
///     initial: 0
///     accepting: 1
///     0 a 1
///     1 b 1
///
/// `alphabet:` and `states:` must precede the transitions; `initial:` and
/// `accepting:` default to empty. Errors are ParseError with a line number.
Automaton parse_automaton(std::istream& in);
Automaton parse_automaton(std::string_view text);

/// Canonical text: alphabet in declaration order, states in natural order,
/// transitions sorted by (source, letter, target). Parsing the output and
/// serializing again reproduces it byte for byte.
std::string serialize_automaton(const Automaton& a);

/// Letters separated by whitespace or '.'; "-" (or an empty string) is the
/// empty word. Throws InputError on unknown letters.
Word parse_word(std::string_view text, const std::vector<std::string>& alphabet);

/// Letters joined by `separator`; the empty word is "-".
std::string format_word(const Word& w, const std::vector<std::string>& alphabet,
                        std::string_view separator = " ");

}  // namespace ptk
