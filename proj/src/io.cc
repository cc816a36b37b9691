#include "ptk/io.hh"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "ptk/errors.hh"

namespace ptk {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    out += ' ';
    out += s;
  }
  return out;
}

}  // namespace

Automaton parse_automaton(std::istream& in) {
  std::map<std::string, std::pair<std::size_t, std::vector<std::string>>> headers;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> transitions;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokens(line);
    if (toks.empty()) continue;
    const auto colon = line.find(':');
    if (colon != std::string::npos) {
      const auto key_tokens = tokens(std::string_view(line).substr(0, colon));
      if (key_tokens.size() != 1) throw ParseError(lineno, "malformed header");
      const std::string& key = key_tokens.front();
      if (key != "alphabet" && key != "states" && key != "initial" && key != "accepting") {
        throw ParseError(lineno, "unknown header '" + key + "'");
      }
      if (!transitions.empty()) throw ParseError(lineno, "header '" + key + "' after transitions");
      if (headers.count(key)) throw ParseError(lineno, "duplicate header '" + key + "'");
      headers[key] = {lineno, tokens(std::string_view(line).substr(colon + 1))};
      continue;
    }
    if (toks.size() != 3) throw ParseError(lineno, "expected 'source letter target'");
    transitions.emplace_back(lineno, std::move(toks));
  }

  for (const char* required : {"alphabet", "states"}) {
    if (!headers.count(required)) throw ParseError(lineno + 1, std::string("missing '") + required + ":' header");
  }
  const auto& [alpha_line, letters] = headers["alphabet"];
  Automaton a;
  try {
    a = Automaton(letters);
  } catch (const InputError& e) {
    throw ParseError(alpha_line, e.what());
  }
  const auto& [states_line, states] = headers["states"];
  for (const auto& s : states) {
    if (a.find_state(s)) throw ParseError(states_line, "duplicate state '" + s + "'");
    a.add_state(s);
  }
  auto lookup_state = [&](std::size_t ln, const std::string& s) {
    if (auto q = a.find_state(s)) return *q;
    throw ParseError(ln, "undeclared state '" + s + "'");
  };
  for (const char* key : {"initial", "accepting"}) {
    auto it = headers.find(key);
    if (it == headers.end()) continue;
    for (const auto& s : it->second.second) {
      const StateId q = lookup_state(it->second.first, s);
      if (std::string(key) == "initial") a.set_initial(q);
      else a.set_accepting(q);
    }
  }
  for (const auto& [ln, t] : transitions) {
    const StateId from = lookup_state(ln, t[0]);
    const auto letter = a.find_letter(t[1]);
    if (!letter) throw ParseError(ln, "undeclared letter '" + t[1] + "'");
    a.add_transition(from, *letter, lookup_state(ln, t[2]));
  }
  return a;
}

Automaton parse_automaton(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_automaton(in);
}

std::string serialize_automaton(const Automaton& a) {
  std::vector<StateId> order(a.num_states());
  for (StateId q = 0; q < a.num_states(); ++q) order[q] = q;
  std::sort(order.begin(), order.end(),
            [&](StateId x, StateId y) { return natural_less(a.state_name(x), a.state_name(y)); });

  std::vector<std::string> names, initial, accepting;
  for (StateId q : order) {
    names.push_back(a.state_name(q));
    if (a.is_initial(q)) initial.push_back(a.state_name(q));
    if (a.is_accepting(q)) accepting.push_back(a.state_name(q));
  }
  std::string out = "alphabet:" + join(a.alphabet()) + "\n";
  out += "states:" + join(names) + "\n";
  out += "initial:" + join(initial) + "\n";
  out += "accepting:" + join(accepting) + "\n";

  std::vector<std::size_t> rank(a.num_states());
  for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  for (StateId q : order) {
    for (Letter x = 0; x < a.num_letters(); ++x) {
      std::vector<StateId> succ(a.successors(q, x).begin(), a.successors(q, x).end());
      std::sort(succ.begin(), succ.end(), [&](StateId u, StateId v) { return rank[u] < rank[v]; });
      for (StateId r : succ) out += a.state_name(q) + " " + a.letter_name(x) + " " + a.state_name(r) + "\n";
    }
  }
  return out;
}

Word parse_word(std::string_view text, const std::vector<std::string>& alphabet) {
  std::string normalized(text);
  std::replace(normalized.begin(), normalized.end(), '.', ' ');
  Word w;
  const auto toks = tokens(normalized);
  if (toks.size() == 1 && toks[0] == "-") return w;
  for (const auto& t : toks) {
    auto it = std::find(alphabet.begin(), alphabet.end(), t);
    if (it == alphabet.end()) throw InputError("unknown letter '" + t + "'");
    w.push_back(static_cast<Letter>(it - alphabet.begin()));
  }
  return w;
}

std::string format_word(const Word& w, const std::vector<std::string>& alphabet,
                        std::string_view separator) {
  if (w.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += separator;
    out += alphabet.at(w[i]);
  }
  return out;
}

}  // namespace ptk
