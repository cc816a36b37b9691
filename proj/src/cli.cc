#include "ptk/cli.hh"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <stdexcept>

#include "ptk/constructions.hh"
#include "ptk/errors.hh"
#include "ptk/extremal.hh"
#include "ptk/io.hh"
#include "ptk/kpt.hh"
#include "ptk/monoid.hh"
#include "ptk/pt.hh"
#include "ptk/subwords.hh"

namespace ptk {

namespace {

using Json = nlohmann::ordered_json;

// Ordered key/value report, printed as `key: value` lines or one JSON object.
class Report {
 public:
  explicit Report(bool json) : json_(json) {}

  void add(const std::string& key, Json value) { data_[key] = std::move(value); }

  // Text mode prints `text` alone instead of the key/value lines.
  void set_bare(std::string text) { bare_ = std::move(text); }

  void write(std::ostream& out) const {
    if (json_) {
      out << data_.dump() << '\n';
      return;
    }
    if (!bare_.empty()) {
      out << bare_ << '\n';
      return;
    }
    for (const auto& [key, value] : data_.items()) out << key << ": " << text(value) << '\n';
  }

 private:
  static std::string text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_null()) return "-";
    return v.dump();
  }

  bool json_;
  Json data_ = Json::object();
  std::string bare_;
};

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return kExitYes;
    case Verdict::no:
      return kExitNo;
    case Verdict::unknown:
      return kExitUnknown;
  }
  return kExitUnknown;
}

void add_certificate(Report& r, const Certificate& c, const std::vector<std::string>& alphabet) {
  r.add("k", c.k);
  r.add("w1", format_word(c.w1, alphabet));
  r.add("w2", format_word(c.w2, alphabet));
  if (!c.state1.empty()) r.add("state1", c.state1);
  if (!c.state2.empty()) r.add("state2", c.state2);
}

// Prints an automaton file, or {"automaton": text} in JSON mode.
void emit_automaton(const Automaton& a, bool json, std::ostream& out) {
  if (json) {
    Json j;
    j["states"] = a.num_states();
    j["automaton"] = serialize_automaton(a);
    out << j.dump() << '\n';
  } else {
    out << serialize_automaton(a);
  }
}

void emit_word(const Word& w, const std::vector<std::string>& alphabet, bool json, std::ostream& out) {
  if (json) {
    Json j;
    j["length"] = w.size();
    j["word"] = format_word(w, alphabet);
    out << j.dump() << '\n';
  } else {
    out << format_word(w, alphabet) << '\n';
  }
}

struct Options {
  bool json = false;
  std::string file;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t budget = kDefaultCanonicalBudget;
  std::size_t monoid_budget = kDefaultMonoidBudget;
  int identities = 0;
  std::string strategy = "auto";
  std::string w1;
  std::string w2;
  bool stirling = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Piecewise testability toolkit", "ptk"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Structured JSON report");

  auto load = [&]() -> Automaton {
    if (o.file == "-") return parse_automaton(in);
    std::ifstream f(o.file);
    if (!f) throw InputError("cannot open '" + o.file + "'");
    try {
      return parse_automaton(f);
    } catch (const ParseError& e) {
      throw InputError(o.file + ": " + e.what());
    }
  };

  std::function<int()> action;
  auto file_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Automaton file, '-' for stdin")->required();
    return sub;
  };
  auto add_k = [&](CLI::App* sub) { sub->add_option("--k", o.k, "Level k")->required(); };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Maximum number of ~k classes explored")->capture_default_str();
  };

  // ---- analysis ----
  file_command("info", "State and letter counts, determinism, depth")->callback([&] {
    action = [&] {
      const Automaton a = load();
      Report r(o.json);
      r.add("states", a.num_states());
      r.add("letters", a.num_letters());
      r.add("transitions", a.num_transitions());
      r.add("deterministic", a.is_deterministic());
      r.add("complete", a.is_complete());
      r.add("partially-ordered", is_partially_ordered(a));
      try {
        r.add("depth", depth(a));
      } catch (const CyclicError&) {
        r.add("depth", "cyclic");
      }
      r.write(out);
      return kExitYes;
    };
  });

  file_command("determinize", "Subset construction")->callback([&] {
    action = [&] {
      emit_automaton(determinize(load()), o.json, out);
      return kExitYes;
    };
  });

  file_command("minimize", "Minimal complete DFA (determinizes first)")->callback([&] {
    action = [&] {
      emit_automaton(minimal_dfa(load()), o.json, out);
      return kExitYes;
    };
  });

  file_command("depth", "Longest path without self-loops")->callback([&] {
    action = [&] {
      const std::size_t d = depth(load());
      Report r(o.json);
      r.add("depth", d);
      r.set_bare(std::to_string(d));
      r.write(out);
      return kExitYes;
    };
  });

  file_command("is-pt", "Is the language piecewise testable?")->callback([&] {
    action = [&] {
      const Automaton a = load();
      Report r(o.json);
      bool pt = true;
      if (certify_pt_nfa(a) == NfaCertificate::yes) {
        r.add("pt", true);
        r.add("method", "nfa-certificate");
      } else {
        const Automaton m = minimal_dfa(a);
        pt = is_pt_min_dfa(m);
        r.add("pt", pt);
        r.add("method", "minimal-dfa");
        r.add("min-dfa-states", m.num_states());
      }
      r.write(out);
      return pt ? kExitYes : kExitNo;
    };
  });

  {
    CLI::App* sub = file_command("is-kpt", "Is the language k-piecewise testable?");
    add_k(sub);
    add_budget(sub);
    sub->callback([&] {
      action = [&] {
        const Automaton m = minimal_dfa(load());
        const KptDecision d = decide_kpt(m, o.k, o.budget);
        Report r(o.json);
        r.add("k", o.k);
        r.add("k-pt", to_string(d.verdict));
        r.add("method", d.method);
        if (d.certificate) add_certificate(r, *d.certificate, m.alphabet());
        if (d.verdict == Verdict::unknown) r.add("limit", o.budget);
        r.write(out);
        if (d.verdict == Verdict::unknown) err << "budget exceeded (limit " << o.budget << ")\n";
        return exit_for(d.verdict);
      };
    });
  }

  {
    CLI::App* sub = file_command("min-k", "Smallest k for which the language is k-PT");
    add_budget(sub);
    sub->callback([&] {
      action = [&] {
        const MinK mk = min_k(load(), o.budget);
        Report r(o.json);
        switch (mk.kind) {
          case MinK::Kind::exact:
            r.add("kind", "exact");
            r.add("min-k", mk.lo);
            r.set_bare(std::to_string(mk.lo));
            break;
          case MinK::Kind::interval:
            r.add("kind", "interval");
            r.add("min-k", nullptr);
            r.set_bare(std::to_string(mk.lo) + ".." + std::to_string(mk.hi));
            break;
          case MinK::Kind::not_pt:
            r.add("kind", "not-pt");
            r.add("min-k", nullptr);
            r.set_bare("not-pt");
            break;
        }
        r.add("lower", mk.lo);
        r.add("upper", mk.hi);
        r.write(out);
        if (mk.kind == MinK::Kind::interval) {
          err << "budget exceeded at k = " << mk.lo << " (limit " << o.budget << ")\n";
          return kExitUnknown;
        }
        return mk.kind == MinK::Kind::exact ? kExitYes : kExitNo;
      };
    });
  }

  {
    CLI::App* sub = file_command("witness", "Two k-equivalent words separated by the language");
    add_k(sub);
    add_budget(sub);
    sub->callback([&] {
      action = [&] {
        const Automaton m = minimal_dfa(load());
        const OracleResult res = is_kpt_oracle(m, o.k, o.budget);
        Report r(o.json);
        if (res.certificate) {
          add_certificate(r, *res.certificate, m.alphabet());
          r.write(out);
          return kExitYes;
        }
        r.add("k", o.k);
        r.add("k-pt", to_string(res.verdict));
        if (res.verdict == Verdict::unknown) {
          r.add("limit", o.budget);
          r.write(out);
          err << "budget exceeded (limit " << o.budget << ")\n";
          return kExitUnknown;
        }
        r.write(out);
        return kExitNo;
      };
    });
  }

  {
    CLI::App* sub = file_command("verify", "Check a witness pair");
    add_k(sub);
    sub->add_option("--w1", o.w1, "First word, letters separated by spaces or '.', '-' for empty")->required();
    sub->add_option("--w2", o.w2, "Second word")->required();
    sub->callback([&] {
      action = [&] {
        const Automaton m = minimal_dfa(load());
        Certificate c;
        c.k = o.k;
        c.w1 = parse_word(o.w1, m.alphabet());
        c.w2 = parse_word(o.w2, m.alphabet());
        const bool valid = verify_certificate(m, c);
        const DfaTable t = dfa_table(m);
        Report r(o.json);
        r.add("valid", valid);
        r.add("k-equivalent", subwords_up_to_k(c.w1, c.k, m.num_letters()) ==
                                  subwords_up_to_k(c.w2, c.k, m.num_letters()));
        r.add("state1", m.state_name(t.run(t.initial, c.w1)));
        r.add("state2", m.state_name(t.run(t.initial, c.w2)));
        r.write(out);
        return valid ? kExitYes : kExitNo;
      };
    });
  }

  {
    CLI::App* sub = file_command("decompose", "Boolean combination of pieces for a k-PT language");
    add_k(sub);
    add_budget(sub);
    sub->callback([&] {
      action = [&] {
        const Automaton m = minimal_dfa(load());
        const PieceExpression e = decompose(m, o.k, o.budget);
        Report r(o.json);
        r.add("k", o.k);
        r.add("clauses", e.clauses.size());
        r.add("expression", render(e, m.alphabet()));
        r.write(out);
        return kExitYes;
      };
    });
  }

  {
    CLI::App* sub = file_command("monoid", "Transition monoid of the minimal DFA");
    sub->add_option("--check-identities", o.identities, "Check the identities of level 1, 2 or 3")
        ->check(CLI::Range(1, 3));
    sub->add_option("--budget", o.monoid_budget, "Maximum monoid size and enumerated assignments")
        ->capture_default_str();
    sub->add_option("--strategy", o.strategy, "Identity evaluation: auto, factored or exhaustive")
        ->check(CLI::IsMember({"auto", "factored", "exhaustive"}))
        ->capture_default_str();
    sub->callback([&] {
      action = [&] {
        const Automaton m = minimal_dfa(load());
        const TransitionMonoid mon = transition_monoid(m, o.monoid_budget);
        Report r(o.json);
        r.add("size", mon.size());
        r.add("aperiodic", is_aperiodic(mon));
        if (o.identities == 0) {
          r.write(out);
          return kExitYes;
        }
        const IdentityStrategy strategy = o.strategy == "factored"     ? IdentityStrategy::factored
                                          : o.strategy == "exhaustive" ? IdentityStrategy::exhaustive
                                                                       : IdentityStrategy::automatic;
        bool all = true;
        for (const Identity& eq : kpt_identities(o.identities)) {
          const IdentityResult res = check_identity(mon, eq, o.monoid_budget, strategy);
          std::string value = res.holds ? "holds" : "fails:";
          for (const auto& [var, e] : res.counterexample)
            value += std::string(" ") + var + "=" + format_word(mon.access_word(e), m.alphabet(), ".");
          r.add(eq.lhs + "=" + eq.rhs, value);
          all = all && res.holds;
        }
        r.write(out);
        return all ? kExitYes : kExitNo;
      };
    });
  }

  {
    CLI::App* sub = app.add_subcommand("canonical", "The ~k-canonical DFA over a1..aN");
    add_k(sub);
    sub->add_option("--letters", o.n, "Alphabet size N")->required();
    add_budget(sub);
    sub->callback([&] {
      action = [&] {
        emit_automaton(canonical_automaton(indexed_alphabet(o.n), o.k, o.budget), o.json, out);
        return kExitYes;
      };
    });
  }

  // ---- generators ----
  {
    CLI::App* gen = app.add_subcommand("gen", "Extremal automata and words");
    gen->require_subcommand(1);
    CLI::App* ak = gen->add_subcommand("ak", "NFA A_K");
    ak->add_option("K", o.k)->required();
    ak->callback([&] {
      action = [&] {
        emit_automaton(gen_ak(o.k), o.json, out);
        return kExitYes;
      };
    });
    CLI::App* wk = gen->add_subcommand("wk", "Word w_K over a0..aK");
    wk->add_option("K", o.k)->required();
    wk->callback([&] {
      action = [&] {
        emit_word(gen_wk(o.k), ak_alphabet(o.k), o.json, out);
        return kExitYes;
      };
    });
    CLI::App* wkn = gen->add_subcommand("wkn", "Word W_{K,N} over a1..aN");
    wkn->add_option("K", o.k)->required();
    wkn->add_option("N", o.n)->required();
    wkn->callback([&] {
      action = [&] {
        emit_word(gen_wkn(o.k, o.n), indexed_alphabet(o.n), o.json, out);
        return kExitYes;
      };
    });
    CLI::App* cap = gen->add_subcommand("cap", "NFA for the words containing each of a1..aN");
    cap->add_option("N", o.n)->required();
    cap->callback([&] {
      action = [&] {
        emit_automaton(gen_intersection_nfa(indexed_alphabet(o.n)), o.json, out);
        return kExitYes;
      };
    });
    CLI::App* tight = gen->add_subcommand("tight", "DFA of depth P_{K,N} over a1..aN");
    tight->add_option("K", o.k)->required();
    tight->add_option("N", o.n)->required();
    add_budget(tight);
    tight->callback([&] {
      action = [&] {
        emit_automaton(gen_tight_depth_dfa(o.k, o.n, o.budget), o.json, out);
        return kExitYes;
      };
    });
  }

  {
    CLI::App* sub = app.add_subcommand("pkn", "binom(K+N, K) - 1");
    sub->add_option("K", o.k)->required();
    sub->add_option("N", o.n)->required();
    sub->add_flag("--stirling", o.stirling, "Evaluate through Stirling numbers of the first kind");
    sub->callback([&] {
      action = [&] {
        const std::uint64_t v = o.stirling ? pkn_stirling(o.k, o.n) : pkn(o.k, o.n);
        Report r(o.json);
        r.add("pkn", v);
        r.set_bare(std::to_string(v));
        r.write(out);
        return kExitYes;
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitYes : kExitError;
  }

  try {
    return action ? action() : kExitError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << " (limit " << e.limit() << ")\n";
    return kExitUnknown;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::range_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace ptk
