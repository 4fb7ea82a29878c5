#include "app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "expr.hpp"
#include "thmon/circuits.hpp"
#include "thmon/counting.hpp"
#include "thmon/error.hpp"
#include "thmon/green.hpp"
#include "thmon/reductions.hpp"
#include "thmon/structure.hpp"

namespace thmon::cli {

  namespace {

    constexpr char const* kMachineHeader = "thmon-result v1";

    struct Config {
      unsigned                 k      = 2;
      unsigned                 b      = 0;
      std::uint64_t            cap    = default_eval_cap;
      std::vector<std::size_t> budget = {3, 3, 3};
      std::uint64_t            seed   = 1;
      std::string              format = "text";
      std::vector<std::string> lets;

      Alphabet alphabet() const {
        return Alphabet{k, b};
      }
      OracleBudget oracle_budget() const {
        return OracleBudget{budget[0], budget[1], budget[2]};
      }
    };

    struct Report {
      std::string         command;
      std::optional<bool> holds;
      std::string         verdict;
      std::vector<std::pair<std::string, std::string>> fields;

      void add(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
      }
      void add(std::string key, Element const& e) {
        add(std::move(key), to_string(e));
      }
      void add(std::string key, std::size_t n) {
        add(std::move(key), std::to_string(n));
      }
    };

    void print_field(std::ostream& out, std::string const& key,
                     std::string const& value) {
      if (value.find('\n') == std::string::npos) {
        out << key << ": " << value << "\n";
        return;
      }
      out << key << ": |\n";
      std::istringstream in(value);
      for (std::string line; std::getline(in, line);) {
        out << "  " << line << "\n";
      }
    }

    void print(Report const& r, Config const& cfg, std::ostream& out) {
      if (cfg.format == "machine") {
        out << kMachineHeader << "\n";
        print_field(out, "command", r.command);
        print_field(out, "seed", std::to_string(cfg.seed));
        print_field(out, "alphabet", to_string(cfg.alphabet()));
        print_field(out, "status",
                    !r.holds ? "ok" : (*r.holds ? "holds" : "fails"));
        if (!r.verdict.empty()) {
          print_field(out, "verdict", r.verdict);
        }
      } else if (!r.verdict.empty()) {
        out << r.verdict << "\n";
      } else if (r.fields.size() == 1
                 && r.fields[0].second.find('\n') != std::string::npos) {
        // A lone netlist or relation is printed as a file.
        out << r.fields[0].second;
        return;
      }
      for (auto const& [k, v] : r.fields) {
        print_field(out, k, v);
      }
    }

    Relation relation_named(std::string const& s) {
      static std::map<std::string, Relation> const names{
          {"jle", Relation::J_le}, {"j", Relation::J_eq},
          {"d", Relation::D_eq},   {"rle", Relation::R_le},
          {"r", Relation::R_eq},   {"lle", Relation::L_le},
          {"l", Relation::L_eq},   {"h", Relation::H_eq}};
      auto it = names.find(s);
      if (it == names.end()) {
        throw Error("unknown relation '" + s
                    + "' (expected jle, j, d, rle, r, lle, l or h)");
      }
      return it->second;
    }

    GreenVerdict decide(Relation rel, Element const& psi, Element const& phi,
                        bool oracle, Config const& cfg) {
      if (oracle) {
        if (rel != Relation::J_le && rel != Relation::R_le
            && rel != Relation::L_le) {
          throw Error("--oracle supports jle, rle and lle");
        }
        return oracle_leq(psi, phi, rel, cfg.oracle_budget());
      }
      switch (rel) {
        case Relation::J_le:
          return leq_J(psi, phi);
        case Relation::J_eq:
          return equiv_J(psi, phi);
        case Relation::D_eq:
          return equiv_D(psi, phi);
        case Relation::R_le:
          return leq_R_fast(psi, phi);
        case Relation::R_eq:
          return equiv_R(psi, phi);
        case Relation::L_le:
          throw Error("lle is only decided by the bounded search; add --oracle");
        case Relation::L_eq:
          return equiv_L(psi, phi);
        case Relation::H_eq:
          return equiv_H(psi, phi);
      }
      throw Error("unhandled relation");
    }

    void add_witness(Report& r, Witness const& w) {
      auto put = [&](char const* key, std::optional<Element> const& e) {
        if (e) {
          r.add(key, *e);
        }
      };
      put("alpha", w.alpha);
      put("beta", w.beta);
      put("right", w.right);
      put("right_back", w.right_back);
      put("left", w.left);
      put("left_back", w.left_back);
    }

    FinRel load_finrel(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw Error("cannot open " + path);
      }
      return read_finrel(in);
    }

    std::size_t formula_arity(Formula const& f, std::optional<std::size_t> m) {
      std::size_t need = std::max<std::size_t>(f.max_var(), 1);
      if (m && *m < f.max_var()) {
        throw Error("--m " + std::to_string(*m) + " is smaller than x"
                    + std::to_string(f.max_var()));
      }
      return m ? *m : need;
    }

    // Splits for existential counting: m bound variables, the rest free.
    std::pair<std::size_t, std::size_t> split_vars(
        Formula const& f, std::optional<std::size_t> m,
        std::optional<std::size_t> n) {
      std::size_t total = f.max_var();
      if (!m && !n) {
        throw Error("give --m or --n");
      }
      std::size_t mm = m ? *m : (total > *n ? total - *n : 0);
      std::size_t nn = n ? *n : (total > mm ? total - mm : 0);
      if (mm + nn < total) {
        throw Error("m + n is smaller than the largest variable");
      }
      return {mm, nn};
    }

    // Random canonical element: a random prefix code grown by splitting
    // leaves, some leaves dropped, and random image words.
    Element sample_element(std::mt19937_64& rng, Alphabet const& a,
                           std::size_t max_entries, std::size_t max_len) {
      std::vector<Word> leaves;
      if (a.headed()) {
        for (unsigned h = 0; h < a.b; ++h) {
          leaves.push_back(Word::with_head(static_cast<Letter>(h)));
        }
      } else {
        leaves.push_back(Word{});
      }
      for (int tries = 0; tries < 64; ++tries) {
        std::size_t i = rng() % leaves.size();
        if (leaves[i].tail_size() >= max_len
            || leaves.size() + a.k - 1 > std::max<std::size_t>(max_entries, a.k)) {
          continue;
        }
        Word w = leaves[i];
        leaves.erase(leaves.begin() + static_cast<long>(i));
        for (unsigned x = 0; x < a.k; ++x) {
          Word c = w;
          c.push_back(static_cast<Letter>(x));
          leaves.push_back(c);
        }
      }
      std::vector<Entry> entries;
      for (auto const& d : leaves) {
        if (entries.size() >= max_entries || rng() % 4 == 0) {
          continue;
        }
        Word        v   = a.headed() ? Word::with_head(static_cast<Letter>(rng() % a.b))
                                     : Word{};
        std::size_t len = rng() % (max_len + 1);
        for (std::size_t j = 0; j < len; ++j) {
          v.push_back(static_cast<Letter>(rng() % a.k));
        }
        entries.push_back(Entry{d, v});
      }
      return canonicalize(Table(a, std::move(entries)));
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err) {
    CLI::App app{"Thompson-Higman monoid toolkit", "thmon"};
    // "-h" is left free for the modulus option --h.
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--k", cfg.k, "number of letters a_1..a_k")
        ->check(CLI::Range(2u, 10u));
    app.add_option("--b", cfg.b, "number of head letters (0 for plain words)")
        ->check(CLI::Range(0u, 10u));
    app.add_option("--cap", cfg.cap, "largest table or enumeration allowed")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", cfg.budget,
                   "oracle budget: entries,domain length,image length")
        ->delimiter(',')
        ->expected(3);
    app.add_option("--seed", cfg.seed, "seed for sampling");
    app.add_option("--format", cfg.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}));
    app.add_option("--let", cfg.lets, "bind name=expression (repeatable)");

    Report                           report;
    std::function<void()>            action;
    std::vector<std::string>         pos;
    std::optional<std::size_t>       opt_m, opt_n;
    std::size_t                      opt_h = 2, opt_i = 1, opt_j = 0;
    std::size_t                      opt_count = 1, opt_entries = 4,
                                     opt_len = 2;
    bool                             flag = false;
    std::string                      opt_input;
    std::vector<std::size_t>         yes, no;
    std::vector<std::string>         universe;

    EvalContext ctx;
    auto        element = [&](std::string const& text) {
      return eval_text(text, cfg.alphabet(), ctx);
    };

    auto cmd = [&](char const* name, char const* help) {
      return app.add_subcommand(name, help);
    };

    auto* eval_cmd = cmd("eval", "evaluate an expression to its canonical table");
    eval_cmd->add_option("expr", pos)->required()->expected(1);
    eval_cmd->callback([&] {
      action = [&] {
        Element e = element(pos[0]);
        report.add("element", e);
        report.add("entries", e.size());
      };
    });

    auto* green_cmd = cmd("green", "decide a Green relation: green REL E1 E2");
    green_cmd->add_option("args", pos, "jle|j|d|rle|r|lle|l|h, psi, phi")
        ->required()
        ->expected(3);
    green_cmd->add_flag("--oracle", flag,
                        "use bounded witness search (jle, rle, lle)");
    green_cmd->callback([&] {
      action = [&] {
        Relation rel = relation_named(pos[0]);
        Element  psi = element(pos[1]);
        Element  phi = element(pos[2]);
        auto     v   = decide(rel, psi, phi, flag, cfg);
        report.holds   = v.holds;
        report.verdict = v.holds ? "true" : "false";
        if (v.witness) {
          if (v.witness->pivot) {
            report.verdict += ", pivot " + to_string(*v.witness->pivot);
            report.add("pivot", *v.witness->pivot);
          }
          add_witness(report, *v.witness);
        }
      };
    });

    auto* dclass_cmd = cmd("dclass", "D-class index of an element");
    dclass_cmd->add_option("expr", pos)->required()->expected(1);
    dclass_cmd->callback([&] {
      action = [&] {
        Element     e = element(pos[0]);
        std::size_t d = dclass_index(e);
        report.verdict
            = d == 0 ? "zero element" : "D-class index " + std::to_string(d);
        report.add("index", d);
        report.add("image_code_size", imC(e).size());
      };
    });

    auto* pivot_cmd = cmd("pivot", "chi with psi L chi R phi");
    pivot_cmd->add_option("args", pos, "psi, phi")->required()->expected(2);
    pivot_cmd->callback([&] {
      action = [&] {
        Element psi = element(pos[0]);
        Element phi = element(pos[1]);
        if (is_zero(psi) || is_zero(phi)
            || dclass_index(psi) != dclass_index(phi)) {
          report.holds   = is_zero(psi) && is_zero(phi);
          report.verdict = *report.holds ? "both zero" : "not D-equivalent";
          return;
        }
        PivotResult p  = pivot_search(psi, phi);
        report.holds   = true;
        report.verdict = "pivot " + to_string(p.chi);
        report.add("chi", p.chi);
        report.add("alpha", p.alpha);
        report.add("left", p.left);
        report.add("left_back", p.left_back);
        report.add("right", p.right);
        report.add("right_back", p.right_back);
      };
    });

    auto* mult_cmd = cmd("multipliers", "beta, alpha with psi = beta phi alpha");
    mult_cmd->add_option("args", pos, "psi, phi")->required()->expected(2);
    mult_cmd->callback([&] {
      action = [&] {
        Element psi = element(pos[0]);
        Element phi = element(pos[1]);
        report.holds = leq_J(psi, phi).holds;
        if (!*report.holds) {
          report.verdict = "false: psi is not below phi";
          return;
        }
        Multipliers m  = multiplier_search(psi, phi);
        report.verdict = "true";
        report.add("alpha", m.alpha);
        report.add("beta", m.beta);
      };
    });

    auto* sub_cmd = cmd("subgroup", "membership in the maximal subgroup of eta(i)");
    sub_cmd->add_option("args", pos, "element, i")->required()->expected(2);
    sub_cmd->callback([&] {
      action = [&] {
        Element     e = element(pos[0]);
        std::size_t i = std::stoul(pos[1]);
        report.holds  = in_max_subgroup(e, i);
        report.verdict = *report.holds ? "member" : "not a member";
        if (*report.holds) {
          report.add("inverse", invert(e));
          report.add("relabeled", subgroup_to_higman(e, i));
        }
      };
    });

    auto* embed_cmd = cmd("embed", "embed a headed element into one head letter");
    embed_cmd->add_option("expr", pos)->required()->expected(1);
    embed_cmd->callback([&] {
      action = [&] { report.add("image", embed_E(element(pos[0]))); };
    });

    auto* circ_cmd = cmd("circuit", "netlist queries: circuit SUB FILE");
    circ_cmd->add_option("args", pos,
                         "eval|image-size|image-size-mod|domain-size|"
                         "domain-size-mod|element|normalize, file")
        ->required()
        ->expected(2);
    circ_cmd->add_option("--h", opt_h, "modulus")->check(CLI::Range(2u, 1000u));
    circ_cmd->add_option("--input", opt_input, "input bits for eval, x_1 first");
    circ_cmd->callback([&] {
      action = [&] {
        std::string const& sub = pos[0];
        Circuit            c   = read_netlist_file(pos[1]);
        if (sub == "eval") {
          if (opt_input.size() != c.num_inputs()
              || opt_input.find_first_not_of("01") != std::string::npos) {
            throw Error("--input needs " + std::to_string(c.num_inputs())
                        + " bits");
          }
          auto r         = c.eval(std::stoull("0" + opt_input, nullptr, 2));
          report.holds   = r.defined;
          report.verdict = r.to_string();
        } else if (sub == "image-size") {
          report.add("image_size", image_size(c, cfg.cap));
        } else if (sub == "image-size-mod") {
          report.holds   = image_size_mod(c, opt_h, cfg.cap);
          report.verdict = *report.holds ? "yes" : "no";
        } else if (sub == "domain-size") {
          report.add("domain_size", domain_size(c, cfg.cap));
        } else if (sub == "domain-size-mod") {
          report.holds   = domain_size_mod(c, opt_h, cfg.cap);
          report.verdict = *report.holds ? "yes" : "no";
        } else if (sub == "element") {
          report.add("element", circuit_to_element(c, cfg.k, cfg.cap));
        } else if (sub == "normalize") {
          report.add("netlist", write_netlist(c));
        } else {
          throw Error("unknown circuit query '" + sub + "'");
        }
      };
    });

    auto* red_cmd = cmd("reduce", "formula reductions: reduce KIND FORMULA...");
    red_cmd->add_option("args", pos,
                        "taut|nontaut|invd|phi0|truth-table|cgadget|"
                        "domain-gadget, formula(s)")
        ->required()
        ->expected(2, 3);
    red_cmd->add_option("--m", opt_m, "number of (bound) variables");
    red_cmd->add_option("--n", opt_n, "number of free variables for cgadget");
    red_cmd->callback([&] {
      action = [&] {
        std::string const& kind = pos[0];
        Formula            f    = Formula::parse(pos[1]);
        if (kind == "nontaut") {
          if (pos.size() != 3) {
            throw Error("nontaut needs two formulas");
          }
          Formula g  = Formula::parse(pos[2]);
          auto    pr = nontaut_or_taut_instance(
              f, formula_arity(f, {}), g, formula_arity(g, {}), cfg.k);
          report.add("first", pr.first);
          report.add("second", pr.second);
          return;
        }
        if (pos.size() != 2) {
          throw Error(kind + " takes one formula");
        }
        if (kind == "cgadget") {
          auto [m, n] = split_vars(f, opt_m, opt_n);
          report.add("netlist", write_netlist(c_gadget(f, m, n)));
          return;
        }
        std::size_t m = formula_arity(f, opt_m);
        if (kind == "taut") {
          Element e      = taut_reduction(f, m, cfg.k);
          report.holds   = is_zero(e);
          report.verdict = *report.holds ? "zero element: B is a tautology"
                                         : "nonzero element: B is not a tautology";
          report.add("element", e);
        } else if (kind == "invd") {
          Element e = inv_D_reduction(f, m, cfg.k);
          report.add("element", e);
          report.add("image_code_size", imC(e).size());
        } else if (kind == "phi0") {
          report.add("element", phi0_B(f, m, cfg.k));
        } else if (kind == "truth-table") {
          report.add("element", truth_table_element(f, m, cfg.k));
        } else if (kind == "domain-gadget") {
          report.add("netlist", write_netlist(domain_gadget(f, m)));
        } else {
          throw Error("unknown reduction '" + kind + "'");
        }
      };
    });

    auto* count_cmd = cmd("count", "modular counting: count SUB ARGS...");
    count_cmd->add_option("args", pos,
                          "exists|oplus|oplus10 FORMULA, slice|class FILE WORD, "
                          "add-one|times-m|normalize FILE, disjoint FILE FILE, "
                          "embed WORD...")
        ->required()
        ->expected(1, -1);
    count_cmd->add_option("--m", opt_m, "bound variables, or the multiplier");
    count_cmd->add_option("--n", opt_n, "free variables");
    count_cmd->add_option("--h", opt_h, "modulus")->check(CLI::Range(2u, 1000u));
    count_cmd->add_option("--i", opt_i, "residue");
    count_cmd->add_option("--j", opt_j, "second residue for normalize");
    count_cmd->add_option("--yes", yes, "residues in the class")->delimiter(',');
    count_cmd->add_option("--no", no, "residues outside the class")->delimiter(',');
    count_cmd->add_option("--universe", universe, "words for the complement")
        ->delimiter(',');
    count_cmd->add_flag("--complement", flag, "complement embedding");
    count_cmd->callback([&] {
      action = [&] {
        std::string const& sub  = pos[0];
        auto               need = [&](std::size_t n) {
          if (pos.size() != n + 1) {
            throw Error(sub + " takes " + std::to_string(n) + " argument(s)");
          }
        };
        if (sub == "exists" || sub == "oplus" || sub == "oplus10") {
          need(1);
          Formula f   = Formula::parse(pos[1]);
          auto [m, n] = split_vars(f, opt_m, opt_n);
          if (sub == "exists") {
            report.add("count", exists_count(f, m, n));
          } else {
            report.holds = sub == "oplus" ? oplus_exists_sat(f, m, n, opt_h, opt_i)
                                          : oplus_10_exists_sat(f, m, n, opt_h);
            report.verdict = *report.holds ? "yes" : "no";
          }
        } else if (sub == "slice" || sub == "class") {
          need(2);
          FinRel r = load_finrel(pos[1]);
          Word   x = parse_word(pos[2], Alphabet{r.k(), 0});
          if (sub == "slice") {
            report.add("count", slice_count(r, x));
          } else {
            ModSpec spec{opt_h, {yes.begin(), yes.end()}, {no.begin(), no.end()}};
            Membership mem = in_class(r, x, spec);
            report.holds   = mem == Membership::Yes;
            report.verdict = to_string(mem);
          }
        } else if (sub == "add-one" || sub == "times-m" || sub == "normalize") {
          need(1);
          FinRel r = load_finrel(pos[1]);
          FinRel s = sub == "add-one" ? add_one(r)
                     : sub == "times-m"
                         ? times_m(r, opt_m.value_or(1))
                         : normalize_to_10(r, opt_h, opt_i, opt_j);
          report.add("relation", write_finrel(s));
        } else if (sub == "disjoint") {
          need(2);
          auto [a, b] = disjointify(load_finrel(pos[1]), load_finrel(pos[2]));
          report.add("first", write_finrel(a));
          report.add("second", write_finrel(b));
        } else if (sub == "embed") {
          Alphabet          two{cfg.k, 0};
          std::vector<Word> lang, uni;
          for (std::size_t i = 1; i < pos.size(); ++i) {
            lang.push_back(parse_word(pos[i], two));
          }
          for (auto const& w : universe) {
            uni.push_back(parse_word(w, two));
          }
          report.add("relation",
                     write_finrel(np_embed(lang, opt_h, flag, uni, cfg.k)));
        } else {
          throw Error("unknown count query '" + sub + "'");
        }
      };
    });

    auto* sample_cmd = cmd("sample", "random canonical elements from --seed");
    sample_cmd->add_option("--count", opt_count)->check(CLI::Range(1u, 100000u));
    sample_cmd->add_option("--entries", opt_entries)->check(CLI::Range(1u, 64u));
    sample_cmd->add_option("--len", opt_len)->check(CLI::Range(0u, 16u));
    sample_cmd->callback([&] {
      action = [&] {
        std::mt19937_64 rng(cfg.seed);
        for (std::size_t i = 0; i < opt_count; ++i) {
          report.add("element",
                     sample_element(rng, cfg.alphabet(), opt_entries, opt_len));
        }
      };
    });

    try {
      app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (CLI::ParseError const& e) {
      int code = app.exit(e, out, err);
      return code == 0 ? 0 : 2;
    }

    try {
      cfg.alphabet().validate();
      for (auto const& let : cfg.lets) {
        auto eq = let.find('=');
        if (eq == std::string::npos || eq == 0) {
          throw Error("--let needs name=expression, got '" + let + "'");
        }
        std::string name = let.substr(0, eq);
        ctx.bindings[name] = eval_text(let.substr(eq + 1), cfg.alphabet(), ctx);
      }
      ctx.cap = cfg.cap;
      for (auto* s : app.get_subcommands()) {
        report.command = s->get_name();
      }
      action();
    } catch (ParseError const& e) {
      err << "error: " << e.message() << " at position " << e.position()
          << "\n";
      return 2;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return 2;
    }
    print(report, cfg, out);
    return !report.holds || *report.holds ? 0 : 1;
  }

}  // namespace thmon::cli
