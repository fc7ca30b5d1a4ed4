// semitop: action complexes of semigroup actions, Schutzenberger group
// presentations via quotient complexes, and growth comparisons.
//
// Exit codes: 0 success, 1 refusal (a hypothesis is not certified), 2 input
// or usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semitop/growth.hpp"

namespace st = semitop;

namespace {

std::string slurp(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void spill(std::string const& path, std::string const& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::invalid_argument("cannot write " + path);
  }
  out << data;
}

// Sniff the input format from its first content line.
enum class InputKind { presentation, transformation, rees, action };

InputKind sniff(std::string const& text) {
  std::istringstream in(text);
  std::string        line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
      continue;
    }
    line = line.substr(b);
    if (line.rfind("degree:", 0) == 0) {
      return InputKind::transformation;
    }
    if (line.rfind("rees:", 0) == 0) {
      return InputKind::rees;
    }
    if (line.rfind("vertices:", 0) == 0) {
      return InputKind::action;
    }
    return InputKind::presentation;
  }
  throw std::invalid_argument("empty input");
}

st::ConcreteSemigroup load_semigroup(std::string const& path, size_t kb_rules,
                                     size_t kb_len) {
  auto text = slurp(path);
  switch (sniff(text)) {
    case InputKind::transformation:
      return st::ConcreteSemigroup(st::parse_transformation_file(text));
    case InputKind::rees:
      return st::ConcreteSemigroup(st::parse_rees_file(text));
    case InputKind::presentation: {
      auto p  = st::parse_presentation(text);
      auto kb = st::bounded_knuth_bendix(p, kb_rules, kb_len);
      if (!kb.complete) {
        std::cerr << "note: Knuth-Bendix incomplete within bounds; "
                     "equality answers are up to the bound\n";
      }
      return st::ConcreteSemigroup(kb.backend, p);
    }
    case InputKind::action:
      throw std::invalid_argument(path
                                  + " is an action file, not a semigroup");
  }
  throw std::logic_error("unreachable");
}

std::string completeness_name(st::Completeness c) {
  switch (c) {
    case st::Completeness::complete:
      return "complete";
    case st::Completeness::truncated:
      return "truncated-at-bound";
    case st::Completeness::unknown_equality:
      return "unknown-equality";
  }
  return "?";
}

// The R-class of the element named by a word such as "a b a".
size_t r_class_of_word(st::ConcreteSemigroup const& S,
                       st::EnumerationResult const& E, st::GreenData const& G,
                       std::string const& word) {
  auto w = st::parse_word(S.alphabet(), word,
                          S.kind() == st::PresentationKind::monoid);
  auto e = S.evaluate(w);
  if (!e) {
    throw std::invalid_argument("word exceeds backend bounds: " + word);
  }
  auto ix = E.index_of(*e);
  if (ix < 0) {
    throw std::invalid_argument("element not enumerated: " + word);
  }
  return static_cast<size_t>(G.r_of[static_cast<size_t>(ix)]);
}

nlohmann::json classes_json(std::vector<std::vector<int32_t>> const& classes) {
  nlohmann::json out = nlohmann::json::array();
  for (auto const& cls : classes) {
    out.push_back(cls);
  }
  return out;
}

void print_class_table(std::ostream& os, std::string const& name,
                       std::vector<std::vector<int32_t>> const& classes) {
  os << name << " (" << classes.size() << "):\n";
  for (size_t c = 0; c < classes.size(); ++c) {
    os << "  " << name[0] << c << " = {";
    for (size_t i = 0; i < classes[c].size(); ++i) {
      os << (i > 0 ? " " : "") << classes[c][i];
    }
    os << "}\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"action complexes, Schutzenberger presentations and growth"};
  app.set_version_flag("--version", "semitop 0.1.0");
  app.require_subcommand(1);

  std::string input, action_path, rclass_word, dot_path, gnuplot_path;
  size_t      max_len     = 16;
  size_t      growth_n    = 12;
  size_t      coset_limit = st::default_coset_limit();
  size_t      kb_rules = 512, kb_len = 64;
  int32_t     base = 0;
  bool json = false, assert_stab = false, allow_invalid = false, csv = false;

  auto add_common = [&](CLI::App* cmd, bool needs_input = true) {
    if (needs_input) {
      cmd->add_option("input", input, "input file")->required();
    }
    cmd->add_option("-n,--max-len", max_len, "enumeration length bound");
    cmd->add_option("--coset-limit", coset_limit, "Todd-Coxeter coset bound");
    cmd->add_flag("--json", json, "emit JSON");
    return cmd;
  };

  auto* cmd_enum = add_common(
      app.add_subcommand("enumerate", "list elements with shortest words"));

  auto* cmd_green = add_common(
      app.add_subcommand("green", "Green's relation class tables"));

  auto* cmd_sgraph = add_common(app.add_subcommand(
      "schutz-graph", "Schutzenberger graph of an R-class"));
  cmd_sgraph
      ->add_option("--rclass-of", rclass_word,
                   "word naming an element of the R-class")
      ->required();
  cmd_sgraph->add_option("--dot", dot_path, "write DOT to this file");

  auto* cmd_complex = add_common(app.add_subcommand(
      "complex", "action complex of a presentation on an action file"));
  cmd_complex->add_option("--action", action_path, "action file")->required();
  cmd_complex->add_option("--dot", dot_path, "write DOT of the 1-skeleton");
  cmd_complex->add_flag("--allow-invalid", allow_invalid,
                        "build even if validation fails (truncated data)");

  auto* cmd_aut = app.add_subcommand(
      "aut", "automorphism group of an action (cycle notation)");
  cmd_aut->add_option("--action", action_path, "action file")->required();
  cmd_aut->add_flag("--json", json, "emit JSON");

  auto* cmd_pi1 = app.add_subcommand("pi1", "fundamental group of a complex");
  cmd_pi1->add_option("--input", input, "complex JSON file")->required();
  cmd_pi1->add_option("--base", base, "base vertex (default 0)");
  cmd_pi1->add_option("--coset-limit", coset_limit, "Todd-Coxeter bound");
  cmd_pi1->add_flag("--json", json, "emit JSON");

  auto* cmd_spres = add_common(app.add_subcommand(
      "schutz-pres", "present the Schutzenberger group of an R-class"));
  cmd_spres
      ->add_option("--rclass-of", rclass_word,
                   "word naming an element of the R-class")
      ->required();
  cmd_spres->add_flag(
      "--assert-stabilizer", assert_stab,
      "proceed even if the stabilizer condition is not certified");

  auto* cmd_reid = add_common(app.add_subcommand(
      "reidemeister", "present a subgroup of a finite group"));
  std::vector<std::string> subgroup_words;
  cmd_reid->add_option("--subgroup", subgroup_words,
                       "subgroup generator word (repeatable)");

  auto* cmd_growth = add_common(app.add_subcommand(
      "growth", "growth series CSV and the R-class ball bound"));
  cmd_growth->add_option("-N,--radius", growth_n, "largest n");
  cmd_growth->add_flag("--csv", csv, "emit CSV (the default output)");
  cmd_growth->add_option("--gnuplot", gnuplot_path,
                         "also write a gnuplot script");

  auto* cmd_stab = add_common(app.add_subcommand(
      "check-stab", "check the stabilizer condition on an R-class"));
  cmd_stab
      ->add_option("--rclass-of", rclass_word,
                   "word naming an element of the R-class")
      ->required();

  auto* cmd_verify = add_common(
      app.add_subcommand("verify", "run the invariant battery on an input"));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);  // prints usage or help
    return code == 0 ? 0 : 2;
  }

  if (*cmd_enum) {
    auto S = load_semigroup(input, kb_rules, kb_len);
    auto E = st::enumerate(S, max_len);
    if (json) {
      nlohmann::json j;
      j["completeness"] = completeness_name(E.completeness);
      j["size"]         = E.size();
      auto elems        = nlohmann::json::array();
      for (size_t i = 0; i < E.size(); ++i) {
        elems.push_back(
            {{"id", i},
             {"word", st::word_to_string(S.alphabet(), E.witnesses[i])},
             {"element", S.backend().format(E.elements[i])}});
      }
      j["elements"] = std::move(elems);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "elements: " << E.size() << " ("
                << completeness_name(E.completeness) << ")\n";
      for (size_t i = 0; i < E.size(); ++i) {
        std::cout << i << "\t"
                  << st::word_to_string(S.alphabet(), E.witnesses[i]) << "\t"
                  << S.backend().format(E.elements[i]) << "\n";
      }
    }
    return 0;
  }

  if (*cmd_green) {
    auto S = load_semigroup(input, kb_rules, kb_len);
    auto E = st::enumerate(S, max_len);
    auto G = st::green_relations(S, E);
    if (json) {
      nlohmann::json j;
      j["completeness"] = completeness_name(G.completeness);
      j["r_classes"]    = classes_json(G.r_classes);
      j["l_classes"]    = classes_json(G.l_classes);
      j["h_classes"]    = classes_json(G.h_classes);
      j["d_classes"]    = classes_json(G.d_classes);
      j["idempotents"]  = G.idempotents;
      auto words        = nlohmann::json::array();
      for (size_t i = 0; i < E.size(); ++i) {
        words.push_back(st::word_to_string(S.alphabet(), E.witnesses[i]));
      }
      j["element_words"] = std::move(words);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "elements: " << E.size() << " ("
                << completeness_name(G.completeness) << ")\n";
      print_class_table(std::cout, "R-classes", G.r_classes);
      print_class_table(std::cout, "L-classes", G.l_classes);
      print_class_table(std::cout, "H-classes", G.h_classes);
      print_class_table(std::cout, "D-classes", G.d_classes);
      std::cout << "idempotents:";
      for (int32_t e : G.idempotents) {
        std::cout << " " << e;
      }
      std::cout << "\nelement words:\n";
      for (size_t i = 0; i < E.size(); ++i) {
        std::cout << "  " << i << " = "
                  << st::word_to_string(S.alphabet(), E.witnesses[i]) << "\n";
      }
    }
    return 0;
  }

  if (*cmd_sgraph) {
    auto S = load_semigroup(input, kb_rules, kb_len);
    auto E = st::enumerate(S, max_len);
    auto G = st::green_relations(S, E);
    auto r = r_class_of_word(S, E, G, rclass_word);
    auto K = st::schutzenberger_graph(E, G, r, S.alphabet());
    if (!dot_path.empty()) {
      spill(dot_path, st::complex_to_dot(K));
    }
    if (json) {
      std::cout << st::complex_to_json(K);
    } else {
      std::cout << "R-class " << r << ": " << K.vertex_count << " vertices, "
                << K.edges.size() << " edges\n";
    }
    return 0;
  }

  if (*cmd_complex) {
    auto text = slurp(input);
    if (sniff(text) != InputKind::presentation) {
      throw std::invalid_argument("complex expects a presentation input");
    }
    auto P          = st::parse_presentation(text);
    auto [A, names] = st::parse_action_file(slurp(action_path));
    auto bound      = st::rebind_action(A, names, P.alphabet());
    auto K          = st::build_action_complex(P, bound, !allow_invalid);
    if (!dot_path.empty()) {
      spill(dot_path, st::complex_to_dot(K));
    }
    std::cout << st::complex_to_json(K);
    return 0;
  }

  if (*cmd_aut) {
    auto [A, names] = st::parse_action_file(slurp(action_path));
    auto auts       = st::automorphism_group(A);
    if (json) {
      nlohmann::json j = nlohmann::json::array();
      for (auto const& g : auts) {
        j.push_back(g.bijection);
      }
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "automorphisms: " << auts.size() << "\n";
      for (auto const& g : auts) {
        std::cout << "  " << st::cycle_notation(g.bijection) << "\n";
      }
    }
    return 0;
  }

  if (*cmd_pi1) {
    auto K = st::complex_from_json(slurp(input));
    auto p = st::tietze_simplify(st::pi1_presentation(K, base));
    auto a = st::analyze_group(p, coset_limit);
    if (json) {
      nlohmann::json j;
      j["presentation"]            = st::to_text(p);
      j["analysis"]                = st::to_string(a);
      j["provenance"]              = nlohmann::json::object();
      j["provenance"]["generator_edges"] = p.generator_edges;
      j["provenance"]["relator_faces"]   = p.relator_faces;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << st::to_text(p) << "# " << st::to_string(a) << "\n";
    }
    return 0;
  }

  if (*cmd_spres) {
    auto S = load_semigroup(input, kb_rules, kb_len);
    auto E = st::enumerate(S, max_len);
    auto G = st::green_relations(S, E);
    auto r = r_class_of_word(S, E, G, rclass_word);
    st::SchutzPresentationOptions opts;
    opts.assert_stabilizer = assert_stab;
    opts.coset_limit       = coset_limit;
    auto res = st::schutzenberger_presentation(S, E, G, r, opts);
    if (json) {
      nlohmann::json j;
      j["presentation"]   = st::to_text(res.presentation);
      j["analysis"]       = st::to_string(res.analysis);
      j["raw_generators"] = res.raw_generator_count;
      j["automorphisms"]  = res.automorphisms.size();
      j["stabilizer"] = res.stabilizer_asserted ? "asserted" : "certified";
      j["provenance"]              = nlohmann::json::object();
      j["provenance"]["generator_edges"] = res.presentation.generator_edges;
      j["provenance"]["relator_faces"]   = res.presentation.relator_faces;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << st::to_text(res.presentation) << "# "
                << st::to_string(res.analysis) << "\n# stabilizer condition "
                << (res.stabilizer_asserted ? "asserted by the user"
                                            : "certified")
                << "\n";
    }
    return 0;
  }

  if (*cmd_reid) {
    auto text = slurp(input);
    if (sniff(text) != InputKind::presentation) {
      throw std::invalid_argument("reidemeister expects a presentation");
    }
    auto                  P = st::parse_presentation(text);
    std::vector<st::Word> gens;
    for (auto const& w : subgroup_words) {
      gens.push_back(st::parse_word(P.alphabet(), w, true));
    }
    st::ReidemeisterOptions opts;
    opts.coset_limit = coset_limit;
    opts.max_len     = max_len;
    auto res         = st::reidemeister_subgroup_presentation(P, gens, opts);
    if (json) {
      nlohmann::json j;
      j["presentation"]   = st::to_text(res.presentation);
      j["analysis"]       = st::to_string(res.analysis);
      j["group_order"]    = res.group_order;
      j["subgroup_order"] = res.subgroup_order;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << st::to_text(res.presentation) << "# "
                << st::to_string(res.analysis) << "\n# |G| = "
                << res.group_order << ", |H| = " << res.subgroup_order
                << " (coset-closure oracle)\n";
    }
    return 0;
  }

  if (*cmd_growth) {
    auto S = load_semigroup(input, kb_rules, kb_len);
    if (max_len < growth_n + 4) {
      max_len = growth_n + 4;  // headroom so truncated balls stay exact
    }
    auto E   = st::enumerate(S, max_len);
    auto g_S = st::semigroup_growth(E, growth_n);

    std::optional<st::GrowthHarnessReport> harness;
    std::string                            note;
    try {
      harness = st::regular_growth_theorem_harness(S, E, growth_n);
    } catch (st::Refusal const& r) {
      note = r.what();
    }

    std::cout << "n,g_S,g_graph,g_directed,bound_rhs\n";
    for (size_t n = 0; n <= growth_n; ++n) {
      std::cout << n << "," << g_S.values[n] << ",";
      if (harness && !harness->g_graphs.empty()) {
        std::cout << harness->g_graphs[0].values[n];
      }
      std::cout << ",";
      if (harness && !harness->g_graphs_directed.empty()) {
        std::cout << harness->g_graphs_directed[0].values[n];
      }
      std::cout << ",";
      if (harness) {
        std::cout << harness->rhs[n];
      }
      std::cout << "\n";
    }
    if (harness) {
      std::cout << "# bound " << (harness->bound_holds ? "holds" : "FAILS")
                << " for n <= " << harness->verified_range << "\n";
      if (harness->lhs_degree) {
        std::cout << "# degree estimate (heuristic): g_S ~ n^"
                  << harness->lhs_degree->degree << "\n";
      }
    } else {
      std::cout << "# R-class bound not applicable: " << note << "\n";
    }
    if (!gnuplot_path.empty()) {
      spill(gnuplot_path,
            "set datafile separator \",\"\n"
            "set key autotitle columnhead\n"
            "plot 'growth.csv' using 1:2 with linespoints, \\\n"
            "     'growth.csv' using 1:5 with linespoints\n");
    }
    return 0;
  }

  if (*cmd_stab) {
    auto S = load_semigroup(input, kb_rules, kb_len);
    auto E = st::enumerate(S, max_len);
    auto G = st::green_relations(S, E);
    auto r = r_class_of_word(S, E, G, rclass_word);
    auto A = st::action_on_r_class(E, G, r);
    auto res = st::check_stabilizer_condition(S, E, A, coset_limit);
    switch (res.verdict) {
      case st::StabCheckResult::Verdict::holds:
        std::cout << "holds at vertex " << res.witness_vertex << " ("
                  << res.method << ")"
                  << (res.certified ? "" : " [up to the enumeration bound]")
                  << "\n";
        return res.certified ? 0 : 1;
      case st::StabCheckResult::Verdict::fails_at_bound:
        std::cout << "fails: no vertex admits the certification\n";
        return 1;
      case st::StabCheckResult::Verdict::unknown:
        std::cout << "unknown within the bounds\n";
        return 1;
    }
    return 1;
  }

  if (*cmd_verify) {
    auto S = load_semigroup(input, kb_rules, kb_len);
    auto E = st::enumerate(S, max_len);
    size_t checks = 0, failures = 0;
    auto   report = [&](std::string const& name, bool ok) {
      ++checks;
      failures += ok ? 0 : 1;
      std::cout << (ok ? "  ok: " : "FAIL: ") << name << "\n";
    };
    report("relations hold under evaluation",
           !S.presentation() || !S.check_relations().has_value());
    {
      bool   assoc = true;
      size_t step  = std::max<size_t>(1, E.size() / 12);
      for (size_t a = 0; a < E.size() && assoc; a += step) {
        for (size_t b = 0; b < E.size() && assoc; b += step) {
          for (size_t c = 0; c < E.size() && assoc; c += step) {
            auto ab = S.multiply(E.elements[a], E.elements[b]);
            auto bc = S.multiply(E.elements[b], E.elements[c]);
            if (!ab || !bc) {
              continue;
            }
            auto l = S.multiply(*ab, E.elements[c]);
            auto r = S.multiply(E.elements[a], *bc);
            assoc  = l && r && *l == *r;
          }
        }
      }
      report("associativity on sampled triples", assoc);
    }
    {
      bool mono = true;
      for (size_t l = 1; l < E.level_end.size(); ++l) {
        mono = mono && E.level_end[l] >= E.level_end[l - 1];
      }
      report("enumeration levels are monotone", mono);
    }
    {
      bool wit = true;
      for (size_t i = 0; i < E.size() && wit; ++i) {
        auto e = S.evaluate(E.witnesses[i]);
        wit    = e && *e == E.elements[i];
      }
      report("witness words evaluate to their elements", wit);
    }
    if (E.completeness == st::Completeness::complete) {
      auto G = st::green_relations(S, E);
      {
        bool meet = true;
        for (size_t i = 0; i < E.size() && meet; ++i) {
          for (size_t j = 0; j < E.size() && meet; ++j) {
            meet = (G.h_of[i] == G.h_of[j])
                   == (G.r_of[i] == G.r_of[j] && G.l_of[i] == G.l_of[j]);
          }
        }
        report("H = R meet L", meet);
      }
      {
        bool ok = true;
        for (size_t r = 0; r < G.r_classes.size() && ok; ++r) {
          auto sg = st::schutzenberger_group(S, E, G, r);
          for (auto const& orbit : sg.h_class_orbits) {
            ok = ok && orbit.size() == sg.permutations.size();
          }
          for (auto const& perm : sg.permutations) {
            bool is_id = true;
            for (size_t i = 0; i < perm.size(); ++i) {
              is_id = is_id && perm[i] == static_cast<int32_t>(i);
            }
            if (is_id) {
              continue;
            }
            for (size_t i = 0; i < perm.size(); ++i) {
              ok = ok && perm[i] != static_cast<int32_t>(i);
            }
          }
        }
        report("Schutzenberger groups act freely with |G(R)| = |H|", ok);
      }
    } else {
      std::cout << "  (enumeration " << completeness_name(E.completeness)
                << "; complete-only checks skipped)\n";
    }
    std::cout << checks - failures << "/" << checks << " checks passed\n";
    return failures == 0 ? 0 : 1;
  }

  (void) csv;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (st::Refusal const& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 1;
  } catch (st::ParseError const& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (std::invalid_argument const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
