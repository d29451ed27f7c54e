// Command line front end.  One binary, subcommand style; every run is
// deterministic given its inputs, configuration and seed.  Exit codes:
// 0 success, 1 domain errors, 2 usage errors.

#ifndef STRALG_CLI_HPP_
#define STRALG_CLI_HPP_

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "audit.hpp"
#include "json_io.hpp"

namespace stralg::cli {

struct SessionConfig {
  std::string field = "rational";  // rational | fp
  long long modulus = 0;
  std::string partition_override;
  std::uint64_t seed = 1;
  std::string format = "text";  // text | json | dot
};

inline std::string slurp(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  auto text = os.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos)
    throw CLI::ValidationError("empty algebra file " + path);
  return text;
}

inline AlgebraPresentation load_algebra(std::string const& path) {
  auto A = parse_algebra(slurp(path));
  auto violations = validate_string_algebra(A);
  if (!violations.empty())
    throw std::invalid_argument("not a string algebra: " +
                                violations[0].axiom + " (" +
                                violations[0].detail + ")");
  return A;
}

// Partition override grammar: "vertex:letter=+,letter=-;vertex:..."
inline void apply_partition_override(AlgebraPresentation const& A,
                                     HPartition& H, std::string const& spec) {
  std::istringstream groups(spec);
  std::string group;
  while (std::getline(groups, group, ';')) {
    auto colon = group.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("partition override needs 'vertex:...'");
    std::string vertex = group.substr(0, colon);
    if (!A.has_vertex(vertex))
      throw std::invalid_argument("unknown vertex " + vertex);
    std::istringstream entries(group.substr(colon + 1));
    std::string entry;
    while (std::getline(entries, entry, ',')) {
      auto eq = entry.rfind('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("partition entry needs 'letter=+/-'");
      auto letters = parse_letters(entry.substr(0, eq));
      if (letters.size() != 1)
        throw std::invalid_argument("one letter per partition entry");
      std::string side = entry.substr(eq + 1);
      H.set(vertex, letters[0], side == "+" || side == "+1" ? 1 : -1);
    }
  }
  // re-check validity vertex by vertex
  for (auto const& v : A.vertices()) {
    auto letters = entering_letters(A, v.id);
    std::vector<int> sides;
    for (auto const& l : letters) sides.push_back(H.side(v.id, l));
    if (!valid_local_assignment(A, letters, sides))
      throw std::invalid_argument("partition override invalid at vertex " +
                                  v.id);
  }
}

inline FiniteWord parse_cli_word(AlgebraPresentation const& A,
                                 std::string const& text,
                                 std::optional<std::string> const& at,
                                 int sign) {
  auto letters = parse_letters(text == "1" ? "" : text);
  if (letters.empty()) {
    if (!at) throw std::invalid_argument("empty word needs --at <vertex>");
    return FiniteWord(*at, sign);
  }
  return FiniteWord(A, left_vertex(A, letters[0]), letters);
}

template <typename K>
PointedElement<K> parse_element(FDModule<K> const& M, std::string const& vertex,
                                std::string const& coords,
                                K (*parse)(std::string const&)) {
  std::vector<K> out;
  std::istringstream in(coords);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(parse(tok));
  if (out.size() != M.dim(vertex))
    throw std::invalid_argument("expected " + std::to_string(M.dim(vertex)) +
                                " coordinates at vertex " + vertex);
  return {vertex, std::move(out)};
}

inline std::string chain_word_str(ChainWord const& w) { return chain_str(w); }

// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"string algebra workbench"};
  app.require_subcommand(1);
  SessionConfig cfg;
  if (char const* env = std::getenv("STRALG_FIELD")) cfg.field = env;
  app.add_option("--field", cfg.field, "scalar field: rational or fp")
      ->check(CLI::IsMember({"rational", "fp"}));
  app.add_option("--modulus", cfg.modulus, "prime modulus for --field fp");
  app.add_option("--partition", cfg.partition_override,
                 "H partition override, e.g. '1:b=+,b^-1=+,a=-,a^-1=-'");
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  std::string file, word_text, word2_text, left_text, right_text;
  std::string module_path, element_text, vertex, lambda_text = "1";
  std::string at, lambdas_text = "1,2";
  std::size_t max_len = 24, layers = 1, node = 0, level = 2;
  std::size_t prefix_bound = 3, middle_bound = 2;
  bool oracle = false, use_node = false;
  int sign = 1;
  AuditConfig audit_cfg;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "algebra file")->required();
  };

  auto* c_validate = app.add_subcommand("validate", "check the axioms");
  add_file(c_validate);
  auto* c_bands = app.add_subcommand("bands", "enumerate bands");
  add_file(c_bands);
  c_bands->add_option("--max-len", max_len, "length bound");
  auto* c_domestic = app.add_subcommand("domestic", "decide domesticity");
  add_file(c_domestic);
  auto* c_bridge = app.add_subcommand("bridge", "bridge quiver");
  add_file(c_bridge);

  auto* c_module = app.add_subcommand("module", "build a module");
  auto* c_mstring = c_module->add_subcommand("string", "string module");
  add_file(c_mstring);
  c_mstring->add_option("--word", word_text, "the word")->required();
  c_mstring->add_option("--at", at, "anchor vertex for the empty word");
  c_mstring->add_option("--sign", sign, "sign of the empty word");
  auto* c_mband = c_module->add_subcommand("band", "band module");
  add_file(c_mband);
  c_mband->add_option("--band", word_text, "the band word")->required();
  c_mband->add_option("--lambda", lambda_text, "the parameter");
  c_mband->add_option("--layers", layers, "number of layers");

  auto add_element_opts = [&](CLI::App* cmd) {
    cmd->add_option("--module", module_path, "module JSON file");
    cmd->add_option("--string", word2_text, "build the string module of this word");
    cmd->add_option("--node", node, "basis node of the string module");
    cmd->add_option("--vertex", vertex, "vertex of the element");
    cmd->add_option("--element", element_text, "comma separated coordinates");
  };

  auto* c_pp = app.add_subcommand("pp", "pp divisibility subspace");
  add_file(c_pp);
  add_element_opts(c_pp);
  c_pp->add_option("--left", left_text, "left word C ('1' for empty)");
  c_pp->add_option("--right", right_text, "right word D ('1' for empty)");
  c_pp->add_option("--at", at, "anchor vertex for empty words");

  auto* c_wordof = app.add_subcommand("word-of", "word of an element");
  add_file(c_wordof);
  add_element_opts(c_wordof);

  auto* c_homog = app.add_subcommand("homog", "homogeneity of an element");
  add_file(c_homog);
  add_element_opts(c_homog);

  auto* c_hom = app.add_subcommand("hom", "graph map basis between string modules");
  add_file(c_hom);
  c_hom->add_option("u", word_text, "source word")->required();
  c_hom->add_option("v", word2_text, "target word")->required();
  c_hom->add_option("--u-at", at, "anchor when the source word is empty");
  std::string at2;
  c_hom->add_option("--v-at", at2, "anchor when the target word is empty");

  auto* c_ringel = app.add_subcommand("ringel", "the pure injective descriptors");
  auto* c_rlist = c_ringel->add_subcommand("list", "enumerate descriptors");
  add_file(c_rlist);
  c_rlist->add_option("--prefix-bound", prefix_bound, "prefix length bound");
  c_rlist->add_option("--middle-bound", middle_bound, "middle part bound");
  c_rlist->add_option("--lambda", lambdas_text, "comma separated samples");
  auto* c_rtrunc = c_ringel->add_subcommand("truncate", "truncate a word");
  add_file(c_rtrunc);
  c_rtrunc->add_option("--word", word_text, "two-sided word")->required();
  c_rtrunc->add_option("--level", level, "periods per tail");
  auto* c_rpp = c_ringel->add_subcommand("pp", "pp-type membership");
  add_file(c_rpp);
  c_rpp->add_option("--word", word_text, "two-sided word")->required();
  c_rpp->add_option("--left", left_text, "C1")->required();
  c_rpp->add_option("--right", right_text, "D1")->required();
  c_rpp->add_flag("--oracle", oracle, "cross-check with the truncation oracle");
  auto* c_rclassify = c_ringel->add_subcommand("classify", "classify a formula");
  add_file(c_rclassify);
  c_rclassify->add_option("--word", word_text, "two-sided word")->required();
  c_rclassify->add_option("--string", word2_text, "pointed string module word")
      ->required();
  c_rclassify->add_option("--node", node, "basis node carrying the point");
  c_rclassify->add_flag("--use-node", use_node, "point at --node");
  c_rclassify->add_option("--element", element_text, "coordinates at the anchor");
  c_rclassify->add_flag("--oracle", oracle, "cross-check with the oracle");

  auto* c_audit = app.add_subcommand("audit", "run all property suites");
  add_file(c_audit);
  c_audit->add_option("--word-len", audit_cfg.word_len, "sweep word length");
  c_audit->add_option("--order-triples", audit_cfg.order_triples, "order law samples");
  c_audit->add_option("--triangle-cases", audit_cfg.triangle_cases, "triangle samples");
  c_audit->add_option("--homog-len", audit_cfg.homog_len, "homogeneity word length");
  c_audit->add_option("--hom-len", audit_cfg.hom_len, "hom sweep word length");
  c_audit->add_option("--string-bound", audit_cfg.string_bound, "band fact bound");

  try {
    std::vector<char*> argv;
    std::string name = "stralg";
    argv.push_back(name.data());
    for (auto& a : args) argv.push_back(a.data());
    app.parse(int(argv.size()), argv.data());
  } catch (CLI::ParseError const& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  using K = Rational;  // module arithmetic; fp selected below where supported
  try {
    if (cfg.field == "fp") {
      if (cfg.modulus == 0)
        throw std::invalid_argument("--field fp needs --modulus");
      Fp::set_modulus(cfg.modulus);
    }
    bool json_out = cfg.format == "json";

    auto load = [&]() {
      auto A = load_algebra(file);
      return A;
    };
    auto partition = [&](AlgebraPresentation const& A) {
      auto H = compute_h_partition(A);
      if (!cfg.partition_override.empty())
        apply_partition_override(A, H, cfg.partition_override);
      return H;
    };
    auto load_module = [&](AlgebraPresentation const& A) -> FDModule<K> {
      if (!module_path.empty()) {
        std::ifstream in(module_path);
        if (!in) throw std::invalid_argument("cannot open " + module_path);
        json j;
        in >> j;
        return module_from_json<K>(A, j, &parse_rational);
      }
      if (word2_text.empty())
        throw std::invalid_argument("need --module or --string");
      return string_module<K>(A, parse_cli_word(A, word2_text, std::nullopt, 1))
          .module();
    };
    auto load_point = [&](AlgebraPresentation const& A,
                          FDModule<K> const& M) -> PointedElement<K> {
      if (!element_text.empty()) {
        if (vertex.empty())
          throw std::invalid_argument("--element needs --vertex");
        return parse_element(M, vertex, element_text, &parse_rational);
      }
      if (word2_text.empty())
        throw std::invalid_argument("--node needs --string");
      StringModule<K> SM(A, parse_cli_word(A, word2_text, std::nullopt, 1));
      return SM.basis_element(node);
    };

    if (*c_validate) {
      auto A = parse_algebra(slurp(file));
      auto violations = validate_string_algebra(A);
      if (json_out) {
        json j;
        j["algebra"] = A.name();
        j["valid"] = violations.empty();
        j["violations"] = json::array();
        for (auto const& v : violations)
          j["violations"].push_back({{"axiom", v.axiom}, {"detail", v.detail}});
        out << j.dump(2) << "\n";
      } else if (violations.empty()) {
        out << "valid string algebra: " << A.name() << "\n";
      } else {
        for (auto const& v : violations)
          out << "violation: " << v.axiom << " (" << v.detail << ")\n";
      }
      return violations.empty() ? 0 : 1;
    }

    if (*c_bands) {
      auto A = load();
      auto bs = enumerate_bands(A, max_len);
      auto dom = is_domestic(A);
      if (json_out) {
        out << to_json(bs, dom).dump(2) << "\n";
      } else {
        for (auto const& b : bs.bands) out << b.str() << "\n";
        if (bs.truncated) out << "(truncated at length " << max_len << ")\n";
      }
      return 0;
    }

    if (*c_domestic) {
      auto A = load();
      auto dom = is_domestic(A);
      if (json_out) {
        auto bs = enumerate_bands(A, max_len);
        out << to_json(bs, dom).dump(2) << "\n";
      } else if (dom.domestic) {
        out << "Domestic(" << dom.n << ")\n";
      } else {
        auto word = [](std::vector<Letter> const& ls) {
          std::string s;
          for (auto const& l : ls) s += (s.empty() ? "" : " ") + l.str();
          return s;
        };
        out << "NonDomestic(" << word(dom.witness_a) << " / "
            << word(dom.witness_b) << ")\n";
      }
      return 0;
    }

    if (*c_bridge) {
      auto A = load();
      auto q = bridge_quiver(A);
      if (cfg.format == "dot") {
        out << q.dot(A);
      } else if (json_out) {
        out << to_json(q).dump(2) << "\n";
      } else {
        for (auto const& c : q.covers) {
          std::string u;
          for (auto const& l : c.witness) u += (u.empty() ? "" : " ") + l.str();
          out << q.bands[c.from].str() << "  <  " << q.bands[c.to].str()
              << "   (bridge: " << (u.empty() ? "<empty>" : u) << ")\n";
        }
        if (q.covers.empty()) out << "antichain on " << q.bands.size()
                                  << " bands\n";
      }
      return 0;
    }

    if (*c_mstring || *c_mband) {
      auto A = load();
      if (*c_mstring) {
        auto w = parse_cli_word(A, word_text,
                                at.empty() ? std::nullopt
                                           : std::optional<std::string>(at),
                                sign);
        StringModule<K> SM(A, w);
        out << to_json(SM.module()).dump(2) << "\n";
      } else {
        Band b(A, parse_letters(word_text));
        auto lam = parse_rational(lambda_text);
        auto B = band_module<K>(A, b, lam, layers);
        out << to_json(B.module()).dump(2) << "\n";
      }
      return 0;
    }

    if (*c_pp) {
      auto A = load();
      auto H = partition(A);
      auto M = load_module(A);
      std::optional<FiniteWord> C, D;
      auto anchor = at.empty() ? std::optional<std::string>() \
                               : std::optional<std::string>(at);
      if (!left_text.empty())
        C = parse_cli_word(A, left_text, anchor, -1);
      if (!right_text.empty())
        D = parse_cli_word(A, right_text, anchor, +1);
      if (!C && !D) throw std::invalid_argument("need --left and/or --right");
      PPWordFormula f{C, D};
      auto sub = pp_subspace(A, H, M, f);
      json j;
      j["formula"] = f.str();
      j["dim"] = sub.dim();
      j["basis"] = json::array();
      for (auto const& b : sub.basis()) {
        json row = json::array();
        for (auto const& x : b) row.push_back(to_string(x));
        j["basis"].push_back(row);
      }
      if (json_out)
        out << j.dump(2) << "\n";
      else
        out << f.str() << ": subspace of dimension " << sub.dim() << "\n";
      return 0;
    }

    if (*c_wordof) {
      auto A = load();
      auto H = partition(A);
      auto M = load_module(A);
      auto m = load_point(A, M);
      auto w = word_of(A, H, M, m);
      if (json_out) {
        json j;
        j["u"] = w.u().str();
        j["v"] = w.v().str();
        j["word"] = w.str();
        j["periodic"] = w.periodic();
        out << j.dump(2) << "\n";
      } else {
        out << "u = " << w.u().str() << "\nv = " << w.v().str() << "\nw = "
            << w.str() << (w.periodic() ? "   (periodic)" : "") << "\n";
      }
      return 0;
    }

    if (*c_homog) {
      auto A = load();
      auto H = partition(A);
      auto M = load_module(A);
      auto m = load_point(A, M);
      auto r = is_homogeneous(A, H, M, m);
      if (json_out) {
        json j;
        j["homogeneous"] = r.homogeneous;
        if (!r.homogeneous) {
          json x = json::array();
          for (auto const& c : r.witness->coords) x.push_back(to_string(c));
          j["witness"] = x;
        }
        out << j.dump(2) << "\n";
      } else if (r.homogeneous) {
        out << "Homogeneous\n";
      } else {
        out << "Decomposition(";
        for (std::size_t i = 0; i < r.witness->coords.size(); ++i)
          out << (i ? "," : "") << to_string(r.witness->coords[i]);
        out << ")\n";
      }
      return 0;
    }

    if (*c_hom) {
      auto A = load();
      auto u = parse_cli_word(A, word_text,
                              at.empty() ? std::nullopt
                                         : std::optional<std::string>(at),
                              1);
      auto v = parse_cli_word(A, word2_text,
                              at2.empty() ? std::nullopt
                                          : std::optional<std::string>(at2),
                              1);
      auto Mu = string_module<K>(A, u);
      auto Mv = string_module<K>(A, v);
      auto triples = admissible_triples(A, u, v);
      auto oracle_count = hom_dimension_oracle(Mu.module(), Mv.module());
      json j;
      j["triples"] = json::array();
      for (auto const& t : triples)
        j["triples"].push_back({{"u_from", t.u_from},
                                {"u_to", t.u_to},
                                {"v_from", t.v_from},
                                {"v_to", t.v_to},
                                {"reversed", t.reversed}});
      j["count"] = triples.size();
      j["oracle_count"] = oracle_count;
      if (json_out) {
        out << j.dump(2) << "\n";
      } else {
        for (auto const& t : triples)
          out << "u[" << t.u_from << ".." << t.u_to << "] -> v[" << t.v_from
              << ".." << t.v_to << "]" << (t.reversed ? " reversed" : "")
              << "\n";
        out << "count " << triples.size() << ", oracle " << oracle_count
            << "\n";
      }
      return triples.size() == oracle_count ? 0 : 1;
    }

    if (*c_rlist) {
      auto A = load();
      auto H = partition(A);
      RingelListOptions opt;
      opt.prefix_bound = prefix_bound;
      opt.middle_bound = middle_bound;
      opt.lambda_samples.clear();
      std::istringstream in(lambdas_text);
      std::string tok;
      while (std::getline(in, tok, ',')) opt.lambda_samples.push_back(tok);
      auto list = enumerate_ringel_list(A, H, opt);
      if (json_out) {
        json j = json::array();
        for (auto const& d : list) j.push_back(to_json(d));
        out << j.dump(2) << "\n";
      } else {
        for (auto const& d : list) out << d.str() << "\n";
      }
      return 0;
    }

    if (*c_rtrunc) {
      auto A = load();
      auto H = partition(A);
      auto w = parse_two_sided(A, H, word_text);
      auto t = truncate(A, w, level);
      if (cfg.format == "dot") {
        out << string_diagram_dot(A, t.word, t.anchor_node);
      } else if (json_out) {
        json j;
        j["word"] = t.word.str();
        j["anchor_node"] = t.anchor_node;
        out << j.dump(2) << "\n";
      } else {
        out << t.word.str() << "   (anchor at node " << t.anchor_node << ")\n";
      }
      return 0;
    }

    if (*c_rpp) {
      auto A = load();
      auto H = partition(A);
      auto w = parse_two_sided(A, H, word_text);
      auto C1 = parse_cli_word(A, left_text,
                               std::optional<std::string>(w.anchor()), -1);
      auto D1 = parse_cli_word(A, right_text,
                               std::optional<std::string>(w.anchor()), +1);
      auto v = pp_member(A, H, w, C1, D1);
      json j;
      j["verdict"] = to_string(v);
      if (oracle) {
        auto o = truncation_oracle_formula<K>(A, H, w,
                                              PPWordFormula::both(C1, D1));
        j["oracle"] = to_string(o);
        j["agree"] = o == v;
      }
      if (json_out)
        out << j.dump(2) << "\n";
      else {
        out << to_string(v) << "\n";
        if (oracle) out << "oracle: " << j["oracle"].get<std::string>() << "\n";
      }
      return 0;
    }

    if (*c_rclassify) {
      auto A = load();
      auto H = partition(A);
      auto w = parse_two_sided(A, H, word_text);
      StringModule<K> L(A, parse_cli_word(A, word2_text, std::nullopt, 1));
      PointedElement<K> l =
          use_node ? L.basis_element(node)
                   : parse_element(L.module(), w.anchor(), element_text,
                                   &parse_rational);
      auto v = classify_formula<K>(A, H, w, &L, l);
      json j;
      j["verdict"] = to_string(v);
      if (oracle) {
        auto o = truncation_oracle_pointed(A, H, w, L.module(), l);
        j["oracle"] = to_string(o);
        j["agree"] = o == v;
      }
      if (json_out)
        out << j.dump(2) << "\n";
      else {
        out << to_string(v) << "\n";
        if (oracle) out << "oracle: " << j["oracle"].get<std::string>() << "\n";
      }
      return 0;
    }

    if (*c_audit) {
      auto A = parse_algebra(slurp(file));
      audit_cfg.seed = cfg.seed;
      std::vector<SuiteResult> results;
      if (cfg.field == "fp")
        results = run_audit<Fp>(A, audit_cfg);
      else
        results = run_audit<K>(A, audit_cfg);
      bool all = true;
      for (auto const& r : results) all = all && (r.pass || r.skipped);
      if (json_out) {
        json j;
        j["algebra"] = A.name();
        j["seed"] = audit_cfg.seed;
        j["suites"] = json::array();
        for (auto const& r : results)
          j["suites"].push_back({{"suite", r.suite},
                                 {"pass", r.pass},
                                 {"skipped", r.skipped},
                                 {"checks", r.checks},
                                 {"detail", r.detail}});
        j["pass"] = all;
        out << j.dump(2) << "\n";
      } else {
        out << render_audit_text(A.name(), results, audit_cfg);
      }
      return all ? 0 : 1;
    }

    err << "no subcommand\n";
    return 2;
  } catch (CLI::ValidationError const& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (ParseError const& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (WordError const& e) {
    err << "word error: " << e.what() << "\n";
    return 1;
  } catch (NonDomesticError const& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (std::invalid_argument const& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (std::logic_error const& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace stralg::cli

#endif
