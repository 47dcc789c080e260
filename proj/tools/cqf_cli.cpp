// Command-line front end: compute expansions, sweep classifications, inspect
// ribbons, run the verification harnesses, and emit proof-map witnesses.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cqf/cqf.hpp"

namespace {

using namespace cqf;

Composition parse_composition_arg(std::string s) {
  if (!s.empty() && s.front() != '(') s = "(" + s + ")";
  return composition_from_string(s);
}

// key=value positional tokens ("n=4", "pattern=adad").
bool split_kv(const std::string& token, std::string& key, std::string& value) {
  const auto eq = token.find('=');
  if (eq == std::string::npos || eq == 0) return false;
  key = token.substr(0, eq);
  value = token.substr(eq + 1);
  return true;
}

int require_int_kv(const std::vector<std::string>& tokens, const std::string& want) {
  for (const auto& t : tokens) {
    std::string k, v;
    if (split_kv(t, k, v) && k == want) return std::stoi(v);
  }
  throw std::invalid_argument("missing required argument " + want + "=<int>");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LabeledGraph load_graph(const std::vector<std::string>& tokens, const std::string& file) {
  if (!file.empty() && !tokens.empty())
    throw std::invalid_argument("give the graph inline or with --file, not both");
  if (!file.empty()) return parse_graph_text(read_file(file));
  if (tokens.empty()) throw std::invalid_argument("no graph given (inline tokens or --file)");
  std::string joined;
  for (const auto& t : tokens) {
    if (!joined.empty()) joined += ' ';
    joined += t;
  }
  return parse_graph_text(joined);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string palindromic_phrase(const PalindromicityResult& pal) {
  if (pal.palindromic) return "palindromic: yes";
  return "palindromic: no (witness " + composition_to_string(pal.witness_alpha) + " at q^" +
         std::to_string(pal.witness_power) + ")";
}

std::string symmetric_phrase(const SymmetryResult& sym) {
  if (sym.symmetric) return "symmetric: yes";
  return "symmetric: no (witness " + composition_to_string(sym.witness_alpha) + "/" +
         composition_to_string(sym.witness_beta) + ")";
}

int run_cqf(const std::vector<std::string>& tokens, const std::string& file, bool json, int threads,
            bool allow_large) {
  const LabeledGraph g = load_graph(tokens, file);
  if (g.n > 12 && !allow_large)
    throw std::invalid_argument("n = " + std::to_string(g.n) + " exceeds the documented bound 12 for cqf; pass --allow-large to proceed");
  const QSymExpansion q = cqf::cqf(g, threads);
  const int m = *q.edge_count();
  const auto sym = is_symmetric(q);
  const auto pal = is_palindromic(q, m);
  if (json) {
    Json out;
    out["graph"] = graph_to_json(g);
    out["expansion"] = expansion_to_json(q);
    out["palindromic"] = palindromicity_to_json(pal);
    out["symmetric"] = symmetry_to_json(sym);
    std::cout << out.dump() << "\n";
  } else {
    std::string echo = graph_to_text(g);
    if (echo.empty() || echo.back() != '\n') echo += '\n';
    std::cout << echo;
    std::cout << "n=" << g.n << " m=" << m << "\n";
    std::cout << "X = " << expansion_to_display_string(q) << "\n";
    std::cout << palindromic_phrase(pal) << ", " << symmetric_phrase(sym) << "\n";
  }
  return 0;
}

int run_classify(const std::vector<std::string>& tokens, bool json, int threads, bool allow_large) {
  const int n = require_int_kv(tokens, "n");
  if (n > 9 && !allow_large)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the documented bound 9 for classify; pass --allow-large to proceed");
  const ClassificationReport rep = classify_paths(n, threads);
  if (json) {
    std::cout << classification_to_json(rep).dump() << "\n";
  } else {
    for (const auto& row : rep.rows) {
      std::cout << (row.pattern.empty() ? "(empty)" : row.pattern) << "  "
                << composition_to_string(row.composition) << "  sym=" << yes_no(row.symmetric)
                << " pal=" << yes_no(row.palindromic);
      if (!row.symmetric)
        std::cout << "  witness " << composition_to_string(row.symmetry.witness_alpha) << "/"
                  << composition_to_string(row.symmetry.witness_beta);
      std::cout << "\n";
    }
    std::cout << "symmetric: " << rep.symmetric_count << " of " << rep.rows.size() << "\n";
    std::cout << "expected pattern set confirmed: " << yes_no(rep.theorem_confirmed) << "\n";
  }
  if (!rep.theorem_confirmed) {
    std::cerr << "error: classification sweep contradicts the expected symmetric pattern set\n";
    return 1;
  }
  return 0;
}

int run_ribbon(const std::vector<std::string>& tokens, const std::vector<std::string>& contains,
               const std::vector<std::string>& begins, const std::vector<std::string>& ends, bool json) {
  RibbonDiagram r = RibbonDiagram::from_composition({1});
  bool have = false;
  for (const auto& t : tokens) {
    std::string k, v;
    if (!split_kv(t, k, v)) throw std::invalid_argument("unrecognized token: " + t);
    if (k == "pattern") {
      r = RibbonDiagram::from_pattern(v);
      have = true;
    } else if (k == "composition") {
      r = RibbonDiagram::from_composition(parse_composition_arg(v));
      have = true;
    } else {
      throw std::invalid_argument("unrecognized key: " + k);
    }
  }
  if (!have) throw std::invalid_argument("ribbon needs pattern=<word> or composition=(...)");

  struct Query {
    std::string label;
    Composition beta;
    SubribbonAnchor anchor;
  };
  std::vector<Query> queries;
  for (const auto& s : contains) queries.push_back({"contains", parse_composition_arg(s), SubribbonAnchor::anywhere});
  for (const auto& s : begins) queries.push_back({"begins with", parse_composition_arg(s), SubribbonAnchor::begins});
  for (const auto& s : ends) queries.push_back({"ends with", parse_composition_arg(s), SubribbonAnchor::ends});

  if (json) {
    Json out = ribbon_report_to_json(r);
    Json qs = Json::array();
    for (const auto& q : queries) {
      Json one;
      one["query"] = q.label;
      one["beta"] = q.beta;
      Json at = Json::array();
      for (const auto& hit : find_subribbon(r, q.beta, q.anchor)) at.push_back(hit.start_position);
      one["matches"] = std::move(at);
      qs.push_back(std::move(one));
    }
    out["queries"] = std::move(qs);
    std::cout << out.dump() << "\n";
    return 0;
  }

  std::cout << render_diagram(r);
  std::cout << "composition: " << composition_to_string(r.composition()) << "\n";
  std::cout << "pattern: " << (r.pattern().empty() ? "(empty)" : r.pattern()) << "\n";
  std::cout << "cells: " << r.size() << "\n";
  const auto c = corners(r);
  auto list = [](const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };
  std::cout << "LU corners: " << c.lu_count() << " (cells " << list(c.lu_positions) << ")\n";
  std::cout << "RL corners: " << c.rl_count() << " (cells " << list(c.rl_positions) << ")\n";
  const auto reg = is_regular(r);
  std::cout << "regular: " << yes_no(reg.regular);
  if (reg.regular) {
    std::cout << " (witness cells";
    for (const auto& w : reg.witnesses)
      std::cout << " [" << w.positions[0] << "," << w.positions[1] << "," << w.positions[2] << "]";
    std::cout << ")";
  }
  std::cout << "\n";
  std::cout << "canonical labeling: ";
  const auto lab = labeling_with_pattern(r.pattern());
  for (std::size_t i = 0; i < lab.size(); ++i) std::cout << (i ? " " : "") << lab[i];
  std::cout << "\n";
  for (const auto& q : queries) {
    const auto hits = find_subribbon(r, q.beta, q.anchor);
    std::cout << q.label << " " << composition_to_string(q.beta) << ": "
              << (hits.empty() ? "no" : "yes");
    if (!hits.empty()) {
      std::cout << " (at cell";
      for (const auto& hit : hits) std::cout << " " << hit.start_position;
      std::cout << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

int run_verify_star(const std::vector<std::string>& tokens, bool json, int threads) {
  const int n = require_int_kv(tokens, "n");
  const StarReport rep = verify_star(n, threads);
  if (json) {
    std::cout << star_report_to_json(rep).dump() << "\n";
  } else {
    for (const auto& row : rep.rows)
      std::cout << "center " << row.center << ": palindromic " << yes_no(row.palindromic)
                << " (expected " << yes_no(row.palindromic_expected) << "), symmetric "
                << yes_no(row.symmetric) << ", leaf coefficients " << (row.leaf_coefficients_ok ? "ok" : "WRONG")
                << (row.ok ? "" : "  <-- FAIL") << "\n";
    std::cout << "all ok: " << yes_no(rep.all_ok) << "\n";
  }
  if (!rep.all_ok) {
    std::cerr << "error: star verification failed for n=" << n << "\n";
    return 1;
  }
  return 0;
}

int run_verify_bipartite(const std::vector<std::string>& tokens, const std::string& file, int random_count,
                         unsigned seed, int max_n, bool json, int threads) {
  std::vector<LabeledGraph> samples;
  if (random_count > 0) {
    if (max_n < 2) throw std::invalid_argument("--max-n must be at least 2");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick_n(2, max_n);
    for (int i = 0; i < random_count; ++i) samples.push_back(random_labeled_tree(pick_n(rng), rng));
  } else {
    samples.push_back(load_graph(tokens, file));
  }
  const BipartiteReport rep = verify_bipartite(samples, threads);
  if (json) {
    std::cout << bipartite_report_to_json(rep).dump() << "\n";
  } else {
    for (const auto& row : rep.rows) {
      std::cout << "#" << row.index << " n=" << row.n << " m=" << row.m << ": ";
      if (row.skipped) {
        std::cout << "skipped (" << row.skip_reason << ")\n";
      } else {
        std::cout << "sides " << row.side_a << "/" << row.side_b << ", c=(q^" << row.r << ", q^" << row.s
                  << "), nonpalindromic " << yes_no(row.nonpalindromic) << (row.ok ? "" : "  <-- FAIL")
                  << "\n";
      }
    }
    std::cout << "checked " << rep.checked << ", skipped " << rep.skipped << ", all ok: "
              << yes_no(rep.all_ok) << "\n";
  }
  if (!rep.all_ok) {
    std::cerr << "error: bipartite verification failed\n";
    return 1;
  }
  return 0;
}

Json tableau_to_json(const RibbonTableau& t) {
  Json j;
  j["composition"] = t.shape.composition();
  j["colors"] = t.colors;
  return j;
}

int run_witness(const std::vector<std::string>& tokens, bool json) {
  if (tokens.empty()) throw std::invalid_argument("witness needs a map name: zeta or psi");
  const std::string which = tokens.front();
  std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
  Composition comp;
  int i = 0, b = 0;
  for (const auto& t : rest) {
    std::string k, v;
    if (!split_kv(t, k, v)) throw std::invalid_argument("unrecognized token: " + t);
    if (k == "composition")
      comp = parse_composition_arg(v);
    else if (k == "pattern")
      comp = composition_from_pattern(v);
    else if (k == "i")
      i = std::stoi(v);
    else if (k == "b")
      b = std::stoi(v);
    else
      throw std::invalid_argument("unrecognized key: " + k);
  }
  if (comp.empty()) throw std::invalid_argument("witness needs composition=(...) or pattern=<word>");
  const RibbonDiagram r = RibbonDiagram::from_composition(comp);

  if (which == "zeta") {
    if (i == 0) i = 1;  // first adjacent row pair
    if (b == 0) b = admissible_b_interval(r, i).first;
    const ZetaSets sets = build_zeta_sets(r, i, b);
    const RibbonTableau extra = bprime_minus_b_witness(r, i, b);
    if (json) {
      Json out;
      out["composition"] = comp;
      out["i"] = i;
      out["b"] = b;
      out["sizes"] = Json{{"A", sets.a.size()}, {"B", sets.b_set.size()}, {"Bprime", sets.b_prime.size()}};
      out["example_input"] = tableau_to_json(sets.a.members.front());
      out["example_image"] = tableau_to_json(zeta(sets.a.members.front(), b));
      out["bprime_minus_b_member"] = tableau_to_json(extra);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "ribbon " << composition_to_string(comp) << ", rows " << i << "," << i + 1
                << ", repeated color b=" << b << "\n";
      std::cout << "|A|=" << sets.a.size() << " |B|=" << sets.b_set.size()
                << " |B'|=" << sets.b_prime.size() << "\n";
      std::cout << "example member of A:\n" << render_tableau(sets.a.members.front());
      std::cout << "its image in B':\n" << render_tableau(zeta(sets.a.members.front(), b));
      std::cout << "member of B' outside B (adjacent repeated color in the joining column):\n"
                << render_tableau(extra);
    }
    return 0;
  }

  if (which == "psi") {
    const PsiWitness w = psi_nonsurjectivity_witness(r);
    const ColoringSet bset = build_set_B(r, 2);
    const ColoringSet aset = build_set_A(r);
    if (json) {
      Json out;
      out["composition"] = comp;
      out["sizes"] = Json{{"A", aset.size()}, {"B", bset.size()}};
      out["unreached_member_of_A"] = tableau_to_json(w.tableau);
      out["regular_subribbon_cells"] =
          Json::array({w.subribbon.positions[0], w.subribbon.positions[1], w.subribbon.positions[2]});
      if (!bset.members.empty()) {
        out["example_input"] = tableau_to_json(bset.members.front());
        out["example_image"] = tableau_to_json(psi(bset.members.front()));
      }
      std::cout << out.dump() << "\n";
    } else {
      std::cout << "ribbon " << composition_to_string(comp) << ", |A|=" << aset.size()
                << " |B|=" << bset.size() << "\n";
      if (!bset.members.empty()) {
        std::cout << "example member of B:\n" << render_tableau(bset.members.front());
        std::cout << "its image in A:\n" << render_tableau(psi(bset.members.front()));
      }
      std::cout << "member of A no input reaches (its 2 touches two 1s):\n" << render_tableau(w.tableau);
    }
    return 0;
  }

  throw std::invalid_argument("unknown witness map: " + which + " (expected zeta or psi)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromatic quasisymmetric functions of labeled graphs"};
  app.require_subcommand(1);

  bool json = false;
  int threads = cqf::default_worker_count();
  bool allow_large = false;
  app.add_flag("--json", json, "emit JSON instead of text");
  app.add_option("--threads", threads, "worker count (default: CQF_THREADS env var, else 1)");
  app.add_flag("--allow-large", allow_large, "lift the documented size bounds");

  auto* sub_cqf = app.add_subcommand("cqf", "expansion and verdicts for a graph");
  std::vector<std::string> cqf_tokens;
  std::string cqf_file;
  sub_cqf->add_option("tokens", cqf_tokens, "inline graph, e.g.  path: 3 4 1 2");
  sub_cqf->add_option("--file", cqf_file, "read the graph from a file");

  auto* sub_classify = app.add_subcommand("classify", "sweep every path labeling pattern of size n");
  std::vector<std::string> classify_tokens;
  sub_classify->add_option("tokens", classify_tokens, "n=<int>");

  auto* sub_ribbon = app.add_subcommand("ribbon", "inspect a ribbon diagram");
  std::vector<std::string> ribbon_tokens;
  std::vector<std::string> q_contains, q_begins, q_ends;
  sub_ribbon->add_option("tokens", ribbon_tokens, "pattern=<word> or composition=(...)");
  sub_ribbon->add_option("--contains", q_contains, "sub-ribbon shape to search for");
  sub_ribbon->add_option("--begins", q_begins, "shape the ribbon should begin with");
  sub_ribbon->add_option("--ends", q_ends, "shape the ribbon should end with");

  auto* sub_star = app.add_subcommand("verify-star", "check the star-graph facts for every center");
  std::vector<std::string> star_tokens;
  sub_star->add_option("tokens", star_tokens, "n=<int>");

  auto* sub_bip = app.add_subcommand("verify-bipartite", "check the bipartite single-term facts");
  std::vector<std::string> bip_tokens;
  std::string bip_file;
  int bip_random = 0;
  unsigned bip_seed = 1;
  int bip_max_n = 10;
  sub_bip->add_option("tokens", bip_tokens, "inline graph (as for cqf)");
  sub_bip->add_option("--file", bip_file, "read the graph from a file");
  sub_bip->add_option("--random", bip_random, "verify this many random labeled trees instead");
  sub_bip->add_option("--seed", bip_seed, "random seed");
  sub_bip->add_option("--max-n", bip_max_n, "largest random tree size");

  auto* sub_wit = app.add_subcommand("witness", "emit proof-map example tableaux");
  std::vector<std::string> wit_tokens;
  sub_wit->add_option("tokens", wit_tokens, "zeta|psi composition=(...) [i=<row>] [b=<color>]");

  for (auto* s : {sub_cqf, sub_classify, sub_ribbon, sub_star, sub_bip, sub_wit}) s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sub_cqf->parsed()) return run_cqf(cqf_tokens, cqf_file, json, threads, allow_large);
    if (sub_classify->parsed()) return run_classify(classify_tokens, json, threads, allow_large);
    if (sub_ribbon->parsed()) return run_ribbon(ribbon_tokens, q_contains, q_begins, q_ends, json);
    if (sub_star->parsed()) return run_verify_star(star_tokens, json, threads);
    if (sub_bip->parsed())
      return run_verify_bipartite(bip_tokens, bip_file, bip_random, bip_seed, bip_max_n, json, threads);
    if (sub_wit->parsed()) return run_witness(wit_tokens, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
