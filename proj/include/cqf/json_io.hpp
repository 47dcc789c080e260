#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "cqf/qsym.hpp"
#include "cqf/theorem_lab.hpp"

namespace cqf {

using Json = nlohmann::ordered_json;

// Coefficient polynomials are arrays of exact integers, constant term first.
// Within the engine's supported scale every coefficient fits in 64 bits
// (counts are bounded by n! with n <= 20); the conversion checks anyway.

inline Json polynomial_to_json(const QPolynomial& p) {
  Json arr = Json::array();
  if (auto d = p.degree()) {
    for (int i = 0; i <= *d; ++i) {
      const Int& c = p.coeff(i);
      if (c > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("polynomial json: coefficient exceeds 64 bits");
      arr.push_back(c.convert_to<std::int64_t>());
    }
  }
  return arr;
}

inline QPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial json: expected an array");
  QPolynomial p;
  int i = 0;
  for (const auto& entry : j) {
    if (!entry.is_number_integer())
      throw std::invalid_argument("polynomial json: coefficients are integers");
    p += QPolynomial::monomial(i++, Int(entry.get<std::int64_t>()));
  }
  return p;
}

inline Json expansion_to_json(const QSymExpansion& q) {
  Json j;
  j["n"] = q.n();
  if (q.edge_count())
    j["m"] = *q.edge_count();
  else
    j["m"] = nullptr;
  Json coeffs = Json::array();
  for (const auto& [alpha, poly] : q.coeffs()) {
    Json entry;
    entry["alpha"] = alpha;
    entry["poly"] = polynomial_to_json(poly);
    coeffs.push_back(std::move(entry));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

inline QSymExpansion expansion_from_json(const Json& j) {
  QSymExpansion q(j.at("n").get<int>());
  for (const auto& entry : j.at("coeffs")) {
    const auto alpha = entry.at("alpha").get<Composition>();
    q.set_coeff(alpha, polynomial_from_json(entry.at("poly")));
  }
  if (!j.at("m").is_null()) q.set_edge_count(j.at("m").get<int>());
  return q;
}

inline std::string expansion_to_json_text(const QSymExpansion& q) { return expansion_to_json(q).dump(); }

inline QSymExpansion expansion_from_json_text(const std::string& text) {
  return expansion_from_json(Json::parse(text));
}

inline Json graph_to_json(const LabeledGraph& g) {
  Json j;
  j["n"] = g.n;
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  j["edges"] = std::move(edges);
  return j;
}

inline Json symmetry_to_json(const SymmetryResult& r) {
  Json j;
  j["symmetric"] = r.symmetric;
  if (!r.symmetric) {
    j["witness_alpha"] = r.witness_alpha;
    j["witness_beta"] = r.witness_beta;
  }
  return j;
}

inline Json palindromicity_to_json(const PalindromicityResult& r) {
  Json j;
  j["palindromic"] = r.palindromic;
  if (!r.palindromic) {
    j["witness_alpha"] = r.witness_alpha;
    j["witness_power"] = r.witness_power;
  }
  return j;
}

inline Json classification_to_json(const ClassificationReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["symmetric_count"] = rep.symmetric_count;
  j["theorem_confirmed"] = rep.theorem_confirmed;
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["pattern"] = row.pattern;
    r["composition"] = row.composition;
    r["labeling"] = row.labeling;
    r["symmetric"] = row.symmetric;
    r["palindromic"] = row.palindromic;
    r["reads_backward_as"] = row.reversal_isomorphic_pattern;
    if (!row.symmetric) {
      r["symmetry_witness"] = Json::array({row.symmetry.witness_alpha, row.symmetry.witness_beta});
    }
    if (!row.palindromic) {
      r["palindromicity_witness"] =
          Json{{"alpha", row.palindromicity.witness_alpha}, {"power", row.palindromicity.witness_power}};
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline Json star_report_to_json(const StarReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["all_ok"] = rep.all_ok;
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["center"] = row.center;
    r["palindromic"] = row.palindromic;
    r["palindromic_expected"] = row.palindromic_expected;
    r["symmetric"] = row.symmetric;
    r["leaf_coefficients_ok"] = row.leaf_coefficients_ok;
    r["ok"] = row.ok;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline Json bipartite_report_to_json(const BipartiteReport& rep) {
  Json j;
  j["checked"] = rep.checked;
  j["skipped"] = rep.skipped;
  j["all_ok"] = rep.all_ok;
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json r;
    r["index"] = row.index;
    r["n"] = row.n;
    r["m"] = row.m;
    if (row.skipped) {
      r["skipped"] = row.skip_reason;
    } else {
      r["side_a"] = row.side_a;
      r["side_b"] = row.side_b;
      r["r"] = row.r;
      r["s"] = row.s;
      r["single_terms_ok"] = row.single_terms_ok;
      r["nonpalindromic"] = row.nonpalindromic;
      r["ok"] = row.ok;
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

inline Json ribbon_report_to_json(const RibbonDiagram& r) {
  Json j;
  j["composition"] = r.composition();
  j["pattern"] = r.pattern();
  j["cells"] = r.size();
  const auto c = corners(r);
  j["lu_corners"] = c.lu_positions;
  j["rl_corners"] = c.rl_positions;
  const auto reg = is_regular(r);
  j["regular"] = reg.regular;
  if (reg.regular) {
    Json ws = Json::array();
    for (const auto& w : reg.witnesses)
      ws.push_back(Json{{"lower_row", w.lower_row},
                        {"positions", Json::array({w.positions[0], w.positions[1], w.positions[2]})}});
    j["regular_witnesses"] = std::move(ws);
  }
  j["canonical_labeling"] = labeling_with_pattern(r.pattern());
  return j;
}

}  // namespace cqf
