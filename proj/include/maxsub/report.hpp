#pragma once

// JSON views of every report. Scalars are strings in the field's text form,
// matrices are row arrays of scalars, polynomials are low-to-high coefficient
// arrays. Keys keep insertion order so output is byte-stable.

#include <json.hpp>

#include "maxsub/algebra.hpp"
#include "maxsub/capelli.hpp"
#include "maxsub/gri.hpp"
#include "maxsub/witness.hpp"

namespace maxsub::report {

using Json = nlohmann::ordered_json;

inline Json to_json(const Scalar& s) { return s.to_string(); }

inline Json to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

inline Json to_json(const Polynomial& p) { return to_json(p.coeffs()); }

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

inline Json to_json(const AlgebraElement& x) {
  return Json{{"coords", to_json(x.coords())}, {"text", x.to_string()}};
}

inline Json degree_json(const DegreeReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["method"] = "gn+minpoly";
  j["minpoly_degree"] = r.minpoly_degree;
  j["agree"] = r.degree == r.minpoly_degree;
  if (r.lower_witness) {
    j["witness"] = Json{{"n", r.degree - 1}, {"trial", r.lower_witness->witness_trial}, {"ys", to_json(r.lower_witness->witness)},
                        {"value", to_json(*r.lower_witness->value)}};
  } else {
    j["witness"] = nullptr;
  }
  j["probabilistic"] = r.probabilistic;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  return j;
}

inline Json identity_json(const gri::IdentityReport& r) {
  Json j;
  j["zero"] = r.zero;
  j["nonzero"] = r.nonzero;
  j["not_permissible"] = r.not_permissible;
  if (r.certificate) {
    Json bindings = Json::object();
    for (const auto& [name, m] : r.certificate->bindings) bindings[name] = to_json(m);
    j["certificate"] = Json{{"trial", r.certificate->trial}, {"bindings", bindings}, {"value", to_json(r.certificate->value)}};
  } else {
    j["certificate"] = nullptr;
  }
  j["verdict"] = r.verdict();
  j["field"] = r.field.spec();
  j["size"] = r.size;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  return j;
}

inline Json witness_json(const WitnessReport& r, std::uint64_t seed) {
  Json j;
  j["kind"] = kind_name(r.params.kind);
  j["n"] = r.params.n;
  j["field"] = r.A.field().spec();
  j["params"] = Json{{"a", to_json(r.params.a)}, {"b", to_json(r.params.b)}, {"fixed_pair", r.params.fixed_pair}, {"origin", r.params.origin}};
  j["A"] = to_json(r.A);
  j["B"] = to_json(r.B);
  j["C"] = to_json(r.C);
  j["minpoly"] = to_json(r.minpoly);
  j["charpoly"] = to_json(r.charpoly);
  j["degree"] = r.degree;
  j["lower_triangular"] = r.lower_triangular;
  j["upper_triangular"] = r.upper_triangular;
  j["diagonal"] = to_json(r.diagonal);
  j["expected_diagonal"] = to_json(r.expected_diagonal);
  j["diagonal_matches"] = r.diagonal_matches;
  j["det"] = to_json(r.determinant);
  j["trace"] = to_json(r.trace);
  j["seed"] = seed;
  return j;
}

inline Json search_json(const SearchReport& r) {
  Json j;
  j["kind"] = kind_name(r.kind);
  j["trials_used"] = r.trials_used;
  j["degree_found"] = r.degree_found;
  j["declared_degree"] = r.declared_degree;
  j["success"] = r.success;
  if (r.best && r.best->c) {
    j["x"] = to_json(r.best->x);
    j["y"] = to_json(r.best->y);
    j["c"] = to_json(*r.best->c);
    j["minpoly"] = to_json(*r.best->minpoly);
  } else {
    j["x"] = nullptr;
    j["y"] = nullptr;
    j["c"] = nullptr;
    j["minpoly"] = nullptr;
  }
  j["best_trial"] = r.best_trial;
  j["skipped"] = r.skipped;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  return j;
}

inline Json lemma22_json(const Lemma22Report& r) {
  Json cases = Json::array();
  for (const auto& c : r.cases) {
    Json vanished = Json::array();
    for (bool v : c.vanished) vanished.push_back(v);
    cases.push_back(Json{{"label", c.label}, {"minpoly_degree", c.minpoly_degree}, {"gn_degree", c.gn_degree}, {"vanished", vanished}, {"agree", c.agree}});
  }
  Json j;
  j["size"] = r.size;
  j["max_n"] = r.max_n;
  j["field"] = r.field.spec();
  j["all_agree"] = r.all_agree();
  j["cases"] = cases;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  return j;
}

}  // namespace maxsub::report
