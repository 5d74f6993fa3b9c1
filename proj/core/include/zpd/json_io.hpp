#pragma once

#include <string>

#include <json.hpp>

#include "zpd/nullcheck.hpp"
#include "zpd/poly.hpp"
#include "zpd/zpdcert.hpp"

namespace zpd {

using json = nlohmann::ordered_json;

inline json field_to_json(const FieldDescriptor& fd) {
  if (fd.kind == FieldKind::Gfp) return {{"kind", "gfp"}, {"p", fd.p}};
  return {{"kind", "q"}};
}

inline FieldDescriptor field_from_json(const json& j) {
  FieldDescriptor fd;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "gfp") {
    fd.kind = FieldKind::Gfp;
    fd.p = j.at("p").get<std::uint32_t>();
  } else if (kind == "q") {
    fd.kind = FieldKind::Rational;
  } else {
    throw std::invalid_argument("unknown field kind: " + kind);
  }
  return fd;
}

inline FieldDescriptor parse_field_flag(const std::string& s) {
  if (s == "q" || s == "Q") return {FieldKind::Rational, 0};
  if (s.rfind("gfp:", 0) == 0)
    return {FieldKind::Gfp, std::uint32_t(std::stoul(s.substr(4)))};
  if (s == "gfp") return {FieldKind::Gfp, 32003};
  throw std::invalid_argument("bad --field value: " + s);
}

// Matrix JSON: {"d": 2, "rows": [["0","1"],["0","0"]]}; entries decimal
// integers or "p/q", prime-field values as decimal residues.
template <class F>
json mat_to_json(const Mat<F>& a) {
  json rows = json::array();
  for (int i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.dim(); ++j)
      row.push_back(a.field().to_string(a.at(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"d", a.dim()}, {"rows", std::move(rows)}};
}

template <class F>
Mat<F> mat_from_json(const F& field, const json& j) {
  int d = j.at("d").get<int>();
  Mat<F> a(field, d);
  const json& rows = j.at("rows");
  if (int(rows.size()) != d) throw std::invalid_argument("matrix rows mismatch");
  for (int i = 0; i < d; ++i) {
    if (int(rows[i].size()) != d)
      throw std::invalid_argument("matrix row length mismatch");
    for (int jx = 0; jx < d; ++jx)
      a.at(i, jx) = field.parse(rows[i][jx].template get<std::string>());
  }
  return a;
}

template <class F>
json tuple_to_json(const MatTuple<F>& t) {
  json arr = json::array();
  for (const auto& a : t) arr.push_back(mat_to_json(a));
  return {{"m", t.size()}, {"matrices", std::move(arr)}};
}

template <class F>
MatTuple<F> tuple_from_json(const F& field, const json& j) {
  const json& arr = j.is_object() && j.contains("matrices") ? j.at("matrices") : j;
  if (!arr.is_array())
    throw std::invalid_argument("tuple JSON: expected an array of matrices");
  MatTuple<F> t;
  for (const auto& e : arr) t.push_back(mat_from_json(field, e));
  return t;
}

// Permutation JSON: one-line image array, 1-based.
inline json perm_to_json(const Perm& p) { return json(p.one_line_1based()); }

inline Perm perm_from_json(const json& j) {
  return Perm::from_one_line_1based(j.get<std::vector<int>>());
}

// Polynomial JSON:
// {"m":3, "field":{"kind":"gfp","p":32003},
//  "terms":[{"perm":[1,2,3],"coeff":"1"}, ...]}
template <class F>
json poly_to_json(const MultilinearPoly<F>& f) {
  json terms = json::array();
  for (const auto& [sigma, c] : f.terms())
    terms.push_back(
        {{"perm", perm_to_json(sigma)}, {"coeff", f.field().to_string(c)}});
  return {{"m", f.degree()},
          {"field", field_to_json(f.field().descriptor())},
          {"terms", std::move(terms)}};
}

template <class F>
MultilinearPoly<F> poly_from_json(const F& field, const json& j) {
  MultilinearPoly<F> f(field, j.at("m").get<int>());
  for (const auto& t : j.at("terms"))
    f.add_term(perm_from_json(t.at("perm")),
               field.parse(t.at("coeff").template get<std::string>()));
  return f;
}

template <class F>
json tensorvec_to_json(const F& field, int d, int m,
                       const std::vector<typename F::Elem>& coords) {
  json arr = json::array();
  for (const auto& c : coords) arr.push_back(field.to_string(c));
  return {{"d", d}, {"m", m}, {"coords", std::move(arr)}};
}

// Certification report body; the CLI wraps it with config and timing_ms.
// Everything here is deterministic for a fixed seed.
template <class F>
json verdict_to_json(const ZpdVerdict<F>& v, const F& field, int d, int m,
                     std::uint64_t seed) {
  json j = {{"verdict", to_string(v.status)},
            {"rank_zero_span", v.rank_zero_span},
            {"target_rank", v.target_rank},
            {"rank_image", v.rank_image},
            {"ambient", v.ambient},
            {"generators",
             {{"structured", v.gen_structured}, {"kernel", v.gen_kernel}}},
            {"seed", seed},
            {"field", field_to_json(field.descriptor())}};
  if (!v.note.empty()) j["note"] = v.note;
  if (v.candidate_functional)
    j["candidate_functional"] =
        tensorvec_to_json(field, d, m, *v.candidate_functional);
  return j;
}

template <class F>
json null_report_to_json(const NullReport<F>& r, const F& field) {
  json j = {{"status", to_string(r.status)}};
  if (r.lambda) j["lambda"] = field.to_string(*r.lambda);
  if (r.witness) {
    json w = {{"tuple", tuple_to_json(*r.witness)["matrices"]},
              {"f_value", mat_to_json(*r.f_value)},
              {"g_value", mat_to_json(*r.g_value)},
              {"route", r.route}};
    if (r.ell) w["ell"] = *r.ell;
    if (r.pair)
      w["pair"] = json::array(
          {perm_to_json(r.pair->first), perm_to_json(r.pair->second)});
    j["witness"] = std::move(w);
  }
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["crosscheck"] = {{"falsifier_budget", r.falsifier_budget},
                     {"falsifier_found", r.falsifier_found}};
  return j;
}

}  // namespace zpd
