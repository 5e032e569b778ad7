/*
Copyright 2026 The emb7 Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#include "emb7/json_io.hpp"

#include "emb7/error.hpp"

namespace emb7::json_io {

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
}

Int to_int(const json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Int(j.get<unsigned long>()) : Int(j.get<long>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Int v;
    if (s.empty() || v.set_str(s, 10) != 0)
      fail(ErrorKind::Parse, "not a decimal integer: \"" + s + "\"");
    return v;
  }
  fail(ErrorKind::Parse, "expected an integer or decimal string, got " + j.dump());
}

IntVector to_vector(const json& j) {
  if (!j.is_array()) fail(ErrorKind::Parse, "expected an array of integers, got " + j.dump());
  IntVector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(to_int(x));
  return v;
}

IntMatrix to_matrix(const json& j, std::size_t empty_cols) {
  if (!j.is_array()) fail(ErrorKind::Parse, "expected an array of rows, got " + j.dump());
  if (j.empty()) return IntMatrix(0, empty_cols);
  std::vector<IntVector> rows;
  for (const auto& r : j) rows.push_back(to_vector(r));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) fail(ErrorKind::Parse, "ragged matrix rows");
  return IntMatrix::from_rows(rows);
}

json from_int(const Int& v) { return v.get_str(); }

json from_vector(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json from_matrix(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(from_vector(m.row(i)));
  return a;
}

namespace {

std::size_t to_count(const json& j, const char* what) {
  Int v = to_int(j);
  if (v < 0 || !v.fits_ulong_p()) fail(ErrorKind::Parse, std::string(what) + " must be a count");
  return v.get_ui();
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::Parse, std::string("missing field \"") + key + "\"");
  return *it;
}

} // namespace

ManifoldData to_manifold(const json& j) {
  if (!j.is_object()) fail(ErrorKind::Parse, "manifold data must be a JSON object");
  ManifoldData d;
  if (auto it = j.find("name"); it != j.end() && !it->is_null()) d.name = it->get<std::string>();
  d.b1 = to_count(field(j, "b1"), "b1");
  d.b2 = to_count(field(j, "b2"), "b2");
  d.b3 = j.contains("b3") ? to_count(j["b3"], "b3") : d.b1;
  d.Q = j.contains("Q") ? to_matrix(j["Q"], d.b2) : IntMatrix(d.b2, d.b2);
  d.P = j.contains("P") ? to_matrix(j["P"], d.b1) : IntMatrix(d.b3, d.b1);
  if (j.contains("T")) {
    const json& t = j["T"];
    if (!t.is_array()) fail(ErrorKind::Parse, "T must be an array of matrices");
    for (const auto& slice : t) d.T.push_back(to_matrix(slice, d.b3));
  } else {
    d.T.assign(d.b2, IntMatrix(d.b3, d.b3));
  }
  if (j.contains("w2")) {
    for (const auto& x : to_vector(j["w2"])) {
      if (!x.fits_sint_p()) fail(ErrorKind::Parse, "w2 entries must be bits");
      d.w2.push_back(static_cast<int>(x.get_si()));
    }
  } else {
    d.w2.assign(d.b2, 0);
  }
  d.sigma = j.contains("sigma") ? to_int(j["sigma"]) : Int(0);
  return d;
}

json from_manifold(const ManifoldData& d) {
  json j;
  if (d.name) j["name"] = *d.name;
  j["b1"] = d.b1;
  j["b2"] = d.b2;
  j["b3"] = d.b3;
  j["Q"] = from_matrix(d.Q);
  j["P"] = from_matrix(d.P);
  json t = json::array();
  for (const auto& slice : d.T) t.push_back(from_matrix(slice));
  j["T"] = t;
  j["w2"] = d.w2;
  j["sigma"] = from_int(d.sigma);
  return j;
}

json from_report(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations)
    v.push_back({{"code", x.code}, {"message", x.message}, {"indices", x.indices}});
  return {{"valid", r.ok()}, {"violations", v}};
}

EmbeddingClass to_class(const json& j) {
  if (!j.is_object()) fail(ErrorKind::Parse, "class must be a JSON object");
  EmbeddingClass c;
  c.u = j.contains("u") ? to_vector(j["u"]) : IntVector{};
  c.L = to_matrix(field(j, "L"));
  if (auto it = j.find("beta"); it != j.end() && !it->is_null()) c.beta = to_vector(*it);
  return c;
}

json from_class(const EmbeddingClass& c) {
  json j;
  j["u"] = from_vector(c.u);
  j["L"] = from_matrix(c.L);
  j["beta"] = c.beta ? from_vector(*c.beta) : json(nullptr);
  j["beta_known"] = c.beta_known();
  return j;
}

Move to_move(const json& j) {
  if (!j.is_object()) fail(ErrorKind::Parse, "move must be a JSON object");
  Move m;
  m.s = to_vector(field(j, "s"));
  m.l = j.contains("l") ? to_int(j["l"]) : Int(0);
  m.b = j.contains("b") ? to_int(j["b"]) : Int(0);
  return m;
}

json from_move(const Move& m) {
  return {{"s", from_vector(m.s)}, {"l", from_int(m.l)}, {"b", from_int(m.b)}};
}

json from_group(const AbelianGroupPresentation& g) {
  json j;
  j["ambient_rank"] = g.ambient_rank;
  j["factors"] = from_vector(g.invariant_factors);
  j["nontrivial_factors"] = from_vector(g.nontrivial_factors());
  j["projection"] = from_matrix(g.projection);
  j["relations"] = from_matrix(g.relations);
  const auto order = g.order();
  j["size"] = order ? json(order->get_str()) : json("infinite");
  return j;
}

json from_kgroup(const KGroup& k) {
  json j = from_group(k.group);
  j["d"] = from_int(k.d);
  return j;
}

json from_snf(const SNFResult& s) {
  return {{"U", from_matrix(s.U)},
          {"D", from_matrix(s.D)},
          {"V", from_matrix(s.V)},
          {"diagonal", from_vector(s.diagonal())}};
}

json from_link(const gauss::LinkResult& r) {
  return {{"estimate", r.estimate},
          {"value", std::to_string(r.value)},
          {"residual", r.residual},
          {"sampled_distance", r.sampled_distance},
          {"certified_separation", r.certified_separation}};
}

} // namespace emb7::json_io
