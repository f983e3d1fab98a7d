#include "bruhatcube/serialize.hpp"

#include <sstream>

#include "bruhatcube/errors.hpp"

namespace bruhatcube {
namespace {

Json permutation_array_1based(const Permutation& p) {
  Json a = Json::array();
  for (int v : p.images()) a.push_back(v + 1);
  return a;
}

Permutation permutation_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw InputError(std::string("missing string field '") + key + "'");
  return parse_permutation(j[key].get<std::string>());
}

}  // namespace

Json to_json(const IntervalPoset& iv) {
  Json j;
  j["bottom"] = to_string(iv.bottom);
  j["top"] = to_string(iv.top);
  Json elements = Json::array();
  for (const auto& e : iv.elements) elements.push_back(to_string(e));
  j["elements"] = std::move(elements);
  Json hasse = Json::array();
  for (const auto& [u, v] : iv.hasse_edges) hasse.push_back({u, v});
  j["hasse"] = std::move(hasse);
  return j;
}

IntervalPoset interval_from_json(const Json& j) {
  IntervalPoset iv;
  iv.bottom = permutation_field(j, "bottom");
  iv.top = permutation_field(j, "top");
  const std::int64_t base = length(iv.bottom);
  for (const auto& e : j.at("elements")) {
    iv.elements.push_back(parse_permutation(e.get<std::string>()));
    iv.rank.push_back(static_cast<int>(length(iv.elements.back()) - base));
    iv.index.emplace(iv.elements.back(), static_cast<int>(iv.elements.size() - 1));
  }
  for (const auto& edge : j.at("hasse")) {
    const int u = edge.at(0).get<int>();
    const int v = edge.at(1).get<int>();
    const int count = static_cast<int>(iv.elements.size());
    if (u < 0 || v < 0 || u >= count || v >= count) throw InputError("hasse edge index out of range");
    iv.hasse_edges.emplace_back(u, v);
  }
  return iv;
}

Json to_json(const IntPolynomial& p) { return Json(p.coefficients()); }

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("polynomial JSON must be a coefficient array");
  return IntPolynomial(j.get<std::vector<std::int64_t>>());
}

Json to_json(const CubeCoordinates& c) {
  Json j;
  j["m"] = c.m();
  j["bits"] = to_string(c);
  return j;
}

CubeCoordinates cube_from_json(const Json& j) {
  return parse_cube_coordinates(j.at("m").get<int>(), j.at("bits").get<std::string>());
}

Json to_json(const TCubeCoordinates& c) {
  Json j;
  j["t"] = c.t;
  j["m"] = c.m;
  Json labels = Json::array();
  for (const auto& l : c.labels) labels.push_back(permutation_array_1based(l));
  j["labels"] = std::move(labels);
  return j;
}

Json census_to_json(int n, const std::vector<CensusRow>& rows) {
  Json j;
  j["n"] = n;
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(Json{{"k", r.k}, {"total", r.total}, {"hypercubes", r.hypercubes}});
  j["rows"] = std::move(out);
  return j;
}

std::string census_to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream out;
  out << "k,total,hypercubes\n";
  for (const auto& r : rows) out << r.k << ',' << r.total << ',' << r.hypercubes << '\n';
  return out.str();
}

Json to_json(const MaxDResult& r) {
  Json j;
  j["n"] = r.n;
  j["f"] = r.f;
  j["x"] = to_string(r.x);
  j["y"] = to_string(r.y);
  return j;
}

Json to_json(const EmbeddedGraph& eg) {
  Json j;
  Json vertices = Json::array();
  for (const auto& v : eg.graph.vertices) vertices.push_back(to_string(v));
  j["vertices"] = std::move(vertices);
  Json points = Json::array();
  for (Eigen::Index r = 0; r < eg.coordinates.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < eg.coordinates.cols(); ++c) row.push_back(eg.coordinates(r, c));
    points.push_back(std::move(row));
  }
  j["points"] = std::move(points);
  Json edges = Json::array();
  for (const auto& e : eg.graph.edges)
    edges.push_back(Json::array({e.from, e.to, Json::array({e.label.first, e.label.second})}));
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const SearchState& s) {
  Json j;
  j["n"] = s.x.size();
  j["x"] = to_string(s.x);
  j["y"] = to_string(s.y);
  j["score"] = s.score;
  j["initial_score"] = s.initial_score;
  j["seed"] = s.seed;
  j["budget"] = s.budget;
  j["evaluations"] = s.evaluations;
  return j;
}

Json to_json(const TheoremReport& r) {
  Json j;
  j["m"] = r.m;
  j["mode"] = r.mode == VerifyMode::full ? "full" : "sampled";
  j["passed"] = r.passed;
  j["rank"] = r.rank;
  j["elements"] = r.elements;
  j["pairs_checked"] = r.pairs_checked;
  j["comparable_pairs"] = r.comparable_pairs;
  j["failures"] = r.failures;
  return j;
}

}  // namespace bruhatcube
