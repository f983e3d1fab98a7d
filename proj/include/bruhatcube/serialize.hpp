#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bruhatcube/bruhat.hpp"
#include "bruhatcube/dwd.hpp"
#include "bruhatcube/embedding.hpp"
#include "bruhatcube/polynomial.hpp"
#include "bruhatcube/search.hpp"
#include "bruhatcube/tadic.hpp"

namespace bruhatcube {

using Json = nlohmann::ordered_json;

/// {bottom, top, elements, hasse}; permutations as one-line strings.
Json to_json(const IntervalPoset& iv);
IntervalPoset interval_from_json(const Json& j);

/// Coefficients, lowest degree first; the zero polynomial is [].
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);

/// {m, bits} with bits the canonical bit string.
Json to_json(const CubeCoordinates& c);
CubeCoordinates cube_from_json(const Json& j);

/// {t, m, labels} with labels as 1-indexed one-line arrays.
Json to_json(const TCubeCoordinates& c);

/// {"n", "rows": [{k, total, hypercubes}]}.
Json census_to_json(int n, const std::vector<CensusRow>& rows);
/// "k,total,hypercubes" header then one line per row.
std::string census_to_csv(const std::vector<CensusRow>& rows);

/// {"n", "f", "x", "y"}.
Json to_json(const MaxDResult& r);

/// {vertices, points, edges: [[i, j, [a, b]]]}.
Json to_json(const EmbeddedGraph& eg);

Json to_json(const SearchState& s);
Json to_json(const TheoremReport& r);

}  // namespace bruhatcube
