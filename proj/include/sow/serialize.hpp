#ifndef SOW_SERIALIZE_HPP
#define SOW_SERIALIZE_HPP

#include "sow/enumerator.hpp"
#include "sow/goodmat.hpp"
#include "sow/ldpc.hpp"
#include "sow/macwilliams.hpp"
#include "sow/oracle.hpp"
#include "sow/orbits.hpp"

#include <json.hpp>

#include <string>

namespace sow {

using Json = nlohmann::ordered_json;

// Rationals always serialize as "num/den" strings; a nonnegative `decimal`
// adds a convenience float rendering next to (never instead of) the exact
// value.

Json orbit_order_json(const OrbitTable& table);
Json orbits_json(const OrbitTable& table);
Json kmatrix_json(const KMatrix& k, const OrbitTable& table);

// {"nvars": ..., "terms": [{"exp": [...], "coef": "num/den"}, ...]},
// terms sorted lexicographically by exponent.
Json enumerator_json(const Enumerator& e);
Enumerator enumerator_from_json(const Json& j);
std::string enumerator_csv(const Enumerator& e, const OrbitTable& table, int decimal = -1);

Json distribution_json(const EnsembleDistribution& dist, const OrbitTable& table, int decimal = -1);
std::string distribution_csv(const EnsembleDistribution& dist, const OrbitTable& table, int decimal = -1);

Json intersecting_json(const IntersectingReport& report, int q, int m, int n);
Json mc_report_json(const MonteCarloStats& stats, const SowDist& expected, const OrbitTable& table);

std::string orbit_column_name(const OrbitTable& table, int orbit);

}  // namespace sow

#endif
