#include "sow/serialize.hpp"

#include <cmath>
#include <set>
#include <sstream>

namespace sow {

namespace {

Json exp_json(const std::vector<int>& exp) { return Json(exp); }

std::string decimal_of(const BigRat& r, int decimal) { return rat_to_decimal(r, decimal); }

}  // namespace

std::string orbit_column_name(const OrbitTable& table, int orbit) {
    const auto [u, v] = table.rep(orbit);
    return "i_" + std::to_string(u) + "_" + std::to_string(v);
}

Json orbit_order_json(const OrbitTable& table) {
    Json order = Json::array();
    for (int s = 0; s < table.count(); ++s) {
        const auto [u, v] = table.rep(s);
        order.push_back({u, v});
    }
    return order;
}

Json orbits_json(const OrbitTable& table) {
    Json out;
    out["q"] = table.q();
    out["orbit_count"] = table.count();
    Json orbits = Json::array();
    for (int s = 0; s < table.count(); ++s) {
        const auto [u, v] = table.rep(s);
        Json orbit;
        orbit["index"] = s;
        orbit["rep"] = {u, v};
        orbit["rep_name"] = "(" + table.field().element_name(u) + "," + table.field().element_name(v) + ")";
        orbit["size"] = table.size(s);
        Json members = Json::array();
        for (const auto& [mu, mv] : table.members(s)) members.push_back({mu, mv});
        orbit["members"] = std::move(members);
        orbits.push_back(std::move(orbit));
    }
    out["orbits"] = std::move(orbits);
    return out;
}

Json kmatrix_json(const KMatrix& k, const OrbitTable& table) {
    Json out;
    out["q"] = table.q();
    out["orbit_order"] = orbit_order_json(table);
    Json rows = Json::array();
    for (const auto& row : k.entries) rows.push_back(Json(row));
    out["entries"] = std::move(rows);
    return out;
}

Json enumerator_json(const Enumerator& e) {
    Json out;
    out["nvars"] = e.nvars();
    Json terms = Json::array();
    for (const auto& [exp, coef] : e.terms()) {
        Json term;
        term["exp"] = exp_json(exp);
        term["coef"] = rat_to_string(coef);
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

Enumerator enumerator_from_json(const Json& j) {
    if (!j.contains("nvars") || !j.contains("terms")) throw std::invalid_argument("enumerator JSON needs nvars and terms");
    Enumerator e(j.at("nvars").get<int>());
    for (const auto& term : j.at("terms")) {
        const auto exp = term.at("exp").get<std::vector<int>>();
        e.add_term(exp, rat_from_string(term.at("coef").get<std::string>()));
    }
    return e;
}

std::string enumerator_csv(const Enumerator& e, const OrbitTable& table, int decimal) {
    std::ostringstream out;
    for (int s = 0; s < table.count(); ++s) out << orbit_column_name(table, s) << ",";
    out << "coef";
    if (decimal >= 0) out << ",coef_decimal";
    out << "\n";
    for (const auto& [exp, coef] : e.terms()) {
        for (int x : exp) out << x << ",";
        out << rat_to_string(coef);
        if (decimal >= 0) out << "," << decimal_of(coef, decimal);
        out << "\n";
    }
    return out.str();
}

Json distribution_json(const EnsembleDistribution& dist, const OrbitTable& table, int decimal) {
    Json out;
    out["kind"] = dist.spec.kind == EnsembleSpec::Kind::I ? "I" : "II";
    out["q"] = dist.spec.field.q();
    out["c"] = dist.spec.c;
    out["d"] = dist.spec.d;
    out["n"] = dist.spec.n;
    out["orbit_order"] = orbit_order_json(table);
    Json entries = Json::array();
    for (const auto& [index, value] : dist.values) {
        Json entry;
        entry["i"] = exp_json(index);
        entry["value"] = rat_to_string(value);
        if (decimal >= 0) entry["value_decimal"] = decimal_of(value, decimal);
        entries.push_back(std::move(entry));
    }
    out["entries"] = std::move(entries);
    return out;
}

std::string distribution_csv(const EnsembleDistribution& dist, const OrbitTable& table, int decimal) {
    std::ostringstream out;
    for (int s = 0; s < table.count(); ++s) out << orbit_column_name(table, s) << ",";
    out << "value";
    if (decimal >= 0) out << ",value_decimal";
    out << "\n";
    for (const auto& [index, value] : dist.values) {
        for (int x : index) out << x << ",";
        out << rat_to_string(value);
        if (decimal >= 0) out << "," << decimal_of(value, decimal);
        out << "\n";
    }
    return out.str();
}

Json intersecting_json(const IntersectingReport& report, int q, int m, int n) {
    Json out;
    out["q"] = q;
    out["m"] = m;
    out["n"] = n;
    out["union_bound"] = rat_to_string(report.union_bound);
    out["rate_bound"] = report.rate_bound;
    out["expected_size"] = rat_to_string(report.expected_size);
    out["variance_bound"] = rat_to_string(report.variance_bound);
    out["chebyshev_probability"] = rat_to_string(report.chebyshev_probability);
    out["chebyshev_deviation"] = report.chebyshev_deviation;
    return out;
}

Json mc_report_json(const MonteCarloStats& stats, const SowDist& expected, const OrbitTable& table) {
    Json out;
    out["trials"] = stats.trials;
    out["orbit_order"] = orbit_order_json(table);
    Json rows = Json::array();
    std::set<SowVec> indices;
    for (const auto& [index, value] : expected) indices.insert(index);
    for (const auto& [index, sums] : stats.sums) indices.insert(index);
    double worst = 0.0;
    bool pass = true;
    for (const auto& index : indices) {
        const auto it = expected.find(index);
        const BigRat target = it == expected.end() ? BigRat(0) : it->second;
        const BigRat mean = stats.mean(index);
        const double se = stats.standard_error(index);
        Json row;
        row["i"] = exp_json(index);
        row["mean"] = rat_to_string(mean);
        row["stderr"] = se;
        row["expected"] = rat_to_string(target);
        double sigmas = 0.0;
        if (se == 0.0) {
            if (mean != target) {
                pass = false;
                row["sigmas"] = "inf";
                rows.push_back(std::move(row));
                continue;
            }
        } else {
            sigmas = std::abs(static_cast<double>(BigRat(mean - target))) / se;
        }
        worst = std::max(worst, sigmas);
        if (sigmas > 5.0) pass = false;
        row["sigmas"] = sigmas;
        rows.push_back(std::move(row));
    }
    out["indices"] = std::move(rows);
    out["max_sigmas"] = worst;
    out["status"] = pass ? "pass" : "fail";
    return out;
}

}  // namespace sow
