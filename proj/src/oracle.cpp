#include "sow/oracle.hpp"

#include "sow/common.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <set>
#include <thread>

namespace sow {

namespace {

std::vector<GFVec> all_vectors(const Field& field, int n) {
    std::vector<GFVec> out;
    out.reserve(static_cast<size_t>(std::pow(field.q(), n)));
    GFVec v(n, 0);
    while (true) {
        out.push_back(v);
        int i = 0;
        while (i < n && ++v[i] == field.q()) v[i++] = 0;
        if (i == n) break;
    }
    return out;
}

// Parity-check matrix of one ensemble sample given its monomial maps: kind I
// takes c maps of length n (one per layer), kind II a single map of length cn.
MatrixGF build_parity(const EnsembleSpec& spec, const std::vector<MonomialMap>& maps) {
    const Field& f = spec.field;
    MatrixGF h(f, spec.check_count(), spec.n);
    if (spec.kind == EnsembleSpec::Kind::I) {
        const int rows_per_layer = spec.n / spec.d;
        for (int layer = 0; layer < spec.c; ++layer) {
            const MonomialMap& m = maps[layer];
            for (int j = 0; j < spec.n; ++j) {
                const int pos = m.perm[j];
                const int row = layer * rows_per_layer + pos / spec.d;
                h.set(row, j, f.add(h.at(row, j), m.scalars[pos]));
            }
        }
    } else {
        const MonomialMap& m = maps[0];
        for (int k = 0; k < spec.c * spec.n; ++k) {
            const int j = k / spec.c;
            const int pos = m.perm[k];
            const int row = pos / spec.d;
            h.set(row, j, f.add(h.at(row, j), m.scalars[pos]));
        }
    }
    return h;
}

// Dense ranking of the compositions of n into nv parts, lexicographic.
class SowIndexer {
  public:
    static constexpr long long kMaxSlots = 10'000'000;

    SowIndexer(int n, int nv) : n_(n), nv_(nv) {
        if (binomial(n + nv - 1, nv - 1) > kMaxSlots)
            throw InfeasibleError("too many weight classes for a dense tally");
        comp_.assign(n + 1, std::vector<long long>(nv + 1, 0));
        for (int m = 0; m <= n; ++m)
            for (int k = 1; k <= nv; ++k) {
                long long c = 1;  // C(m+k-1, k-1)
                for (int i = 1; i < k; ++i) c = c * (m + i) / i;
                comp_[m][k] = c;
            }
    }

    long long count() const { return comp_[n_][nv_]; }

    long long rank(const int* counts) const {
        long long r = 0;
        int rem = n_;
        for (int s = 0; s < nv_ - 1; ++s) {
            for (int t = 0; t < counts[s]; ++t) r += comp_[rem - t][nv_ - s - 1];
            rem -= counts[s];
        }
        return r;
    }

    SowVec unrank(long long r) const {
        SowVec counts(nv_, 0);
        int rem = n_;
        for (int s = 0; s < nv_ - 1; ++s) {
            int t = 0;
            while (r >= comp_[rem - t][nv_ - s - 1]) r -= comp_[rem - t++][nv_ - s - 1];
            counts[s] = t;
            rem -= t;
        }
        counts[nv_ - 1] = rem;
        return counts;
    }

  private:
    int n_, nv_;
    std::vector<std::vector<long long>> comp_;
};

// Tally of one sample code pair into per-index counters.
void tally_kernel(const EnsembleSpec& spec, const MatrixGF& parity, const OrbitTable& table,
                  const SowIndexer& indexer, long long kernel_limit, std::vector<std::uint64_t>& counts) {
    const LinearCode code = LinearCode::from_parity(parity);
    if (code.size() > kernel_limit) throw InfeasibleError("kernel enumeration exceeds limit");
    const auto words = code.codewords(kernel_limit);
    std::fill(counts.begin(), counts.end(), 0);
    std::vector<int> sow_counts(table.count());
    for (const auto& u : words)
        for (const auto& v : words) {
            std::fill(sow_counts.begin(), sow_counts.end(), 0);
            for (int i = 0; i < spec.n; ++i) ++sow_counts[table.classify(u[i], v[i])];
            ++counts[indexer.rank(sow_counts.data())];
        }
}

}  // namespace

MembershipProbability membership_probability_exact(const LinearCode& u_code, const LinearCode& v_code, const GFVec& u, const GFVec& v,
                          const OrbitTable& table, long long map_limit) {
    const Field& f = table.field();
    const int n = u_code.length();
    if (v_code.length() != n || static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
        throw std::invalid_argument("length mismatch");
    const long long total = monomial_count(n, f.q());
    if (total > map_limit) throw InfeasibleError("monomial map enumeration exceeds limit");

    // {xi : u in xi(U)} and {xi^-1} have the same cardinality, so count over
    // images of (u, v) instead of preimages.
    long long hits = 0;
    for_each_monomial(n, f, [&](const MonomialMap& m) {
        if (u_code.contains(m.apply(f, u)) && v_code.contains(m.apply(f, v))) ++hits;
    });
    const SowVec index = second_order_weight(u, v, table);

    const auto everything = all_vectors(f, n);
    const auto numerator_dist = sow_distribution(u_code, v_code, table);
    const auto full_dist = sow_distribution(everything, everything, table);
    const auto num_it = numerator_dist.find(index);
    return {BigRat(hits, total),
            BigRat(num_it == numerator_dist.end() ? 0 : num_it->second, full_dist.at(index))};
}

EnsembleDistribution ldpc_exact_expectation(const EnsembleSpec& spec, long long config_limit) {
    const Field& f = spec.field;
    const int map_len = spec.kind == EnsembleSpec::Kind::I ? spec.n : spec.c * spec.n;
    const int map_count = spec.kind == EnsembleSpec::Kind::I ? spec.c : 1;
    const long long per_map = monomial_count(map_len, f.q());
    long long configs = 1;
    for (int i = 0; i < map_count; ++i) {
        if (per_map > config_limit / configs) throw InfeasibleError("configuration count exceeds limit");
        configs *= per_map;
    }

    std::vector<MonomialMap> all_maps;
    all_maps.reserve(per_map);
    for_each_monomial(map_len, f, [&](const MonomialMap& m) { all_maps.push_back(m); });

    const OrbitTable table(f);
    std::map<SowVec, BigInt> totals;
    std::vector<MonomialMap> choice(map_count, MonomialMap::identity(map_len));
    std::vector<size_t> pick(map_count, 0);
    while (true) {
        for (int i = 0; i < map_count; ++i) choice[i] = all_maps[pick[i]];
        const LinearCode code = LinearCode::from_parity(build_parity(spec, choice));
        for (const auto& [index, count] : sow_distribution(code, code, table)) totals[index] += count;
        int i = 0;
        while (i < map_count && ++pick[i] == all_maps.size()) pick[i++] = 0;
        if (i == map_count) break;
    }

    EnsembleDistribution dist{spec, {}};
    for (const auto& [index, count] : totals)
        if (count != 0) dist.values.emplace(index, BigRat(count, configs));
    return dist;
}

BigRat MonteCarloStats::mean(const SowVec& index) const {
    const auto it = sums.find(index);
    return it == sums.end() ? BigRat(0) : BigRat(it->second.first, trials);
}

double MonteCarloStats::mean_double(const SowVec& index) const {
    return static_cast<double>(mean(index));
}

namespace {

double stderr_of_sums(std::uint64_t sum, std::uint64_t sumsq, long long trials) {
    if (trials < 2) return 0.0;
    const double t = static_cast<double>(trials);
    const double s = static_cast<double>(sum);
    const double variance = (static_cast<double>(sumsq) - s * s / t) / (t - 1.0);
    return variance <= 0.0 ? 0.0 : std::sqrt(variance / t);
}

}  // namespace

double MonteCarloStats::standard_error(const SowVec& index) const {
    const auto it = sums.find(index);
    if (it == sums.end()) return 0.0;
    return stderr_of_sums(it->second.first, it->second.second, trials);
}

double MonteCarloStats::total_standard_error() const { return stderr_of_sums(total_sum, total_sumsq, trials); }

MonteCarloStats monte_carlo_ldpc(const EnsembleSpec& spec, long long trials, std::uint64_t seed, int threads,
                                 long long kernel_limit) {
    if (trials < 1) throw std::invalid_argument("trial count must be positive");
    if (threads < 1) throw std::invalid_argument("thread count must be positive");
    const OrbitTable table(spec.field);
    const SowIndexer indexer(spec.n, table.count());
    const long long slots = indexer.count();
    const int map_len = spec.kind == EnsembleSpec::Kind::I ? spec.n : spec.c * spec.n;
    const int map_count = spec.kind == EnsembleSpec::Kind::I ? spec.c : 1;

    struct Accumulator {
        std::vector<std::uint64_t> sum, sumsq;
        std::uint64_t total_sum = 0, total_sumsq = 0;
    };

    const auto run_range = [&](long long begin, long long end, Accumulator& acc) {
        std::vector<std::uint64_t> counts(slots);
        std::vector<MonomialMap> maps(map_count);
        for (long long t = begin; t < end; ++t) {
            CounterRng rng(seed, static_cast<std::uint64_t>(t));
            for (int i = 0; i < map_count; ++i) maps[i] = sample_monomial(map_len, spec.field, rng);
            tally_kernel(spec, build_parity(spec, maps), table, indexer, kernel_limit, counts);
            std::uint64_t trial_total = 0;
            for (long long s = 0; s < slots; ++s) {
                acc.sum[s] += counts[s];
                acc.sumsq[s] += counts[s] * counts[s];
                trial_total += counts[s];
            }
            // per-index tallies are bounded by the totals, so guarding the
            // total accumulators guards everything
            if (trial_total >= (1ULL << 32) ||
                acc.total_sumsq > UINT64_MAX - trial_total * trial_total)
                throw InfeasibleError("Monte Carlo tallies would overflow");
            acc.total_sum += trial_total;
            acc.total_sumsq += trial_total * trial_total;
        }
    };

    std::vector<Accumulator> accs(threads);
    for (auto& acc : accs) {
        acc.sum.assign(slots, 0);
        acc.sumsq.assign(slots, 0);
    }
    if (threads == 1) {
        run_range(0, trials, accs[0]);
    } else {
        std::vector<std::thread> pool;
        const long long chunk = (trials + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const long long begin = std::min<long long>(trials, w * chunk);
            const long long end = std::min<long long>(trials, begin + chunk);
            pool.emplace_back([&, w, begin, end] { run_range(begin, end, accs[w]); });
        }
        for (auto& th : pool) th.join();
    }

    MonteCarloStats stats;
    stats.trials = trials;
    for (const auto& acc : accs) {
        stats.total_sum += acc.total_sum;
        stats.total_sumsq += acc.total_sumsq;
    }
    for (long long s = 0; s < slots; ++s) {
        std::uint64_t sum = 0, sumsq = 0;
        for (int w = 0; w < threads; ++w) {
            sum += accs[w].sum[s];
            sumsq += accs[w].sumsq[s];
        }
        if (sum != 0) stats.sums.emplace(indexer.unrank(s), std::make_pair(sum, sumsq));
    }
    return stats;
}

double max_sigma_deviation(const MonteCarloStats& stats, const SowDist& expected) {
    double worst = 0.0;
    const auto consider = [&](const SowVec& index, const BigRat& target) {
        const BigRat mean = stats.mean(index);
        const double se = stats.standard_error(index);
        if (se == 0.0) {
            if (mean != target) worst = std::numeric_limits<double>::infinity();
            return;
        }
        worst = std::max(worst, std::abs(static_cast<double>(BigRat(mean - target))) / se);
    };
    for (const auto& [index, target] : expected) consider(index, target);
    for (const auto& [index, sums] : stats.sums)
        if (!expected.contains(index)) consider(index, 0);
    return worst;
}

CharacterCheckResult character_checks(const LinearCode& v_code, const GFVec& vprime, const OrbitTable& table,
                                      const KMatrix& k, long long limit) {
    const Field& f = table.field();
    const int n = v_code.length();
    if (static_cast<int>(vprime.size()) != n) throw std::invalid_argument("vector length mismatch");
    if (ipow(f.q(), 2 * n) > limit || v_code.size() > limit)
        throw InfeasibleError("character check exceeds limit");

    const auto dot = [&](const GFVec& a, const GFVec& b) {
        int acc = 0;
        for (size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
        return acc;
    };

    // orthogonality indicator vs average character over the subspace
    std::complex<double> avg = 0;
    bool orthogonal = true;
    for (const auto& w : v_code.codewords(limit)) {
        const int d = dot(w, vprime);
        if (d != 0) orthogonal = false;
        avg += f.character(d);
    }
    avg /= static_cast<double>(v_code.size());
    const double indicator = std::abs(avg - std::complex<double>(orthogonal ? 1.0 : 0.0, 0.0));

    // character-weighted full-space enumerator vs the kernel-matrix power,
    // for every pair (u, v)
    const auto everything = all_vectors(f, n);
    std::vector<Enumerator> forms;  // (xK)_T
    for (int t = 0; t < table.count(); ++t) {
        Enumerator form(table.count());
        Enumerator::Exp exp(table.count(), 0);
        for (int s = 0; s < table.count(); ++s) {
            exp[s] = 1;
            form.add_term(exp, k.at(s, t));
            exp[s] = 0;
        }
        forms.push_back(std::move(form));
    }
    // one representative per second-order weight class covers every class
    std::set<SowVec> seen;
    double kernel_power = 0.0;
    for (const auto& u : everything) {
        for (const auto& v : everything) {
            const SowVec index = second_order_weight(u, v, table);
            if (!seen.insert(index).second) continue;
            std::map<SowVec, std::complex<double>> lhs;
            for (const auto& up : everything)
                for (const auto& vp : everything)
                    lhs[second_order_weight(up, vp, table)] += f.character(f.add(dot(u, up), dot(v, vp)));
            Enumerator rhs = Enumerator::constant(table.count(), 1);
            for (int t = 0; t < table.count(); ++t)
                if (index[t] != 0) rhs = rhs * forms[t].pow(index[t]);
            for (const auto& [exp, coef] : rhs.terms()) {
                const auto found = lhs.find(exp);
                const std::complex<double> got = found == lhs.end() ? 0.0 : found->second;
                kernel_power = std::max(kernel_power, std::abs(got - std::complex<double>(static_cast<double>(coef), 0.0)));
                if (found != lhs.end()) lhs.erase(found);
            }
            for (const auto& [exp, got] : lhs) kernel_power = std::max(kernel_power, std::abs(got));
        }
    }
    return {indicator, kernel_power};
}

MacWilliamsBrute macwilliams_brute(const LinearCode& u_code, const LinearCode& v_code, const OrbitTable& table,
                                   const KMatrix& k, long long pair_limit) {
    const auto primal = sow_distribution(u_code, v_code, table, pair_limit);
    Enumerator primal_enum(table.count());
    for (const auto& [index, count] : primal) primal_enum.add_term(index, count);
    Enumerator transformed = transform(primal_enum, u_code.size(), v_code.size(), k);

    const auto dual_dist = sow_distribution(u_code.dual(), v_code.dual(), table, pair_limit);
    Enumerator direct(table.count());
    for (const auto& [index, count] : dual_dist) direct.add_term(index, count);
    return {std::move(transformed), std::move(direct)};
}

}  // namespace sow
