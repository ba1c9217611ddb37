// Command-line front end: orbit tables, kernel matrices, enumerators, the
// MacWilliams transform, LDPC ensemble expectations, k-good matrix checks and
// the brute-force verification oracles, all with exact rational output.

#include "sow/codes.hpp"
#include "sow/common.hpp"
#include "sow/enumerator.hpp"
#include "sow/field.hpp"
#include "sow/goodmat.hpp"
#include "sow/ldpc.hpp"
#include "sow/macwilliams.hpp"
#include "sow/oracle.hpp"
#include "sow/orbits.hpp"
#include "sow/serialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitMismatch = 3;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
    int decimal = -1;
    int threads = 1;
};

void add_output_flags(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out_path, "Write output to a file instead of stdout");
    cmd->add_option("--decimal", opts.decimal, "Add a decimal rendering with this many digits")
        ->check(CLI::Range(0, 40));
    cmd->add_option("--threads", opts.threads, "Worker cap for parallel sections")->check(CLI::Range(1, 256));
}

void emit(const OutputOptions& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        if (payload.empty() || payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + opts.out_path);
    out << payload;
    if (payload.empty() || payload.back() != '\n') out << "\n";
}

void emit_json(const OutputOptions& opts, const sow::Json& j) { emit(opts, j.dump(2)); }

int run(int argc, char** argv) {
    CLI::App app{"Second-order weight distribution toolkit"};
    app.require_subcommand(1);

    OutputOptions opts;

    // ---- orbits ----
    int orbits_q = 0;
    auto* orbits_cmd = app.add_subcommand("orbits", "Orbit structure of scalar action on F_q^2");
    orbits_cmd->add_option("--q", orbits_q, "Field order")->required();
    add_output_flags(orbits_cmd, opts);

    // ---- kmatrix ----
    int kmatrix_q = 0;
    auto* kmatrix_cmd = app.add_subcommand("kmatrix", "Kernel matrix of the MacWilliams transform");
    kmatrix_cmd->add_option("--q", kmatrix_q, "Field order")->required();
    add_output_flags(kmatrix_cmd, opts);

    // ---- enumerator ----
    std::string enum_kind;
    int enum_q = 0, enum_param = 0, enum_n = -1;
    auto* enum_cmd = app.add_subcommand("enumerator", "Closed-form pair enumerators");
    enum_cmd->add_option("kind", enum_kind, "repetition | check | complete")
        ->required()
        ->check(CLI::IsMember({"repetition", "check", "complete"}));
    enum_cmd->add_option("--q", enum_q, "Field order")->required();
    enum_cmd->add_option("--param", enum_param, "Length parameter (c, d, or n)");
    enum_cmd->add_option("--n", enum_n, "Length for the complete enumerator");
    add_output_flags(enum_cmd, opts);

    // ---- transform ----
    int tr_q = 0;
    std::string tr_in;
    long long tr_size_u = 0, tr_size_v = 0;
    auto* tr_cmd = app.add_subcommand("transform", "Apply the MacWilliams transform to an enumerator file");
    tr_cmd->add_option("--q", tr_q, "Field order")->required();
    tr_cmd->add_option("--in", tr_in, "Enumerator JSON file")->required()->check(CLI::ExistingFile);
    tr_cmd->add_option("--size-u", tr_size_u, "|U| of the primal pair")->required();
    tr_cmd->add_option("--size-v", tr_size_v, "|V| of the primal pair")->required();
    add_output_flags(tr_cmd, opts);

    // ---- ldpc ----
    std::string ldpc_kind;
    int ldpc_q = 0, ldpc_c = 0, ldpc_d = 0, ldpc_n = 0;
    std::vector<int> ldpc_moment;
    auto* ldpc_cmd = app.add_subcommand("ldpc", "Expected second-order weight distributions of LDPC ensembles");
    ldpc_cmd->add_option("kind", ldpc_kind, "one | two")->required()->check(CLI::IsMember({"one", "two"}));
    ldpc_cmd->add_option("--q", ldpc_q, "Field order")->required();
    ldpc_cmd->add_option("--c", ldpc_c, "Column weight")->required();
    ldpc_cmd->add_option("--d", ldpc_d, "Row weight")->required();
    ldpc_cmd->add_option("--n", ldpc_n, "Block length")->required();
    ldpc_cmd->add_option("--moment", ldpc_moment, "Also report E[A_j A_k] for this (j, k)")->expected(2);
    add_output_flags(ldpc_cmd, opts);

    // ---- goodmat ----
    auto* goodmat_cmd = app.add_subcommand("goodmat", "k-good random matrices");
    goodmat_cmd->require_subcommand(1);

    int verify_k = 0;
    std::string verify_support;
    auto* verify_cmd = goodmat_cmd->add_subcommand("verify", "Exhaustively test k-goodness of a support file");
    verify_cmd->add_option("--k", verify_k, "Rank parameter")->required();
    verify_cmd->add_option("--support", verify_support, "Matrix support file")->required()->check(CLI::ExistingFile);
    add_output_flags(verify_cmd, opts);

    std::string th4_side;
    int th4_q = 0, th4_m = 0, th4_n = 0;
    auto* th4_cmd = goodmat_cmd->add_subcommand("theorem4", "Closed-form 2-good ensemble enumerators");
    th4_cmd->add_option("--side", th4_side, "gen | par")->required()->check(CLI::IsMember({"gen", "par"}));
    th4_cmd->add_option("--q", th4_q, "Field order")->required();
    th4_cmd->add_option("--m", th4_m, "Matrix rows")->required();
    th4_cmd->add_option("--n", th4_n, "Matrix columns")->required();
    add_output_flags(th4_cmd, opts);

    auto* mrd_cmd = goodmat_cmd->add_subcommand("mrd-demo", "The two rank-metric example ensembles");
    add_output_flags(mrd_cmd, opts);

    int co1_q = 0, co1_m = 0, co1_n = 0;
    auto* co1_cmd = goodmat_cmd->add_subcommand("corollary1", "Joint image distribution under a uniform matrix");
    co1_cmd->add_option("--q", co1_q, "Field order")->required();
    co1_cmd->add_option("--m", co1_m, "Matrix rows")->required();
    co1_cmd->add_option("--n", co1_n, "Matrix columns")->required();
    add_output_flags(co1_cmd, opts);

    // ---- bounds ----
    auto* bounds_cmd = app.add_subcommand("bounds", "Random-coding bounds");
    bounds_cmd->require_subcommand(1);
    int bi_q = 0, bi_m = 0, bi_n = 0;
    auto* bi_cmd = bounds_cmd->add_subcommand("intersecting", "Intersecting-code random-coding bounds");
    bi_cmd->add_option("--q", bi_q, "Field order")->required();
    bi_cmd->add_option("--m", bi_m, "Rate numerator")->required();
    bi_cmd->add_option("--n", bi_n, "Block length")->required();
    add_output_flags(bi_cmd, opts);

    // ---- oracle ----
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force verification of the closed forms");
    oracle_cmd->require_subcommand(1);

    int ol4_q = 0, ol4_n = 0;
    auto* ol4_cmd = oracle_cmd->add_subcommand("lemma4", "Monomial-map probabilities vs weight counts");
    ol4_cmd->add_option("--q", ol4_q, "Field order")->required();
    ol4_cmd->add_option("--n", ol4_n, "Length")->required()->check(CLI::Range(1, 6));
    add_output_flags(ol4_cmd, opts);

    std::string ole_kind;
    int ole_q = 0, ole_c = 0, ole_d = 0, ole_n = 0;
    auto* ole_cmd = oracle_cmd->add_subcommand("ldpc-exact", "Closed forms vs exhaustive ensemble averages");
    ole_cmd->add_option("kind", ole_kind, "one | two")->required()->check(CLI::IsMember({"one", "two"}));
    ole_cmd->add_option("--q", ole_q, "Field order")->required();
    ole_cmd->add_option("--c", ole_c, "Column weight")->required();
    ole_cmd->add_option("--d", ole_d, "Row weight")->required();
    ole_cmd->add_option("--n", ole_n, "Block length")->required();
    add_output_flags(ole_cmd, opts);

    std::string olm_kind;
    int olm_q = 0, olm_c = 0, olm_d = 0, olm_n = 0;
    long long olm_trials = 10000;
    std::uint64_t olm_seed = 1;
    auto* olm_cmd = oracle_cmd->add_subcommand("ldpc-mc", "Monte Carlo vs the analytic distribution");
    olm_cmd->add_option("kind", olm_kind, "one | two")->required()->check(CLI::IsMember({"one", "two"}));
    olm_cmd->add_option("--q", olm_q, "Field order")->required();
    olm_cmd->add_option("--c", olm_c, "Column weight")->required();
    olm_cmd->add_option("--d", olm_d, "Row weight")->required();
    olm_cmd->add_option("--n", olm_n, "Block length")->required();
    olm_cmd->add_option("--trials", olm_trials, "Sample count");
    olm_cmd->add_option("--seed", olm_seed, "Base seed");
    add_output_flags(olm_cmd, opts);

    int och_q = 0, och_n = 0;
    auto* och_cmd = oracle_cmd->add_subcommand("characters", "Additive-character identities");
    och_cmd->add_option("--q", och_q, "Field order")->required();
    och_cmd->add_option("--n", och_n, "Length")->required()->check(CLI::Range(1, 3));
    add_output_flags(och_cmd, opts);

    int omw_q = 0, omw_n = 0;
    long long omw_pairs = 0;
    std::uint64_t omw_seed = 1;
    auto* omw_cmd = oracle_cmd->add_subcommand("macwilliams", "Transform vs brute-force dual enumerators");
    omw_cmd->add_option("--q", omw_q, "Field order")->required();
    omw_cmd->add_option("--n", omw_n, "Length")->required()->check(CLI::Range(1, 6));
    omw_cmd->add_option("--pairs", omw_pairs, "Random subspace pairs to draw (0 = exhaustive)");
    omw_cmd->add_option("--seed", omw_seed, "Seed for random pairs");
    add_output_flags(omw_cmd, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (orbits_cmd->parsed()) {
        const sow::OrbitTable table(sow::Field::from_order(orbits_q));
        if (opts.format == "csv") {
            std::ostringstream csv;
            csv << "index,rep_u,rep_v,size\n";
            for (int s = 0; s < table.count(); ++s) {
                const auto [u, v] = table.rep(s);
                csv << s << "," << u << "," << v << "," << table.size(s) << "\n";
            }
            emit(opts, csv.str());
        } else {
            emit_json(opts, sow::orbits_json(table));
        }
        return kExitOk;
    }

    if (kmatrix_cmd->parsed()) {
        const sow::OrbitTable table(sow::Field::from_order(kmatrix_q));
        const auto k = sow::build_k_matrix(table);
        if (opts.format == "csv") {
            std::ostringstream csv;
            for (int s = 0; s < table.count(); ++s)
                for (int t = 0; t < table.count(); ++t)
                    csv << k.at(s, t) << (t + 1 == table.count() ? "\n" : ",");
            emit(opts, csv.str());
        } else {
            emit_json(opts, sow::kmatrix_json(k, table));
        }
        return kExitOk;
    }

    if (enum_cmd->parsed()) {
        const sow::OrbitTable table(sow::Field::from_order(enum_q));
        sow::Enumerator result(table.count());
        if (enum_kind == "repetition") {
            result = sow::repetition_enumerator(enum_param, table);
        } else if (enum_kind == "check") {
            result = sow::check_enumerator(enum_param, table, sow::build_k_matrix(table));
        } else {
            const int n = enum_n >= 0 ? enum_n : enum_param;
            result = sow::complete_enumerator(table, n);
        }
        if (opts.format == "csv") {
            emit(opts, sow::enumerator_csv(result, table, opts.decimal));
        } else {
            sow::Json j = sow::enumerator_json(result);
            j["orbit_order"] = sow::orbit_order_json(table);
            emit_json(opts, j);
        }
        return kExitOk;
    }

    if (tr_cmd->parsed()) {
        const sow::OrbitTable table(sow::Field::from_order(tr_q));
        std::ifstream in(tr_in);
        sow::Json j;
        in >> j;
        const sow::Enumerator w = sow::enumerator_from_json(j);
        const auto k = sow::build_k_matrix(table);
        const sow::Enumerator result = sow::transform(w, tr_size_u, tr_size_v, k);
        if (opts.format == "csv") {
            emit(opts, sow::enumerator_csv(result, table, opts.decimal));
        } else {
            sow::Json out = sow::enumerator_json(result);
            out["orbit_order"] = sow::orbit_order_json(table);
            emit_json(opts, out);
        }
        return kExitOk;
    }

    if (ldpc_cmd->parsed()) {
        const sow::Field field = sow::Field::from_order(ldpc_q);
        const sow::OrbitTable table(field);
        const auto k = sow::build_k_matrix(table);
        const auto kind = ldpc_kind == "one" ? sow::EnsembleSpec::Kind::I : sow::EnsembleSpec::Kind::II;
        const sow::EnsembleSpec spec(kind, field, ldpc_c, ldpc_d, ldpc_n);
        const auto dist = kind == sow::EnsembleSpec::Kind::I ? sow::ldpc1_expected(spec, table, k)
                                                             : sow::ldpc2_expected(spec, table, k);
        if (!ldpc_moment.empty()) {
            const sow::BigRat moment = sow::expected_second_moment(dist, ldpc_moment[0], ldpc_moment[1]);
            sow::Json j;
            j["kind"] = ldpc_kind == "one" ? "I" : "II";
            j["q"] = ldpc_q;
            j["c"] = ldpc_c;
            j["d"] = ldpc_d;
            j["n"] = ldpc_n;
            j["j"] = ldpc_moment[0];
            j["k"] = ldpc_moment[1];
            j["second_moment"] = sow::rat_to_string(moment);
            if (opts.decimal >= 0) j["second_moment_decimal"] = sow::rat_to_decimal(moment, opts.decimal);
            emit_json(opts, j);
        } else if (opts.format == "csv") {
            emit(opts, sow::distribution_csv(dist, table, opts.decimal));
        } else {
            emit_json(opts, sow::distribution_json(dist, table, opts.decimal));
        }
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        std::ifstream in(verify_support);
        const auto ensemble = sow::MatrixEnsemble::read(in);
        const bool good = sow::is_k_good(ensemble, verify_k);
        sow::Json j;
        j["k"] = verify_k;
        j["support_size"] = ensemble.size().str();
        j["m"] = ensemble.m();
        j["n"] = ensemble.n();
        j["q"] = ensemble.field().q();
        j["k_good"] = good;
        emit_json(opts, j);
        return kExitOk;
    }

    if (th4_cmd->parsed()) {
        const sow::OrbitTable table(sow::Field::from_order(th4_q));
        const sow::Enumerator result = th4_side == "gen" ? sow::two_good_generator_expectation(th4_m, th4_n, table)
                                                         : sow::two_good_parity_expectation(th4_m, th4_n, table);
        if (opts.format == "csv") {
            emit(opts, sow::enumerator_csv(result, table, opts.decimal));
        } else {
            sow::Json j = sow::enumerator_json(result);
            j["orbit_order"] = sow::orbit_order_json(table);
            j["side"] = th4_side;
            emit_json(opts, j);
        }
        return kExitOk;
    }

    if (mrd_cmd->parsed()) {
        const auto [a1, a2] = sow::mrd_examples();
        sow::Json j;
        j["a1_size"] = a1.size().str();
        j["a2_size"] = a2.size().str();
        j["a1_1good"] = sow::is_k_good(a1, 1);
        j["a1_2good"] = sow::is_k_good(a1, 2);
        j["a2_2good"] = sow::is_k_good(a2, 2);
        std::ostringstream s1, s2;
        a1.write(s1);
        a2.write(s2);
        j["a1_support"] = s1.str();
        j["a2_support"] = s2.str();
        emit_json(opts, j);
        return kExitOk;
    }

    if (co1_cmd->parsed()) {
        const sow::Field field = sow::Field::from_order(co1_q);
        // exhaustive check over all input pairs (x, x')
        bool all_match = true;
        long long cases = 0;
        std::vector<sow::GFVec> inputs;
        sow::GFVec x(co1_m, 0);
        while (true) {
            inputs.push_back(x);
            size_t i = 0;
            while (i < x.size() && ++x[i] == field.q()) x[i++] = 0;
            if (i == x.size()) break;
        }
        for (const auto& xa : inputs)
            for (const auto& xb : inputs) {
                const auto dist = sow::uniform_image_distribution(field, co1_m, co1_n, xa, xb);
                sow::BigRat mass = 0;
                for (const auto& [images, prob] : dist) {
                    if (prob != sow::uniform_image_probability(field, co1_n, xa, xb, images.first, images.second))
                        all_match = false;
                    mass += prob;
                }
                if (mass != 1) all_match = false;
                ++cases;
            }
        sow::Json j;
        j["q"] = co1_q;
        j["m"] = co1_m;
        j["n"] = co1_n;
        j["input_pairs"] = cases;
        j["status"] = all_match ? "pass" : "fail";
        emit_json(opts, j);
        return all_match ? kExitOk : kExitMismatch;
    }

    if (bi_cmd->parsed()) {
        const auto report = sow::intersecting_report(bi_q, bi_m, bi_n);
        emit_json(opts, sow::intersecting_json(report, bi_q, bi_m, bi_n));
        return kExitOk;
    }

    if (ol4_cmd->parsed()) {
        const sow::Field field = sow::Field::from_order(ol4_q);
        const sow::OrbitTable table(field);
        // atomic codes and a couple of seeded random codes, against all (u, v)
        std::vector<sow::LinearCode> codes{sow::LinearCode::repetition(ol4_n, field),
                                           sow::LinearCode::check(ol4_n, field)};
        sow::CounterRng rng(12345, 0);
        for (int extra = 0; extra < 2; ++extra) {
            sow::MatrixGF g(field, 1 + extra, ol4_n);
            for (int i = 0; i < g.rows(); ++i)
                for (int jcol = 0; jcol < ol4_n; ++jcol)
                    g.set(i, jcol, static_cast<int>(rng.next_below(field.q())));
            codes.push_back(sow::LinearCode::from_generator(g));
        }
        bool all_equal = true;
        long long checked = 0;
        std::vector<sow::GFVec> vectors;
        sow::GFVec v(ol4_n, 0);
        while (true) {
            vectors.push_back(v);
            size_t i = 0;
            while (i < v.size() && ++v[i] == field.q()) v[i++] = 0;
            if (i == v.size()) break;
        }
        for (const auto& cu : codes)
            for (const auto& cv : codes)
                for (const auto& u : vectors)
                    for (const auto& w : vectors) {
                        const auto res = sow::membership_probability_exact(cu, cv, u, w, table);
                        if (res.lhs != res.rhs) all_equal = false;
                        ++checked;
                    }
        sow::Json j;
        j["check"] = "lemma4";
        j["q"] = ol4_q;
        j["n"] = ol4_n;
        j["cases"] = checked;
        j["max_abs_error"] = all_equal ? "0" : "nonzero";
        j["status"] = all_equal ? "pass" : "fail";
        emit_json(opts, j);
        return all_equal ? kExitOk : kExitMismatch;
    }

    if (ole_cmd->parsed()) {
        const sow::Field field = sow::Field::from_order(ole_q);
        const sow::OrbitTable table(field);
        const auto k = sow::build_k_matrix(table);
        const auto kind = ole_kind == "one" ? sow::EnsembleSpec::Kind::I : sow::EnsembleSpec::Kind::II;
        const sow::EnsembleSpec spec(kind, field, ole_c, ole_d, ole_n);
        const auto exact = sow::ldpc_exact_expectation(spec);
        const auto closed = kind == sow::EnsembleSpec::Kind::I ? sow::ldpc1_expected(spec, table, k)
                                                               : sow::ldpc2_expected(spec, table, k);
        const bool match = exact.values == closed.values;
        sow::Json j;
        j["check"] = std::string("theorem") + (kind == sow::EnsembleSpec::Kind::I ? "2" : "3");
        j["q"] = ole_q;
        j["c"] = ole_c;
        j["d"] = ole_d;
        j["n"] = ole_n;
        j["indices"] = closed.values.size();
        j["max_abs_error"] = match ? "0" : "nonzero";
        j["status"] = match ? "pass" : "fail";
        emit_json(opts, j);
        return match ? kExitOk : kExitMismatch;
    }

    if (olm_cmd->parsed()) {
        const sow::Field field = sow::Field::from_order(olm_q);
        const sow::OrbitTable table(field);
        const auto k = sow::build_k_matrix(table);
        const auto kind = olm_kind == "one" ? sow::EnsembleSpec::Kind::I : sow::EnsembleSpec::Kind::II;
        const sow::EnsembleSpec spec(kind, field, olm_c, olm_d, olm_n);
        const auto expected = kind == sow::EnsembleSpec::Kind::I ? sow::ldpc1_expected(spec, table, k)
                                                                 : sow::ldpc2_expected(spec, table, k);
        const auto stats = sow::monte_carlo_ldpc(spec, olm_trials, olm_seed, opts.threads);
        const sow::Json j = sow::mc_report_json(stats, expected.values, table);
        emit_json(opts, j);
        return j.at("status") == "pass" ? kExitOk : kExitMismatch;
    }

    if (och_cmd->parsed()) {
        const sow::Field field = sow::Field::from_order(och_q);
        const sow::OrbitTable table(field);
        const auto k = sow::build_k_matrix(table);
        double worst8 = 0.0, worst9 = 0.0;
        // subspaces: zero, repetition, check, full
        std::vector<sow::LinearCode> codes{sow::LinearCode(field, och_n), sow::LinearCode::repetition(och_n, field),
                                           sow::LinearCode::check(och_n, field),
                                           sow::LinearCode::full_space(field, och_n)};
        sow::GFVec vp(och_n, 0);
        while (true) {
            for (const auto& code : codes) {
                const auto res = sow::character_checks(code, vp, table, k);
                worst8 = std::max(worst8, res.indicator_residual);
                worst9 = std::max(worst9, res.kernel_power_residual);
            }
            size_t i = 0;
            while (i < vp.size() && ++vp[i] == field.q()) vp[i++] = 0;
            if (i == vp.size()) break;
        }
        const bool pass = worst8 < 1e-6 && worst9 < 1e-6;
        sow::Json j;
        j["check"] = "characters";
        j["q"] = och_q;
        j["n"] = och_n;
        j["indicator_residual"] = worst8;
        j["kernel_power_residual"] = worst9;
        j["status"] = pass ? "pass" : "fail";
        emit_json(opts, j);
        return pass ? kExitOk : kExitMismatch;
    }

    if (omw_cmd->parsed()) {
        const sow::Field field = sow::Field::from_order(omw_q);
        const sow::OrbitTable table(field);
        const auto k = sow::build_k_matrix(table);
        bool all_equal = true;
        long long checked = 0;
        const auto check_pair = [&](const sow::LinearCode& cu, const sow::LinearCode& cv) {
            const auto res = sow::macwilliams_brute(cu, cv, table, k);
            if (res.transformed != res.direct) all_equal = false;
            ++checked;
        };
        if (omw_pairs <= 0) {
            // exhaustive over all subspace pairs
            std::vector<sow::LinearCode> subspaces;
            std::vector<sow::MatrixGF> gens;
            sow::MatrixGF g(field, omw_n, omw_n);
            std::function<void(int)> fill = [&](int cell) {
                if (cell == omw_n * omw_n) {
                    auto code = sow::LinearCode::from_generator(g);
                    if (std::none_of(subspaces.begin(), subspaces.end(),
                                     [&](const sow::LinearCode& c) { return c == code; }))
                        subspaces.push_back(std::move(code));
                    return;
                }
                for (int v0 = 0; v0 < field.q(); ++v0) {
                    g.set(cell / omw_n, cell % omw_n, v0);
                    fill(cell + 1);
                }
            };
            fill(0);
            for (const auto& cu : subspaces)
                for (const auto& cv : subspaces) check_pair(cu, cv);
        } else {
            sow::CounterRng rng(omw_seed, 0);
            for (long long t = 0; t < omw_pairs; ++t) {
                const auto random_code = [&]() {
                    const int rows = 1 + static_cast<int>(rng.next_below(omw_n));
                    sow::MatrixGF g(field, rows, omw_n);
                    for (int i = 0; i < rows; ++i)
                        for (int jcol = 0; jcol < omw_n; ++jcol)
                            g.set(i, jcol, static_cast<int>(rng.next_below(field.q())));
                    return sow::LinearCode::from_generator(g);
                };
                check_pair(random_code(), random_code());
            }
        }
        sow::Json j;
        j["check"] = "macwilliams";
        j["q"] = omw_q;
        j["n"] = omw_n;
        j["pairs"] = checked;
        j["max_abs_error"] = all_equal ? "0" : "nonzero";
        j["status"] = all_equal ? "pass" : "fail";
        emit_json(opts, j);
        return all_equal ? kExitOk : kExitMismatch;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const sow::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
