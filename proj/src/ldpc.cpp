#include "sow/ldpc.hpp"

#include <stdexcept>

namespace sow {

EnsembleSpec::EnsembleSpec(Kind kind_, Field field_, int c_, int d_, int n_)
    : kind(kind_), field(std::move(field_)), c(c_), d(d_), n(n_) {
    if (c < 1 || d < 1 || n < 1) throw std::invalid_argument("ensemble parameters must be positive");
    if (kind == Kind::I && n % d != 0) throw std::invalid_argument("ensemble I requires d | n");
    if (kind == Kind::II && (c * n) % d != 0) throw std::invalid_argument("ensemble II requires d | cn");
}

Enumerator repetition_enumerator(int c, const OrbitTable& table) {
    if (c < 1) throw std::invalid_argument("repetition length must be >= 1");
    const int nv = table.count();
    Enumerator out(nv);
    Enumerator::Exp exp(nv, 0);
    exp[OrbitTable::kE00] = c;
    out.add_term(exp, 1);
    exp[OrbitTable::kE00] = 0;
    for (int s = 1; s < nv; ++s) {
        exp[s] = c;
        out.add_term(exp, table.q() - 1);
        exp[s] = 0;
    }
    return out;
}

Enumerator check_enumerator(int d, const OrbitTable& table, const KMatrix& k) {
    if (d < 1) throw std::invalid_argument("check length must be >= 1");
    const int nv = table.count();
    Enumerator total(nv);
    for (int t = 0; t < nv; ++t) {
        Enumerator form(nv);
        Enumerator::Exp exp(nv, 0);
        for (int s = 0; s < nv; ++s) {
            exp[s] = 1;
            form.add_term(exp, k.at(s, t));
            exp[s] = 0;
        }
        Enumerator powed = form.pow(d);
        if (t != OrbitTable::kE00) powed.scale(table.q() - 1);
        total += powed;
    }
    total.scale(BigRat(1, static_cast<long long>(table.q()) * table.q()));
    return total;
}

EnsembleDistribution ldpc1_expected(const EnsembleSpec& spec, const OrbitTable& table, const KMatrix& k) {
    if (spec.kind != EnsembleSpec::Kind::I) throw std::invalid_argument("spec is not an ensemble I");
    const Enumerator power = check_enumerator(spec.d, table, k).pow(spec.n / spec.d);
    EnsembleDistribution dist{spec, {}};
    for (const auto& [index, coef] : power.terms()) {
        const BigRat numerator = rpow(coef, spec.c);
        const BigRat denominator = rpow(BigRat(complete_count(table, spec.n, index)), spec.c - 1);
        dist.values.emplace(index, numerator / denominator);
    }
    return dist;
}

EnsembleDistribution ldpc2_expected(const EnsembleSpec& spec, const OrbitTable& table, const KMatrix& k) {
    if (spec.kind != EnsembleSpec::Kind::II) throw std::invalid_argument("spec is not an ensemble II");
    const Enumerator power = check_enumerator(spec.d, table, k).pow((spec.c * spec.n) / spec.d);
    EnsembleDistribution dist{spec, {}};
    for (const auto& [scaled, coef] : power.terms()) {
        SowVec index(scaled.size());
        bool divisible = true;
        for (size_t s = 0; s < scaled.size(); ++s) {
            if (scaled[s] % spec.c != 0) {
                divisible = false;
                break;
            }
            index[s] = scaled[s] / spec.c;
        }
        if (!divisible) continue;
        const BigRat numerator = BigRat(multinomial(spec.n, index)) * coef;
        const BigRat denominator =
            BigRat(multinomial(spec.c * spec.n, scaled)) *
            ipow(table.q() - 1, static_cast<long long>(spec.c - 1) * (spec.n - index[OrbitTable::kE00]));
        dist.values.emplace(std::move(index), numerator / denominator);
    }
    return dist;
}

BigRat expected_second_moment(const EnsembleDistribution& dist, int j, int k) {
    const OrbitTable table(dist.spec.field);
    return second_moment_pair(dist.values, j, k, dist.spec.n, table);
}

Enumerator binary_check_form(int d) {
    if (d < 1) throw std::invalid_argument("check length must be >= 1");
    static const int signs[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    Enumerator total(4);
    for (const auto& row : signs) {
        Enumerator form(4);
        for (int s = 0; s < 4; ++s) {
            Enumerator::Exp exp(4, 0);
            exp[s] = 1;
            form.add_term(exp, row[s]);
        }
        total += form.pow(d);
    }
    total.scale(BigRat(1, 4));
    return total;
}

BigRat binary_second_moment(EnsembleSpec::Kind kind, int c, int d, int n, int j, int k) {
    if (j < 0 || k < 0 || j > n || k > n) throw std::invalid_argument("weights out of range");
    if (kind == EnsembleSpec::Kind::I && n % d != 0) throw std::invalid_argument("ensemble I requires d | n");
    if (kind == EnsembleSpec::Kind::II && (c * n) % d != 0) throw std::invalid_argument("ensemble II requires d | cn");
    const Enumerator power =
        binary_check_form(d).pow(kind == EnsembleSpec::Kind::I ? n / d : (c * n) / d);
    BigRat total = 0;
    for (int l = std::max(0, j + k - n); l <= std::min(j, k); ++l) {
        const SowVec index{n - j - k + l, k - l, j - l, l};
        if (kind == EnsembleSpec::Kind::I) {
            const BigRat coef = power.coefficient(index);
            total += rpow(coef, c) / rpow(BigRat(multinomial(n, index)), c - 1);
        } else {
            SowVec scaled(4);
            for (int s = 0; s < 4; ++s) scaled[s] = c * index[s];
            total += BigRat(multinomial(n, index)) * power.coefficient(scaled) /
                     BigRat(multinomial(c * n, scaled));
        }
    }
    return total;
}

}  // namespace sow
