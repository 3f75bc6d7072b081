#include "binomsum/expsum.hpp"

#include <cmath>

namespace binomsum::expsum {

namespace {

constexpr long double kTwoPiL = 6.283185307179586476925286766559005768L;

// exp(2 pi i j / q) with the angle formed in extended precision, keeping each
// table entry within ~2 ulp of the exact root.
std::complex<double> unit_root(u64 j, u64 q) {
    long double theta = kTwoPiL * static_cast<long double>(j) / static_cast<long double>(q);
    return {static_cast<double>(std::cos(theta)), static_cast<double>(std::sin(theta))};
}

}  // namespace

u64 reduce_mod(i64 v, u64 q) {
    i64 m = static_cast<i64>(q);
    i64 r = v % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

RootTable::RootTable(u64 q) : q_(q) {
    if (q == 0) throw RangeError("RootTable: modulus q must be >= 1");
    roots_.resize(q);
    for (u64 j = 0; j < q; ++j) roots_[j] = unit_root(j, q);
}

ComplexValue RootTable::e(i64 z) const {
    auto r = roots_[reduce_mod(z, q_)];
    return {r.real(), r.imag(), kRootTermEps};
}

ComplexValue e_q(i64 z, u64 q) {
    if (q == 0) throw RangeError("e_q: modulus q must be >= 1");
    auto r = unit_root(reduce_mod(z, q), q);
    return {r.real(), r.imag(), kRootTermEps};
}

SumSpec::SumSpec(i64 k_, i64 ell_, u64 q_, i64 m_, i64 n_) : k(k_), ell(ell_), q(q_) {
    if (k == 0 || ell == 0) throw RangeError("SumSpec: exponents k and ell must be nonzero");
    if (q == 0) throw RangeError("SumSpec: modulus q must be >= 1");
    m = reduce_mod(m_, q);
    n = reduce_mod(n_, q);
}

QContext::QContext(u64 q) : q_(q), roots_(q), units_(arith::units(q)) {}

void QContext::precompute_powers(std::initializer_list<i64> exponents) {
    for (i64 e : exponents) {
        if (power_tables_.count(e)) continue;
        std::vector<u64> table(units_.size());
        for (std::size_t i = 0; i < units_.size(); ++i) {
            table[i] = arith::mod_pow_signed(units_[i], e, q_);
        }
        power_tables_.emplace(e, std::move(table));
    }
}

const std::vector<u64>* QContext::powers(i64 e) const {
    auto it = power_tables_.find(e);
    return it == power_tables_.end() ? nullptr : &it->second;
}

ComplexValue binomial_sum(const SumSpec& spec, const QContext& ctx) {
    if (spec.q != ctx.modulus()) throw RangeError("binomial_sum: context modulus mismatch");
    if (spec.q == 1) return {};  // empty unit group

    const auto& us = ctx.unit_list();
    const auto* pk = ctx.powers(spec.k);
    const auto* pl = ctx.powers(spec.ell);
    const RootTable& roots = ctx.roots();
    const u64 q = spec.q;

    KahanComplexSum acc;
    for (std::size_t i = 0; i < us.size(); ++i) {
        u64 xk = pk ? (*pk)[i] : arith::mod_pow_signed(us[i], spec.k, q);
        u64 xl = pl ? (*pl)[i] : arith::mod_pow_signed(us[i], spec.ell, q);
        u64 idx = static_cast<u64>((u128(spec.m) * xk + u128(spec.n) * xl) % q);
        acc.add(roots.root(idx), kRootTermEps);
    }
    return acc.result();
}

ComplexValue binomial_sum(const SumSpec& spec) {
    QContext ctx(spec.q);
    return binomial_sum(spec, ctx);
}

ComplexValue kloosterman(u64 p, i64 m, i64 n, const QContext& ctx) {
    if (!arith::is_prime(p)) {
        throw NotPrimeError("kloosterman: modulus " + std::to_string(p) + " is not prime");
    }
    return binomial_sum(SumSpec(1, -1, p, m, n), ctx);
}

ComplexValue kloosterman(u64 p, i64 m, i64 n) {
    if (!arith::is_prime(p)) {
        throw NotPrimeError("kloosterman: modulus " + std::to_string(p) + " is not prime");
    }
    return binomial_sum(SumSpec(1, -1, p, m, n));
}

}  // namespace binomsum::expsum
