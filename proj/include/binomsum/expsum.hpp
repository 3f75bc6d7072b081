#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <vector>

#include "binomsum/arith.hpp"
#include "binomsum/numeric.hpp"

// Single binomial exponential sums over the unit group of Z_q:
//
//   S_{k,l,q}(m,n) = sum over x in Z_q^* of e_q(m x^k + n x^l),
//   e_q(z) = exp(2 pi i z / q),
//
// where negative exponents act through modular inversion. Evaluation is
// float with a tracked absolute error bound (see ComplexValue), which is
// sufficient for every check in this project; no exact cyclotomic arithmetic.
namespace binomsum::expsum {

// Precomputed roots of unity e_q(j) for j in [0, q). Immutable after
// construction and safe to share across threads.
class RootTable {
  public:
    explicit RootTable(u64 q);

    u64 modulus() const { return q_; }

    // e_q(j) for reduced j in [0, q).
    std::complex<double> root(u64 j) const { return roots_[j]; }

    // e_q(z) with signed z reduced mod q first.
    ComplexValue e(i64 z) const;

  private:
    u64 q_;
    std::vector<std::complex<double>> roots_;
};

// One-off e_q(z); identical values to RootTable entries.
ComplexValue e_q(i64 z, u64 q);

// Identifies one exponential sum: exponents (k, l), modulus q, and the
// coefficient pair (m, n) reduced into [0, q).
struct SumSpec {
    i64 k;
    i64 ell;
    u64 q;
    u64 m;
    u64 n;

    // Accepts signed coefficients and reduces them mod q. Both exponents must
    // be nonzero.
    SumSpec(i64 k_, i64 ell_, u64 q_, i64 m_, i64 n_);
};

// Per-modulus evaluation context: root table, the unit list, and optional
// per-exponent power tables for the units. Construct, optionally call
// precompute_powers, then share read-only; many sums for the same q may be
// evaluated concurrently against one context.
class QContext {
  public:
    explicit QContext(u64 q);

    u64 modulus() const { return q_; }
    const RootTable& roots() const { return roots_; }
    const std::vector<u64>& unit_list() const { return units_; }

    // Precompute x^e mod q for every unit x and each listed exponent.
    // Not thread-safe; do this before sharing the context.
    void precompute_powers(std::initializer_list<i64> exponents);

    // Cached power table for exponent e, or nullptr if not precomputed.
    const std::vector<u64>* powers(i64 e) const;

  private:
    u64 q_;
    RootTable roots_;
    std::vector<u64> units_;
    std::map<i64, std::vector<u64>> power_tables_;
};

// S_{k,l,q}(m,n) by direct compensated summation over the units. The err
// field stays below 1e-9 for q up to 10^6. q = 1 yields exactly 0.
ComplexValue binomial_sum(const SumSpec& spec, const QContext& ctx);
ComplexValue binomial_sum(const SumSpec& spec);

// The (k, l) = (1, -1) special case at prime modulus. Kloosterman sums are
// real; the imaginary part of the result is bounded by err. Throws
// NotPrimeError for composite p.
ComplexValue kloosterman(u64 p, i64 m, i64 n, const QContext& ctx);
ComplexValue kloosterman(u64 p, i64 m, i64 n);

// Signed value reduced into [0, q).
u64 reduce_mod(i64 v, u64 q);

}  // namespace binomsum::expsum
