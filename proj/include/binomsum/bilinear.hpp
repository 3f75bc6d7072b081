#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "binomsum/expsum.hpp"

// Bilinear forms of binomial sums,
//
//   S(A,B) = sum_m sum_n alpha_m beta_n S_{k,l,q}(m,n),
//
// with two evaluation routes: a literal triple loop (the oracle) and a fast
// route that exchanges the order of summation,
//
//   S(A,B) = sum over x in Z_q^* of T_A(x^k) * T_B(x^l),
//   T_W(t) = sum_m w_m e_q(m t),
//
// where T_W is one length-q spectrum, so the whole form costs O(q log q)
// plus one pass over the units.
namespace binomsum::bilinear {

// A block of N consecutive residues {L+1, ..., L+N} of Z_q, reduced mod q
// (q-1 is followed by 0). 0 <= N <= q.
struct IntervalSpec {
    u64 start = 0;   // L
    u64 length = 0;  // N
    u64 q = 1;

    IntervalSpec(u64 start_, u64 length_, u64 q_);
};

// Sparse weight sequence over Z_q with cached l1/l2/linf norms. Support
// residues are strictly increasing; duplicate residues passed to from_pairs
// are merged by adding their weights.
class WeightVec {
  public:
    WeightVec() = default;

    static WeightVec from_pairs(u64 q, std::vector<std::pair<u64, std::complex<double>>> entries);

    // Weight 1 at each interval element: l1 = N, l2 = sqrt(N), linf = 1.
    static WeightVec all_ones(const IntervalSpec& iv);

    // Independent uniform [-1, 1] real weights at the interval elements,
    // drawn from SplitMix64(seed) in interval order.
    static WeightVec random_interval(const IntervalSpec& iv, u64 seed);

    // Text file with one "residue weight" pair per line ("#" comments).
    static WeightVec from_file(u64 q, const std::string& path);

    u64 modulus() const { return q_; }
    const std::vector<std::pair<u64, std::complex<double>>>& support() const { return support_; }
    std::size_t size() const { return support_.size(); }

    double l1() const { return l1_; }
    double l2() const { return l2_; }
    double linf() const { return linf_; }

  private:
    u64 q_ = 1;
    std::vector<std::pair<u64, std::complex<double>>> support_;
    double l1_ = 0, l2_ = 0, linf_ = 0;

    void compute_norms();
};

// Spec-facing alias for the all-ones construction.
WeightVec weights_from_interval(const IntervalSpec& iv);

// The reference triple loop (m, n, x), evaluated exactly as written. Serves
// as the oracle for bilinear_fast and stays deliberately unoptimized beyond
// hoisting the unit power tables out of the loops.
ComplexValue bilinear_naive(const WeightVec& A, const WeightVec& B, i64 k, i64 ell);

// Fast route via two length-q spectra and one pass over the units. The unit
// loop accumulates fixed-size chunks that are reduced in ascending order, so
// the result is bit-identical for every thread count.
ComplexValue bilinear_fast(const WeightVec& A, const WeightVec& B, i64 k, i64 ell, int threads = 1);

// sum_{m in Z_q} sum_{n in J} alpha_m S_{k,l,q}(m,n): the weighted-by-A,
// interval-J form, computed through bilinear_fast.
ComplexValue partial_sums(const WeightVec& A, const IntervalSpec& J, i64 k, i64 ell, int threads = 1);

// The l = -1 alias of partial_sums.
ComplexValue partial_sums_star(const WeightVec& A, const IntervalSpec& J, i64 k, int threads = 1);

// Fixed chunk width of the deterministic unit-loop reduction; recorded in
// sweep metadata.
inline constexpr std::size_t kUnitChunk = 4096;

}  // namespace binomsum::bilinear
