#pragma once

#include <cfloat>
#include <cmath>
#include <complex>

#include "binomsum/common.hpp"

namespace binomsum {

// A complex result carrying an absolute error bound accumulated alongside the
// value. err grows at most linearly in the number of accumulated terms times
// unit roundoff.
struct ComplexValue {
    double re = 0.0;
    double im = 0.0;
    double err = 0.0;

    double abs() const { return std::hypot(re, im); }
    std::complex<double> value() const { return {re, im}; }
};

// Per-term error budget when accumulating unit-modulus table roots: at most
// 2 ulp for the table entry itself plus 2 eps for the compensated addition.
inline constexpr double kRootTermEps = 4.0 * DBL_EPSILON;

// Compensated (Kahan) accumulator for complex terms with running error bound.
// The error bound must be fed per term by the caller, since only the caller
// knows how accurate each term is.
class KahanComplexSum {
  public:
    // term_err: absolute error bound of the term being added, including the
    // compensated-summation contribution (e.g. kRootTermEps * |term|).
    void add(double re, double im, double term_err) {
        double yr = re - cre_;
        double tr = re_ + yr;
        cre_ = (tr - re_) - yr;
        re_ = tr;

        double yi = im - cim_;
        double ti = im_ + yi;
        cim_ = (ti - im_) - yi;
        im_ = ti;

        err_ += term_err;
    }

    void add(std::complex<double> z, double term_err) { add(z.real(), z.imag(), term_err); }

    // Merge another accumulator (used by the deterministic chunked reduction).
    void merge(const ComplexValue& v) { add(v.re, v.im, v.err + 2.0 * DBL_EPSILON * std::hypot(v.re, v.im)); }

    ComplexValue result() const { return {re_, im_, err_}; }

  private:
    double re_ = 0.0, im_ = 0.0;
    double cre_ = 0.0, cim_ = 0.0;
    double err_ = 0.0;
};

// Compensated accumulator for real values (no error tracking).
class KahanSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double result() const { return s_; }

  private:
    double s_ = 0.0, c_ = 0.0;
};

}  // namespace binomsum
