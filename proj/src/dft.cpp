#include "binomsum/dft.hpp"

#include <cfloat>
#include <cmath>

namespace binomsum::dft {

namespace {

constexpr long double kPiL = 3.141592653589793238462643383279502884L;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Twiddle table e^{sign * 2 pi i j / n} for j < n/2, angles in extended
// precision so stage twiddles are not degraded by repeated multiplication.
std::vector<std::complex<double>> twiddles(std::size_t n, int sign) {
    std::vector<std::complex<double>> tw(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
        long double theta = sign * 2.0L * kPiL * static_cast<long double>(j) / static_cast<long double>(n);
        tw[j] = {static_cast<double>(std::cos(theta)), static_cast<double>(std::sin(theta))};
    }
    return tw;
}

}  // namespace

void fft_pow2(std::vector<std::complex<double>>& a, int sign) {
    const std::size_t n = a.size();
    if (n <= 1) return;

    // Bit-reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    const auto tw = twiddles(n, sign);
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t stride = n / len;
        for (std::size_t i = 0; i < n; i += len) {
            for (std::size_t j = 0; j < len / 2; ++j) {
                auto w = tw[j * stride];
                auto u = a[i + j];
                auto v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
        }
    }
}

namespace {

// Chirp e^{+pi i r / L} with r = n^2 mod 2L; the reduction keeps the angle
// argument small even when n^2 would overflow a double's integer range.
std::complex<double> chirp(u64 n, u64 L) {
    u64 r = static_cast<u64>((u128(n) * n) % (2 * L));
    long double theta = kPiL * static_cast<long double>(r) / static_cast<long double>(L);
    return {static_cast<double>(std::cos(theta)), static_cast<double>(std::sin(theta))};
}

std::vector<std::complex<double>> bluestein_pos(const std::vector<std::complex<double>>& x) {
    const std::size_t L = x.size();
    const std::size_t P = next_pow2(2 * L - 1);

    // X[t] = chirp(t) * sum_m (x[m] chirp(m)) conj(chirp(t-m)).
    std::vector<std::complex<double>> a(P), b(P);
    for (std::size_t m = 0; m < L; ++m) a[m] = x[m] * chirp(m, L);
    for (std::size_t n = 0; n < L; ++n) {
        auto h = std::conj(chirp(n, L));
        b[n] = h;
        if (n > 0) b[P - n] = h;
    }

    fft_pow2(a, -1);
    fft_pow2(b, -1);
    for (std::size_t i = 0; i < P; ++i) a[i] *= b[i];
    fft_pow2(a, +1);

    std::vector<std::complex<double>> out(L);
    const double inv = 1.0 / static_cast<double>(P);
    for (std::size_t t = 0; t < L; ++t) out[t] = chirp(t, L) * (a[t] * inv);
    return out;
}

}  // namespace

std::vector<std::complex<double>> spectrum_pos(const std::vector<std::complex<double>>& x) {
    const std::size_t L = x.size();
    if (L == 0) throw RangeError("spectrum_pos: empty input");
    if (L == 1) return x;
    if (is_pow2(L)) {
        auto a = x;
        fft_pow2(a, +1);
        return a;
    }
    return bluestein_pos(x);
}

double spectrum_error_bound(double l1_norm, std::size_t length) {
    // Three power-of-two passes plus chirp multiplications; each contributes
    // O(log P) rounding steps scaled by the signal mass.
    double log2p = std::log2(static_cast<double>(next_pow2(2 * length)) + 1.0);
    return 8.0 * DBL_EPSILON * (log2p + 4.0) * l1_norm;
}

}  // namespace binomsum::dft
