#include "binomsum/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace binomsum::arith {

u64 mulmod(u64 a, u64 b, u64 q) { return static_cast<u64>((u128(a) * b) % q); }

u64 powmod(u64 x, u64 e, u64 q) {
    if (q == 1) return 0;
    u64 r = 1;
    x %= q;
    while (e) {
        if (e & 1) r = mulmod(r, x, q);
        x = mulmod(x, x, q);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is known to be exact below 2^64.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Brent's variant of the rho splitter. The polynomial offset c advances
// deterministically, so factorize(n) is a pure function of n.
u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto step = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        u64 x = 2, y = 2, ys = 2, d = 1;
        const u64 m = 128;
        for (u64 power = 1; d == 1; power *= 2) {
            x = y;
            for (u64 i = 0; i < power; ++i) y = step(y);
            for (u64 k = 0; k < power && d == 1; k += m) {
                ys = y;
                u64 q = 1;
                for (u64 i = 0; i < std::min(m, power - k); ++i) {
                    y = step(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
        }
        if (d == n) {
            // The batched gcd jumped past the collision; replay one step at a time.
            do {
                ys = step(ys);
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
        // Degenerate cycle for this c; try the next offset.
    }
}

void factor_rec(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

}  // namespace

Factorization factorize(u64 n) {
    Factorization f;
    f.n = n;
    if (n <= 1) return f;
    std::vector<u64> primes;
    for (u64 p : {2ULL, 3ULL, 5ULL}) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    // 2,3,5-wheel trial division; sufficient on its own for n below 10^6.
    static constexpr int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
    u64 d = 7;
    int w = 0;
    while (d <= 1000 && d * d <= n) {
        while (n % d == 0) {
            primes.push_back(d);
            n /= d;
        }
        d += wheel[w];
        w = (w + 1) & 7;
    }
    if (n > 1) {
        if (n <= 1000ULL * 1000ULL) {
            primes.push_back(n);  // no divisor below sqrt(n) <= 1000, so n is prime
        } else {
            factor_rec(n, primes);
        }
    }
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!f.factors.empty() && f.factors.back().first == p) {
            ++f.factors.back().second;
        } else {
            f.factors.emplace_back(p, 1);
        }
    }
    return f;
}

bool is_squarefree(u64 n) {
    for (const auto& [p, e] : factorize(n).factors) {
        (void)p;
        if (e > 1) return false;
    }
    return true;
}

bool is_squarefull(u64 n) {
    for (const auto& [p, e] : factorize(n).factors) {
        (void)p;
        if (e < 2) return false;
    }
    return true;
}

namespace {

u64 isqrt_u64(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && u128(r) * r > n) --r;
    while (u128(r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

u64 count_squarefull_upto(u64 w) {
    // Squarefull n decompose uniquely as a^2 * b^3 with b squarefree, so the
    // count is a short sum of integer square roots.
    u64 count = 0;
    for (u64 b = 1; b * b * b <= w; ++b) {
        if (!is_squarefree(b)) continue;
        count += isqrt_u64(w / (b * b * b));
    }
    return count;
}

u64 euler_phi(u64 q) {
    u64 phi = 1;
    for (const auto& [p, e] : factorize(q).factors) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

std::vector<u64> units(u64 q) {
    std::vector<u64> result;
    for (u64 x = 1; x < q; ++x) {
        if (std::gcd(x, q) == 1) result.push_back(x);
    }
    return result;
}

u64 inverse_mod(u64 x, u64 q) {
    if (q == 1) return 0;
    x %= q;
    // Extended Euclid on (x, q).
    i64 t = 0, new_t = 1;
    u64 r = q, new_r = x;
    while (new_r != 0) {
        u64 quot = r / new_r;
        i64 tmp_t = t - static_cast<i64>(quot) * new_t;
        t = new_t;
        new_t = tmp_t;
        u64 tmp_r = r - quot * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) {
        throw NonInvertibleError("inverse_mod: " + std::to_string(x) + " is not invertible modulo " +
                                 std::to_string(q));
    }
    return t < 0 ? static_cast<u64>(t + static_cast<i64>(q)) : static_cast<u64>(t);
}

u64 mod_pow_signed(u64 x, i64 k, u64 q) {
    if (q == 1) return 0;
    x %= q;
    if (k >= 0) return powmod(x, static_cast<u64>(k), q);
    u64 inv = inverse_mod(x, q);  // throws NonInvertibleError for non-units
    return powmod(inv, static_cast<u64>(0) - static_cast<u64>(k), q);
}

u64 dist_q(i64 u, u64 q) {
    i64 m = static_cast<i64>(q);
    i64 r = u % m;
    if (r < 0) r += m;
    u64 ur = static_cast<u64>(r);
    return std::min(ur, q - ur);
}

}  // namespace binomsum::arith
