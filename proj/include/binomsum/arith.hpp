#pragma once

#include <utility>
#include <vector>

#include "binomsum/common.hpp"

// Modular arithmetic and integer utilities shared by every other module.
// All functions are pure and reentrant; there is no shared mutable state.
namespace binomsum::arith {

// Prime factorization of n, factors sorted by prime. The product of p^e
// always equals n; n = 1 has an empty factor list.
struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, int>> factors;
};

// (a * b) mod q without overflow.
u64 mulmod(u64 a, u64 b, u64 q);

// x^e mod q for e >= 0. q >= 1 (q = 1 yields 0).
u64 powmod(u64 x, u64 e, u64 q);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 n);

// Trial division for small candidates, then a rho-style splitter with a fixed
// internal seed, so the output is deterministic for a fixed n. n >= 1.
Factorization factorize(u64 n);

// True iff no prime divides n twice.
bool is_squarefree(u64 n);

// True iff every prime exponent of n is at least 2. n = 1 counts as
// squarefull (vacuous condition), which keeps the counter below monotone.
bool is_squarefull(u64 n);

// Number of squarefull integers in [1, w].
u64 count_squarefull_upto(u64 w);

// Euler's totient via the multiplicative formula over factorize(q). q >= 1.
u64 euler_phi(u64 q);

// All x in [1, q) with gcd(x, q) = 1, ascending. units(1) is empty, so every
// sum over the unit group of the one-element ring is 0.
std::vector<u64> units(u64 q);

// Inverse of x modulo q. Throws NonInvertibleError when gcd(x, q) > 1.
u64 inverse_mod(u64 x, u64 q);

// x^k mod q with signed exponent; k < 0 means invert x first. x is reduced
// mod q on entry. Throws NonInvertibleError when k < 0 and gcd(x, q) > 1.
u64 mod_pow_signed(u64 x, i64 k, u64 q);

// Distance from u to the nearest multiple of q; result in [0, floor(q/2)].
// Callers needing q / dist_q(u, q) must guard the zero case themselves.
u64 dist_q(i64 u, u64 q);

}  // namespace binomsum::arith
