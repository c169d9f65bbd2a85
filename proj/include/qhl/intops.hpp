// Rational-integer routines: deterministic Miller-Rabin below 2^64,
// Pollard-Brent rho, Kronecker symbol, Tonelli-Shanks square roots.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qhl {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

// Deterministic for all inputs below 2^64.
bool is_prime_u64(std::uint64_t n);

// Prime factorization of n >= 1, sorted, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, int>> factorize_u64(std::uint64_t n);

// Full Kronecker symbol (a/n) over Z, any a, any n.
int kronecker(long long a, long long n);

// Square root of a mod odd prime p, or -1 when a is a non-residue.
std::int64_t sqrt_mod_p(std::int64_t a, std::int64_t p);

// Floor of sqrt(n) for n >= 0.
std::int64_t isqrt64(std::int64_t n);

}  // namespace qhl
