#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace chardeg {

using u128 = unsigned __int128;

/// Largest value accepted anywhere in the library: 2^127 - 1.
inline constexpr u128 max_value = (u128(1) << 127) - 1;

std::string to_string(u128 v);
u128 parse_u128(const std::string& s);

u128 gcd(u128 a, u128 b);
u128 mul_mod(u128 a, u128 b, u128 m);
u128 pow_mod(u128 base, u128 exp, u128 m);

/// q^e, throwing std::out_of_range if the result would exceed max_value.
u128 pow_checked(u128 q, uint32_t e);

struct PrimePower {
    u128 prime;
    uint32_t exponent;
    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization of a positive integer. factors is empty for value 1;
/// primes are strictly increasing.
struct Factorization {
    u128 value = 1;
    std::vector<PrimePower> factors;
};

/// Sorted set of distinct primes.
struct PrimeSet {
    std::vector<u128> primes;
    bool contains(u128 p) const;
};

/// Deterministic primality test. Fixed witness schedule below 2^64;
/// Miller-Rabin bases {2,...,37} plus a strong Lucas check above.
bool is_prime(u128 n);

/// Trial division by primes below 10^6, then Brent's cycle-finding rho with
/// restart constants c = 1, 2, 3, ... so output is reproducible.
Factorization factorize(u128 n);

std::vector<u128> divisors(const Factorization& f);

u128 euler_phi(const Factorization& f);
u128 carmichael(const Factorization& f);

/// Least k >= 1 with a^k = 1 (mod n). Requires gcd(a, n) = 1.
u128 multiplicative_order(u128 a, u128 n);

/// Same, given a factorized multiple of the order (e.g. lambda(n)); avoids
/// refactoring n on every call in sweeps.
u128 multiplicative_order(u128 a, u128 n, const Factorization& order_multiple);

/// True iff 2^p - 1 is prime. p = 2 is handled specially; rejects p > 127.
bool lucas_lehmer(uint32_t p);

PrimeSet prime_set(const Factorization& f);

/// True iff every prime factor of n lies in pi (n = 1 gives true).
bool is_pi_number(u128 n, const PrimeSet& pi);

}  // namespace chardeg
