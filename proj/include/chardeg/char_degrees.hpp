#pragma once

#include <map>

#include "chardeg/field_model.hpp"

namespace chardeg {

/// Galois orbit of the character lambda^m on Irr(C) = Z/d under m -> m*q.
struct CharOrbit {
    u128 representative = 0;  // minimal index in the orbit
    uint32_t size = 1;        // orbit length = character degree, divides e
    uint32_t stabilizer_exponent = 1;  // stabilizer is <sigma^size>
    u128 subgroup_order = 1;           // |<c^m>| = d / gcd(d, m)
};

CharOrbit orbit(u128 m, const GroupSpec& spec);

/// |Gamma : Psi| for lambda^m, computed from the hat degree of <c^m>
/// without walking the orbit.
uint32_t stabilizer_degree(u128 m, const GroupSpec& spec);

enum class Method { bruteforce, divisor_formula, main_theorem };

const char* method_name(Method m);

struct DegreeReport {
    GroupSpec spec;
    std::vector<uint32_t> degrees;           // cd(G), ascending
    std::map<uint32_t, u128> multiplicities; // degree -> # irreducibles
    u128 orbit_count = 0;
    Method method = Method::bruteforce;
};

inline constexpr u128 bruteforce_orbit_limit = 1'000'000;
inline constexpr u128 group_oracle_limit = 20'000;

/// Partitions [0, d) into Galois orbits. Requires d <= 10^6.
DegreeReport degree_set_bruteforce(const GroupSpec& spec);

/// Same degrees and multiplicities via divisors of d and Euler phi mass;
/// no per-character enumeration.
DegreeReport degree_set_divisor_formula(const GroupSpec& spec);

/// Closed form: divisors of e with 2 removed. Throws naming the failed
/// hypothesis if the spec is outside the theorem's scope. No multiplicities.
DegreeReport main_theorem_prediction(const GroupSpec& spec);

/// True iff no character of C has stabilizer of index exactly 2, and every
/// sigma^2-fixed character is already sigma-fixed.
bool no_degree_two_witness(const GroupSpec& spec);

/// Element c^a sigma^j of G.
struct GroupElement {
    u128 a = 0;
    uint32_t j = 0;
    bool operator==(const GroupElement&) const = default;
};

/// (a, j) * (b, k) = (a + q^j b mod d, j + k mod e).
GroupElement group_multiply(const GroupElement& x, const GroupElement& y, const GroupSpec& spec);

/// Exhaustive class count of G; requires d * e <= 2 * 10^4.
u128 conjugacy_class_count(const GroupSpec& spec);

}  // namespace chardeg
