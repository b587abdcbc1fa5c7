#pragma once

#include <string>
#include <vector>

#include "chardeg/numtheory.hpp"

namespace chardeg {

/// One group G = C x| Gal(E/F): F = GF(q), E = GF(q^e), C the cyclic
/// subgroup of E^x of order d. E^x is modeled as Z/(q^e - 1) with the
/// Frobenius acting as multiplication by q.
struct GroupSpec {
    u128 q = 0;            // |F|, prime
    uint32_t e = 0;        // [E : F]
    u128 d = 0;            // |C|, divides q^e - 1
    u128 field_units = 0;  // q^e - 1
    PrimeSet pi;           // primes dividing q - 1
};

/// Validates q prime, e >= 2, d | q^e - 1 and derives pi. Throws
/// std::invalid_argument / std::out_of_range on bad input.
GroupSpec make_group_spec(u128 q, uint32_t e, u128 d);

struct HypothesisReport {
    bool q_is_mersenne = false;
    bool e_even_gt1 = false;
    bool index_is_pi_number = false;
    bool four_divides_d = false;
    bool main_theorem_applies = false;
};

HypothesisReport validate_hypotheses(const GroupSpec& spec);

/// All d dividing q^e - 1 whose cofactor is a pi-number and with 4 not
/// dividing d, ascending.
std::vector<u128> admissible_orders(u128 q, uint32_t e);

/// |GF(q^n) intersect C| = gcd(d, q^n - 1). n must divide e.
u128 subfield_intersection_order(const GroupSpec& spec, uint32_t n);

/// Degree over F of the smallest subfield of E containing the order-s
/// subgroup of E^x: least divisor n of e with s | q^n - 1.
uint32_t hat_degree(const GroupSpec& spec, u128 sub_order);

struct GaloisConnectionRow {
    uint32_t n = 0;               // subfield degree, L = GF(q^n)
    u128 intersection_order = 0;  // |L intersect C|
    uint32_t hat_deg = 0;         // degree of hat(L intersect C) over F
    bool equality_holds = false;  // hat(L intersect C) = L
    bool exception_case = false;  // n = 2
};

struct GaloisConnectionResult {
    std::vector<GaloisConnectionRow> rows;
    std::vector<std::string> violations;  // empty iff the verifier passed
    bool ok() const { return violations.empty(); }
};

/// One row per divisor n of e. Asserts hat(L intersect C) = L for n != 2
/// and |L intersect C| = |F intersect C| at n = 2; failures land in
/// violations rather than throwing, so negative controls can probe them.
GaloisConnectionResult verify_galois_connection(const GroupSpec& spec);

}  // namespace chardeg
