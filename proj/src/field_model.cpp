#include "chardeg/field_model.hpp"

#include <algorithm>

namespace chardeg {

GroupSpec make_group_spec(u128 q, uint32_t e, u128 d) {
    if (!is_prime(q)) throw std::invalid_argument("q must be prime, got " + to_string(q));
    if (e < 2) throw std::invalid_argument("extension degree e must be at least 2");
    GroupSpec spec;
    spec.q = q;
    spec.e = e;
    spec.field_units = pow_checked(q, e) - 1;
    if (d == 0 || spec.field_units % d != 0)
        throw std::invalid_argument("order " + to_string(d) + " does not divide q^e - 1 = " +
                                    to_string(spec.field_units));
    spec.d = d;
    spec.pi = prime_set(factorize(q - 1));
    return spec;
}

HypothesisReport validate_hypotheses(const GroupSpec& spec) {
    HypothesisReport r;
    // q is Mersenne iff q + 1 is a power of two and Lucas-Lehmer confirms the exponent.
    u128 qp1 = spec.q + 1;
    if ((qp1 & (qp1 - 1)) == 0) {
        uint32_t p = 0;
        for (u128 t = qp1; t > 1; t >>= 1) ++p;
        r.q_is_mersenne = p >= 2 && lucas_lehmer(p);
    }
    r.e_even_gt1 = spec.e > 1 && spec.e % 2 == 0;
    r.index_is_pi_number = is_pi_number(spec.field_units / spec.d, spec.pi);
    r.four_divides_d = spec.d % 4 == 0;
    r.main_theorem_applies =
        r.q_is_mersenne && r.e_even_gt1 && r.index_is_pi_number && !r.four_divides_d;
    return r;
}

std::vector<u128> admissible_orders(u128 q, uint32_t e) {
    if (!is_prime(q)) throw std::invalid_argument("q must be prime");
    u128 units = pow_checked(q, e) - 1;
    PrimeSet pi = prime_set(factorize(q - 1));
    Factorization uf = factorize(units);
    // Split q^e - 1 into its pi-part and pi'-part; every admissible d is the
    // full pi'-part times a divisor of the pi-part.
    u128 pi_prime_part = 1;
    Factorization pi_part;
    for (const auto& pp : uf.factors) {
        if (pi.contains(pp.prime)) {
            pi_part.factors.push_back(pp);
        } else {
            for (uint32_t i = 0; i < pp.exponent; ++i) pi_prime_part *= pp.prime;
        }
    }
    std::vector<u128> out;
    for (u128 t : divisors(pi_part)) {
        u128 d = pi_prime_part * t;
        if (d % 4 != 0) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

u128 subfield_intersection_order(const GroupSpec& spec, uint32_t n) {
    if (n == 0 || spec.e % n != 0)
        throw std::invalid_argument("n = " + std::to_string(n) + " does not divide e = " +
                                    std::to_string(spec.e));
    return gcd(spec.d, pow_checked(spec.q, n) - 1);
}

uint32_t hat_degree(const GroupSpec& spec, u128 sub_order) {
    if (sub_order == 0 || spec.field_units % sub_order != 0)
        throw std::invalid_argument("subgroup order " + to_string(sub_order) +
                                    " does not divide q^e - 1");
    for (u128 n : divisors(factorize(spec.e))) {
        if ((pow_checked(spec.q, uint32_t(n)) - 1) % sub_order == 0) return uint32_t(n);
    }
    // Unreachable: sub_order divides q^e - 1 and e divides e.
    throw std::logic_error("hat_degree: no divisor of e found");
}

GaloisConnectionResult verify_galois_connection(const GroupSpec& spec) {
    GaloisConnectionResult result;
    u128 base_intersection = gcd(spec.d, spec.q - 1);  // |F intersect C|
    for (u128 nd : divisors(factorize(spec.e))) {
        auto n = uint32_t(nd);
        GaloisConnectionRow row;
        row.n = n;
        row.intersection_order = subfield_intersection_order(spec, n);
        row.hat_deg = hat_degree(spec, row.intersection_order);
        row.equality_holds = row.hat_deg == n;
        row.exception_case = n == 2;
        if (row.exception_case) {
            if (row.intersection_order != base_intersection)
                result.violations.push_back(
                    "n = 2: |L intersect C| = " + to_string(row.intersection_order) +
                    " differs from |F intersect C| = " + to_string(base_intersection));
        } else if (!row.equality_holds) {
            result.violations.push_back("n = " + std::to_string(n) +
                                        ": hat(L intersect C) has degree " +
                                        std::to_string(row.hat_deg));
        }
        result.rows.push_back(row);
    }
    return result;
}

}  // namespace chardeg
