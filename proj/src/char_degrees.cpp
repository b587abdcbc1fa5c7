#include "chardeg/char_degrees.hpp"

#include <algorithm>
#include <numeric>

namespace chardeg {

const char* method_name(Method m) {
    switch (m) {
        case Method::bruteforce: return "bruteforce";
        case Method::divisor_formula: return "divisor_formula";
        case Method::main_theorem: return "main_theorem";
    }
    return "?";
}

CharOrbit orbit(u128 m, const GroupSpec& spec) {
    if (m >= spec.d) throw std::invalid_argument("character index out of range");
    CharOrbit o;
    o.subgroup_order = spec.d / gcd(spec.d, m == 0 ? spec.d : m);
    o.representative = m;
    uint32_t size = 0;
    u128 cur = m;
    do {
        ++size;
        cur = mul_mod(cur, spec.q, spec.d);
        o.representative = std::min(o.representative, cur);
    } while (cur != m);
    o.size = size;
    o.stabilizer_exponent = size;
    return o;
}

uint32_t stabilizer_degree(u128 m, const GroupSpec& spec) {
    if (m >= spec.d) throw std::invalid_argument("character index out of range");
    u128 subgroup_order = spec.d / gcd(spec.d, m == 0 ? spec.d : m);
    return hat_degree(spec, subgroup_order);
}

namespace {

void finalize_report(DegreeReport& r) {
    std::vector<uint32_t> degs;
    for (const auto& [n, count] : r.multiplicities) degs.push_back(n);
    std::sort(degs.begin(), degs.end());
    r.degrees = std::move(degs);
}

}  // namespace

DegreeReport degree_set_bruteforce(const GroupSpec& spec) {
    if (spec.d > bruteforce_orbit_limit)
        throw std::out_of_range("d = " + to_string(spec.d) +
                                " exceeds the enumeration bound; use the divisor formula");
    auto d = uint64_t(spec.d);
    uint64_t q = uint64_t(spec.q % spec.d);
    DegreeReport r;
    r.spec = spec;
    r.method = Method::bruteforce;
    std::vector<bool> visited(d, false);
    for (uint64_t m = 0; m < d; ++m) {
        if (visited[m]) continue;
        uint32_t size = 0;
        uint64_t cur = m;
        do {
            visited[cur] = true;
            ++size;
            cur = cur * q % d;
        } while (cur != m);
        if (spec.e % size != 0) throw std::logic_error("orbit size does not divide e");
        r.multiplicities[size] += spec.e / size;
        ++r.orbit_count;
    }
    finalize_report(r);
    return r;
}

DegreeReport degree_set_divisor_formula(const GroupSpec& spec) {
    DegreeReport r;
    r.spec = spec;
    r.method = Method::divisor_formula;
    Factorization fd = factorize(spec.d);
    // phi(s) characters generate the order-s subgroup; all of them share the
    // stabilizer index hat_degree(s).
    std::map<uint32_t, u128> mass;  // degree -> # characters with that degree
    for (u128 s : divisors(fd)) {
        uint32_t n = hat_degree(spec, s);
        mass[n] += euler_phi(factorize(s));
    }
    for (const auto& [n, count] : mass) {
        if (count % n != 0) throw std::logic_error("character mass not divisible by orbit size");
        u128 orbits = count / n;
        r.multiplicities[n] = orbits * (spec.e / n);
        r.orbit_count += orbits;
    }
    finalize_report(r);
    return r;
}

DegreeReport main_theorem_prediction(const GroupSpec& spec) {
    HypothesisReport h = validate_hypotheses(spec);
    if (!h.main_theorem_applies) {
        std::string flag = !h.q_is_mersenne        ? "q is not a Mersenne prime"
                           : !h.e_even_gt1         ? "e is not an even integer > 1"
                           : !h.index_is_pi_number ? "[E^x : C] is not a pi-number"
                                                   : "4 divides |C|";
        throw std::invalid_argument("main theorem hypotheses fail: " + flag);
    }
    DegreeReport r;
    r.spec = spec;
    r.method = Method::main_theorem;
    for (u128 n : divisors(factorize(spec.e))) {
        if (n != 2) r.degrees.push_back(uint32_t(n));
    }
    return r;
}

bool no_degree_two_witness(const GroupSpec& spec) {
    u128 q_sq = pow_checked(spec.q, 2) - 1;
    for (u128 s : divisors(factorize(spec.d))) {
        if (hat_degree(spec, s) == 2) return false;
        // Mechanism: a sigma^2-fixed subgroup must lie in F already.
        if (q_sq % s == 0 && (spec.q - 1) % s != 0) return false;
    }
    return true;
}

GroupElement group_multiply(const GroupElement& x, const GroupElement& y, const GroupSpec& spec) {
    if (x.a >= spec.d || y.a >= spec.d || x.j >= spec.e || y.j >= spec.e)
        throw std::invalid_argument("group element out of range");
    GroupElement z;
    z.a = (x.a + mul_mod(pow_mod(spec.q, x.j, spec.d), y.a, spec.d)) % spec.d;
    z.j = (x.j + y.j) % spec.e;
    return z;
}

u128 conjugacy_class_count(const GroupSpec& spec) {
    if (spec.d * spec.e > group_oracle_limit)
        throw std::out_of_range("|G| = " + to_string(spec.d * spec.e) +
                                " exceeds the class-count bound");
    auto d = uint64_t(spec.d);
    uint32_t e = spec.e;
    uint64_t n_elems = d * e;
    std::vector<uint64_t> qp(e);  // q^j mod d
    qp[0] = 1 % d;
    uint64_t qm = uint64_t(spec.q % spec.d);
    for (uint32_t j = 1; j < e; ++j) qp[j] = qp[j - 1] * qm % d;
    auto idx = [e](uint64_t a, uint32_t j) { return a * e + j; };
    // Inverse of (b, k): ((d - b * q^{e-k}) mod d, (e - k) mod e).
    std::vector<uint64_t> inv_a(n_elems);
    std::vector<uint32_t> inv_j(n_elems);
    for (uint64_t b = 0; b < d; ++b) {
        for (uint32_t k = 0; k < e; ++k) {
            uint32_t kk = (e - k) % e;
            inv_a[idx(b, k)] = (d - b * qp[kk] % d) % d;
            inv_j[idx(b, k)] = kk;
        }
    }
    std::vector<bool> visited(n_elems, false);
    u128 classes = 0;
    for (uint64_t xa = 0; xa < d; ++xa) {
        for (uint32_t xj = 0; xj < e; ++xj) {
            if (visited[idx(xa, xj)]) continue;
            ++classes;
            for (uint64_t ga = 0; ga < d; ++ga) {
                for (uint32_t gj = 0; gj < e; ++gj) {
                    // y = g x g^{-1}
                    uint64_t ta = (ga + qp[gj] * xa) % d;
                    uint32_t tj = (gj + xj) % e;
                    uint64_t gi = idx(ga, gj);
                    uint64_t ya = (ta + qp[tj] * inv_a[gi]) % d;
                    uint32_t yj = (tj + inv_j[gi]) % e;
                    visited[idx(ya, yj)] = true;
                }
            }
        }
    }
    return classes;
}

}  // namespace chardeg
