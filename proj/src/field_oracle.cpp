#include "chardeg/field_oracle.hpp"

#include <algorithm>
#include <numeric>

namespace chardeg::oracle {

namespace {

uint64_t mod_inverse(uint64_t a, uint64_t q) { return uint64_t(pow_mod(a, q - 2, q)); }

int degree(const Poly& p) {
    for (int i = int(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

void trim(Poly& p) { p.resize(size_t(degree(p) + 1)); }

Poly poly_mul(const Poly& a, const Poly& b, uint64_t q) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = uint32_t((out[i + j] + uint64_t(a[i]) * b[j]) % q);
    }
    return out;
}

// Remainder of a modulo the monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, uint64_t q) {
    int dm = degree(m);
    for (int i = degree(a); i >= dm; --i) {
        uint64_t c = a[size_t(i)];
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            uint64_t sub = c * m[size_t(j)] % q;
            a[size_t(i - dm + j)] = uint32_t((a[size_t(i - dm + j)] + q - sub) % q);
        }
    }
    if (dm > 0) a.resize(size_t(dm));
    else a.clear();
    return a;
}

Poly poly_powmod(Poly base, u128 exp, const Poly& m, uint64_t q) {
    Poly r{1};
    base = poly_mod(std::move(base), m, q);
    while (exp != 0) {
        if (exp & 1) r = poly_mod(poly_mul(r, base, q), m, q);
        base = poly_mod(poly_mul(base, base, q), m, q);
        exp >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, uint64_t q) {
    trim(a);
    trim(b);
    while (degree(b) >= 0) {
        // reduce a mod b after making b monic
        uint64_t lead = b[size_t(degree(b))];
        if (lead != 1) {
            uint64_t inv = mod_inverse(lead, q);
            for (auto& c : b) c = uint32_t(c * inv % q);
        }
        Poly r = a;
        int db = degree(b);
        for (int i = degree(r); i >= db; --i) {
            uint64_t c = r[size_t(i)];
            if (c == 0) continue;
            for (int j = 0; j <= db; ++j) {
                uint64_t sub = c * b[size_t(j)] % q;
                r[size_t(i - db + j)] = uint32_t((r[size_t(i - db + j)] + q - sub) % q);
            }
        }
        trim(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool is_irreducible(const Poly& f, uint64_t q, uint32_t e) {
    if (e == 1) return true;
    // x^(q^e) = x mod f, and gcd(x^(q^(e/r)) - x, f) = 1 for each prime r | e.
    Poly x{0, 1};
    u128 qe = pow_checked(q, e);
    Poly top = poly_powmod(x, qe, f, q);
    trim(top);
    if (top != Poly{0, 1}) return false;
    for (const auto& pp : factorize(e).factors) {
        uint32_t k = e / uint32_t(pp.prime);
        Poly xqk = poly_powmod(x, pow_checked(q, k), f, q);
        // xqk - x
        if (xqk.size() < 2) xqk.resize(2, 0);
        xqk[1] = uint32_t((xqk[1] + q - 1) % q);
        Poly g = poly_gcd(xqk, f, q);
        if (degree(g) != 0) return false;
    }
    return true;
}

std::vector<uint32_t> digits(uint64_t v, uint64_t q, uint32_t len) {
    std::vector<uint32_t> out(len, 0);
    for (uint32_t i = 0; i < len && v > 0; ++i) {
        out[i] = uint32_t(v % q);
        v /= q;
    }
    return out;
}

uint64_t encode(const std::vector<uint32_t>& coeffs, uint64_t q) {
    uint64_t v = 0;
    for (size_t i = coeffs.size(); i-- > 0;) v = v * q + coeffs[i];
    return v;
}

}  // namespace

Poly find_irreducible(uint64_t q, uint32_t e) {
    if (!is_prime(q)) throw std::invalid_argument("q must be prime");
    if (e == 0) throw std::invalid_argument("degree must be positive");
    u128 count = pow_checked(q, e);
    if (count - 1 >= (u128(1) << 63)) throw std::out_of_range("oracle field too large");
    for (uint64_t v = 0; v < uint64_t(count); ++v) {
        Poly f = digits(v, q, e);
        f.push_back(1);  // monic
        if (is_irreducible(f, q, e)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // cannot happen
}

FieldElement fe_zero(const FieldCtx& ctx) { return {std::vector<uint32_t>(ctx.e, 0)}; }

FieldElement fe_one(const FieldCtx& ctx) {
    FieldElement z = fe_zero(ctx);
    z.coeffs[0] = 1 % uint32_t(ctx.q);
    return z;
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b, const FieldCtx& ctx) {
    FieldElement out = fe_zero(ctx);
    for (uint32_t i = 0; i < ctx.e; ++i)
        out.coeffs[i] = uint32_t((uint64_t(a.coeffs[i]) + b.coeffs[i]) % ctx.q);
    return out;
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b, const FieldCtx& ctx) {
    Poly prod = poly_mod(poly_mul(a.coeffs, b.coeffs, ctx.q), ctx.modulus, ctx.q);
    prod.resize(ctx.e, 0);
    return {std::move(prod)};
}

FieldElement fe_pow(const FieldElement& a, u128 k, const FieldCtx& ctx) {
    Poly r = poly_powmod(a.coeffs, k, ctx.modulus, ctx.q);
    r.resize(ctx.e, 0);
    return {std::move(r)};
}

FieldElement find_generator(const FieldCtx& ctx) {
    Factorization of = factorize(ctx.order);
    for (uint64_t v = 1; v <= ctx.order; ++v) {
        FieldElement cand{digits(v, ctx.q, ctx.e)};
        bool ok = true;
        for (const auto& pp : of.factors) {
            if (fe_pow(cand, ctx.order / u128(pp.prime), ctx) == fe_one(ctx)) {
                ok = false;
                break;
            }
        }
        if (ok) return cand;
    }
    throw std::logic_error("no generator found");  // cyclic group always has one
}

FieldCtx make_field_ctx(uint64_t q, uint32_t e) {
    FieldCtx ctx;
    ctx.q = q;
    ctx.e = e;
    ctx.modulus = find_irreducible(q, e);
    ctx.order = uint64_t(pow_checked(q, e) - 1);
    ctx.generator = find_generator(ctx);
    return ctx;
}

FrobeniusCheckResult frobenius_model_check(const FieldCtx& ctx) {
    if (ctx.order >= (1u << 20)) throw std::out_of_range("field too large for dlog table");
    FrobeniusCheckResult result;
    // dlog table over powers of the generator
    std::vector<int64_t> dlog(ctx.order + 1, -1);
    std::vector<FieldElement> power(ctx.order);
    FieldElement z = fe_one(ctx);
    for (uint64_t i = 0; i < ctx.order; ++i) {
        power[i] = z;
        dlog[encode(z.coeffs, ctx.q)] = int64_t(i);
        z = fe_mul(z, ctx.generator, ctx);
    }
    auto fail = [&](std::string msg) {
        result.ok = false;
        result.counterexample = std::move(msg);
        return result;
    };
    std::vector<u128> subfield_degrees = divisors(factorize(ctx.e));
    for (uint64_t i = 0; i < ctx.order; ++i) {
        const FieldElement& elem = power[i];
        // (i) Frobenius is multiplication by q on discrete logs.
        FieldElement frob = fe_pow(elem, ctx.q, ctx);
        int64_t dl = dlog[encode(frob.coeffs, ctx.q)];
        if (dl < 0 || u128(dl) != mul_mod(i, ctx.q, ctx.order))
            return fail("dlog(z^q) != q*dlog(z) at dlog(z) = " + std::to_string(i));
        // (ii) Subfield membership matches order divisibility.
        uint64_t elem_order = ctx.order / std::gcd(ctx.order, i == 0 ? ctx.order : i);
        for (u128 nd : subfield_degrees) {
            auto n = uint32_t(nd);
            bool fixed = fe_pow(elem, pow_checked(ctx.q, n), ctx) == elem;
            bool divides = (pow_checked(ctx.q, n) - 1) % elem_order == 0;
            if (fixed != divides)
                return fail("subfield membership mismatch at dlog(z) = " + std::to_string(i) +
                            ", n = " + std::to_string(n));
        }
    }
    return result;
}

}  // namespace chardeg::oracle
