#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chardeg/numtheory.hpp"

namespace chardeg::oracle {

/// Polynomial over Z/q, coefficients in ascending degree order.
using Poly = std::vector<uint32_t>;

/// Element of GF(q^e): coefficients of 1, x, ..., x^(e-1) mod the chosen
/// irreducible polynomial, each in [0, q).
struct FieldElement {
    std::vector<uint32_t> coeffs;
    bool operator==(const FieldElement&) const = default;
};

struct FieldCtx {
    uint64_t q = 0;
    uint32_t e = 0;
    Poly modulus;            // monic irreducible of degree e
    FieldElement generator;  // multiplicative order q^e - 1
    uint64_t order = 0;      // q^e - 1
};

/// Lexicographically smallest monic irreducible polynomial of degree e over
/// Z/q (constant term varies fastest). Deterministic.
Poly find_irreducible(uint64_t q, uint32_t e);

FieldElement fe_zero(const FieldCtx& ctx);
FieldElement fe_one(const FieldCtx& ctx);
FieldElement fe_add(const FieldElement& a, const FieldElement& b, const FieldCtx& ctx);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b, const FieldCtx& ctx);
FieldElement fe_pow(const FieldElement& a, u128 k, const FieldCtx& ctx);

/// Smallest element in coefficient-lexicographic enumeration order whose
/// multiplicative order is exactly q^e - 1.
FieldElement find_generator(const FieldCtx& ctx);

/// Modulus + generator for GF(q^e); requires q^e - 1 < 2^63.
FieldCtx make_field_ctx(uint64_t q, uint32_t e);

struct FrobeniusCheckResult {
    bool ok = true;
    std::string counterexample;  // set when ok is false
};

/// Certifies the cyclic model against real field arithmetic: discrete logs
/// multiply by q under z -> z^q, and z^(q^n) = z exactly when ord(z) divides
/// q^n - 1, for every divisor n of e. Requires q^e - 1 < 2^20.
FrobeniusCheckResult frobenius_model_check(const FieldCtx& ctx);

}  // namespace chardeg::oracle
