#include "chardeg/numtheory.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace chardeg {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 parse_u128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad integer literal: " + s);
        int digit = c - '0';
        if (v > (max_value - digit) / 10) throw std::out_of_range("integer exceeds 2^127 - 1: " + s);
        v = v * 10 + digit;
    }
    return v;
}

u128 gcd(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u128 mul_mod(u128 a, u128 b, u128 m) {
    a %= m;
    b %= m;
    if (m <= UINT64_MAX) return (a * b) % m;
    // m < 2^127, so all intermediate sums and shifts stay below 2^128.
    u128 r = 0;
    while (b != 0) {
        if (b & 1) {
            r += a;
            if (r >= m) r -= m;
        }
        a <<= 1;
        if (a >= m) a -= m;
        b >>= 1;
    }
    return r;
}

u128 pow_mod(u128 base, u128 exp, u128 m) {
    if (m == 1) return 0;
    u128 r = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u128 pow_checked(u128 q, uint32_t e) {
    u128 r = 1;
    for (uint32_t i = 0; i < e; ++i) {
        if (q != 0 && r > max_value / q)
            throw std::out_of_range("power exceeds 2^127 - 1: " + to_string(q) + "^" + std::to_string(e));
        r *= q;
    }
    return r;
}

bool PrimeSet::contains(u128 p) const {
    return std::binary_search(primes.begin(), primes.end(), p);
}

namespace {

void check_range(u128 n) {
    if (n > max_value) throw std::out_of_range("value exceeds 2^127 - 1");
}

u128 isqrt(u128 n) {
    if (n < 2) return n;
    u128 x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

bool is_perfect_square(u128 n) {
    u128 r = isqrt(n);
    return r * r == n;
}

// Jacobi symbol (a/n) for odd n > 0; a may be "negative" via the sign flag.
int jacobi(u128 a, bool a_negative, u128 n) {
    a %= n;
    if (a_negative && a != 0) a = n - a;
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            u128 r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if ((a % 4) == 3 && (n % 4) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

// One strong-pseudoprime test; n odd, n - 1 = d * 2^s. True means "composite".
bool miller_rabin_witness(u128 n, u128 a, u128 d, int s) {
    a %= n;
    if (a == 0) return false;
    u128 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
bool strong_lucas_prp(u128 n) {
    // Find D = 5, -7, 9, -11, ... with Jacobi(D/n) = -1.
    u128 d_abs = 5;
    bool d_neg = false;
    while (true) {
        int j = jacobi(d_abs, d_neg, n);
        if (j == -1) break;
        if (j == 0 && d_abs % n != 0) return false;
        d_abs += 2;
        d_neg = !d_neg;
    }
    // P = 1, Q = (1 - D) / 4 reduced mod n.
    u128 q;
    if (d_neg) {
        q = ((d_abs + 1) / 4) % n;  // D < 0: Q = (1 + |D|)/4
    } else {
        u128 qa = (d_abs - 1) / 4;  // D > 0: Q = -(D - 1)/4
        q = (n - qa % n) % n;
    }
    u128 d_mod = d_neg ? (n - d_abs % n) % n : d_abs % n;

    u128 m = n + 1;
    int s = 0;
    while ((m & 1) == 0) {
        m >>= 1;
        ++s;
    }
    // Compute U_m, V_m by binary ladder over the bits of m.
    u128 u = 1, v = 1, qk = q;  // U_1, V_1, Q^1
    int bits = 0;
    for (u128 t = m; t > 1; t >>= 1) ++bits;
    u128 half = (n + 1) / 2;  // inverse of 2 mod n (n odd)
    for (int i = bits - 1; i >= 0; --i) {
        // double: U_{2k} = U V, V_{2k} = V^2 - 2 Q^k
        u128 u2 = mul_mod(u, v, n);
        u128 v2 = mul_mod(v, v, n);
        v2 = (v2 + n - mul_mod(2, qk, n) % n) % n;
        qk = mul_mod(qk, qk, n);
        u = u2;
        v = v2;
        if ((m >> i) & 1) {
            // add one: U' = (U + V)/2, V' = (D U + V)/2
            u128 nu = mul_mod((u + v) % n, half, n);
            u128 nv = mul_mod((mul_mod(d_mod, u, n) + v) % n, half, n);
            qk = mul_mod(qk, q, n);
            u = nu;
            v = nv;
        }
    }
    if (u == 0 || v == 0) return true;
    for (int r = 1; r < s; ++r) {
        v = (mul_mod(v, v, n) + n - mul_mod(2, qk, n) % n) % n;
        if (v == 0) return true;
        qk = mul_mod(qk, qk, n);
    }
    return false;
}

const std::vector<uint32_t>& small_primes() {
    static const std::vector<uint32_t> primes = [] {
        constexpr uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit, false);
        std::vector<uint32_t> out;
        for (uint32_t i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (uint64_t j = uint64_t(i) * i; j < limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

u128 pollard_brent(u128 n) {
    // Brent's variant with batched gcds; deterministic restart schedule.
    for (u128 c = 1;; ++c) {
        u128 x = 2, y = 2, g = 1, q = 1, ys = 0;
        const u128 batch = 128;
        u128 r = 1;
        auto f = [&](u128 v) { return (mul_mod(v, v, n) + c) % n; };
        while (g == 1) {
            x = y;
            for (u128 i = 0; i < r; ++i) y = f(y);
            for (u128 k = 0; k < r && g == 1; k += batch) {
                ys = y;
                u128 lim = std::min(batch, r - k);
                for (u128 i = 0; i < lim; ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            // Backtrack one step at a time.
            do {
                ys = f(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_large(u128 n, std::vector<u128>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u128 g = pollard_brent(n);
    factor_large(g, out);
    factor_large(n / g, out);
}

}  // namespace

bool is_prime(u128 n) {
    check_range(n);
    if (n < 2) return false;
    for (uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41u * 41u) return true;
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    if (n <= UINT64_MAX) {
        // Deterministic for n < 2^64 (Sinclair's base set).
        for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
            if (miller_rabin_witness(n, a, d, s)) return false;
        }
        return true;
    }
    for (uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    if (is_perfect_square(n)) return false;
    return strong_lucas_prp(n);
}

Factorization factorize(u128 n) {
    check_range(n);
    if (n == 0) throw std::invalid_argument("factorize requires a positive integer");
    Factorization f;
    f.value = n;
    std::vector<u128> primes;
    for (uint32_t p : small_primes()) {
        if (u128(p) * p > n) break;
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_large(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u128 p : primes) {
        if (!f.factors.empty() && f.factors.back().prime == p)
            ++f.factors.back().exponent;
        else
            f.factors.push_back({p, 1});
    }
    return f;
}

std::vector<u128> divisors(const Factorization& f) {
    std::vector<u128> out{1};
    for (const auto& [p, e] : f.factors) {
        size_t n = out.size();
        u128 pk = 1;
        for (uint32_t i = 0; i < e; ++i) {
            pk *= p;
            for (size_t j = 0; j < n; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u128 euler_phi(const Factorization& f) {
    u128 phi = 1;
    for (const auto& [p, e] : f.factors) {
        phi *= p - 1;
        for (uint32_t i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

namespace {
u128 lcm(u128 a, u128 b) { return a / gcd(a, b) * b; }
}  // namespace

u128 carmichael(const Factorization& f) {
    u128 lam = 1;
    for (const auto& [p, e] : f.factors) {
        u128 comp;
        if (p == 2) {
            comp = e == 1 ? 1 : e == 2 ? 2 : u128(1) << (e - 2);
        } else {
            comp = p - 1;
            for (uint32_t i = 1; i < e; ++i) comp *= p;
        }
        lam = lcm(lam, comp);
    }
    return lam;
}

u128 multiplicative_order(u128 a, u128 n, const Factorization& order_multiple) {
    if (n == 0) throw std::invalid_argument("multiplicative_order: modulus must be positive");
    if (n == 1) return 1;
    a %= n;
    if (gcd(a, n) != 1) throw std::invalid_argument("multiplicative_order requires gcd(a, n) = 1");
    u128 ord = order_multiple.value;
    for (const auto& [p, e] : order_multiple.factors) {
        for (uint32_t i = 0; i < e && ord % p == 0; ++i) {
            if (pow_mod(a, ord / p, n) == 1)
                ord /= p;
            else
                break;
        }
    }
    return ord;
}

u128 multiplicative_order(u128 a, u128 n) {
    if (n == 1) return 1;
    u128 lam = carmichael(factorize(n));
    return multiplicative_order(a, n, factorize(lam));
}

bool lucas_lehmer(uint32_t p) {
    if (p < 2) throw std::invalid_argument("lucas_lehmer requires p >= 2");
    if (p > 127) throw std::out_of_range("lucas_lehmer: 2^p - 1 exceeds 2^127 - 1");
    if (p == 2) return true;
    if (!is_prime(p)) return false;  // composite p gives composite 2^p - 1
    u128 m = (u128(1) << p) - 1;
    u128 s = 4;
    for (uint32_t i = 0; i < p - 2; ++i) {
        s = (mul_mod(s, s, m) + m - 2) % m;
    }
    return s == 0;
}

PrimeSet prime_set(const Factorization& f) {
    PrimeSet ps;
    for (const auto& pp : f.factors) ps.primes.push_back(pp.prime);
    return ps;
}

bool is_pi_number(u128 n, const PrimeSet& pi) {
    if (n == 0) throw std::invalid_argument("is_pi_number requires n >= 1");
    for (u128 p : pi.primes) {
        while (n % p == 0) n /= p;
    }
    return n == 1;
}

}  // namespace chardeg
