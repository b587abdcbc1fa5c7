#include <doctest.h>

#include "chardeg/field_model.hpp"

using namespace chardeg;

TEST_CASE("make_group_spec validates its inputs") {
    GroupSpec spec = make_group_spec(3, 4, 10);
    CHECK(spec.field_units == 80);
    CHECK(spec.pi.primes == std::vector<u128>{2});
    CHECK_THROWS_AS(make_group_spec(3, 4, 7), std::invalid_argument);   // 7 does not divide 80
    CHECK_THROWS_AS(make_group_spec(4, 2, 1), std::invalid_argument);   // q composite
    CHECK_THROWS_AS(make_group_spec(3, 1, 1), std::invalid_argument);   // e too small
    CHECK_THROWS_AS(make_group_spec(131071, 8, 1), std::out_of_range);  // q^e overflow
}

TEST_CASE("validate_hypotheses examples") {
    HypothesisReport h = validate_hypotheses(make_group_spec(3, 4, 10));
    CHECK(h.q_is_mersenne);
    CHECK(h.e_even_gt1);
    CHECK(h.index_is_pi_number);  // 80 / 10 = 8 = 2^3
    CHECK_FALSE(h.four_divides_d);
    CHECK(h.main_theorem_applies);

    CHECK_FALSE(validate_hypotheses(make_group_spec(5, 2, 6)).q_is_mersenne);

    HypothesisReport h20 = validate_hypotheses(make_group_spec(3, 4, 20));
    CHECK(h20.four_divides_d);
    CHECK_FALSE(h20.main_theorem_applies);
}

TEST_CASE("validate_hypotheses flags odd extension degree and bad index") {
    CHECK_FALSE(validate_hypotheses(make_group_spec(3, 3, 13)).e_even_gt1);
    // index 80 / 5 = 16 is a 2-number but 80 / 16 = 5 is not
    CHECK_FALSE(validate_hypotheses(make_group_spec(3, 4, 16)).index_is_pi_number);
}

TEST_CASE("admissible_orders examples") {
    CHECK(admissible_orders(3, 4) == std::vector<u128>{5, 10});
    CHECK(admissible_orders(3, 2) == std::vector<u128>{1, 2});
    CHECK(admissible_orders(7, 2) == std::vector<u128>{1, 2, 3, 6});
}

TEST_CASE("admissible_orders are admissible and complete") {
    for (u128 q : {u128(3), u128(7), u128(31)}) {
        for (uint32_t e : {2u, 4u}) {
            u128 units = pow_checked(q, e) - 1;
            PrimeSet pi = prime_set(factorize(q - 1));
            std::vector<u128> got = admissible_orders(q, e);
            std::vector<u128> expected;
            for (u128 d : divisors(factorize(units)))
                if (is_pi_number(units / d, pi) && d % 4 != 0) expected.push_back(d);
            CHECK(got == expected);
            CHECK_FALSE(got.empty());
        }
    }
}

TEST_CASE("admissible_orders nonempty across the sweep range") {
    for (u128 q : {u128(3), u128(7), u128(31), u128(127)})
        for (uint32_t e : {2u, 4u, 6u, 8u}) CHECK_FALSE(admissible_orders(q, e).empty());
}

TEST_CASE("subfield_intersection_order examples") {
    GroupSpec spec = make_group_spec(3, 4, 10);
    CHECK(subfield_intersection_order(spec, 2) == 2);
    CHECK(subfield_intersection_order(spec, 4) == 10);
    CHECK(subfield_intersection_order(spec, 1) == 2);
    CHECK_THROWS_AS(subfield_intersection_order(spec, 3), std::invalid_argument);
}

TEST_CASE("hat_degree examples") {
    GroupSpec spec = make_group_spec(3, 4, 10);
    CHECK(hat_degree(spec, 1) == 1);
    CHECK(hat_degree(spec, 10) == 4);
    CHECK(hat_degree(spec, 2) == 1);
    CHECK_THROWS_AS(hat_degree(spec, 3), std::invalid_argument);  // 3 does not divide 80
}

TEST_CASE("hat_degree equals the multiplicative order of q") {
    for (u128 q : {u128(3), u128(7)}) {
        for (uint32_t e : {4u, 6u}) {
            GroupSpec spec = make_group_spec(q, e, pow_checked(q, e) - 1);
            for (u128 s : divisors(factorize(spec.field_units))) {
                uint32_t n = hat_degree(spec, s);
                CHECK((pow_checked(q, n) - 1) % s == 0);
                CHECK(spec.e % n == 0);
                if (s > 1) CHECK(u128(n) == multiplicative_order(q, s));
            }
        }
    }
}

TEST_CASE("galois connection monotonicity and closure") {
    for (u128 q : {u128(3), u128(7), u128(31)}) {
        for (uint32_t e : {2u, 4u, 6u}) {
            for (u128 d : admissible_orders(q, e)) {
                GroupSpec spec = make_group_spec(q, e, d);
                std::vector<u128> divs = divisors(factorize(e));
                for (u128 n1 : divs) {
                    for (u128 n2 : divs) {
                        if (n2 % n1 != 0) continue;
                        u128 s1 = subfield_intersection_order(spec, uint32_t(n1));
                        u128 s2 = subfield_intersection_order(spec, uint32_t(n2));
                        CHECK(s2 % s1 == 0);
                    }
                    u128 s = subfield_intersection_order(spec, uint32_t(n1));
                    CHECK(n1 % hat_degree(spec, s) == 0);  // hat(L^C) inside L
                }
            }
        }
    }
}

TEST_CASE("verify_galois_connection worked examples") {
    GaloisConnectionResult r = verify_galois_connection(make_group_spec(3, 4, 10));
    CHECK(r.ok());
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].n == 1);
    CHECK(r.rows[0].intersection_order == 2);
    CHECK(r.rows[0].hat_deg == 1);
    CHECK(r.rows[0].equality_holds);
    CHECK(r.rows[1].n == 2);
    CHECK(r.rows[1].intersection_order == 2);
    CHECK(r.rows[1].exception_case);
    CHECK(r.rows[2].n == 4);
    CHECK(r.rows[2].intersection_order == 10);
    CHECK(r.rows[2].hat_deg == 4);

    GaloisConnectionResult r2 = verify_galois_connection(make_group_spec(3, 2, 2));
    CHECK(r2.ok());
    REQUIRE(r2.rows.size() == 2);
    CHECK(r2.rows[0].intersection_order == 2);
    CHECK(r2.rows[1].intersection_order == 2);  // = |F intersect C| at the exception

    GaloisConnectionResult r3 = verify_galois_connection(make_group_spec(7, 2, 6));
    CHECK(r3.ok());
    CHECK(r3.rows[0].intersection_order == 6);  // 6 | 7 - 1
    CHECK(r3.rows[1].intersection_order == 6);
}

TEST_CASE("theorem sweep raises no violation on admissible specs") {
    for (u128 q : {u128(3), u128(7), u128(31), u128(127)}) {
        for (uint32_t e : {2u, 4u, 6u, 8u}) {
            for (u128 d : admissible_orders(q, e)) {
                GroupSpec spec = make_group_spec(q, e, d);
                REQUIRE(validate_hypotheses(spec).main_theorem_applies);
                GaloisConnectionResult r = verify_galois_connection(spec);
                CHECK_MESSAGE(r.ok(), "q=", to_string(q), " e=", e, " d=", to_string(d));
            }
        }
    }
}

TEST_CASE("negative control reports structured violations") {
    // q = 5 is not Mersenne; the n = 2 exception clause genuinely fails here.
    GaloisConnectionResult r = verify_galois_connection(make_group_spec(5, 2, 6));
    CHECK_FALSE(r.ok());
    REQUIRE_FALSE(r.violations.empty());
    CHECK(r.violations[0].find("n = 2") != std::string::npos);
}
