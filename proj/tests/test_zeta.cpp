#include "delsarte/zeta.hpp"

#include <doctest.h>

using namespace delsarte;

namespace {

const char* kMaxQuintic = "yzw^3+xyz^3+wxy^3+zwx^3";

// independent oracle: the triple sum over v1 + v2 + v3 = -1 taken literally
CyclotomicInt jacobi_sum_triple_oracle(long m, long q, const Character& alpha) {
    PrimeField f(q);
    std::vector<Integer> counts(m);
    for (long v1 = 1; v1 < q; ++v1)
        for (long v2 = 1; v2 < q; ++v2)
            for (long v3 = 1; v3 < q; ++v3) {
                if ((v1 + v2 + v3 + 1) % q != 0) continue;
                long e = (alpha.a[1] * f.dlog(v1) + alpha.a[2] * f.dlog(v2) +
                          alpha.a[3] * f.dlog(v3)) %
                         m;
                counts[e] += 1;
            }
    return CyclotomicInt::from_counts(m, std::move(counts));
}

Integer int_pow(long b, int e) {
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

TEST_CASE("jacobi context requires q == 1 mod m") {
    CHECK_THROWS_AS(JacobiContext(15, 7), std::invalid_argument);
    JacobiContext ctx(15, 31);
    CHECK(ctx.chi_exponent(ctx.field().generator()) == 1);  // chi has exact order m
}

TEST_CASE("jacobi sums match the triple-loop oracle") {
    struct Case {
        long m, q;
        std::array<long, 4> a;
    };
    for (const Case& c : {Case{3, 7, {1, 1, 2, 2}}, Case{5, 11, {1, 1, 1, 2}},
                          Case{15, 31, {1, 2, 4, 8}}}) {
        JacobiContext ctx(c.m, c.q);
        Character alpha(c.m, c.a);
        CyclotomicInt j = jacobi_sum(ctx, alpha);
        CHECK(j == jacobi_sum_triple_oracle(c.m, c.q, alpha));
        // |j|^2 = q^2
        CHECK((j * j.conj(-1)).as_rational_integer() == Integer(c.q) * c.q);
    }
}

TEST_CASE("frozen jacobi values") {
    // values computed by the triple-loop oracle and reduced mod Phi_m
    CHECK(jacobi_sum(JacobiContext(3, 7), Character(3, {1, 1, 2, 2})).as_rational_integer() ==
          Integer(7));
    CHECK(jacobi_sum(JacobiContext(5, 11), Character(5, {1, 1, 1, 2})).reduced() ==
          std::vector<Integer>{-3, 7, 3, 9});
    CHECK(jacobi_sum(JacobiContext(15, 31), Character(15, {1, 2, 4, 8})).reduced() ==
          std::vector<Integer>{-23, 32, 16, -16, 32, -16, 0, 16});
}

TEST_CASE("galois equivariance: conj_k(j(alpha)) = j(k alpha) at (m,q) = (5,11)") {
    JacobiContext ctx(5, 11);
    for (const Character& alpha :
         {Character(5, {1, 1, 1, 2}), Character(5, {1, 2, 3, 4}), Character(5, {2, 4, 1, 3})})
        for (long k : units_mod(5))
            CHECK(jacobi_sum(ctx, alpha).conj(k) == jacobi_sum(ctx, alpha.scaled(k)));
}

TEST_CASE("norm law j * conj(j) = q^2 across all of A_5 at q = 11") {
    JacobiContext ctx(5, 11);
    for (const Character& alpha : generate_characters(5)) {
        CyclotomicInt j = jacobi_sum(ctx, alpha);
        CHECK((j * j.conj(-1)).as_rational_integer() == Integer(121));
    }
}

TEST_CASE("point counts of Fermat surfaces") {
    CHECK(count_points_fermat(3, 7) == 99);
    CHECK(count_points_fermat(5, 11) == 405);
}

TEST_CASE("weil trace identity at (3,7) and (5,11)") {
    for (auto [m, q] : {std::pair<long, long>{3, 7}, {5, 11}}) {
        JacobiContext ctx(m, q);
        CyclotomicInt sum(m);
        for (const Character& alpha : generate_characters(m)) sum = sum + jacobi_sum(ctx, alpha);
        auto n = sum.as_rational_integer();
        REQUIRE(n);
        CHECK(Integer(1) + q + Integer(q) * q + *n == Integer(count_points_fermat(m, q)));
    }
}

TEST_CASE("weil characteristic polynomial") {
    SUBCASE("m=2, q=5: degree 2") {
        IntPolynomial p = weil_charpoly(2, 5);
        CHECK(p.degree() == 2);
        // j((1,1,1,1)) over F_5 from the oracle
        CyclotomicInt j = jacobi_sum_triple_oracle(2, 5, Character(2, {1, 1, 1, 1}));
        auto jv = j.as_rational_integer();
        REQUIRE(jv);
        // P(T) = (T - 5)(T - j)
        CHECK(p.coeffs == std::vector<Integer>{*jv * 5, -(*jv + 5), 1});
    }
    SUBCASE("m=3, q=7: degree 7 and the trace matches the point count") {
        IntPolynomial p = weil_charpoly(3, 7);
        REQUIRE(p.degree() == 7);
        // sum of roots = -[T^6] coefficient; #S = 1 + trace + q^2
        Integer trace = -p.coeffs[6];
        CHECK(Integer(1) + trace + 49 == Integer(count_points_fermat(3, 7)));
    }
    SUBCASE("m=5, q=11: degree 53") {
        IntPolynomial p = weil_charpoly(5, 11);
        REQUIRE(p.degree() == 53);
        Integer trace = -p.coeffs[52];
        CHECK(Integer(1) + trace + 121 == Integer(count_points_fermat(5, 11)));
    }
}

TEST_CASE("transcendental euler factor of the maximal quintic at q=31") {
    IntPolynomial f = transcendental_euler_factor(parse_exponent_matrix(kMaxQuintic), 31);
    REQUIRE(f.degree() == 8);
    CHECK(f.coeffs[0] == 1);
    CHECK(f.coeffs == std::vector<Integer>{Integer(1), Integer(-8), Integer(3868),
                                           Integer(-23096), Integer(5587270), Integer(-22195256),
                                           Integer("3572179228"), Integer("-7100029448"),
                                           Integer("852891037441")});
    // leading coefficient has absolute value q^lambda
    CHECK(abs(f.coeffs[8]) == int_pow(31, 8));
}

TEST_CASE("transcendental euler factor of the Fermat quintic at q=11 has degree 16") {
    IntPolynomial f = transcendental_euler_factor(parse_exponent_matrix("x^5+y^5+z^5+w^5"), 11);
    CHECK(f.degree() == 16);
    CHECK(f.coeffs[0] == 1);
}

TEST_CASE("transcendental euler factor rejects bad primes") {
    CHECK_THROWS_AS(transcendental_euler_factor(parse_exponent_matrix(kMaxQuintic), 7),
                    std::invalid_argument);
}

TEST_CASE("lambda = 0 gives the constant factor 1") {
    // the Fermat cubic has no transcendental classes
    IntPolynomial f = transcendental_euler_factor(parse_exponent_matrix("x^3+y^3+z^3+w^3"), 7);
    CHECK(f == IntPolynomial::one());
}

TEST_CASE("ns local factor splitting patterns") {
    SUBCASE("q = 31 splits everywhere: (1 - 31T)^45") {
        CHECK(ns_local_factor(31) == IntPolynomial::one_plus(-31, 1).pow(45));
    }
    SUBCASE("q = 2: (1-2T)^39 (1-4T^2) (1-16T^4)") {
        CHECK(ns_local_factor(2) == IntPolynomial::one_plus(-2, 1).pow(39) *
                                        IntPolynomial::one_plus(-4, 2) *
                                        IntPolynomial::one_plus(-16, 4));
    }
    SUBCASE("q = 11: (1-11T)^39 (1-121T^2) (1-11T)^4") {
        CHECK(ns_local_factor(11) == IntPolynomial::one_plus(-11, 1).pow(39) *
                                         IntPolynomial::one_plus(-121, 2) *
                                         IntPolynomial::one_plus(-11, 1).pow(4));
    }
    SUBCASE("ramified primes rejected") {
        CHECK_THROWS_AS(ns_local_factor(3), std::invalid_argument);
        CHECK_THROWS_AS(ns_local_factor(5), std::invalid_argument);
        CHECK_THROWS_AS(ns_local_factor(30), std::invalid_argument);
    }
}

TEST_CASE("local zeta assembly") {
    SUBCASE("maximal quintic at q=31: denominator degree 55") {
        LocalZeta z = zeta_local(parse_exponent_matrix(kMaxQuintic), 31);
        CHECK(z.numerator == IntPolynomial::one());
        CHECK(z.denominator.degree() == 55);
        CHECK(z.ns_factor == IntPolynomial::one_plus(-31, 1).pow(45));
        CHECK(z.transcendental_factor.degree() == 8);
    }
    SUBCASE("fermat quintic at q=11: denominator degree 55") {
        LocalZeta z = zeta_local(parse_exponent_matrix("x^5+y^5+z^5+w^5"), 11);
        CHECK(z.denominator.degree() == 55);
        CHECK(z.ns_factor == IntPolynomial::one_plus(-11, 1).pow(37));
        CHECK(z.transcendental_factor.degree() == 16);
    }
}

TEST_CASE("maximal quintic point counts") {
    DelsarteSurface s = parse_exponent_matrix(kMaxQuintic);
    CHECK(count_points(s, 31) == 1249);
}

TEST_CASE("resolution trace identity at q=31 and q=61") {
    DelsarteSurface s = parse_exponent_matrix(kMaxQuintic);
    SUBCASE("q=31") {
        TraceReport r = verify_resolution_trace(s, 31);
        CHECK(r.jacobi_orbit_sum == 8);
        CHECK(r.lhs == 2365);
        CHECK(r.points_singular_model == 1249);
        CHECK(r.rhs == 2365);
        CHECK(r.equal);
    }
    SUBCASE("q=61") {
        TraceReport r = verify_resolution_trace(s, 61);
        CHECK(r.jacobi_orbit_sum == -472);
        CHECK(r.equal);
    }
    SUBCASE("q=7 rejected") { CHECK_THROWS_AS(verify_resolution_trace(s, 7), std::invalid_argument); }
    SUBCASE("non-maximal surfaces rejected") {
        CHECK_THROWS_AS(verify_resolution_trace(parse_exponent_matrix("x^5+y^5+z^5+w^5"), 31),
                        std::invalid_argument);
    }
}

TEST_CASE("is_maximal_quintic recognizes permuted forms") {
    CHECK(is_maximal_quintic(parse_exponent_matrix(kMaxQuintic)));
    CHECK(is_maximal_quintic(parse_exponent_matrix("xyz^3+yzw^3+zwx^3+wxy^3")));
    CHECK(!is_maximal_quintic(parse_exponent_matrix("x^5+y^5+z^5+w^5")));
}
