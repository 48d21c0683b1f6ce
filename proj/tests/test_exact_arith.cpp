#include "delsarte/characters.hpp"
#include "delsarte/cyclotomic.hpp"
#include "delsarte/integer.hpp"
#include "delsarte/matrix.hpp"
#include "delsarte/prime_field.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace delsarte;

namespace {

const IntMatrix kMaxQuinticMatrix{{0, 1, 1, 3}, {1, 1, 3, 0}, {1, 3, 0, 1}, {3, 0, 1, 1}};

// independent oracle: cofactor expansion along the first row
Integer det_cofactor(const IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t c = 0;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) sub.at(i - 1, c++) = m.at(i, k);
        }
        Integer term = m.at(0, j) * det_cofactor(sub);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

// brute-force closure of the subgroup generated by rows, for small m
std::set<std::vector<long>> span_bruteforce(const IntMatrix& rows, long m) {
    std::set<std::vector<long>> s;
    s.insert(std::vector<long>(rows.cols(), 0));
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        std::vector<long> g(rows.cols());
        for (std::size_t j = 0; j < rows.cols(); ++j) g[j] = mod_reduce(to_long_checked(rows.at(r, j)), m);
        std::set<std::vector<long>> next;
        for (const auto& base : s) {
            std::vector<long> cur = base;
            do {
                next.insert(cur);
                for (std::size_t j = 0; j < g.size(); ++j) cur[j] = (cur[j] + g[j]) % m;
            } while (cur != base);
        }
        s = next;
    }
    return s;
}

}  // namespace

TEST_CASE("det: identity and diagonal") {
    CHECK(det(IntMatrix::identity(4)) == 1);
    CHECK(det(IntMatrix::identity(4) * Integer(5)) == 625);
}

TEST_CASE("det: maximal quintic exponent matrix") {
    CHECK(det(kMaxQuinticMatrix) == 75);
    CHECK(det_cofactor(kMaxQuinticMatrix) == 75);
}

TEST_CASE("det: rejects non-square input") {
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(adjugate(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det agrees with cofactor oracle on random matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-6, 6);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            IntMatrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = coef(rng);
            CHECK(det(m) == det_cofactor(m));
        }
}

TEST_CASE("adjugate: identity cases") {
    CHECK(adjugate(IntMatrix::identity(4)) == IntMatrix::identity(4));
    CHECK(adjugate(IntMatrix::identity(4) * Integer(5)) == IntMatrix::identity(4) * Integer(125));
}

TEST_CASE("adjugate of the maximal quintic matrix") {
    IntMatrix adj = adjugate(kMaxQuinticMatrix);
    Integer g = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g = gcd(g, adj.at(i, j));
    CHECK(g == 5);
    CHECK(kMaxQuinticMatrix * adj == IntMatrix::identity(4) * Integer(75));
}

TEST_CASE("M * adjugate(M) == det(M) * I on random matrices") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int n = 1; n <= 4; ++n)
        for (int trial = 0; trial < 10; ++trial) {
            IntMatrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = coef(rng);
            CHECK(m * adjugate(m) == IntMatrix::identity(n) * det(m));
        }
}

TEST_CASE("row_span_mod: zero matrix gives the trivial subgroup") {
    IntMatrix z(1, 3);
    SubgroupModM g = row_span_mod(z, 15);
    CHECK(g.order() == 1);
    CHECK(g.generators.empty());
}

TEST_CASE("row_span_mod: single row (2,4,8) mod 15 is cyclic of order 15") {
    IntMatrix m{{2, 4, 8}};
    SubgroupModM g = row_span_mod(m, 15);
    REQUIRE(g.orders.size() == 1);
    CHECK(g.orders[0] == 15);
    CHECK(g.order() == 15);
}

TEST_CASE("row_span_mod: dependent rows collapse to one order-15 generator") {
    // rows 2 and 3 are 3x and 7x row 1
    IntMatrix m{{2, 4, 8}, {6, 12, 9}, {14, 13, 11}};
    SubgroupModM g = row_span_mod(m, 15);
    REQUIRE(g.orders.size() == 1);
    CHECK(g.orders[0] == 15);
    auto brute = span_bruteforce(m, 15);
    CHECK(brute.size() == 15);
    // the enumerated elements are exactly the brute-force span
    std::set<std::vector<long>> got;
    for (const auto& e : g.elements()) got.insert(e);
    CHECK(got == brute);
}

TEST_CASE("row_span_mod matches brute-force span size on random inputs") {
    std::mt19937 rng(23);
    for (long m : {2, 3, 4, 6, 12, 15}) {
        std::uniform_int_distribution<long> coef(0, m - 1);
        for (int rows = 1; rows <= 3; ++rows)
            for (int trial = 0; trial < 8; ++trial) {
                IntMatrix a(rows, 3);
                for (int i = 0; i < rows; ++i)
                    for (int j = 0; j < 3; ++j) a.at(i, j) = coef(rng);
                SubgroupModM g = row_span_mod(a, m);
                auto brute = span_bruteforce(a, m);
                CHECK(g.order() == Integer(brute.size()));
                std::set<std::vector<long>> got;
                for (const auto& e : g.elements()) got.insert(e);
                CHECK(got == brute);
            }
    }
}

TEST_CASE("kernel_mod: annihilator duality |span| * |kernel| = m^3") {
    std::mt19937 rng(29);
    for (long m : {4, 6, 15}) {
        std::uniform_int_distribution<long> coef(0, m - 1);
        for (int trial = 0; trial < 10; ++trial) {
            IntMatrix a(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) a.at(i, j) = coef(rng);
            Integer span = row_span_mod(a, m).order();
            Integer ker = kernel_mod(a, m).order();
            CHECK(span * ker == Integer(m) * m * m);
            // every kernel generator annihilates every row
            for (const auto& g : kernel_mod(a, m).generators)
                for (int i = 0; i < 3; ++i) {
                    long s = 0;
                    for (int j = 0; j < 3; ++j) s += to_long_checked(a.at(i, j)) * g[j];
                    CHECK(s % m == 0);
                }
        }
    }
}

TEST_CASE("cyclotomic: zeta5 * zeta5^4 = 1") {
    auto z = CyclotomicInt::zeta_power(5, 1);
    auto z4 = CyclotomicInt::zeta_power(5, 4);
    CHECK(z * z4 == CyclotomicInt::from_integer(5, 1));
}

TEST_CASE("cyclotomic: (1 + zeta3)(1 + zeta3^2) = 1") {
    auto one = CyclotomicInt::from_integer(3, 1);
    auto a = one + CyclotomicInt::zeta_power(3, 1);
    auto b = one + CyclotomicInt::zeta_power(3, 2);
    CHECK(a * b == one);
}

TEST_CASE("cyclotomic: conj(-1) is complex conjugation by index flip") {
    CyclotomicInt x(15);
    x = CyclotomicInt::zeta_power(15, 2) + CyclotomicInt::zeta_power(15, 7) +
        CyclotomicInt::from_integer(15, 3);
    auto c = x.conj(-1);
    CHECK(c == CyclotomicInt::zeta_power(15, 13) + CyclotomicInt::zeta_power(15, 8) +
                   CyclotomicInt::from_integer(15, 3));
}

TEST_CASE("cyclotomic: conj composes multiplicatively") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (long m : {5, 12, 15}) {
        CyclotomicInt x(m);
        for (long i = 0; i < m; ++i)
            x = x + CyclotomicInt::zeta_power(m, i) * CyclotomicInt::from_integer(m, coef(rng));
        for (long k1 : units_mod(m))
            for (long k2 : units_mod(m))
                CHECK(x.conj(k1).conj(k2) == x.conj(k1 * k2 % m));
    }
}

TEST_CASE("cyclotomic: conj rejects non-units") {
    CyclotomicInt x = CyclotomicInt::zeta_power(15, 1);
    CHECK_THROWS_AS(x.conj(3), std::invalid_argument);
}

TEST_CASE("cyclotomic: conductor mismatch throws") {
    CHECK_THROWS_AS(CyclotomicInt(3) + CyclotomicInt(5), std::invalid_argument);
}

TEST_CASE("as_rational_integer") {
    CHECK(CyclotomicInt::from_integer(15, 7).as_rational_integer() == Integer(7));
    CHECK(!CyclotomicInt::zeta_power(15, 1).as_rational_integer());
    // 1 + zeta3 + zeta3^2 = 0
    auto s = CyclotomicInt::from_integer(3, 1) + CyclotomicInt::zeta_power(3, 1) +
             CyclotomicInt::zeta_power(3, 2);
    CHECK(s.as_rational_integer() == Integer(0));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    // Phi_15 = x^8 - x^7 + x^5 - x^4 + x^3 - x + 1
    CHECK(cyclotomic_polynomial(15) == std::vector<Integer>{1, -1, 0, 1, -1, 1, 0, -1, 1});
}

TEST_CASE("primitive roots") {
    CHECK(find_primitive_root(2) == 1);
    CHECK(find_primitive_root(7) == 3);
    CHECK(find_primitive_root(31) == 3);
    CHECK_THROWS_AS(find_primitive_root(30), std::invalid_argument);
}

TEST_CASE("prime field dlog table") {
    for (long q : {2, 7, 31, 61}) {
        PrimeField f(q);
        for (long x = 1; x < q; ++x) {
            long v = 1;
            for (long k = 0; k < f.dlog(x); ++k) v = v * f.generator() % q;
            CHECK(v == x);
        }
    }
}

TEST_CASE("is_prime / euler_phi / multiplicative_order") {
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK(!is_prime(1));
    CHECK(!is_prime(30));
    CHECK(euler_phi(15) == 8);
    CHECK(euler_phi(1) == 1);
    CHECK(multiplicative_order(2, 5) == 4);
    CHECK(multiplicative_order(11, 5) == 1);
    CHECK(multiplicative_order(2, 3) == 2);
}
