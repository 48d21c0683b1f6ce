#pragma once

#include "delsarte/characters.hpp"
#include "delsarte/cyclotomic.hpp"
#include "delsarte/integer.hpp"
#include "delsarte/prime_field.hpp"
#include "delsarte/surface.hpp"

#include <string>
#include <vector>

namespace delsarte {

// Fixes a multiplicative character chi: F_q* -> C* of order exactly m,
// chi(v) = zeta_m^{dlog(v) mod m}.  Requires q prime with q == 1 mod m.
class JacobiContext {
public:
    JacobiContext(long m, long q);

    long m() const { return m_; }
    long q() const { return q_; }
    const PrimeField& field() const { return field_; }
    long chi_exponent(long v) const { return chi_exp_[v]; }  // v in 1..q-1

private:
    long m_, q_;
    PrimeField field_;
    std::vector<long> chi_exp_;
};

// j(alpha) = sum over v1,v2 in F_q*, v3 = -1-v1-v2 != 0 of
// zeta^(a1 dlog v1 + a2 dlog v2 + a3 dlog v3); satisfies j * conj(j) = q^2
CyclotomicInt jacobi_sum(const JacobiContext& ctx, const Character& alpha);

// Exact integer polynomial, coefficients ascending.
struct IntPolynomial {
    std::vector<Integer> coeffs;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> c) : coeffs(std::move(c)) { trim(); }
    static IntPolynomial one() { return IntPolynomial({Integer(1)}); }
    // (1 + c*T^k)
    static IntPolynomial one_plus(const Integer& c, std::size_t k);

    void trim();
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial pow(std::size_t e) const;
    bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
    std::string to_string(const std::string& var = "T") const;
};

// characteristic polynomial of Frobenius on H^2(S_m) over F_q:
// P(T) = (T - q) * prod over A_m of (T - j(alpha)); degree #A_m + 1
IntPolynomial weil_charpoly(long m, long q);

// prod over the Galois closure of the invariant transcendental characters
// of (1 - j(alpha) T); integer coefficients, constant term 1, degree lambda.
// Requires q == 1 mod m and the h20 = 4 filter to pass.
IntPolynomial transcendental_euler_factor(const DelsarteSurface& s, long q);

// Neron-Severi local factor of the maximal quintic:
// (1-qT)^39 * K-factor * L-factor with K, L the third and fifth cyclotomic
// fields.  Requires q prime, q not 3 or 5.
IntPolynomial ns_local_factor(long q);

// local zeta function as numerator/denominator pair:
// 1 / [(1-T) * NS factor * transcendental factor * (1-q^2 T)]
struct LocalZeta {
    IntPolynomial numerator;
    IntPolynomial denominator;
    IntPolynomial ns_factor;
    IntPolynomial transcendental_factor;
};
LocalZeta zeta_local(const DelsarteSurface& s, long q);

// number of projective points of the surface over F_q by direct enumeration
// of standard representatives (first nonzero coordinate = 1)
long count_points(const DelsarteSurface& s, long q);
long count_points_fermat(long m, long q);

// Check 1 + 45q + q^2 + sum over the invariant transcendental orbit of
// j(alpha)  ==  #Y(F_q) + 36q  for the maximal quintic (each resolved A9
// chain contributes 9q+1 points in place of one singular point).
// A mismatch is reported, not thrown.
struct TraceReport {
    long q = 0;
    Integer jacobi_orbit_sum;
    Integer lhs;        // 1 + 45q + q^2 + orbit sum
    long points_singular_model = 0;
    Integer rhs;        // points + 36q
    bool equal = false;
};
TraceReport verify_resolution_trace(const DelsarteSurface& s, long q);

// true iff s is the maximal quintic up to row/column permutation
bool is_maximal_quintic(const DelsarteSurface& s);

}  // namespace delsarte
