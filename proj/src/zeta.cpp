#include "delsarte/zeta.hpp"

#include "delsarte/enumerate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace delsarte {

JacobiContext::JacobiContext(long m, long q) : m_(m), q_(q), field_(q), chi_exp_(q, 0) {
    if (m < 1) throw std::invalid_argument("JacobiContext: m must be >= 1");
    if ((q - 1) % m != 0)
        throw std::invalid_argument("JacobiContext: need q == 1 mod m (q=" + std::to_string(q) +
                                    ", m=" + std::to_string(m) + ")");
    for (long v = 1; v < q; ++v) chi_exp_[v] = field_.dlog(v) % m;
}

CyclotomicInt jacobi_sum(const JacobiContext& ctx, const Character& alpha) {
    if (alpha.m != ctx.m()) throw std::invalid_argument("jacobi_sum: character modulus mismatch");
    const long q = ctx.q(), m = ctx.m();
    const long a1 = alpha.a[1], a2 = alpha.a[2], a3 = alpha.a[3];
    // accumulate exponent counts and reduce once at the end
    std::vector<long> counts(m, 0);
    for (long v1 = 1; v1 < q; ++v1) {
        long e1 = a1 * ctx.chi_exponent(v1) % m;
        for (long v2 = 1; v2 < q; ++v2) {
            long v3 = mod_reduce(-1 - v1 - v2, q);
            if (v3 == 0) continue;
            long e = (e1 + a2 * ctx.chi_exponent(v2) + a3 * ctx.chi_exponent(v3)) % m;
            ++counts[e];
        }
    }
    std::vector<Integer> c(m);
    for (long i = 0; i < m; ++i) c[i] = counts[i];
    return CyclotomicInt::from_counts(m, std::move(c));
}

IntPolynomial IntPolynomial::one_plus(const Integer& c, std::size_t k) {
    std::vector<Integer> v(k + 1);
    v[0] = 1;
    v[k] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (coeffs.empty() || o.coeffs.empty()) return IntPolynomial();
    std::vector<Integer> r(coeffs.size() + o.coeffs.size() - 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs.size(); ++j) r[i + j] += coeffs[i] * o.coeffs[j];
    }
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::pow(std::size_t e) const {
    IntPolynomial r = one();
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
}

std::string IntPolynomial::to_string(const std::string& var) const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) os << (coeffs[i] > 0 ? " + " : " - ");
        else if (coeffs[i] < 0) os << "-";
        Integer a = abs(coeffs[i]);
        if (i == 0) os << a;
        else {
            if (a != 1) os << a << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// polynomial in T with cyclotomic coefficients; enough for expanding
// products of linear factors
using CycPoly = std::vector<CyclotomicInt>;

CycPoly cyc_poly_one(long m) { return {CyclotomicInt::from_integer(m, 1)}; }

// p *= (c0 + c1*T)
CycPoly mul_linear(const CycPoly& p, const CyclotomicInt& c0, const CyclotomicInt& c1) {
    long m = c0.conductor();
    CycPoly r(p.size() + 1, CyclotomicInt(m));
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] = r[i] + p[i] * c0;
        r[i + 1] = r[i + 1] + p[i] * c1;
    }
    return r;
}

IntPolynomial to_int_polynomial(const CycPoly& p, const char* what) {
    std::vector<Integer> out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        auto n = p[i].as_rational_integer();
        if (!n)
            throw std::logic_error(std::string(what) +
                                   ": coefficient is not a rational integer: " + p[i].to_string());
        out[i] = *n;
    }
    return IntPolynomial(std::move(out));
}

}  // namespace

IntPolynomial weil_charpoly(long m, long q) {
    JacobiContext ctx(m, q);
    CycPoly p = cyc_poly_one(m);
    // (T - q)
    p = mul_linear(p, CyclotomicInt::from_integer(m, -q), CyclotomicInt::from_integer(m, 1));
    for (const Character& alpha : generate_characters(m))
        p = mul_linear(p, -jacobi_sum(ctx, alpha), CyclotomicInt::from_integer(m, 1));
    return to_int_polynomial(p, "weil_charpoly");
}

IntPolynomial transcendental_euler_factor(const DelsarteSurface& s, long q) {
    DelsarteAnalysis an = analyze(s);
    if (s.degree == 5 && an.h20 != 4)
        throw std::domain_error("transcendental_euler_factor: RDP filter failed (h20 = " +
                                std::to_string(an.h20) + ")");
    if (an.covering.m > 1 && (q - 1) % an.covering.m != 0)
        throw std::invalid_argument("transcendental_euler_factor: need q == 1 mod " +
                                    std::to_string(an.covering.m));
    if (an.lambda == 0) return IntPolynomial::one();

    JacobiContext ctx(an.covering.m, q);
    CycPoly p = cyc_poly_one(an.covering.m);
    for (const CharacterOrbit& orbit : an.transcendental_orbits)
        for (const Character& alpha : orbit.members)
            p = mul_linear(p, CyclotomicInt::from_integer(an.covering.m, 1),
                           -jacobi_sum(ctx, alpha));
    IntPolynomial f = to_int_polynomial(p, "transcendental_euler_factor");
    if (f.degree() != an.lambda)
        throw std::logic_error("transcendental_euler_factor: degree != lambda");
    return f;
}

IntPolynomial ns_local_factor(long q) {
    if (!is_prime(q)) throw std::invalid_argument("ns_local_factor: q must be prime");
    if (q == 3 || q == 5) throw std::invalid_argument("ns_local_factor: q ramified, out of scope");
    IntPolynomial f = IntPolynomial::one_plus(-q, 1).pow(39);
    // K = Q(zeta_3): split iff q == 1 mod 3, else inert
    if (q % 3 == 1) f = f * IntPolynomial::one_plus(-q, 1).pow(2);
    else f = f * IntPolynomial::one_plus(-Integer(q) * q, 2);
    // L = Q(zeta_5): 4/f primes of residue degree f = ord_5(q)
    long fl = multiplicative_order(q, 5);
    Integer qf = 1;
    for (long i = 0; i < fl; ++i) qf *= q;
    f = f * IntPolynomial::one_plus(-qf, fl).pow(4 / fl);
    return f;
}

LocalZeta zeta_local(const DelsarteSurface& s, long q) {
    DelsarteAnalysis an = analyze(s);
    if (s.degree != 5 || an.h20 != 4)
        throw std::domain_error("zeta_local: supported for quintics passing the RDP filter");
    LocalZeta z;
    z.transcendental_factor = transcendental_euler_factor(s, q);
    // all 53 - lambda algebraic eigenvalues are q at split primes; for the
    // maximal quintic this agrees with the cyclotomic NS factor since
    // q == 1 mod 15 splits in both K and L
    z.ns_factor = is_maximal_quintic(s) ? ns_local_factor(q)
                                        : IntPolynomial::one_plus(-q, 1).pow(*an.picard);
    z.numerator = IntPolynomial::one();
    z.denominator = IntPolynomial::one_plus(-1, 1) * z.ns_factor * z.transcendental_factor *
                    IntPolynomial::one_plus(-Integer(q) * q, 1);
    return z;
}

long count_points(const DelsarteSurface& s, long q) {
    if (!is_prime(q)) throw std::invalid_argument("count_points: q must be prime");
    if (q > 512) throw std::invalid_argument("count_points: q exceeds desk scale");
    long maxe = 0;
    for (const auto& row : s.exponents)
        for (long e : row) maxe = std::max(maxe, e);
    // power tables pw[v][e]
    std::vector<std::vector<long>> pw(q, std::vector<long>(maxe + 1, 1));
    for (long v = 0; v < q; ++v)
        for (long e = 1; e <= maxe; ++e) pw[v][e] = pw[v][e - 1] * v % q;

    long count = 0;
    std::array<long, 4> pt{};
    // standard representatives: first nonzero coordinate = 1
    for (int lead = 0; lead < 4; ++lead) {
        for (int i = 0; i < lead; ++i) pt[i] = 0;
        pt[lead] = 1;
        long free = 3 - lead;
        long total = 1;
        for (long i = 0; i < free; ++i) total *= q;
        for (long enc = 0; enc < total; ++enc) {
            long rest = enc;
            for (int i = lead + 1; i < 4; ++i) {
                pt[i] = rest % q;
                rest /= q;
            }
            long sum = 0;
            for (const auto& row : s.exponents) {
                long term = 1;
                for (int j = 0; j < 4; ++j)
                    if (row[j]) term = term * pw[pt[j]][row[j]] % q;
                sum += term;
            }
            if (sum % q == 0) ++count;
        }
    }
    return count;
}

long count_points_fermat(long m, long q) {
    ExponentMatrix a{};
    for (int i = 0; i < 4; ++i) a[i][i] = m;
    return count_points(DelsarteSurface{m, a}, q);
}

bool is_maximal_quintic(const DelsarteSurface& s) {
    static const ExponentMatrix max_quintic{{{0, 1, 1, 3}, {1, 1, 3, 0}, {1, 3, 0, 1}, {3, 0, 1, 1}}};
    return canonical_form(s.exponents) == canonical_form(max_quintic);
}

TraceReport verify_resolution_trace(const DelsarteSurface& s, long q) {
    if (!is_maximal_quintic(s))
        throw std::invalid_argument("verify_resolution_trace: supported for the maximal quintic only");
    if (!is_prime(q) || (q - 1) % 15 != 0)
        throw std::invalid_argument("verify_resolution_trace: need a prime q == 1 mod 15");

    DelsarteAnalysis an = analyze(s);
    JacobiContext ctx(an.covering.m, q);
    CyclotomicInt sum(an.covering.m);
    for (const CharacterOrbit& orbit : an.transcendental_orbits)
        for (const Character& alpha : orbit.members) sum = sum + jacobi_sum(ctx, alpha);
    auto n = sum.as_rational_integer();
    if (!n) throw std::logic_error("verify_resolution_trace: orbit sum not a rational integer");

    TraceReport r;
    r.q = q;
    r.jacobi_orbit_sum = *n;
    r.lhs = Integer(1) + Integer(45) * q + Integer(q) * q + *n;
    r.points_singular_model = count_points(s, q);
    r.rhs = Integer(r.points_singular_model) + Integer(36) * q;
    r.equal = r.lhs == r.rhs;
    return r;
}

}  // namespace delsarte
