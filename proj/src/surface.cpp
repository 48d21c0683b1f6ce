#include "delsarte/surface.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace delsarte {

DelsarteSurface DelsarteSurface::from_exponents(const ExponentMatrix& a) {
    long deg = -1;
    for (const auto& row : a) {
        long d = 0;
        for (long e : row) {
            if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
            d += e;
        }
        if (deg < 0) deg = d;
        else if (d != deg) throw std::invalid_argument("monomials have different degrees");
    }
    if (deg == 0) throw std::invalid_argument("constant polynomial");
    for (int j = 0; j < 4; ++j) {
        bool all = true;
        for (int i = 0; i < 4; ++i) all = all && a[i][j] > 0;
        if (all)
            throw std::invalid_argument("a variable divides every monomial (reducible surface)");
    }
    return DelsarteSurface{deg, a};
}

DelsarteSurface DelsarteSurface::from_ast(const PolynomialAST& ast) {
    if (ast.monomials.size() != 4)
        throw std::invalid_argument("a Delsarte surface needs exactly four monomials, got " +
                                    std::to_string(ast.monomials.size()));
    ExponentMatrix a{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = ast.monomials[i].exponents[j];
    return from_exponents(a);
}

IntMatrix DelsarteSurface::matrix() const {
    IntMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = exponents[i][j];
    return m;
}

bool DelsarteSurface::is_fermat() const {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (exponents[i][j] != (i == j ? degree : 0)) return false;
    return true;
}

std::string DelsarteSurface::polynomial_string() const {
    PolynomialAST ast;
    for (int i = 0; i < 4; ++i) {
        PolynomialAST::Monomial mono;
        for (int j = 0; j < 4; ++j) mono.exponents[j] = exponents[i][j];
        ast.monomials.push_back(mono);
    }
    return polynomial_to_string(ast);
}

DelsarteSurface parse_exponent_matrix(std::string_view polynomial_text) {
    return DelsarteSurface::from_ast(parse_polynomial(polynomial_text));
}

IntMatrix FermatCovering::condition_matrix() const {
    IntMatrix c(3, 3);
    for (int j = 1; j < 4; ++j)
        for (int k = 1; k < 4; ++k) c.at(j - 1, k - 1) = mod_reduce(b[j][k] - b[0][k], m);
    return c;
}

namespace {

// trusted small-m oracle for the covering group
Integer covering_group_order_bruteforce(const IntMatrix& c, long m) {
    Integer count = 0;
    std::vector<long> g(3);
    for (g[0] = 0; g[0] < m; ++g[0])
        for (g[1] = 0; g[1] < m; ++g[1])
            for (g[2] = 0; g[2] < m; ++g[2]) {
                bool ok = true;
                for (std::size_t r = 0; r < 3 && ok; ++r) {
                    long s = 0;
                    for (std::size_t k = 0; k < 3; ++k)
                        s += to_long_checked(c.at(r, k)) * g[k];
                    ok = s % m == 0;
                }
                if (ok) ++count;
            }
    return count;
}

}  // namespace

FermatCovering compute_covering(const DelsarteSurface& s) {
    IntMatrix a = s.matrix();
    Integer d = det(a);
    if (d == 0) throw std::domain_error("singular exponent matrix: not a Delsarte covering candidate");
    IntMatrix adj = adjugate(a);

    Integer adj_gcd = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) adj_gcd = gcd(adj_gcd, adj.at(i, j));
    Integer mm = abs(d) / gcd(abs(d), adj_gcd);
    long m = to_long_checked(mm);

    FermatCovering cov;
    cov.m = m;
    // B0 = m * A^-1 = (m/det) * adj; the division is exact by choice of m
    long shift = 0;
    ExponentMatrix b0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Integer num = mm * adj.at(i, j);
            if (num % d != 0) throw std::logic_error("covering: non-integral m*A^-1");
            b0[i][j] = to_long_checked(num / d);
            shift = std::max(shift, -b0[i][j]);
        }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) cov.b[i][j] = mod_reduce(b0[i][j] + shift, m);

    cov.g = kernel_mod(cov.condition_matrix(), m);
    if (m <= 30 && cov.g.order() != covering_group_order_bruteforce(cov.condition_matrix(), m))
        throw std::logic_error("covering group: Smith-form kernel disagrees with brute force");
    return cov;
}

std::vector<Character> invariant_characters(const FermatCovering& cov) {
    std::vector<Character> out;
    if (cov.m < 2) return out;
    SubgroupModM dual = row_span_mod(cov.condition_matrix(), cov.m);
    if (dual.order() > 20'000'000)
        throw std::domain_error("dual subgroup too large to enumerate (" +
                                dual.order().str() + " elements)");
    const long m = cov.m;
    dual.visit([&](const std::vector<long>& t) {
        long a0 = mod_reduce(-(t[0] + t[1] + t[2]), m);
        if (a0 == 0 || t[0] == 0 || t[1] == 0 || t[2] == 0) return;
        out.push_back(Character(m, {a0, t[0], t[1], t[2]}));
    });
    std::sort(out.begin(), out.end());
    return out;
}

DelsarteAnalysis analyze(const DelsarteSurface& s) {
    DelsarteAnalysis an;
    an.covering = compute_covering(s);
    an.invariant_chars = invariant_characters(an.covering);

    std::vector<Character> trans;
    for (const Character& c : an.invariant_chars) {
        if (in_transcendental_type_set(c)) trans.push_back(c);
        if (c.hodge_degree() == 0) ++an.h20;
    }
    // G-invariance is Galois-stable, so the closure stays inside the
    // invariant set; lambda is the total size of these orbits
    an.transcendental_orbits = orbit_decomposition(trans);
    for (const CharacterOrbit& o : an.transcendental_orbits)
        an.lambda += static_cast<long>(o.size());
    if (s.degree == 5 && an.h20 == 4) an.picard = 53 - an.lambda;
    return an;
}

long lefschetz_number(const DelsarteSurface& s) { return analyze(s).lambda; }

long h20_invariant_count(const DelsarteSurface& s) { return analyze(s).h20; }

long picard_number_quintic(const DelsarteSurface& s) {
    if (s.degree != 5) throw std::domain_error("picard_number_quintic: degree must be 5");
    DelsarteAnalysis an = analyze(s);
    if (an.h20 != 4)
        throw std::domain_error("RDP filter failed: h^{2,0} = " + std::to_string(an.h20) +
                                ", the 53 - lambda formula does not apply");
    return *an.picard;
}

long fermat_b2(long m) { return m * m * m - 4 * m * m + 6 * m - 2; }

long picard_number_fermat(long m) {
    if (m < 3) throw std::invalid_argument("picard_number_fermat: m must be >= 3");
    return fermat_b2(m) - fermat_lambda(m);
}

}  // namespace delsarte
