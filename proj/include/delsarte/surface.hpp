#pragma once

#include "delsarte/characters.hpp"
#include "delsarte/integer.hpp"
#include "delsarte/matrix.hpp"
#include "delsarte/polynomial.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace delsarte {

using ExponentMatrix = std::array<std::array<long, 4>, 4>;

// Surface in P^3 cut out by a sum of four monomials with coefficient 1.
// Rows of the exponent matrix are the monomials, columns the variables
// x, y, z, w.  Construction checks that all rows have the same degree and
// that no variable divides the whole polynomial; a singular exponent
// matrix is rejected later, by the covering computation.
struct DelsarteSurface {
    long degree;
    ExponentMatrix exponents;

    static DelsarteSurface from_exponents(const ExponentMatrix& a);
    static DelsarteSurface from_ast(const PolynomialAST& ast);

    IntMatrix matrix() const;
    bool is_fermat() const;
    std::string polynomial_string() const;
};

// parse a polynomial string into a Delsarte surface (exactly four monomials)
DelsarteSurface parse_exponent_matrix(std::string_view polynomial_text);

// The dominant map S_m -> X: Fermat degree m, monomial exponent matrix B
// (residues mod m), and the covering group G < (Z/m)^3 acting by
// [s,t,u,v] -> [s, z1 t, z2 u, z3 v].
struct FermatCovering {
    long m = 1;
    ExponentMatrix b{};
    SubgroupModM g;           // covering group, invariant-factor generators
    Integer g_order() const { return g.order(); }

    // rows (B_j - B_0) restricted to the t,u,v columns; its row span mod m
    // is the dual subgroup cutting out the G-invariant characters
    IntMatrix condition_matrix() const;
};

// Shioda's covering: m = |det A| / gcd(|det A|, gcd of adjugate entries),
// B = m*A^-1 shifted by the least c*J making all entries nonnegative and
// reduced mod m.  Throws when det A = 0.
FermatCovering compute_covering(const DelsarteSurface& s);

// all G-invariant characters in A_m, enumerated through the dual subgroup
// (the row span of the condition matrix, of size m^3 / |G|)
std::vector<Character> invariant_characters(const FermatCovering& cov);

struct DelsarteAnalysis {
    FermatCovering covering;
    std::vector<Character> invariant_chars;          // all G-invariant members of A_m
    std::vector<CharacterOrbit> transcendental_orbits;  // orbits of invariant degree-0/2 characters
    long lambda = 0;   // size of the Galois closure of the invariant transcendental set
    long h20 = 0;      // invariant characters of Hodge degree 0
    std::optional<long> picard;  // 53 - lambda, present iff degree 5 and h20 == 4
};

DelsarteAnalysis analyze(const DelsarteSurface& s);

long lefschetz_number(const DelsarteSurface& s);
long h20_invariant_count(const DelsarteSurface& s);

// 53 - lambda for a quintic passing the rational-double-point filter
// (h20 == 4); throws otherwise
long picard_number_quintic(const DelsarteSurface& s);

// second Betti number of the smooth degree-m surface in P^3
long fermat_b2(long m);

// b2(S_m) - lambda(S_m); requires m >= 3
long picard_number_fermat(long m);

}  // namespace delsarte
