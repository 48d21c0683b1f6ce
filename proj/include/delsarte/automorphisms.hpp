#pragma once

#include "delsarte/surface.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace delsarte {

// projective automorphism x_i -> zeta_n^{w_i} x_i
struct DiagonalAutomorphism {
    long order;                   // n
    std::array<long, 4> weights;  // mod n
};

// Eigenvalue exponents of the automorphism on H^{2,0}: one per monomial mu
// of degree <= d-4 in x, y, z (the basis mu * omega in the chart w = 1),
// with weight wt(mu) + (w_x + w_y + w_z + w_w) - c_F mod n where c_F is the
// common weight of the defining monomials.  Sorted multiset, size C(d-1, 3).
// Throws when the polynomial is not semi-invariant (monomial weights differ).
std::vector<long> h20_weights(const DiagonalAutomorphism& aut, const DelsarteSurface& s);

struct CMTypeCandidate {
    long n;
    std::vector<long> exponents;  // residues mod n, multiset
};

enum class CMTypeVerdict {
    cm_type,             // distinct units, no conjugate pairs, covering half of (Z/n)*
    non_unit_exponent,   // some exponent shares a factor with n
    duplicate_exponent,
    conjugate_pair,      // k and -k both present
    wrong_size,          // exponents do not cover half of the units
};

CMTypeVerdict cm_type_verdict(const CMTypeCandidate& c);
bool is_cm_type(const CMTypeCandidate& c);
std::string to_string(CMTypeVerdict v);

// Once a CM-type of Q(zeta_n) acts, phi(n) divides dim T(X).  If exactly
// one positive multiple of phi(n) is compatible with the lower bound
// rho >= rho_lower, the dimension and the Picard number are determined.
struct TranscendentalConclusion {
    long dim_t;
    long picard;
};
std::optional<TranscendentalConclusion> conclude_transcendental_dimension(long n, long b2,
                                                                          long rho_lower);

}  // namespace delsarte
