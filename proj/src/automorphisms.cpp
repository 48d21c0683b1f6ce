#include "delsarte/automorphisms.hpp"

#include "delsarte/integer.hpp"
#include "delsarte/prime_field.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace delsarte {

std::vector<long> h20_weights(const DiagonalAutomorphism& aut, const DelsarteSurface& s) {
    const long n = aut.order;
    if (n < 1) throw std::invalid_argument("h20_weights: order must be >= 1");

    long c_f = -1;
    for (const auto& row : s.exponents) {
        long w = 0;
        for (int j = 0; j < 4; ++j) w += row[j] * aut.weights[j];
        w = mod_reduce(w, n);
        if (c_f < 0) c_f = w;
        else if (w != c_f)
            throw std::domain_error(
                "polynomial not semi-invariant under the given automorphism");
    }

    long wsum = 0;
    for (long w : aut.weights) wsum += w;

    std::vector<long> out;
    const long d = s.degree;
    for (long i = 0; i + 0 <= d - 4; ++i)
        for (long j = 0; i + j <= d - 4; ++j)
            for (long k = 0; i + j + k <= d - 4; ++k)
                out.push_back(mod_reduce(i * aut.weights[0] + j * aut.weights[1] +
                                             k * aut.weights[2] + wsum - c_f,
                                         n));
    std::sort(out.begin(), out.end());
    return out;
}

CMTypeVerdict cm_type_verdict(const CMTypeCandidate& c) {
    const long n = c.n;
    std::set<long> seen;
    for (long e : c.exponents) {
        long r = mod_reduce(e, n);
        if (gcd_long(r, n) != 1) return CMTypeVerdict::non_unit_exponent;
        if (!seen.insert(r).second) return CMTypeVerdict::duplicate_exponent;
    }
    for (long r : seen)
        if (seen.count(mod_reduce(-r, n))) return CMTypeVerdict::conjugate_pair;
    if (2 * static_cast<long>(seen.size()) != euler_phi(n)) return CMTypeVerdict::wrong_size;
    return CMTypeVerdict::cm_type;
}

bool is_cm_type(const CMTypeCandidate& c) { return cm_type_verdict(c) == CMTypeVerdict::cm_type; }

std::string to_string(CMTypeVerdict v) {
    switch (v) {
        case CMTypeVerdict::cm_type: return "cm-type";
        case CMTypeVerdict::non_unit_exponent: return "non-unit-exponent";
        case CMTypeVerdict::duplicate_exponent: return "duplicate-exponent";
        case CMTypeVerdict::conjugate_pair: return "conjugate-pair";
        case CMTypeVerdict::wrong_size: return "wrong-size";
    }
    return "?";
}

std::optional<TranscendentalConclusion> conclude_transcendental_dimension(long n, long b2,
                                                                          long rho_lower) {
    const long phi = euler_phi(n);
    const long hi = b2 - rho_lower;
    std::optional<long> dim;
    for (long t = phi; t <= hi; t += phi) {
        if (dim) return std::nullopt;  // more than one feasible multiple
        dim = t;
    }
    if (!dim) return std::nullopt;
    return TranscendentalConclusion{*dim, b2 - *dim};
}

}  // namespace delsarte
