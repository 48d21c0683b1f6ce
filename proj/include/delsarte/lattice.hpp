#pragma once

#include "delsarte/integer.hpp"
#include "delsarte/matrix.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace delsarte {

// C^2 = 2*genus - 2 - K.C  (adjunction with K_X the hyperplane class)
Integer self_intersection_by_adjunction(long genus, const Integer& k_dot_c);

// A named collection of curves with self-intersections and a sparse
// symmetric pairing table (unlisted pairs are 0).
struct CurveConfig {
    struct Curve {
        std::string name;
        Integer self_intersection;
        bool operator==(const Curve&) const = default;
    };
    std::vector<Curve> curves;  // declared order = matrix order
    std::map<std::pair<std::string, std::string>, Integer> pairings;  // key is sorted pair

    void add_curve(std::string name, Integer self_intersection);
    void set_pair(const std::string& a, const std::string& b, Integer value);
    bool operator==(const CurveConfig&) const = default;
};

// the 45 rational curves generating NS(X) of the maximal quintic up to
// finite index: four A9 chains, three node lines, two twisted cubics,
// four diagonal lines
CurveConfig build_quintic_config();

struct GramMatrix {
    std::vector<std::string> names;
    IntMatrix entries;
};

// symmetric intersection matrix in the declared curve order; throws on a
// pairing that names an unknown curve
GramMatrix gram(const CurveConfig& config);

Integer det_exact(const GramMatrix& g);

struct LatticeSignature {
    std::size_t n_pos = 0, n_neg = 0, n_zero = 0;
};

// exact signature of a symmetric integer matrix via rational congruence
// diagonalization (no floating point)
LatticeSignature signature(const IntMatrix& m);

// text format: 'curves:' section of "name self_intersection" lines, then
// 'pairs:' section of "name name value" lines; '#' starts a comment
CurveConfig parse_curve_config(std::istream& is);
void write_curve_config(std::ostream& os, const CurveConfig& config);

// prime factorization by trial division (desk scale)
std::vector<std::pair<Integer, int>> factorize(Integer n);

}  // namespace delsarte
