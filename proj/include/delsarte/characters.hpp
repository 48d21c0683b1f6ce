#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

namespace delsarte {

// Eigenspace character of the Fermat surface S_m: a 4-tuple mod m with every
// entry nonzero and entry sum divisible by m.  Entries are stored by their
// reduced representatives in 1..m-1, so equality and hashing are structural
// and the Hodge degree reads off the representative sum directly.
struct Character {
    long m;
    std::array<long, 4> a;

    Character(long m_, std::array<long, 4> tuple);

    long rep_sum() const { return a[0] + a[1] + a[2] + a[3]; }

    // (sum of reduced representatives)/m - 1, in {0, 1, 2};
    // the eigenspace has Hodge type (2 - degree, degree)
    int hodge_degree() const { return static_cast<int>(rep_sum() / m - 1); }

    // multiply every entry by k mod m (k a unit for Galois action)
    Character scaled(long k) const;

    auto operator<=>(const Character&) const = default;

    std::string to_string() const;
};

bool in_transcendental_type_set(const Character& c);  // Hodge degree 0 or 2

// all of A_m, each exactly once; count is (m-1)(m^2-3m+3); requires m >= 2
std::vector<Character> generate_characters(long m);

// the transcendental-type subset T_m (degree 0 or 2); requires m >= 2
std::vector<Character> transcendental_type_set(long m);

struct CharacterOrbit {
    Character representative;  // lexicographically least member
    std::vector<Character> members;

    std::size_t size() const { return members.size(); }
};

std::vector<long> units_mod(long m);

// the orbit {k*c : k a unit mod m}, representatives recomputed per member
CharacterOrbit galois_orbit(const Character& c);

// partition the Galois closure of the input into disjoint orbits,
// sorted by representative
std::vector<CharacterOrbit> orbit_decomposition(const std::vector<Character>& chars);

// size of the Galois closure of T_m = lambda(S_m); requires m >= 2
long fermat_lambda(long m);

}  // namespace delsarte
