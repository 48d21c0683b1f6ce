#include "delsarte/characters.hpp"

#include "delsarte/integer.hpp"
#include "delsarte/prime_field.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace delsarte {

Character::Character(long m_, std::array<long, 4> tuple) : m(m_), a(tuple) {
    if (m < 2) throw std::invalid_argument("Character: modulus must be >= 2");
    long sum = 0;
    for (long& x : a) {
        x = mod_reduce(x, m);
        if (x == 0) throw std::invalid_argument("Character: entries must be nonzero mod m");
        sum += x;
    }
    if (sum % m != 0) throw std::invalid_argument("Character: entry sum must be 0 mod m");
}

Character Character::scaled(long k) const {
    return Character(m, {a[0] * k, a[1] * k, a[2] * k, a[3] * k});
}

std::string Character::to_string() const {
    std::ostringstream os;
    os << "(" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << ")";
    return os.str();
}

bool in_transcendental_type_set(const Character& c) {
    int d = c.hodge_degree();
    return d == 0 || d == 2;
}

std::vector<Character> generate_characters(long m) {
    if (m < 2) throw std::invalid_argument("generate_characters: m must be >= 2");
    std::vector<Character> out;
    out.reserve(static_cast<std::size_t>((m - 1) * (m * m - 3 * m + 3)));
    for (long a1 = 1; a1 < m; ++a1)
        for (long a2 = 1; a2 < m; ++a2)
            for (long a3 = 1; a3 < m; ++a3) {
                long a0 = mod_reduce(-(a1 + a2 + a3), m);
                if (a0 == 0) continue;
                out.push_back(Character(m, {a0, a1, a2, a3}));
            }
    return out;
}

std::vector<Character> transcendental_type_set(long m) {
    std::vector<Character> out;
    for (const Character& c : generate_characters(m))
        if (in_transcendental_type_set(c)) out.push_back(c);
    return out;
}

std::vector<long> units_mod(long m) {
    std::vector<long> u;
    for (long k = 1; k <= m; ++k)
        if (gcd_long(k, m) == 1) u.push_back(k % m);
    return u;
}

CharacterOrbit galois_orbit(const Character& c) {
    std::set<Character> members;
    for (long k : units_mod(c.m)) members.insert(c.scaled(k));
    std::vector<Character> v(members.begin(), members.end());
    return CharacterOrbit{v.front(), std::move(v)};
}

std::vector<CharacterOrbit> orbit_decomposition(const std::vector<Character>& chars) {
    std::set<Character> pending(chars.begin(), chars.end());
    std::vector<CharacterOrbit> orbits;
    while (!pending.empty()) {
        CharacterOrbit o = galois_orbit(*pending.begin());
        for (const Character& c : o.members) pending.erase(c);
        orbits.push_back(std::move(o));
    }
    std::sort(orbits.begin(), orbits.end(),
              [](const CharacterOrbit& x, const CharacterOrbit& y) {
                  return x.representative < y.representative;
              });
    return orbits;
}

long fermat_lambda(long m) {
    long n = 0;
    for (const CharacterOrbit& o : orbit_decomposition(transcendental_type_set(m)))
        n += static_cast<long>(o.size());
    return n;
}

}  // namespace delsarte
