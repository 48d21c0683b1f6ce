#include "delsarte/lattice.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace delsarte {

Integer self_intersection_by_adjunction(long genus, const Integer& k_dot_c) {
    return Integer(2) * genus - 2 - k_dot_c;
}

void CurveConfig::add_curve(std::string name, Integer self_intersection) {
    curves.push_back({std::move(name), std::move(self_intersection)});
}

void CurveConfig::set_pair(const std::string& a, const std::string& b, Integer value) {
    auto key = a <= b ? std::make_pair(a, b) : std::make_pair(b, a);
    pairings[key] = std::move(value);
}

CurveConfig build_quintic_config() {
    CurveConfig c;
    // four A9 chains over the nodes; node k is the image of node 0 under
    // the order-4 coordinate rotation, components numbered along the chain
    for (int n = 0; n < 4; ++n)
        for (int i = 1; i <= 9; ++i)
            c.add_curve("E" + std::to_string(n) + "_" + std::to_string(i),
                        self_intersection_by_adjunction(0, 0));
    for (const char* nm : {"l_xy", "l_yz", "l_xz"})
        c.add_curve(nm, self_intersection_by_adjunction(0, 1));
    for (const char* nm : {"C_r1", "C_r2"})
        c.add_curve(nm, self_intersection_by_adjunction(0, 3));
    for (const char* nm : {"l_a1", "l_a2", "l_a3", "l_a4"})
        c.add_curve(nm, self_intersection_by_adjunction(0, 1));

    for (int n = 0; n < 4; ++n)
        for (int i = 1; i < 9; ++i)
            c.set_pair("E" + std::to_string(n) + "_" + std::to_string(i),
                       "E" + std::to_string(n) + "_" + std::to_string(i + 1), 1);

    // node lines run through two nodes each and meet one chain component
    // there; rotating the node-0 picture (line at component 1, line at 3,
    // cubics at 8, line at 9) around the four nodes lands the three basis
    // lines at:
    c.set_pair("E0_1", "l_xz", 1);
    c.set_pair("E0_3", "l_yz", 1);
    c.set_pair("E0_9", "l_xy", 1);
    c.set_pair("E1_9", "l_yz", 1);
    c.set_pair("E2_1", "l_xz", 1);
    c.set_pair("E3_3", "l_xy", 1);
    // the two basis cubics pass through nodes 1 and 3 at component 8
    for (const char* cr : {"C_r1", "C_r2"}) {
        c.set_pair("E1_8", cr, 1);
        c.set_pair("E3_8", cr, 1);
    }
    // each cubic meets each diagonal line once, transversally, away from
    // the nodes
    for (const char* cr : {"C_r1", "C_r2"})
        for (const char* la : {"l_a1", "l_a2", "l_a3", "l_a4"}) c.set_pair(cr, la, 1);
    // each diagonal line {x = a z, y = a^7 w} meets l_xz = {x = z = 0}
    // transversally at the smooth point [0, a^7, 0, 1]
    for (const char* la : {"l_a1", "l_a2", "l_a3", "l_a4"}) c.set_pair(la, "l_xz", 1);
    return c;
}

GramMatrix gram(const CurveConfig& config) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < config.curves.size(); ++i) {
        if (!index.emplace(config.curves[i].name, i).second)
            throw std::invalid_argument("gram: duplicate curve name " + config.curves[i].name);
    }
    GramMatrix g{{}, IntMatrix(config.curves.size(), config.curves.size())};
    for (const auto& cur : config.curves) g.names.push_back(cur.name);
    for (std::size_t i = 0; i < config.curves.size(); ++i)
        g.entries.at(i, i) = config.curves[i].self_intersection;
    for (const auto& [key, value] : config.pairings) {
        auto a = index.find(key.first), b = index.find(key.second);
        if (a == index.end()) throw std::invalid_argument("gram: unknown curve " + key.first);
        if (b == index.end()) throw std::invalid_argument("gram: unknown curve " + key.second);
        g.entries.at(a->second, b->second) = value;
        g.entries.at(b->second, a->second) = value;
    }
    return g;
}

Integer det_exact(const GramMatrix& g) { return det(g.entries); }

LatticeSignature signature(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("signature: non-square input");
    const std::size_t n = m.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i)) throw std::invalid_argument("signature: not symmetric");

    // rational congruence diagonalization
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(m.at(i, j));

    LatticeSignature sig;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            // prefer a later nonzero diagonal entry
            std::size_t p = k + 1;
            while (p < n && a[p][p] == 0) ++p;
            if (p < n) {
                std::swap(a[k], a[p]);
                for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][p]);
            } else {
                // all remaining diagonal entries vanish; fold in a row with
                // a nonzero off-diagonal entry (x_k <- x_k + x_j makes the
                // diagonal 2*a_kj)
                std::size_t j = k + 1;
                while (j < n && a[k][j] == 0) ++j;
                if (j == n) {
                    ++sig.n_zero;
                    continue;
                }
                for (std::size_t i = 0; i < n; ++i) a[k][i] += a[j][i];
                for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][j];
            }
        }
        const Rational pivot = a[k][k];
        if (pivot > 0) ++sig.n_pos;
        else ++sig.n_neg;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / pivot;
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t j = 0; j < n; ++j) a[j][i] = a[i][j];
        }
    }
    return sig;
}

namespace {

Integer parse_integer(const std::string& tok) {
    try {
        return Integer(tok);
    } catch (const std::exception&) {
        throw std::runtime_error("curve config: bad integer '" + tok + "'");
    }
}

}  // namespace

CurveConfig parse_curve_config(std::istream& is) {
    CurveConfig config;
    enum class Section { none, curves, pairs } section = Section::none;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "curves:") {
            section = Section::curves;
            continue;
        }
        if (tok == "pairs:") {
            section = Section::pairs;
            continue;
        }
        if (section == Section::curves) {
            std::string self;
            if (!(ls >> self))
                throw std::runtime_error("curve config line " + std::to_string(lineno) +
                                         ": expected 'name self_intersection'");
            config.add_curve(tok, parse_integer(self));
        } else if (section == Section::pairs) {
            std::string other, value;
            if (!(ls >> other >> value))
                throw std::runtime_error("curve config line " + std::to_string(lineno) +
                                         ": expected 'name name value'");
            config.set_pair(tok, other, parse_integer(value));
        } else {
            throw std::runtime_error("curve config line " + std::to_string(lineno) +
                                     ": content before 'curves:' section");
        }
        std::string extra;
        if (ls >> extra)
            throw std::runtime_error("curve config line " + std::to_string(lineno) +
                                     ": trailing token '" + extra + "'");
    }
    return config;
}

void write_curve_config(std::ostream& os, const CurveConfig& config) {
    os << "curves:\n";
    for (const auto& c : config.curves) os << c.name << " " << c.self_intersection << "\n";
    os << "pairs:\n";
    for (const auto& [key, value] : config.pairings)
        os << key.first << " " << key.second << " " << value << "\n";
}

std::vector<std::pair<Integer, int>> factorize(Integer n) {
    std::vector<std::pair<Integer, int>> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    for (Integer d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
        if (d > 1000000) break;  // desk scale only
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace delsarte
