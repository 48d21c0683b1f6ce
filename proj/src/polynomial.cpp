#include "delsarte/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace delsarte {

namespace {

constexpr const char* kVars = "xyzw";

int var_index(char c) {
    switch (c) {
        case 'x': return 0;
        case 'y': return 1;
        case 'z': return 2;
        case 'w': return 3;
        default: return -1;
    }
}

}  // namespace

PolynomialAST parse_polynomial(std::string_view text) {
    PolynomialAST ast;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };

    skip_ws();
    if (i == n) throw ParseError(i, "empty polynomial");
    for (;;) {
        // one term
        PolynomialAST::Monomial mono;
        bool saw_factor = false;
        for (;;) {
            skip_ws();
            bool after_star = false;
            if (i < n && text[i] == '*') {
                if (!saw_factor) throw ParseError(i, "'*' without preceding factor");
                ++i;
                after_star = true;
                skip_ws();
            }
            if (i >= n || text[i] == '+') {
                if (after_star) throw ParseError(i, "expected factor after '*'");
                break;
            }
            int v = var_index(text[i]);
            if (v < 0) {
                if (std::isalpha(static_cast<unsigned char>(text[i])))
                    throw ParseError(i, std::string("unknown variable '") + text[i] + "'");
                throw ParseError(i, std::string("unexpected character '") + text[i] + "'");
            }
            ++i;
            long e = 1;
            skip_ws();
            if (i < n && text[i] == '^') {
                ++i;
                skip_ws();
                if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError(i, "expected exponent");
                std::size_t start = i;
                e = 0;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    e = e * 10 + (text[i] - '0');
                    if (e > 1000000) throw ParseError(start, "exponent too large");
                    ++i;
                }
                if (e == 0) throw ParseError(start, "zero exponent");
            }
            mono.exponents[v] += e;
            saw_factor = true;
        }
        if (!saw_factor) throw ParseError(i, "expected a monomial");
        ast.monomials.push_back(mono);
        skip_ws();
        if (i == n) break;
        if (text[i] != '+') throw ParseError(i, "expected '+'");
        ++i;
        skip_ws();
        if (i == n) throw ParseError(i, "trailing '+'");
    }
    return ast;
}

std::string polynomial_to_string(const PolynomialAST& ast) {
    std::ostringstream os;
    bool first_term = true;
    for (const auto& mono : ast.monomials) {
        if (!first_term) os << "+";
        first_term = false;
        bool wrote = false;
        for (int v = 0; v < 4; ++v) {
            long e = mono.exponents[v];
            if (e == 0) continue;
            os << kVars[v];
            if (e > 1) os << "^" << e;
            wrote = true;
        }
        if (!wrote) os << "1";  // degree-0 monomial, not produced by the parser
    }
    return os.str();
}

}  // namespace delsarte
