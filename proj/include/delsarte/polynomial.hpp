#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace delsarte {

// Four-variable monomial sum with implicit coefficient 1.
// Grammar:  poly := term ('+' term)*
//           term := factor ('*'? factor)*
//           factor := var ('^' uint)?     var in {x,y,z,w}
// Whitespace is ignored; juxtaposition ("yzw^3") and explicit '*' both parse.
struct PolynomialAST {
    struct Monomial {
        std::array<long, 4> exponents{};  // x, y, z, w
        long degree() const { return exponents[0] + exponents[1] + exponents[2] + exponents[3]; }
    };
    std::vector<Monomial> monomials;
};

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& msg)
        : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}
};

PolynomialAST parse_polynomial(std::string_view text);

std::string polynomial_to_string(const PolynomialAST& ast);

}  // namespace delsarte
