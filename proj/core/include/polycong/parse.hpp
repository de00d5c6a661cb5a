#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "polycong/poly.hpp"

namespace polycong {

class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& message, std::size_t position);

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

struct PolySpec {
    std::string source;
    std::variant<DiagonalPolynomial, GeneralPolynomial> parsed;
    std::optional<NamedForm> family;  // set only when the diagonal shape is recognized

    bool is_diagonal() const { return std::holds_alternative<DiagonalPolynomial>(parsed); }
    const DiagonalPolynomial& diagonal() const { return std::get<DiagonalPolynomial>(parsed); }
    const GeneralPolynomial& general() const { return std::get<GeneralPolynomial>(parsed); }
};

// Grammar (ASCII only, whitespace insignificant):
//   expression := ['+'|'-'] term (('+'|'-') term)*
//   term       := [integer] variable ['^' integer]
//   variable   := single letter | 'x' digits
// Variables must be pairwise distinct and exponents >= 1.  Separating signs
// fold into the following coefficient; a coefficient of zero is rejected.
// Equal exponents across all terms give a DiagonalPolynomial, anything else a
// GeneralPolynomial.  Errors report the byte position.
PolySpec parse_poly(std::string_view text);

// Canonical text form: variables x, y, z for up to three terms, x1, x2, ...
// beyond that.  parse_poly(render(spec)) reproduces spec.parsed exactly.
std::string render(const DiagonalPolynomial& f);
std::string render(const GeneralPolynomial& f);
std::string render(const PolySpec& spec);

}  // namespace polycong
