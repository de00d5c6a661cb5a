#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace polycong {

// c_1*x_1^k + ... + c_t*x_t^k with every c_i nonzero and k >= 1.
struct DiagonalPolynomial {
    unsigned degree = 0;                   // the common exponent k
    std::vector<long long> coefficients;   // one per variable, in order

    friend bool operator==(const DiagonalPolynomial&, const DiagonalPolynomial&) = default;
};

// An arbitrary integer polynomial as a sum of monomials.  Exponent vectors
// have one entry per variable and are pairwise distinct.
struct GeneralPolynomial {
    struct Term {
        long long coefficient = 0;
        std::vector<unsigned> exponents;

        friend bool operator==(const Term&, const Term&) = default;
    };

    unsigned variables = 0;  // t >= 1
    std::vector<Term> terms;

    friend bool operator==(const GeneralPolynomial&, const GeneralPolynomial&) = default;
};

GeneralPolynomial to_general(const DiagonalPolynomial& f);

void validate(const DiagonalPolynomial& f);  // throws std::invalid_argument
void validate(const GeneralPolynomial& f);

// A solution of f(x) = value (mod modulus); assignment holds one residue per
// variable, in variable order.
struct Witness {
    std::vector<std::uint64_t> assignment;
    std::uint64_t modulus = 0;
    std::uint64_t value = 0;
};

// The shapes with dedicated closed forms, digit rules, or exponent facts.
struct NamedForm {
    enum class Kind {
        two_squares,        // x^2 + y^2
        square_difference,  // x^2 - y^2
        three_squares,      // x^2 + y^2 + z^2
        pure_power,         // x^k
    };

    Kind kind = Kind::pure_power;
    unsigned degree = 0;  // 2 for the square forms, k for pure_power

    friend bool operator==(const NamedForm&, const NamedForm&) = default;
};

// Matches f against the named shapes, up to variable renaming.  Coefficients
// must be exactly right: 2x^2+2y^2 and -x^2-y^2 are not recognized.
std::optional<NamedForm> recognize(const DiagonalPolynomial& f);

DiagonalPolynomial to_polynomial(const NamedForm& form);
std::string_view family_name(const NamedForm& form);  // "x^2+y^2", "x^2-y^2", ...

}  // namespace polycong
