#include "polycong/poly.hpp"

#include <set>
#include <stdexcept>

namespace polycong {

GeneralPolynomial to_general(const DiagonalPolynomial& f) {
    validate(f);
    GeneralPolynomial g;
    g.variables = static_cast<unsigned>(f.coefficients.size());
    for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
        GeneralPolynomial::Term term;
        term.coefficient = f.coefficients[i];
        term.exponents.assign(g.variables, 0);
        term.exponents[i] = f.degree;
        g.terms.push_back(std::move(term));
    }
    return g;
}

void validate(const DiagonalPolynomial& f) {
    if (f.degree == 0)
        throw std::invalid_argument("DiagonalPolynomial: degree must be at least 1");
    if (f.coefficients.empty())
        throw std::invalid_argument("DiagonalPolynomial: at least one variable required");
    for (long long c : f.coefficients)
        if (c == 0) throw std::invalid_argument("DiagonalPolynomial: coefficients must be nonzero");
}

void validate(const GeneralPolynomial& f) {
    if (f.variables == 0)
        throw std::invalid_argument("GeneralPolynomial: at least one variable required");
    std::set<std::vector<unsigned>> seen;
    for (const auto& term : f.terms) {
        if (term.exponents.size() != f.variables)
            throw std::invalid_argument(
                "GeneralPolynomial: every exponent vector needs one entry per variable");
        if (!seen.insert(term.exponents).second)
            throw std::invalid_argument("GeneralPolynomial: duplicate exponent vector");
    }
}

std::optional<NamedForm> recognize(const DiagonalPolynomial& f) {
    const auto& c = f.coefficients;
    if (c.size() == 1 && c[0] == 1)
        return NamedForm{NamedForm::Kind::pure_power, f.degree};
    if (f.degree != 2) return std::nullopt;
    if (c.size() == 2) {
        if (c[0] == 1 && c[1] == 1) return NamedForm{NamedForm::Kind::two_squares, 2};
        // renaming the variables turns -x^2+y^2 into x^2-y^2
        if ((c[0] == 1 && c[1] == -1) || (c[0] == -1 && c[1] == 1))
            return NamedForm{NamedForm::Kind::square_difference, 2};
    }
    if (c.size() == 3 && c[0] == 1 && c[1] == 1 && c[2] == 1)
        return NamedForm{NamedForm::Kind::three_squares, 2};
    return std::nullopt;
}

DiagonalPolynomial to_polynomial(const NamedForm& form) {
    switch (form.kind) {
        case NamedForm::Kind::two_squares:
            return {2, {1, 1}};
        case NamedForm::Kind::square_difference:
            return {2, {1, -1}};
        case NamedForm::Kind::three_squares:
            return {2, {1, 1, 1}};
        case NamedForm::Kind::pure_power:
            return {form.degree, {1}};
    }
    throw std::invalid_argument("to_polynomial: unknown form");
}

std::string_view family_name(const NamedForm& form) {
    switch (form.kind) {
        case NamedForm::Kind::two_squares:
            return "x^2+y^2";
        case NamedForm::Kind::square_difference:
            return "x^2-y^2";
        case NamedForm::Kind::three_squares:
            return "x^2+y^2+z^2";
        case NamedForm::Kind::pure_power:
            return "x^k";
    }
    return "?";
}

}  // namespace polycong
