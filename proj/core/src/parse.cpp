#include "polycong/parse.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <string>
#include <vector>

namespace polycong {

parse_error::parse_error(const std::string& message, std::size_t position)
    : std::invalid_argument(message + " (byte " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

using u64 = std::uint64_t;

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
    }
};

bool at_digit(const Cursor& c) {
    return !c.done() && std::isdigit(static_cast<unsigned char>(c.peek()));
}

u64 parse_digits(Cursor& c, const char* what) {
    const std::size_t start = c.pos;
    if (!at_digit(c)) throw parse_error(std::string("expected ") + what, c.pos);
    u64 value = 0;
    while (at_digit(c)) {
        const u64 digit = static_cast<u64>(c.peek() - '0');
        if (value > (~u64{0} - digit) / 10)
            throw parse_error(std::string(what) + " does not fit in 64 bits", start);
        value = value * 10 + digit;
        ++c.pos;
    }
    return value;
}

struct ParsedTerm {
    long long coefficient = 0;
    unsigned exponent = 1;
};

std::string variable_name(std::size_t i, std::size_t t) {
    if (t <= 3) return std::string(1, "xyz"[i]);
    return "x" + std::to_string(i + 1);
}

void append_term(std::string& out, bool first, long long c, const std::string& body) {
    const u64 magnitude = c < 0 ? 0 - static_cast<u64>(c) : static_cast<u64>(c);
    if (first) {
        if (c < 0) out += '-';
    } else {
        out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1 || body.empty()) out += std::to_string(magnitude);
    out += body;
}

std::string power_suffix(unsigned e) { return e == 1 ? "" : "^" + std::to_string(e); }

}  // namespace

PolySpec parse_poly(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i)
        if (static_cast<unsigned char>(text[i]) >= 0x80) throw parse_error("non-ASCII byte", i);

    Cursor c{text};
    std::vector<ParsedTerm> terms;
    std::set<std::string> seen;

    c.skip_ws();
    bool negative = false;
    if (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
        negative = c.peek() == '-';
        ++c.pos;
    }
    while (true) {
        c.skip_ws();
        const std::size_t coefficient_pos = c.pos;
        u64 magnitude = 1;
        if (at_digit(c)) {
            magnitude = parse_digits(c, "a coefficient");
            if (magnitude == 0) throw parse_error("zero coefficient", coefficient_pos);
            if (magnitude > static_cast<u64>(std::numeric_limits<long long>::max()))
                throw parse_error("coefficient too large", coefficient_pos);
        }
        c.skip_ws();
        if (c.done() || !std::isalpha(static_cast<unsigned char>(c.peek())))
            throw parse_error("expected a variable", c.pos);
        const std::size_t variable_pos = c.pos;
        std::string name(1, c.peek());
        ++c.pos;
        if (name == "x")
            while (at_digit(c)) {
                name += c.peek();
                ++c.pos;
            }
        unsigned exponent = 1;
        c.skip_ws();
        if (!c.done() && c.peek() == '^') {
            ++c.pos;
            c.skip_ws();
            const std::size_t exponent_pos = c.pos;
            const u64 e = parse_digits(c, "an exponent");
            if (e == 0) throw parse_error("exponent must be at least 1", exponent_pos);
            if (e > std::numeric_limits<unsigned>::max())
                throw parse_error("exponent too large", exponent_pos);
            exponent = static_cast<unsigned>(e);
        }
        if (!seen.insert(name).second)
            throw parse_error("repeated variable '" + name + "'", variable_pos);
        terms.push_back({negative ? -static_cast<long long>(magnitude)
                                  : static_cast<long long>(magnitude),
                         exponent});
        c.skip_ws();
        if (c.done()) break;
        if (c.peek() == '+' || c.peek() == '-') {
            negative = c.peek() == '-';
            ++c.pos;
            continue;
        }
        throw parse_error("expected '+' or '-'", c.pos);
    }

    PolySpec spec;
    spec.source = std::string(text);
    bool diagonal = true;
    for (const auto& term : terms) diagonal = diagonal && term.exponent == terms[0].exponent;
    if (diagonal) {
        DiagonalPolynomial f;
        f.degree = terms[0].exponent;
        for (const auto& term : terms) f.coefficients.push_back(term.coefficient);
        validate(f);
        spec.family = recognize(f);
        spec.parsed = std::move(f);
    } else {
        GeneralPolynomial f;
        f.variables = static_cast<unsigned>(terms.size());
        for (std::size_t i = 0; i < terms.size(); ++i) {
            GeneralPolynomial::Term term;
            term.coefficient = terms[i].coefficient;
            term.exponents.assign(terms.size(), 0);
            term.exponents[i] = terms[i].exponent;
            f.terms.push_back(std::move(term));
        }
        validate(f);
        spec.parsed = std::move(f);
    }
    return spec;
}

std::string render(const DiagonalPolynomial& f) {
    validate(f);
    std::string out;
    for (std::size_t i = 0; i < f.coefficients.size(); ++i)
        append_term(out, i == 0, f.coefficients[i],
                    variable_name(i, f.coefficients.size()) + power_suffix(f.degree));
    return out;
}

std::string render(const GeneralPolynomial& f) {
    validate(f);
    std::string out;
    for (std::size_t i = 0; i < f.terms.size(); ++i) {
        const auto& term = f.terms[i];
        std::string body;
        for (std::size_t j = 0; j < term.exponents.size(); ++j) {
            if (term.exponents[j] == 0) continue;
            if (!body.empty()) body += '*';
            body += variable_name(j, f.variables) + power_suffix(term.exponents[j]);
        }
        append_term(out, i == 0, term.coefficient, body);
    }
    return out;
}

std::string render(const PolySpec& spec) {
    if (spec.is_diagonal()) return render(spec.diagonal());
    return render(spec.general());
}

}  // namespace polycong
