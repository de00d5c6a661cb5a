#include "polycong/classify.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "polycong/arith.hpp"

namespace polycong {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kExponentCheckCap = 1'000'000;

bool satisfies(const NamedForm& form, u64 v) {
    switch (form.kind) {
        case NamedForm::Kind::two_squares: return is_sum_two_squares(v);
        case NamedForm::Kind::square_difference:
            return is_diff_two_squares(static_cast<std::int64_t>(v));
        case NamedForm::Kind::three_squares: return is_sum_three_squares(v);
        case NamedForm::Kind::pure_power: return is_kth_power(v, form.degree);
    }
    throw std::invalid_argument("satisfies: unknown form");
}

}  // namespace

bool is_sum_two_squares(std::uint64_t m) {
    if (m == 0) return true;
    for (const auto& [prime, exponent] : factorize(m).factors)
        if (prime % 4 == 3 && exponent % 2 != 0) return false;
    return true;
}

bool is_sum_three_squares(std::uint64_t m) {
    while (m % 4 == 0 && m != 0) m /= 4;
    return m % 8 != 7;
}

bool is_diff_two_squares(std::int64_t m) {
    const u64 magnitude = m < 0 ? 0 - static_cast<u64>(m) : static_cast<u64>(m);
    return magnitude % 4 != 2;
}

bool is_kth_power(std::uint64_t m, unsigned k) {
    if (k == 0) throw std::invalid_argument("is_kth_power: power must be at least 1");
    if (k == 1 || m == 0 || m == 1) return true;
    if (k >= 64) return false;  // m >= 2 and 2^64 overflows
    const u64 guess = static_cast<u64>(std::llround(std::pow(static_cast<double>(m), 1.0 / k)));
    const u64 lo = guess > 2 ? guess - 2 : 0;
    for (u64 c = lo; c <= guess + 2; ++c) {
        u128 pw = 1;
        for (unsigned i = 0; i < k && pw <= m; ++i) pw *= c;
        if (pw == m) return true;
    }
    return false;
}

ExponentCheck check_exponent(const ExponentClaim& claim, std::uint64_t bound) {
    if (bound > kExponentCheckCap)
        throw std::invalid_argument("check_exponent: bound above " +
                                    std::to_string(kExponentCheckCap));
    if (!is_prime(claim.p)) throw std::invalid_argument("check_exponent: p must be prime");
    if (claim.e == 0) return {true, 0};
    const u64 pe = checked_pow(claim.p, claim.e);
    for (u64 v = pe; v <= bound; v += pe)
        if (satisfies(claim.form, v) && !satisfies(claim.form, v / pe)) return {false, v};
    return {true, 0};
}

std::optional<unsigned> known_exponent(const NamedForm& form, std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("known_exponent: p must be prime");
    switch (form.kind) {
        case NamedForm::Kind::pure_power: return form.degree;
        case NamedForm::Kind::two_squares: return p % 4 == 3 ? 2u : 1u;
        case NamedForm::Kind::three_squares:
            if (p == 2) return 2u;
            return p % 8 == 1 ? 1u : 2u;
        case NamedForm::Kind::square_difference:
            if (p == 2) return std::nullopt;
            return 1u;
    }
    throw std::invalid_argument("known_exponent: unknown form");
}

}  // namespace polycong
