#pragma once

#include <cstdint>
#include <optional>

#include "polycong/poly.hpp"

namespace polycong {

// Euler: every prime congruent to 3 mod 4 appears to an even power.  True at 0.
bool is_sum_two_squares(std::uint64_t m);

// Gauss-Legendre: m is not of the form 4^a * (8b + 7).  True at 0.
bool is_sum_three_squares(std::uint64_t m);

// m = x^2 - y^2 over the integers iff |m| mod 4 != 2.  True at 0; negative
// inputs are handled by symmetry (swap x and y).
bool is_diff_two_squares(std::int64_t m);

bool is_kth_power(std::uint64_t m, unsigned k);  // k >= 1

// "e is an exponent of p in f": whenever p^e divides a value of f, the
// quotient is again a value of f.
struct ExponentClaim {
    NamedForm form;
    std::uint64_t p = 0;
    unsigned e = 0;
};

struct ExponentCheck {
    bool holds = false;
    std::uint64_t counterexample = 0;  // smallest failing value; meaningful iff !holds

    explicit operator bool() const noexcept { return holds; }
};

// Bounded empirical check of a claim over all representable values <= bound
// (bound <= 10^6).  Each named form has an exact representability
// predicate, so the scan is exact within the bound.
ExponentCheck check_exponent(const ExponentClaim& claim, std::uint64_t bound);

// The known exponent of p for the named form, when one exists:
//   x^k           -> k for every p
//   x^2+y^2       -> 1 for p = 2 and p = 1 mod 4, 2 for p = 3 mod 4
//   x^2+y^2+z^2   -> 2 for p = 2, 1 for p = 1 mod 8, 2 for p = 3,5,7 mod 8
//   x^2-y^2       -> 1 for odd p; none for p = 2 (for any e >= 1, 2^{e+1} is a
//                    value but 2^{e+1}/2^e = 2 is not)
std::optional<unsigned> known_exponent(const NamedForm& form, std::uint64_t p);

}  // namespace polycong
