#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "polycong/classify.hpp"
#include "polycong/oracle.hpp"
#include "polycong/poly.hpp"
#include "polycong/residue.hpp"

namespace polycong {

enum class Method {
    closed_form,        // direct formula for a recognized (form, prime) pair
    nr_recurrence,      // alpha(p^n) = p*alpha(p^{n-1}) - n_r with periodic n_r
    oracle_recurrence,  // same recurrence with every N-set taken from the oracle
    oracle,             // direct image computation
    multiplicative,     // product over the prime powers of a composite modulus
};
std::string_view method_name(Method m);

struct CrossCheck {
    Method against = Method::oracle;
    bool agree = false;
};

struct AlphaResult {
    std::uint64_t value = 0;
    Method method = Method::oracle;
    std::optional<CrossCheck> checked;  // present when a second route was run
};

// Everything the per-prime-power formulas need to know about (p^n, k).
struct PrimePowerContext {
    std::uint64_t prime = 0;
    unsigned level = 0;     // n in p^n
    unsigned degree = 0;    // k
    unsigned valuation = 0; // largest s with prime^s | degree
    std::uint64_t power_gcd = 1;  // gcd(degree, prime - 1)
    // level reduced mod degree into the window {2..degree+1}; set for level >= 2.
    std::optional<unsigned> base_level;

    static PrimePowerContext make(std::uint64_t prime, unsigned level, unsigned degree);
};

enum class MethodChoice { automatic, closed, recurrence, oracle };

// Closed-form alpha(p^n) for the supported (form, prime) pairs.  For pure powers
// this requires p coprime to the degree; otherwise use the recurrence.
AlphaResult alpha_closed(const NamedForm& form, std::uint64_t p, unsigned n);

// alpha(p^n) by iterating alpha(p^m) = p*alpha(p^{m-1}) - n_r(m), reading each
// n_r from the profile.  Valid when some exponent of p in f divides the
// degree; that is certified through known_exponent + a bounded empirical
// check unless assume_exponent is set.  alpha_p seeds the base case (computed
// by oracle when absent).
AlphaResult alpha_nr_recurrence(const DiagonalPolynomial& f, std::uint64_t p, unsigned n,
                                const NSetProfile& profile,
                                std::optional<std::uint64_t> alpha_p = {},
                                bool assume_exponent = false);

// The same recurrence with every |N_{p^m}| taken from the oracle.  Needs no
// exponent hypothesis at all, so it covers shapes the structured route
// refuses (it is the fallback of last resort before plain enumeration).
AlphaResult alpha_oracle_recurrence(const DiagonalPolynomial& f, std::uint64_t p, unsigned n,
                                    const OracleConfig& config = {});

// Unrolled form of the recurrence: alpha(p^n) from alpha(p) and the base
// sizes n_2..n_{degree+1} alone, in one evaluation.  Must agree with the
// iterated recurrence exactly.
std::uint64_t alpha_unrolled(const PrimePowerContext& ctx, std::uint64_t alpha_p,
                                 const std::map<unsigned, std::uint64_t>& base_sizes);

// N_{p^n} for n >= 2 by periodic scaling: with n = q*degree + r and r in
// {2..degree+1}, N_{p^n} = p^{degree*q} * N_{p^r}.  Same exponent requirement
// as the recurrence.
ResidueSet n_set_structured(const DiagonalPolynomial& f, std::uint64_t p, unsigned n,
                            const NSetProfile& profile, bool assume_exponent = false);

// The base N-sets at levels 2..degree+1, computed by oracle.  When p is
// coprime to every coefficient the sets are checked against the structural
// bounds (members are nonzero multiples of p^{level-1}; at level degree+1 the
// multipliers avoid A_p); a violation throws, since it means a bug here, not
// bad input.
NSetProfile base_profile(const DiagonalPolynomial& f, std::uint64_t p,
                         const OracleConfig& config = {});

// alpha(n) assembled multiplicatively over the factorization of n.  Method
// choice applies per prime power; automatic prefers closed forms, then the
// structured recurrence when an exponent is certified, then the oracle
// recurrence.  With verify set the value is recomputed by a direct oracle
// image of the full modulus n and a disagreement throws verification_error.
AlphaResult alpha(const DiagonalPolynomial& f, std::uint64_t n,
                  MethodChoice method = MethodChoice::automatic, bool verify = false,
                  const OracleConfig& config = {});
AlphaResult alpha(const GeneralPolynomial& f, std::uint64_t n,
                  MethodChoice method = MethodChoice::automatic, bool verify = false,
                  const OracleConfig& config = {});

// Whether f hits every residue class mod n.  Named forms use their
// characterizations; +-1-coefficient square forms reduce to those (negating f
// or renaming variables changes nothing) or are always surjective; everything
// else falls back to alpha(n) == n.
bool is_surjective(const NamedForm& form, std::uint64_t n);
bool is_surjective(const DiagonalPolynomial& f, std::uint64_t n, const OracleConfig& config = {});
bool is_surjective(const GeneralPolynomial& f, std::uint64_t n, const OracleConfig& config = {});

// Membership of a in A_{p^n} decided from the base-p digits of a alone.
// Supported pairs: (x^2+y^2, p=2), (x^2+y^2, p = 3 mod 4), (x^2+y^2+z^2, p=2),
// (x^2-y^2, p=2); anything else throws std::domain_error.
bool member_digit_rule(const NamedForm& form, std::uint64_t p, unsigned n, std::uint64_t a);

}  // namespace polycong
