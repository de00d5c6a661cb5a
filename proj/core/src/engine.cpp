#include "polycong/engine.hpp"

#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "polycong/arith.hpp"
#include "polycong/errors.hpp"

namespace polycong {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kCertificationBound = 10'000;

u64 narrow(u128 v, const char* who) {
    if (v > ~u64{0}) throw std::overflow_error(std::string(who) + ": value exceeds 64 bits");
    return static_cast<u64>(v);
}

// The structured routes (periodic recurrence and N-set scaling) apply when p
// is coprime to every coefficient and some exponent of p in f divides the
// degree.  The exponent comes from the known-exponent table and is confirmed
// once per (form, p) by a bounded empirical scan; a scan failure means the
// table and the predicates disagree, which is a bug, not bad input.
void require_structured(const DiagonalPolynomial& f, u64 p, bool assume_exponent) {
    for (long long c : f.coefficients)
        if (floor_mod(c, p) == 0)
            throw std::domain_error(
                "structured route: p must be coprime to every coefficient; use the oracle "
                "recurrence");
    if (assume_exponent) return;
    const auto form = recognize(f);
    if (!form)
        throw std::domain_error(
            "structured route: no certified exponent for this polynomial; use the oracle "
            "recurrence");
    const auto e = known_exponent(*form, p);
    if (!e)
        throw std::domain_error("structured route: no exponent of " + std::to_string(p) +
                                " exists for " + std::string(family_name(*form)) +
                                "; use the oracle recurrence");
    if (f.degree % *e != 0)
        throw std::domain_error("structured route: the exponent " + std::to_string(*e) +
                                " of " + std::to_string(p) +
                                " does not divide the degree; use the oracle recurrence");

    using Key = std::tuple<int, unsigned, u64, unsigned>;
    static std::map<Key, bool> confirmed;
    static std::mutex mutex;
    const Key key{static_cast<int>(form->kind), form->degree, p, *e};
    {
        std::lock_guard lock(mutex);
        if (confirmed.count(key)) return;
    }
    ExponentCheck check{true, 0};
    try {
        check = check_exponent({*form, p, *e}, kCertificationBound);
    } catch (const std::overflow_error&) {
        // p^e beyond the scan range: nothing to scan, the table stands alone
    }
    if (!check.holds)
        throw std::logic_error("structured route: the exponent table fails empirically at " +
                               std::to_string(check.counterexample));
    std::lock_guard lock(mutex);
    confirmed[key] = true;
}

u64 base_size_at(const std::map<unsigned, u64>& sizes, unsigned level, const char* who) {
    const auto it = sizes.find(level);
    if (it == sizes.end())
        throw std::invalid_argument(std::string(who) + ": missing base size for level " +
                                    std::to_string(level));
    return it->second;
}

AlphaResult per_prime_power(const DiagonalPolynomial& f, u64 p, unsigned e, MethodChoice choice,
                            const OracleConfig& config) {
    switch (choice) {
        case MethodChoice::closed: {
            const auto form = recognize(f);
            if (!form) throw std::domain_error("alpha: no closed form for this polynomial");
            return alpha_closed(*form, p, e);
        }
        case MethodChoice::recurrence: {
            require_structured(f, p, false);
            const NSetProfile profile = base_profile(f, p, config);
            return alpha_nr_recurrence(f, p, e, profile);
        }
        case MethodChoice::oracle:
            return {alpha_oracle(f, checked_pow(p, e)), Method::oracle, {}};
        case MethodChoice::automatic: {
            if (const auto form = recognize(f)) {
                try {
                    return alpha_closed(*form, p, e);
                } catch (const std::domain_error&) {
                }
            }
            try {
                require_structured(f, p, false);
                const NSetProfile profile = base_profile(f, p, config);
                return alpha_nr_recurrence(f, p, e, profile);
            } catch (const std::domain_error&) {
            } catch (const budget_error&) {
            }
            return alpha_oracle_recurrence(f, p, e, config);
        }
    }
    throw std::invalid_argument("alpha: unknown method choice");
}

template <typename PerPower, typename DirectCount>
AlphaResult assemble(u64 n, bool verify, PerPower per_power, DirectCount direct_count) {
    const Factorization fac = factorize(n);
    u128 value = 1;
    Method tag = Method::multiplicative;
    for (const auto& pp : fac.factors) {
        const AlphaResult part = per_power(pp.prime, pp.exponent);
        value *= part.value;
        tag = part.method;
    }
    if (fac.factors.size() != 1) tag = Method::multiplicative;
    AlphaResult result{narrow(value, "alpha"), tag, {}};
    if (verify) {
        const u64 direct = direct_count();
        if (direct != result.value)
            throw verification_error("alpha mismatch for modulus " + std::to_string(n) + ": " +
                                     std::string(method_name(result.method)) + " gave " +
                                     std::to_string(result.value) + ", the oracle gave " +
                                     std::to_string(direct));
        result.checked = CrossCheck{Method::oracle, true};
    }
    return result;
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::closed_form: return "closed-form";
        case Method::nr_recurrence: return "nr-recurrence";
        case Method::oracle_recurrence: return "oracle-recurrence";
        case Method::oracle: return "oracle";
        case Method::multiplicative: return "multiplicative";
    }
    throw std::invalid_argument("method_name: unknown method");
}

PrimePowerContext PrimePowerContext::make(std::uint64_t prime, unsigned level, unsigned degree) {
    if (!is_prime(prime)) throw std::invalid_argument("PrimePowerContext: p must be prime");
    if (degree == 0) throw std::invalid_argument("PrimePowerContext: degree must be at least 1");
    PrimePowerContext ctx;
    ctx.prime = prime;
    ctx.level = level;
    ctx.degree = degree;
    ctx.valuation = p_adic_valuation(degree, prime);
    ctx.power_gcd = std::gcd(static_cast<u64>(degree), prime - 1);
    if (level >= 2) ctx.base_level = (level - 2) % degree + 2;
    return ctx;
}

AlphaResult alpha_closed(const NamedForm& form, std::uint64_t p, unsigned n) {
    if (!is_prime(p)) throw std::invalid_argument("alpha_closed: p must be prime");
    if (n == 0) return {1, Method::closed_form, {}};
    const auto done = [](u128 v) {
        return AlphaResult{narrow(v, "alpha_closed"), Method::closed_form, {}};
    };
    switch (form.kind) {
        case NamedForm::Kind::two_squares: {
            if (p == 2) return done(u128{checked_pow(2, n - 1)} + 1);
            if (p % 4 == 1) return done(checked_pow(p, n));
            // p = 3 mod 4: alternating geometric tail below p^n
            if (n % 2 == 1) {
                const u128 num = u128{checked_pow(p, n)} + 1;
                if (num % (p + 1) != 0) throw std::logic_error("alpha_closed: inexact division");
                return done(num / (p + 1) * p);
            }
            const u128 num = u128{checked_pow(p, n)} * p + 1;
            if (num % (p + 1) != 0) throw std::logic_error("alpha_closed: inexact division");
            return done(num / (p + 1));
        }
        case NamedForm::Kind::three_squares: {
            if (p != 2) return done(checked_pow(p, n));
            const u128 num = n % 2 == 1 ? u128{5} * checked_pow(2, n - 1) + 1
                                        : (u128{5} * checked_pow(2, n - 2) + 1) * 2;
            if (num % 3 != 0) throw std::logic_error("alpha_closed: inexact division");
            return done(num / 3);
        }
        case NamedForm::Kind::square_difference: {
            if (p != 2) return done(checked_pow(p, n));
            if (n == 1) return done(2);
            return done(u128{3} * checked_pow(2, n - 2));
        }
        case NamedForm::Kind::pure_power: {
            const unsigned k = form.degree;
            if (k % p == 0)
                throw std::domain_error(
                    "alpha_closed: no closed form when p divides the degree; use the recurrence");
            // alpha(p^n) = p^{r'-1} * (1 + p^k + ... + p^{kq}) * (p-1)/d + 1
            // with d = gcd(k, p-1), r' = ((n-1) mod k) + 1 and q = (n-r')/k.
            const u64 d = std::gcd(static_cast<u64>(k), p - 1);
            const unsigned r = (n - 1) % k + 1;
            const unsigned q = (n - r) / k;
            u128 geometric = 0;
            for (unsigned u = 0; u <= q; ++u) geometric += checked_pow(p, k * u);
            return done(u128{checked_pow(p, r - 1)} * geometric * ((p - 1) / d) + 1);
        }
    }
    throw std::invalid_argument("alpha_closed: unknown form");
}

AlphaResult alpha_nr_recurrence(const DiagonalPolynomial& f, std::uint64_t p, unsigned n,
                                const NSetProfile& profile, std::optional<std::uint64_t> alpha_p,
                                bool assume_exponent) {
    validate(f);
    if (!is_prime(p)) throw std::invalid_argument("alpha_nr_recurrence: p must be prime");
    if (profile.prime != p || profile.degree != f.degree)
        throw std::invalid_argument("alpha_nr_recurrence: profile does not match (p, degree)");
    require_structured(f, p, assume_exponent);
    if (n == 0) return {1, Method::nr_recurrence, {}};
    u64 a = alpha_p ? *alpha_p : alpha_oracle(f, p);
    for (unsigned m = 2; m <= n; ++m) {
        const u64 n_r = profile.size_at((m - 2) % f.degree + 2);
        const u128 next = u128{p} * a;
        if (next < n_r)
            throw std::logic_error("alpha_nr_recurrence: N-set larger than the lifted count");
        a = narrow(next - n_r, "alpha_nr_recurrence");
    }
    return {a, Method::nr_recurrence, {}};
}

AlphaResult alpha_oracle_recurrence(const DiagonalPolynomial& f, std::uint64_t p, unsigned n,
                                    const OracleConfig& config) {
    validate(f);
    if (!is_prime(p)) throw std::invalid_argument("alpha_oracle_recurrence: p must be prime");
    if (n == 0) return {1, Method::oracle_recurrence, {}};
    const u64 pn = checked_pow(p, n);
    if (pn > config.enumeration_budget)
        throw budget_error("alpha_oracle_recurrence: modulus " + std::to_string(pn) +
                               " exceeds the enumeration budget of " +
                               std::to_string(config.enumeration_budget),
                           pn, config.enumeration_budget);
    ResidueSet prev = image_diagonal(f, p);
    u64 a = prev.count();
    u64 modulus = p;
    for (unsigned m = 2; m <= n; ++m) {
        modulus *= p;
        ResidueSet cur = image_diagonal(f, modulus);
        const u64 missing = n_set(cur, prev).count();
        const u128 next = u128{p} * a;
        if (next < missing)
            throw std::logic_error("alpha_oracle_recurrence: N-set larger than the lifted count");
        a = narrow(next - missing, "alpha_oracle_recurrence");
        prev = std::move(cur);
    }
    return {a, Method::oracle_recurrence, {}};
}

std::uint64_t alpha_unrolled(const PrimePowerContext& ctx, std::uint64_t alpha_p,
                                 const std::map<unsigned, std::uint64_t>& base_sizes) {
    if (ctx.level == 0) return 1;
    if (ctx.level == 1) return alpha_p;
    const u64 p = ctx.prime;
    const unsigned k = ctx.degree;
    const unsigned r = *ctx.base_level;
    const unsigned q = (ctx.level - r) / k;
    // alpha(p^n) = p^{n-1} alpha(p) - G p^{r-1} S - P  with
    //   S = sum_{j=2}^{k+1} n_j p^{k+1-j},  P = sum_{j=2}^{r} n_j p^{r-j},
    //   G = 1 + p^k + ... + p^{k(q-1)}.
    u128 s_weighted = 0;
    u128 p_partial = 0;
    for (unsigned j = 2; j <= k + 1; ++j) {
        const u64 n_j = base_size_at(base_sizes, j, "alpha_unrolled");
        s_weighted += u128{n_j} * checked_pow(p, k + 1 - j);
        if (j <= r) p_partial += u128{n_j} * checked_pow(p, r - j);
    }
    u128 geometric = 0;
    for (unsigned u = 0; u < q; ++u) geometric += checked_pow(p, k * u);
    const u128 total = u128{checked_pow(p, ctx.level - 1)} * alpha_p;
    const u128 subtracted = geometric * checked_pow(p, r - 1) * s_weighted + p_partial;
    if (total < subtracted)
        throw std::logic_error("alpha_unrolled: subtracted more than the lifted count");
    return narrow(total - subtracted, "alpha_unrolled");
}

ResidueSet n_set_structured(const DiagonalPolynomial& f, std::uint64_t p, unsigned n,
                            const NSetProfile& profile, bool assume_exponent) {
    validate(f);
    if (!is_prime(p)) throw std::invalid_argument("n_set_structured: p must be prime");
    if (profile.prime != p || profile.degree != f.degree)
        throw std::invalid_argument("n_set_structured: profile does not match (p, degree)");
    if (n < 2) throw std::invalid_argument("n_set_structured: level must be at least 2");
    require_structured(f, p, assume_exponent);
    const u64 target = checked_pow(p, n);
    const unsigned r = (n - 2) % f.degree + 2;
    const unsigned q = (n - r) / f.degree;
    return scale(profile.set_at(r), checked_pow(p, f.degree * q), target);
}

NSetProfile base_profile(const DiagonalPolynomial& f, std::uint64_t p, const OracleConfig& config) {
    validate(f);
    if (!is_prime(p)) throw std::invalid_argument("base_profile: p must be prime");
    NSetProfile profile;
    profile.prime = p;
    profile.degree = f.degree;
    for (unsigned r = 2; r <= f.degree + 1; ++r) {
        ResidueSet set = n_set_oracle(f, p, r, config);
        profile.base_sizes[r] = set.count();
        profile.base_sets.emplace(r, std::move(set));
    }
    bool coprime = true;
    for (long long c : f.coefficients) coprime = coprime && floor_mod(c, p) != 0;
    if (coprime) {
        const unsigned s = p_adic_valuation(f.degree, p);
        const ResidueSet a_p = image_diagonal(f, p);
        for (const auto& [r, set] : profile.base_sets) {
            if (r < 2 * s + 2) continue;
            const u64 step = checked_pow(p, r - 1);
            for (const u64 m : set.members()) {
                if (m == 0 || m % step != 0)
                    throw std::logic_error("base_profile: level " + std::to_string(r) +
                                           " member " + std::to_string(m) +
                                           " is not a nonzero multiple of p^" +
                                           std::to_string(r - 1));
                if (r == f.degree + 1 && a_p.contains(m / step))
                    throw std::logic_error("base_profile: level " + std::to_string(r) +
                                           " member " + std::to_string(m) +
                                           " has an attainable multiplier");
            }
        }
    }
    return profile;
}

AlphaResult alpha(const DiagonalPolynomial& f, std::uint64_t n, MethodChoice method, bool verify,
                  const OracleConfig& config) {
    validate(f);
    if (n == 0) throw std::invalid_argument("alpha: modulus must be positive");
    return assemble(
        n, verify,
        [&](u64 p, unsigned e) { return per_prime_power(f, p, e, method, config); },
        [&] { return alpha_oracle(f, n); });
}

AlphaResult alpha(const GeneralPolynomial& f, std::uint64_t n, MethodChoice method, bool verify,
                  const OracleConfig& config) {
    validate(f);
    if (n == 0) throw std::invalid_argument("alpha: modulus must be positive");
    if (method == MethodChoice::closed || method == MethodChoice::recurrence)
        throw std::domain_error("alpha: only the oracle route applies to general polynomials");
    return assemble(
        n, verify,
        [&](u64 p, unsigned e) {
            return AlphaResult{alpha_oracle(f, checked_pow(p, e), config), Method::oracle, {}};
        },
        [&] { return alpha_oracle(f, n, config); });
}

bool is_surjective(const NamedForm& form, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("is_surjective: modulus must be positive");
    if (n == 1) return true;
    switch (form.kind) {
        case NamedForm::Kind::two_squares:
            for (const auto& [p, e] : factorize(n).factors)
                if ((p == 2 || p % 4 == 3) && e >= 2) return false;
            return true;
        case NamedForm::Kind::three_squares: return n % 8 != 0;
        case NamedForm::Kind::square_difference: return n % 4 != 0;
        case NamedForm::Kind::pure_power:
            if (form.degree == 1) return true;
            for (const auto& [p, e] : factorize(n).factors) {
                if (std::gcd(static_cast<u64>(form.degree), p - 1) != 1) return false;
                // valuations attainable by a k-th power below e are multiples
                // of k, so residues of valuation 1 are missed once e >= 2
                if (e >= 2) return false;
            }
            return true;
    }
    throw std::invalid_argument("is_surjective: unknown form");
}

bool is_surjective(const DiagonalPolynomial& f, std::uint64_t n, const OracleConfig& config) {
    validate(f);
    if (n == 0) throw std::invalid_argument("is_surjective: modulus must be positive");
    if (const auto form = recognize(f)) return is_surjective(*form, n);
    bool all_unit = true;
    std::size_t positive = 0;
    for (long long c : f.coefficients) {
        all_unit = all_unit && (c == 1 || c == -1);
        if (c > 0) ++positive;
    }
    if (all_unit) {
        const std::size_t t = f.coefficients.size();
        // negating f or renaming variables never changes the attainable count
        if (t == 1) return is_surjective(NamedForm{NamedForm::Kind::pure_power, f.degree}, n);
        if (f.degree == 2) {
            if (t == 2)
                return is_surjective(NamedForm{positive == 1 ? NamedForm::Kind::square_difference
                                                             : NamedForm::Kind::two_squares,
                                               2},
                                     n);
            if (t == 3 && (positive == 0 || positive == 3))
                return is_surjective(NamedForm{NamedForm::Kind::three_squares, 2}, n);
            // a mixed sign pair plus a spare square hits every integer exactly,
            // and four or more squares of one sign already do
            return true;
        }
    }
    return alpha(f, n, MethodChoice::automatic, false, config).value == n;
}

bool is_surjective(const GeneralPolynomial& f, std::uint64_t n, const OracleConfig& config) {
    validate(f);
    if (n == 0) throw std::invalid_argument("is_surjective: modulus must be positive");
    return alpha(f, n, MethodChoice::automatic, false, config).value == n;
}

bool member_digit_rule(const NamedForm& form, std::uint64_t p, unsigned n, std::uint64_t a) {
    if (n == 0) throw std::invalid_argument("member_digit_rule: level must be at least 1");
    if (a >= checked_pow(p, n))
        throw std::invalid_argument("member_digit_rule: residue not below p^n");
    if (form.kind == NamedForm::Kind::two_squares && p == 2) {
        if (a == 0) return true;
        const int lowest = std::countr_zero(a);
        const u64 rest = a & (a - 1);
        return rest == 0 || std::countr_zero(rest) != lowest + 1;
    }
    if (form.kind == NamedForm::Kind::two_squares && p % 4 == 3 && is_prime(p)) {
        if (a == 0) return true;
        unsigned index = 0;
        while (a % p == 0) a /= p, ++index;
        return index % 2 == 0;
    }
    if (form.kind == NamedForm::Kind::three_squares && p == 2) {
        while (a % 4 == 0 && a != 0) a /= 4;
        return a % 8 != 7;
    }
    if (form.kind == NamedForm::Kind::square_difference && p == 2)
        return n == 1 || a % 4 != 2;
    throw std::domain_error("member_digit_rule: no digit rule for this form and prime");
}

}  // namespace polycong
