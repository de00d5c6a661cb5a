#include "polycong/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "polycong/arith.hpp"
#include "polycong/errors.hpp"

namespace polycong {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// n^t if it stays within the budget, otherwise throws.
u64 charge_enumeration(u64 n, unsigned t, u64 budget, const char* who) {
    u128 states = 1;
    for (unsigned i = 0; i < t; ++i) {
        states *= n;
        if (states > budget)
            throw budget_error(std::string(who) + ": " + std::to_string(n) + "^" +
                                   std::to_string(t) + " states exceed the enumeration budget of " +
                                   std::to_string(budget),
                               states > ~u64{0} ? ~u64{0} : static_cast<u64>(states), budget);
    }
    return static_cast<u64>(states);
}

void charge_modulus(u64 modulus, u64 budget, const char* who) {
    if (modulus > budget)
        throw budget_error(std::string(who) + ": modulus " + std::to_string(modulus) +
                               " exceeds the enumeration budget of " + std::to_string(budget),
                           modulus, budget);
}

// {c * x^degree mod n : x in I_n}.  When unit_only is set, x runs over the
// residues coprime to p_filter instead of all of I_n.
ResidueSet variable_values(long long c, unsigned degree, u64 n, bool unit_only = false,
                           u64 p_filter = 0) {
    ResidueSet values(n);
    const u64 cm = floor_mod(c, n);
    for (u64 x = 0; x < n; ++x) {
        if (unit_only && x % p_filter == 0) continue;
        values.insert(mul_mod(cm, mod_pow(static_cast<std::int64_t>(x), degree, n), n));
    }
    return values;
}

ResidueSet fold_sumsets(const std::vector<ResidueSet>& sets) {
    ResidueSet acc = sets.front();
    for (std::size_t i = 1; i < sets.size(); ++i) acc = cyclic_sumset(acc, sets[i]);
    return acc;
}

u64 eval_general(const GeneralPolynomial& f, const std::vector<u64>& xs, u64 n) {
    u64 total = 0;
    for (const auto& term : f.terms) {
        u64 v = floor_mod(term.coefficient, n);
        for (unsigned j = 0; j < f.variables; ++j)
            if (term.exponents[j] != 0)
                v = mul_mod(v, mod_pow(static_cast<std::int64_t>(xs[j]), term.exponents[j], n), n);
        total += v;
        if (total >= n) total -= n;
    }
    return total;
}

u64 eval_diagonal(const DiagonalPolynomial& f, const std::vector<u64>& xs, u64 n) {
    u64 total = 0;
    for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
        u64 v = mul_mod(floor_mod(f.coefficients[i], n),
                        mod_pow(static_cast<std::int64_t>(xs[i]), f.degree, n), n);
        total += v;
        if (total >= n) total -= n;
    }
    return total;
}

// Lexicographic odometer over I_n^t: (0,...,0), (0,...,1), ...
bool advance(std::vector<u64>& xs, u64 n) {
    for (std::size_t i = xs.size(); i-- > 0;) {
        if (++xs[i] < n) return true;
        xs[i] = 0;
    }
    return false;
}

std::uint64_t isqrt_u64(u64 m) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(m)));
    while (r > 0 && static_cast<u128>(r) * r > m) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= m) ++r;
    return r;
}

}  // namespace

ResidueSet image_diagonal(const DiagonalPolynomial& f, std::uint64_t n) {
    validate(f);
    if (n == 0) throw std::invalid_argument("image_diagonal: modulus must be positive");
    std::vector<ResidueSet> per_variable;
    per_variable.reserve(f.coefficients.size());
    for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
        const u64 reduced = floor_mod(f.coefficients[i], n);
        // identical reduced coefficients give identical value sets
        bool reused = false;
        for (std::size_t j = 0; j < i; ++j) {
            if (floor_mod(f.coefficients[j], n) == reduced) {
                per_variable.push_back(per_variable[j]);
                reused = true;
                break;
            }
        }
        if (!reused) per_variable.push_back(variable_values(f.coefficients[i], f.degree, n));
    }
    return fold_sumsets(per_variable);
}

ResidueSet image_general(const GeneralPolynomial& f, std::uint64_t n, const OracleConfig& config) {
    validate(f);
    if (n == 0) throw std::invalid_argument("image_general: modulus must be positive");
    charge_enumeration(n, f.variables, config.enumeration_budget, "image_general");
    ResidueSet image(n);
    std::vector<u64> xs(f.variables, 0);
    do {
        image.insert(eval_general(f, xs, n));
    } while (advance(xs, n));
    return image;
}

std::uint64_t alpha_oracle(const DiagonalPolynomial& f, std::uint64_t n) {
    return image_diagonal(f, n).count();
}

std::uint64_t alpha_oracle(const GeneralPolynomial& f, std::uint64_t n, const OracleConfig& config) {
    return image_general(f, n, config).count();
}

std::optional<Witness> witness(const DiagonalPolynomial& f, std::uint64_t n, std::uint64_t a,
                               const OracleConfig& config) {
    validate(f);
    if (n == 0) throw std::invalid_argument("witness: modulus must be positive");
    if (a >= n) throw std::invalid_argument("witness: target residue not below modulus");
    charge_enumeration(n, static_cast<unsigned>(f.coefficients.size()), config.enumeration_budget,
                       "witness");
    std::vector<u64> xs(f.coefficients.size(), 0);
    do {
        if (eval_diagonal(f, xs, n) == a) return Witness{xs, n, a};
    } while (advance(xs, n));
    return std::nullopt;
}

std::optional<Witness> witness(const GeneralPolynomial& f, std::uint64_t n, std::uint64_t a,
                               const OracleConfig& config) {
    validate(f);
    if (n == 0) throw std::invalid_argument("witness: modulus must be positive");
    if (a >= n) throw std::invalid_argument("witness: target residue not below modulus");
    charge_enumeration(n, f.variables, config.enumeration_budget, "witness");
    std::vector<u64> xs(f.variables, 0);
    do {
        if (eval_general(f, xs, n) == a) return Witness{xs, n, a};
    } while (advance(xs, n));
    return std::nullopt;
}

bool verify_lifting(const DiagonalPolynomial& f, std::uint64_t p, unsigned n,
                    const OracleConfig& config) {
    validate(f);
    if (!is_prime(p)) throw std::invalid_argument("verify_lifting: p must be prime");
    for (long long c : f.coefficients)
        if (floor_mod(c, p) == 0)
            throw std::invalid_argument("verify_lifting: p must not divide any coefficient");
    const unsigned s = p_adic_valuation(f.degree, p);
    if (n < 2 * s + 1)
        throw std::invalid_argument("verify_lifting: level too low (need n >= 2*v_p(degree) + 1 = " +
                                    std::to_string(2 * s + 1) + ")");
    const u64 pn = checked_pow(p, n);
    const u64 pn_next = checked_pow(p, n + 1);
    charge_modulus(pn_next, config.enumeration_budget, "verify_lifting");

    const ResidueSet image_here = image_diagonal(f, pn);
    const ResidueSet image_next = image_diagonal(f, pn_next);

    // the residues attainable with at least one coordinate coprime to p: take
    // variable i's unit-only value set, fold everyone else's full sets on top,
    // and union over i
    const std::size_t t = f.coefficients.size();
    std::vector<ResidueSet> full_sets;
    full_sets.reserve(t);
    for (long long c : f.coefficients) full_sets.push_back(variable_values(c, f.degree, pn));
    ResidueSet unit_reachable(pn);
    for (std::size_t i = 0; i < t; ++i) {
        std::vector<ResidueSet> sets;
        sets.push_back(variable_values(f.coefficients[i], f.degree, pn, true, p));
        for (std::size_t j = 0; j < t; ++j)
            if (j != i) sets.push_back(full_sets[j]);
        unit_reachable = set_union(unit_reachable, fold_sumsets(sets));
    }

    for (u64 a : set_intersection(image_here, unit_reachable).members())
        for (u64 j = 0; j < p; ++j)
            if (!image_next.contains(a + j * pn)) return false;
    return true;
}

std::optional<std::vector<std::uint64_t>> represent(RepresentationKind kind, std::uint64_t m,
                                                    const OracleConfig& config) {
    if (m > config.enumeration_budget)
        throw budget_error("represent: value " + std::to_string(m) +
                               " exceeds the search budget of " +
                               std::to_string(config.enumeration_budget),
                           m, config.enumeration_budget);
    switch (kind) {
        case RepresentationKind::two_squares: {
            for (u64 x = 0; static_cast<u128>(x) * x <= m; ++x) {
                const u64 rest = m - x * x;
                const u64 y = isqrt_u64(rest);
                if (y * y == rest && y <= x) return std::vector<u64>{x, y};
            }
            return std::nullopt;
        }
        case RepresentationKind::three_squares: {
            for (u64 x = 0; static_cast<u128>(x) * x <= m; ++x) {
                for (u64 y = 0; y <= x && x * x + y * y <= m; ++y) {
                    const u64 rest = m - x * x - y * y;
                    const u64 z = isqrt_u64(rest);
                    if (z * z == rest && z <= y) return std::vector<u64>{x, y, z};
                }
            }
            return std::nullopt;
        }
        case RepresentationKind::difference: {
            if (m == 0) return std::vector<u64>{0, 0};
            // x <= (m+1)/2 suffices: ((m+1)/2)^2 - ((m-1)/2)^2 = m for odd m
            for (u64 x = isqrt_u64(m); x <= (m + 1) / 2; ++x) {
                if (x * x < m) continue;
                const u64 rest = x * x - m;
                const u64 y = isqrt_u64(rest);
                if (y * y == rest) return std::vector<u64>{x, y};
            }
            return std::nullopt;
        }
    }
    throw std::invalid_argument("represent: unknown kind");
}

ResidueSet n_set_oracle(const DiagonalPolynomial& f, std::uint64_t p, unsigned n,
                        const OracleConfig& config) {
    validate(f);
    if (!is_prime(p)) throw std::invalid_argument("n_set_oracle: p must be prime");
    if (n == 0) throw std::invalid_argument("n_set_oracle: level must be at least 1");
    const u64 pn = checked_pow(p, n);
    charge_modulus(pn, config.enumeration_budget, "n_set_oracle");
    const ResidueSet below = image_diagonal(f, pn / p);
    const ResidueSet here = image_diagonal(f, pn);
    return n_set(here, below);
}

}  // namespace polycong
