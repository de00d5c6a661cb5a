#include "polycong/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polycong {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialDivisionBound = 1'000'000;

u64 pow_mod_u64(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// One strong pseudoprime round; n odd, n - 1 = d * 2^r, witness a.
bool miller_rabin_round(u64 n, u64 a, u64 d, unsigned r) {
    a %= n;
    if (a == 0) return true;
    u64 x = pow_mod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Pollard rho, Brent cycle detection.  Only ever sees odd composites whose
// factors all exceed the trial division bound.  Deterministic: the offset c
// steps through 1, 2, 3, ... until a proper factor appears.
u64 pollard_rho(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 power = 1, steps = 0;
        while (d == 1) {
            if (power == steps) {
                x = y;
                power <<= 1;
                steps = 0;
            }
            y = mul_mod(y, y, n) + c;
            if (y >= n) y -= n;
            ++steps;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_recursive(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_recursive(d, primes);
    factor_recursive(n / d, primes);
}

}  // namespace

std::uint64_t Factorization::value() const {
    u64 product = 1;
    for (const auto& pp : factors)
        for (unsigned i = 0; i < pp.exponent; ++i) product *= pp.prime;
    return product;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("mul_mod: modulus must be nonzero");
    return static_cast<u64>((u128(a) * b) % m);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // This fixed base set decides primality for every 64-bit n.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!miller_rabin_round(n, a, d, r)) return false;
    return true;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization result;
    auto push = [&result](u64 p, unsigned e) { result.factors.push_back({p, e}); };

    unsigned twos = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++twos;
    }
    if (twos != 0) push(2, twos);

    for (u64 d = 3; d <= kTrialDivisionBound && d * d <= n; d += 2) {
        if (n % d != 0) continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        push(d, e);
    }

    if (n > 1) {
        if (is_prime(n)) {
            push(n, 1);
        } else {
            std::vector<u64> primes;
            factor_recursive(n, primes);
            std::sort(primes.begin(), primes.end());
            for (std::size_t i = 0; i < primes.size();) {
                std::size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                push(primes[i], static_cast<unsigned>(j - i));
                i = j;
            }
        }
    }

    std::sort(result.factors.begin(), result.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return result;
}

unsigned p_adic_valuation(std::uint64_t n, std::uint64_t p) {
    if (n == 0) throw std::invalid_argument("p_adic_valuation: n must be positive");
    if (!is_prime(p)) throw std::invalid_argument("p_adic_valuation: p must be prime");
    unsigned e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

std::uint64_t floor_mod(std::int64_t value, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("floor_mod: modulus must be nonzero");
    if (value >= 0) return static_cast<u64>(value) % m;
    u64 magnitude = 0 - static_cast<u64>(value);  // |value|, safe at INT64_MIN
    u64 r = magnitude % m;
    return r == 0 ? 0 : m - r;
}

std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("mod_pow: modulus must be nonzero");
    return pow_mod_u64(floor_mod(base, m), exp, m);
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
    u128 result = 1;
    for (unsigned i = 0; i < exp; ++i) {
        result *= base;
        if (result > ~u64{0}) throw std::overflow_error("checked_pow: result exceeds 64 bits");
    }
    return static_cast<u64>(result);
}

std::uint64_t crt_pair(std::uint64_t a1, std::uint64_t m1, std::uint64_t a2, std::uint64_t m2) {
    if (m1 == 0 || m2 == 0) throw std::invalid_argument("crt_pair: moduli must be positive");
    if (a1 >= m1 || a2 >= m2)
        throw std::invalid_argument("crt_pair: residues must lie below their moduli");
    if (std::gcd(m1, m2) != 1) throw std::invalid_argument("crt_pair: moduli must be coprime");
    if (u128(m1) * m2 > ~u64{0})
        throw std::overflow_error("crt_pair: combined modulus exceeds 64 bits");
    if (m1 == 1) return a2;
    if (m2 == 1) return a1;

    // x = a1 + m1 * t with t = (a2 - a1) * m1^{-1} (mod m2); both moduli are
    // below 2^63 here since their product fits 64 bits.
    std::int64_t t0 = 0, t1 = 1;
    std::int64_t r0 = static_cast<std::int64_t>(m2), r1 = static_cast<std::int64_t>(m1 % m2);
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
    }
    u64 inv = floor_mod(t0, m2);
    u64 a1r = a1 % m2;
    u64 diff = a2 >= a1r ? a2 - a1r : m2 - (a1r - a2);
    u64 t = mul_mod(diff, inv, m2);
    return a1 + m1 * t;
}

}  // namespace polycong
