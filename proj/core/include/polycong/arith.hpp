#pragma once

#include <cstdint>
#include <vector>

namespace polycong {

struct PrimePower {
    std::uint64_t prime = 0;
    unsigned exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime decomposition with primes in strictly increasing order; empty for n = 1.
struct Factorization {
    std::vector<PrimePower> factors;

    std::uint64_t value() const;  // product of prime^exponent

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

// Deterministic for the full 64-bit range (Miller-Rabin with a fixed base set).
bool is_prime(std::uint64_t n);

// Trial division up to 10^6, then Miller-Rabin + Pollard rho on what remains.
// Rejects n = 0.
Factorization factorize(std::uint64_t n);

// Largest e with p^e | n.  Requires n >= 1 and p prime.
unsigned p_adic_valuation(std::uint64_t n, std::uint64_t p);

// (a * b) mod m with a 128-bit intermediate; m >= 1.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// base^exp mod m; negative bases are reduced into I_m first; m >= 1.
std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, std::uint64_t m);

// Representative of value mod m inside I_m = {0, ..., m-1}; m >= 1.
std::uint64_t floor_mod(std::int64_t value, std::uint64_t m);

// base^exp, throwing std::overflow_error if the result exceeds 64 bits.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

// The unique x in I_{m1*m2} with x = a1 (mod m1) and x = a2 (mod m2).
// Requires coprime moduli, a1 < m1, a2 < m2, and m1*m2 within 64 bits.
std::uint64_t crt_pair(std::uint64_t a1, std::uint64_t m1, std::uint64_t a2, std::uint64_t m2);

}  // namespace polycong
