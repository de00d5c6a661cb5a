#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polycong/poly.hpp"
#include "polycong/residue.hpp"

namespace polycong {

struct OracleConfig {
    // Cap on brute-force state counts: n^t for tuple enumeration, p^n for
    // modulus sizes in the N-set helpers, and the value range of represent().
    // Overridable; the CLI also reads CONGRUENCE_ORACLE_BUDGET.
    std::uint64_t enumeration_budget = 100'000'000;
};

// The exact attainable set A_n = {f(x) mod n : x in Z^t}, computed from the
// per-variable value sets {c_i * x^k mod n} folded with cyclic_sumset.  Cost
// is O(t * n^2 / 64) in the worst case; no enumeration budget applies.
ResidueSet image_diagonal(const DiagonalPolynomial& f, std::uint64_t n);

// A_n by full enumeration of I_n^t; refuses when n^t exceeds the budget.
ResidueSet image_general(const GeneralPolynomial& f, std::uint64_t n,
                         const OracleConfig& config = {});

std::uint64_t alpha_oracle(const DiagonalPolynomial& f, std::uint64_t n);
std::uint64_t alpha_oracle(const GeneralPolynomial& f, std::uint64_t n,
                           const OracleConfig& config = {});

// The first tuple in lexicographic order over I_n^t whose value is a (mod n),
// if any; the enumeration budget caps n^t.
std::optional<Witness> witness(const DiagonalPolynomial& f, std::uint64_t n, std::uint64_t a,
                               const OracleConfig& config = {});
std::optional<Witness> witness(const GeneralPolynomial& f, std::uint64_t n, std::uint64_t a,
                               const OracleConfig& config = {});

// Checks the lifting step p^n -> p^{n+1} exhaustively: every a attainable mod
// p^n through a witness with at least one coordinate coprime to p must keep
// all p of its lifts a + j*p^n attainable mod p^{n+1}.  Requires p prime, p
// coprime to every coefficient, and n >= 2*v_p(degree) + 1 (precondition
// violations throw std::invalid_argument; a false return would mean the
// lifting step itself failed, which signals an implementation bug).
bool verify_lifting(const DiagonalPolynomial& f, std::uint64_t p, unsigned n,
                    const OracleConfig& config = {});

enum class RepresentationKind {
    two_squares,    // m = x^2 + y^2,       x >= y >= 0
    three_squares,  // m = x^2 + y^2 + z^2, x >= y >= z >= 0
    difference,     // m = x^2 - y^2,       x <= (m+1)/2 suffices
};

// The first representation of m in ascending-x search order, if one exists.
// The budget bounds the value range (m itself).
std::optional<std::vector<std::uint64_t>> represent(RepresentationKind kind, std::uint64_t m,
                                                    const OracleConfig& config = {});

// N_{p^n} = lift(A_{p^{n-1}}) \ A_{p^n} with both images computed exactly.
// Level 1 uses A_1 = {0}, so N_p = I_p \ A_p.
ResidueSet n_set_oracle(const DiagonalPolynomial& f, std::uint64_t p, unsigned n,
                        const OracleConfig& config = {});

}  // namespace polycong
