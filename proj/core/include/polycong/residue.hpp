#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polycong {

// A subset of I_n = {0, ..., n-1}, stored as a bit vector packed into 64-bit
// words (bit i of word j <=> residue 64*j + i).  The free operations below
// treat sets as immutable values and always return fresh sets.
class ResidueSet {
public:
    explicit ResidueSet(std::uint64_t modulus);  // empty set; modulus >= 1

    static ResidueSet full(std::uint64_t modulus);
    static ResidueSet from_members(std::uint64_t modulus, std::span<const std::uint64_t> members);
    static ResidueSet from_members(std::uint64_t modulus,
                                   std::initializer_list<std::uint64_t> members);

    std::uint64_t modulus() const noexcept { return modulus_; }
    bool contains(std::uint64_t r) const;
    void insert(std::uint64_t r);  // r < modulus
    std::uint64_t count() const;
    bool empty() const { return count() == 0; }
    std::vector<std::uint64_t> members() const;  // ascending

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    ResidueSet(std::uint64_t modulus, std::vector<std::uint64_t>&& words);
    static ResidueSet adopt(std::uint64_t modulus, std::vector<std::uint64_t>&& words);

    friend ResidueSet lift(const ResidueSet&, std::uint64_t);
    friend ResidueSet cyclic_sumset(const ResidueSet&, const ResidueSet&);
    friend ResidueSet set_union(const ResidueSet&, const ResidueSet&);
    friend ResidueSet set_intersection(const ResidueSet&, const ResidueSet&);
    friend ResidueSet set_difference(const ResidueSet&, const ResidueSet&);

    std::uint64_t modulus_;
    std::vector<std::uint64_t> words_;
};

// {a + j*m : a in lower, 0 <= j < n/m} where m = lower.modulus() divides n.
ResidueSet lift(const ResidueSet& lower, std::uint64_t n);

// lift(lower, upper.modulus()) minus upper.  With upper the attainable set at
// p^n and lower the one at p^{n-1} this is the level-n N-set: the residues the
// lift predicts but the congruence cannot actually reach.
ResidueSet n_set(const ResidueSet& upper, const ResidueSet& lower);

// {factor*a : a in set} inside I_target; requires target = factor * modulus.
ResidueSet scale(const ResidueSet& set, std::uint64_t factor, std::uint64_t target);

// {(x + y) mod n : x in a, y in b}.  Implemented as an OR-accumulation of
// word-level rotations of the larger operand, one rotation per member of the
// smaller, so the cost is O(n * min(|a|,|b|) / 64).
ResidueSet cyclic_sumset(const ResidueSet& a, const ResidueSet& b);

ResidueSet set_union(const ResidueSet& a, const ResidueSet& b);
ResidueSet set_intersection(const ResidueSet& a, const ResidueSet& b);
ResidueSet set_difference(const ResidueSet& a, const ResidueSet& b);
bool is_subset(const ResidueSet& inner, const ResidueSet& outer);

// {"modulus": n, "members": [...]} with members ascending, keys in that order.
std::string to_json_string(const ResidueSet& set);
ResidueSet residue_set_from_json(std::string_view text);

// Compact form: the bit vector as lowercase hex, two digits per byte, byte 0
// first.  Bit 0 is residue 0 and bits are little-endian within each byte, so
// {0,1,2,4,5} mod 8 encodes as "37".
std::string to_hex_bits(const ResidueSet& set);
ResidueSet residue_set_from_hex_bits(std::uint64_t modulus, std::string_view hex);

// The base N-sets N_{p^r} and their sizes n_r for levels r = 2..degree+1; the
// periodic scaling step reads everything it needs from here.
struct NSetProfile {
    std::uint64_t prime = 0;
    unsigned degree = 0;
    std::map<unsigned, ResidueSet> base_sets;
    std::map<unsigned, std::uint64_t> base_sizes;

    const ResidueSet& set_at(unsigned level) const;   // throws if the level is missing
    std::uint64_t size_at(unsigned level) const;
};

}  // namespace polycong
