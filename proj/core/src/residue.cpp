#include "polycong/residue.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace polycong {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::size_t word_count(u64 modulus) { return static_cast<std::size_t>((modulus + 63) / 64); }

// Zero out any bits at positions >= modulus in the top word.
void trim(std::vector<u64>& words, u64 modulus) {
    unsigned used = modulus % 64;
    if (used != 0 && !words.empty()) words.back() &= (u64{1} << used) - 1;
}

// OR bits [src_begin, src_end) of src into dst starting at bit dst_begin.
// The caller guarantees dst has room for dst_begin + (src_end - src_begin) bits.
void or_bit_range(std::vector<u64>& dst, std::span<const u64> src, u64 src_begin, u64 src_end,
                  u64 dst_begin) {
    if (src_begin >= src_end) return;
    const u64 first_word = src_begin / 64;
    const u64 last_word = (src_end - 1) / 64;
    for (u64 w = first_word; w <= last_word; ++w) {
        u64 word = src[static_cast<std::size_t>(w)];
        const u64 bit_base = w * 64;
        if (bit_base < src_begin) word &= ~u64{0} << (src_begin - bit_base);
        if (bit_base + 64 > src_end) {
            const u64 keep = src_end - bit_base;
            if (keep < 64) word &= (u64{1} << keep) - 1;
        }
        if (word == 0) continue;
        if (bit_base + dst_begin >= src_begin) {
            const u64 pos = bit_base + dst_begin - src_begin;  // dst position of word bit 0
            const u64 q = pos / 64, r = pos % 64;
            dst[static_cast<std::size_t>(q)] |= word << r;
            if (r != 0 && (word >> (64 - r)) != 0)
                dst[static_cast<std::size_t>(q) + 1] |= word >> (64 - r);
        } else {
            // the word straddles the start of the source range; the masked-off
            // low bits make a plain right shift land everything in dst[0]
            const u64 shift = src_begin - (bit_base + dst_begin);
            dst[0] |= word >> shift;
        }
    }
}

}  // namespace

ResidueSet::ResidueSet(std::uint64_t modulus) : modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("ResidueSet: modulus must be positive");
    words_.assign(word_count(modulus), 0);
}

ResidueSet::ResidueSet(std::uint64_t modulus, std::vector<std::uint64_t>&& words)
    : modulus_(modulus), words_(std::move(words)) {
    trim(words_, modulus_);
}

ResidueSet ResidueSet::adopt(std::uint64_t modulus, std::vector<std::uint64_t>&& words) {
    return ResidueSet(modulus, std::move(words));
}

ResidueSet ResidueSet::full(std::uint64_t modulus) {
    ResidueSet set(modulus);
    for (auto& w : set.words_) w = ~u64{0};
    trim(set.words_, modulus);
    return set;
}

ResidueSet ResidueSet::from_members(std::uint64_t modulus, std::span<const std::uint64_t> members) {
    ResidueSet set(modulus);
    for (u64 m : members) set.insert(m);
    return set;
}

ResidueSet ResidueSet::from_members(std::uint64_t modulus,
                                    std::initializer_list<std::uint64_t> members) {
    return from_members(modulus, std::span<const std::uint64_t>(members.begin(), members.size()));
}

bool ResidueSet::contains(std::uint64_t r) const {
    if (r >= modulus_) throw std::out_of_range("ResidueSet::contains: residue not below modulus");
    return (words_[static_cast<std::size_t>(r / 64)] >> (r % 64)) & 1;
}

void ResidueSet::insert(std::uint64_t r) {
    if (r >= modulus_) throw std::out_of_range("ResidueSet::insert: residue not below modulus");
    words_[static_cast<std::size_t>(r / 64)] |= u64{1} << (r % 64);
}

std::uint64_t ResidueSet::count() const {
    u64 total = 0;
    for (u64 w : words_) total += static_cast<unsigned>(std::popcount(w));
    return total;
}

std::vector<std::uint64_t> ResidueSet::members() const {
    std::vector<u64> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
        u64 w = words_[i];
        while (w != 0) {
            unsigned bit = static_cast<unsigned>(std::countr_zero(w));
            out.push_back(static_cast<u64>(i) * 64 + bit);
            w &= w - 1;
        }
    }
    return out;
}

ResidueSet lift(const ResidueSet& lower, std::uint64_t n) {
    const u64 m = lower.modulus();
    if (n == 0 || n % m != 0)
        throw std::invalid_argument("lift: target modulus must be a positive multiple of the source");
    std::vector<u64> words(word_count(n), 0);
    for (u64 j = 0; j < n / m; ++j) or_bit_range(words, lower.words(), 0, m, j * m);
    return ResidueSet::adopt(n, std::move(words));
}

ResidueSet n_set(const ResidueSet& upper, const ResidueSet& lower) {
    if (upper.modulus() % lower.modulus() != 0 || upper.modulus() == lower.modulus())
        throw std::invalid_argument(
            "n_set: modulus mismatch (upper must be a proper multiple of lower)");
    return set_difference(lift(lower, upper.modulus()), upper);
}

ResidueSet scale(const ResidueSet& set, std::uint64_t factor, std::uint64_t target) {
    if (factor == 0) throw std::invalid_argument("scale: factor must be positive");
    if (u128(factor) * set.modulus() != target)
        throw std::invalid_argument("scale: target must equal factor * modulus");
    ResidueSet result(target);
    for (u64 a : set.members()) result.insert(factor * a);
    return result;
}

ResidueSet cyclic_sumset(const ResidueSet& a, const ResidueSet& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("cyclic_sumset: operands must share a modulus");
    const u64 n = a.modulus();
    // rotate the larger set once per member of the smaller one
    const ResidueSet& rotated = a.count() <= b.count() ? b : a;
    const ResidueSet& offsets = a.count() <= b.count() ? a : b;
    std::vector<u64> words(word_count(n), 0);
    for (u64 s : offsets.members()) {
        if (s == 0) {
            or_bit_range(words, rotated.words(), 0, n, 0);
        } else {
            or_bit_range(words, rotated.words(), 0, n - s, s);
            or_bit_range(words, rotated.words(), n - s, n, 0);
        }
    }
    return ResidueSet::adopt(n, std::move(words));
}

ResidueSet set_union(const ResidueSet& a, const ResidueSet& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("set_union: operands must share a modulus");
    std::vector<u64> words(a.words().begin(), a.words().end());
    for (std::size_t i = 0; i < words.size(); ++i) words[i] |= b.words()[i];
    return ResidueSet::adopt(a.modulus(), std::move(words));
}

ResidueSet set_intersection(const ResidueSet& a, const ResidueSet& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("set_intersection: operands must share a modulus");
    std::vector<u64> words(a.words().begin(), a.words().end());
    for (std::size_t i = 0; i < words.size(); ++i) words[i] &= b.words()[i];
    return ResidueSet::adopt(a.modulus(), std::move(words));
}

ResidueSet set_difference(const ResidueSet& a, const ResidueSet& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("set_difference: operands must share a modulus");
    std::vector<u64> words(a.words().begin(), a.words().end());
    for (std::size_t i = 0; i < words.size(); ++i) words[i] &= ~b.words()[i];
    return ResidueSet::adopt(a.modulus(), std::move(words));
}

bool is_subset(const ResidueSet& inner, const ResidueSet& outer) {
    if (inner.modulus() != outer.modulus())
        throw std::invalid_argument("is_subset: operands must share a modulus");
    for (std::size_t i = 0; i < inner.words().size(); ++i)
        if ((inner.words()[i] & ~outer.words()[i]) != 0) return false;
    return true;
}

std::string to_json_string(const ResidueSet& set) {
    nlohmann::ordered_json j;
    j["modulus"] = set.modulus();
    j["members"] = set.members();
    return j.dump();
}

ResidueSet residue_set_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("residue_set_from_json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("modulus") || !j.contains("members") ||
        !j["modulus"].is_number_unsigned() || !j["members"].is_array())
        throw std::invalid_argument(
            "residue_set_from_json: expected {\"modulus\": n, \"members\": [...]}");
    ResidueSet set(j["modulus"].get<u64>());
    for (const auto& m : j["members"]) {
        if (!m.is_number_unsigned())
            throw std::invalid_argument("residue_set_from_json: members must be unsigned integers");
        u64 r = m.get<u64>();
        if (r >= set.modulus())
            throw std::invalid_argument("residue_set_from_json: member not below modulus");
        set.insert(r);
    }
    return set;
}

std::string to_hex_bits(const ResidueSet& set) {
    static constexpr char digits[] = "0123456789abcdef";
    const u64 bytes = (set.modulus() + 7) / 8;
    std::string out;
    out.reserve(static_cast<std::size_t>(bytes) * 2);
    for (u64 i = 0; i < bytes; ++i) {
        const u64 word = set.words()[static_cast<std::size_t>(i / 8)];
        const unsigned byte = static_cast<unsigned>((word >> (8 * (i % 8))) & 0xff);
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xf]);
    }
    return out;
}

ResidueSet residue_set_from_hex_bits(std::uint64_t modulus, std::string_view hex) {
    ResidueSet set(modulus);
    const u64 bytes = (modulus + 7) / 8;
    if (hex.size() != bytes * 2)
        throw std::invalid_argument("residue_set_from_hex_bits: wrong digit count for modulus");
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
        if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
        throw std::invalid_argument("residue_set_from_hex_bits: invalid hex digit");
    };
    for (u64 i = 0; i < bytes; ++i) {
        const unsigned byte = (nibble(hex[static_cast<std::size_t>(2 * i)]) << 4) |
                              nibble(hex[static_cast<std::size_t>(2 * i + 1)]);
        for (unsigned bit = 0; bit < 8; ++bit) {
            if (((byte >> bit) & 1) == 0) continue;
            const u64 r = 8 * i + bit;
            if (r >= modulus)
                throw std::invalid_argument("residue_set_from_hex_bits: set bit beyond modulus");
            set.insert(r);
        }
    }
    return set;
}

const ResidueSet& NSetProfile::set_at(unsigned level) const {
    auto it = base_sets.find(level);
    if (it == base_sets.end())
        throw std::invalid_argument("NSetProfile: missing base set at level " +
                                    std::to_string(level));
    return it->second;
}

std::uint64_t NSetProfile::size_at(unsigned level) const {
    auto it = base_sizes.find(level);
    if (it == base_sizes.end())
        throw std::invalid_argument("NSetProfile: missing base size at level " +
                                    std::to_string(level));
    return it->second;
}

}  // namespace polycong
