#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ppc/errors.hpp"

namespace ppc {

/// An ordered sequence of positive integer parts together with their sum.
/// Immutable after construction; the constructor rejects an empty part list,
/// zero parts, and sums that do not fit in 64 bits.
class Composition {
public:
    explicit Composition(std::vector<std::uint64_t> parts);

    const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
    std::uint64_t total() const noexcept { return total_; }
    std::size_t size() const noexcept { return parts_.size(); }
    std::uint64_t first() const noexcept { return parts_.front(); }
    std::uint64_t last() const noexcept { return parts_.back(); }

    Composition reversed() const;

    friend bool operator==(const Composition& a, const Composition& b) noexcept {
        return a.parts_ == b.parts_;
    }
    /// Numeric lexicographic order on the part sequence.
    friend bool operator<(const Composition& a, const Composition& b) noexcept {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<std::uint64_t> parts_;
    std::uint64_t total_ = 0;
};

/// The mod-2 reduction of a composition's parts, one bit per part.
class ParityWord {
public:
    explicit ParityWord(std::vector<std::uint8_t> bits);

    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return bits_.size(); }
    bool palindrome() const noexcept;

    friend bool operator==(const ParityWord&, const ParityWord&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

ParityWord parity_word(const Composition& c);

/// True iff the part sequence reads the same forward and backward mod 2.
bool parity_palindrome(std::span<const std::uint64_t> parts) noexcept;
bool is_ppc(const Composition& c) noexcept;

/// Three-way split of parity palindrome compositions by their end parts:
/// A when both ends are 1, B when both ends are >= 2, C when exactly one
/// end is 1. A single part is its own first and last part, so [1] is A and
/// any other single part is B.
enum class PpcType : unsigned char { A, B, C };

char to_char(PpcType t) noexcept;

/// Throws NotAPpc when is_ppc(c) is false.
PpcType classify(const Composition& c);

// Text formats.
//
// Canonical: base-10 parts joined by commas, no whitespace ("3,2,1,4,1").
// Compact: one digit per part, only meaningful when every part is <= 9
// ("32141"). parse_composition accepts both; a comma-free string whose
// characters are all 1-9 reads as compact, so "32141" is five parts whereas
// "10" (not a compact string, it contains a 0) is the single part ten.
Composition parse_composition(std::string_view text);

std::string to_string(const Composition& c);
bool compact_representable(const Composition& c) noexcept;
std::string to_compact(const Composition& c);

/// Canonical text, or compact text when requested and representable.
std::string format(const Composition& c, bool compact);

}  // namespace ppc
