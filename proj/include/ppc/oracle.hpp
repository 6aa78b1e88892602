#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ppc/composition.hpp"
#include "ppc/errors.hpp"

namespace ppc {

/// Default enumeration cap; keeps an accidental worst-case run in the minutes.
inline constexpr std::uint64_t kDefaultCap = 30;
/// Hard ceiling: the gap bitmask of a composition of n has n-1 bits.
inline constexpr std::uint64_t kMaxCap = 63;

/// Number of compositions of n, i.e. 2^(n-1). Requires 1 <= n <= kMaxCap.
std::uint64_t mask_count(std::uint64_t n);

/// Throws NOutOfRange unless 1 <= n <= cap <= kMaxCap.
void check_enumeration_range(std::uint64_t n, std::uint64_t cap);

// Compositions of n are in bijection with subsets of the n-1 gaps between n
// unit cells: bit i of the mask is set exactly when a part ends after cell
// i+1, so the least significant bit is the leftmost gap. Enumeration runs in
// increasing mask value: mask 0 is [n], mask 2^(n-1)-1 is [1,1,...,1]. The
// stream advances in amortized O(1) by mutating only the leading parts (a
// mask increment flips trailing bits, which touches a prefix of the parts).
class CompositionStream {
public:
    explicit CompositionStream(std::uint64_t n);
    /// Streams only the compositions of masks in [mask_begin, mask_end).
    CompositionStream(std::uint64_t n, std::uint64_t mask_begin, std::uint64_t mask_end);

    bool done() const noexcept { return remaining_ == 0; }
    /// Parts of the current composition; invalidated by advance().
    std::span<const std::uint64_t> parts() const noexcept;
    Composition current() const;
    void advance();

private:
    std::uint64_t n_ = 0;
    std::uint64_t remaining_ = 0;
    std::size_t len_ = 0;
    std::vector<std::uint64_t> buf_;  // parts right-aligned at buf_[n_-len_ .. n_)
};

/// The subsequence of a CompositionStream passing is_ppc.
class PpcStream {
public:
    explicit PpcStream(CompositionStream inner) : inner_(std::move(inner)) { settle(); }

    bool done() const noexcept { return inner_.done(); }
    std::span<const std::uint64_t> parts() const noexcept { return inner_.parts(); }
    Composition current() const { return inner_.current(); }
    void advance() {
        inner_.advance();
        settle();
    }

private:
    void settle() {
        while (!inner_.done() && !parity_palindrome(inner_.parts())) inner_.advance();
    }

    CompositionStream inner_;
};

/// All compositions of n in gap-bitmask order. Throws NOutOfRange.
CompositionStream enumerate_compositions(std::uint64_t n, std::uint64_t cap = kDefaultCap);

/// The parity palindrome compositions of n, in the same order.
PpcStream enumerate_ppcs(std::uint64_t n, std::uint64_t cap = kDefaultCap);

/// Calls visit(parts) for every composition of n; the span is only valid
/// during the call.
template <typename Visitor>
void for_each_composition(std::uint64_t n, std::uint64_t cap, Visitor&& visit) {
    for (auto s = enumerate_compositions(n, cap); !s.done(); s.advance()) visit(s.parts());
}

template <typename Visitor>
void for_each_ppc(std::uint64_t n, std::uint64_t cap, Visitor&& visit) {
    for (auto s = enumerate_ppcs(n, cap); !s.done(); s.advance()) visit(s.parts());
}

// Materialized conveniences for small n.
std::vector<Composition> collect_compositions(std::uint64_t n, std::uint64_t cap = kDefaultCap);
std::vector<Composition> collect_ppcs(std::uint64_t n, std::uint64_t cap = kDefaultCap);

/// Brute-force ppc count of n by streaming enumeration. jobs > 1 splits the
/// mask range into disjoint intervals counted concurrently; the result does
/// not depend on the partitioning.
std::uint64_t count_ppcs_brute(std::uint64_t n, std::uint64_t cap = kDefaultCap,
                               unsigned jobs = 1);

/// Closed-form ppc count: 1 for n = 1, otherwise 2 * 3^(n/2 - 1), which
/// covers even and odd n alike. Throws OverflowError once the value leaves
/// 64-bit range (n >= 82) and NOutOfRange for n = 0.
std::uint64_t count_ppcs_formula(std::uint64_t n);

}  // namespace ppc
