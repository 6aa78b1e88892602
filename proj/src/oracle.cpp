#include "ppc/oracle.hpp"

#include <cassert>
#include <limits>
#include <string>
#include <thread>

namespace ppc {

std::uint64_t mask_count(std::uint64_t n) {
    if (n == 0 || n > kMaxCap) throw NOutOfRange("n must be in [1, 63]");
    return std::uint64_t{1} << (n - 1);
}

void check_enumeration_range(std::uint64_t n, std::uint64_t cap) {
    if (cap == 0 || cap > kMaxCap)
        throw NOutOfRange("cap must be in [1, " + std::to_string(kMaxCap) + "]");
    if (n == 0 || n > cap)
        throw NOutOfRange("n must be in [1, " + std::to_string(cap) + "], got " +
                          std::to_string(n));
}

CompositionStream::CompositionStream(std::uint64_t n)
    : CompositionStream(n, 0, mask_count(n)) {}

CompositionStream::CompositionStream(std::uint64_t n, std::uint64_t mask_begin,
                                     std::uint64_t mask_end)
    : n_(n) {
    const std::uint64_t masks = mask_count(n);
    if (mask_begin > mask_end || mask_end > masks)
        throw NOutOfRange("mask range outside [0, 2^(n-1)]");
    remaining_ = mask_end - mask_begin;
    buf_.assign(static_cast<std::size_t>(n), 0);
    if (remaining_ == 0) return;
    // Decode the first mask: bit i set means a part ends after unit i+1.
    std::vector<std::uint64_t> parts;
    std::uint64_t run = 1;
    for (std::uint64_t i = 0; i + 1 < n; ++i) {
        if ((mask_begin >> i) & 1) {
            parts.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    parts.push_back(run);
    len_ = parts.size();
    std::copy(parts.begin(), parts.end(), buf_.begin() + static_cast<std::ptrdiff_t>(n_ - len_));
}

std::span<const std::uint64_t> CompositionStream::parts() const noexcept {
    return {buf_.data() + (n_ - len_), len_};
}

Composition CompositionStream::current() const {
    auto view = parts();
    return Composition(std::vector<std::uint64_t>(view.begin(), view.end()));
}

void CompositionStream::advance() {
    assert(remaining_ > 0);
    --remaining_;
    if (remaining_ == 0) return;
    // Incrementing the gap mask flips its trailing ones and the bit above
    // them. On the parts that reads: the run of t leading 1-parts and one
    // unit of the part after them merge into a new first part of t+1.
    const std::size_t head = static_cast<std::size_t>(n_) - len_;
    std::size_t t = 0;
    while (t < len_ && buf_[head + t] == 1) ++t;
    assert(t < len_);  // the all-ones composition is the final mask
    if (t == 0) {
        buf_[head] -= 1;
        buf_[head - 1] = 1;
        ++len_;
    } else {
        buf_[head + t] -= 1;
        buf_[head + t - 1] = t + 1;
        len_ -= t - 1;
    }
}

CompositionStream enumerate_compositions(std::uint64_t n, std::uint64_t cap) {
    check_enumeration_range(n, cap);
    return CompositionStream(n);
}

PpcStream enumerate_ppcs(std::uint64_t n, std::uint64_t cap) {
    return PpcStream(enumerate_compositions(n, cap));
}

std::vector<Composition> collect_compositions(std::uint64_t n, std::uint64_t cap) {
    std::vector<Composition> out;
    for (auto s = enumerate_compositions(n, cap); !s.done(); s.advance())
        out.push_back(s.current());
    return out;
}

std::vector<Composition> collect_ppcs(std::uint64_t n, std::uint64_t cap) {
    std::vector<Composition> out;
    for (auto s = enumerate_ppcs(n, cap); !s.done(); s.advance()) out.push_back(s.current());
    return out;
}

namespace {

std::uint64_t count_ppcs_in_range(std::uint64_t n, std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    for (CompositionStream s(n, begin, end); !s.done(); s.advance())
        if (parity_palindrome(s.parts())) ++count;
    return count;
}

}  // namespace

std::uint64_t count_ppcs_brute(std::uint64_t n, std::uint64_t cap, unsigned jobs) {
    check_enumeration_range(n, cap);
    const std::uint64_t masks = mask_count(n);
    if (jobs <= 1 || masks < 4096) return count_ppcs_in_range(n, 0, masks);

    const std::uint64_t workers = std::min<std::uint64_t>(jobs, masks);
    std::vector<std::uint64_t> partial(static_cast<std::size_t>(workers), 0);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    const std::uint64_t chunk = masks / workers;
    const std::uint64_t extra = masks % workers;
    std::uint64_t begin = 0;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
        threads.emplace_back([n, begin, end, w, &partial] {
            partial[static_cast<std::size_t>(w)] = count_ppcs_in_range(n, begin, end);
        });
        begin = end;
    }
    for (auto& th : threads) th.join();
    std::uint64_t count = 0;
    for (std::uint64_t c : partial) count += c;
    return count;
}

std::uint64_t count_ppcs_formula(std::uint64_t n) {
    if (n == 0) throw NOutOfRange("n must be positive");
    if (n == 1) return 1;
    const std::uint64_t exponent = n / 2 - 1;
    std::uint64_t result = 2;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (result > std::numeric_limits<std::uint64_t>::max() / 3)
            throw OverflowError("2*3^(n/2-1) exceeds 64 bits for n = " + std::to_string(n));
        result *= 3;
    }
    return result;
}

}  // namespace ppc
