#include "ppc/composition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace ppc {

Composition::Composition(std::vector<std::uint64_t> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw InvalidComposition("a composition needs at least one part");
    for (std::uint64_t p : parts_) {
        if (p == 0) throw InvalidComposition("parts must be positive");
        if (total_ > std::numeric_limits<std::uint64_t>::max() - p)
            throw InvalidComposition("total does not fit in 64 bits");
        total_ += p;
    }
}

Composition Composition::reversed() const {
    return Composition(std::vector<std::uint64_t>(parts_.rbegin(), parts_.rend()));
}

ParityWord::ParityWord(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw InvalidComposition("a parity word needs at least one bit");
    for (std::uint8_t b : bits_)
        if (b > 1) throw InvalidComposition("parity bits must be 0 or 1");
}

bool ParityWord::palindrome() const noexcept {
    return std::equal(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(bits_.size() / 2),
                      bits_.rbegin());
}

ParityWord parity_word(const Composition& c) {
    std::vector<std::uint8_t> bits;
    bits.reserve(c.size());
    for (std::uint64_t p : c.parts()) bits.push_back(static_cast<std::uint8_t>(p & 1));
    return ParityWord(std::move(bits));
}

bool parity_palindrome(std::span<const std::uint64_t> parts) noexcept {
    std::size_t lo = 0;
    std::size_t hi = parts.size();
    while (lo < hi) {
        --hi;
        if (((parts[lo] ^ parts[hi]) & 1) != 0) return false;
        ++lo;
    }
    return true;
}

bool is_ppc(const Composition& c) noexcept { return parity_palindrome(c.parts()); }

char to_char(PpcType t) noexcept {
    switch (t) {
        case PpcType::A: return 'A';
        case PpcType::B: return 'B';
        case PpcType::C: return 'C';
    }
    return '?';
}

PpcType classify(const Composition& c) {
    if (!is_ppc(c)) throw NotAPpc("classify requires a parity palindrome composition");
    const bool first_one = c.first() == 1;
    const bool last_one = c.last() == 1;
    if (first_one && last_one) return PpcType::A;
    if (!first_one && !last_one) return PpcType::B;
    return PpcType::C;
}

namespace {

std::uint64_t parse_part(std::string_view field) {
    if (field.empty()) throw ParseError("empty part");
    if (field.size() > 1 && field.front() == '0')
        throw ParseError("part has a leading zero: '" + std::string(field) + "'");
    std::uint64_t value = 0;
    const char* end = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(field.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError("not a part: '" + std::string(field) + "'");
    if (value == 0) throw ParseError("parts must be positive");
    return value;
}

bool all_compact_digits(std::string_view text) {
    return std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '1' && ch <= '9'; });
}

}  // namespace

Composition parse_composition(std::string_view text) {
    if (text.empty()) throw ParseError("empty composition text");
    std::vector<std::uint64_t> parts;
    if (text.find(',') == std::string_view::npos) {
        // Compact form wins for multi-character all-1..9 strings; anything
        // else without a comma must be a single base-10 part.
        if (text.size() > 1 && all_compact_digits(text)) {
            parts.reserve(text.size());
            for (char ch : text) parts.push_back(static_cast<std::uint64_t>(ch - '0'));
        } else {
            parts.push_back(parse_part(text));
        }
        return Composition(std::move(parts));
    }
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view field =
            comma == std::string_view::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        parts.push_back(parse_part(field));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

std::string to_string(const Composition& c) {
    std::string out;
    bool sep = false;
    for (std::uint64_t p : c.parts()) {
        if (sep) out.push_back(',');
        out += std::to_string(p);
        sep = true;
    }
    return out;
}

bool compact_representable(const Composition& c) noexcept {
    return std::all_of(c.parts().begin(), c.parts().end(),
                       [](std::uint64_t p) { return p <= 9; });
}

std::string to_compact(const Composition& c) {
    if (!compact_representable(c))
        throw std::logic_error("compact form needs every part <= 9");
    std::string out;
    out.reserve(c.size());
    for (std::uint64_t p : c.parts()) out.push_back(static_cast<char>('0' + p));
    return out;
}

std::string format(const Composition& c, bool compact) {
    return compact && compact_representable(c) ? to_compact(c) : to_string(c);
}

}  // namespace ppc
