#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ppc/composition.hpp"
#include "ppc/errors.hpp"
#include "ppc/oracle.hpp"

namespace ppc {

// The four productions, each mapping a ppc of total m to a ppc of total m+2:
//   A  - add a new part 1 on each side
//   B  - add 1 to both the first and last parts (a single part gains 2)
//   C1 - when the first part is 1, add 2 to the last part
//   C2 - when the last part is 1, add 2 to the first part
enum class ProductionRule : unsigned char { A, B, C1, C2 };

std::string_view to_string(ProductionRule r) noexcept;

struct Production {
    Composition parent;
    ProductionRule rule;
    Composition child;

    friend bool operator==(const Production&, const Production&) = default;
};

/// Applies one rule. Throws NotAPpc, TotalTooSmall (total < 2),
/// RuleNotApplicable (C1/C2 end-part precondition), or OverflowError.
Composition apply_rule(const Composition& p, ProductionRule r);

/// Every applicable rule in the fixed order A, B, C1, C2: four productions
/// for a type-A parent, two for type B, three for type C.
std::vector<Production> produce(const Composition& p);

/// Inverts the unique rule that produced c (total >= 4): type A strips the
/// end 1s, type B lowers both ends (a single part loses 2), type C removes
/// 2 from the end opposite the 1. apply_rule(parent, rule) == c holds for
/// the returned production.
Production parent_of(const Composition& c);

enum class Parity : unsigned char { Even, Odd };

constexpr Parity parity_of(std::uint64_t n) noexcept {
    return n % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::string_view to_string(Parity p) noexcept;

/// One complete generation of ppcs sharing a total. Members are sorted in
/// numeric lexicographic part order; provenance[i] records the production
/// that created members[i] and is empty on the seed level.
struct ForestLevel {
    std::uint64_t total = 0;
    std::vector<Composition> members;
    std::vector<Production> provenance;
};

/// Expands the seed generation ({[1,1],[2]} even, {[1,1,1],[3]} odd) level
/// by level up to max_total. Throws ParityMismatch when max_total has the
/// other parity and TotalTooSmall when it lies below the seed total.
std::vector<ForestLevel> build_forest(Parity parity, std::uint64_t max_total);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string counterexample;  // serialized composition with context
};

struct BijectionReport {
    std::uint64_t total = 0;
    std::vector<CheckResult> checks;
    bool pass = true;
};

/// Checks, for the given parent total, that the children of all ppcs are
/// pairwise distinct, equal the brute-force ppc set of total+2, and that
/// parent_of recovers each actual producer. Requires total+2 <= cap.
BijectionReport verify_bijection(std::uint64_t total, std::uint64_t cap = kDefaultCap);

struct TypeCensus {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    std::uint64_t c = 0;

    std::uint64_t of(PpcType t) const noexcept;
    std::uint64_t sum() const noexcept { return a + b + c; }

    friend bool operator==(const TypeCensus&, const TypeCensus&) = default;
};

/// Counts the ppcs of `total` by type. Requires 2 <= total <= cap.
TypeCensus type_census(std::uint64_t total, std::uint64_t cap = kDefaultCap);

}  // namespace ppc
