#include "ppc/production.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <limits>
#include <string>
#include <utility>

namespace ppc {

std::string_view to_string(ProductionRule r) noexcept {
    switch (r) {
        case ProductionRule::A: return "A";
        case ProductionRule::B: return "B";
        case ProductionRule::C1: return "C1";
        case ProductionRule::C2: return "C2";
    }
    return "?";
}

std::string_view to_string(Parity p) noexcept {
    return p == Parity::Even ? "even" : "odd";
}

namespace {

void ensure_producible(const Composition& p) {
    if (!is_ppc(p)) throw NotAPpc("productions need a parity palindrome composition");
    if (p.total() < 2) throw TotalTooSmall("the production system starts at totals 2 and 3");
    if (p.total() > std::numeric_limits<std::uint64_t>::max() - 2)
        throw OverflowError("child total would not fit in 64 bits");
}

Composition rule_a(const Composition& p) {
    std::vector<std::uint64_t> parts;
    parts.reserve(p.size() + 2);
    parts.push_back(1);
    parts.insert(parts.end(), p.parts().begin(), p.parts().end());
    parts.push_back(1);
    return Composition(std::move(parts));
}

Composition rule_b(const Composition& p) {
    std::vector<std::uint64_t> parts = p.parts();
    if (parts.size() == 1) {
        parts.front() += 2;
    } else {
        parts.front() += 1;
        parts.back() += 1;
    }
    return Composition(std::move(parts));
}

Composition rule_c1(const Composition& p) {
    std::vector<std::uint64_t> parts = p.parts();
    parts.back() += 2;
    return Composition(std::move(parts));
}

Composition rule_c2(const Composition& p) {
    std::vector<std::uint64_t> parts = p.parts();
    parts.front() += 2;
    return Composition(std::move(parts));
}

}  // namespace

Composition apply_rule(const Composition& p, ProductionRule r) {
    ensure_producible(p);
    switch (r) {
        case ProductionRule::A: return rule_a(p);
        case ProductionRule::B: return rule_b(p);
        case ProductionRule::C1:
            if (p.first() != 1) throw RuleNotApplicable("C1 needs first part 1");
            return rule_c1(p);
        case ProductionRule::C2:
            if (p.last() != 1) throw RuleNotApplicable("C2 needs last part 1");
            return rule_c2(p);
    }
    throw RuleNotApplicable("unknown rule");
}

std::vector<Production> produce(const Composition& p) {
    ensure_producible(p);
    std::vector<Production> out;
    out.reserve(4);
    out.push_back({p, ProductionRule::A, rule_a(p)});
    out.push_back({p, ProductionRule::B, rule_b(p)});
    if (p.first() == 1) out.push_back({p, ProductionRule::C1, rule_c1(p)});
    if (p.last() == 1) out.push_back({p, ProductionRule::C2, rule_c2(p)});
    return out;
}

Production parent_of(const Composition& c) {
    if (!is_ppc(c)) throw NotAPpc("parent_of needs a parity palindrome composition");
    if (c.total() < 4) throw TotalTooSmall("seed totals have no parent");
    std::vector<std::uint64_t> parts = c.parts();
    ProductionRule rule;
    switch (classify(c)) {
        case PpcType::A:
            // Both ends are 1 and the total is >= 4, so there is an interior.
            parts = std::vector<std::uint64_t>(parts.begin() + 1, parts.end() - 1);
            rule = ProductionRule::A;
            break;
        case PpcType::B:
            if (parts.size() == 1) {
                parts.front() -= 2;
            } else {
                parts.front() -= 1;
                parts.back() -= 1;
            }
            rule = ProductionRule::B;
            break;
        case PpcType::C:
            // The end opposite the 1 is odd, hence >= 3, so subtracting 2
            // keeps it positive.
            if (c.first() == 1) {
                parts.back() -= 2;
                rule = ProductionRule::C1;
            } else {
                parts.front() -= 2;
                rule = ProductionRule::C2;
            }
            break;
        default: throw NotAPpc("unreachable");
    }
    Composition parent(std::move(parts));
    assert(is_ppc(parent));
    return {std::move(parent), rule, c};
}

std::vector<ForestLevel> build_forest(Parity parity, std::uint64_t max_total) {
    const std::uint64_t seed_total = parity == Parity::Even ? 2 : 3;
    if (parity_of(max_total) != parity)
        throw ParityMismatch("max_total " + std::to_string(max_total) + " is not " +
                             std::string(to_string(parity)));
    if (max_total < seed_total)
        throw TotalTooSmall("max_total must be at least " + std::to_string(seed_total));

    std::vector<ForestLevel> forest;
    ForestLevel seeds;
    seeds.total = seed_total;
    if (parity == Parity::Even) {
        seeds.members.push_back(Composition({1, 1}));
        seeds.members.push_back(Composition({2}));
    } else {
        seeds.members.push_back(Composition({1, 1, 1}));
        seeds.members.push_back(Composition({3}));
    }
    forest.push_back(std::move(seeds));

    for (std::uint64_t total = seed_total + 2; total <= max_total; total += 2) {
        ForestLevel level;
        level.total = total;
        for (const Composition& parent : forest.back().members)
            for (Production& prod : produce(parent)) level.provenance.push_back(std::move(prod));
        std::sort(level.provenance.begin(), level.provenance.end(),
                  [](const Production& x, const Production& y) { return x.child < y.child; });
        level.members.reserve(level.provenance.size());
        for (const Production& prod : level.provenance) {
            if (!level.members.empty() && level.members.back() == prod.child)
                throw std::logic_error("production emitted a duplicate child");
            level.members.push_back(prod.child);
        }
        forest.push_back(std::move(level));
    }
    return forest;
}

std::uint64_t TypeCensus::of(PpcType t) const noexcept {
    switch (t) {
        case PpcType::A: return a;
        case PpcType::B: return b;
        case PpcType::C: return c;
    }
    return 0;
}

TypeCensus type_census(std::uint64_t total, std::uint64_t cap) {
    if (total < 2) throw NOutOfRange("type census starts at total 2");
    check_enumeration_range(total, cap);
    TypeCensus census;
    for_each_ppc(total, cap, [&](std::span<const std::uint64_t> parts) {
        const bool first_one = parts.front() == 1;
        const bool last_one = parts.back() == 1;
        if (first_one && last_one)
            ++census.a;
        else if (!first_one && !last_one)
            ++census.b;
        else
            ++census.c;
    });
    return census;
}

BijectionReport verify_bijection(std::uint64_t total, std::uint64_t cap) {
    if (total < 2) throw NOutOfRange("bijection checks start at total 2");
    if (total > cap || cap - total < 2)
        throw NOutOfRange("bijection at total " + std::to_string(total) +
                          " needs cap >= " + std::to_string(total) + " + 2");

    BijectionReport report;
    report.total = total;

    // Children of every ppc of `total`, keyed by canonical serialization.
    std::vector<std::pair<std::string, Production>> children;
    for (auto s = enumerate_ppcs(total, cap); !s.done(); s.advance()) {
        const Composition parent = s.current();
        for (Production& prod : produce(parent)) {
            std::string key = to_string(prod.child);
            children.emplace_back(std::move(key), std::move(prod));
        }
    }
    std::sort(children.begin(), children.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    CheckResult no_dup{"children-pairwise-distinct", true, ""};
    for (std::size_t i = 1; i < children.size(); ++i) {
        if (children[i].first == children[i - 1].first) {
            no_dup.pass = false;
            no_dup.counterexample = "child " + children[i].first + " produced by " +
                                    to_string(children[i - 1].second.parent) + " and " +
                                    to_string(children[i].second.parent);
            break;
        }
    }
    report.checks.push_back(std::move(no_dup));

    CheckResult coverage{"children-equal-ppcs-of-total-plus-2", true, ""};
    {
        std::vector<std::string> expected;
        for (auto s = enumerate_ppcs(total + 2, cap); !s.done(); s.advance())
            expected.push_back(to_string(s.current()));
        std::sort(expected.begin(), expected.end());
        std::vector<std::string> got;
        got.reserve(children.size());
        for (const auto& [key, prod] : children) got.push_back(key);
        got.erase(std::unique(got.begin(), got.end()), got.end());
        if (got != expected) {
            coverage.pass = false;
            // Name one composition on the mismatching side.
            std::vector<std::string> diff;
            std::set_symmetric_difference(got.begin(), got.end(), expected.begin(),
                                          expected.end(), std::back_inserter(diff));
            coverage.counterexample =
                diff.empty() ? "set mismatch" : "mismatch at " + diff.front();
        }
    }
    report.checks.push_back(std::move(coverage));

    CheckResult inverse{"parent-of-recovers-producer", true, ""};
    for (const auto& [key, prod] : children) {
        const Production back = parent_of(prod.child);
        if (back.parent != prod.parent || back.rule != prod.rule) {
            inverse.pass = false;
            inverse.counterexample = "child " + key + ": parent_of gives " +
                                     to_string(back.parent) + " via " +
                                     std::string(to_string(back.rule)) + ", produced by " +
                                     to_string(prod.parent) + " via " +
                                     std::string(to_string(prod.rule));
            break;
        }
    }
    report.checks.push_back(std::move(inverse));

    report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                              [](const CheckResult& c) { return c.pass; });
    return report;
}

}  // namespace ppc
