#include "ppc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <span>
#include <thread>

#include "ppc/composition.hpp"
#include "ppc/production.hpp"

namespace ppc {

namespace {

enum class CheckKind { Counts, Bijection, Thirds, FanOut, RoundTrip };

struct Task {
    CheckKind kind;
    std::uint64_t total;
};

std::string first_ppc_text(std::uint64_t total, std::uint64_t cap) {
    auto s = enumerate_ppcs(total, cap);
    return s.done() ? std::string("none") : to_string(s.current());
}

std::string check_counts(std::uint64_t total, std::uint64_t cap) {
    const std::uint64_t brute = count_ppcs_brute(total, cap);
    const std::uint64_t formula = count_ppcs_formula(total);
    if (brute == formula) return {};
    return "total=" + std::to_string(total) + ": brute " + std::to_string(brute) +
           " != formula " + std::to_string(formula) + " (first ppc " +
           first_ppc_text(total, cap) + ")";
}

std::string check_bijection(std::uint64_t total, std::uint64_t cap) {
    const BijectionReport report = verify_bijection(total, cap);
    if (report.pass) return {};
    for (const CheckResult& c : report.checks)
        if (!c.pass)
            return "total=" + std::to_string(total) + ": " + c.name + ": " + c.counterexample;
    return "total=" + std::to_string(total) + ": failed";
}

std::string check_thirds(std::uint64_t total, std::uint64_t cap) {
    const TypeCensus census = type_census(total, cap);
    if (census.a == census.b && census.b == census.c) return {};
    return "total=" + std::to_string(total) + ": census A=" + std::to_string(census.a) +
           " B=" + std::to_string(census.b) + " C=" + std::to_string(census.c) +
           " (first ppc " + first_ppc_text(total, cap) + ")";
}

// Child types each parent type must produce, sorted.
constexpr PpcType kFanOutA[] = {PpcType::A, PpcType::B, PpcType::C, PpcType::C};
constexpr PpcType kFanOutB[] = {PpcType::A, PpcType::B};
constexpr PpcType kFanOutC[] = {PpcType::A, PpcType::B, PpcType::C};

std::span<const PpcType> expected_fan_out(PpcType t) {
    switch (t) {
        case PpcType::A: return kFanOutA;
        case PpcType::B: return kFanOutB;
        case PpcType::C: return kFanOutC;
    }
    return {};
}

std::string type_list(std::span<const PpcType> types) {
    std::string out;
    for (PpcType t : types) out.push_back(to_char(t));
    return out;
}

std::string check_fan_out(std::uint64_t total, std::uint64_t cap) {
    std::string failure;
    for (auto s = enumerate_ppcs(total, cap); s.done() == false; s.advance()) {
        const Composition parent = s.current();
        std::vector<PpcType> child_types;
        for (const Production& prod : produce(parent)) child_types.push_back(classify(prod.child));
        std::sort(child_types.begin(), child_types.end());
        const auto expected = expected_fan_out(classify(parent));
        if (!std::equal(child_types.begin(), child_types.end(), expected.begin(),
                        expected.end())) {
            failure = "total=" + std::to_string(total) + ": " + to_string(parent) +
                      " produced types " + type_list(child_types) + ", expected " +
                      type_list(expected);
            break;
        }
    }
    return failure;
}

std::string check_round_trip(std::uint64_t total, std::uint64_t cap) {
    std::string failure;
    for (auto s = enumerate_ppcs(total, cap); s.done() == false; s.advance()) {
        const Composition child = s.current();
        const Production prod = parent_of(child);
        if (apply_rule(prod.parent, prod.rule) != child) {
            failure = "total=" + std::to_string(total) + ": parent_of(" + to_string(child) +
                      ") = (" + to_string(prod.parent) + ", " +
                      std::string(to_string(prod.rule)) + ") does not reproduce it";
            break;
        }
    }
    return failure;
}

std::string run_task(const Task& task, std::uint64_t cap) {
    switch (task.kind) {
        case CheckKind::Counts: return check_counts(task.total, cap);
        case CheckKind::Bijection: return check_bijection(task.total, cap);
        case CheckKind::Thirds: return check_thirds(task.total, cap);
        case CheckKind::FanOut: return check_fan_out(task.total, cap);
        case CheckKind::RoundTrip: return check_round_trip(task.total, cap);
    }
    return "unknown check";
}

struct KindSpec {
    CheckKind kind;
    const char* name;
    const char* range_label;
    std::uint64_t lo;
    std::uint64_t hi;  // inclusive
};

}  // namespace

VerifyReport run_verification(std::uint64_t max_total, unsigned jobs, std::uint64_t cap) {
    if (max_total < 4 || max_total > cap)
        throw NOutOfRange("max_total must be in [4, cap], got " + std::to_string(max_total));
    if (jobs == 0) jobs = 1;

    const KindSpec kinds[] = {
        {CheckKind::Counts, "count-matches-formula", "totals", 2, max_total},
        {CheckKind::Bijection, "produced-exactly-once", "parent-totals", 2, max_total - 2},
        {CheckKind::Thirds, "thirds-census", "totals", 4, max_total},
        {CheckKind::FanOut, "fan-out-table", "parent-totals", 2, max_total - 2},
        {CheckKind::RoundTrip, "parent-round-trip", "child-totals", 4, max_total},
    };

    std::vector<Task> tasks;
    for (const KindSpec& spec : kinds)
        for (std::uint64_t total = spec.lo; total <= spec.hi; ++total)
            tasks.push_back({spec.kind, total});

    std::vector<std::string> failures(tasks.size());
    if (jobs == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) failures[i] = run_task(tasks[i], cap);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                failures[i] = run_task(tasks[i], cap);
        };
        std::vector<std::thread> threads;
        const unsigned workers = std::min<std::size_t>(jobs, tasks.size());
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }

    VerifyReport report;
    report.max_total = max_total;
    report.cap = cap;
    std::size_t index = 0;
    for (const KindSpec& spec : kinds) {
        VerifyCheck check;
        check.name = spec.name;
        check.range_label = spec.range_label;
        check.lo = spec.lo;
        check.hi = spec.hi;
        for (std::uint64_t total = spec.lo; total <= spec.hi; ++total, ++index) {
            if (!failures[index].empty() && check.pass) {
                check.pass = false;
                check.counterexample = failures[index];
            }
        }
        report.pass = report.pass && check.pass;
        report.checks.push_back(std::move(check));
    }
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::string out = "verify max_total=" + std::to_string(report.max_total) +
                      " cap=" + std::to_string(report.cap) + "\n";
    for (const VerifyCheck& check : report.checks) {
        out += "check " + check.name + " " + check.range_label + " " + std::to_string(check.lo) +
               ".." + std::to_string(check.hi);
        if (check.pass) {
            out += " pass\n";
        } else {
            out += " FAIL (" + check.counterexample + ")\n";
        }
    }
    out += report.pass ? "overall pass\n" : "overall FAIL\n";
    return out;
}

}  // namespace ppc
