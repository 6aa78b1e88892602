#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ppc/composition.hpp"
#include "ppc/oracle.hpp"
#include "ppc/production.hpp"
#include "ppc/verify.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json composition_record(const ppc::Composition& c) {
    ordered_json j;
    j["n"] = c.total();
    j["parts"] = c.parts();
    const bool palindrome = ppc::is_ppc(c);
    j["ppc"] = palindrome;
    if (palindrome) j["type"] = std::string(1, ppc::to_char(ppc::classify(c)));
    return j;
}

template <typename Stream>
void emit_stream(Stream& stream, const std::string& fmt, bool compact) {
    for (; !stream.done(); stream.advance()) {
        const ppc::Composition c = stream.current();
        if (fmt == "json")
            std::cout << composition_record(c).dump() << '\n';
        else
            std::cout << ppc::format(c, compact) << '\n';
    }
}

int cmd_enum(std::uint64_t n, bool ppc_only, const std::string& fmt, bool compact,
             std::uint64_t cap) {
    if (ppc_only) {
        auto stream = ppc::enumerate_ppcs(n, cap);
        emit_stream(stream, fmt, compact);
    } else {
        auto stream = ppc::enumerate_compositions(n, cap);
        emit_stream(stream, fmt, compact);
    }
    return 0;
}

int cmd_count(std::uint64_t n, const std::string& method, std::uint64_t cap) {
    if (method == "brute") {
        std::cout << ppc::count_ppcs_brute(n, cap) << '\n';
        return 0;
    }
    if (method == "formula") {
        std::cout << ppc::count_ppcs_formula(n) << '\n';
        return 0;
    }
    const std::uint64_t brute = ppc::count_ppcs_brute(n, cap);
    const std::uint64_t formula = ppc::count_ppcs_formula(n);
    std::cout << brute << ' ' << formula << '\n';
    return brute == formula ? 0 : 1;
}

int cmd_classify(const std::string& text) {
    const ppc::Composition c = ppc::parse_composition(text);
    std::cout << ppc::to_char(ppc::classify(c)) << '\n';
    return 0;
}

int cmd_produce(const std::string& text, bool compact) {
    const ppc::Composition c = ppc::parse_composition(text);
    for (const ppc::Production& prod : ppc::produce(c))
        std::cout << ppc::to_string(prod.rule) << ' ' << ppc::format(prod.child, compact)
                  << '\n';
    return 0;
}

void emit_forest_text(const std::vector<ppc::ForestLevel>& forest, ppc::Parity parity,
                      std::uint64_t max_total, bool compact) {
    std::cout << "parity " << ppc::to_string(parity) << " max_total " << max_total << '\n';
    for (const ppc::ForestLevel& level : forest) {
        std::cout << "total " << level.total << ": " << level.members.size() << " ppcs\n";
        for (std::size_t i = 0; i < level.members.size(); ++i) {
            std::cout << "  " << ppc::format(level.members[i], compact);
            if (!level.provenance.empty()) {
                const ppc::Production& prod = level.provenance[i];
                std::cout << " (" << ppc::to_string(prod.rule) << " from "
                          << ppc::format(prod.parent, compact) << ")";
            }
            std::cout << '\n';
        }
    }
}

void emit_forest_json(const std::vector<ppc::ForestLevel>& forest, ppc::Parity parity,
                      std::uint64_t max_total) {
    ordered_json doc;
    doc["parity"] = std::string(ppc::to_string(parity));
    doc["max_total"] = max_total;
    doc["levels"] = ordered_json::array();
    for (const ppc::ForestLevel& level : forest) {
        ordered_json jl;
        jl["total"] = level.total;
        jl["members"] = ordered_json::array();
        for (const ppc::Composition& m : level.members)
            jl["members"].push_back(composition_record(m));
        jl["productions"] = ordered_json::array();
        for (const ppc::Production& prod : level.provenance) {
            ordered_json jp;
            jp["parent"] = ppc::to_string(prod.parent);
            jp["rule"] = std::string(ppc::to_string(prod.rule));
            jp["child"] = ppc::to_string(prod.child);
            jl["productions"].push_back(std::move(jp));
        }
        doc["levels"].push_back(std::move(jl));
    }
    std::cout << doc.dump(2) << '\n';
}

// Node identity is the canonical serialization; labels prefer compact text.
void emit_forest_dot(const std::vector<ppc::ForestLevel>& forest) {
    std::cout << "digraph ppc_forest {\n  rankdir=TB;\n";
    for (const ppc::ForestLevel& level : forest)
        for (const ppc::Composition& m : level.members)
            std::cout << "  \"" << ppc::to_string(m) << "\" [label=\"" << ppc::format(m, true)
                      << "\"];\n";
    for (const ppc::ForestLevel& level : forest)
        for (const ppc::Production& prod : level.provenance)
            std::cout << "  \"" << ppc::to_string(prod.parent) << "\" -> \""
                      << ppc::to_string(prod.child) << "\" [label=\""
                      << ppc::to_string(prod.rule) << "\"];\n";
    std::cout << "}\n";
}

int cmd_forest(const std::string& parity_text, std::uint64_t max_total, const std::string& fmt,
               bool compact) {
    ppc::Parity parity;
    if (parity_text == "even") {
        parity = ppc::Parity::Even;
    } else if (parity_text == "odd") {
        parity = ppc::Parity::Odd;
    } else {
        std::cerr << "parity must be 'even' or 'odd'\n";
        return 2;
    }
    const std::uint64_t seed_total = parity == ppc::Parity::Even ? 2 : 3;
    if (max_total < seed_total || ppc::parity_of(max_total) != parity) {
        std::cerr << "max_total must be a " << parity_text << " number >= " << seed_total
                  << '\n';
        return 2;
    }
    const auto forest = ppc::build_forest(parity, max_total);
    if (fmt == "json")
        emit_forest_json(forest, parity, max_total);
    else if (fmt == "dot")
        emit_forest_dot(forest);
    else
        emit_forest_text(forest, parity, max_total, compact);
    return 0;
}

int cmd_verify(std::uint64_t max_total, unsigned jobs, std::uint64_t cap) {
    const ppc::VerifyReport report = ppc::run_verification(max_total, jobs, cap);
    std::cout << ppc::format_report(report);
    return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parity palindrome compositions: enumeration, production rules, verification"};
    app.require_subcommand(1);

    std::uint64_t cap = ppc::kDefaultCap;
    bool compact = false;
    app.add_option("--cap", cap, "enumeration cap for totals")
        ->capture_default_str()
        ->check(CLI::Range(std::uint64_t{1}, ppc::kMaxCap));
    app.add_flag("--compact", compact,
                 "print digit-string form when every part is a single digit");

    auto* enum_cmd = app.add_subcommand("enum", "list compositions of n in gap-bitmask order");
    enum_cmd->fallthrough();
    std::uint64_t enum_n = 0;
    bool ppc_only = false;
    std::string enum_fmt = "text";
    enum_cmd->add_option("n", enum_n, "total to enumerate")->required();
    enum_cmd->add_flag("--ppc-only", ppc_only, "only parity palindrome compositions");
    enum_cmd->add_option("--format", enum_fmt, "text or json (one record per line)")
        ->check(CLI::IsMember({"text", "json"}));

    auto* count_cmd = app.add_subcommand("count", "count parity palindrome compositions of n");
    count_cmd->fallthrough();
    std::uint64_t count_n = 0;
    std::string method = "both";
    count_cmd->add_option("n", count_n, "total to count")->required();
    count_cmd->add_option("--method", method, "brute, formula, or both")
        ->capture_default_str()
        ->check(CLI::IsMember({"brute", "formula", "both"}));

    auto* classify_cmd =
        app.add_subcommand("classify", "print the type (A, B, or C) of a ppc");
    classify_cmd->fallthrough();
    std::string classify_text;
    classify_cmd->add_option("composition", classify_text, "canonical or compact text")
        ->required();

    auto* produce_cmd = app.add_subcommand("produce", "list the productions of a ppc");
    produce_cmd->fallthrough();
    std::string produce_text;
    produce_cmd->add_option("composition", produce_text, "canonical or compact text")
        ->required();

    auto* forest_cmd =
        app.add_subcommand("forest", "grow the production forest from the seed ppcs");
    forest_cmd->fallthrough();
    std::string parity_text;
    std::uint64_t forest_max = 0;
    std::string forest_fmt = "text";
    forest_cmd->add_option("parity", parity_text, "even or odd")->required();
    forest_cmd->add_option("max_total", forest_max, "largest total to expand to")->required();
    forest_cmd->add_option("--format", forest_fmt, "text, json, or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    auto* verify_cmd =
        app.add_subcommand("verify", "run the full verification suite up to a total");
    verify_cmd->fallthrough();
    std::uint64_t verify_max = 16;
    unsigned jobs = 1;
    verify_cmd->add_option("--max", verify_max, "largest total to verify")
        ->capture_default_str();
    verify_cmd->add_option("--jobs", jobs, "worker threads")
        ->capture_default_str()
        ->check(CLI::Range(1u, 512u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(enum_cmd)) return cmd_enum(enum_n, ppc_only, enum_fmt, compact, cap);
        if (app.got_subcommand(count_cmd)) return cmd_count(count_n, method, cap);
        if (app.got_subcommand(classify_cmd)) return cmd_classify(classify_text);
        if (app.got_subcommand(produce_cmd)) return cmd_produce(produce_text, compact);
        if (app.got_subcommand(forest_cmd))
            return cmd_forest(parity_text, forest_max, forest_fmt, compact);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(verify_max, jobs, cap);
    } catch (const ppc::NotAPpc&) {
        std::cerr << "not a ppc\n";
        return 1;
    } catch (const ppc::TotalTooSmall& e) {
        std::cerr << "total too small: " << e.what() << '\n';
        return 1;
    } catch (const ppc::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const ppc::InvalidComposition& e) {
        std::cerr << "invalid composition: " << e.what() << '\n';
        return 2;
    } catch (const ppc::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
