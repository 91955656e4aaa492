#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latcut/cutsets.hpp"
#include "latcut/generators.hpp"
#include "latcut/io.hpp"
#include "latcut/lattice.hpp"
#include "latcut/levels.hpp"
#include "latcut/poset.hpp"

namespace {

using namespace latcut;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_input(const std::string& file) {
    if (file == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) throw ParamError("cannot open input file: " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& file, const std::string& data) {
    if (file.empty() || file == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(file, std::ios::binary);
    if (!out) throw ParamError("cannot open output file: " + file);
    out << data;
}

FinitePoset load_poset(const std::string& file) {
    auto result = parse_document(read_input(file));
    if (result.normalized)
        std::cerr << "warning: redundant cover pairs were reduced away\n";
    return std::move(result.poset);
}

Budget make_budget(std::optional<std::size_t> flag) {
    if (flag) return Budget::scaled(*flag);
    if (const char* env = std::getenv("LATCUT_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0)
            return Budget::scaled(static_cast<std::size_t>(v));
        std::cerr << "warning: ignoring malformed LATCUT_BUDGET\n";
    }
    return Budget{};
}

std::vector<int> parse_id_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw ParamError("");
        } catch (const std::exception&) {
            throw ParamError("invalid element list: " + s);
        }
    }
    return out;
}

std::string join_ids(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(v[i]);
    }
    return s;
}

ordered_json report_json(const AnalysisReport& r) {
    ordered_json j;
    j["holds"] = r.holds;
    j["level_classes"] = r.level_classes;
    j["cutsets"] = r.cutsets;
    auto mm = ordered_json::array();
    for (const auto& m : r.mismatches) {
        ordered_json e;
        e["set"] = m.set;
        if (m.kind == MismatchKind::level_not_cutset) {
            e["kind"] = "level_not_cutset";
            e["chain"] = m.chain;
        } else {
            e["kind"] = "cutset_not_level";
            e["elements"] = {m.elements.first, m.elements.second};
        }
        mm.push_back(std::move(e));
    }
    j["mismatches"] = std::move(mm);
    return j;
}

void print_report(const AnalysisReport& r) {
    std::cout << "holds: " << (r.holds ? "true" : "false") << "\n";
    std::cout << "level classes (" << r.level_classes.size() << "):\n";
    for (const auto& c : r.level_classes)
        std::cout << "  {" << join_ids(c) << "}\n";
    std::cout << "antichain cutsets (" << r.cutsets.size() << "):\n";
    for (const auto& c : r.cutsets) std::cout << "  {" << join_ids(c) << "}\n";
    for (const auto& m : r.mismatches) {
        if (m.kind == MismatchKind::level_not_cutset)
            std::cout << "mismatch: level {" << join_ids(m.set)
                      << "} is not a cutset; offending chain "
                      << join_ids(m.chain) << "\n";
        else
            std::cout << "mismatch: cutset {" << join_ids(m.set)
                      << "} is not a level class; elements "
                      << m.elements.first << " and " << m.elements.second
                      << " lie in different classes\n";
    }
}

int run(int argc, char** argv) {
    CLI::App app{"latcut: level classes and antichain cutsets in finite "
                 "lattices"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a poset document");
    std::string gen_kind, gen_out = "-";
    std::vector<std::string> gen_params;
    std::optional<std::uint64_t> gen_seed;
    gen->add_option("kind", gen_kind, "generator kind")->required();
    gen->add_option("params", gen_params, "generator parameters");
    gen->add_option("--seed", gen_seed, "seed for random kinds");
    gen->add_option("-o,--output", gen_out, "output file, - for stdout");

    // shared inputs
    std::string file = "-";
    bool as_json = false;
    std::optional<std::size_t> budget_flag;

    auto* check = app.add_subcommand("check", "check structural properties");
    bool f_lattice = false, f_semi = false, f_jd = false;
    check->add_option("file", file, "input document, - for stdin");
    check->add_flag("--lattice", f_lattice, "check lattice property");
    check->add_flag("--semimodular", f_semi, "check lower covering condition");
    check->add_flag("--jd", f_jd, "check the Jordan-Dedekind condition");
    check->add_flag("--json", as_json, "machine-readable output");

    auto* levels_cmd = app.add_subcommand("levels", "print level classes");
    levels_cmd->add_option("file", file);
    levels_cmd->add_flag("--json", as_json);

    auto* cutsets_cmd =
        app.add_subcommand("cutsets", "enumerate antichain cutsets");
    cutsets_cmd->add_option("file", file);
    cutsets_cmd->add_option("--budget", budget_flag, "enumeration budget");
    cutsets_cmd->add_flag("--json", as_json);

    auto* verify = app.add_subcommand(
        "verify", "compare level classes against antichain cutsets");
    bool unchecked = false;
    verify->add_option("file", file);
    verify->add_flag("--unchecked", unchecked,
                     "skip the semimodularity gate");
    verify->add_option("--budget", budget_flag, "enumeration budget");
    verify->add_flag("--json", as_json);

    auto* witness = app.add_subcommand(
        "witness", "build a maximal chain avoiding a non-level antichain");
    std::string set_arg;
    witness->add_option("file", file);
    witness->add_option("--set", set_arg, "comma-separated element ids")
        ->required();
    witness->add_flag("--json", as_json);

    auto* dot = app.add_subcommand("dot", "emit a Graphviz Hasse diagram");
    std::string dot_out = "-";
    bool dot_levels = false;
    std::vector<std::string> dot_sets;
    dot->add_option("file", file);
    dot->add_flag("--levels", dot_levels, "group ranks by level class");
    dot->add_option("--set", dot_sets, "highlight set (repeatable)");
    dot->add_option("-o,--output", dot_out, "output file, - for stdout");

    CLI11_PARSE(app, argc, argv);

    if (gen->parsed()) {
        GeneratorSpec spec{gen_kind, gen_params, gen_seed};
        write_output(gen_out, emit_document(generate(spec)));
        return kExitOk;
    }

    if (check->parsed()) {
        FinitePoset p = load_poset(file);
        if (!f_lattice && !f_semi && !f_jd) f_lattice = f_semi = f_jd = true;
        bool all = true;
        ordered_json j;
        if (f_lattice) {
            bool ok = is_lattice(p);
            all &= ok;
            j["lattice"] = ok;
            if (!as_json)
                std::cout << "lattice: " << (ok ? "true" : "false") << "\n";
        }
        if (f_semi) {
            bool ok = false;
            std::pair<int, int> wit{-1, -1};
            if (is_lattice(p)) {
                auto sm = check_semimodular(p);
                ok = sm.ok;
                wit = sm.witness;
            }
            all &= ok;
            j["semimodular"] = ok;
            if (!ok && wit.first >= 0)
                j["witness"] = {wit.first, wit.second};
            if (!as_json) {
                std::cout << "semimodular: " << (ok ? "true" : "false");
                if (!ok && wit.first >= 0)
                    std::cout << " (witness x=" << wit.first
                              << " y=" << wit.second << ")";
                std::cout << "\n";
            }
        }
        if (f_jd) {
            auto jd = check_jordan_dedekind(p);
            all &= jd.ok;
            j["jordan_dedekind"] = jd.ok;
            if (!jd.ok) {
                j["interval"] = {jd.interval.first, jd.interval.second};
                j["chains"] = {jd.chain_a, jd.chain_b};
            }
            if (!as_json) {
                std::cout << "jordan_dedekind: "
                          << (jd.ok ? "true" : "false");
                if (!jd.ok)
                    std::cout << " (interval [" << jd.interval.first << ","
                              << jd.interval.second << "], chains "
                              << join_ids(jd.chain_a) << " / "
                              << join_ids(jd.chain_b) << ")";
                std::cout << "\n";
            }
        }
        if (as_json) std::cout << j.dump() << "\n";
        return all ? kExitOk : kExitFalse;
    }

    if (levels_cmd->parsed()) {
        FinitePoset p = load_poset(file);
        auto part = level_classes(p);
        if (as_json) {
            ordered_json j;
            j["classes"] = part.classes;
            std::cout << j.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < part.classes.size(); ++i)
                std::cout << "class " << i << ": {"
                          << join_ids(part.classes[i]) << "}\n";
        }
        return kExitOk;
    }

    if (cutsets_cmd->parsed()) {
        FinitePoset p = load_poset(file);
        auto cuts = enumerate_antichain_cutsets(p, make_budget(budget_flag));
        if (as_json) {
            ordered_json j;
            j["cutsets"] = cuts;
            std::cout << j.dump() << "\n";
        } else {
            for (const auto& c : cuts)
                std::cout << "{" << join_ids(c) << "}\n";
        }
        return kExitOk;
    }

    if (verify->parsed()) {
        FinitePoset p = load_poset(file);
        Budget budget = make_budget(budget_flag);
        AnalysisReport report =
            unchecked ? compare_unchecked(p, budget) : verify_theorem(p, budget);
        if (as_json)
            std::cout << report_json(report).dump() << "\n";
        else
            print_report(report);
        return report.holds ? kExitOk : kExitFalse;
    }

    if (witness->parsed()) {
        FinitePoset p = load_poset(file);
        try {
            WitnessChain wit = proof_witness_chain(p, parse_id_list(set_arg));
            if (as_json) {
                ordered_json j;
                j["chain"] = wit.chain;
                if (wit.config) {
                    const auto& c = *wit.config;
                    j["config"] = {{"a", c.a}, {"b", c.b}, {"x", c.x},
                                   {"y", c.y}, {"z", c.z}, {"w", c.w}};
                }
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "chain: " << join_ids(wit.chain) << "\n";
                if (wit.config) {
                    const auto& c = *wit.config;
                    std::cout << "config: a=" << c.a << " b=" << c.b
                              << " x=" << c.x << " y=" << c.y << " z=" << c.z
                              << " w=" << c.w << "\n";
                }
            }
        } catch (const IsLevelClassError& e) {
            std::cerr << "no witness: " << e.what() << "\n";
            return kExitFalse;
        }
        return kExitOk;
    }

    if (dot->parsed()) {
        FinitePoset p = load_poset(file);
        std::vector<std::vector<int>> highlight;
        for (const auto& s : dot_sets) highlight.push_back(parse_id_list(s));
        write_output(dot_out, emit_dot(p, highlight, dot_levels));
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
