#include "CLI11.hpp"
#include "json.hpp"

#include "sct/cumulants.hpp"
#include "sct/ncpart.hpp"
#include "sct/nsym.hpp"
#include "sct/series.hpp"
#include "sct/symfun.hpp"
#include "sct/tree.hpp"
#include "sct/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kDefaultCap = 10;

struct Output {
    std::string format = "text";
    std::string command;
    json params = json::object();

    // text mode prints the lines; json mode wraps them with the run metadata
    int emit(const std::vector<std::string>& lines, json result = json::object()) const {
        if (format == "json") {
            std::string text;
            for (std::size_t i = 0; i < lines.size(); ++i) {
                if (i) text += "\n";
                text += lines[i];
            }
            result["text"] = text;
            json doc = {{"command", command},
                        {"params", params},
                        {"result", result},
                        {"version", kVersion}};
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const auto& line : lines) std::cout << line << "\n";
        }
        return 0;
    }
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return 2;
}

// cap resolution: --max-weight flag, then SCT_MAX_WEIGHT, then the default
std::optional<int> resolve_cap(const std::optional<int>& flag, std::string& err) {
    if (flag) return flag;
    const char* env = std::getenv("SCT_MAX_WEIGHT");
    if (!env) return kDefaultCap;
    try {
        std::size_t used = 0;
        int v = std::stoi(env, &used);
        if (used != std::string(env).size() || v < 0) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        err = "SCT_MAX_WEIGHT must be a nonnegative integer, got \"" + std::string(env) + "\"";
        return std::nullopt;
    }
}

std::string word_str(const sct::Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(int(w[i]));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for Schroeder tree series, free cumulants and"
                 " noncommutative symmetric functions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Output out;
    std::optional<int> cap_flag;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--max-weight", cap_flag, "truncation cap on weights (default 10,"
                                             " or the SCT_MAX_WEIGHT environment variable)")
        ->check(CLI::NonNegativeNumber);

    std::string kind = "all", name, what, basis = "S", mode, op, set_arg, lower, upper;
    std::string suite = "all";
    int weight = 6, degree = 0, nval = 0;

    // let the global --format / --max-weight flags appear after the subcommand too
    app.fallthrough();

    CLI::App* c_enum = app.add_subcommand("enumerate", "list trees of one weight");
    c_enum->add_option("--kind", kind, "all, prime, left-directed, right-directed, binary")
        ->capture_default_str();
    c_enum->add_option("--weight", weight)->required()->check(CLI::NonNegativeNumber);

    CLI::App* c_series = app.add_subcommand("series", "print a named tree series");
    c_series->add_option("--name", name, "fc, gc, kappa, ldst")
        ->required()
        ->check(CLI::IsMember({"fc", "gc", "kappa", "ldst"}));
    c_series->add_option("--weight", weight)->required()->check(CLI::NonNegativeNumber);

    CLI::App* c_nsym = app.add_subcommand("nsym", "homogeneous noncommutative symmetric"
                                                  " function expansions");
    c_nsym->add_option("--what", what, "g, K, s-in-K")
        ->required()
        ->check(CLI::IsMember({"g", "K", "s-in-K"}));
    c_nsym->add_option("--degree", degree)->required()->check(CLI::PositiveNumber);
    c_nsym->add_option("--basis", basis, "S, L, R")
        ->check(CLI::IsMember({"S", "L", "R"}))
        ->capture_default_str();

    CLI::App* c_cum = app.add_subcommand("cumulant", "free cumulant of n arguments");
    c_cum->add_option("--n", nval)->required()->check(CLI::PositiveNumber);
    c_cum->add_option("--mode", mode, "operator, bimodule, scalar, speicher")
        ->required()
        ->check(CLI::IsMember({"operator", "bimodule", "scalar", "speicher"}));

    CLI::App* c_cls = app.add_subcommand("classical", "cumulants of the one variable"
                                                      " moment series");
    c_cls->add_option("--n", nval)->required()->check(CLI::PositiveNumber);

    CLI::App* c_part = app.add_subcommand("partition", "noncrossing partition operations");
    c_part->add_option("--op", op, "kreweras, moebius")
        ->required()
        ->check(CLI::IsMember({"kreweras", "moebius"}));
    c_part->add_option("--set", set_arg, "partition literal like 1,4|2,3");
    c_part->add_option("--lower", lower, "lower partition for moebius");
    c_part->add_option("--upper", upper, "upper partition for moebius");

    CLI::App* c_verify = app.add_subcommand("verify", "run an invariant suite");
    {
        std::ostringstream names;
        for (const auto& s : sct::verify_suites()) names << s << " ";
        c_verify->add_option("--suite", suite, "one of: " + names.str())->capture_default_str();
    }
    c_verify->add_option("--weight", weight, "bound for the exhaustive ranges")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string cap_err;
    std::optional<int> cap = resolve_cap(cap_flag, cap_err);
    if (!cap) return usage_error(cap_err);
    auto check_cap = [&](const char* flag_name, int v) {
        if (v <= *cap) return true;
        std::cerr << "error: " << flag_name << " " << v << " exceeds the configured cap "
                  << *cap << " (raise it with --max-weight or SCT_MAX_WEIGHT)\n";
        return false;
    };

    try {
        if (*c_enum) {
            if (!check_cap("--weight", weight)) return 2;
            out.command = "enumerate";
            out.params = {{"kind", kind}, {"weight", weight}};
            const auto& trees = sct::enumerate_trees(sct::tree_kind_from_name(kind), weight);
            std::vector<std::string> lines;
            for (const auto& t : trees) lines.push_back(word_str(t.word()));
            return out.emit(lines, {{"trees", lines}, {"count", lines.size()}});
        }

        if (*c_series) {
            if (!check_cap("--weight", weight)) return 2;
            out.command = "series";
            out.params = {{"name", name}, {"weight", weight}};
            sct::TreeSeries s(weight);
            if (name == "fc") s = sct::corolla_series(weight);
            if (name == "gc") s = sct::signed_tree_series(weight);
            if (name == "kappa") s = sct::kappa_series(weight);
            if (name == "ldst") s = sct::left_directed_series(weight);
            return out.emit({s.str()});
        }

        if (*c_nsym) {
            if (!check_cap("--degree", degree)) return 2;
            out.command = "nsym";
            out.params = {{"what", what}, {"degree", degree}, {"basis", basis}};
            sct::NBasis b = basis == "S"   ? sct::NBasis::S
                            : basis == "L" ? sct::NBasis::L
                                           : sct::NBasis::R;
            std::string text;
            if (what == "g")
                text = sct::convert(sct::lagrange_g(degree).graded_part(degree), b).str();
            else if (what == "K")
                text = sct::convert(
                           sct::cumulant_K(degree, sct::KMethod::solve).graded_part(degree), b)
                           .str();
            else
                text = sct::s_in_K(degree).str(); // lives in the cumulant alphabet as is
            return out.emit({text});
        }

        if (*c_cum) {
            if (!check_cap("--n", nval)) return 2;
            out.command = "cumulant";
            out.params = {{"n", nval}, {"mode", mode}};
            std::string text;
            if (mode == "operator")
                text = sct::kappa_eval(nval, sct::EvalMode::nested).str();
            else if (mode == "bimodule")
                text = sct::kappa_eval(nval, sct::EvalMode::bimodule).str();
            else if (mode == "scalar")
                text = sct::kappa_eval_scalar(nval).str();
            else
                text = sct::speicher_kappa(nval).str();
            return out.emit({text});
        }

        if (*c_cls) {
            if (!check_cap("--n", nval)) return 2;
            out.command = "classical";
            out.params = {{"n", nval}};
            std::vector<sct::Poly> ks = sct::classical_cumulants(nval);
            std::vector<std::string> lines;
            json items = json::array();
            for (int n = 1; n <= nval; ++n) {
                std::string body = ks[std::size_t(n - 1)].str();
                lines.push_back("k" + std::to_string(n) + " = " + body);
                items.push_back({{"n", n}, {"value", body}});
            }
            return out.emit(lines, {{"cumulants", items}});
        }

        if (*c_part) {
            out.command = "partition";
            if (op == "kreweras") {
                if (set_arg.empty()) return usage_error("partition --op kreweras needs --set");
                out.params = {{"op", op}, {"set", set_arg}};
                sct::Partition p = sct::Partition::parse(set_arg);
                return out.emit({sct::kreweras(p).to_string()});
            }
            if (lower.empty() || upper.empty())
                return usage_error("partition --op moebius needs --lower and --upper");
            out.params = {{"op", op}, {"lower", lower}, {"upper", upper}};
            sct::Partition a = sct::Partition::parse(lower);
            sct::Partition b = sct::Partition::parse(upper);
            long long mu = sct::moebius_nc(a, b);
            return out.emit({std::to_string(mu)}, {{"value", mu}});
        }

        // verify
        if (!check_cap("--weight", weight)) return 2;
        out.command = "verify";
        out.params = {{"suite", suite}, {"weight", weight}};
        std::vector<sct::CheckResult> results = sct::run_suite(suite, weight);
        std::vector<std::string> lines;
        json checks = json::array();
        std::size_t passed = 0;
        for (const auto& r : results) {
            passed += r.ok;
            lines.push_back(std::string(r.ok ? "ok   " : "FAIL ") + r.name);
            checks.push_back({{"name", r.name}, {"ok", r.ok}});
        }
        lines.push_back("passed " + std::to_string(passed) + " of " +
                        std::to_string(results.size()) + " checks");
        int rc = out.emit(lines, {{"checks", checks},
                                  {"passed", passed},
                                  {"total", results.size()}});
        return passed == results.size() ? rc : 1;
    } catch (const std::exception& e) {
        return usage_error(e.what());
    }
}
