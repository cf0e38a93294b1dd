// rgrec: command-line front end for the F_{g,n} / N_{g,n} engine.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rgrec/analysis.hpp"
#include "rgrec/errors.hpp"
#include "rgrec/lattice_count.hpp"
#include "rgrec/poly_format.hpp"
#include "rgrec/poly_json.hpp"
#include "rgrec/recursion.hpp"
#include "rgrec/ribbon_graph.hpp"

namespace {

using namespace rgrec;

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kInvalidInput = 2,
    kInvariantFailure = 3,
    kGuardExceeded = 4,
};

struct RunConfig {
    int g = -1;
    int n = -1;
    std::string p;
    std::optional<int> box;
    std::optional<unsigned> truncation;
    std::string cache_dir;
    std::string format;
    std::string suite = "all";
    int guard_e = 6;
};

std::optional<std::filesystem::path> resolve_cache_dir(const RunConfig& cfg)
{
    std::string dir = cfg.cache_dir;
    if (dir.empty())
        if (const char* env = std::getenv("RGREC_CACHE_DIR")) dir = env;
    if (dir.empty()) return std::nullopt;
    std::filesystem::create_directories(dir);
    return std::filesystem::path(dir);
}

std::vector<int> parse_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("cannot parse perimeter entry '" + item + "'");
        }
    }
    return out;
}

std::string tsv_poly(const LaurentPoly& F)
{
    std::ostringstream os;
    for (const auto& [e, c] : F.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) os << e[i] << '\t';
        os << c.to_string() << '\n';
    }
    return os.str();
}

int cmd_compute_f(const RunConfig& cfg)
{
    recursion::RecursionEngine engine(resolve_cache_dir(cfg));
    const auto F = engine.compute(cfg.g, cfg.n);
    const std::string& fmt = cfg.format.empty() ? std::string("json") : cfg.format;
    if (fmt == "json")
        std::cout << to_canonical_json(*F) << '\n';
    else if (fmt == "latex")
        std::cout << to_latex(*F) << '\n';
    else if (fmt == "pretty")
        std::cout << to_pretty(*F) << '\n';
    else
        std::cout << tsv_poly(*F);
    return kOk;
}

int cmd_compute_n(const RunConfig& cfg)
{
    recursion::FgnKey::make(cfg.g, cfg.n);
    if (cfg.p.empty() == !cfg.box) throw DomainError("give exactly one of --p and --box");
    std::vector<std::vector<int>> points;
    if (cfg.box) {
        if (*cfg.box < 1) throw DomainError("--box must be positive");
        points = lattice::perimeter_box(cfg.n, *cfg.box);
    } else {
        points.push_back(parse_list(cfg.p));
    }
    lattice::LatticeCounter counter;
    std::vector<BigRational> values;
    for (const auto& p : points) values.push_back(counter.compute(cfg.g, cfg.n, p));

    const std::string fmt = cfg.format.empty() ? (cfg.box ? "tsv" : "pretty") : cfg.format;
    if (fmt == "json") {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < points.size(); ++i)
            out.push_back({{"key", lattice::CountKey{cfg.g, cfg.n, points[i]}.to_string()}, {"value", values[i].to_string()}});
        std::cout << (cfg.box ? out.dump(2) : out[0].dump(2)) << '\n';
    } else if (fmt == "pretty" && !cfg.box) {
        std::cout << values[0].to_short_string() << '\n';
    } else {
        for (std::size_t i = 0; i < points.size(); ++i) {
            std::cout << cfg.g << '\t' << cfg.n;
            for (int v : points[i]) std::cout << '\t' << v;
            std::cout << '\t' << values[i].to_short_string() << '\n';
        }
    }
    return kOk;
}

analysis::Report oracle_report(int g, int n, const LaurentPoly& F, lattice::LatticeCounter& counter, int guard_e)
{
    analysis::Report report;
    const auto records = graphs::enumerate_ribbon_graphs(g, n, guard_e);

    const LaurentPoly oracle = graphs::oracle_F(records, n);
    report.add({"oracle_F", g, n, oracle == F, std::to_string(records.size()) + " face-labeled graphs"});

    const BigRational chi = graphs::oracle_euler(records);
    const BigRational expected = BigRational(n % 2 == 0 ? 1 : -1) * analysis::euler_char_HZ(g, n);
    report.add({"oracle_euler", g, n, chi == expected, "graph sum " + chi.to_short_string() + ", expected " + expected.to_short_string()});

    constexpr int kMaxSum = 20;
    const auto table = graphs::oracle_N_table(records, kMaxSum);
    std::string mismatch;
    std::size_t compared = 0;
    for (const auto& p : lattice::perimeter_box(n, kMaxSum - n + 1)) {
        int sum = 0;
        for (int v : p) sum += v;
        if (sum > kMaxSum) continue;
        const auto it = table.find(p);
        const BigRational brute = it == table.end() ? BigRational(0) : it->second;
        const BigRational recursive = counter.compute(g, n, p);
        ++compared;
        if (brute != recursive && mismatch.empty())
            mismatch = lattice::CountKey{g, n, p}.to_string() + ": oracle " + brute.to_short_string() + ", recursion " +
                       recursive.to_short_string();
    }
    report.add({"oracle_N", g, n, mismatch.empty(),
                mismatch.empty() ? std::to_string(compared) + " perimeter vectors with sum <= 20" : mismatch});
    return report;
}

analysis::Report intersection_report(int g, int n, recursion::RecursionEngine& engine)
{
    analysis::Report report;
    analysis::IntersectionTable table = analysis::extract_intersection_numbers(g, n, *engine.compute(g, n));
    for (const auto& [key, value] : table.entries())
        if (value.sign() <= 0) report.add({"intersection_positive", g, n, false, "nonpositive value " + value.to_short_string()});
    if (recursion::FgnKey::stable(g, n - 1))
        table.merge(analysis::extract_intersection_numbers(g, n - 1, *engine.compute(g, n - 1)));
    report.add({"intersection_extract", g, n, true, std::to_string(table.entries().size()) + " entries"});
    report.append(analysis::string_dilaton_check(table));
    return report;
}

int cmd_verify(const RunConfig& cfg)
{
    const auto key = recursion::FgnKey::make(cfg.g, cfg.n);
    const std::string& suite = cfg.suite;
    static const std::set<std::string> kSuites{"all", "euler", "laplace", "oracle", "intersection"};
    if (!kSuites.contains(suite)) throw DomainError("unknown suite '" + suite + "'");
    const bool all = suite == "all";
    const bool oracle = suite == "oracle" || (all && 3 * key.level() <= cfg.guard_e);
    if (suite == "oracle" && 3 * key.level() > cfg.guard_e) graphs::enumerate_ribbon_graphs(cfg.g, cfg.n, cfg.guard_e);

    recursion::RecursionEngine engine(resolve_cache_dir(cfg));
    const auto F = engine.compute(cfg.g, cfg.n);
    lattice::LatticeCounter counter;
    analysis::Report report;
    if (all) report.append(analysis::run_invariant_suite(cfg.g, cfg.n, *F));
    else if (suite == "euler") report.add(analysis::verify_euler(cfg.g, cfg.n, *F));
    if (all || suite == "laplace")
        report.add(analysis::verify_laplace(cfg.g, cfg.n, *F, counter, cfg.truncation.value_or(10)));
    if (oracle) report.append(oracle_report(cfg.g, cfg.n, *F, counter, cfg.guard_e));
    if (all || suite == "intersection") report.append(intersection_report(cfg.g, cfg.n, engine));

    std::cout << report.to_json() << '\n';
    return report.passed() ? kOk : kCheckFailed;
}

int cmd_intersections(const RunConfig& cfg)
{
    recursion::RecursionEngine engine(resolve_cache_dir(cfg));
    const auto table = analysis::extract_intersection_numbers(cfg.g, cfg.n, *engine.compute(cfg.g, cfg.n));
    const std::string& fmt = cfg.format.empty() ? std::string("pretty") : cfg.format;
    if (fmt == "tsv") {
        std::cout << table.to_tsv();
    } else if (fmt == "json") {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& [key, value] : table.entries())
            out.push_back({{"g", key.first}, {"d", key.second}, {"value", value.to_string()}});
        std::cout << out.dump(2) << '\n';
    } else {
        for (const auto& [key, value] : table.entries()) {
            std::cout << key.first;
            for (int d : key.second) std::cout << ' ' << d;
            std::cout << " | " << value.to_short_string() << '\n';
        }
    }
    return kOk;
}

int cmd_graphs(const RunConfig& cfg)
{
    for (const auto& record : graphs::enumerate_ribbon_graphs(cfg.g, cfg.n, cfg.guard_e))
        std::cout << graphs::dump(record) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Poincare polynomials F_{g,n} and lattice counts N_{g,n} of ribbon graphs"};
    app.require_subcommand(1);
    RunConfig cfg;

    const auto add_common = [&](CLI::App* sub, const std::vector<std::string>& formats) {
        sub->add_option("--g", cfg.g, "genus")->required();
        sub->add_option("--n", cfg.n, "number of faces")->required();
        sub->add_option("--cache-dir", cfg.cache_dir, "polynomial cache directory (overrides RGREC_CACHE_DIR)");
        sub->add_option("--guard-e", cfg.guard_e, "largest edge count the graph enumerator may reach");
        if (!formats.empty()) sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(formats));
    };

    auto* compute_f = app.add_subcommand("compute-f", "compute F_{g,n}");
    add_common(compute_f, {"json", "tsv", "latex", "pretty"});

    auto* compute_n = app.add_subcommand("compute-n", "compute N_{g,n}(p)");
    add_common(compute_n, {"json", "tsv", "pretty"});
    compute_n->add_option("--p", cfg.p, "comma-separated perimeters");
    compute_n->add_option("--box", cfg.box, "tabulate all p with 1 <= p_j <= BOX");

    auto* verify = app.add_subcommand("verify", "run verification suites, JSON report");
    add_common(verify, {});
    verify->add_option("--suite", cfg.suite, "all|euler|laplace|oracle|intersection");
    verify->add_option("--truncation", cfg.truncation, "series order for the Laplace check (default 10)");

    auto* intersections = app.add_subcommand("intersections", "psi-class intersection numbers from the leading part");
    add_common(intersections, {"pretty", "tsv", "json"});

    auto* graphs_cmd = app.add_subcommand("graphs", "dump the enumerated face-labeled ribbon graphs");
    add_common(graphs_cmd, {});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "rgrec: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (*compute_f) return cmd_compute_f(cfg);
        if (*compute_n) return cmd_compute_n(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*intersections) return cmd_intersections(cfg);
        if (*graphs_cmd) return cmd_graphs(cfg);
    } catch (const StabilityError& e) {
        std::cerr << "rgrec: unstable type: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const DomainError& e) {
        std::cerr << "rgrec: invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const ParseError& e) {
        std::cerr << "rgrec: invalid input: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const GuardExceeded& e) {
        std::cerr << "rgrec: " << e.what() << '\n';
        return kGuardExceeded;
    } catch (const Error& e) {
        std::cerr << "rgrec: internal invariant failure: " << e.what() << '\n';
        return kInvariantFailure;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "rgrec: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}
