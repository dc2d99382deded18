// mgc: command-line front end for the marked graph complexes.

#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>

#include "mgc/complex.hpp"
#include "mgc/homology.hpp"
#include "mgc/stability.hpp"
#include "mgc/verify.hpp"
#include "mgc/whitehouse.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::optional<int> g, n, r, l, m, window, max_edges;
    std::string lambda;
    std::string format = "table";
    std::string cache_dir;
    std::string suite = "all";
    int jobs = 0;
    bool verbose = false;

    bool as_json() const { return format == "json"; }
    mgc::BuildOptions build() const {
        mgc::BuildOptions b;
        b.cache_dir = cache_dir;
        b.verbose = verbose;
        return b;
    }
};

int need(const std::optional<int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing required option ") + flag);
    return *v;
}

json to_json(const mgc::Partition& p) { return json(p.parts()); }

json to_json(const mgc::IrrDecomposition& d) {
    json out = json::array();
    for (const auto& [lambda, mult] : d.terms()) out.push_back({{"partition", to_json(lambda)}, {"mult", mult}});
    return out;
}

// "3(5,1,1^{n-6})": lambda padded by ones up to n.
std::string padded_notation(const mgc::Partition& lambda, long long mult) {
    std::ostringstream os;
    if (mult != 1) os << mult;
    os << "(";
    for (int part : lambda.parts()) os << part << ",";
    os << "1^{n-" << lambda.size() << "})";
    return os.str();
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

mgc::EquivariantComplex complex_for(const Config& c) {
    const int g = need(c.g, "--g"), n = need(c.n, "--n"), r = need(c.r, "--r");
    if (g < 1 || n < 0 || r < 0) throw UsageError("need g >= 1, n >= 0, r >= 0");
    return mgc::build_complex(g, n, r, c.build());
}

int cmd_enumerate(const Config& c) {
    const int g = need(c.g, "--g"), n = need(c.n, "--n"), r = need(c.r, "--r");
    if (g < 1 || n < 0 || r < 0) throw UsageError("need g >= 1, n >= 0, r >= 0");
    const auto classes = mgc::enumerate_marked_graphs(g, n, r);
    if (c.as_json()) {
        json list = json::array();
        for (const auto& cls : classes)
            list.push_back({{"degree", mgc::graph_type(cls.graph).degree}, {"encoding", mgc::encode(cls.graph)}});
        print_json({{"schema", kSchemaVersion}, {"g", g}, {"n", n}, {"r", r}, {"classes", list}});
    } else {
        std::cout << "B(" << g << "," << n << "," << r << "): " << classes.size() << " classes\n";
        for (const auto& cls : classes)
            std::cout << std::setw(3) << mgc::graph_type(cls.graph).degree << "  " << mgc::encode(cls.graph) << "\n";
    }
    return 0;
}

int cmd_complex(const Config& c) {
    const auto cx = complex_for(c);
    std::string problem;
    try {
        mgc::check_d_squared(cx);
    } catch (const std::logic_error& e) {
        problem = e.what();
    }
    if (c.as_json()) {
        json degrees = json::array();
        for (int i = 0; i <= cx.top_degree(); ++i)
            degrees.push_back({{"degree", i}, {"dim", cx.dim(i)}, {"nonzeros", cx.differential[i].nonzeros()}});
        print_json({{"schema", kSchemaVersion},
                    {"g", cx.g},
                    {"n", cx.n},
                    {"r", cx.r},
                    {"excess", cx.excess},
                    {"degrees", degrees},
                    {"d_squared_zero", problem.empty()},
                    {"violations", problem.empty() ? json::array() : json::array({problem})}});
    } else {
        std::cout << "B(" << cx.g << "," << cx.n << "," << cx.r << "), excess " << cx.excess << "\n";
        std::cout << "degree   dim  nonzeros(d)\n";
        for (int i = 0; i <= cx.top_degree(); ++i)
            std::cout << std::setw(6) << i << std::setw(6) << cx.dim(i) << std::setw(11)
                      << cx.differential[i].nonzeros() << "\n";
        std::cout << "d^2 = 0: " << (problem.empty() ? "yes" : "NO (" + problem + ")") << "\n";
    }
    return problem.empty() ? 0 : 1;
}

int cmd_homology(const Config& c) {
    const auto h = mgc::homology_decomposition(complex_for(c));
    if (c.as_json()) {
        json degrees = json::array();
        for (int i = 0; i <= h.top_degree(); ++i)
            degrees.push_back(
                {{"degree", i}, {"dim", h.dims[i]}, {"decomposition", to_json(h.decompositions[i])}});
        print_json({{"schema", kSchemaVersion}, {"g", h.g}, {"n", h.n}, {"r", h.r}, {"homology", degrees}});
    } else {
        std::cout << "H(B(" << h.g << "," << h.n << "," << h.r << "))\n";
        for (int i = 0; i <= h.top_degree(); ++i) {
            if (h.dims[i] == 0) continue;
            std::cout << "H_" << i << "  dim " << h.dims[i] << "  " << h.decompositions[i].to_string() << "\n";
        }
    }
    return 0;
}

int cmd_stability(const Config& c) {
    const int g = need(c.g, "--g"), l = need(c.l, "--l");
    if (mgc::excess_of(g, l) < 0) throw UsageError("negative excess");
    const int n_max = c.window.value_or(mgc::predicted_sharp_bound(g, l) + 1);
    if (n_max <= std::max(0, l)) throw UsageError("--window must exceed max(0, l)");
    const auto rep = mgc::check_consistent_sequence(g, l, n_max, c.build());
    if (c.as_json()) {
        json per_n = json::array();
        for (int j = 0; j < static_cast<int>(rep.conjugate.size()); ++j) {
            json degrees = json::array();
            for (int i = 0; i < static_cast<int>(rep.conjugate[j].size()); ++i)
                degrees.push_back({{"degree", i}, {"conjugate", to_json(rep.conjugate[j][i])}});
            per_n.push_back({{"n", rep.n_min + j}, {"degrees", degrees}});
        }
        json steps = json::array();
        for (const auto& t : rep.transitions)
            steps.push_back({{"n", t.n},
                             {"degree", t.degree},
                             {"injective", t.injective},
                             {"generated", t.generated},
                             {"multiplicity_match", t.multiplicity_match},
                             {"monotone", t.monotone}});
        print_json({{"schema", kSchemaVersion},
                    {"g", g},
                    {"l", l},
                    {"excess", rep.m},
                    {"window", {rep.n_min, rep.n_max}},
                    {"predicted", rep.predicted},
                    {"detected", rep.detected ? json(*rep.detected) : json(nullptr)},
                    {"sharp", rep.sharp},
                    {"tables", per_n},
                    {"transitions", steps},
                    {"violations", rep.violations}});
    } else {
        std::cout << "B(" << g << ",n,n-" << l << "), excess " << rep.m << ", window " << rep.n_min << ".."
                  << rep.n_max << "\n";
        for (int j = 0; j < static_cast<int>(rep.conjugate.size()); ++j)
            for (int i = 0; i < static_cast<int>(rep.conjugate[j].size()); ++i)
                if (!rep.conjugate[j][i].is_zero())
                    std::cout << "n=" << rep.n_min + j << " C_" << i << " (x) sgn: " << rep.conjugate[j][i].to_string()
                              << "\n";
        for (int n = rep.n_min; n < rep.n_max; ++n)
            std::cout << "step " << n << " -> " << n + 1 << ": " << (rep.step_holds(n) ? "stable" : "not stable")
                      << "\n";
        std::cout << "predicted " << rep.predicted << ", detected "
                  << (rep.detected ? std::to_string(*rep.detected) : std::string("none")) << ", sharp "
                  << (rep.sharp ? "yes" : "no") << "\n";
        for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    }
    return rep.violations.empty() ? 0 : 1;
}

int cmd_stable_mult(const Config& c) {
    const int g = need(c.g, "--g");
    if (g < 1) throw UsageError("need g >= 1");
    if (!c.lambda.empty()) {
        mgc::Partition lambda;
        try {
            lambda = mgc::parse_partition(c.lambda);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const auto m = mgc::excess_for_size(lambda.size());
        if (!m || (c.m && *c.m != *m) || lambda.length() != (*m + 1) / 2)
            throw UsageError("--lambda must have ceil(3m/2) boxes in ceil(m/2) rows");
        const long long mult = mgc::stable_multiplicity(lambda, g);
        if (c.as_json())
            print_json({{"schema", kSchemaVersion}, {"g", g}, {"m", *m}, {"partition", to_json(lambda)}, {"mult", mult}});
        else
            std::cout << mult << "\n";
        return 0;
    }
    const int m = need(c.m, "--m");
    if (m < 0) throw UsageError("need m >= 0");
    const int size = (3 * m + 1) / 2, height = (m + 1) / 2;
    mgc::IrrDecomposition stab(size);
    for (const auto& lambda : mgc::enumerate_partitions(size))
        if (lambda.length() == height) stab.add(lambda, mgc::stable_multiplicity(lambda, g));
    if (c.as_json()) {
        print_json({{"schema", kSchemaVersion}, {"g", g}, {"m", m}, {"stable", to_json(stab)}});
    } else {
        std::string line;
        for (const auto& [lambda, mult] : stab.terms())
            line += (line.empty() ? "" : " + ") + padded_notation(lambda, mult);
        std::cout << (line.empty() ? "0" : line) << "\n";
    }
    return 0;
}

int cmd_whitehouse(const Config& c) {
    const int n_max = c.n.value_or(6);
    if (n_max < 2 || n_max > 8) throw UsageError("whitehouse needs 2 <= n <= 8");
    const int r_lo = c.r.value_or(2), r_hi = c.r.value_or(n_max);
    const auto rep = mgc::whitehouse_checks(n_max, r_lo, r_hi, c.build());
    if (c.as_json()) {
        json cases = json::array();
        for (const auto& w : rep.cases)
            cases.push_back({{"n", w.n},
                             {"r", w.r},
                             {"dims", w.dims},
                             {"top", to_json(w.top)},
                             {"concentrated", w.concentrated},
                             {"stirling", w.stirling},
                             {"restriction", w.restriction},
                             {"recursion", w.recursion ? json(*w.recursion) : json(nullptr)}});
        print_json({{"schema", kSchemaVersion}, {"cases", cases}, {"violations", rep.violations}});
    } else {
        std::cout << " n  r  degree  dim  top\n";
        for (const auto& w : rep.cases) {
            const int top = 2 * (w.n - w.r);
            std::cout << std::setw(2) << w.n << std::setw(3) << w.r << std::setw(8) << top << std::setw(5)
                      << w.top.dimension() << "  " << w.top.to_string() << "\n";
        }
        for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    }
    return rep.violations.empty() ? 0 : 1;
}

int cmd_verify(const Config& c) {
    std::vector<std::string> names;
    if (c.suite == "all") {
        names = mgc::suite_names();
    } else {
        const auto& known = mgc::suite_names();
        if (std::find(known.begin(), known.end(), c.suite) == known.end())
            throw UsageError("unknown suite '" + c.suite + "'");
        names = {c.suite};
    }
    mgc::SuiteOptions opt;
    opt.g = c.g;
    opt.max_edges = c.max_edges;
    opt.build = c.build();
    if (c.verbose) opt.progress = [](const std::string& msg) { std::cerr << msg << "\n"; };
    json results = json::array();
    bool ok = true;
    for (const auto& name : names) {
        if (!c.as_json()) std::cerr << "running " << name << "\n";
        const auto s = mgc::run_suite(name, opt);
        ok = ok && s.passed();
        if (c.as_json()) {
            results.push_back({{"suite", s.name},
                               {"passed", s.passed()},
                               {"checks", s.checks},
                               {"seconds", s.seconds},
                               {"notes", s.notes},
                               {"violations", s.violations}});
        } else {
            std::cout << std::left << std::setw(16) << s.name << std::right << (s.passed() ? "PASS" : "FAIL")
                      << std::setw(9) << s.checks << " checks " << std::fixed << std::setprecision(2) << s.seconds
                      << "s\n";
            for (const auto& note : s.notes) std::cout << "    " << note << "\n";
            for (const auto& v : s.violations) std::cout << "    violation: " << v << "\n";
        }
    }
    if (c.as_json()) print_json({{"schema", kSchemaVersion}, {"passed", ok}, {"suites", results}});
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Marked graph complexes B(g,n,r): enumeration, homology and representation stability"};
    app.require_subcommand(1);
    Config c;

    app.add_option("--g", c.g, "genus");
    app.add_option("--n", c.n, "number of legs (whitehouse: largest n)");
    app.add_option("--r", c.r, "number of markings");
    app.add_option("--l", c.l, "l = n - r for sequences B(g,n,n-l)");
    app.add_option("--m", c.m, "excess");
    app.add_option("--lambda", c.lambda, "partition, e.g. [5,1]");
    app.add_option("--window", c.window, "largest n in a stability window");
    app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"table", "json"}));
    app.add_option("--cache-dir", c.cache_dir, "basis cache directory")->envname("MGC_CACHE_DIR");
    app.add_option("--jobs", c.jobs, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
    app.add_option("--suite", c.suite, "verify: suite name or 'all'");
    app.add_option("--max-edges", c.max_edges, "core-bounds and edge-cutting: edge limit");
    app.add_flag("-v,--verbose", c.verbose, "progress on stderr");

    const std::vector<std::pair<std::string, std::string>> commands{
        {"enumerate", "list the graph classes of B(g,n,r)"},
        {"complex", "assemble B(g,n,r) and check d^2 = 0"},
        {"homology", "homology of B(g,n,r) as S_n-modules"},
        {"stability", "representation stability of B(g,n,n-l) over a window"},
        {"stable-mult", "stable multiplicities from the Littlewood-Richardson formula"},
        {"whitehouse", "genus-one checks against Stirling, restriction and recursion oracles"},
        {"verify", "run property suites"}};
    for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    if (c.jobs > 0) omp_set_num_threads(c.jobs);

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "enumerate") return cmd_enumerate(c);
        if (cmd == "complex") return cmd_complex(c);
        if (cmd == "homology") return cmd_homology(c);
        if (cmd == "stability") return cmd_stability(c);
        if (cmd == "stable-mult") return cmd_stable_mult(c);
        if (cmd == "whitehouse") return cmd_whitehouse(c);
        if (cmd == "verify") return cmd_verify(c);
    } catch (const UsageError& e) {
        std::cerr << "mgc " << cmd << ": " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "mgc " << cmd << ": " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "mgc " << cmd << ": " << e.what() << "\n";
        return 1;
    }
    return 2;
}
