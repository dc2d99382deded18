#include "mgc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>

#include "mgc/homology.hpp"
#include "mgc/stability.hpp"
#include "mgc/whitehouse.hpp"

namespace mgc {

namespace {

std::string triple(int g, int n, int r) {
    return "(" + std::to_string(g) + "," + std::to_string(n) + "," + std::to_string(r) + ")";
}

void expect(SuiteResult& s, bool ok, const std::string& what) {
    ++s.checks;
    if (!ok) s.violations.push_back(what);
}

void say(const SuiteOptions& opt, const std::string& msg) {
    if (opt.progress) opt.progress(msg);
}

HomologyProfile homology_of(int g, int n, int r, const SuiteOptions& opt) {
    return homology_decomposition(build_complex(g, n, r, opt.build));
}

void expect_multiplicity(SuiteResult& s, const HomologyProfile& h, int i, const Partition& lambda, long long want) {
    const long long got = h.multiplicity(i, lambda);
    expect(s, got == want,
           "H_" + std::to_string(i) + " of B" + triple(h.g, h.n, h.r) + ": " + lambda.to_string() + " has multiplicity " +
               std::to_string(got) + ", expected " + std::to_string(want));
}

long long permutations_with_cycles(int n, int k) {
    long long count = 0;
    for (const auto& s : all_permutations(n)) count += s.cycle_type().length() == k;
    return count;
}

// Ind_{S_a x S_b}(chi_mu x chi_nu), summed over classes of the Young subgroup.
ClassFunction young_induced(const Partition& mu, const Partition& nu) {
    ClassFunction out(mu.size() + nu.size());
    const ClassFunction cm = irreducible_character(mu);
    const ClassFunction cn = irreducible_character(nu);
    for (const auto& alpha : enumerate_partitions(mu.size()))
        for (const auto& beta : enumerate_partitions(nu.size())) {
            std::vector<int> parts = alpha.parts();
            parts.insert(parts.end(), beta.parts().begin(), beta.parts().end());
            std::sort(parts.rbegin(), parts.rend());
            const Partition type(parts);
            const Rational v = cm.at(alpha) * cn.at(beta) * Rational(centralizer_order(type)) /
                               Rational(centralizer_order(alpha) * centralizer_order(beta));
            out.set(type, out.at(type) + v);
        }
    return out;
}

std::vector<Permutation> hyperoctahedral_group(int y) {
    const int n = 2 * y;
    std::vector<Permutation> gens;
    for (int i = 0; i < y; ++i) gens.push_back(Permutation::transposition(n, 2 * i, 2 * i + 1));
    for (int i = 0; i + 1 < y; ++i) {
        std::vector<int> img(n);
        for (int k = 0; k < n; ++k) img[k] = k;
        std::swap(img[2 * i], img[2 * i + 2]);
        std::swap(img[2 * i + 1], img[2 * i + 3]);
        gens.emplace_back(img);
    }
    std::set<Permutation> seen{Permutation::identity(n)};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& a : frontier)
            for (const auto& g : gens)
                if (seen.insert(g * a).second) next.push_back(g * a);
        frontier.swap(next);
    }
    return {seen.begin(), seen.end()};
}

int default_edges(int g) { return g == 1 ? 5 : g == 2 ? 6 : 7; }

template <class F>
SuiteResult timed(const std::string& name, F&& body) {
    SuiteResult s;
    s.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(s);
    } catch (const std::exception& e) {
        s.violations.push_back(std::string("exception: ") + e.what());
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return s;
}

}  // namespace

std::vector<std::tuple<int, int, int>> d_squared_range(std::optional<int> g_only) {
    std::vector<std::tuple<int, int, int>> out;
    for (int g = 1; g <= 3; ++g) {
        if (g_only && g != *g_only) continue;
        for (int n = 0; n <= 6; ++n)
            for (int m = 0; m <= 6; ++m) {
                const int twice_l = m - 3 * (g - 1);
                if (twice_l % 2 != 0) continue;
                const int r = n - twice_l / 2;
                if (r < 0) continue;
                out.emplace_back(g, n, r);
            }
    }
    return out;
}

SuiteResult suite_d_squared(const SuiteOptions& opt) {
    return timed("d-squared", [&](SuiteResult& s) {
        for (const auto& [g, n, r] : d_squared_range(opt.g)) {
            auto classes = enumerate_marked_graphs(g, n, r, opt.build.exec);
            if (static_cast<long long>(classes.size()) > opt.class_limit) {
                s.notes.push_back("B" + triple(g, n, r) + " skipped: " + std::to_string(classes.size()) + " classes");
                continue;
            }
            say(opt, "d-squared B" + triple(g, n, r) + ": " + std::to_string(classes.size()) + " classes");
            const auto c = assemble_complex(g, n, r, std::move(classes), opt.build.exec);
            try {
                check_d_squared(c);
                ++s.checks;
            } catch (const std::logic_error& e) {
                expect(s, false, "B" + triple(g, n, r) + ": " + e.what());
            }
        }
        s.notes.push_back(std::to_string(s.checks) + " complexes checked");
    });
}

SuiteResult suite_trivial_complex(const SuiteOptions& opt) {
    return timed("trivial-complex", [&](SuiteResult& s) {
        const auto h = homology_of(1, 0, 0, opt);
        expect(s, h.dims == std::vector<long long>{1}, "B(1,0,0) homology is not Q in degree 0");
        expect(s, !h.decompositions.empty() && h.decompositions[0] == IrrDecomposition::unit(),
               "B(1,0,0) degree-0 module is not the unit");
    });
}

SuiteResult suite_genus_one(const SuiteOptions& opt) {
    return timed("genus-one", [&](SuiteResult& s) {
        const auto rep = whitehouse_checks(6, 2, 6, opt.build);
        for (const auto& c : rep.cases) {
            s.checks += 3 + (c.recursion ? 1 : 0);
            // dimension against a brute-force count, independent of the recurrence
            const int top = 2 * (c.n - c.r);
            const long long dim = top < static_cast<int>(c.dims.size()) ? c.dims[top] : 0;
            expect(s, dim == permutations_with_cycles(c.n - 1, c.r - 1),
                   "B(1," + std::to_string(c.n) + "," + std::to_string(c.r) + ") top dimension " + std::to_string(dim));
        }
        s.violations.insert(s.violations.end(), rep.violations.begin(), rep.violations.end());
        for (int l = 0; l <= 2; ++l) {
            const auto st = whitehouse_stability(l, 3 * l + 1, opt.build);
            expect(s, st.detected && *st.detected == 3 * l && st.sharp && st.witness,
                   "sign-tensored tops for l=" + std::to_string(l) + " do not stabilize sharply at 3l");
        }
        s.notes.push_back(std::to_string(rep.cases.size()) + " (n,r) pairs");
    });
}

SuiteResult suite_excess_three(const SuiteOptions& opt) {
    return timed("excess-three", [&](SuiteResult& s) {
        const auto h5 = homology_of(2, 5, 5, opt);
        expect_multiplicity(s, h5, 3, Partition{4, 1}, 1);
        expect_multiplicity(s, h5, 3, Partition{3, 2}, 1);
        const auto h6 = homology_of(2, 6, 6, opt);
        expect_multiplicity(s, h6, 3, Partition{4, 1, 1}, 1);
        expect_multiplicity(s, h6, 3, Partition{3, 2, 1}, 1);
        for (const auto* h : {&h5, &h6}) {
            const IrrDecomposition stab = stab_module(2, h->n, 0);
            for (const auto& [lambda, mult] : stab.terms()) expect_multiplicity(s, *h, 3, lambda, mult);
        }
    });
}

SuiteResult suite_excess_four(const SuiteOptions& opt) {
    return timed("excess-four", [&](SuiteResult& s) {
        const auto h = homology_of(3, 6, 7, opt);
        expect_multiplicity(s, h, 4, Partition{5, 1}, 2);
        expect_multiplicity(s, h, 4, Partition{4, 2}, 1);
        expect_multiplicity(s, h, 4, Partition{3, 3}, 2);
    });
}

SuiteResult suite_vanishing(const SuiteOptions& opt) {
    return timed("vanishing", [&](SuiteResult& s) {
        for (auto [g, n, r] : {std::tuple{2, 5, 5}, {2, 6, 6}, {3, 6, 7}}) {
            const auto rep = verify_vanishing(homology_of(g, n, r, opt));
            s.checks += rep.assertions;
            s.violations.insert(s.violations.end(), rep.violations.begin(), rep.violations.end());
            s.notes.push_back("B" + triple(g, n, r) + ": " + std::to_string(rep.assertions) + " zero multiplicities");
        }
    });
}

SuiteResult suite_sharp_bound(const SuiteOptions& opt) {
    return timed("sharp-bound", [&](SuiteResult& s) {
        for (auto [g, l, n_max] : {std::tuple{2, 0, 6}, {1, 1, 5}}) {
            const auto rep = check_consistent_sequence(g, l, n_max, opt.build);
            const std::string tag = "(g,l)=(" + std::to_string(g) + "," + std::to_string(l) + ")";
            expect(s, rep.detected && *rep.detected == rep.predicted,
                   tag + ": detected " + (rep.detected ? std::to_string(*rep.detected) : std::string("none")) +
                       ", predicted " + std::to_string(rep.predicted));
            expect(s, rep.predicted > rep.n_min && !rep.step_matches(rep.predicted - 1),
                   tag + ": multiplicities already stable one below the bound");
            s.violations.insert(s.violations.end(), rep.violations.begin(), rep.violations.end());
            s.notes.push_back(tag + ": sharp point " + std::to_string(rep.detected.value_or(-1)));
        }
    });
}

SuiteResult suite_core_bounds(const SuiteOptions& opt) {
    return timed("core-bounds", [&](SuiteResult& s) {
        for (int g = 1; g <= 3; ++g) {
            if (opt.g && g != *opt.g) continue;
            const int e = opt.max_edges.value_or(default_edges(g));
            const auto rep = check_core_bounds(g, e);
            s.checks += rep.cores + rep.extremal;
            s.violations.insert(s.violations.end(), rep.violations.begin(), rep.violations.end());
            s.notes.push_back("g=" + std::to_string(g) + ", edges <= " + std::to_string(e) + ": " +
                              std::to_string(rep.cores) + " cores, " + std::to_string(rep.extremal) + " extremal");
        }
        if (!opt.g || *opt.g == 3)
            expect(s, rho_of_core(build_theta(3, 0, 0)) + 6 == 9, "m + rho of theta_{3,0}(0) is not 9");
        if (!opt.g || *opt.g == 2)
            expect(s, rho_of_core(build_theta(2, 0, 1)) + 3 == 5, "m + rho of theta_{2,0}(1) is not 5");
    });
}

SuiteResult suite_formula(const SuiteOptions&) {
    return timed("formula", [&](SuiteResult& s) {
        for (int m = 0; m <= 8; ++m)
            for (int g = 1; g <= 8; ++g) {
                const int top = (3 * m + 1) / 2;
                std::map<Partition, long long> counted;
                for (const auto& [y, p] : stable_pairs(m, g))
                    for (const auto& lambda : lambda_set(y, p)) ++counted[lambda];
                for (const auto& lambda : enumerate_partitions(top)) {
                    if (lambda.length() != (m + 1) / 2) continue;
                    const long long c = stable_multiplicity(lambda, g);
                    const long long want = counted.count(lambda) ? counted[lambda] : 0;
                    expect(s, c == want,
                           "m=" + std::to_string(m) + " g=" + std::to_string(g) + " " + lambda.to_string() + ": formula " +
                               std::to_string(c) + ", multiset " + std::to_string(want));
                }
            }
        // the excess-seven table, g > 5
        const std::map<Partition, long long> seven{{Partition{8, 1, 1, 1}, 3}, {Partition{7, 2, 1, 1}, 3},
                                                   {Partition{6, 3, 1, 1}, 4}, {Partition{5, 4, 1, 1}, 2},
                                                   {Partition{5, 3, 2, 1}, 2}, {Partition{4, 3, 3, 1}, 2},
                                                   {Partition{3, 3, 3, 2}, 1}};
        for (const auto& [lambda, mult] : seven)
            expect(s, stable_multiplicity(lambda, 6) == mult, "excess-seven coefficient of " + lambda.to_string());
        IrrDecomposition table(11);
        for (const auto& [lambda, mult] : seven) table.add(lambda, mult);
        expect(s, stab_module(6, 11, -4) == table, "excess-seven stable module");
        // the (7,8,15) prediction
        IrrDecomposition intro(8);
        intro.add(Partition{5, 1, 1, 1}, 3);
        intro.add(Partition{4, 2, 1, 1}, 1);
        intro.add(Partition{3, 3, 1, 1}, 2);
        expect(s, stab_module(7, 8, -7) == intro, "stable module of B(7,8,15)");
    });
}

SuiteResult suite_reptheory(const SuiteOptions&) {
    return timed("reptheory", [&](SuiteResult& s) {
        for (int n = 1; n <= 8; ++n)
            for (int a = 1; a < n; ++a)
                for (const auto& mu : enumerate_partitions(a))
                    for (const auto& nu : enumerate_partitions(n - a)) {
                        const ClassFunction ind = young_induced(mu, nu);
                        for (const auto& lambda : enumerate_partitions(n))
                            expect(s, Rational(lr_coefficient(lambda, mu, nu)) ==
                                          inner_product(ind, irreducible_character(lambda)),
                                   "LR coefficient " + lambda.to_string() + " in " + mu.to_string() + " o " +
                                       nu.to_string());
                    }
        for (int y = 1; y <= 3; ++y) {
            const auto group = hyperoctahedral_group(y);
            const auto direct =
                decompose(induce_from_subgroup(2 * y, group, std::vector<Rational>(group.size(), Rational(1))));
            expect(s, direct == hyperoctahedral_doubles(y), "hyperoctahedral doubles for y=" + std::to_string(y));
        }
        for (int n = 1; n <= 7; ++n) {
            const auto ps = enumerate_partitions(n);
            for (const auto& a : ps)
                for (const auto& b : ps)
                    expect(s, inner_product(irreducible_character(a), irreducible_character(b)) == Rational(a == b),
                           "row orthogonality " + a.to_string() + " " + b.to_string());
            const auto& t = character_table(n);
            for (std::size_t i = 0; i < ps.size(); ++i)
                for (std::size_t j = 0; j < ps.size(); ++j) {
                    long long sum = 0;
                    for (std::size_t l = 0; l < ps.size(); ++l) sum += t.values[l][i] * t.values[l][j];
                    expect(s, sum == (i == j ? centralizer_order(ps[i]) : 0),
                           "column orthogonality " + ps[i].to_string() + " " + ps[j].to_string());
                }
        }
    });
}

SuiteResult suite_edge_cutting(const SuiteOptions& opt) {
    return timed("edge-cutting", [&](SuiteResult& s) {
        for (int g = 2; g <= 3; ++g) {
            if (opt.g && g != *opt.g) continue;
            const int e = opt.max_edges.value_or(default_edges(g));
            const auto rep = check_core_bounds(g, e);
            s.checks += rep.cuts;
            s.violations.insert(s.violations.end(), rep.cut_violations.begin(), rep.cut_violations.end());
            s.notes.push_back("g=" + std::to_string(g) + ", edges <= " + std::to_string(e) + ": " +
                              std::to_string(rep.cuts) + " cuts");
        }
        if (s.checks == 0) s.violations.push_back("no edges were cut");
    });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"d-squared",   "trivial-complex", "genus-one",   "excess-three",
                                                "excess-four", "vanishing",       "sharp-bound", "core-bounds",
                                                "formula",     "reptheory",       "edge-cutting"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "d-squared") return suite_d_squared(opt);
    if (name == "trivial-complex") return suite_trivial_complex(opt);
    if (name == "genus-one") return suite_genus_one(opt);
    if (name == "excess-three") return suite_excess_three(opt);
    if (name == "excess-four") return suite_excess_four(opt);
    if (name == "vanishing") return suite_vanishing(opt);
    if (name == "sharp-bound") return suite_sharp_bound(opt);
    if (name == "core-bounds") return suite_core_bounds(opt);
    if (name == "formula") return suite_formula(opt);
    if (name == "reptheory") return suite_reptheory(opt);
    if (name == "edge-cutting") return suite_edge_cutting(opt);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace mgc
