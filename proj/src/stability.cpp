#include "mgc/stability.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mgc/linalg.hpp"

namespace mgc {

namespace {

int ceil_half(int x) { return (x + 1) / 2; }

Partition column(int k) { return Partition(std::vector<int>(k, 1)); }

Partition row(int k) { return k > 0 ? Partition{k} : Partition{}; }

// termwise a <= b
bool dominated(const IrrDecomposition& a, const IrrDecomposition& b) {
    for (const auto& [lambda, mult] : a.terms())
        if (b[lambda] < mult) return false;
    return true;
}

std::string type_string(int g, int n, int r) {
    std::ostringstream os;
    os << "(" << g << "," << n << "," << r << ")";
    return os.str();
}

}  // namespace

int predicted_sharp_bound(int g, int l) {
    const int m = excess_of(g, l);
    if (m < 0) throw std::invalid_argument("predicted_sharp_bound: negative excess");
    return ceil_half(3 * m);
}

std::vector<MarkedGraph> enumerate_core_graphs(int g, int n, int r) {
    std::vector<MarkedGraph> out;
    if (r < 0) return out;
    for (auto& graph : enumerate_unlabeled(g, n, r))
        if (graph.num_marked() == r && marked_leg_count(graph) == 0) out.push_back(std::move(graph));
    return out;
}

IrrDecomposition core_module(const MarkedGraph& core) {
    const MarkedGraph labeled = label_legs(core);
    const int k = labeled.num_legs();
    if (has_odd_automorphism(labeled)) return IrrDecomposition(k);
    const auto group = leg_symmetry_group(labeled);
    if (k == 0) return IrrDecomposition::unit();
    std::vector<Permutation> perms;
    std::vector<Rational> chi;
    for (const auto& s : group) {
        perms.push_back(s.perm);
        chi.emplace_back(s.sign);
    }
    return decompose(induce_from_subgroup(k, perms, chi, false));
}

int rho_of_core(const MarkedGraph& core) {
    const IrrDecomposition a = core_module(core);
    if (a.is_zero()) throw std::domain_error("rho_of_core: vanishing core");
    return rows(a);
}

std::vector<CoreSummand> core_decomposition(int g, int n, int r, int i) {
    std::vector<CoreSummand> out;
    for (int k = 0; k <= n; ++k) {
        // adding n-k marked legs raises the marking count by n-k
        const int u_min = std::max(0, r - (n - k));
        for (auto& xi : enumerate_unlabeled(g, k, u_min)) {
            if (marked_leg_count(xi) != 0) continue;
            const GraphType t = graph_type(xi);
            if (t.degree != i) continue;
            IrrDecomposition a = core_module(xi);
            if (a.is_zero()) continue;
            CoreSummand s;
            s.core = std::move(xi);
            s.type = t;
            s.module = induce_product(a, IrrDecomposition::irreducible(column(n - k)));
            s.dim = s.module.dimension();
            out.push_back(std::move(s));
        }
    }
    return out;
}

bool StabilityReport::step_holds(int n) const {
    bool any = false;
    for (const auto& t : transitions)
        if (t.n == n) {
            any = true;
            if (!t.holds()) return false;
        }
    return any;
}

bool StabilityReport::step_matches(int n) const {
    bool any = false;
    for (const auto& t : transitions)
        if (t.n == n) {
            any = true;
            if (!t.multiplicity_match) return false;
        }
    return any;
}

StabilityReport check_consistent_sequence(int g, int l, int n_max, const BuildOptions& options) {
    StabilityReport rep;
    rep.g = g;
    rep.l = l;
    rep.m = excess_of(g, l);
    rep.predicted = predicted_sharp_bound(g, l);
    rep.n_min = std::max(0, l);
    rep.n_max = n_max;
    if (n_max <= rep.n_min) throw std::invalid_argument("check_consistent_sequence: window too small");

    const int count = n_max - rep.n_min + 1;
    std::vector<EquivariantComplex> cx(count);
    rep.conjugate.assign(count, {});
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < count; ++j) {
        try {
            const int n = rep.n_min + j;
            BuildOptions inner = options;
            inner.exec = Execution::serial;
            cx[j] = build_complex(g, n, n - l, inner);
            for (int i = 0; i <= rep.m; ++i) {
                IrrDecomposition d = i <= cx[j].top_degree() && cx[j].dim(i) > 0
                                         ? decompose(chain_character(cx[j], i))
                                         : IrrDecomposition(n);
                rep.conjugate[j].push_back(tensor_sign(d));
            }
        } catch (...) {
#pragma omp critical(mgc_stability_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);

    for (int j = 0; j + 1 < count; ++j) {
        const int n = rep.n_min + j;
        const ChainMap psi = stabilization_map(cx[j], cx[j + 1]);
        for (int i = 0; i <= rep.m; ++i) {
            TransitionCheck t;
            t.n = n;
            t.degree = i;
            const bool has_i = i <= cx[j].top_degree();
            const int src = has_i ? cx[j].dim(i) : 0;
            const int tgt = i <= cx[j + 1].top_degree() ? cx[j + 1].dim(i) : 0;
            if (src == 0) {
                t.injective = true;
                t.generated = tgt == 0;
            } else {
                const SparseMatrix& p = psi.matrices[i];
                t.injective = exact_rank(p) == src;
                // psi(C) is S_n-stable, so coset representatives (k n+1) suffice
                std::vector<SparseVector> span = p.columns;
                for (int k = 0; k < n; ++k) {
                    const SparseMatrix moved =
                        group_action_matrix(cx[j + 1], i, Permutation::transposition(n + 1, k, n))
                            .sparse()
                            .multiply(p);
                    span.insert(span.end(), moved.columns.begin(), moved.columns.end());
                }
                t.generated = exact_rank(span) == tgt;
            }
            const IrrDecomposition grown = grow_first_row(rep.conjugate[j][i]);
            t.multiplicity_match = grown == rep.conjugate[j + 1][i];
            t.monotone = dominated(grown, rep.conjugate[j + 1][i]);
            if (!t.monotone)
                rep.violations.push_back("multiplicity drops at n=" + std::to_string(n) + " in degree " +
                                         std::to_string(i));
            if (!t.injective)
                rep.violations.push_back("stabilization not injective at n=" + std::to_string(n) +
                                         " in degree " + std::to_string(i));
            rep.transitions.push_back(t);
        }
    }

    for (int n = n_max - 1; n >= rep.n_min && rep.step_holds(n); --n) rep.detected = n;
    if (rep.detected && *rep.detected > rep.n_min) rep.sharp = !rep.step_matches(*rep.detected - 1);
    if (rep.detected && *rep.detected == rep.n_min) rep.sharp = true;

    // the window reaches past the bound, so detection is decisive
    if (n_max > rep.predicted) {
        if (!rep.detected || *rep.detected != rep.predicted)
            rep.violations.push_back("detected point " +
                                     (rep.detected ? std::to_string(*rep.detected) : std::string("none")) +
                                     " differs from the bound " + std::to_string(rep.predicted));
        else if (!rep.sharp)
            rep.violations.push_back("multiplicities already match below the bound");
    }
    return rep;
}

std::vector<Partition> lambda_set(int y, int p) {
    if (y < 0 || p < 0) throw std::invalid_argument("lambda_set: negative parameter");
    const int m = 2 * y + p;
    const int h = ceil_half(m);
    std::vector<Partition> out;
    for (const auto& eta_p : enumerate_partitions(2 * y, true)) {
        std::vector<int> eta(y + 1, 0);
        for (int i = 0; i < eta_p.length(); ++i) eta[i] = eta_p[i];
        // compositions of p into y+1 parts, subject to pi_{i+1} + eta_{i+1} <= eta_i
        std::vector<int> pi(y + 1, 0);
        auto place = [&](auto&& self, int i, int left) -> void {
            if (i == y) {
                pi[i] = left;
                if (i > 0 && pi[i] + eta[i] > eta[i - 1]) return;
                std::vector<int> parts(h, 1);
                for (int j = 0; j <= y; ++j)
                    if (eta[j] + pi[j] > 0) parts.at(j) += eta[j] + pi[j];
                out.push_back(Partition(parts));
                return;
            }
            for (int a = 0; a <= left; ++a) {
                if (i > 0 && a + eta[i] > eta[i - 1]) break;
                pi[i] = a;
                self(self, i + 1, left - a);
            }
        };
        place(place, 0, p);
    }
    std::sort(out.begin(), out.end(), CanonicalOrder{});
    return out;
}

std::vector<std::pair<int, int>> stable_pairs(int m, int g) {
    std::vector<std::pair<int, int>> out;
    for (int p = m % 2; p < g && p <= m; p += 2) out.emplace_back((m - p) / 2, p);
    return out;
}

IrrDecomposition stab_module(int g, int n, int l) {
    const int m = excess_of(g, l);
    if (m < 0) throw std::invalid_argument("stab_module: negative excess");
    const int top = ceil_half(3 * m);
    if (n < top) throw std::invalid_argument("stab_module: n below the stable range");
    IrrDecomposition out(n);
    for (const auto& [y, p] : stable_pairs(m, g))
        for (const auto& lambda : lambda_set(y, p)) out.add(pad_ones(lambda, n - top), 1);
    return out;
}

std::optional<int> excess_for_size(int size) {
    for (int m = 0; ceil_half(3 * m) <= size; ++m)
        if (ceil_half(3 * m) == size) return m;
    return std::nullopt;
}

long long stable_multiplicity(const Partition& lambda, int g) {
    const auto m = excess_for_size(lambda.size());
    if (!m) throw std::invalid_argument("stable_multiplicity: |lambda| is not of the form ceil(3m/2)");
    if (lambda.length() != ceil_half(*m))
        throw std::invalid_argument("stable_multiplicity: lambda must have ceil(m/2) rows");
    const Partition reduced = erase_first_column(lambda);
    long long total = 0;
    for (int p = 0; p < g && p <= *m; ++p) {
        if ((*m - p) % 2) continue;
        for (const auto& tau : enumerate_partitions((*m - p) / 2))
            total += lr_coefficient(reduced, double_parts(tau), row(p));
    }
    return total;
}

VanishingReport verify_vanishing(const HomologyProfile& h) {
    VanishingReport rep;
    const int l = h.n - h.r;
    const int m = excess_of(h.g, l);
    if (m < 0) return rep;
    const int top = ceil_half(3 * m);
    const int h_rows = ceil_half(m);
    if (h.n < top) return rep;
    auto check = [&](int i, const Partition& nu, const char* why) {
        ++rep.assertions;
        const long long mult = h.multiplicity(i, nu);
        if (mult != 0)
            rep.violations.push_back(std::string(why) + ": " + nu.to_string() + " has multiplicity " +
                                     std::to_string(mult) + " in H_" + std::to_string(i) + " of B" +
                                     type_string(h.g, h.n, h.r));
    };
    for (const auto& nu : enumerate_partitions(h.n)) {
        const int ones = nu.multiplicity(1);
        for (int i = 0; i <= h.top_degree(); ++i) {
            // (lambda, 1^{n-N}) with lambda_k >= 2 and N > ceil(3m/2)
            if (h.n - ones > top) check(i, nu, "first-column bound");
            if (ones < h.n - top) continue;
            const Partition lambda(std::vector<int>(nu.parts().begin(), nu.parts().end() - (h.n - top)));
            if (lambda.length() < h_rows)
                check(i, nu, "too few rows");
            else if (lambda.length() == h_rows && i < m)
                check(i, nu, "below the top degree");
        }
    }
    return rep;
}

CoreBoundReport check_core_bounds(int g, int max_edges) {
    CoreBoundReport rep;
    if (g < 1) throw std::invalid_argument("check_core_bounds: genus must be positive");
    const int beta3 = 3 * (g - 1);
    const int bound9 = ceil_half(9 * (g - 1));

    std::set<std::string> theta_seen;
    auto describe = [](const MarkedGraph& xi) { return encode(xi); };

    // types (g,k,u) with u <= max_edges and at most max_edges edges allowed
    for (int k = 0; k <= max_edges + max_edges - beta3; ++k) {
        const int u_lo = std::max(0, k + beta3 - max_edges);
        if (u_lo > max_edges) continue;
        for (const auto& xi : enumerate_unlabeled(g, k, u_lo)) {
            if (marked_leg_count(xi) != 0) continue;
            const GraphType t = graph_type(xi);
            if (t.r > max_edges) continue;
            ++rep.cores;
            const int l = t.n - t.r;
            const int m = t.excess;
            if (t.n > m)
                rep.violations.push_back("core with more legs than its excess: " + describe(xi));
            if (t.n == m) {
                ++rep.extremal;
                bool matched = false;
                for (int p = 0; p < g && p <= m; ++p) {
                    if ((g - p) % 2 == 0) continue;
                    if (canonical_key(build_theta(g, l, p)) == canonical_key(xi)) matched = true;
                }
                if (!matched) rep.violations.push_back("extremal core is not a theta graph: " + describe(xi));
                theta_seen.insert(canonical_key(xi));
            }
            const IrrDecomposition a = core_module(xi);
            if (a.is_zero()) {
                ++rep.vanishing;
                continue;
            }
            const int rho = rows(a);
            if (t.n + rho > bound9 + 3 * l)
                rep.violations.push_back("n + rho = " + std::to_string(t.n + rho) + " exceeds " +
                                         std::to_string(bound9 + 3 * l) + ": " + describe(xi));
            if (g < 2) continue;
            const MarkedGraph gamma = label_legs(xi);
            for (int e : gamma.edge_order) {
                MarkedGraph cut;
                try {
                    cut = cut_edge(gamma, e);
                } catch (const std::invalid_argument&) {
                    continue;  // disconnecting
                }
                ++rep.cuts;
                if (has_odd_automorphism(cut)) {
                    rep.cut_violations.push_back("cut graph vanishes: " + describe(xi));
                    continue;
                }
                std::vector<Permutation> perms;
                std::vector<Rational> chi;
                for (const auto& s : leg_symmetry_group(cut)) {
                    perms.push_back(s.perm);
                    chi.emplace_back(s.sign);
                }
                const int rho_c = rows(decompose(induce_from_subgroup(cut.num_legs(), perms, chi, false)));
                if (rho > rho_c)
                    rep.cut_violations.push_back("cutting lowers rho from " + std::to_string(rho) + " to " +
                                             std::to_string(rho_c) + ": " + describe(xi));
            }
        }
    }

    // every theta graph whose type lies in range must have been found
    for (int l = -beta3; l <= max_edges; ++l) {
        const int m = excess_of(g, l);
        if (m < 0 || m > max_edges + max_edges - beta3) continue;
        if (m - l > max_edges || std::max(0, m + beta3 - max_edges) > m - l) continue;
        for (int p = 0; p < g && p <= m; ++p) {
            if ((g - p) % 2 == 0) continue;
            const std::string key = canonical_key(build_theta(g, l, p));
            if (!theta_seen.count(key))
                rep.violations.push_back("theta_{" + std::to_string(g) + "," + std::to_string(l) + "}(" +
                                         std::to_string(p) + ") not enumerated");
        }
    }
    return rep;
}

}  // namespace mgc
