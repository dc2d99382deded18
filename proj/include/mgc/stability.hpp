#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mgc/complex.hpp"
#include "mgc/graphs.hpp"
#include "mgc/homology.hpp"
#include "mgc/reptheory.hpp"

namespace mgc {

/// m = 3(g-1) + 2l.
inline int excess_of(int g, int l) { return 3 * (g - 1) + 2 * l; }

/// ceil(3m/2). Throws std::invalid_argument when m < 0.
int predicted_sharp_bound(int g, int l);

/// Core graphs (no marked legs, legs unlabeled) of exactly type (g,n,r).
/// Vanishing unlabeled classes are kept: labeling their legs may revive them.
std::vector<MarkedGraph> enumerate_core_graphs(int g, int n, int r);

/// A_xi = Ind_{I}^{S_k} det(xi) for a core with k legs; zero when the
/// labeled core vanishes.
IrrDecomposition core_module(const MarkedGraph& core);

/// rows(A_xi). Throws std::domain_error when the labeled core vanishes.
int rho_of_core(const MarkedGraph& core);

struct CoreSummand {
    MarkedGraph core;
    GraphType type;
    long long dim = 0;
    IrrDecomposition module{0};  // A_xi o V_{1^{n-k}}
};

/// Summands of B(g,n,r)_i indexed by the cores of its graphs. Only
/// non-vanishing summands are listed.
std::vector<CoreSummand> core_decomposition(int g, int n, int r, int i);

/// One degree of one step n -> n+1 of the sequence B(g,n,n-l).
struct TransitionCheck {
    int n = 0;
    int degree = 0;
    bool injective = false;
    bool generated = false;
    bool multiplicity_match = false;  // conj(n+1) == grow_first_row(conj(n))
    bool monotone = false;            // conj(n+1) >= grow_first_row(conj(n)) termwise

    bool holds() const { return injective && generated && multiplicity_match; }
};

struct StabilityReport {
    int g = 0, l = 0, m = 0;
    int n_min = 0, n_max = 0;
    int predicted = 0;
    /// conjugate[n - n_min][i]: sign-tensored decomposition of B(g,n,n-l)_i.
    std::vector<std::vector<IrrDecomposition>> conjugate;
    std::vector<TransitionCheck> transitions;
    /// Least N in the window with every step n -> n+1, n >= N, holding.
    std::optional<int> detected;
    /// Multiplicities already differ on the step detected-1 -> detected.
    bool sharp = false;
    std::vector<std::string> violations;

    bool step_holds(int n) const;
    bool step_matches(int n) const;
};

/// Chain-level analysis of the sign-tensored sequence B(g,n,n-l) for
/// max(0,l) <= n <= n_max.
StabilityReport check_consistent_sequence(int g, int l, int n_max, const BuildOptions& options = {});

/// Lambda(y,p), one member per admissible (eta, pi) pair, in canonical order.
std::vector<Partition> lambda_set(int y, int p);

/// Valid (y,p) for excess m and genus g: p < g, p = m mod 2, p <= m.
std::vector<std::pair<int, int>> stable_pairs(int m, int g);

/// Stab(g,n,n-l). Throws std::invalid_argument when m < 0 or n < ceil(3m/2).
IrrDecomposition stab_module(int g, int n, int l);

/// c_lambda = sum_{p<g} sum_{tau |- (m-p)/2} N_{lambda', 2tau, (p)}. The
/// excess is read off |lambda| = ceil(3m/2). Throws std::invalid_argument
/// unless lambda has ceil(m/2) rows for such an m.
long long stable_multiplicity(const Partition& lambda, int g);

/// The m with ceil(3m/2) = size, if any.
std::optional<int> excess_for_size(int size);

struct VanishingReport {
    long long assertions = 0;  // zero multiplicities asserted
    std::vector<std::string> violations;
};

/// Checks every zero predicted for H(B(g,n,r)) by the row-count vanishing
/// statements and by the first-column bound.
VanishingReport verify_vanishing(const HomologyProfile& h);

struct CoreBoundReport {
    long long cores = 0;
    long long vanishing = 0;
    long long extremal = 0;
    long long cuts = 0;
    std::vector<std::string> violations;      // core bounds and extremal cases
    std::vector<std::string> cut_violations;  // edge cutting
};

/// Every core of genus g whose type allows at most max_edges edges and at
/// most max_edges markings: n <= m, equality exactly on theta_{g,l}(p),
/// n + rho <= ceil(9(g-1)/2) + 3(n-r), and rho_gamma <= rho_{gamma_c} for
/// each non-disconnecting edge (g >= 2).
CoreBoundReport check_core_bounds(int g, int max_edges);

}  // namespace mgc
