#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgc/complex.hpp"
#include "mgc/homology.hpp"
#include "mgc/reptheory.hpp"

namespace mgc {

/// Unsigned Stirling number of the first kind: permutations of n letters
/// with k cycles.
long long stirling_cycle_count(int n, int k);

/// W_{n,k}, realized as H(B(1,n,k+1)).
struct WhitehouseSpec {
    int n = 0, k = 0;
    long long dimension = 0;  // s_{n-1,k}
    int degree = 0;           // 2(n - (k+1))
};
WhitehouseSpec whitehouse_spec(int n, int k);

/// Sum over cycle types of S_{n-1} with r-1 cycles of Ind_{Z(sigma)}(Y),
/// where Y is zeta (x) sgn on each cycle and sgn on exchanges of equal cycles.
/// Roots of unity are summed exactly in Z[x]/Phi_L, so only the rational
/// totals are stored. Requires 2 <= r <= n <= 8.
ClassFunction config_restriction_character(int n, int r);

struct WhitehouseCase {
    int n = 0, r = 0;
    std::vector<long long> dims;
    IrrDecomposition top{0};
    bool concentrated = false;
    bool stirling = false;
    bool restriction = false;
    /// Only when B(1,n+1,r) lies in range.
    std::optional<bool> recursion;
};

struct WhitehouseReport {
    std::vector<WhitehouseCase> cases;
    std::vector<std::string> violations;
};

/// Checks every (n,r) with 2 <= n <= n_max and r_min <= r <= min(n, r_max):
/// concentration in degree 2(n-r), Stirling dimension, the restriction
/// character, and
///   Res H(B(1,n+1,r)) = H(B(1,n,r-1)) + H(B(1,n,r)) (x) V_{n-1,1}
/// whenever n+1 <= n_max.
WhitehouseReport whitehouse_checks(int n_max, int r_min = 2, int r_max = 1 << 20,
                                   const BuildOptions& options = {});

/// Multiplicity stability of the sign-tensored tops H_{2l}(B(1,n,n-l)).
struct WhitehouseStability {
    int l = 0;
    int n_min = 0, n_max = 0;
    std::vector<IrrDecomposition> conjugate;  // per n
    std::optional<int> detected;
    bool sharp = false;
    bool witness = false;  // V_{3^l} inside H(B(1,3l,2l))
};
WhitehouseStability whitehouse_stability(int l, int n_max, const BuildOptions& options = {});

}  // namespace mgc
