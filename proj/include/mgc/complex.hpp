#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mgc/graphs.hpp"
#include "mgc/permutation.hpp"
#include "mgc/reptheory.hpp"

namespace mgc {

/// Bumped whenever enumeration or orientation conventions change; cache
/// files written under another version are ignored.
inline constexpr int kEnumerationVersion = 1;

/// Column-major sparse integer matrix. Each column is sorted by row.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> columns;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), columns(c) {}

    long long at(int row, int col) const;
    std::size_t nonzeros() const;
    bool is_zero() const { return nonzeros() == 0; }
    /// this * other
    SparseMatrix multiply(const SparseMatrix& other) const;
    std::vector<std::vector<long long>> dense() const;

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

/// Signed permutation matrix: basis element j goes to sign[j] * e_{target[j]}.
struct SignedPermutationMatrix {
    std::vector<int> target;
    std::vector<int> sign;

    int size() const { return static_cast<int>(target.size()); }
    long long trace() const;
    SparseMatrix sparse() const;
    friend bool operator==(const SignedPermutationMatrix&, const SignedPermutationMatrix&) = default;
};

enum class Execution { serial, parallel };

struct EquivariantComplex {
    int g = 0, n = 0, r = 0;
    int excess = 0;
    /// basis[i]: non-vanishing classes of degree i, sorted by key.
    std::vector<std::vector<OrientedClass>> basis;
    /// differential[i]: C_i -> C_{i-1}; differential[0] has zero rows.
    std::vector<SparseMatrix> differential;
    int version = kEnumerationVersion;

    int top_degree() const { return static_cast<int>(basis.size()) - 1; }
    int dim(int i) const;
    int total_dim() const;
    /// Index of a class key in degree i, or -1.
    int find(int i, const std::string& key) const;

    std::vector<std::unordered_map<std::string, int>> index;
};

/// Per-degree matrices of a chain map between two complexes.
struct ChainMap {
    int source_n = 0, target_n = 0;
    std::vector<SparseMatrix> matrices;
};

/// All non-vanishing labeled classes of type (g,n,s), s >= r, with degree in
/// [0, m]. Sorted by (degree, key). Empty for negative excess.
std::vector<OrientedClass> enumerate_marked_graphs(int g, int n, int r,
                                                   Execution exec = Execution::parallel);

/// Unlabeled (legs interchangeable) classes of type (g,n,s), s >= r, before
/// labeling; vanishing classes are kept.
std::vector<MarkedGraph> enumerate_unlabeled(int g, int n, int r);

/// Columns of the differential C_i -> C_{i-1}.
SparseMatrix assemble_differential(const EquivariantComplex& c, int i,
                                   Execution exec = Execution::parallel);

/// Enumerate (or load from cache), assemble, and check d^2 = 0. Throws
/// std::logic_error naming the offending basis pair if d^2 != 0.
struct BuildOptions {
    Execution exec = Execution::parallel;
    std::string cache_dir;  // empty: no cache
    bool verbose = false;
};
EquivariantComplex build_complex(int g, int n, int r, const BuildOptions& options = {});

/// Assemble a complex from a given basis (no enumeration).
EquivariantComplex assemble_complex(int g, int n, int r, std::vector<OrientedClass> classes,
                                    Execution exec = Execution::parallel);

/// Throws std::logic_error unless every composite d_{i-1} d_i vanishes.
void check_d_squared(const EquivariantComplex& c);

/// psi: B(g,n,r) -> B(g,n+1,r+1). Throws std::logic_error if it fails to
/// commute with the differentials.
ChainMap stabilization_map(const EquivariantComplex& source, const EquivariantComplex& target);

SignedPermutationMatrix group_action_matrix(const EquivariantComplex& c, int i, const Permutation& sigma);

/// Trace of the action on C_i at one representative per cycle type.
ClassFunction chain_character(const EquivariantComplex& c, int i);

/// Cache files: header lines then one "degree<TAB>encoding" line per class.
std::string cache_path(const std::string& dir, int g, int n, int r);
void save_cache(const EquivariantComplex& c, const std::string& path);
/// Returns nullopt (and fills `why`) on a missing, stale or corrupt file.
std::optional<EquivariantComplex> load_cache(const std::string& path, int g, int n, int r,
                                             std::string* why = nullptr);

}  // namespace mgc
