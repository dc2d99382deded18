#pragma once

#include <cstdint>
#include <vector>

#include "mgc/complex.hpp"

namespace mgc {

using SparseVector = std::vector<std::pair<int, long long>>;  // sorted by index

/// Exact rank over Q of the span of `vectors` (sparse, integer entries).
/// Fraction-free elimination in 64-bit arithmetic, redone with big integers
/// if any intermediate overflows.
long long exact_rank(const std::vector<SparseVector>& vectors);
/// Column rank of a sparse matrix.
long long exact_rank(const SparseMatrix& m);

inline constexpr std::uint32_t kDefaultPrime = 2147483629u;  // largest prime below 2^31

/// Fully reduced row echelon form over F_p of the span of some vectors.
/// rows[k] has a 1 at pivots[k] and 0 at every other pivot position.
struct ModpEchelon {
    std::uint32_t p = kDefaultPrime;
    std::vector<int> pivots;
    std::vector<std::vector<std::pair<int, std::uint32_t>>> rows;

    long long rank() const { return static_cast<long long>(pivots.size()); }
};

ModpEchelon modp_echelon(const std::vector<SparseVector>& vectors, std::uint32_t p = kDefaultPrime);
long long rank_mod_p(const std::vector<SparseVector>& vectors, std::uint32_t p = kDefaultPrime);

/// Trace mod p of a signed permutation on the (stable) span of an echelon
/// form, lifted to the symmetric range (-p/2, p/2).
long long trace_on_span(const ModpEchelon& e, const SignedPermutationMatrix& sigma);

}  // namespace mgc
