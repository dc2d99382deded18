#pragma once

#include <map>
#include <vector>

#include "mgc/complex.hpp"
#include "mgc/linalg.hpp"
#include "mgc/reptheory.hpp"

namespace mgc {

struct HomologyProfile {
    int g = 0, n = 0, r = 0;
    std::vector<long long> chain_dims;
    std::vector<long long> ranks;  // ranks[i] = rank of d_i : C_i -> C_{i-1}
    std::vector<long long> dims;
    std::vector<ClassFunction> characters;
    std::vector<IrrDecomposition> decompositions;

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
    long long euler_chain() const;
    long long euler_homology() const;
    /// Multiplicity of lambda in H_i (0 outside the computed range).
    long long multiplicity(int i, const Partition& lambda) const;
};

/// Exact ranks of every differential.
std::vector<long long> differential_ranks(const EquivariantComplex& c);

/// dim H_i = dim C_i - rank d_i - rank d_{i+1}.
std::vector<long long> homology_dimensions(const EquivariantComplex& c);

/// chi_H(sigma) = chi_C(sigma) - tr(sigma | im d_{i+1}) - tr(sigma | im d_i). Image
/// traces are taken mod a large prime on a reduced echelon basis of the image,
/// after certifying that the mod-p rank equals the exact rank.
ClassFunction homology_character(const EquivariantComplex& c, int i);

/// Characters and irreducible decompositions in every degree. Throws
/// std::logic_error on a non-integral multiplicity or an Euler mismatch.
HomologyProfile homology_decomposition(const EquivariantComplex& c);

/// Independent check through isotypic projectors e_lambda = sum chi_lambda(s) s;
/// materializes all n! group elements, so it is limited to n <= 6.
IrrDecomposition projector_decomposition(const EquivariantComplex& c, int i);

/// Composition of signed permutation matrices: (a * b) applies b first.
SignedPermutationMatrix compose(const SignedPermutationMatrix& a, const SignedPermutationMatrix& b);

/// Action matrices of every element of S_n on C_i, built from adjacent
/// transpositions; keyed by permutation.
std::map<Permutation, SignedPermutationMatrix> full_action(const EquivariantComplex& c, int i);

}  // namespace mgc
