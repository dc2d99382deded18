#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <vector>

#include "mgc/partition.hpp"
#include "mgc/permutation.hpp"

namespace mgc {

using Rational = boost::multiprecision::cpp_rational;

/// Character table of S_n with rows indexed by irreducibles and columns by
/// cycle types, both in canonical partition order.
struct CharacterTable {
    int n = 0;
    std::vector<Partition> partitions;
    std::vector<long long> class_sizes;
    std::vector<std::vector<long long>> values;  // values[lambda][mu]

    std::size_t index_of(const Partition& p) const;
};

/// Cached, thread-safe. Entries computed by Murnaghan-Nakayama rim-hook
/// recursion against the tables of smaller symmetric groups.
const CharacterTable& character_table(int n);

/// n! / |class of mu|.
long long centralizer_order(const Partition& mu);
long long class_size(const Partition& mu);
/// dim V_lambda by the hook length formula.
long long irreducible_dimension(const Partition& lambda);

/// A rational-valued class function on S_n.
class ClassFunction {
public:
    explicit ClassFunction(int n);

    int n() const noexcept { return n_; }
    const std::vector<Partition>& cycle_types() const;
    const std::vector<Rational>& values() const noexcept { return values_; }

    Rational at(const Partition& mu) const;
    void set(const Partition& mu, Rational value);
    Rational& operator[](std::size_t idx) { return values_[idx]; }
    const Rational& operator[](std::size_t idx) const { return values_[idx]; }

    /// Value at the identity class.
    Rational degree() const;
    bool is_zero() const;

    ClassFunction& operator+=(const ClassFunction& other);
    ClassFunction& operator-=(const ClassFunction& other);
    ClassFunction& operator*=(const Rational& scalar);

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
    int n_;
    std::vector<Rational> values_;
};

ClassFunction operator+(ClassFunction a, const ClassFunction& b);
ClassFunction operator-(ClassFunction a, const ClassFunction& b);
/// Pointwise product (character of the inner tensor product).
ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b);

/// Irreducible decomposition of an S_n-module: partition -> multiplicity.
class IrrDecomposition {
public:
    using Map = std::map<Partition, long long, CanonicalOrder>;

    explicit IrrDecomposition(int n) : n_(n) {}
    static IrrDecomposition irreducible(const Partition& lambda, long long mult = 1);
    /// The unit of S_0: empty partition with multiplicity 1.
    static IrrDecomposition unit() { return irreducible(Partition{}); }

    int n() const noexcept { return n_; }
    const Map& terms() const noexcept { return mult_; }
    long long operator[](const Partition& lambda) const;
    /// Adds (possibly negative) multiplicity; zero entries are erased.
    void add(const Partition& lambda, long long mult);
    bool is_zero() const noexcept { return mult_.empty(); }
    long long dimension() const;

    IrrDecomposition& operator+=(const IrrDecomposition& other);
    friend bool operator==(const IrrDecomposition&, const IrrDecomposition&) = default;

    std::string to_string() const;

private:
    int n_;
    Map mult_;
};

ClassFunction irreducible_character(const Partition& lambda);
ClassFunction character_of(const IrrDecomposition& decomposition);

/// <a, b> = (1/n!) sum_g a(g) b(g^-1); exact.
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

/// Multiplicities via inner products with irreducible characters. Throws
/// std::domain_error when a multiplicity is negative or non-integral.
IrrDecomposition decompose(const ClassFunction& chi);

/// Littlewood-Richardson coefficient: multiplicity of V_lambda in V_mu o V_nu.
long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Ind_{S_a x S_b}^{S_{a+b}} (A boxtimes B).
IrrDecomposition induce_product(const IrrDecomposition& a, const IrrDecomposition& b);

/// Res^{S_n}_{S_{n-1}} by the branching rule; requires n >= 2.
IrrDecomposition restrict(const IrrDecomposition& a);
/// Character restriction to S_{n-1}: value at mu is the value at (mu, 1).
ClassFunction restrict(const ClassFunction& chi);

/// Tensor with the sign representation (conjugate every partition).
IrrDecomposition tensor_sign(const IrrDecomposition& a);

/// Add one box to the first row (resp. column) of every summand.
IrrDecomposition grow_first_row(const IrrDecomposition& a);
IrrDecomposition grow_first_column(const IrrDecomposition& a);

/// Ind_{S_2 wr S_y}^{S_{2y}} of the trivial module: every double 2*tau once.
IrrDecomposition hyperoctahedral_doubles(int y);

/// Induced character of a one-dimensional character of a subgroup H of S_n.
/// H is the full element list; `chi[i]` is the value on `group[i]`. When
/// `validate` is set the subgroup and homomorphism axioms are checked and
/// std::invalid_argument is thrown on failure.
ClassFunction induce_from_subgroup(int n, const std::vector<Permutation>& group,
                                   const std::vector<Rational>& chi, bool validate = true);

/// Largest first row / largest number of rows among summands. Throws on zero.
int width(const IrrDecomposition& a);
int rows(const IrrDecomposition& a);

}  // namespace mgc
