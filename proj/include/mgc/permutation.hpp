#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mgc/partition.hpp"

namespace mgc {

/// A permutation of {0, ..., n-1}, stored as its image vector. Leg labels are
/// 1-based in graphs; `image()[i]` is the 0-based image of label i+1.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);  // validates bijectivity
    static Permutation identity(int n);
    /// (a b), 0-based points.
    static Permutation transposition(int n, int a, int b);
    /// Canonical element of the given cycle type: cycles on consecutive blocks.
    static Permutation of_cycle_type(const Partition& mu);

    int degree() const noexcept { return static_cast<int>(image_.size()); }
    int operator()(int i) const { return image_[i]; }
    const std::vector<int>& image() const noexcept { return image_; }

    Permutation inverse() const;
    /// Embed into S_m (m >= n) fixing the new points.
    Permutation extended(int m) const;
    Partition cycle_type() const;
    int sign() const;
    bool is_identity() const;
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.image_ <=> b.image_;
    }

private:
    std::vector<int> image_;
};

/// (a * b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

/// Parity of a sequence of distinct integers (+1 even, -1 odd).
int sequence_sign(const std::vector<int>& seq);

/// All n! permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

/// n!, exact for n <= 20.
long long factorial(int n);

}  // namespace mgc
