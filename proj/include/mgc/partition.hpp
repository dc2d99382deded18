#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace mgc {

/// A non-increasing sequence of positive integers. The empty partition is the
/// unique partition of 0. Indexes both irreducible S_n-modules and cycle types.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and non-increasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int size() const noexcept { return size_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
    bool empty() const noexcept { return parts_.empty(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Number of parts equal to k.
    int multiplicity(int k) const;

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Strict weak order placing partitions in reverse lexicographic order
/// ((n) first, 1^n last); the canonical order for all output.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return b.parts() < a.parts();
    }
};

Partition conjugate(const Partition& lambda);
/// (lambda, 1^j)
Partition pad_ones(const Partition& lambda, int j);
/// (n - |lambda|, lambda_1, ..., lambda_k); throws when n - |lambda| < lambda_1.
Partition prepend_row(const Partition& lambda, int n);
/// (lambda_1 - 1, ..., lambda_k - 1) with zeros dropped.
Partition erase_first_column(const Partition& lambda);
/// Multiply every part by two.
Partition double_parts(const Partition& lambda);

/// All partitions of n in canonical (reverse lexicographic) order.
std::vector<Partition> enumerate_partitions(int n, bool even_only = false);

/// Parses "[4,1,1]" (whitespace tolerant, "[]" is the empty partition).
Partition parse_partition(std::string_view text);

}  // namespace mgc
