#include "mgc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mgc {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
        if (v < 0 || v >= degree() || seen[v])
            throw std::invalid_argument("permutation image is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

Permutation Permutation::transposition(int n, int a, int b) {
    auto p = identity(n);
    std::swap(p.image_[a], p.image_[b]);
    return p;
}

Permutation Permutation::of_cycle_type(const Partition& mu) {
    std::vector<int> image(mu.size());
    int start = 0;
    for (int len : mu.parts()) {
        for (int k = 0; k < len; ++k) image[start + k] = start + (k + 1) % len;
        start += len;
    }
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int i = 0; i < degree(); ++i) inv[image_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::extended(int m) const {
    if (m < degree()) throw std::invalid_argument("cannot shrink a permutation");
    std::vector<int> image = image_;
    for (int i = degree(); i < m; ++i) image.push_back(i);
    return Permutation(std::move(image));
}

Partition Permutation::cycle_type() const {
    std::vector<char> seen(image_.size(), 0);
    std::vector<int> lengths;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = image_[j]) {
            seen[j] = 1;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return Partition(std::move(lengths));
}

int Permutation::sign() const {
    const Partition ct = cycle_type();
    return (degree() - ct.length()) % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (image_[i] != i) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::string out = "(";
    for (int i = 0; i < degree(); ++i) {
        if (i) out += ' ';
        out += std::to_string(image_[i] + 1);
    }
    return out + ")";
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> image(a.degree());
    for (int i = 0; i < a.degree(); ++i) image[i] = a(b(i));
    return Permutation(std::move(image));
}

int sequence_sign(const std::vector<int>& seq) {
    // Parity via cycle decomposition of the rank permutation.
    std::vector<int> order(seq.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return seq[a] < seq[b]; });
    std::vector<char> seen(seq.size(), 0);
    int transpositions = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(order[j])) {
            seen[j] = 1;
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0 ? 1 : -1;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> image(n);
    std::iota(image.begin(), image.end(), 0);
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(factorial(n)));
    do {
        out.emplace_back(image);
    } while (std::next_permutation(image.begin(), image.end()));
    return out;
}

long long factorial(int n) {
    if (n < 0 || n > 20) throw std::out_of_range("factorial argument out of range");
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace mgc
