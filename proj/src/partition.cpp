#include "mgc/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace mgc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> out(lambda.width(), 0);
    for (int part : lambda.parts())
        for (int j = 0; j < part; ++j) ++out[j];
    return Partition(std::move(out));
}

Partition pad_ones(const Partition& lambda, int j) {
    if (j < 0) throw std::invalid_argument("pad_ones: negative count");
    std::vector<int> out = lambda.parts();
    out.insert(out.end(), j, 1);
    return Partition(std::move(out));
}

Partition prepend_row(const Partition& lambda, int n) {
    const int first = n - lambda.size();
    if (first < lambda.width())
        throw std::invalid_argument("prepend_row: V(" + lambda.to_string() + ")_" +
                                    std::to_string(n) + " is undefined");
    std::vector<int> out;
    if (first > 0) out.push_back(first);
    out.insert(out.end(), lambda.parts().begin(), lambda.parts().end());
    return Partition(std::move(out));
}

Partition erase_first_column(const Partition& lambda) {
    std::vector<int> out;
    for (int part : lambda.parts())
        if (part > 1) out.push_back(part - 1);
    return Partition(std::move(out));
}

Partition double_parts(const Partition& lambda) {
    std::vector<int> out = lambda.parts();
    for (int& part : out) part *= 2;
    return Partition(std::move(out));
}

namespace {

void generate(int remaining, int max_part, int step, std::vector<int>& current,
              std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= step; part -= step) {
        if (part % step != 0) continue;
        current.push_back(part);
        generate(remaining - part, part, step, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n, bool even_only) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: negative size");
    std::vector<Partition> out;
    if (even_only && n % 2 != 0) return out;
    std::vector<int> current;
    generate(n, n, even_only ? 2 : 1, current, out);
    return out;
}

Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[')
        throw std::invalid_argument("partition must be written as [a,b,...]");
    ++i;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
            if (ec != std::errc()) throw std::invalid_argument("malformed partition entry");
            i = static_cast<std::size_t>(ptr - text.data());
            parts.push_back(value);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw std::invalid_argument("malformed partition");
        }
    }
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing characters after partition");
    return Partition(std::move(parts));
}

}  // namespace mgc
