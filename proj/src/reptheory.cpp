#include "mgc/reptheory.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mgc {

std::size_t CharacterTable::index_of(const Partition& p) const {
    auto it = std::lower_bound(partitions.begin(), partitions.end(), p, CanonicalOrder{});
    if (it == partitions.end() || !(*it == p))
        throw std::invalid_argument("partition " + p.to_string() + " is not a partition of " +
                                    std::to_string(n));
    return static_cast<std::size_t>(it - partitions.begin());
}

long long centralizer_order(const Partition& mu) {
    long long z = 1;
    for (int k = 1; k <= mu.width(); ++k) {
        const int m = mu.multiplicity(k);
        for (int j = 0; j < m; ++j) z *= k;
        z *= factorial(m);
    }
    return z;
}

long long class_size(const Partition& mu) { return factorial(mu.size()) / centralizer_order(mu); }

long long irreducible_dimension(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    __int128 hooks = 1;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    return static_cast<long long>(static_cast<__int128>(factorial(lambda.size())) / hooks);
}

namespace {

// Rim hooks of length h removable from lambda, as (remaining partition, sign).
std::vector<std::pair<Partition, int>> remove_rim_hooks(const Partition& lambda, int h) {
    const int k = lambda.length();
    std::vector<int> beta(k);
    for (int i = 0; i < k; ++i) beta[i] = lambda[i] + (k - 1 - i);
    std::vector<std::pair<Partition, int>> out;
    for (int i = 0; i < k; ++i) {
        const int target = beta[i] - h;
        if (target < 0) continue;
        if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
        int between = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++between;
        std::vector<int> next = beta;
        next[i] = target;
        std::sort(next.rbegin(), next.rend());
        std::vector<int> parts;
        for (int j = 0; j < k; ++j) {
            const int part = next[j] - (k - 1 - j);
            if (part > 0) parts.push_back(part);
        }
        out.emplace_back(Partition(std::move(parts)), between % 2 == 0 ? 1 : -1);
    }
    return out;
}

std::unique_ptr<CharacterTable> build_table(int n) {
    auto table = std::make_unique<CharacterTable>();
    table->n = n;
    table->partitions = enumerate_partitions(n);
    const std::size_t count = table->partitions.size();
    for (const auto& mu : table->partitions) table->class_sizes.push_back(class_size(mu));
    table->values.assign(count, std::vector<long long>(count, 0));
    if (n == 0) {
        table->values[0][0] = 1;
        return table;
    }
    for (std::size_t a = 0; a < count; ++a) {
        const Partition& lambda = table->partitions[a];
        for (std::size_t b = 0; b < count; ++b) {
            const Partition& mu = table->partitions[b];
            const int h = mu[0];
            const Partition rest(std::vector<int>(mu.parts().begin() + 1, mu.parts().end()));
            const CharacterTable& smaller = character_table(n - h);
            const std::size_t rest_idx = smaller.index_of(rest);
            long long value = 0;
            for (const auto& [reduced, sign] : remove_rim_hooks(lambda, h))
                value += sign * smaller.values[smaller.index_of(reduced)][rest_idx];
            table->values[a][b] = value;
        }
    }
    return table;
}

}  // namespace

const CharacterTable& character_table(int n) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CharacterTable>> cache;
    if (n < 0) throw std::invalid_argument("character_table: negative degree");
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(n); it != cache.end()) return *it->second;
    }
    for (int k = 0; k < n; ++k) character_table(k);
    auto table = build_table(n);
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(n, std::move(table));
    return *it->second;
}

// ---------------------------------------------------------------------------

ClassFunction::ClassFunction(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("ClassFunction: negative degree");
    values_.assign(character_table(n).partitions.size(), Rational(0));
}

const std::vector<Partition>& ClassFunction::cycle_types() const {
    return character_table(n_).partitions;
}

Rational ClassFunction::at(const Partition& mu) const {
    return values_[character_table(n_).index_of(mu)];
}

void ClassFunction::set(const Partition& mu, Rational value) {
    values_[character_table(n_).index_of(mu)] = value;
}

Rational ClassFunction::degree() const {
    return values_.empty() ? Rational(0) : values_.back();  // 1^n is last
}

bool ClassFunction::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v == 0; });
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& other) {
    if (n_ != other.n_) throw std::invalid_argument("class function degree mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& other) {
    if (n_ != other.n_) throw std::invalid_argument("class function degree mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& scalar) {
    for (auto& v : values_) v *= scalar;
    return *this;
}

ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }

ClassFunction pointwise_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.n() != b.n()) throw std::invalid_argument("class function degree mismatch");
    ClassFunction out(a.n());
    for (std::size_t i = 0; i < a.values().size(); ++i) out[i] = a[i] * b[i];
    return out;
}

// ---------------------------------------------------------------------------

IrrDecomposition IrrDecomposition::irreducible(const Partition& lambda, long long mult) {
    IrrDecomposition d(lambda.size());
    d.add(lambda, mult);
    return d;
}

long long IrrDecomposition::operator[](const Partition& lambda) const {
    auto it = mult_.find(lambda);
    return it == mult_.end() ? 0 : it->second;
}

void IrrDecomposition::add(const Partition& lambda, long long mult) {
    if (lambda.size() != n_)
        throw std::invalid_argument("partition " + lambda.to_string() + " is not of size " +
                                    std::to_string(n_));
    if (mult == 0) return;
    auto& slot = mult_[lambda];
    slot += mult;
    if (slot == 0) mult_.erase(lambda);
}

long long IrrDecomposition::dimension() const {
    long long d = 0;
    for (const auto& [lambda, mult] : mult_) d += mult * irreducible_dimension(lambda);
    return d;
}

IrrDecomposition& IrrDecomposition::operator+=(const IrrDecomposition& other) {
    if (n_ != other.n_) throw std::invalid_argument("decomposition degree mismatch");
    for (const auto& [lambda, mult] : other.mult_) add(lambda, mult);
    return *this;
}

std::string IrrDecomposition::to_string() const {
    if (mult_.empty()) return "0";
    std::string out;
    for (const auto& [lambda, mult] : mult_) {
        if (!out.empty()) out += " + ";
        if (mult != 1) out += std::to_string(mult);
        out += lambda.to_string();
    }
    return out;
}

ClassFunction irreducible_character(const Partition& lambda) {
    const CharacterTable& table = character_table(lambda.size());
    ClassFunction chi(lambda.size());
    const auto& row = table.values[table.index_of(lambda)];
    for (std::size_t i = 0; i < row.size(); ++i) chi[i] = Rational(row[i]);
    return chi;
}

ClassFunction character_of(const IrrDecomposition& decomposition) {
    const CharacterTable& table = character_table(decomposition.n());
    ClassFunction chi(decomposition.n());
    for (const auto& [lambda, mult] : decomposition.terms()) {
        const auto& row = table.values[table.index_of(lambda)];
        for (std::size_t i = 0; i < row.size(); ++i) chi[i] += Rational(mult * row[i]);
    }
    return chi;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.n() != b.n()) throw std::invalid_argument("class function degree mismatch");
    const CharacterTable& table = character_table(a.n());
    Rational sum(0);
    for (std::size_t i = 0; i < table.partitions.size(); ++i)
        sum += Rational(table.class_sizes[i]) * a[i] * b[i];
    return sum / Rational(factorial(a.n()));
}

IrrDecomposition decompose(const ClassFunction& chi) {
    const CharacterTable& table = character_table(chi.n());
    IrrDecomposition out(chi.n());
    for (std::size_t a = 0; a < table.partitions.size(); ++a) {
        Rational sum(0);
        for (std::size_t b = 0; b < table.partitions.size(); ++b)
            sum += Rational(table.class_sizes[b] * table.values[a][b]) * chi[b];
        sum /= Rational(factorial(chi.n()));
        if (boost::multiprecision::denominator(sum) != 1)
            throw std::domain_error("decompose: non-integral multiplicity for " +
                                    table.partitions[a].to_string());
        if (sum < 0)
            throw std::domain_error("decompose: negative multiplicity for " +
                                    table.partitions[a].to_string());
        out.add(table.partitions[a], static_cast<long long>(boost::multiprecision::numerator(sum)));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct LrSearch {
    const Partition& outer;
    const Partition& inner;
    const Partition& content;
    std::vector<std::pair<int, int>> cells;
    std::vector<std::vector<int>> grid;
    std::vector<int> counts;

    LrSearch(const Partition& l, const Partition& m, const Partition& n)
        : outer(l), inner(m), content(n) {
        for (int i = 0; i < outer.length(); ++i)
            for (int c = outer[i] - 1; c >= inner[i]; --c) cells.emplace_back(i, c);
        grid.assign(outer.length(), std::vector<int>(outer.width(), -1));
        counts.assign(content.length(), 0);
    }

    long long run(std::size_t idx) {
        if (idx == cells.size()) return 1;
        const auto [row, col] = cells[idx];
        int hi = content.length() - 1;
        if (col + 1 < outer[row]) hi = std::min(hi, grid[row][col + 1]);
        int lo = 0;
        if (row > 0 && col >= inner[row - 1]) lo = grid[row - 1][col] + 1;
        long long total = 0;
        for (int v = lo; v <= hi; ++v) {
            if (counts[v] >= content[v]) continue;
            if (v > 0 && counts[v] + 1 > counts[v - 1]) continue;
            ++counts[v];
            grid[row][col] = v;
            total += run(idx + 1);
            grid[row][col] = -1;
            --counts[v];
        }
        return total;
    }
};

}  // namespace

long long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() != mu.size() + nu.size()) return 0;
    if (mu.length() > lambda.length() || nu.length() > lambda.length()) return 0;
    for (int i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return 0;
    for (int i = 0; i < nu.length(); ++i)
        if (nu[i] > lambda[i]) return 0;
    LrSearch search(lambda, mu, nu);
    return search.run(0);
}

IrrDecomposition induce_product(const IrrDecomposition& a, const IrrDecomposition& b) {
    const int n = a.n() + b.n();
    IrrDecomposition out(n);
    const auto targets = enumerate_partitions(n);
    for (const auto& [alpha, x] : a.terms())
        for (const auto& [beta, y] : b.terms())
            for (const auto& lambda : targets) {
                const long long c = lr_coefficient(lambda, alpha, beta);
                if (c != 0) out.add(lambda, c * x * y);
            }
    return out;
}

IrrDecomposition restrict(const IrrDecomposition& a) {
    if (a.n() < 2) throw std::invalid_argument("restrict: requires n >= 2");
    IrrDecomposition out(a.n() - 1);
    for (const auto& [lambda, mult] : a.terms()) {
        for (int i = 0; i < lambda.length(); ++i) {
            if (lambda[i] <= lambda[i + 1]) continue;  // not a corner
            std::vector<int> parts = lambda.parts();
            if (--parts[i] == 0) parts.pop_back();
            out.add(Partition(std::move(parts)), mult);
        }
    }
    return out;
}

ClassFunction restrict(const ClassFunction& chi) {
    if (chi.n() < 1) throw std::invalid_argument("restrict: requires n >= 1");
    ClassFunction out(chi.n() - 1);
    const auto& types = out.cycle_types();
    for (std::size_t i = 0; i < types.size(); ++i) out[i] = chi.at(pad_ones(types[i], 1));
    return out;
}

IrrDecomposition tensor_sign(const IrrDecomposition& a) {
    IrrDecomposition out(a.n());
    for (const auto& [lambda, mult] : a.terms()) out.add(conjugate(lambda), mult);
    return out;
}

IrrDecomposition grow_first_row(const IrrDecomposition& a) {
    IrrDecomposition out(a.n() + 1);
    for (const auto& [lambda, mult] : a.terms()) {
        std::vector<int> parts = lambda.parts();
        if (parts.empty())
            parts.push_back(1);
        else
            ++parts.front();
        out.add(Partition(std::move(parts)), mult);
    }
    return out;
}

IrrDecomposition grow_first_column(const IrrDecomposition& a) {
    IrrDecomposition out(a.n() + 1);
    for (const auto& [lambda, mult] : a.terms()) out.add(pad_ones(lambda, 1), mult);
    return out;
}

IrrDecomposition hyperoctahedral_doubles(int y) {
    if (y < 0) throw std::invalid_argument("hyperoctahedral_doubles: negative size");
    IrrDecomposition out(2 * y);
    for (const auto& tau : enumerate_partitions(y)) out.add(double_parts(tau), 1);
    return out;
}

ClassFunction induce_from_subgroup(int n, const std::vector<Permutation>& group,
                                   const std::vector<Rational>& chi, bool validate) {
    if (group.size() != chi.size())
        throw std::invalid_argument("induce_from_subgroup: character size mismatch");
    if (group.empty()) throw std::invalid_argument("induce_from_subgroup: empty group");
    for (const auto& h : group)
        if (h.degree() != n) throw std::invalid_argument("induce_from_subgroup: degree mismatch");
    if (validate) {
        std::map<Permutation, std::size_t> index;
        for (std::size_t i = 0; i < group.size(); ++i) index.emplace(group[i], i);
        if (index.size() != group.size())
            throw std::invalid_argument("induce_from_subgroup: repeated element");
        auto id = index.find(Permutation::identity(n));
        if (id == index.end()) throw std::invalid_argument("induce_from_subgroup: no identity");
        if (chi[id->second] != 1)
            throw std::invalid_argument("induce_from_subgroup: character not multiplicative");
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = 0; j < group.size(); ++j) {
                auto it = index.find(group[i] * group[j]);
                if (it == index.end())
                    throw std::invalid_argument("induce_from_subgroup: not closed under product");
                if (chi[it->second] != chi[i] * chi[j])
                    throw std::invalid_argument(
                        "induce_from_subgroup: character not multiplicative");
            }
    }
    ClassFunction out(n);
    const CharacterTable& table = character_table(n);
    std::vector<Rational> sums(table.partitions.size(), Rational(0));
    for (std::size_t i = 0; i < group.size(); ++i)
        sums[table.index_of(group[i].cycle_type())] += chi[i];
    const Rational order(static_cast<long long>(group.size()));
    for (std::size_t k = 0; k < sums.size(); ++k)
        out[k] = sums[k] * Rational(centralizer_order(table.partitions[k])) / order;
    return out;
}

int width(const IrrDecomposition& a) {
    if (a.is_zero()) throw std::invalid_argument("width of the zero module");
    int w = 0;
    for (const auto& [lambda, mult] : a.terms()) w = std::max(w, lambda.width());
    return w;
}

int rows(const IrrDecomposition& a) {
    if (a.is_zero()) throw std::invalid_argument("rows of the zero module");
    int r = 0;
    for (const auto& [lambda, mult] : a.terms()) r = std::max(r, lambda.length());
    return r;
}

}  // namespace mgc
