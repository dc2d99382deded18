#include "mgc/whitehouse.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mgc {

namespace {

using Poly = std::vector<long long>;  // coefficient of x^k at index k

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division by a monic polynomial
Poly divide_monic(Poly a, const Poly& b) {
    trim(a);
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {};
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const long long c = a[i];
        q[i - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    if (!a.empty()) throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

Poly remainder_monic(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
        const long long c = a[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    trim(a);
    return a;
}

Poly cyclotomic(int L) {
    Poly p(L + 1, 0);
    p[0] = -1;
    p[L] = 1;
    for (int d = 1; d < L; ++d)
        if (L % d == 0) p = divide_monic(p, cyclotomic(d));
    return p;
}

// Sum of counts[k] * w^k for a primitive L-th root of unity w; must be rational.
long long cyclotomic_total(const std::vector<long long>& counts, int L) {
    Poly rem = remainder_monic(Poly(counts.begin(), counts.end()), cyclotomic(L));
    if (rem.size() > 1) throw std::logic_error("irrational character value");
    return rem.empty() ? 0 : rem[0];
}

// Cycles on consecutive blocks, i -> i+1 inside each block.
struct Blocks {
    std::vector<int> start, length;
    Permutation sigma;
};

Blocks blocks_of(const Partition& mu) {
    Blocks b;
    std::vector<int> image(mu.size());
    int s = 0;
    for (int j : mu.parts()) {
        b.start.push_back(s);
        b.length.push_back(j);
        for (int t = 0; t < j; ++t) image[s + t] = s + (t + 1) % j;
        s += j;
    }
    b.sigma = Permutation(image);
    return b;
}

IrrDecomposition total(const HomologyProfile& h) {
    IrrDecomposition out(h.n);
    for (const auto& d : h.decompositions) out += d;
    return out;
}

}  // namespace

long long stirling_cycle_count(int n, int k) {
    if (n < 0 || k < 0) return 0;
    std::vector<std::vector<long long>> s(n + 1, std::vector<long long>(n + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j) s[i][j] = s[i - 1][j - 1] + (i - 1) * s[i - 1][j];
    return k <= n ? s[n][k] : 0;
}

WhitehouseSpec whitehouse_spec(int n, int k) {
    WhitehouseSpec w;
    w.n = n;
    w.k = k;
    w.dimension = stirling_cycle_count(n - 1, k);
    w.degree = 2 * (n - (k + 1));
    return w;
}

ClassFunction config_restriction_character(int n, int r) {
    if (r < 2 || r > n || n > 8) throw std::invalid_argument("config_restriction_character: need 2 <= r <= n <= 8");
    const int N = n - 1;
    ClassFunction out(N);
    const auto everything = all_permutations(N);
    for (const auto& mu : enumerate_partitions(N)) {
        if (mu.length() != r - 1) continue;
        const Blocks b = blocks_of(mu);
        int L = 1;
        for (int j : b.length) L = std::lcm(L, j);
        std::vector<int> block_of(N), offset(N);
        for (std::size_t i = 0; i < b.start.size(); ++i)
            for (int t = 0; t < b.length[i]; ++t) {
                block_of[b.start[i] + t] = static_cast<int>(i);
                offset[b.start[i] + t] = t;
            }
        // counts[nu][k]: signed number of centralizer elements of type nu with zeta-exponent k
        std::map<Partition, std::vector<long long>> counts;
        long long order = 0;
        for (const auto& z : everything) {
            if (!(z * b.sigma == b.sigma * z)) continue;
            ++order;
            int k = 0;
            for (std::size_t i = 0; i < b.start.size(); ++i)
                k += offset[z(b.start[i])] * (L / b.length[i]);
            auto& c = counts[z.cycle_type()];
            if (c.empty()) c.assign(L, 0);
            c[k % L] += z.sign();
        }
        for (const auto& [nu, c] : counts) {
            // Ind(g) = |C(g)| / |Z| * sum of Y over Z meeting the class of g
            const Rational value = Rational(centralizer_order(nu) * cyclotomic_total(c, L), order);
            out.set(nu, out.at(nu) + value);
        }
    }
    return out;
}

WhitehouseReport whitehouse_checks(int n_max, int r_min, int r_max, const BuildOptions& options) {
    WhitehouseReport rep;
    r_min = std::max(r_min, 2);
    std::set<std::pair<int, int>> needed;
    for (int n = 2; n <= n_max; ++n)
        for (int r = r_min; r <= std::min(n, r_max); ++r) {
            needed.insert({n, r});
            if (n + 1 <= n_max) {
                needed.insert({n + 1, r});
                needed.insert({n, r - 1});
            }
        }
    const std::vector<std::pair<int, int>> jobs(needed.begin(), needed.end());
    std::vector<HomologyProfile> profiles(jobs.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (std::size_t j = 0; j < jobs.size(); ++j) {
        try {
            BuildOptions inner = options;
            inner.exec = Execution::serial;
            profiles[j] = homology_decomposition(build_complex(1, jobs[j].first, jobs[j].second, inner));
        } catch (...) {
#pragma omp critical(mgc_whitehouse_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    std::map<std::pair<int, int>, const HomologyProfile*> at;
    for (std::size_t j = 0; j < jobs.size(); ++j) at[jobs[j]] = &profiles[j];

    for (int n = 2; n <= n_max; ++n)
        for (int r = r_min; r <= std::min(n, r_max); ++r) {
            const HomologyProfile& h = *at.at({n, r});
            WhitehouseCase c;
            c.n = n;
            c.r = r;
            c.dims = h.dims;
            const int top = 2 * (n - r);
            c.top = top <= h.top_degree() ? h.decompositions[top] : IrrDecomposition(n);
            c.concentrated = true;
            for (int i = 0; i <= h.top_degree(); ++i)
                if (i != top && h.dims[i] != 0) c.concentrated = false;
            const long long dim = top <= h.top_degree() ? h.dims[top] : 0;
            c.stirling = dim == stirling_cycle_count(n - 1, r - 1);
            c.restriction = restrict(character_of(total(h))) == config_restriction_character(n, r);
            if (n + 1 <= n_max) {
                const IrrDecomposition lhs = restrict(total(*at.at({n + 1, r})));
                IrrDecomposition rhs = total(*at.at({n, r - 1}));
                const ClassFunction twisted = pointwise_product(character_of(total(h)),
                                                                irreducible_character(Partition{n - 1, 1}));
                rhs += decompose(twisted);
                c.recursion = lhs == rhs;
            }
            const std::string where = "(n,r)=(" + std::to_string(n) + "," + std::to_string(r) + ")";
            if (!c.concentrated) rep.violations.push_back("homology not concentrated at " + where);
            if (!c.stirling) rep.violations.push_back("dimension differs from the Stirling count at " + where);
            if (!c.restriction) rep.violations.push_back("restriction character mismatch at " + where);
            if (c.recursion && !*c.recursion) rep.violations.push_back("recursion fails at " + where);
            rep.cases.push_back(std::move(c));
        }
    return rep;
}

WhitehouseStability whitehouse_stability(int l, int n_max, const BuildOptions& options) {
    if (l < 0) throw std::invalid_argument("whitehouse_stability: l must be non-negative");
    WhitehouseStability s;
    s.l = l;
    s.n_min = l;
    s.n_max = n_max;
    if (n_max <= s.n_min) throw std::invalid_argument("whitehouse_stability: window too small");
    const int count = n_max - s.n_min + 1;
    std::vector<IrrDecomposition> tops(count, IrrDecomposition(0));
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < count; ++j) {
        try {
            const int n = s.n_min + j;
            BuildOptions inner = options;
            inner.exec = Execution::serial;
            const HomologyProfile h = homology_decomposition(build_complex(1, n, n - l, inner));
            tops[j] = 2 * l <= h.top_degree() ? h.decompositions[2 * l] : IrrDecomposition(n);
        } catch (...) {
#pragma omp critical(mgc_whitehouse_error)
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    for (const auto& t : tops) s.conjugate.push_back(tensor_sign(t));

    std::vector<bool> match(count, false);
    for (int j = 0; j + 1 < count; ++j) match[j] = grow_first_row(s.conjugate[j]) == s.conjugate[j + 1];
    for (int j = count - 2; j >= 0 && match[j]; --j) s.detected = s.n_min + j;
    if (s.detected) s.sharp = *s.detected == s.n_min || !match[*s.detected - 1 - s.n_min];
    if (3 * l <= n_max) s.witness = tops[3 * l - s.n_min][Partition(std::vector<int>(l, 3))] > 0;
    return s;
}

}  // namespace mgc
