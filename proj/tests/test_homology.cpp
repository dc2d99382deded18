#include "doctest.h"

#include <map>
#include <numeric>
#include <random>

#include "mgc/homology.hpp"

using mgc::IrrDecomposition;
using mgc::Partition;
using mgc::SparseVector;

namespace {

// Plain rational Gaussian elimination on dense rows.
long long rational_rank(const std::vector<SparseVector>& vecs, int dim) {
    std::vector<std::vector<mgc::Rational>> m;
    for (const auto& v : vecs) {
        std::vector<mgc::Rational> row(dim, 0);
        for (const auto& [k, x] : v) row[k] = mgc::Rational(x);
        m.push_back(std::move(row));
    }
    long long rk = 0;
    for (int col = 0; col < dim && rk < static_cast<long long>(m.size()); ++col) {
        std::size_t piv = m.size();
        for (std::size_t i = rk; i < m.size(); ++i)
            if (m[i][col] != 0) piv = i;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rk]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (static_cast<long long>(i) != rk && m[i][col] != 0) {
                const mgc::Rational f = m[i][col] / m[rk][col];
                for (int j = 0; j < dim; ++j) m[i][j] -= f * m[rk][j];
            }
        ++rk;
    }
    return rk;
}

long long permutations_with_cycles(int n, int k) {
    long long count = 0;
    for (const auto& s : mgc::all_permutations(n)) count += s.cycle_type().length() == k;
    return count;
}

}  // namespace

TEST_CASE("exact rank against rational elimination") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-2, 2), coin(0, 3);
    for (int trial = 0; trial < 60; ++trial) {
        const int dim = 1 + trial % 9;
        const int count = 1 + (trial * 7) % 11;
        std::vector<SparseVector> vecs(count);
        for (auto& v : vecs)
            for (int k = 0; k < dim; ++k)
                if (coin(rng) == 0) {
                    const int x = entry(rng);
                    if (x) v.emplace_back(k, x);
                }
        // a few dependent combinations
        if (count > 2) {
            std::map<int, long long> sum;
            for (const auto& [k, x] : vecs[0]) sum[k] += 3 * x;
            for (const auto& [k, x] : vecs[1]) sum[k] -= 2 * x;
            SparseVector dep;
            for (const auto& [k, x] : sum)
                if (x) dep.emplace_back(k, x);
            vecs.push_back(dep);
        }
        const long long expected = rational_rank(vecs, dim);
        CHECK(mgc::exact_rank(vecs) == expected);
        CHECK(mgc::rank_mod_p(vecs) == expected);
        CHECK(mgc::modp_echelon(vecs).rank() == expected);
    }
}

TEST_CASE("exact rank survives 64-bit overflow") {
    const long long big = 3037000493LL;  // big*big overflows a signed 64-bit integer
    std::vector<SparseVector> vecs{{{0, big}, {1, 1}, {2, 7}},
                                   {{0, big - 2}, {1, big}, {2, 1}},
                                   {{0, 5}, {1, big - 4}, {2, big}}};
    CHECK(mgc::exact_rank(vecs) == rational_rank(vecs, 3));
    // rows 0 and 1 times large coprime factors, then their sum
    std::vector<SparseVector> dep{{{0, big}, {1, 2}}, {{0, 1}, {1, big}}, {{0, big + 1}, {1, big + 2}}};
    CHECK(mgc::exact_rank(dep) == 2);
    // mod p collapses what Q keeps apart
    std::vector<SparseVector> collapse{{{0, 1}, {1, 1}}, {{0, 1}, {1, 1 + static_cast<long long>(mgc::kDefaultPrime)}}};
    CHECK(mgc::exact_rank(collapse) == 2);
    CHECK(mgc::rank_mod_p(collapse) == 1);
}

TEST_CASE("reduced echelon and traces on a span") {
    // span of e0+e1 and e2 in Q^4; the swap (0 1) fixes the span, the swap (2 3) does not
    std::vector<SparseVector> vecs{{{0, 2}, {1, 2}}, {{2, 1}}, {{0, 1}, {1, 1}, {2, 5}}};
    const auto e = mgc::modp_echelon(vecs);
    CHECK(e.pivots == std::vector<int>{0, 2});
    CHECK(e.rows[0] == std::vector<std::pair<int, std::uint32_t>>{{0, 1}, {1, 1}});
    mgc::SignedPermutationMatrix swap01{{1, 0, 2, 3}, {1, 1, 1, 1}};
    CHECK(mgc::trace_on_span(e, swap01) == 2);
    mgc::SignedPermutationMatrix neg{{1, 0, 2, 3}, {-1, -1, 1, 1}};
    CHECK(mgc::trace_on_span(e, neg) == 0);
}

TEST_CASE("B(1,0,0) is Q in degree 0") {
    const auto c = mgc::build_complex(1, 0, 0);
    CHECK(mgc::homology_dimensions(c) == std::vector<long long>{1});
    const auto h = mgc::homology_decomposition(c);
    CHECK(h.decompositions[0] == IrrDecomposition::unit());
}

TEST_CASE("genus one homology is concentrated with Stirling dimensions") {
    for (auto [n, r] : {std::pair{4, 3}, {5, 3}, {3, 2}, {4, 2}, {5, 4}}) {
        const auto c = mgc::build_complex(1, n, r);
        const auto dims = mgc::homology_dimensions(c);
        for (int i = 0; i <= c.top_degree(); ++i) {
            if (i == 2 * (n - r))
                CHECK(dims[i] == permutations_with_cycles(n - 1, r - 1));
            else
                CHECK(dims[i] == 0);
        }
    }
}

TEST_CASE("homology characters") {
    const auto c = mgc::build_complex(1, 3, 2);
    const auto chi = mgc::homology_character(c, 2);
    CHECK(chi == mgc::irreducible_character(Partition{3}));
    CHECK(mgc::homology_character(c, 1).is_zero());
    CHECK(mgc::homology_character(c, 0).is_zero());

    for (auto [g, n, r] : {std::tuple{1, 4, 2}, {2, 3, 3}, {2, 4, 4}, {3, 2, 2}, {2, 3, 2}}) {
        const auto cx = mgc::build_complex(g, n, r);
        const auto h = mgc::homology_decomposition(cx);
        CHECK(h.euler_chain() == h.euler_homology());
        for (int i = 0; i <= h.top_degree(); ++i) {
            CHECK(h.characters[i].degree() == h.dims[i]);
            CHECK(h.decompositions[i].dimension() == h.dims[i]);
            CHECK(mgc::homology_character(cx, i) == h.characters[i]);
        }
    }
}

TEST_CASE("excess three") {
    const auto c = mgc::build_complex(2, 5, 5);
    const auto h = mgc::homology_decomposition(c);
    CHECK(h.multiplicity(3, Partition{4, 1}) == 1);
    CHECK(h.multiplicity(3, Partition{3, 2}) == 1);
    for (int i = 0; i < 3; ++i) CHECK(h.dims[i] == 0);
}

TEST_CASE("projector cross-check") {
    for (auto [g, n, r] : {std::tuple{1, 4, 3}, {1, 4, 2}, {2, 3, 3}, {2, 4, 4}, {2, 5, 5}, {3, 3, 4}}) {
        const auto c = mgc::build_complex(g, n, r);
        const auto h = mgc::homology_decomposition(c);
        for (int i = 0; i <= c.top_degree(); ++i) CHECK(mgc::projector_decomposition(c, i) == h.decompositions[i]);
    }
    CHECK_THROWS_AS(mgc::projector_decomposition(mgc::build_complex(1, 7, 7), 0), std::invalid_argument);
}

TEST_CASE("full action is a homomorphism") {
    const auto c = mgc::build_complex(2, 3, 3);
    for (int i = 0; i <= c.top_degree(); ++i) {
        const auto acts = mgc::full_action(c, i);
        CHECK(acts.size() == 6);
        for (const auto& [sigma, m] : acts) CHECK(m == mgc::group_action_matrix(c, i, sigma));
    }
}
