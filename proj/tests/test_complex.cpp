#include "doctest.h"

#include <filesystem>
#include <numeric>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "mgc/complex.hpp"

using mgc::EquivariantComplex;
using mgc::Permutation;

namespace {

std::vector<int> dims(const EquivariantComplex& c) {
    std::vector<int> out;
    for (int i = 0; i <= c.top_degree(); ++i) out.push_back(c.dim(i));
    return out;
}

mgc::SparseMatrix dense_to_sparse(const std::vector<std::vector<long long>>& d, int rows, int cols) {
    mgc::SparseMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i)
            if (d[i][j]) m.columns[j].emplace_back(i, d[i][j]);
    return m;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("mgc_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("small enumerations") {
    const auto b100 = mgc::enumerate_marked_graphs(1, 0, 0);
    REQUIRE(b100.size() == 1);
    CHECK(b100[0].graph.num_vertices == 1);
    CHECK(b100[0].graph.flags.empty());

    CHECK(mgc::enumerate_marked_graphs(1, 0, 1).empty());
    CHECK(mgc::enumerate_marked_graphs(2, 1, 4).empty());
    CHECK(mgc::enumerate_marked_graphs(1, 2, 3).empty());

    const auto b121 = mgc::enumerate_marked_graphs(1, 2, 1);
    const auto theta_key = mgc::canonical_key(mgc::label_legs(mgc::build_theta(1, 1, 0)));
    bool found = false;
    for (const auto& c : b121)
        if (c.key == theta_key) {
            found = true;
            CHECK(mgc::graph_type(c.graph).degree == 2);
        }
    CHECK(found);

    // hand counts: trees with a distinguished vertex
    CHECK(dims(mgc::build_complex(1, 2, 1)) == std::vector<int>{1, 2, 1});
    CHECK(dims(mgc::build_complex(1, 3, 2)) == std::vector<int>{1, 3, 3});
    CHECK(dims(mgc::build_complex(1, 0, 0)) == std::vector<int>{1});
}

TEST_CASE("basis invariants") {
    for (auto [g, n, r] : {std::tuple{1, 4, 2}, {2, 3, 3}, {2, 4, 3}, {3, 2, 2}, {2, 5, 5}}) {
        const auto c = mgc::build_complex(g, n, r);
        CHECK(c.excess == 3 * (g - 1) + 2 * (n - r));
        CHECK(c.top_degree() == c.excess);
        std::set<std::string> keys;
        for (int i = 0; i <= c.top_degree(); ++i)
            for (const auto& cls : c.basis[i]) {
                CHECK(mgc::validate(cls.graph).empty());
                const auto t = mgc::graph_type(cls.graph);
                CHECK(t.g == g);
                CHECK(t.n == n);
                CHECK(t.r >= r);
                CHECK(t.degree == i);
                CHECK_FALSE(cls.vanishing);
                CHECK_FALSE(mgc::has_odd_automorphism(cls.graph));
                CHECK(keys.insert(cls.key).second);
            }
        // enumeration order does not depend on the execution mode
        const auto serial = mgc::enumerate_marked_graphs(g, n, r, mgc::Execution::serial);
        const auto parallel = mgc::enumerate_marked_graphs(g, n, r, mgc::Execution::parallel);
        REQUIRE(serial.size() == parallel.size());
        for (std::size_t k = 0; k < serial.size(); ++k) CHECK(serial[k].key == parallel[k].key);
    }
}

TEST_CASE("d squared vanishes") {
    for (auto [g, n, r] : {std::tuple{1, 4, 1}, {1, 5, 3}, {2, 2, 1}, {2, 4, 4}, {2, 5, 5}, {3, 2, 2}, {3, 3, 4}})
        CHECK_NOTHROW(mgc::build_complex(g, n, r));

    // a flipped entry must be caught
    auto c = mgc::build_complex(2, 3, 3);
    bool flipped = false;
    for (auto& col : c.differential[2].columns)
        if (!col.empty() && !flipped) {
            col.front().second = -col.front().second;
            flipped = true;
        }
    REQUIRE(flipped);
    CHECK_THROWS_AS(mgc::check_d_squared(c), std::logic_error);
}

TEST_CASE("serial and parallel assembly agree") {
    const auto c = mgc::build_complex(2, 4, 4);
    for (int i = 1; i <= c.top_degree(); ++i)
        CHECK(mgc::assemble_differential(c, i, mgc::Execution::serial) ==
              mgc::assemble_differential(c, i, mgc::Execution::parallel));
}

TEST_CASE("Euler characteristic two ways") {
    const auto c = mgc::build_complex(1, 3, 2);
    long long by_count = 0, by_rank_nullity = 0;
    for (int i = 0; i <= c.top_degree(); ++i) by_count += (i % 2 ? -1 : 1) * c.dim(i);
    // rank-nullity on the dense matrices with a plain rational elimination
    auto rank = [](std::vector<std::vector<long long>> a) {
        std::vector<std::vector<mgc::Rational>> m;
        for (auto& row : a) m.emplace_back(row.begin(), row.end());
        int rk = 0;
        const int rows = static_cast<int>(m.size()), cols = rows ? static_cast<int>(m[0].size()) : 0;
        for (int col = 0; col < cols && rk < rows; ++col) {
            int piv = -1;
            for (int i = rk; i < rows; ++i)
                if (m[i][col] != 0) piv = i;
            if (piv < 0) continue;
            std::swap(m[piv], m[rk]);
            for (int i = 0; i < rows; ++i)
                if (i != rk && m[i][col] != 0) {
                    const mgc::Rational f = m[i][col] / m[rk][col];
                    for (int j = 0; j < cols; ++j) m[i][j] -= f * m[rk][j];
                }
            ++rk;
        }
        return rk;
    };
    std::vector<int> ranks(c.top_degree() + 2, 0);
    for (int i = 1; i <= c.top_degree(); ++i) ranks[i] = rank(c.differential[i].dense());
    for (int i = 0; i <= c.top_degree(); ++i)
        by_rank_nullity += (i % 2 ? -1 : 1) * (c.dim(i) - ranks[i] - ranks[i + 1]);
    CHECK(by_count == by_rank_nullity);
}

TEST_CASE("stabilization map") {
    const auto s = mgc::build_complex(1, 0, 0);
    const auto t = mgc::build_complex(1, 1, 1);
    REQUIRE(t.total_dim() == 1);
    const auto psi = mgc::stabilization_map(s, t);
    CHECK(psi.matrices[0].nonzeros() == 1);

    for (auto [g, n, r] : {std::tuple{1, 2, 1}, {1, 3, 1}, {2, 3, 3}, {2, 2, 1}}) {
        const auto src = mgc::build_complex(g, n, r);
        const auto tgt = mgc::build_complex(g, n + 1, r + 1);
        CHECK(src.excess == tgt.excess);
        const auto map = mgc::stabilization_map(src, tgt);
        REQUIRE(map.matrices.size() == src.basis.size());
        for (int i = 0; i <= src.top_degree(); ++i) {
            // generator-wise: distinct targets, so full column rank
            std::set<int> rows;
            for (const auto& col : map.matrices[i].columns) {
                REQUIRE(col.size() == 1);
                rows.insert(col.front().first);
            }
            CHECK(static_cast<int>(rows.size()) == src.dim(i));
        }
        // psi o sigma = (sigma extended) o psi
        std::mt19937 rng(11);
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<int> img(n);
            std::iota(img.begin(), img.end(), 0);
            std::shuffle(img.begin(), img.end(), rng);
            const Permutation sigma(img);
            for (int i = 0; i <= src.top_degree(); ++i) {
                const auto lhs = map.matrices[i].multiply(mgc::group_action_matrix(src, i, sigma).sparse());
                const auto rhs =
                    mgc::group_action_matrix(tgt, i, sigma.extended(n + 1)).sparse().multiply(map.matrices[i]);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("group action") {
    const auto c = mgc::build_complex(1, 2, 1);
    const auto m = mgc::group_action_matrix(c, 2, Permutation::transposition(2, 0, 1));
    CHECK(m.trace() == 1);
    const auto id = mgc::group_action_matrix(c, 1, Permutation::identity(2));
    for (int j = 0; j < id.size(); ++j) {
        CHECK(id.target[j] == j);
        CHECK(id.sign[j] == 1);
    }
    const auto chi = mgc::chain_character(c, 2);
    CHECK(chi.degree() == 1);
    CHECK(mgc::decompose(chi) == mgc::IrrDecomposition::irreducible(mgc::Partition{2}));

    std::mt19937 rng(3);
    for (auto [g, n, r] : {std::tuple{2, 4, 4}, {1, 4, 2}, {3, 2, 2}}) {
        const auto cx = mgc::build_complex(g, n, r);
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<int> a(n), b(n);
            std::iota(a.begin(), a.end(), 0);
            std::iota(b.begin(), b.end(), 0);
            std::shuffle(a.begin(), a.end(), rng);
            std::shuffle(b.begin(), b.end(), rng);
            const Permutation sa(a), sb(b);
            for (int i = 0; i <= cx.top_degree(); ++i) {
                const auto ma = mgc::group_action_matrix(cx, i, sa).sparse();
                const auto mb = mgc::group_action_matrix(cx, i, sb).sparse();
                CHECK(ma.multiply(mb) == mgc::group_action_matrix(cx, i, sa * sb).sparse());
                if (i >= 1) {
                    const auto prev = mgc::group_action_matrix(cx, i - 1, sa).sparse();
                    CHECK(prev.multiply(cx.differential[i]) == cx.differential[i].multiply(ma));
                }
            }
        }
        for (int i = 0; i <= cx.top_degree(); ++i) CHECK(mgc::chain_character(cx, i).degree() == cx.dim(i));
    }
}

TEST_CASE("sparse matrix helpers") {
    const std::vector<std::vector<long long>> a{{1, 0, 2}, {0, -1, 0}};
    const std::vector<std::vector<long long>> b{{0, 1}, {3, 0}, {1, 1}};
    const auto ma = dense_to_sparse(a, 2, 3), mb = dense_to_sparse(b, 3, 2);
    CHECK(ma.dense() == a);
    CHECK(ma.at(0, 2) == 2);
    CHECK(ma.nonzeros() == 3);
    CHECK(ma.multiply(mb).dense() == std::vector<std::vector<long long>>{{2, 3}, {-3, 0}});
    CHECK_THROWS_AS(ma.multiply(ma), std::invalid_argument);
}

TEST_CASE("cache round trip") {
    const auto dir = scratch_dir("cache");
    const auto c = mgc::build_complex(1, 4, 3);
    const auto path = mgc::cache_path(dir.string(), 1, 4, 3);
    mgc::save_cache(c, path);
    const std::string first = slurp(path);

    std::string why;
    auto loaded = mgc::load_cache(path, 1, 4, 3, &why);
    REQUIRE(loaded.has_value());
    REQUIRE(loaded->basis.size() == c.basis.size());
    for (std::size_t i = 0; i < c.basis.size(); ++i) {
        REQUIRE(loaded->basis[i].size() == c.basis[i].size());
        for (std::size_t j = 0; j < c.basis[i].size(); ++j) CHECK(loaded->basis[i][j].key == c.basis[i][j].key);
    }
    CHECK(loaded->differential == c.differential);
    mgc::save_cache(*loaded, path);
    CHECK(slurp(path) == first);

    CHECK_FALSE(mgc::load_cache(path, 1, 4, 2).has_value());

    // a corrupted class line breaks the checksum
    {
        std::string text = first;
        const auto pos = text.rfind(';');
        text[pos - 1] = text[pos - 1] == '0' ? '1' : '0';
        std::ofstream(path) << text;
        CHECK_FALSE(mgc::load_cache(path, 1, 4, 3, &why).has_value());
        CHECK(why.find("checksum") != std::string::npos);
    }
    // a version bump invalidates the file
    {
        std::string text = first;
        text.replace(0, text.find('\n'), "mgc-cache " + std::to_string(mgc::kEnumerationVersion + 1));
        std::ofstream(path) << text;
        CHECK_FALSE(mgc::load_cache(path, 1, 4, 3, &why).has_value());
        CHECK(why.find("version") != std::string::npos);
    }
    // build_complex falls back to recomputation and rewrites the cache
    mgc::BuildOptions opts;
    opts.cache_dir = dir.string();
    const auto rebuilt = mgc::build_complex(1, 4, 3, opts);
    CHECK(rebuilt.total_dim() == c.total_dim());
    CHECK(slurp(path) == first);
    CHECK(mgc::build_complex(1, 4, 3, opts).differential == c.differential);
    std::filesystem::remove_all(dir);
}
