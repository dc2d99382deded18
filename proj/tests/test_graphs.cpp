#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "mgc/graphs.hpp"

using mgc::Flag;
using mgc::GraphType;
using mgc::MarkedGraph;

namespace {

MarkedGraph shuffled(const MarkedGraph& g, std::mt19937& rng) {
    std::vector<int> vmap(g.num_vertices), fmap(g.flags.size());
    std::iota(vmap.begin(), vmap.end(), 0);
    std::iota(fmap.begin(), fmap.end(), 0);
    std::shuffle(vmap.begin(), vmap.end(), rng);
    std::shuffle(fmap.begin(), fmap.end(), rng);
    return mgc::renumber(g, vmap, fmap);
}

// Two vertices joined by two unmarked edges; the neutral one carries a leg.
MarkedGraph parallel_pair(bool marked) {
    MarkedGraph g;
    g.num_vertices = 2;
    g.flags = {{0, 1, marked, 0}, {1, 0, false, 0}, {0, 3, marked, 0}, {1, 2, false, 0}, {1, 4, false, 1}};
    g.edge_order = {0, 2};
    if (marked) g.marked_order = {0, 2};
    return g;
}

}  // namespace

TEST_CASE("validate") {
    CHECK(mgc::validate(mgc::build_theta(3, 0, 0)).empty());
    CHECK(mgc::validate(parallel_pair(false)).empty());

    MarkedGraph bivalent;
    bivalent.num_vertices = 2;
    bivalent.flags = {{0, 1, false, 0}, {1, 0, false, 0}, {1, 2, false, 1}};
    bivalent.edge_order = {0};
    CHECK_FALSE(mgc::validate(bivalent).empty());

    MarkedGraph neutral_loop;
    neutral_loop.num_vertices = 2;
    neutral_loop.flags = {{0, 1, false, 0}, {1, 0, false, 0}, {1, 3, false, 0}, {1, 2, false, 0}};
    neutral_loop.edge_order = {0, 2};
    CHECK_FALSE(mgc::validate(neutral_loop).empty());

    MarkedGraph double_marked;
    double_marked.flags = {{0, 1, true, 0}, {0, 0, true, 0}};
    double_marked.edge_order = {0};
    double_marked.marked_order = {0, 1};
    CHECK_FALSE(mgc::validate(double_marked).empty());

    MarkedGraph far_mark = parallel_pair(false);
    far_mark.flags[4].marked = true;
    far_mark.marked_order = {4};
    CHECK_FALSE(mgc::validate(far_mark).empty());

    MarkedGraph bad_labels = parallel_pair(false);
    bad_labels.flags[4].label = 2;
    CHECK_FALSE(mgc::validate(bad_labels).empty());

    MarkedGraph bad_order = parallel_pair(false);
    bad_order.edge_order = {0, 1};
    CHECK_FALSE(mgc::validate(bad_order).empty());
}

TEST_CASE("theta types") {
    CHECK(mgc::graph_type(mgc::build_theta(3, 0, 0)) == GraphType{3, 6, 6, 6, 6});
    CHECK(mgc::graph_type(mgc::build_theta(2, 0, 1)) == GraphType{2, 3, 3, 3, 3});
    CHECK(mgc::graph_type(mgc::build_theta(1, 1, 0)) == GraphType{1, 2, 1, 2, 2});
    CHECK_THROWS_AS(mgc::build_theta(3, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(mgc::build_theta(2, 0, 2), std::invalid_argument);
    for (int g = 1; g <= 4; ++g)
        for (int l = 0; l <= 2; ++l)
            for (int p = (g - 1) % 2; p < g; p += 2) {
                const int m = 3 * (g - 1) + 2 * l;
                if (p > m) continue;
                const auto theta = mgc::build_theta(g, l, p);
                CHECK(mgc::validate(theta).empty());
                const auto t = mgc::graph_type(theta);
                CHECK(t.g == g);
                CHECK(t.n == m);
                CHECK(t.r == m - l);
                CHECK(t.degree == theta.num_edges() + l);
            }
}

TEST_CASE("canonical sign under reordering and renaming") {
    auto theta = mgc::label_legs(mgc::build_theta(3, 0, 0));
    const auto base = mgc::canonical_form(theta);
    CHECK_FALSE(base.cls.vanishing);

    auto swapped = theta;
    std::swap(swapped.edge_order[0], swapped.edge_order[1]);
    const auto c1 = mgc::canonical_form(swapped);
    CHECK(c1.cls.key == base.cls.key);
    CHECK(c1.sign == -base.sign);

    auto dswap = theta;
    std::swap(dswap.marked_order[0], dswap.marked_order[2]);
    CHECK(mgc::canonical_form(dswap).sign == -base.sign);

    // the canonical representative is its own reference
    const auto again = mgc::canonical_form(base.cls.graph);
    CHECK(again.cls.key == base.cls.key);
    CHECK(again.sign == 1);
    CHECK(again.cls.graph == base.cls.graph);

    std::mt19937 rng(7);
    const MarkedGraph samples[] = {theta, mgc::label_legs(mgc::build_theta(2, 0, 1)),
                                   mgc::label_legs(mgc::build_theta(3, 1, 2)), parallel_pair(true)};
    for (const auto& g : samples) {
        const auto c = mgc::canonical_form(g);
        for (int trial = 0; trial < 30; ++trial) {
            const auto h = shuffled(g, rng);
            REQUIRE(mgc::validate(h).empty());
            const auto ch = mgc::canonical_form(h);
            CHECK(ch.cls.key == c.cls.key);
            CHECK(ch.sign == c.sign);
        }
    }
}

TEST_CASE("vanishing classes") {
    CHECK(mgc::canonical_form(parallel_pair(false)).cls.vanishing);
    CHECK_FALSE(mgc::canonical_form(parallel_pair(true)).cls.vanishing);

    // two unlabeled marked legs can be swapped, transposing D
    MarkedGraph legs;
    legs.flags = {{0, 0, true, 0}, {0, 1, true, 0}};
    legs.marked_order = {0, 1};
    CHECK(mgc::canonical_form(legs).cls.vanishing);
    legs.flags[0].label = 1;
    legs.flags[1].label = 2;
    CHECK_FALSE(mgc::canonical_form(legs).cls.vanishing);

    // two unmarked tadpoles at the distinguished vertex
    MarkedGraph loops;
    loops.flags = {{0, 1, false, 0}, {0, 0, false, 0}, {0, 3, false, 0}, {0, 2, false, 0}, {0, 4, false, 1}};
    loops.edge_order = {0, 2};
    CHECK(mgc::canonical_form(loops).cls.vanishing);
}

TEST_CASE("contraction") {
    const auto theta = mgc::label_legs(mgc::build_theta(1, 1, 0));
    const auto terms = mgc::contract_edge(theta, 0);
    REQUIRE(terms.size() == 2);
    std::set<std::string> keys;
    for (const auto& [h, s] : terms) {
        CHECK(mgc::validate(h).empty());
        CHECK(mgc::graph_type(h) == GraphType{1, 2, 1, 2, 1});
        CHECK(s == 1);
        keys.insert(mgc::canonical_key(h));
    }
    CHECK(keys.size() == 2);
    CHECK(mgc::contract_edge(theta, 1).size() == 2);
    CHECK_THROWS_AS(mgc::contract_edge(theta, 2), std::invalid_argument);

    // unmarked contraction that would leave a neutral tadpole is dropped
    MarkedGraph g;
    g.num_vertices = 3;
    // dv - a (edge 0), a = b double (edges 2, 4), b - dv (edge 6); legs on a and b
    g.flags = {{0, 1, false, 0}, {1, 0, false, 0}, {1, 3, false, 0}, {2, 2, false, 0}, {1, 5, false, 0},
               {2, 4, false, 0}, {2, 7, false, 0}, {0, 6, false, 0}, {1, 8, false, 1}, {2, 9, false, 2}};
    g.flags[2].partner = 3;
    g.flags[3].partner = 2;
    g.edge_order = {0, 2, 4, 6};
    REQUIRE(mgc::validate(g).empty());
    CHECK(mgc::contract_edge(g, 2).empty());
    const auto first = mgc::contract_edge(g, 0);
    REQUIRE(first.size() == 1);
    CHECK(first[0].second == -1);  // edge 0 of 4 moves past three edges
    CHECK(mgc::validate(first[0].first).empty());
    const auto last = mgc::contract_edge(g, 6);
    REQUIRE(last.size() == 1);
    CHECK(last[0].second == 1);

    // tadpoles contract to zero
    MarkedGraph loop;
    loop.flags = {{0, 1, false, 0}, {0, 0, false, 0}, {0, 2, false, 1}};
    loop.edge_order = {0};
    CHECK(mgc::contract_edge(loop, 0).empty());
}

TEST_CASE("marking") {
    const auto g = parallel_pair(false);
    const auto [h, s] = mgc::mark_flag(g, 2);
    CHECK(s == 1);
    CHECK(h.marked_order == std::vector<int>{2});
    const auto [h2, s2] = mgc::mark_flag(h, 0);
    CHECK(h2.marked_order == std::vector<int>{0, 2});
    CHECK(s2 == 1);
    CHECK_THROWS_AS(mgc::mark_flag(h, 2), std::invalid_argument);
    CHECK_THROWS_AS(mgc::mark_flag(g, 1), std::invalid_argument);

    MarkedGraph loop;
    loop.flags = {{0, 1, true, 0}, {0, 0, false, 0}, {0, 2, false, 1}};
    loop.edge_order = {0};
    loop.marked_order = {0};
    CHECK_THROWS_AS(mgc::mark_flag(loop, 1), std::invalid_argument);
    CHECK_NOTHROW(mgc::mark_flag(loop, 2));
}

TEST_CASE("core and stabilization") {
    const auto theta = mgc::label_legs(mgc::build_theta(2, 0, 1));
    const auto plus = mgc::add_marked_leg(theta);
    CHECK(mgc::validate(plus).empty());
    const auto t0 = mgc::graph_type(theta), t1 = mgc::graph_type(plus);
    CHECK(t1.n == t0.n + 1);
    CHECK(t1.r == t0.r + 1);
    CHECK(t1.degree == t0.degree);
    CHECK(t1.excess == t0.excess);
    CHECK(mgc::canonical_key(mgc::core(plus)) == mgc::canonical_key(mgc::core(theta)));
    CHECK(mgc::marked_leg_count(plus) == 1);
    CHECK(plus.marked_order.back() == static_cast<int>(plus.flags.size()) - 1);
    CHECK(plus.flags.back().label == 4);
    CHECK(mgc::core(plus).unlabeled());
    CHECK(mgc::marked_leg_count(mgc::core(plus)) == 0);
}

TEST_CASE("cutting edges") {
    const auto theta = mgc::label_legs(mgc::build_theta(3, 0, 0));
    const auto t0 = mgc::graph_type(theta);
    // edges 0..2 form the triple to the trivalent vertex
    const auto cut = mgc::cut_edge(theta, 0);
    CHECK(mgc::validate(cut).empty());
    const auto t1 = mgc::graph_type(cut);
    CHECK(t1.g == t0.g - 1);
    CHECK(t1.n == t0.n + 2);
    CHECK(t1.r == t0.r);
    CHECK(cut.flags[0].label == 7);
    CHECK(cut.flags[1].label == 8);
    // a bridge to a single-edge vertex disconnects
    CHECK_THROWS_AS(mgc::cut_edge(theta, 6), std::invalid_argument);
    CHECK_THROWS_AS(mgc::cut_edge(mgc::label_legs(mgc::build_theta(1, 1, 0)), 0), std::invalid_argument);
}

TEST_CASE("leg symmetry groups") {
    const auto small = mgc::label_legs(mgc::build_theta(1, 1, 0));
    const auto i_small = mgc::leg_symmetry_group(small);
    REQUIRE(i_small.size() == 2);
    for (const auto& sp : i_small) CHECK(sp.sign == 1);

    const auto theta = mgc::label_legs(mgc::build_theta(3, 0, 0));
    const auto i_theta = mgc::leg_symmetry_group(theta);
    CHECK(i_theta.size() == 48);
    for (const auto& sp : i_theta) CHECK(sp.sign == 1);

    CHECK_THROWS_AS(mgc::leg_symmetry_group(mgc::label_legs(parallel_pair(false))), std::domain_error);
}

TEST_CASE("leg symmetry group agrees with brute force") {
    const MarkedGraph samples[] = {mgc::label_legs(mgc::build_theta(2, 0, 1)),
                                   mgc::label_legs(mgc::build_theta(1, 2, 0)),
                                   mgc::label_legs(mgc::build_theta(3, 0, 2)),
                                   mgc::add_marked_leg(mgc::label_legs(mgc::build_theta(1, 1, 0))),
                                   mgc::cut_edge(mgc::label_legs(mgc::build_theta(2, 0, 1)), 0)};
    for (const auto& g : samples) {
        REQUIRE(mgc::validate(g).empty());
        const auto base = mgc::canonical_form(g);
        std::map<mgc::Permutation, int> brute;
        for (const auto& sigma : mgc::all_permutations(g.num_legs())) {
            const auto c = mgc::canonical_form(mgc::relabel_legs(g, sigma));
            if (c.cls.key == base.cls.key) brute[sigma] = c.sign * base.sign;
        }
        std::map<mgc::Permutation, int> group;
        for (const auto& sp : mgc::leg_symmetry_group(g)) group[sp.perm] = sp.sign;
        CHECK(group == brute);
    }
}

TEST_CASE("automorphisms preserve the graph") {
    const auto g = mgc::build_theta(3, 1, 2);
    const auto auts = mgc::automorphisms(g);
    CHECK_FALSE(auts.empty());
    for (const auto& a : auts) {
        for (std::size_t f = 0; f < g.flags.size(); ++f) {
            const Flag& x = g.flags[f];
            const Flag& y = g.flags[a.flag_map[f]];
            CHECK(x.marked == y.marked);
            CHECK(x.label == y.label);
            CHECK(a.flag_map[x.partner] == y.partner);
        }
    }
    CHECK_FALSE(mgc::has_odd_automorphism(g));
}

TEST_CASE("text encoding round trip") {
    const MarkedGraph samples[] = {mgc::label_legs(mgc::build_theta(3, 0, 0)), parallel_pair(false),
                                   mgc::build_theta(2, 0, 1), MarkedGraph{}};
    for (const auto& g : samples) CHECK(mgc::decode(mgc::encode(g)) == g);
    CHECK_THROWS_AS(mgc::decode("1 0 ; 0,0,1,1 ;"), std::invalid_argument);
    CHECK_THROWS_AS(mgc::decode("2 0 ; 0,0,0,1 ; ;"), std::invalid_argument);
    CHECK_THROWS_AS(mgc::decode("1 0 ; 0,x,0,1 ; ;"), std::invalid_argument);
}
