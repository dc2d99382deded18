#include "doctest.h"

#include <random>
#include <stdexcept>
#include <set>

#include "mgc/partition.hpp"
#include "mgc/permutation.hpp"

using mgc::Partition;

TEST_CASE("conjugate") {
    CHECK(mgc::conjugate(Partition{4, 1}) == Partition{2, 1, 1, 1});
    CHECK(mgc::conjugate(Partition{}) == Partition{});
    CHECK(mgc::conjugate(Partition{2, 2}) == Partition{2, 2});
}

TEST_CASE("pad_ones") {
    CHECK(mgc::pad_ones(Partition{4, 1}, 2) == Partition{4, 1, 1, 1});
    CHECK(mgc::pad_ones(Partition{}, 3) == Partition{1, 1, 1});
    CHECK(mgc::pad_ones(Partition{3, 2}, 0) == Partition{3, 2});
}

TEST_CASE("prepend_row") {
    CHECK(mgc::prepend_row(Partition{1}, 3) == Partition{2, 1});
    CHECK(mgc::prepend_row(Partition{3, 2}, 11) == Partition{6, 3, 2});
    CHECK_THROWS_AS(mgc::prepend_row(Partition{3}, 5), std::invalid_argument);
    CHECK(mgc::prepend_row(Partition{}, 0) == Partition{});
}

TEST_CASE("erase_first_column") {
    CHECK(mgc::erase_first_column(Partition{4, 1}) == Partition{3});
    CHECK(mgc::erase_first_column(Partition{3, 3}) == Partition{2, 2});
    CHECK(mgc::erase_first_column(Partition{1, 1, 1}) == Partition{});
}

TEST_CASE("enumerate_partitions") {
    CHECK(mgc::enumerate_partitions(4).size() == 5);
    CHECK(mgc::enumerate_partitions(4, true) == std::vector<Partition>{Partition{4}, Partition{2, 2}});
    CHECK(mgc::enumerate_partitions(0) == std::vector<Partition>{Partition{}});
    CHECK(mgc::enumerate_partitions(3, true).empty());
    // p(n) for n = 0..12
    const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int n = 0; n <= 12; ++n) CHECK(mgc::enumerate_partitions(n).size() == expected[n]);
}

TEST_CASE("enumeration order is canonical reverse lexicographic") {
    const auto ps = mgc::enumerate_partitions(6);
    for (std::size_t i = 1; i < ps.size(); ++i) {
        CHECK(ps[i] < ps[i - 1]);
        CHECK(mgc::CanonicalOrder{}(ps[i - 1], ps[i]));
    }
    CHECK(ps.front() == Partition{6});
    CHECK(ps.back() == Partition{1, 1, 1, 1, 1, 1});
}

TEST_CASE("invalid partitions are rejected") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
}

TEST_CASE("partition invariants") {
    for (int n = 0; n <= 10; ++n) {
        for (const auto& lambda : mgc::enumerate_partitions(n)) {
            const auto conj = mgc::conjugate(lambda);
            CHECK(mgc::conjugate(conj) == lambda);
            CHECK(conj.length() == lambda.width());
            CHECK(conj.width() == lambda.length());
            CHECK(mgc::pad_ones(lambda, 3).size() == n + 3);
            CHECK(mgc::erase_first_column(lambda).size() == n - lambda.length());
        }
        // even-only = filter of all partitions = doubles of partitions of n/2
        std::set<Partition> filtered;
        for (const auto& lambda : mgc::enumerate_partitions(n)) {
            bool even = true;
            for (int p : lambda.parts()) even = even && p % 2 == 0;
            if (even) filtered.insert(lambda);
        }
        const auto evens = mgc::enumerate_partitions(n, true);
        CHECK(std::set<Partition>(evens.begin(), evens.end()) == filtered);
        if (n % 2 == 0) {
            std::set<Partition> doubles;
            for (const auto& tau : mgc::enumerate_partitions(n / 2)) doubles.insert(mgc::double_parts(tau));
            CHECK(doubles == filtered);
        }
    }
}

TEST_CASE("textual encoding") {
    CHECK(Partition{4, 1, 1}.to_string() == "[4,1,1]");
    CHECK(Partition{}.to_string() == "[]");
    CHECK(mgc::parse_partition("[4,1,1]") == Partition{4, 1, 1});
    CHECK(mgc::parse_partition(" [ 5 , 1 ] ") == Partition{5, 1});
    CHECK(mgc::parse_partition("[]") == Partition{});
    CHECK_THROWS(mgc::parse_partition("4,1"));
    CHECK_THROWS(mgc::parse_partition("[1,2]"));
    CHECK_THROWS(mgc::parse_partition("[4,1"));
}

TEST_CASE("permutation basics") {
    const auto sigma = mgc::Permutation::of_cycle_type(Partition{3, 2, 1});
    CHECK(sigma.cycle_type() == Partition{3, 2, 1});
    CHECK(sigma.sign() == -1);
    CHECK((sigma * sigma.inverse()).is_identity());
    CHECK(mgc::Permutation::transposition(4, 0, 3).sign() == -1);
    CHECK(mgc::sequence_sign({2, 0, 1}) == 1);
    CHECK(mgc::sequence_sign({1, 0, 2}) == -1);
    CHECK(mgc::sequence_sign({10, 30, 20}) == -1);
    CHECK(mgc::all_permutations(4).size() == 24);
    CHECK_THROWS(mgc::Permutation(std::vector<int>{0, 0}));
}
