#include <set>

#include "doctest.h"
#include "springer/irreps.hpp"

using namespace springer;

namespace {

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::int64_t group_order(Family f, int n) {
    switch (f) {
        case Family::A: return factorial(n);
        case Family::BC: return factorial(n) << n;
        case Family::D: return n == 0 ? 1 : factorial(n) << (n - 1);
    }
    return 0;
}

}  // namespace

TEST_CASE("partition codec") {
    CHECK(row_of({2, 1}, 3) == Seq{0, 2, 4});
    CHECK(partition_of({0, 2, 4}) == Partition{2, 1});
    CHECK(row_of({}, 3) == z_base(2));
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : partitions(n)) CHECK(partition_of(row_of(p, static_cast<int>(p.size()) + 2)) == p);
}

TEST_CASE("b invariant examples") {
    CHECK(b_invariant(label_from_partition({1, 1, 1})) == 3);
    CHECK(b_invariant(label_from_partition({1, 1})) == 1);
    CHECK(b_invariant(label_from_partition({3})) == 0);
    CHECK(b_invariant(label_from_bipartition(Family::BC, {4}, {})) == 0);
    // rows (0,1,2) and (0,2) name the rank one label (empty ; 1)
    auto l = label_bc({0, 1, 2}, {0, 2});
    CHECK(l.n == 1);
    CHECK(b_invariant(l) == 1);
    CHECK(b_invariant(label_from_bipartition(Family::BC, {}, {1, 1})) == 4);
}

TEST_CASE("dimensions") {
    CHECK(dimension(label_from_partition({3})) == 1);
    CHECK(dimension(label_from_partition({2, 1})) == 2);
    CHECK(dimension(label_from_bipartition(Family::BC, {1}, {1})) == 2);
    CHECK(dimension(label_from_bipartition(Family::D, {1}, {1}, 0)) == 1);
    CHECK(dimension(label_from_bipartition(Family::D, {1}, {1}, 1)) == 1);
}

TEST_CASE("sum of squared dimensions is the group order") {
    for (Family f : {Family::A, Family::BC, Family::D})
        for (int n = (f == Family::D ? 2 : 1); n <= 6; ++n) {
            std::int64_t s = 0;
            for (const auto& l : all_irreps(f, n)) s += dimension(l) * dimension(l);
            INFO(family_name(f), " n=", n);
            CHECK(s == group_order(f, n));
        }
}

TEST_CASE("special reps are parametrized by X-sequences") {
    for (int n = 0; n <= 8; ++n) {
        int m = default_m(Family::BC, n);
        auto reps = special_reps(Family::BC, n, m);
        CHECK(reps.size() == enumerate_space(Kind::X, m, n).size());
        for (const auto& s : reps) {
            CHECK(is_special(s.label));
            CHECK(zeta(s.label, m) == s.x);
            CHECK(s.b == b_invariant(s.label));
            CHECK(s.f == f_invariant(s.label));
            // f is a power of two
            CHECK((s.f & (s.f - 1)) == 0);
        }
    }
}

TEST_CASE("special reps of S_n are all irreducibles") {
    for (int n = 1; n <= 7; ++n) {
        auto reps = special_reps(Family::A, n);
        CHECK(reps.size() == all_irreps(Family::A, n).size());
        for (const auto& s : reps) CHECK(s.f == 1);
    }
}

TEST_CASE("type D parametrizations agree as label sets") {
    for (int n = 2; n <= 7; ++n) {
        std::set<IrrLabel> prime, tilde;
        for (const auto& s : special_reps(Family::D, n)) prime.insert(s.label);
        for (const auto& s : special_reps(Family::D, n, -1, DParam::Tilde)) tilde.insert(s.label);
        INFO("n=", n);
        CHECK(prime == tilde);
    }
}

TEST_CASE("xi bijection") {
    CHECK(xi(label_from_partition({}), 3) == Seq{0, 0, 0, 0});
    for (int p = 0; p <= 6; ++p)
        for (const auto& e : enumerate_space(Kind::E, 6, p)) CHECK(xi(xi_inverse(e), 6) == e);
}

TEST_CASE("canonical labels are shift invariant") {
    for (const auto& l : all_irreps(Family::BC, 4)) {
        CHECK(canonicalize(shift(l, 2)) == l);
        CHECK(b_invariant(shift(l, 3)) == b_invariant(l));
    }
}

TEST_CASE("bad input is a domain error") {
    CHECK_THROWS_AS(label_a({0, 2, 2}), DomainError);
    CHECK_THROWS_AS(special_reps(Family::BC, 2, 3), DomainError);
    CHECK_THROWS_AS(parse_family("E"), DomainError);
}
