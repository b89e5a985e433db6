#include <set>

#include "doctest.h"
#include "springer/lemmas.hpp"
#include "springer/seqcomb.hpp"

using namespace springer;

TEST_CASE("rho0 and beta0 on small rows") {
    CHECK(rho0({0, 1, 2, 3}) == 0);
    CHECK(beta0({0, 1, 2, 3}) == 0);
    CHECK(rho0({0, 1, 3, 4}) == 2);
    CHECK(beta0({0, 1, 3, 4}) == 1);
    CHECK(rho0({0, 2, 3}) == 2);
    CHECK(beta0({0, 2, 3}) == 1);
    CHECK_THROWS_AS(rho0({0, 2, 2}), DomainError);
}

TEST_CASE("strict points") {
    CHECK(frak_s({0, 0, 1}) == std::vector<int>{2});
    CHECK(frak_s({0, 0, 1, 1}).empty());
    CHECK(frak_s({0, 1, 2}) == std::vector<int>{0, 1, 2});
}

TEST_CASE("intervals and endpoint sets") {
    CHECK(frak_i({0, 0}).empty());
    CHECK(frak_i({0, 2}) == std::vector<Interval>{{0, 0}, {1, 1}});
    CHECK(frak_i_odd({0, 2}).size() == 2);
    CHECK(r_set({0, 2}) == std::vector<int>{0, 1});
    CHECK(r0_set({0, 2}) == std::vector<int>{0, 1});
    CHECK(frak_i({0, 1, 2}) == std::vector<Interval>{{0, 2}});
    CHECK(frak_i_odd({0, 1, 2}) == std::vector<Interval>{{0, 2}});
    CHECK(r_set({0, 1, 2}) == std::vector<int>{0, 2});
    CHECK(r0_set({0, 1, 2}).empty());
}

TEST_CASE("interval decomposition") {
    auto d = interval_decomp({0, 0});
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].span == Interval{0, 1});
    CHECK(d.blocks[0].kind == BlockKind::SinglePair);
    CHECK(d.blocks[0].base == 0);

    d = interval_decomp({0, 1, 2});
    REQUIRE(d.blocks.size() == 1);
    CHECK(d.blocks[0].span == Interval{0, 2});
    CHECK(d.blocks[0].kind == BlockKind::Arithmetic);

    d = interval_decomp({0, 0, 2, 2});
    REQUIRE(d.blocks.size() == 2);
    CHECK(d.blocks[0].span == Interval{0, 1});
    CHECK(d.blocks[1].span == Interval{2, 3});
    CHECK(d.blocks[1].base == 2);
    CHECK(d.blocks[1].kind == BlockKind::SinglePair);
}

TEST_CASE("split sets") {
    CHECK(enumerate_s({0, 2}) == std::vector<SeqPair>{{{0, 1}, {0, 1}}});
    CHECK(enumerate_s({0, 0}) == std::vector<SeqPair>{{{0, 0}, {0, 0}}});
    CHECK(enumerate_tilde_s({0, 1, 2}) == std::vector<SeqPair>{{{0, 0, 1}, {0, 1, 1}}});
    CHECK_THROWS_AS(enumerate_tilde_s({0, 0, 2}), DomainError);
    auto big = enumerate_tilde_s({0, 1, 3, 4, 6});
    CHECK_FALSE(big.empty());
    for (const auto& [x, xp] : big) CHECK(member_tilde_s({0, 1, 3, 4, 6}, x, xp));
}

TEST_CASE("hat decomposition") {
    Seq x0{0, 0, 1, 1, 2};
    CHECK(hat_decompose(x0) == SeqPair{x0, {0, 0, 0, 0, 0}});
    CHECK(hat_decompose({0, 1, 2}) == SeqPair{{0, 1, 2}, {0, 0, 0}});
    CHECK(hat_decompose({1, 1, 2}) == SeqPair{{0, 0, 1}, {1, 1, 1}});
}

TEST_CASE("stratum enumeration") {
    CHECK(enumerate_space(Kind::Z, 2, 0) == std::vector<Seq>{{0, 1, 2}});
    CHECK(enumerate_space(Kind::E, 3, 2) == std::vector<Seq>{{0, 0, 0, 2}, {0, 0, 1, 1}});
    // Every enumerated X-sequence has the requested statistic and the list is sorted and distinct.
    for (int m = 1; m <= 6; ++m)
        for (int n = 0; n <= 5; ++n) {
            auto xs = enumerate_space(Kind::X, m, n);
            CHECK(std::set<Seq>(xs.begin(), xs.end()).size() == xs.size());
            CHECK(std::is_sorted(xs.begin(), xs.end()));
            for (const auto& x : xs) CHECK(rho(x) == n);
        }
}

TEST_CASE("symmetric decompositions") {
    CHECK(symmetric_decompositions({0, 1, 2}).empty());
    auto s = symmetric_decompositions({0, 2});
    REQUIRE_FALSE(s.empty());
    for (const auto& [x, e] : s) CHECK(add(add(x, e), x) == Seq{0, 2});
    Seq y0 = add(x_base(4), x_base(4));
    bool has_base = false;
    for (const auto& [x, e] : symmetric_decompositions(y0))
        if (x == x_base(4) && e == Seq(5, 0)) has_base = true;
    CHECK(has_base);
}

TEST_CASE("sequence lemma suite at small bounds") {
    auto rep = run_lemmas(5, 5);
    for (const auto& l : rep.lines) {
        INFO(l.name);
        CHECK(l.checks > 0);
        CHECK(l.failures == 0);
    }
}

TEST_CASE("randomized lemma suite is deterministic per seed") {
    auto a = run_random_lemmas(12, 200, 7);
    auto b = run_random_lemmas(12, 200, 7);
    CHECK(a.ok());
    REQUIRE(a.lines.size() == b.lines.size());
    for (size_t i = 0; i < a.lines.size(); ++i) CHECK(a.lines[i].checks == b.lines[i].checks);
}
