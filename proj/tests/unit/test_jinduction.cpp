#include "doctest.h"
#include "springer/jinduction.hpp"
#include "springer/springer_map.hpp"

using namespace springer;

TEST_CASE("double dots") {
    CHECK(double_dots(z_base(4)) == SeqPair{z_base(2), z_base(1)});
    CHECK(double_dots({0, 1, 2, 3, 5}) == SeqPair{{0, 1, 3}, {0, 1}});
    CHECK_THROWS_AS(double_dots({0, 2, 1}), DomainError);
}

TEST_CASE("j on small examples") {
    auto sign2 = label_a({0, 2, 3});
    auto triv1 = label_a({0, 1, 3});
    auto r = j_induce({EmbeddingKind::A_split, 2, 0, 1}, {sign2, triv1});
    CHECK(r.label == label_from_partition({2, 1}));
    CHECK(b_invariant(r.label) == 1);
    CHECK(dimension(r.label) == 2);
    CHECK_FALSE(r.kappa_by_convention);

    auto t2 = label_from_bipartition(Family::BC, {2}, {});
    auto t3 = label_from_bipartition(Family::BC, {3}, {});
    CHECK(j_induce({EmbeddingKind::B_WrWq, 2, 0, 3}, {t2, t3}).label ==
          label_from_bipartition(Family::BC, {5}, {}));
}

TEST_CASE("trivial factors induce to trivial") {
    auto triv_d = [](int n) { return label_from_bipartition(Family::D, {n}, {}); };
    auto triv_bc = [](int n) { return label_from_bipartition(Family::BC, {n}, {}); };
    auto triv_a = [](int n) { return label_from_partition(n ? Partition{n} : Partition{}); };
    CHECK(j_induce({EmbeddingKind::D_triple, 2, 3, 2, 0}, {triv_d(2), triv_a(3), triv_d(2)}).label == triv_d(7));
    CHECK(j_induce({EmbeddingKind::B_WrSpWq, 1, 2, 3}, {triv_bc(1), triv_a(2), triv_bc(3)}).label == triv_bc(6));
    CHECK(j_induce({EmbeddingKind::C_WrWDq, 2, 0, 3}, {triv_bc(2), triv_d(3)}).label == triv_bc(5));
}

TEST_CASE("b is additive; parabolic inputs keep specialness") {
    for (int n = 2; n <= 6; ++n) {
        for (int r = 0; r <= n; ++r) {
            int q = n - r;
            for (const auto& a : special_reps(Family::BC, r))
                for (const auto& b : special_reps(Family::BC, q)) {
                    auto out = j_induce({EmbeddingKind::B_WrWq, r, 0, q}, {a.label, b.label}).label;
                    CHECK(b_invariant(out) == a.b + b.b);
                    // W_r x W_q is not parabolic: the output is a Springer label, not always special
                    CHECK_NOTHROW(tau(ClassFamily::B, out));
                }
            for (const auto& a : special_reps(Family::A, r))
                for (const auto& b : special_reps(Family::BC, q)) {
                    auto out = j_induce({EmbeddingKind::B_SpWq, 0, r, q}, {a.label, b.label}).label;
                    CHECK(b_invariant(out) == a.b + b.b);
                    CHECK(is_special(out));
                }
        }
    }
}

TEST_CASE("transitivity along two step chains") {
    for (Family f : {Family::A, Family::BC, Family::D})
        for (int n = 2; n <= 5; ++n) {
            auto rep = j_compose_check(f, n);
            INFO(family_name(f), " n=", n);
            CHECK(rep.checks > 0);
            CHECK(rep.ok());
        }
}

TEST_CASE("embedding validation") {
    CHECK_THROWS(validate(Embedding{EmbeddingKind::C_WrWDq, 2, 1, 3}));
    CHECK_THROWS_AS(parse_embedding_kind("E_weird"), UnsupportedEmbedding);
    for (auto k : {EmbeddingKind::A_split, EmbeddingKind::B_SpWq, EmbeddingKind::B_WrWq, EmbeddingKind::B_WrSpWq,
                   EmbeddingKind::C_WrWDq, EmbeddingKind::D_SpWDq, EmbeddingKind::D_triple})
        CHECK(parse_embedding_kind(embedding_kind_name(k)) == k);
    // factor rank mismatch
    CHECK_THROWS(j_induce({EmbeddingKind::B_WrWq, 2, 0, 2},
                          {label_from_bipartition(Family::BC, {1}, {}), label_from_bipartition(Family::BC, {2}, {})}));
}
