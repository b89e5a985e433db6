#include <algorithm>

#include "doctest.h"
#include "springer/errors.hpp"
#include "springer/oracle.hpp"

using namespace springer;
using namespace springer::oracle;

namespace {

std::vector<std::int64_t> degrees(const CharacterTable& t) {
    int id = -1;
    for (size_t c = 0; c < t.classes.size(); ++c)
        if (t.classes[c].key.neg.empty() && std::all_of(t.classes[c].key.pos.begin(), t.classes[c].key.pos.end(),
                                                        [](int v) { return v == 1; }))
            id = static_cast<int>(c);
    std::vector<std::int64_t> out;
    for (const auto& row : t.values) out.push_back(row[id]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("small character tables") {
    auto s3 = character_table(Family::A, 3);
    CHECK(s3->classes.size() == 3);
    CHECK(degrees(*s3) == std::vector<std::int64_t>{1, 1, 2});

    auto w2 = character_table(Family::BC, 2);
    CHECK(w2->order == 8);
    CHECK(w2->classes.size() == 5);
    CHECK(degrees(*w2) == std::vector<std::int64_t>{1, 1, 1, 1, 2});

    auto d4 = character_table(Family::D, 4);
    CHECK(d4->order == 192);
    CHECK(d4->classes.size() == 13);
    CHECK(check_table(*d4).ok());
}

TEST_CASE("all supported tables are exact") {
    for (int n = 1; n <= kMaxRankA; ++n) CHECK(check_table(*character_table(Family::A, n)).ok());
    for (int n = 1; n <= kMaxRankBD; ++n) CHECK(check_table(*character_table(Family::BC, n)).ok());
    for (int n = 2; n <= kMaxRankBD; ++n) CHECK(check_table(*character_table(Family::D, n)).ok());
    CHECK_THROWS_AS(character_table(Family::BC, kMaxRankBD + 1), ResourceError);
    CHECK_THROWS_AS(character_table(Family::A, kMaxRankA + 1), ResourceError);
}

TEST_CASE("b oracle examples") {
    CHECK(b_oracle(label_from_partition({4})).b == 0);
    auto sign = b_oracle(label_from_partition({1, 1, 1, 1}));
    CHECK(sign.b == 6);
    CHECK(sign.multiplicity == 1);
    CHECK(b_oracle(label_bc({0, 1, 2}, {0, 2})).b == 1);
    CHECK(b_oracle(label_from_bipartition(Family::BC, {}, {1, 1})).b == 4);
}

TEST_CASE("b oracle equals the symbol formula on all of Irr") {
    for (Family f : {Family::A, Family::BC, Family::D}) {
        int hi = f == Family::A ? 6 : 4;
        for (int n = f == Family::D ? 2 : 1; n <= hi; ++n)
            for (const auto& l : all_irreps(f, n)) {
                INFO(to_string(l));
                CHECK(b_oracle(l).b == b_invariant(l));
            }
    }
}

TEST_CASE("j oracle examples") {
    auto r = j_oracle({EmbeddingKind::A_split, 2, 0, 1}, {label_from_partition({1, 1}), label_from_partition({1})});
    CHECK(r.label == label_from_partition({2, 1}));
    CHECK(r.multiplicity == 1);

    auto t1 = label_from_bipartition(Family::BC, {1}, {});
    auto s1 = label_from_partition({1});
    auto t = j_oracle({EmbeddingKind::B_WrSpWq, 1, 1, 1}, {t1, s1, t1});
    CHECK(t.label == label_from_bipartition(Family::BC, {3}, {}));
    CHECK(t.b == 0);
    CHECK(t.multiplicity == 1);
}

TEST_CASE("induction multiplicities follow Frobenius reciprocity totals") {
    // Inducing the trivial character of S_2 x S_1 to S_3 gives trivial + standard.
    Embedding e{EmbeddingKind::A_split, 2, 0, 1};
    std::vector<IrrLabel> f{label_from_partition({2}), label_from_partition({1})};
    CHECK(induction_multiplicity(label_from_partition({3}), e, f) == 1);
    CHECK(induction_multiplicity(label_from_partition({2, 1}), e, f) == 1);
    CHECK(induction_multiplicity(label_from_partition({1, 1, 1}), e, f) == 0);
}

TEST_CASE("oracle suite at reduced bounds") {
    auto rep = oracle_check(5, 4, 3);
    for (const auto& l : rep.lines) {
        INFO(l.name);
        CHECK(l.checks > 0);
        CHECK(l.failures == 0);
    }
}
