#include "doctest.h"
#include "springer/json_io.hpp"
#include "springer/theorem.hpp"

using namespace springer;

TEST_CASE("rank floors") {
    CHECK(rank_floor(ClassFamily::A) == 2);
    CHECK(rank_floor(ClassFamily::B) == 2);
    CHECK(rank_floor(ClassFamily::C) == 3);
    CHECK(rank_floor(ClassFamily::D) == 4);
    CHECK_THROWS_AS(verify(ClassFamily::D, 3), DomainError);
    CHECK_THROWS_AS(bar_s(ClassFamily::C, 2), DomainError);
}

TEST_CASE("omega descriptors") {
    CHECK(omega(ClassFamily::A, 5).order == 5);
    CHECK(omega(ClassFamily::B, 5).order == 2);
    CHECK(omega(ClassFamily::C, 5).order == 2);
    auto even = omega(ClassFamily::D, 6), odd = omega(ClassFamily::D, 5);
    CHECK(even.order == 4);
    CHECK_FALSE(even.cyclic);
    CHECK(even.subgroups.size() == 5);
    CHECK(odd.cyclic);
    CHECK(odd.subgroups.size() == 3);
}

TEST_CASE("a and c on small examples") {
    CHECK(fa(label_from_bipartition(Family::BC, {3}, {}), ClassFamily::B, 3) == 1);
    CHECK(fa(label_from_bipartition(Family::BC, {2}, {}), ClassFamily::B, 2) == 1);
    CHECK(fc(label_from_partition({4}), ClassFamily::A, 4).order == 4);
    CHECK(fc(label_from_partition({1, 1, 1, 1}), ClassFamily::A, 4).order == 1);
    CHECK(fc(label_from_partition({2, 2}), ClassFamily::A, 4).order == 2);
}

TEST_CASE("family B: a symmetric witness needs singleton intervals") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& c : enumerate_classes(ClassFamily::B, n)) {
            auto ivs = frak_i(c.y);
            bool big = std::any_of(ivs.begin(), ivs.end(), [](const Interval& v) { return v.size() > 1; });
            if (big) CHECK(fc(tau_fiber(c)[0], ClassFamily::B, n).order == 1);
        }
}

TEST_CASE("family D: odd intervals that are all singletons give c = 4") {
    int seen = 0;
    for (int n = 4; n <= 7; ++n)
        for (const auto& c : enumerate_classes(ClassFamily::D, n)) {
            auto ivs = frak_i(c.y);
            bool singletons = !ivs.empty() &&
                              std::all_of(ivs.begin(), ivs.end(), [](const Interval& v) { return v.size() == 1; });
            if (!singletons || frak_i_odd(c.y).empty()) continue;
            auto w = fc(tau_fiber(c)[0], ClassFamily::D, n);
            CHECK(w.order == 4);
            CHECK(replay(w).label == tau_fiber(c)[0]);
            ++seen;
        }
    CHECK(seen > 0);
}

TEST_CASE("verification passes at small ranks") {
    for (ClassFamily f : {ClassFamily::A, ClassFamily::B, ClassFamily::C, ClassFamily::D})
        for (int n = rank_floor(f); n <= rank_floor(f) + 3; ++n) {
            auto rep = verify(f, n);
            INFO(class_family_name(f), " n=", n);
            CHECK(rep.a_ok);
            CHECK(rep.b1_ok);
            CHECK(rep.b2_ok);
            CHECK(rep.b3_ok);
            CHECK(rep.replay_ok);
            CHECK(rep.missing_from_bar_s.empty());
            CHECK(rep.extra_in_bar_s.empty());
        }
}

TEST_CASE("every witness replays and realizes its value") {
    for (ClassFamily f : {ClassFamily::B, ClassFamily::C, ClassFamily::D}) {
        int n = rank_floor(f) + 2;
        for (const auto& r : verify(f, n).records) {
            CHECK(symbol_key(replay(r.fa_witness).label) == symbol_key(r.e));
            CHECK(symbol_key(replay(r.fc_witness).label) == symbol_key(r.e));
            int prod = 1;
            for (const auto& l : r.fa_witness.factors) prod *= f_invariant(l);
            CHECK(prod == r.fa);
            CHECK(r.fa <= r.z);
            CHECK(omega(f, n).order % r.fc == 0);
        }
    }
}

TEST_CASE("sequence route to maximal witnesses agrees with replay") {
    for (ClassFamily f : {ClassFamily::B, ClassFamily::D}) {
        int n = rank_floor(f) + 1;
        for (const auto& c : enumerate_classes(f, n))
            for (const auto& e : tau_fiber(c)) {
                auto brute = enumerate_cz(e, f, n, true);
                auto seq = enumerate_cz_sequences(e, f, n);
                CHECK(brute.size() == seq.size());
                int best_b = 0, best_s = 0;
                for (const auto& w : brute) best_b = std::max(best_b, w.f);
                for (const auto& w : seq) best_s = std::max(best_s, w.f);
                CHECK(best_b == best_s);
            }
    }
}

TEST_CASE("serial and parallel verification agree byte for byte") {
    for (ClassFamily f : {ClassFamily::B, ClassFamily::C, ClassFamily::D}) {
        int n = rank_floor(f) + 2;
        CHECK(to_json(verify(f, n)).dump() == to_json(verify_serial(f, n)).dump());
        CHECK(to_json(verify(f, n)).dump() == to_json(verify(f, n)).dump());
    }
}
