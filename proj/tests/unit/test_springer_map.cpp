#include <set>

#include "doctest.h"
#include "springer/springer_map.hpp"

using namespace springer;

TEST_CASE("regular class of family B") {
    int n = 4;
    ClassLabel c = tau(ClassFamily::B, label_from_bipartition(Family::BC, {n}, {}));
    validate(c);
    CHECK(frak_i(c.y) == std::vector<Interval>{{static_cast<int>(c.y.size()) - 1, static_cast<int>(c.y.size()) - 1}});
    auto fib = tau_fiber(c);
    REQUIRE(fib.size() == 1);
    CHECK(fib[0] == label_from_bipartition(Family::BC, {n}, {}));
    auto inv = class_invariants(c);
    CHECK(inv.bbar == 0);
    CHECK(inv.z == 1);
    CHECK(inv.ztilde_over_z == 2);
}

TEST_CASE("family A invariants are the gcd") {
    auto cls = enumerate_classes(ClassFamily::A, 4);
    CHECK(cls.size() == 5);
    std::multiset<int> zt;
    for (const auto& c : cls) {
        auto inv = class_invariants(c);
        CHECK(inv.z == 1);
        zt.insert(inv.ztilde_over_z);
        CHECK(tau_fiber(c) == std::vector<IrrLabel>{label_a(c.y)});
    }
    CHECK(zt == std::multiset<int>{1, 1, 1, 2, 4});
    auto triv = tau(ClassFamily::A, label_from_partition({4}));
    CHECK(class_invariants(triv).ztilde_over_z == 4);
    auto sign = tau(ClassFamily::A, label_from_partition({1, 1, 1, 1}));
    CHECK(class_invariants(sign).ztilde_over_z == 1);
}

TEST_CASE("tau is a bijection on strata for A, B, C and fibers have size 1 or 2 in D") {
    for (ClassFamily f : {ClassFamily::A, ClassFamily::B, ClassFamily::C, ClassFamily::D})
        for (int n = 1; n <= 7; ++n) {
            std::set<IrrLabel> seen;
            for (const auto& c : enumerate_classes(f, n)) {
                auto fib = tau_fiber(c);
                bool empty_intervals = f != ClassFamily::A && frak_i(c.y).empty();
                if (f == ClassFamily::D)
                    CHECK(fib.size() == (empty_intervals ? 2u : 1u));
                else
                    CHECK(fib.size() == 1u);
                for (const auto& l : fib) {
                    CHECK(seen.insert(l).second);
                    CHECK(tau(f, l) == c);
                }
            }
        }
}

TEST_CASE("class counts match the strata") {
    for (int n = 0; n <= 8; ++n) {
        int m = class_default_m(ClassFamily::B, n);
        CHECK(enumerate_classes(ClassFamily::B, n).size() == enumerate_space(Kind::Y, m, n).size());
    }
    for (const auto& c : enumerate_classes(ClassFamily::C, 3)) CHECK(c.y[1] >= 1);
}

TEST_CASE("component group invariants lie in the allowed ranges") {
    for (int n = 1; n <= 9; ++n) {
        for (const auto& c : enumerate_classes(ClassFamily::B, n)) {
            auto i = class_invariants(c);
            CHECK((i.ztilde_over_z == 1 || i.ztilde_over_z == 2));
            CHECK((i.z & (i.z - 1)) == 0);
            CHECK(i.bbar == beta_prime(c.y));
        }
        for (const auto& c : enumerate_classes(ClassFamily::C, n)) {
            auto i = class_invariants(c);
            CHECK((i.ztilde_over_z == 1 || i.ztilde_over_z == 2));
            CHECK(i.bbar == tilde_beta_prime(c.y));
        }
        for (const auto& c : enumerate_classes(ClassFamily::D, n)) {
            auto i = class_invariants(c);
            auto ivs = frak_i(c.y);
            int delta = frak_i_odd(c.y).empty() ? 0 : 1;
            bool singletons = std::all_of(ivs.begin(), ivs.end(), [](const Interval& v) { return v.size() == 1; });
            CHECK((i.ztilde_over_z == 1 || i.ztilde_over_z == 2 || i.ztilde_over_z == 4));
            CHECK(i.uz_over_z == (1 << delta));
            if (ivs.empty()) {
                CHECK(i.z == 1);
                CHECK(i.ztilde_over_z == 2);
            } else {
                CHECK((i.ztilde_over_z / i.uz_over_z == 2) == singletons);
            }
        }
    }
}

TEST_CASE("renormalized sequence is stable under m -> m+2") {
    for (ClassFamily f : {ClassFamily::B, ClassFamily::C, ClassFamily::D}) {
        int n = 5, m = class_default_m(f, n);
        auto a = enumerate_classes(f, n, m), b = enumerate_classes(f, n, m + 2);
        REQUIRE(a.size() == b.size());
        std::set<Seq> ra, rb;
        for (const auto& c : a) ra.insert(renormalized(c));
        for (const auto& c : b) rb.insert(renormalized(c));
        CHECK(ra == rb);
    }
}

TEST_CASE("invalid classes") {
    CHECK_THROWS_AS(validate(ClassLabel{ClassFamily::B, 1, {0, 0, 2}}), DomainError);
    CHECK_THROWS_AS(parse_class_family("BC"), DomainError);
}
