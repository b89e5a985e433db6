#include <set>

#include "doctest.h"
#include "springer/errors.hpp"
#include "springer/exceptional.hpp"

using namespace springer;
using namespace springer::exceptional;

TEST_CASE("row counts") {
    const auto& t = load_tables();
    CHECK(t.at("G2").rows.size() == 5);
    CHECK(t.at("F4").rows.size() == 16);
    CHECK(t.at("E6").rows.size() == 21);
    CHECK(t.at("E7").rows.size() == 45);
    CHECK(t.at("E8").rows.size() == 70);
}

TEST_CASE("spot lookups") {
    auto& f4 = lookup("F4", "12", 4);
    CHECK(f4.a == 24);
    CHECK(f4.a_prime == 1);
    CHECK(f4.witness_J == "F_4");
    CHECK(lookup("G2", "2", 1).a == 6);
    CHECK(lookup("E8", "4480_y", 16).a == 120);
    CHECK_THROWS_AS(lookup("E8", "4480_y", 17), NotFound);
    CHECK_THROWS_AS(lookup("H4", "1", 0), NotFound);
}

TEST_CASE("duplicate printed names are disambiguated by bbar and flagged") {
    auto& a = lookup("E7", "210_b", 10);
    auto& b = lookup("E7", "210_b", 13);
    CHECK(&a != &b);
    CHECK_FALSE(a.transcription_flags.empty());
    CHECK_FALSE(b.transcription_flags.empty());
    CHECK(lookup("E7", "168'_a", 21).raw_bbar.find('(') != std::string::npos);
}

TEST_CASE("a' respects the order of Omega") {
    for (const auto& [g, t] : load_tables()) {
        std::set<int> seen;
        for (const auto& r : t.rows) seen.insert(r.a_prime);
        if (g == "E6")
            CHECK(std::includes(std::set<int>{1, 3}.begin(), std::set<int>{1, 3}.end(), seen.begin(), seen.end()));
        else if (g == "E7")
            CHECK(std::includes(std::set<int>{1, 2}.begin(), std::set<int>{1, 2}.end(), seen.begin(), seen.end()));
        else
            CHECK(seen == std::set<int>{1});
    }
}

TEST_CASE("validation passes or flags every row") {
    auto rep = validate_tables();
    CHECK(rep.schema_errors.empty());
    CHECK(rep.count(Status::Fail) == 0);
    CHECK(rep.count(Status::Pass) > 0);
    CHECK(rep.rows.size() == 157);
}

TEST_CASE("validation catches a corrupted row") {
    auto tables = load_tables();
    tables["F4"].rows[0].a_prime = 2;
    tables["G2"].rows.pop_back();
    auto rep = validate_tables(tables);
    CHECK(rep.schema_errors.size() >= 2);
    CHECK_FALSE(rep.ok());

    auto t2 = load_tables();
    for (auto& r : t2["E8"].rows)
        if (r.witness_J == "D_8" && r.witness_E1 == "560") r.a += 1;
    auto rep2 = validate_tables(t2);
    CHECK(rep2.count(Status::Fail) > 0);
}
