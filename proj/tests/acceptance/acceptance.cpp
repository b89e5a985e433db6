#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>

#include "springer/exceptional.hpp"
#include "springer/lemmas.hpp"
#include "springer/oracle.hpp"
#include "springer/theorem.hpp"

using namespace springer;

namespace {

// Time budgets in seconds, one per criterion.
constexpr double kBudgetB = 60;
constexpr double kBudgetCD = 300;
constexpr double kBudgetA = 5;
constexpr double kBudgetOracle = 600;
constexpr double kBudgetLemmas = 120;
constexpr double kBudgetExceptional = 5;

// Ranges, pinned.
constexpr int kMaxRankTheorem = 10;
constexpr int kMaxRankA = 12;
constexpr int kOracleA = 6, kOracleBD = 5, kOracleJ = 4;
constexpr int kLemmaM = 8, kLemmaN = 8;
constexpr int kCountRank = 10, kDimRank = 6;
constexpr int kShiftRank = 6, kShiftStep = 2;

struct Outcome {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

int failures = 0;

void criterion(int id, const std::string& name, double budget, const std::function<void(Outcome&)>& body) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget > 0 && secs > budget) o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(budget) + " s");
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
}

void verify_range(Outcome& o, ClassFamily f, int lo, int hi) {
    for (int n = lo; n <= hi; ++n) {
        auto rep = verify(f, n);
        if (!rep.ok() || !rep.missing_from_bar_s.empty() || !rep.extra_in_bar_s.empty())
            o.fail(std::string(class_family_name(f)) + std::to_string(n) + " failed verification");
    }
}

std::int64_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

int main() {
    criterion(1, "family B, 2 <= n <= 10: set equality, b, a and c", kBudgetB,
              [](Outcome& o) { verify_range(o, ClassFamily::B, 2, kMaxRankTheorem); });

    criterion(2, "family C, 3 <= n <= 10 and family D, 4 <= n <= 10", kBudgetCD, [](Outcome& o) {
        verify_range(o, ClassFamily::C, 3, kMaxRankTheorem);
        verify_range(o, ClassFamily::D, 4, kMaxRankTheorem);
    });

    criterion(3, "family A, 2 <= n <= 12: divisor maximization equals gcd", kBudgetA, [](Outcome& o) {
        for (int n = 2; n <= kMaxRankA; ++n)
            for (const auto& c : enumerate_classes(ClassFamily::A, n)) {
                int g = n;
                for (size_t i = 0; i < c.y.size(); ++i) g = std::gcd(g, c.y[i] - static_cast<int>(i));
                auto w = fc(tau_fiber(c)[0], ClassFamily::A, n);
                if (w.order != g || class_invariants(c).ztilde_over_z != g)
                    o.fail("A" + std::to_string(n) + " " + to_string(c));
            }
    });

    criterion(4, "oracle: b on all of Irr and j with multiplicity one", kBudgetOracle, [](Outcome& o) {
        auto rep = oracle::oracle_check(kOracleA, kOracleBD, kOracleJ);
        for (const auto& l : rep.lines)
            if (!l.ok() || l.checks == 0) o.fail(l.name);
    });

    criterion(5, "sequence lemmas, m <= 8 and statistic <= 8", kBudgetLemmas, [](Outcome& o) {
        auto rep = run_lemmas(kLemmaM, kLemmaN);
        for (const auto& l : rep.lines)
            if (!l.ok() || l.checks == 0) o.fail(l.name);
    });

    criterion(6, "counting identities", 0, [](Outcome& o) {
        for (int n = 0; n <= kCountRank; ++n) {
            int m = default_m(Family::BC, n);
            if (special_reps(Family::BC, n, m).size() != enumerate_space(Kind::X, m, n).size())
                o.fail("special count B" + std::to_string(n));
            if (enumerate_classes(ClassFamily::B, n, m).size() != enumerate_space(Kind::Y, m, n).size())
                o.fail("class count B" + std::to_string(n));
        }
        for (Family f : {Family::A, Family::BC, Family::D})
            for (int n = f == Family::D ? 2 : 1; n <= kDimRank; ++n) {
                std::int64_t s = 0;
                for (const auto& l : all_irreps(f, n)) s += dimension(l) * dimension(l);
                std::int64_t order = f == Family::A ? factorial(n) : (factorial(n) << (f == Family::BC ? n : n - 1));
                if (s != order) o.fail(std::string("sum of squares ") + family_name(f) + std::to_string(n));
            }
    });

    criterion(7, "exceptional tables", kBudgetExceptional, [](Outcome& o) {
        using namespace springer::exceptional;
        const auto& t = load_tables();
        for (const auto& g : group_names())
            if (static_cast<int>(t.at(g).rows.size()) != expected_rows(g)) o.fail("row count " + g);
        const int counts[] = {5, 16, 21, 45, 70};
        for (int i = 0; i < 5; ++i)
            if (expected_rows(group_names()[i]) != counts[i]) o.fail("expected count " + group_names()[i]);
        if (lookup("F4", "12", 4).a != 24) o.fail("F4 12");
        if (lookup("G2", "2", 1).a != 6) o.fail("G2 2");
        if (lookup("E8", "4480_y", 16).a != 120) o.fail("E8 4480_y");
        for (const auto& [g, gt] : t)
            for (const auto& r : gt.rows) {
                bool ok = g == "E6" ? (r.a_prime == 1 || r.a_prime == 3)
                          : g == "E7" ? (r.a_prime == 1 || r.a_prime == 2)
                                      : r.a_prime == 1;
                if (!ok) o.fail("a' of " + g + " " + r.rho_name);
            }
        auto rep = validate_tables();
        if (!rep.ok()) o.fail("validation reports failures");
        for (const auto& r : rep.rows)
            if (r.status == Status::Fail) o.fail(r.group + " " + r.rho_name + ": " + r.detail);
    });

    criterion(8, "shift stability under m -> m+2 at n = 6", 0, [](Outcome& o) {
        for (ClassFamily f : {ClassFamily::B, ClassFamily::C, ClassFamily::D}) {
            std::string tag = class_family_name(f);
            Family lf = label_family(f);
            int m = default_m(lf, kShiftRank);
            auto s0 = special_reps(lf, kShiftRank, m), s1 = special_reps(lf, kShiftRank, m + kShiftStep);
            std::map<IrrLabel, std::pair<int, int>> bf0, bf1;
            for (const auto& s : s0) bf0[s.label] = {s.b, s.f};
            for (const auto& s : s1) bf1[s.label] = {s.b, s.f};
            if (bf0 != bf1) o.fail(tag + ": b or f moved");

            auto r0 = verify(f, kShiftRank, {true, 0});
            auto r1 = verify(f, kShiftRank, {true, kShiftStep});
            if (!r0.ok() || !r1.ok()) o.fail(tag + ": verification failed");
            if (r0.records.size() != r1.records.size()) {
                o.fail(tag + ": record count moved");
                continue;
            }
            for (size_t i = 0; i < r0.records.size(); ++i) {
                const auto &a = r0.records[i], &b = r1.records[i];
                if (!(a.e == b.e) || a.b_e != b.b_e || a.fa != b.fa || a.fc != b.fc || a.z != b.z ||
                    a.ztilde_over_z != b.ztilde_over_z || renormalized(a.cls) != renormalized(b.cls))
                    o.fail(tag + ": " + to_string(a.e) + " moved");
            }
        }
    });

    return failures == 0 ? 0 : 1;
}
