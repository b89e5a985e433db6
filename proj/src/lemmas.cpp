#include "springer/lemmas.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "springer/seqcomb.hpp"

namespace springer {

namespace {

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

std::set<int> set_union(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> u = a;
    u.insert(b.begin(), b.end());
    return u;
}

std::set<int> set_inter(const std::set<int>& a, const std::set<int>& b) {
    std::set<int> u;
    for (int v : a)
        if (b.count(v)) u.insert(v);
    return u;
}

bool odd_interval_other_than_zero_start(const std::vector<Interval>& odd) {
    return std::any_of(odd.begin(), odd.end(), [](const Interval& v) { return v.lo != 0; });
}

// Counts of strict points against the endpoint sets for one split of y.
struct SplitShape {
    std::set<int> sx, sxp;
};

SplitShape shape(const Seq& x, const Seq& xp) { return {as_set(frak_s(x)), as_set(frak_s(xp))}; }

}  // namespace

LemmaReport run_lemmas(int max_m, int max_n) {
    CheckLine parity_s{"strict point count has the parity of m-1"};
    CheckLine parity_i{"odd interval count has the parity of m-1"};
    CheckLine endpoints{"|R| + |R0| = 2 |intervals|"};
    CheckLine decomp{"interval decomposition exists and matches the intervals"};
    CheckLine subadd{"strict points of a split are bounded by twice the interval count"};
    CheckLine subadd_eq{"bound is attained exactly when union is R and intersection is R0"};
    CheckLine additive{"rho and beta are additive over splits"};
    CheckLine s_nonempty{"split set S(y) is nonempty and contains the constructed member"};
    CheckLine s_brute{"split set S(y) equals the brute-force filter over all splits"};
    CheckLine s_empty{"no intervals forces no strict points in S(y)"};
    CheckLine s_odd{"odd intervals force strict points on both sides of S(y)"};
    CheckLine t_nonempty{"tilde split set is nonempty on admissible sequences"};
    CheckLine t_brute{"tilde split set equals the brute-force filter"};
    CheckLine t_single{"single interval [0,a] forces strict points {a} and {0}"};
    CheckLine t_three{"an odd interval away from 0 forces at least three strict points"};
    CheckLine hat{"hat decomposition round-trips and depends only on strict points"};
    CheckLine sym{"symmetric witness exists iff every interval is a singleton"};

    for (int m = 1; m <= max_m; ++m) {
        std::map<std::vector<int>, Seq> hat_of;
        for (int n = 0; n <= max_n; ++n) {
            for (const Seq& x : enumerate_space(Kind::X, m, n)) {
                auto s = frak_s(x);
                parity_s.record(static_cast<int>(s.size()) % 2 == (m - 1 + 2) % 2, to_string(x));
                auto [xh, e] = hat_decompose(x);
                bool ok = add(xh, e) == x && is_x(xh) && is_e(e) && frak_s(xh) == s;
                for (int i = 0; i < m; ++i)
                    if (xh[i] == xh[i + 1] && e[i] != e[i + 1]) ok = false;
                auto [it, fresh] = hat_of.emplace(s, xh);
                if (!fresh && it->second != xh) ok = false;
                hat.record(ok, to_string(x));
            }

            for (const Seq& y : enumerate_space(Kind::Y, m, n)) {
                std::string where = to_string(y);
                auto ivs = frak_i(y);
                auto odd = frak_i_odd(y);
                parity_i.record(static_cast<int>(odd.size()) % 2 == (m + 1) % 2, where);
                auto R = as_set(r_set(y)), R0 = as_set(r0_set(y));
                endpoints.record(R.size() + R0.size() == 2 * ivs.size(), where);
                try {
                    auto d = interval_decomp(y);
                    decomp.record(!d.blocks.empty() && d.blocks.front().span.lo == 0 && d.blocks.back().span.hi == m,
                                  where);
                } catch (const std::exception& ex) {
                    decomp.record(false, where + ": " + ex.what());
                }

                std::set<SeqPair> brute;
                for (const auto& [x, xp] : sum_decompositions(y, false)) {
                    auto sh = shape(x, xp);
                    size_t total = sh.sx.size() + sh.sxp.size();
                    subadd.record(total <= 2 * ivs.size(), where + " = " + to_string(x) + " + " + to_string(xp));
                    bool exact = set_union(sh.sx, sh.sxp) == R && set_inter(sh.sx, sh.sxp) == R0;
                    subadd_eq.record((total == 2 * ivs.size()) == exact, where + " = " + to_string(x) + " + " + to_string(xp));
                    additive.record(rho_prime(y) == rho(x) + rho(xp) && beta_prime(y) == beta(x) + beta(xp), where);
                    if (member_s(y, x, xp)) brute.insert({x, xp});
                }
                auto S = enumerate_s(y);
                std::set<SeqPair> sset(S.begin(), S.end());
                auto one = construct_one_s(y);
                s_nonempty.record(!S.empty() && sset.count(one), where);
                s_brute.record(sset == brute, where);
                for (const auto& [x, xp] : S) {
                    auto sh = shape(x, xp);
                    if (ivs.empty()) s_empty.record(sh.sx.empty() && sh.sxp.empty(), where);
                    if (!odd.empty()) s_odd.record(!sh.sx.empty() && !sh.sxp.empty(), where);
                }

                bool singletons = std::all_of(ivs.begin(), ivs.end(), [](const Interval& v) { return v.size() == 1; });
                auto symd = symmetric_decompositions(y);
                bool members_ok = true;
                for (const auto& [x, e] : symd) {
                    Seq ex = add(e, x);
                    if (add(x, ex) != y || frak_s(ex) != frak_s(x) || !member_s(y, x, ex)) members_ok = false;
                }
                sym.record(members_ok && symd.empty() != singletons, where);
            }

            if (m % 2 == 0 && m >= 2) {
                for (const Seq& y : enumerate_space(Kind::YT, m, n)) {
                    if (y[0] != 0 || y[1] != 1) continue;
                    std::string where = to_string(y);
                    auto ivs = frak_i(y);
                    auto odd = frak_i_odd(y);
                    auto T = enumerate_tilde_s(y);
                    std::set<SeqPair> tset(T.begin(), T.end()), brute;
                    for (const auto& [x, xp] : sum_decompositions(y, true))
                        if (member_tilde_s(y, x, xp)) brute.insert({x, xp});
                    t_nonempty.record(!T.empty(), where);
                    t_brute.record(tset == brute, where);
                    for (const auto& [x, xp] : T) {
                        auto sh = shape(x, xp);
                        if (ivs.size() == 1) {
                            int a = ivs.front().hi;
                            t_single.record(sh.sx == std::set<int>{a} && sh.sxp == std::set<int>{0}, where);
                        }
                        if (odd_interval_other_than_zero_start(odd)) t_three.record(sh.sxp.size() >= 3, where);
                    }
                }
            }
        }
    }
    return {{parity_s, parity_i, endpoints, decomp, subadd, subadd_eq, additive, s_nonempty, s_brute, s_empty, s_odd,
             t_nonempty, t_brute, t_single, t_three, hat, sym}};
}

namespace {

Seq random_x(int m, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> step(0, 2);
    Seq x(m + 1);
    x[0] = step(rng);
    for (int i = 1; i <= m; ++i) {
        int v = x[i - 1] + step(rng);
        if (i >= 2 && v <= x[i - 2]) v = x[i - 2] + 1;
        x[i] = v;
    }
    return x;
}

}  // namespace

LemmaReport run_random_lemmas(int m, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CheckLine additive{"beta' and rho' of a sum of random X-sequences are additive"};
    CheckLine subadd{"strict points of a random split are bounded by twice the interval count"};
    CheckLine endpoints{"|R| + |R0| = 2 |intervals| on random sums"};
    for (int s = 0; s < samples; ++s) {
        Seq x = random_x(m, rng), xp = random_x(m, rng);
        Seq y = add(x, xp);
        std::string where = to_string(x) + " + " + to_string(xp);
        additive.record(is_y(y) && beta_prime(y) == beta(x) + beta(xp) && rho_prime(y) == rho(x) + rho(xp), where);
        auto ivs = frak_i(y);
        subadd.record(frak_s(x).size() + frak_s(xp).size() <= 2 * ivs.size(), where);
        endpoints.record(r_set(y).size() + r0_set(y).size() == 2 * ivs.size(), where);
    }
    return {{additive, subadd, endpoints}};
}

}  // namespace springer
