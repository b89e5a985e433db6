#include "springer/seqcomb.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace springer {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Z: return "Z";
        case Kind::X: return "X";
        case Kind::Y: return "Y";
        case Kind::XT: return "XT";
        case Kind::YT: return "YT";
        case Kind::E: return "E";
    }
    return "?";
}

namespace {

bool nonneg_nondecreasing(const Seq& s) {
    if (s.empty() || s[0] < 0) return false;
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] > s[i + 1]) return false;
    return true;
}

int m_of(const Seq& s) { return static_cast<int>(s.size()) - 1; }

void check_m(int m) {
    if (m < 0) throw DomainError("sequence length must be at least 1");
    if (m > kMaxLength) throw ResourceError("m exceeds the cap of 64");
}

}  // namespace

bool is_z(const Seq& s) {
    if (s.empty() || s[0] < 0) return false;
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] >= s[i + 1]) return false;
    return true;
}

bool is_x(const Seq& s) {
    if (!nonneg_nondecreasing(s)) return false;
    for (size_t i = 0; i + 2 < s.size(); ++i)
        if (s[i] >= s[i + 2]) return false;
    return true;
}

bool is_y(const Seq& s) {
    if (!nonneg_nondecreasing(s)) return false;
    for (size_t i = 0; i + 2 < s.size(); ++i)
        if (s[i] > s[i + 2] - 2) return false;
    return true;
}

bool is_e(const Seq& s) { return nonneg_nondecreasing(s); }

bool is_xt(const Seq& s) {
    int m = m_of(s);
    return m >= 2 && m % 2 == 0 && is_x(s) && s[0] == 0 && s[1] >= 1;
}

bool is_yt(const Seq& s) {
    int m = m_of(s);
    return m >= 2 && m % 2 == 0 && is_y(s) && s[1] >= 1;
}

bool is_kind(Kind k, const Seq& s) {
    switch (k) {
        case Kind::Z: return is_z(s);
        case Kind::X: return is_x(s);
        case Kind::Y: return is_y(s);
        case Kind::XT: return is_xt(s);
        case Kind::YT: return is_yt(s);
        case Kind::E: return is_e(s);
    }
    return false;
}

void require_kind(Kind k, const Seq& s, const char* op) {
    if (!is_kind(k, s))
        throw DomainError(std::string(op) + ": " + to_string(s) + " is not a valid " +
                          kind_name(k) + "-sequence");
}

Seq z_base(int m) {
    Seq s(m + 1);
    for (int i = 0; i <= m; ++i) s[i] = i;
    return s;
}

Seq x_base(int m) {
    Seq s(m + 1);
    for (int i = 0; i <= m; ++i) s[i] = i / 2;
    return s;
}

Seq y_base(int m) {
    Seq s(m + 1);
    for (int i = 0; i <= m; ++i) s[i] = 2 * (i / 2);
    return s;
}

Seq xt_base(int m) {
    Seq s(m + 1);
    for (int i = 0; i <= m; ++i) s[i] = (i + 1) / 2;
    return s;
}

Seq yt_base(int m) { return z_base(m); }

Seq base_of(Kind k, int m) {
    switch (k) {
        case Kind::Z: return z_base(m);
        case Kind::X: return x_base(m);
        case Kind::Y: return y_base(m);
        case Kind::XT: return xt_base(m);
        case Kind::YT: return yt_base(m);
        case Kind::E: return Seq(m + 1, 0);
    }
    return {};
}

Seq add(const Seq& a, const Seq& b) {
    if (a.size() != b.size()) throw DomainError("adding sequences of different lengths");
    Seq r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Seq sub(const Seq& a, const Seq& b) {
    if (a.size() != b.size()) throw DomainError("subtracting sequences of different lengths");
    Seq r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

int deviation_sum(const Seq& s, const Seq& base) {
    int t = 0;
    for (size_t i = 0; i < s.size(); ++i) t += s[i] - base[i];
    return t;
}

int weighted_deviation_sum(const Seq& s, const Seq& base) {
    int m = m_of(s), t = 0;
    for (int i = 0; i <= m; ++i) t += (m - i) * (s[i] - base[i]);
    return t;
}

int rho0(const Seq& z) {
    require_kind(Kind::Z, z, "rho0");
    return deviation_sum(z, z_base(m_of(z)));
}
int beta0(const Seq& z) {
    require_kind(Kind::Z, z, "beta0");
    return weighted_deviation_sum(z, z_base(m_of(z)));
}
int rho(const Seq& x) {
    require_kind(Kind::X, x, "rho");
    return deviation_sum(x, x_base(m_of(x)));
}
int beta(const Seq& x) {
    require_kind(Kind::X, x, "beta");
    return weighted_deviation_sum(x, x_base(m_of(x)));
}
int rho_prime(const Seq& y) {
    require_kind(Kind::Y, y, "rho_prime");
    return deviation_sum(y, y_base(m_of(y)));
}
int beta_prime(const Seq& y) {
    require_kind(Kind::Y, y, "beta_prime");
    return weighted_deviation_sum(y, y_base(m_of(y)));
}
int tilde_rho(const Seq& x) {
    require_kind(Kind::XT, x, "tilde_rho");
    return deviation_sum(x, xt_base(m_of(x)));
}
int tilde_beta(const Seq& x) {
    require_kind(Kind::XT, x, "tilde_beta");
    return weighted_deviation_sum(x, xt_base(m_of(x)));
}
int tilde_rho_prime(const Seq& y) {
    require_kind(Kind::YT, y, "tilde_rho_prime");
    return deviation_sum(y, yt_base(m_of(y)));
}
int tilde_beta_prime(const Seq& y) {
    require_kind(Kind::YT, y, "tilde_beta_prime");
    return weighted_deviation_sum(y, yt_base(m_of(y)));
}

namespace {

// Whether index j of s is a strict point, given entries 0..j+1 (or the end).
bool strict_at(const Seq& s, int j, int m) {
    bool left = j == 0 || s[j - 1] < s[j];
    bool right = j == m || s[j] < s[j + 1];
    return left && right;
}

std::vector<int> sorted_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

}  // namespace

std::vector<int> frak_s(const Seq& x) {
    require_kind(Kind::X, x, "frak_s");
    int m = m_of(x);
    std::vector<int> r;
    for (int j = 0; j <= m; ++j)
        if (strict_at(x, j, m)) r.push_back(j);
    return r;
}

std::vector<Interval> frak_i(const Seq& y) {
    require_kind(Kind::Y, y, "frak_i");
    int m = m_of(y);
    std::vector<Interval> out;
    auto d = [&](int i) { return y[i] - i; };
    int i = 0;
    while (i <= m) {
        int j = i;
        while (j + 1 <= m && d(j + 1) == d(i)) ++j;
        bool left = i == 0 || d(i - 1) < d(i);
        bool right = j == m || d(j + 1) > d(j);
        if (left && right) out.push_back({i, j});
        i = j + 1;
    }
    return out;
}

std::vector<Interval> frak_i_odd(const Seq& y) {
    std::vector<Interval> out;
    for (const auto& c : frak_i(y))
        if (c.size() % 2 == 1) out.push_back(c);
    return out;
}

std::vector<Interval> frak_i_even(const Seq& y) {
    std::vector<Interval> out;
    for (const auto& c : frak_i(y))
        if (c.size() % 2 == 0) out.push_back(c);
    return out;
}

std::vector<int> r_set(const Seq& y) {
    std::vector<int> r;
    for (const auto& c : frak_i(y)) {
        r.push_back(c.lo);
        if (c.hi != c.lo) r.push_back(c.hi);
    }
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<int> r0_set(const Seq& y) {
    std::vector<int> r;
    for (const auto& c : frak_i(y))
        if (c.lo == c.hi) r.push_back(c.lo);
    return r;
}

IntervalDecomp interval_decomp(const Seq& y) {
    require_kind(Kind::Y, y, "interval_decomp");
    int m = m_of(y);
    IntervalDecomp out;
    int i = 0;
    while (i <= m) {
        if (i + 1 <= m && y[i + 1] == y[i]) {
            out.blocks.push_back({{i, i + 1}, BlockKind::SinglePair, y[i]});
            i += 2;
            continue;
        }
        int j = i;
        while (j + 1 <= m && y[j + 1] == y[j] + 1) ++j;
        out.blocks.push_back({{i, j}, BlockKind::Arithmetic, y[i]});
        i = j + 1;
    }
    for (size_t s = 1; s < out.blocks.size(); ++s)
        ensure(y[out.blocks[s].span.lo] - y[out.blocks[s - 1].span.hi] >= 2,
               "interval_decomp: gap condition fails for " + to_string(y));

    std::vector<Interval> runs;
    for (const auto& b : out.blocks)
        if (b.kind == BlockKind::Arithmetic) runs.push_back(b.span);
    ensure(runs == frak_i(y), "interval_decomp: arithmetic blocks differ from frak_i");
    return out;
}

namespace {

// Smallest admissible entry at index i of an X (or XT) sequence given a prefix.
int x_lower(const Seq& s, int i, bool tilde) {
    int v = 0;
    if (i >= 1) v = std::max(v, s[i - 1]);
    if (i >= 2) v = std::max(v, s[i - 2] + 1);
    if (tilde && i == 1) v = std::max(v, 1);
    return v;
}

// Conditions of S(y) (tilde = false) or S~(y) (tilde = true), checked
// position by position while x, x' are assembled left to right.
struct SplitConditions {
    std::vector<char> in_r, in_r0;
    bool no_odd = false;       // frak_i_odd(y) empty
    bool single_head = false;  // the only odd interval starts at 0
    bool tilde = false;
    bool apply = true;

    SplitConditions(const Seq& y, bool tilde_, bool apply_) : tilde(tilde_), apply(apply_) {
        int m = m_of(y);
        in_r.assign(m + 1, 0);
        in_r0.assign(m + 1, 0);
        if (!apply) return;
        for (int j : r_set(y)) in_r[j] = 1;
        for (int j : r0_set(y)) in_r0[j] = 1;
        auto odd = frak_i_odd(y);
        no_odd = odd.empty();
        single_head = odd.size() == 1 && odd[0].lo == 0;
    }

    bool ok(const Seq& x, const Seq& xp, int j, int m) const {
        if (!apply) return true;
        bool a = strict_at(x, j, m), b = strict_at(xp, j, m);
        if ((a || b) != static_cast<bool>(in_r[j])) return false;
        if ((a && b) != static_cast<bool>(in_r0[j])) return false;
        if (!tilde && no_odd && b) return false;
        if (tilde && single_head && b != (j == 0)) return false;
        return true;
    }
};

std::vector<SeqPair> split_search(const Seq& y, bool tilde, bool apply_conditions) {
    int m = m_of(y);
    SplitConditions cond(y, tilde, apply_conditions);
    Seq x(m + 1), xp(m + 1);
    std::vector<SeqPair> out;
    std::function<void(int)> go = [&](int i) {
        if (i == m + 1) {
            if (cond.ok(x, xp, m, m)) out.emplace_back(x, xp);
            return;
        }
        int lo = x_lower(x, i, false);
        int hi = y[i] - x_lower(xp, i, tilde);
        if (tilde && i == 0) lo = std::max(lo, y[0]), hi = std::min(hi, y[0]);
        for (int v = lo; v <= hi; ++v) {
            x[i] = v;
            xp[i] = y[i] - v;
            if (i >= 1 && !cond.ok(x, xp, i - 1, m)) continue;
            go(i + 1);
        }
    };
    go(0);
    return out;
}

}  // namespace

bool member_s(const Seq& y, const Seq& x, const Seq& xp) {
    require_kind(Kind::Y, y, "member_s");
    if (x.size() != y.size() || xp.size() != y.size()) return false;
    if (!is_x(x) || !is_x(xp) || add(x, xp) != y) return false;
    auto sx = frak_s(x), sxp = frak_s(xp);
    if (sorted_union(sx, sxp) != r_set(y)) return false;
    if (sorted_intersection(sx, sxp) != r0_set(y)) return false;
    if (frak_i_odd(y).empty() && !sxp.empty()) return false;
    return true;
}

std::vector<SeqPair> enumerate_s(const Seq& y) {
    require_kind(Kind::Y, y, "enumerate_s");
    check_m(m_of(y));
    return split_search(y, false, true);
}

SeqPair construct_one_s(const Seq& y) {
    auto dec = interval_decomp(y);
    int m = m_of(y);
    Seq x(m + 1), xp(m + 1);
    bool have_prev = false;
    int xi = 0, xip = 0;
    for (const auto& b : dec.blocks) {
        int u = have_prev ? xi + 1 : 0;
        int up = b.base - u;
        ensure(!have_prev || up > xip, "construct_one_s: no room between blocks");
        // Runs always use the pattern (u,u+1,u+1,...) / (u',u',u'+1,...), which is
        // admissible whether or not odd intervals exist.
        for (int t = 0; t < b.span.size(); ++t) {
            int i = b.span.lo + t;
            if (b.kind == BlockKind::SinglePair) {
                x[i] = u;
                xp[i] = up;
            } else {
                x[i] = u + (t + 1) / 2;
                xp[i] = up + t / 2;
            }
        }
        xi = x[b.span.hi];
        xip = xp[b.span.hi];
        have_prev = true;
    }
    ensure(member_s(y, x, xp), "construct_one_s produced a non-member for " + to_string(y));
    return {x, xp};
}

namespace {

void require_tilde_domain(const Seq& y, const char* op) {
    int m = m_of(y);
    if (m < 2 || m % 2 != 0)
        throw DomainError(std::string(op) + ": m must be even and at least 2");
    if (!is_y(y)) throw DomainError(std::string(op) + ": not a Y-sequence " + to_string(y));
    if (y[1] < 1) throw DomainError(std::string(op) + ": requires y_1 >= 1");
    if (y[0] != 0) throw DomainError(std::string(op) + ": requires y_0 = 0");
    if (y[1] != 1) throw DomainError(std::string(op) + ": requires y_1 = 1");
}

}  // namespace

bool member_tilde_s(const Seq& y, const Seq& x, const Seq& xp) {
    require_tilde_domain(y, "member_tilde_s");
    if (x.size() != y.size() || xp.size() != y.size()) return false;
    if (!is_x(x) || !is_xt(xp) || add(x, xp) != y) return false;
    auto sx = frak_s(x), sxp = frak_s(xp);
    if (sorted_union(sx, sxp) != r_set(y)) return false;
    if (sorted_intersection(sx, sxp) != r0_set(y)) return false;
    auto odd = frak_i_odd(y);
    if (odd.size() == 1 && odd[0].lo == 0 && sxp != std::vector<int>{0}) return false;
    return true;
}

std::vector<SeqPair> enumerate_tilde_s(const Seq& y) {
    require_tilde_domain(y, "enumerate_tilde_s");
    check_m(m_of(y));
    return split_search(y, true, true);
}

std::vector<SeqPair> sum_decompositions(const Seq& y, bool tilde) {
    if (!is_e(y)) throw DomainError("sum_decompositions: " + to_string(y));
    check_m(m_of(y));
    if (tilde && (m_of(y) < 2 || m_of(y) % 2 != 0))
        throw DomainError("sum_decompositions: tilde split needs even m >= 2");
    return split_search(y, tilde, false);
}

SeqPair hat_decompose(const Seq& x) {
    auto strict = frak_s(x);
    int m = m_of(x);
    std::vector<char> is_strict(m + 1, 0);
    for (int j : strict) is_strict[j] = 1;
    Seq xh(m + 1);
    int prev = -1;
    int i = 0;
    while (i <= m) {
        if (is_strict[i]) {
            xh[i] = ++prev;
            ++i;
        } else {
            ensure(i + 1 <= m && !is_strict[i + 1], "hat_decompose: odd gap between strict points");
            xh[i] = xh[i + 1] = ++prev;
            i += 2;
        }
    }
    Seq e = sub(x, xh);
    ensure(is_x(xh) && is_e(e) && frak_s(xh) == strict, "hat_decompose invariant failed");
    return {xh, e};
}

std::vector<Seq> enumerate_space(Kind k, int m, int n) {
    if (m < 0 || n < 0) throw DomainError("enumerate_space: m and n must be nonnegative");
    if (m > kMaxLength || n > kMaxLength) throw ResourceError("enumerate_space: m or n exceeds 64");
    if ((k == Kind::XT || k == Kind::YT) && (m < 2 || m % 2 != 0))
        throw DomainError("enumerate_space: tilde spaces need even m >= 2");

    const Seq base = base_of(k, m);
    auto lower = [k](const Seq& s, int i) {
        int v = 0;
        switch (k) {
            case Kind::Z: return i == 0 ? 0 : s[i - 1] + 1;
            case Kind::E: return i == 0 ? 0 : s[i - 1];
            case Kind::X:
            case Kind::XT:
                v = x_lower(s, i, k == Kind::XT);
                return v;
            case Kind::Y:
            case Kind::YT:
                if (i >= 1) v = std::max(v, s[i - 1]);
                if (i >= 2) v = std::max(v, s[i - 2] + 2);
                if (k == Kind::YT && i == 1) v = std::max(v, 1);
                return v;
        }
        return v;
    };

    Seq cur(m + 1), scratch(m + 1);
    // Cost of the pointwise-smallest completion of cur[0..i-1].
    auto min_completion = [&](int i) {
        for (int j = 0; j < i; ++j) scratch[j] = cur[j];
        int cost = 0;
        for (int j = i; j <= m; ++j) {
            scratch[j] = lower(scratch, j);
            cost += scratch[j] - base[j];
        }
        return cost;
    };

    std::vector<Seq> out;
    std::function<void(int, int)> go = [&](int i, int remaining) {
        if (i == m + 1) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        int lo = lower(cur, i);
        int hi = base[i] + remaining;
        if (k == Kind::XT && i == 0) hi = 0;
        for (int v = lo; v <= hi; ++v) {
            cur[i] = v;
            int rest = remaining - (v - base[i]);
            if (rest < 0) break;
            if (min_completion(i + 1) > rest) break;
            go(i + 1, rest);
        }
    };
    go(0, n);
    return out;
}

std::vector<SeqPair> symmetric_decompositions(const Seq& y) {
    require_kind(Kind::Y, y, "symmetric_decompositions");
    int m = m_of(y);
    check_m(m);
    Seq x(m + 1);
    std::vector<SeqPair> out;
    std::function<void(int)> go = [&](int i) {
        if (i == m + 1) {
            Seq e(m + 1);
            for (int j = 0; j <= m; ++j) e[j] = y[j] - 2 * x[j];
            Seq ex = add(e, x);
            if (is_x(ex) && frak_s(ex) == frak_s(x) && member_s(y, x, ex)) out.emplace_back(x, e);
            return;
        }
        int lo = x_lower(x, i, false);
        for (int v = lo; 2 * v <= y[i]; ++v) {
            // e = y - 2x must stay nondecreasing
            if (i >= 1 && y[i] - 2 * v < y[i - 1] - 2 * x[i - 1]) continue;
            x[i] = v;
            go(i + 1);
        }
    };
    go(0);
    return out;
}

std::string to_string(const Seq& s) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ')';
    return os.str();
}

std::string to_string(const std::vector<Interval>& v) {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << '[' << v[i].lo << ',' << v[i].hi << ']';
    os << '}';
    return os.str();
}

}  // namespace springer
