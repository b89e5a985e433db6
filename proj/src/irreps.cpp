#include "springer/irreps.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace springer {

const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::BC: return "BC";
        case Family::D: return "D";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "BC" || s == "B" || s == "C") return Family::BC;
    if (s == "D") return Family::D;
    throw DomainError("unknown family '" + s + "'");
}

namespace {

// Rows may be empty (the bottom row at k = 0), so these avoid is_z checks.
bool strictly_increasing(const Seq& z) {
    if (!z.empty() && z[0] < 0) return false;
    for (size_t i = 0; i + 1 < z.size(); ++i)
        if (z[i] >= z[i + 1]) return false;
    return true;
}

int row_rho(const Seq& z) {
    int t = 0;
    for (size_t i = 0; i < z.size(); ++i) t += z[i] - static_cast<int>(i);
    return t;
}

int row_beta(const Seq& z) {
    int m = static_cast<int>(z.size()) - 1, t = 0;
    for (int i = 0; i <= m; ++i) t += (m - i) * (z[i] - i);
    return t;
}

std::int64_t hook_dimension(const Partition& p) {
    int n = partition_size(p);
    std::int64_t num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    std::int64_t den = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            int arm = p[i] - j - 1;
            int leg = 0;
            for (size_t r = i + 1; r < p.size() && p[r] > j; ++r) ++leg;
            den *= arm + leg + 1;
        }
    return num / den;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

int pow2(int e) { return 1 << e; }

}  // namespace

int partition_size(const Partition& p) {
    int t = 0;
    for (int v : p) t += v;
    return t;
}

Partition partition_of(const Seq& z) {
    Partition p;
    for (size_t i = 0; i < z.size(); ++i) {
        int d = z[i] - static_cast<int>(i);
        if (d > 0) p.push_back(d);
    }
    std::reverse(p.begin(), p.end());
    return p;
}

Seq row_of(const Partition& p, int length) {
    if (static_cast<int>(p.size()) > length)
        throw DomainError("row_of: partition has more parts than the row length");
    Seq z(length);
    int pad = length - static_cast<int>(p.size());
    for (int i = 0; i < length; ++i) {
        int part = i < pad ? 0 : p[p.size() - 1 - (i - pad)];
        z[i] = part + i;
    }
    return z;
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> go = [&](int rest, int cap) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(rest, cap); v >= 1; --v) {
            cur.push_back(v);
            go(rest - v, v);
            cur.pop_back();
        }
    };
    go(n, n);
    return out;
}

Seq row_at(const Seq& z, int length) { return row_of(partition_of(z), length); }

int min_k(const IrrLabel& l) {
    int la = static_cast<int>(partition_of(l.z).size());
    int lb = static_cast<int>(partition_of(l.zp).size());
    switch (l.family) {
        case Family::A: return std::max(la, 1) - 1;
        case Family::BC: return std::max({la - 1, lb, 0});
        case Family::D: return std::max(la, lb);
    }
    return 0;
}

Seq top_at(const IrrLabel& l, int k) {
    if (k < min_k(l)) throw DomainError("label " + to_string(l) + " needs k >= " + std::to_string(min_k(l)));
    return row_at(l.z, l.family == Family::D ? k : k + 1);
}

Seq bottom_at(const IrrLabel& l, int k) {
    if (l.family == Family::A) throw DomainError("type A labels have a single row");
    if (k < min_k(l)) throw DomainError("label " + to_string(l) + " needs k >= " + std::to_string(min_k(l)));
    return row_at(l.zp, k);
}

void validate(const IrrLabel& l) {
    auto bad = [&](const std::string& why) { throw DomainError("invalid label " + to_string(l) + ": " + why); };
    if (l.n < 0) bad("negative rank");
    if (l.kappa != 0 && l.kappa != 1) bad("kappa must be 0 or 1");
    switch (l.family) {
        case Family::A:
            if (l.z.empty() || !strictly_increasing(l.z)) bad("row not strictly increasing");
            if (!l.zp.empty()) bad("type A has one row");
            if (row_rho(l.z) != l.n) bad("rho0 differs from n");
            if (l.kappa != 0) bad("kappa only for type D");
            break;
        case Family::BC:
            if (l.z.empty() || !strictly_increasing(l.z) || !strictly_increasing(l.zp)) bad("rows not strictly increasing");
            if (l.z.size() != l.zp.size() + 1) bad("top row must be one longer than bottom row");
            if (row_rho(l.z) + row_rho(l.zp) != l.n) bad("rho0 sum differs from n");
            if (l.kappa != 0) bad("kappa only for type D");
            break;
        case Family::D:
            if (!strictly_increasing(l.z) || !strictly_increasing(l.zp)) bad("rows not strictly increasing");
            if (l.z.size() != l.zp.size()) bad("rows must have equal length");
            if (row_rho(l.z) + row_rho(l.zp) != l.n) bad("rho0 sum differs from n");
            if (row_rho(l.z) < row_rho(l.zp)) bad("top row must carry the larger rho0");
            if (l.kappa != 0 && !(l.z == l.zp && l.n >= 2)) bad("kappa set on a non-degenerate label");
            break;
    }
}

IrrLabel canonicalize(const IrrLabel& in) {
    IrrLabel l = in;
    int k = min_k(l);
    switch (l.family) {
        case Family::A:
            l.z = row_at(l.z, k + 1);
            l.zp.clear();
            l.kappa = 0;
            break;
        case Family::BC:
            l.z = row_at(l.z, k + 1);
            l.zp = row_at(l.zp, k);
            l.kappa = 0;
            break;
        case Family::D: {
            Seq a = row_at(l.z, k), b = row_at(l.zp, k);
            if (std::make_pair(row_rho(a), a) < std::make_pair(row_rho(b), b)) std::swap(a, b);
            l.z = a;
            l.zp = b;
            if (!(a == b && l.n >= 2)) l.kappa = 0;
            break;
        }
    }
    return l;
}

IrrLabel shift(const IrrLabel& l, int t) {
    if (t < 0) throw DomainError("shift: t must be nonnegative");
    IrrLabel r = l;
    r.z = row_at(l.z, static_cast<int>(l.z.size()) + t);
    if (l.family != Family::A) r.zp = row_at(l.zp, static_cast<int>(l.zp.size()) + t);
    return r;
}

IrrLabel label_a(const Seq& z) {
    IrrLabel l{Family::A, strictly_increasing(z) ? row_rho(z) : -1, z, {}, 0};
    validate(l);
    return canonicalize(l);
}

IrrLabel label_bc(const Seq& z, const Seq& zp) {
    IrrLabel l{Family::BC, row_rho(z) + row_rho(zp), z, zp, 0};
    validate(l);
    return canonicalize(l);
}

IrrLabel label_d(const Seq& z, const Seq& zp, int kappa) {
    IrrLabel l{Family::D, row_rho(z) + row_rho(zp), z, zp, 0};
    if (row_rho(z) < row_rho(zp) || (row_rho(z) == row_rho(zp) && z < zp)) std::swap(l.z, l.zp);
    l.kappa = kappa;
    validate(l);
    return canonicalize(l);
}

IrrLabel label_from_partition(const Partition& p) {
    return label_a(row_of(p, std::max<int>(static_cast<int>(p.size()), 1)));
}

IrrLabel label_from_bipartition(Family f, const Partition& top, const Partition& bottom, int kappa) {
    int len = static_cast<int>(std::max(top.size(), bottom.size())) + 1;
    if (f == Family::BC) return label_bc(row_of(top, len), row_of(bottom, len - 1));
    if (f == Family::D) return label_d(row_of(top, len), row_of(bottom, len), kappa);
    throw DomainError("label_from_bipartition: family must be BC or D");
}

bool is_degenerate(const IrrLabel& l) { return l.family == Family::D && l.n >= 2 && l.z == l.zp; }

bool is_dagger(const IrrLabel& l) {
    if (l.family != Family::D) return true;
    return row_rho(l.z) > row_rho(l.zp) || l.z == l.zp;
}

int b_invariant(const IrrLabel& l) {
    validate(l);
    if (l.family == Family::A) return row_beta(l.z);
    return 2 * row_beta(l.z) + 2 * row_beta(l.zp) + row_rho(l.zp);
}

std::int64_t dimension(const IrrLabel& l) {
    validate(l);
    if (l.family == Family::A) return hook_dimension(partition_of(l.z));
    Partition a = partition_of(l.z), b = partition_of(l.zp);
    std::int64_t d = binomial(l.n, partition_size(b)) * hook_dimension(a) * hook_dimension(b);
    if (is_degenerate(l)) d /= 2;
    return d;
}

Seq interleave_bc(const IrrLabel& l, int m) {
    if (l.family != Family::BC) throw DomainError("interleave_bc: needs a BC label");
    if (m < 0 || m % 2 != 0) throw DomainError("interleave_bc: m must be even");
    int k = m / 2;
    Seq top = top_at(l, k), bot = bottom_at(l, k);
    Seq x(m + 1);
    for (int i = 0; i <= k; ++i) x[2 * i] = top[i];
    for (int i = 0; i < k; ++i) x[2 * i + 1] = bot[i];
    return x;
}

Seq interleave_d_prime(const IrrLabel& l, int m) {
    if (l.family != Family::D) throw DomainError("interleave_d_prime: needs a D label");
    if (m < 1 || m % 2 != 1) throw DomainError("interleave_d_prime: m must be odd");
    int k = (m + 1) / 2;
    Seq top = top_at(l, k), bot = bottom_at(l, k);
    Seq x(m + 1);
    for (int i = 0; i < k; ++i) {
        x[2 * i] = bot[i];
        x[2 * i + 1] = top[i];
    }
    return x;
}

Seq interleave_d_tilde(const IrrLabel& l, int m) {
    if (l.family != Family::D) throw DomainError("interleave_d_tilde: needs a D label");
    if (m < 2 || m % 2 != 0) throw DomainError("interleave_d_tilde: m must be even and >= 2");
    int k = m / 2;
    Seq top = top_at(l, k), bot = bottom_at(l, k);
    Seq x(m + 1);
    x[0] = 0;
    for (int i = 1; i <= k; ++i) {
        x[2 * i] = top[i - 1] + 1;
        x[2 * i - 1] = bot[i - 1] + 1;
    }
    return x;
}

IrrLabel zeta_inverse_bc(const Seq& x) {
    require_kind(Kind::X, x, "zeta_inverse_bc");
    int m = static_cast<int>(x.size()) - 1;
    if (m % 2 != 0) throw DomainError("zeta_inverse_bc: m must be even");
    Seq z, zp;
    for (int i = 0; i <= m; ++i) (i % 2 == 0 ? z : zp).push_back(x[i]);
    return label_bc(z, zp);
}

namespace {

std::vector<IrrLabel> with_kappas(const Seq& z, const Seq& zp) {
    IrrLabel l = label_d(z, zp, 0);
    if (!is_degenerate(l)) return {l};
    IrrLabel l1 = l;
    l1.kappa = 1;
    return {l, l1};
}

}  // namespace

std::vector<IrrLabel> zeta_inverse_d_prime(const Seq& x) {
    require_kind(Kind::X, x, "zeta_inverse_d_prime");
    int m = static_cast<int>(x.size()) - 1;
    if (m % 2 != 1) throw DomainError("zeta_inverse_d_prime: m must be odd");
    Seq z, zp;
    for (int i = 0; i <= m; ++i) (i % 2 == 1 ? z : zp).push_back(x[i]);
    return with_kappas(z, zp);
}

std::vector<IrrLabel> zeta_inverse_d_tilde(const Seq& x) {
    require_kind(Kind::XT, x, "zeta_inverse_d_tilde");
    int m = static_cast<int>(x.size()) - 1;
    Seq z, zp;
    for (int i = 1; i <= m; ++i) (i % 2 == 0 ? z : zp).push_back(x[i] - 1);
    return with_kappas(z, zp);
}

bool is_special(const IrrLabel& l) {
    validate(l);
    switch (l.family) {
        case Family::A: return true;
        case Family::BC: return is_x(interleave_bc(l, 2 * min_k(l)));
        case Family::D: return is_x(interleave_d_prime(l, 2 * std::max(min_k(l), 1) - 1));
    }
    return false;
}

Seq zeta(const IrrLabel& l, int m) {
    Seq x;
    switch (l.family) {
        case Family::A: return top_at(l, m);
        case Family::BC: x = interleave_bc(l, m); break;
        case Family::D: x = interleave_d_prime(l, m); break;
    }
    if (!is_x(x)) throw DomainError("zeta: " + to_string(l) + " is not special");
    return x;
}

int f_bc(const Seq& x) { return pow2((static_cast<int>(frak_s(x).size()) - 1) / 2); }

int f_d_prime(const Seq& x) {
    int s = static_cast<int>(frak_s(x).size());
    return pow2(std::max((s - 2) / 2, 0));
}

int f_d_tilde(const Seq& x) {
    int s = static_cast<int>(frak_s(x).size());
    return pow2(std::max((s - 3) / 2, 0));
}

int f_invariant(const IrrLabel& l) {
    if (!is_special(l)) throw DomainError("f_invariant: " + to_string(l) + " is not special");
    switch (l.family) {
        case Family::A: return 1;
        case Family::BC: return f_bc(interleave_bc(l, 2 * min_k(l)));
        case Family::D: return f_d_prime(interleave_d_prime(l, 2 * std::max(min_k(l), 1) - 1));
    }
    return 1;
}

int default_m(Family f, int n) {
    switch (f) {
        case Family::A: return n;
        case Family::BC: return 2 * n + 2;
        case Family::D: return 2 * n + 1;
    }
    return 0;
}

int default_m_tilde(int n) { return 2 * n + 2; }

std::vector<SpecialRep> special_reps(Family f, int n, int m, DParam param) {
    if (n < 0) throw DomainError("special_reps: negative rank");
    bool tilde = f == Family::D && param == DParam::Tilde;
    if (m < 0) m = tilde ? default_m_tilde(n) : default_m(f, n);
    std::vector<SpecialRep> out;
    switch (f) {
        case Family::A:
            for (const auto& z : enumerate_space(Kind::Z, m, n))
                out.push_back({label_a(z), z, beta0(z), 1});
            break;
        case Family::BC:
            if (m % 2 != 0) throw DomainError("special_reps: BC needs even m");
            for (const auto& x : enumerate_space(Kind::X, m, n))
                out.push_back({zeta_inverse_bc(x), x, beta(x), f_bc(x)});
            break;
        case Family::D:
            if (tilde) {
                for (const auto& x : enumerate_space(Kind::XT, m, n))
                    for (const auto& l : zeta_inverse_d_tilde(x)) out.push_back({l, x, tilde_beta(x), f_d_tilde(x)});
            } else {
                if (m % 2 != 1) throw DomainError("special_reps: D needs odd m");
                for (const auto& x : enumerate_space(Kind::X, m, n))
                    for (const auto& l : zeta_inverse_d_prime(x)) out.push_back({l, x, beta(x), f_d_prime(x)});
            }
            break;
    }
    return out;
}

std::vector<IrrLabel> all_irreps(Family f, int n) {
    if (n < 0) throw DomainError("all_irreps: negative rank");
    std::vector<IrrLabel> out;
    if (f == Family::A) {
        for (const auto& p : partitions(n)) out.push_back(label_from_partition(p));
        std::sort(out.begin(), out.end());
        return out;
    }
    std::set<IrrLabel> seen;
    for (int a = 0; a <= n; ++a)
        for (const auto& pa : partitions(a))
            for (const auto& pb : partitions(n - a)) {
                IrrLabel l = label_from_bipartition(f, pa, pb);
                seen.insert(l);
                if (is_degenerate(l)) {
                    l.kappa = 1;
                    seen.insert(l);
                }
            }
    return {seen.begin(), seen.end()};
}

Seq xi(const IrrLabel& l, int m) {
    if (l.family != Family::A) throw DomainError("xi: needs a type A label");
    return sub(top_at(l, m), z_base(m));
}

IrrLabel xi_inverse(const Seq& e) {
    require_kind(Kind::E, e, "xi_inverse");
    return label_a(add(e, z_base(static_cast<int>(e.size()) - 1)));
}

std::string to_string(const IrrLabel& l) {
    std::ostringstream os;
    os << family_name(l.family) << l.n << '[' << to_string(l.z);
    if (l.family != Family::A) os << ';' << to_string(l.zp);
    os << ']';
    if (is_degenerate(l)) os << '^' << l.kappa;
    return os.str();
}

}  // namespace springer
