#include "springer/springer_map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace springer {

const char* class_family_name(ClassFamily f) {
    switch (f) {
        case ClassFamily::A: return "A";
        case ClassFamily::B: return "B";
        case ClassFamily::C: return "C";
        case ClassFamily::D: return "D";
    }
    return "?";
}

ClassFamily parse_class_family(const std::string& s) {
    if (s == "A") return ClassFamily::A;
    if (s == "B") return ClassFamily::B;
    if (s == "C") return ClassFamily::C;
    if (s == "D") return ClassFamily::D;
    throw DomainError("unknown class family '" + s + "'");
}

Family label_family(ClassFamily f) {
    switch (f) {
        case ClassFamily::A: return Family::A;
        case ClassFamily::B:
        case ClassFamily::C: return Family::BC;
        case ClassFamily::D: return Family::D;
    }
    return Family::A;
}

int class_default_m(ClassFamily f, int n) {
    switch (f) {
        case ClassFamily::A: return n;
        case ClassFamily::B:
        case ClassFamily::C: return 2 * n + 2;
        case ClassFamily::D: return 2 * n + 1;
    }
    return 0;
}

namespace {

int m_of(const ClassLabel& c) { return static_cast<int>(c.y.size()) - 1; }

Kind class_kind(ClassFamily f) {
    switch (f) {
        case ClassFamily::A: return Kind::Z;
        case ClassFamily::C: return Kind::YT;
        default: return Kind::Y;
    }
}

int statistic(const ClassLabel& c) {
    switch (c.family) {
        case ClassFamily::A: return rho0(c.y);
        case ClassFamily::C: return tilde_rho_prime(c.y);
        default: return rho_prime(c.y);
    }
}

}  // namespace

void validate(const ClassLabel& c) {
    require_kind(class_kind(c.family), c.y, "class label");
    int m = m_of(c);
    if ((c.family == ClassFamily::B || c.family == ClassFamily::C) && m % 2 != 0)
        throw DomainError("class label: families B and C need even m");
    if (c.family == ClassFamily::D && m % 2 != 1) throw DomainError("class label: family D needs odd m");
    if (statistic(c) != c.n) throw DomainError("class label: statistic differs from n for " + to_string(c));
}

std::vector<ClassLabel> enumerate_classes(ClassFamily f, int n, int m) {
    if (m < 0) m = class_default_m(f, n);
    std::vector<ClassLabel> out;
    for (auto& y : enumerate_space(class_kind(f), m, n)) out.push_back({f, n, y});
    if (f != ClassFamily::A) {
        for (auto& c : out) validate(c);
    }
    return out;
}

std::vector<IrrLabel> tau_fiber(const ClassLabel& c) {
    validate(c);
    const Seq& y = c.y;
    int m = m_of(c);
    Seq z, zp;
    switch (c.family) {
        case ClassFamily::A: return {label_a(y)};
        case ClassFamily::B:
            for (int i = 0; 2 * i <= m; ++i) z.push_back(y[2 * i] - i);
            for (int i = 0; 2 * i + 1 <= m; ++i) zp.push_back(y[2 * i + 1] - i);
            return {label_bc(z, zp)};
        case ClassFamily::C:
            for (int i = 0; 2 * i <= m; ++i) z.push_back(y[2 * i] - i);
            for (int i = 0; 2 * i + 1 <= m; ++i) zp.push_back(y[2 * i + 1] - i - 1);
            return {label_bc(z, zp)};
        case ClassFamily::D: {
            for (int i = 0; 2 * i + 1 <= m; ++i) {
                z.push_back(y[2 * i + 1] - i);
                zp.push_back(y[2 * i] - i);
            }
            IrrLabel l = label_d(z, zp, 0);
            if (!is_degenerate(l)) return {l};
            IrrLabel l1 = l;
            l1.kappa = 1;
            return {l, l1};
        }
    }
    return {};
}

ClassLabel tau(ClassFamily f, const IrrLabel& e, int m) {
    validate(e);
    if (e.family != label_family(f)) throw DomainError("tau: label family does not match class family");
    if (m < 0) m = class_default_m(f, e.n);
    ClassLabel c{f, e.n, Seq(m + 1)};
    switch (f) {
        case ClassFamily::A: c.y = top_at(e, m); break;
        case ClassFamily::B:
        case ClassFamily::C: {
            if (m % 2 != 0) throw DomainError("tau: families B and C need even m");
            int k = m / 2, off = f == ClassFamily::C ? 1 : 0;
            Seq top = top_at(e, k), bot = bottom_at(e, k);
            for (int i = 0; i <= k; ++i) c.y[2 * i] = top[i] + i;
            for (int i = 0; i < k; ++i) c.y[2 * i + 1] = bot[i] + i + off;
            break;
        }
        case ClassFamily::D: {
            if (m % 2 != 1) throw DomainError("tau: family D needs odd m");
            int k = (m + 1) / 2;
            Seq top = top_at(e, k), bot = bottom_at(e, k);
            for (int i = 0; i < k; ++i) {
                c.y[2 * i + 1] = top[i] + i;
                c.y[2 * i] = bot[i] + i;
            }
            break;
        }
    }
    if (!is_kind(class_kind(f), c.y))
        throw DomainError("tau: " + to_string(e) + " lies outside the domain of the class map");
    return c;
}

ClassInvariants class_invariants(const ClassLabel& c) {
    validate(c);
    ClassInvariants inv;
    if (c.family == ClassFamily::A) {
        inv.bbar = beta0(c.y);
        int g = c.n;
        for (size_t j = 0; j < c.y.size(); ++j) g = std::gcd(g, c.y[j] - static_cast<int>(j));
        inv.z = 1;
        inv.ztilde_over_z = std::max(g, 1);
        return inv;
    }
    auto ivs = frak_i(c.y);
    int count = static_cast<int>(ivs.size());
    bool all_single = std::all_of(ivs.begin(), ivs.end(), [](const Interval& v) { return v.size() == 1; });
    switch (c.family) {
        case ClassFamily::B:
            ensure(count >= 1, "class_invariants: empty interval set for even m");
            inv.bbar = beta_prime(c.y);
            inv.z = 1 << (count - 1);
            inv.ztilde_over_z = all_single ? 2 : 1;
            break;
        case ClassFamily::C: {
            bool delta = false;
            for (const auto& v : ivs)
                if (v.size() % 2 == 1 && !v.contains(0)) delta = true;
            int e = count - 1 - (delta ? 1 : 0);
            ensure(e >= 0, "class_invariants: negative exponent for " + to_string(c));
            inv.bbar = tilde_beta_prime(c.y);
            inv.z = 1 << e;
            inv.ztilde_over_z = delta ? 2 : 1;
            break;
        }
        case ClassFamily::D: {
            bool delta = !frak_i_odd(c.y).empty();
            inv.bbar = beta_prime(c.y);
            inv.z = 1 << std::max(count - 1 - (delta ? 1 : 0), 0);
            int uz = 1 << std::max(count - 1, 0);
            inv.uz_over_z = uz / inv.z;
            if (count == 0)
                inv.ztilde_over_z = 2;
            else if (delta)
                inv.ztilde_over_z = all_single ? 4 : 2;
            else {
                ensure(!all_single, "class_invariants: even-size intervals cannot all be singletons");
                inv.ztilde_over_z = 1;
            }
            break;
        }
        default: break;
    }
    return inv;
}

Seq renormalized(const ClassLabel& c) {
    int m = m_of(c);
    Seq base = c.family == ClassFamily::A ? z_base(m) : c.family == ClassFamily::C ? yt_base(m) : y_base(m);
    Seq d = sub(c.y, base);
    auto it = std::find_if(d.begin(), d.end(), [](int v) { return v != 0; });
    return Seq(it, d.end());
}

std::string to_string(const ClassLabel& c) {
    std::ostringstream os;
    os << class_family_name(c.family) << c.n << ' ' << to_string(c.y);
    return os.str();
}

}  // namespace springer
