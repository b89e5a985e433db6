#include "springer/theorem.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace springer {

std::string ParahoricSpec::describe() const {
    std::ostringstream os;
    switch (family) {
        case ClassFamily::A: os << "S_" << (d ? (r + p + q) / d : 0) << "^" << d; break;
        case ClassFamily::B: os << "W_" << r << " x S_" << p << " x W_" << q; break;
        case ClassFamily::C: os << "W_" << r << " x W'_" << q; break;
        case ClassFamily::D:
            os << "W'_" << r << " x S_" << p;
            if (lambda) os << "^(" << lambda << ")";
            os << " x W'_" << q;
            break;
    }
    return os.str();
}

int rank_floor(ClassFamily f) {
    switch (f) {
        case ClassFamily::A: return 2;
        case ClassFamily::B: return 2;
        case ClassFamily::C: return 3;
        case ClassFamily::D: return 4;
    }
    return 0;
}

OmegaDescriptor omega(ClassFamily f, int n) {
    OmegaDescriptor o;
    o.family = f;
    o.n = n;
    switch (f) {
        case ClassFamily::A:
            o.order = n;
            for (int d = 1; d <= n; ++d)
                if (n % d == 0) {
                    o.subgroups.push_back("Omega_" + std::to_string(d));
                    o.subgroup_orders.push_back(d);
                }
            break;
        case ClassFamily::B:
        case ClassFamily::C:
            o.order = 2;
            o.subgroups = {"1", "Omega"};
            o.subgroup_orders = {1, 2};
            break;
        case ClassFamily::D:
            o.order = 4;
            if (n % 2 == 0) {
                o.cyclic = false;
                o.subgroups = {"1", "<w1>", "<w2>", "<w1w2>", "Omega"};
                o.subgroup_orders = {1, 2, 2, 2, 4};
            } else {
                o.subgroups = {"1", "<w2>", "Omega"};
                o.subgroup_orders = {1, 2, 4};
            }
            break;
    }
    return o;
}

IrrLabel symbol_key(const IrrLabel& l) {
    IrrLabel k = l;
    k.kappa = 0;
    return k;
}

JResult replay(const Witness& w) {
    const auto& J = w.J;
    switch (J.family) {
        case ClassFamily::A: {
            if (w.factors.size() != 1 || J.d < 1) throw DomainError("replay: type A witness needs one block factor");
            const IrrLabel& block = w.factors[0];
            IrrLabel acc = block;
            for (int i = 2; i <= J.d; ++i)
                acc = j_induce({EmbeddingKind::A_split, (i - 1) * block.n, 0, block.n}, {acc, block}).label;
            return {acc, false};
        }
        case ClassFamily::B:
            if (w.factors.size() == 2) return j_induce({EmbeddingKind::B_WrWq, J.r, 0, J.q}, w.factors);
            return j_induce({EmbeddingKind::B_WrSpWq, J.r, J.p, J.q}, w.factors);
        case ClassFamily::C: return j_induce({EmbeddingKind::C_WrWDq, J.r, 0, J.q}, w.factors);
        case ClassFamily::D: return j_induce({EmbeddingKind::D_triple, J.r, J.p, J.q, J.lambda}, w.factors);
    }
    return {};
}

namespace {

int f_product(const std::vector<IrrLabel>& fs) {
    int f = 1;
    for (const auto& l : fs) f *= f_invariant(l);
    return f;
}

struct SpecialCache {
    // reps[r] for r = 0..n in the family relevant to the factor type.
    std::vector<std::vector<SpecialRep>> bc, d, dt;
    std::vector<std::vector<IrrLabel>> sym;
};

SpecialCache make_cache(ClassFamily f, int n, int m_extra) {
    SpecialCache c;
    c.sym.resize(n + 1);
    for (int p = 0; p <= n; ++p) c.sym[p] = all_irreps(Family::A, p);
    if (f == ClassFamily::B || f == ClassFamily::C) {
        c.bc.resize(n + 1);
        for (int r = 0; r <= n; ++r) c.bc[r] = special_reps(Family::BC, r, default_m(Family::BC, r) + m_extra);
    }
    if (f == ClassFamily::C) {
        c.dt.resize(n + 1);
        for (int q = 0; q <= n; ++q)
            c.dt[q] = special_reps(Family::D, q, default_m_tilde(q) + m_extra, DParam::Tilde);
    }
    if (f == ClassFamily::D) {
        c.d.resize(n + 1);
        for (int r = 0; r <= n; ++r) c.d[r] = special_reps(Family::D, r, default_m(Family::D, r) + m_extra);
    }
    return c;
}

// Whether a special type D factor is stable under the outer automorphism
// (extends to the type B group): every non-degenerate label.
bool extends(const IrrLabel& l) { return !is_degenerate(l); }

std::vector<Witness> maximal_tasks(ClassFamily f, int n, const SpecialCache& c) {
    std::vector<Witness> out;
    switch (f) {
        case ClassFamily::A:
            for (const auto& e : c.sym[n]) out.push_back({{f, 0, n, 0, 0, 1, true}, {e}, 1, 1, "whole group"});
            break;
        case ClassFamily::B:
            for (int r = 0; r <= n; ++r)
                for (const auto& a : c.bc[r])
                    for (const auto& b : c.bc[n - r])
                        out.push_back({{f, r, 0, n - r, 0, 1, true}, {a.label, b.label}, a.f * b.f, 1, "maximal"});
            break;
        case ClassFamily::C:
            for (int r = 0; r <= n; ++r) {
                int q = n - r;
                if (q == 1) continue;
                for (const auto& a : c.bc[r])
                    for (const auto& b : c.dt[q])
                        out.push_back({{f, r, 0, q, 0, 1, true}, {a.label, b.label}, a.f * b.f, 1, "maximal"});
            }
            break;
        case ClassFamily::D:
            for (int r = 0; r <= n; ++r) {
                int q = n - r;
                if (r == 1 || q == 1) continue;
                for (const auto& a : c.d[r])
                    for (const auto& b : c.d[q])
                        out.push_back({{f, r, 0, q, 0, 1, true},
                                       {a.label, label_from_partition({}), b.label},
                                       a.f * b.f, 1, "maximal"});
            }
            break;
    }
    return out;
}

std::vector<Witness> stable_tasks(ClassFamily f, int n, const SpecialCache& c) {
    std::vector<Witness> out;
    switch (f) {
        case ClassFamily::A:
            for (int d = 2; d <= n; ++d) {
                if (n % d != 0) continue;
                for (const auto& e : c.sym[n / d])
                    out.push_back({{f, 0, n, 0, 0, d, false}, {e}, 1, d, "equal blocks, cyclic shift"});
            }
            break;
        case ClassFamily::B:
            for (int r = 0; 2 * r <= n; ++r) {
                int p = n - 2 * r;
                for (const auto& a : c.bc[r])
                    for (const auto& u : c.sym[p])
                        out.push_back({{f, r, p, r, 0, 1, p == 0}, {a.label, u, a.label}, a.f * a.f, 2,
                                       "symmetric W_r x S_p x W_r"});
            }
            break;
        case ClassFamily::C:
            for (int q = 1; q <= n; ++q) {
                int r = n - q;
                for (const auto& a : c.bc[r])
                    for (const auto& b : c.dt[q]) {
                        if (!extends(b.label)) continue;
                        out.push_back({{f, r, 0, q, 0, 1, q != 1}, {a.label, b.label}, a.f * b.f, 2,
                                       "W_r x W'_q, q >= 1, stable factor"});
                    }
            }
            break;
        case ClassFamily::D: {
            const IrrLabel triv{Family::A, 0, {0}, {}, 0};
            for (int r = 1; 2 * r <= n; ++r) {
                int p = n - 2 * r;
                for (const auto& a : c.d[r])
                    for (const auto& u : c.sym[p]) {
                        if (extends(a.label))
                            out.push_back({{f, r, p, r, 0, 1, p == 0}, {a.label, u, a.label}, a.f * a.f, 4,
                                           "symmetric W'_r x S_p x W'_r, extendable factor"});
                        else if (n % 2 == 0)
                            out.push_back({{f, r, p, r, 0, 1, p == 0}, {a.label, u, a.label}, a.f * a.f, 2,
                                           "symmetric W'_r x S_p x W'_r"});
                    }
            }
            if (n % 2 == 0)
                for (int lam = 0; lam <= 3; ++lam)
                    for (const auto& u : c.sym[n])
                        out.push_back({{f, 0, n, 0, lam, 1, false},
                                       {label_from_bipartition(Family::D, {}, {}), u, label_from_bipartition(Family::D, {}, {})},
                                       1, 2, "S_n^(lambda)"});
            for (int r = 1; r < n; ++r) {
                int q = n - r;
                for (const auto& a : c.d[r])
                    for (const auto& b : c.d[q]) {
                        if (!extends(a.label) || !extends(b.label)) continue;
                        out.push_back({{f, r, 0, q, 0, 1, r != 1 && q != 1}, {a.label, triv, b.label}, a.f * b.f,
                                       2, "W'_r x W'_q, both factors extendable"});
                    }
            }
            break;
        }
    }
    return out;
}

// Runs j over every task. The parallel and serial paths must agree exactly.
std::vector<JResult> run_tasks(const std::vector<Witness>& tasks, bool parallel) {
    std::vector<JResult> out(tasks.size());
    if (!parallel) {
        for (size_t i = 0; i < tasks.size(); ++i) out[i] = replay(tasks[i]);
        return out;
    }
    std::string error;
    const long count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 32)
    for (long i = 0; i < count; ++i) {
        try {
            out[i] = replay(tasks[i]);
        } catch (const std::exception& ex) {
#pragma omp critical(springer_task_error)
            if (error.empty()) error = ex.what();
        }
    }
    if (!error.empty()) throw InternalError("j over parahoric tasks failed: " + error);
    return out;
}

}  // namespace

int RepSide::fa(const IrrLabel& e) const {
    auto it = fa_best.find(symbol_key(e));
    return it == fa_best.end() ? 0 : it->second.f;
}

int RepSide::fc(const IrrLabel& e) const {
    auto it = fc_best.find(symbol_key(e));
    return it == fc_best.end() ? 0 : it->second.order;
}

RepSide build_rep_side(ClassFamily f, int n, const RepSideOptions& opt) {
    if (n < 0) throw DomainError("build_rep_side: negative rank");
    if (n > kMaxLength) throw ResourceError("build_rep_side: rank exceeds the cap");
    RepSide rs;
    rs.family = f;
    rs.n = n;
    SpecialCache cache = make_cache(f, n, opt.m_extra);

    rs.maximal_witnesses = maximal_tasks(f, n, cache);
    auto max_out = run_tasks(rs.maximal_witnesses, opt.parallel);
    for (size_t i = 0; i < max_out.size(); ++i) {
        const IrrLabel& out = max_out[i].label;
        rs.maximal_outputs.push_back(out);
        rs.bar_s.insert(out);
        IrrLabel key = symbol_key(out);
        auto it = rs.fa_best.find(key);
        if (it == rs.fa_best.end() || rs.maximal_witnesses[i].f > it->second.f)
            rs.fa_best[key] = rs.maximal_witnesses[i];
    }

    for (const auto& [key, w] : rs.fa_best) {
        Witness base = w;
        base.order = 1;
        base.rule = "trivial subgroup";
        rs.fc_best[key] = base;
    }
    rs.stable_witnesses = stable_tasks(f, n, cache);
    auto st_out = run_tasks(rs.stable_witnesses, opt.parallel);
    for (size_t i = 0; i < st_out.size(); ++i) {
        rs.stable_outputs.push_back(st_out[i].label);
        IrrLabel key = symbol_key(st_out[i].label);
        const Witness& w = rs.stable_witnesses[i];
        auto fa_it = rs.fa_best.find(key);
        if (fa_it == rs.fa_best.end() || w.f != fa_it->second.f) continue;
        auto& best = rs.fc_best[key];
        if (w.order > best.order) best = w;
    }
    return rs;
}

int fa(const IrrLabel& e, ClassFamily f, int n) { return build_rep_side(f, n).fa(e); }

Witness fc(const IrrLabel& e, ClassFamily f, int n) {
    auto rs = build_rep_side(f, n);
    auto it = rs.fc_best.find(symbol_key(e));
    if (it == rs.fc_best.end()) throw DomainError("fc: " + to_string(e) + " is not in the j-image");
    return it->second;
}

std::set<IrrLabel> bar_s(ClassFamily f, int n) {
    if (n < rank_floor(f)) throw DomainError("bar_s: rank below the floor for this family");
    return build_rep_side(f, n).bar_s;
}

namespace {

std::vector<Witness> general_tasks(ClassFamily f, int n) {
    SpecialCache c = make_cache(f, n, 0);
    std::vector<Witness> out;
    switch (f) {
        case ClassFamily::A:
            for (int d = 1; d <= n; ++d) {
                if (n % d != 0) continue;
                for (const auto& e : c.sym[n / d]) out.push_back({{f, 0, n, 0, 0, d, d == 1}, {e}, 1, d, "blocks"});
            }
            break;
        case ClassFamily::B:
            for (int r = 0; r <= n; ++r)
                for (int p = 0; r + p <= n; ++p) {
                    int q = n - r - p;
                    for (const auto& a : c.bc[r])
                        for (const auto& u : c.sym[p])
                            for (const auto& b : c.bc[q]) {
                                std::vector<IrrLabel> fs = p == 0 ? std::vector<IrrLabel>{a.label, b.label}
                                                                  : std::vector<IrrLabel>{a.label, u, b.label};
                                out.push_back({{f, r, p, q, 0, 1, p == 0}, fs, a.f * b.f, 1, "W_r x S_p x W_q"});
                            }
                }
            break;
        case ClassFamily::C:
            for (int r = 0; r <= n; ++r)
                for (const auto& a : c.bc[r])
                    for (const auto& b : c.dt[n - r])
                        out.push_back({{f, r, 0, n - r, 0, 1, n - r != 1}, {a.label, b.label}, a.f * b.f, 1, "W_r x W'_q"});
            break;
        case ClassFamily::D:
            for (int r = 0; r <= n; ++r)
                for (int p = 0; r + p <= n; ++p) {
                    int q = n - r - p;
                    for (int lam = 0; lam <= 3; ++lam) {
                        Embedding e{EmbeddingKind::D_triple, r, p, q, lam};
                        try {
                            validate(e);
                        } catch (const DomainError&) {
                            continue;
                        }
                        for (const auto& a : c.d[r])
                            for (const auto& u : c.sym[p])
                                for (const auto& b : c.d[q])
                                    out.push_back({{f, r, p, q, lam, 1, p == 0 && r != 1 && q != 1},
                                                   {a.label, u, b.label}, a.f * b.f, 1, "W'_r x S_p x W'_q"});
                    }
                }
            break;
    }
    return out;
}

}  // namespace

std::vector<Witness> enumerate_cz(const IrrLabel& e, ClassFamily f, int n, bool maximal_only) {
    IrrLabel key = symbol_key(e);
    std::vector<Witness> out;
    if (maximal_only) {
        SpecialCache c = make_cache(f, n, 0);
        for (const auto& w : maximal_tasks(f, n, c))
            if (symbol_key(replay(w).label) == key) out.push_back(w);
        return out;
    }
    for (const auto& w : general_tasks(f, n))
        if (symbol_key(replay(w).label) == key) out.push_back(w);
    return out;
}

std::vector<Witness> enumerate_cz_sequences(const IrrLabel& e, ClassFamily f, int n) {
    std::vector<Witness> out;
    const IrrLabel triv{Family::A, 0, {0}, {}, 0};
    ClassLabel c = tau(f, e, class_default_m(f, n));
    switch (f) {
        case ClassFamily::A: {
            Seq dev = sub(c.y, z_base(static_cast<int>(c.y.size()) - 1));
            for (int d = 1; d <= n; ++d) {
                if (n % d != 0) continue;
                if (!std::all_of(dev.begin(), dev.end(), [d](int v) { return v % d == 0; })) continue;
                Seq zt = z_base(static_cast<int>(c.y.size()) - 1);
                for (size_t i = 0; i < zt.size(); ++i) zt[i] += dev[i] / d;
                out.push_back({{f, 0, n, 0, 0, d, d == 1}, {label_a(zt)}, 1, d, "blocks"});
            }
            break;
        }
        case ClassFamily::B:
            for (const auto& [x, xt] : sum_decompositions(c.y, false)) {
                IrrLabel a = zeta_inverse_bc(x), b = zeta_inverse_bc(xt);
                out.push_back({{f, rho(x), 0, rho(xt), 0, 1, true}, {a, b}, f_bc(x) * f_bc(xt), 1, "x + x~ = y"});
            }
            break;
        case ClassFamily::C:
            for (const auto& [x, xt] : sum_decompositions(c.y, true)) {
                int q = tilde_rho(xt);
                if (q == 1) continue;
                for (const auto& b : zeta_inverse_d_tilde(xt))
                    out.push_back({{f, rho(x), 0, q, 0, 1, true}, {zeta_inverse_bc(x), b}, f_bc(x) * f_d_tilde(xt), 1,
                                   "x + x~ = y"});
            }
            break;
        case ClassFamily::D:
            for (const auto& [x, xt] : sum_decompositions(c.y, false)) {
                int r = rho(x), q = rho(xt);
                if (r == 1 || q == 1) continue;
                for (const auto& a : zeta_inverse_d_prime(x))
                    for (const auto& b : zeta_inverse_d_prime(xt))
                        out.push_back({{f, r, 0, q, 0, 1, true}, {a, triv, b}, f_d_prime(x) * f_d_prime(xt), 1,
                                       "x + x~ = y"});
            }
            break;
    }
    return out;
}

namespace {

bool witness_replays(const Witness& w, const IrrLabel& e) {
    if (w.factors.empty()) return false;
    try {
        if (symbol_key(replay(w).label) != symbol_key(e)) return false;
        return f_product(w.factors) == w.f;
    } catch (const std::exception&) {
        return false;
    }
}

VerifyRecord check_one(const RepSide& rs, const ClassLabel& cls, const IrrLabel& e, int omega_order) {
    VerifyRecord r;
    r.e = e;
    r.cls = cls;
    ClassInvariants inv = class_invariants(cls);
    r.bbar = inv.bbar;
    r.z = inv.z;
    r.ztilde_over_z = inv.ztilde_over_z;
    r.uz_over_z = inv.uz_over_z;
    r.b_e = b_invariant(e);
    IrrLabel key = symbol_key(e);
    if (auto it = rs.fa_best.find(key); it != rs.fa_best.end()) r.fa_witness = it->second;
    if (auto it = rs.fc_best.find(key); it != rs.fc_best.end()) r.fc_witness = it->second;
    r.fa = rs.fa(e);
    r.fc = rs.fc(e);
    r.b1 = r.bbar == r.b_e;
    r.fa_le_z = r.fa <= r.z;
    r.b2 = r.fa == r.z;
    r.b3 = r.fc == r.ztilde_over_z;
    r.fc_divides_omega = r.fc >= 1 && omega_order % r.fc == 0;
    r.replay_ok = witness_replays(r.fa_witness, e) && witness_replays(r.fc_witness, e);
    return r;
}

VerificationReport verify_impl(ClassFamily f, int n, bool parallel, int m_extra) {
    if (n < rank_floor(f))
        throw DomainError(std::string("verify: rank ") + std::to_string(n) + " is below the floor " +
                          std::to_string(rank_floor(f)) + " for family " + class_family_name(f));
    RepSide rs = build_rep_side(f, n, {parallel, m_extra});
    VerificationReport rep;
    rep.family = f;
    rep.n = n;
    rep.m = class_default_m(f, n) + m_extra;

    std::vector<std::pair<ClassLabel, IrrLabel>> items;
    std::set<IrrLabel> class_side;
    for (const auto& c : enumerate_classes(f, n, rep.m))
        for (const auto& e : tau_fiber(c)) {
            items.emplace_back(c, e);
            class_side.insert(e);
        }

    std::set_difference(class_side.begin(), class_side.end(), rs.bar_s.begin(), rs.bar_s.end(),
                        std::back_inserter(rep.missing_from_bar_s));
    std::set_difference(rs.bar_s.begin(), rs.bar_s.end(), class_side.begin(), class_side.end(),
                        std::back_inserter(rep.extra_in_bar_s));
    rep.a_ok = rep.missing_from_bar_s.empty() && rep.extra_in_bar_s.empty();

    const int order = omega(f, n).order;
    rep.records.resize(items.size());
    const long count = static_cast<long>(items.size());
    if (parallel) {
        std::string error;
#pragma omp parallel for schedule(dynamic, 8)
        for (long i = 0; i < count; ++i) {
            try {
                rep.records[i] = check_one(rs, items[i].first, items[i].second, order);
            } catch (const std::exception& ex) {
#pragma omp critical(springer_verify_error)
                if (error.empty()) error = ex.what();
            }
        }
        if (!error.empty()) throw InternalError("verify failed: " + error);
    } else {
        for (long i = 0; i < count; ++i) rep.records[i] = check_one(rs, items[i].first, items[i].second, order);
    }

    rep.b1_ok = rep.b2_ok = rep.b3_ok = rep.replay_ok = true;
    for (const auto& r : rep.records) {
        rep.b1_ok &= r.b1;
        rep.b2_ok &= r.b2 && r.fa_le_z;
        rep.b3_ok &= r.b3 && r.fc_divides_omega;
        rep.replay_ok &= r.replay_ok;
    }
    if (f == ClassFamily::D)
        for (const auto& w : rs.maximal_witnesses) {
            if (is_degenerate(w.factors.front()) && is_degenerate(w.factors.back())) rep.kappa_convention_used = true;
        }
    return rep;
}

}  // namespace

VerificationReport verify(ClassFamily f, int n, const RepSideOptions& opt) {
    return verify_impl(f, n, opt.parallel, opt.m_extra);
}

VerificationReport verify_serial(ClassFamily f, int n, int m_extra) { return verify_impl(f, n, false, m_extra); }

}  // namespace springer
