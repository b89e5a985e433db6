#include "springer/oracle.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

#include "springer/errors.hpp"

namespace springer::oracle {

namespace {

using i64 = std::int64_t;

i64 factorial(int n) {
    i64 r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

i64 exact_div(i64 a, i64 b, const char* what) {
    if (b == 0 || a % b != 0) throw OracleConsistencyError(std::string(what) + ": inexact division");
    return a / b;
}

int max_rank(Family f) { return f == Family::A ? kMaxRankA : kMaxRankBD; }

void check_rank(Family f, int n) {
    if (n < 0) throw DomainError("oracle: negative rank");
    if (n > max_rank(f))
        throw ResourceError(std::string("oracle: rank ") + std::to_string(n) + " exceeds the bound " +
                            std::to_string(max_rank(f)) + " for family " + family_name(f));
}

// ---- Murnaghan-Nakayama on beta-sets -------------------------------------

std::vector<int> beta_set(const Partition& p) {
    int l = static_cast<int>(p.size());
    std::vector<int> b(l);
    for (int i = 0; i < l; ++i) b[i] = p[i] + (l - 1 - i);
    std::sort(b.begin(), b.end());
    return b;
}

// Calls fn(new_set, sign) for every removable r-hook.
template <class Fn>
void remove_hooks(const std::vector<int>& b, int r, Fn&& fn) {
    for (size_t j = 0; j < b.size(); ++j) {
        int x = b[j], y = x - r;
        if (y < 0 || std::binary_search(b.begin(), b.end(), y)) continue;
        int between = 0;
        for (int v : b)
            if (v > y && v < x) ++between;
        std::vector<int> nb = b;
        nb[j] = y;
        std::sort(nb.begin(), nb.end());
        fn(nb, between % 2 ? -1 : 1);
    }
}

struct Cycle {
    int len;
    int sign;  // +1 positive, -1 negative
};

i64 mn_b(const std::vector<int>& a, const std::vector<int>& b, const std::vector<Cycle>& cyc, size_t i) {
    if (i == cyc.size()) return 1;
    i64 total = 0;
    remove_hooks(a, cyc[i].len, [&](const std::vector<int>& na, int s) { total += s * mn_b(na, b, cyc, i + 1); });
    remove_hooks(b, cyc[i].len,
                 [&](const std::vector<int>& nb, int s) { total += cyc[i].sign * s * mn_b(a, nb, cyc, i + 1); });
    return total;
}

i64 chi_sym(const Partition& alpha, const Partition& mu) {
    std::vector<Cycle> cyc;
    for (int r : mu) cyc.push_back({r, 1});
    return mn_b(beta_set(alpha), {}, cyc, 0);
}

i64 chi_hyp(const Partition& alpha, const Partition& beta, const Partition& pos, const Partition& neg) {
    std::vector<Cycle> cyc;
    for (int r : pos) cyc.push_back({r, 1});
    for (int r : neg) cyc.push_back({r, -1});
    return mn_b(beta_set(alpha), beta_set(beta), cyc, 0);
}

// ---- classes --------------------------------------------------------------

i64 centralizer(const Partition& p, int weight) {
    std::map<int, int> mult;
    for (int r : p) ++mult[r];
    i64 z = 1;
    for (auto [r, a] : mult) {
        for (int i = 0; i < a; ++i) z *= static_cast<i64>(weight) * r;
        z *= factorial(a);
    }
    return z;
}

bool all_even(const Partition& p) {
    return std::all_of(p.begin(), p.end(), [](int r) { return r % 2 == 0; });
}

std::vector<ConjClass> make_classes(Family f, int n, i64 order) {
    std::vector<ConjClass> out;
    if (f == Family::A) {
        for (const auto& mu : partitions(n)) out.push_back({{mu, {}, -1}, exact_div(order, centralizer(mu, 1), "class size")});
        return out;
    }
    for (int a = n; a >= 0; --a)
        for (const auto& mu : partitions(a))
            for (const auto& nu : partitions(n - a)) {
                i64 size = exact_div(factorial(n) << n, centralizer(mu, 2) * centralizer(nu, 2), "class size");
                if (f == Family::BC) {
                    out.push_back({{mu, nu, -1}, size});
                    continue;
                }
                if (nu.size() % 2 != 0) continue;
                if (nu.empty() && all_even(mu) && n > 0) {
                    out.push_back({{mu, nu, 0}, size / 2});
                    out.push_back({{mu, nu, 1}, size / 2});
                } else {
                    out.push_back({{mu, nu, -1}, size});
                }
            }
    return out;
}

i64 irrep_value(const IrrLabel& l, const ClassKey& k) {
    if (l.family == Family::A) return chi_sym(partition_of(l.z), k.pos);
    Partition a = partition_of(l.z), b = partition_of(l.zp);
    i64 full = chi_hyp(a, b, k.pos, k.neg);
    if (l.family == Family::BC || !is_degenerate(l)) return full;
    if (k.half < 0) return exact_div(full, 2, "degenerate character");
    // Split class with cycle type 2mu: the two constituents differ by
    // +-2^{l(mu)} chi^alpha(mu).
    Partition mu;
    for (int r : k.pos) mu.push_back(r / 2);
    i64 diff = (i64{1} << (mu.size() - 1)) * chi_sym(a, mu);
    i64 half = exact_div(full, 2, "degenerate character");
    return k.half == l.kappa ? half + diff : half - diff;
}

std::mutex g_table_mutex;
std::map<std::pair<Family, int>, std::shared_ptr<const CharacterTable>> g_tables;

std::shared_ptr<const CharacterTable> build_table(Family f, int n) {
    auto t = std::make_shared<CharacterTable>();
    t->family = f;
    t->n = n;
    t->order = f == Family::A ? factorial(n) : f == Family::BC ? (factorial(n) << n) : (factorial(n) << n) / 2;
    if (f == Family::D && n == 0) t->order = 1;
    t->classes = make_classes(f, n, t->order);
    t->irreps = all_irreps(f, n);
    for (const auto& l : t->irreps) {
        std::vector<i64> row;
        for (const auto& c : t->classes) row.push_back(irrep_value(l, c.key));
        t->values.push_back(std::move(row));
    }
    ClassKey refl;
    if (f == Family::A && n >= 2) {
        refl.pos = {2};
        refl.pos.insert(refl.pos.end(), n - 2, 1);
    } else if (f == Family::BC && n >= 1) {
        refl.pos.assign(n - 1, 1);
        refl.neg = {1};
    } else if (f == Family::D && n >= 2) {
        refl.pos.assign(n - 2, 1);
        refl.neg = {1, 1};
    }
    if (!refl.pos.empty() || !refl.neg.empty()) t->reflection_class = t->class_index(refl);
    return t;
}

// ---- symmetric powers of the reflection representation --------------------

// Coefficients up to degree d of 1/det(1 - t w) on the reflection representation.
std::vector<i64> molien_series(Family f, const ClassKey& k, int d) {
    std::vector<i64> s(d + 1, 0);
    s[0] = 1;
    auto divide = [&](int r, int sign) {  // multiply by 1/(1 - sign t^r)
        for (int i = r; i <= d; ++i) s[i] += sign * s[i - r];
    };
    for (int r : k.pos) divide(r, 1);
    for (int r : k.neg) divide(r, -1);
    if (f == Family::A)
        for (int i = d; i >= 1; --i) s[i] -= s[i - 1];  // remove the trivial summand
    return s;
}

int reflections(Family f, int n) {
    switch (f) {
        case Family::A: return n * (n - 1) / 2;
        case Family::BC: return n * n;
        case Family::D: return n * (n - 1);
    }
    return 0;
}

// ---- signed permutations --------------------------------------------------

// img[i] = +-(j+1) when e_i maps to +-e_j.
using SignedPerm = std::vector<int>;

ClassKey class_of(const SignedPerm& w, Family g) {
    int n = static_cast<int>(w.size());
    std::vector<bool> seen(n, false);
    std::vector<int> d(n, 1);
    ClassKey k;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        int len = 0, sign = 1, j = i;
        d[i] = 1;
        while (!seen[j]) {
            seen[j] = true;
            ++len;
            int s = w[j] > 0 ? 1 : -1;
            int next = std::abs(w[j]) - 1;
            sign *= s;
            if (!seen[next]) d[next] = s * d[j];
            j = next;
        }
        (sign > 0 ? k.pos : k.neg).push_back(len);
    }
    std::sort(k.pos.rbegin(), k.pos.rend());
    std::sort(k.neg.rbegin(), k.neg.rend());
    if (g == Family::D && k.neg.empty() && all_even(k.pos) && n > 0) {
        int flips = static_cast<int>(std::count(d.begin(), d.end(), -1));
        k.half = flips % 2;
    }
    return k;
}

std::vector<SignedPerm> group_elements(Family f, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<SignedPerm> out;
    do {
        int masks = f == Family::A ? 1 : 1 << n;
        for (int mask = 0; mask < masks; ++mask) {
            if (f == Family::D && __builtin_popcount(mask) % 2 != 0) continue;
            SignedPerm w(n);
            for (int i = 0; i < n; ++i) w[i] = (mask >> i & 1) ? -(perm[i] + 1) : perm[i] + 1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

struct Block {
    Family family;
    int offset;
    int rank;
    std::vector<int> flipped;  // coordinates (relative) conjugated by a sign change
};

std::vector<Block> blocks_of(const Embedding& e) {
    const int r = e.r, p = e.p, q = e.q;
    switch (e.kind) {
        case EmbeddingKind::A_split: return {{Family::A, 0, r, {}}, {Family::A, r, q, {}}};
        case EmbeddingKind::B_SpWq: return {{Family::A, 0, p, {}}, {Family::BC, p, q, {}}};
        case EmbeddingKind::B_WrWq: return {{Family::BC, 0, r, {}}, {Family::BC, r, q, {}}};
        case EmbeddingKind::B_WrSpWq:
            return {{Family::BC, 0, r, {}}, {Family::A, r, p, {}}, {Family::BC, r + p, q, {}}};
        case EmbeddingKind::C_WrWDq: return {{Family::BC, 0, r, {}}, {Family::D, r, q, {}}};
        case EmbeddingKind::D_SpWDq: return {{Family::A, 0, p, {}}, {Family::D, p, q, {}}};
        case EmbeddingKind::D_triple: {
            std::vector<int> flips;
            if (e.lambda == 1 || e.lambda == 3) flips.push_back(0);
            if ((e.lambda == 2 || e.lambda == 3) && p > 0) flips.push_back(p - 1);
            return {{Family::D, 0, r, {}}, {Family::A, r, p, flips}, {Family::D, r + p, q, {}}};
        }
    }
    return {};
}

}  // namespace

int CharacterTable::class_index(const ClassKey& k) const {
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].key == k) return static_cast<int>(i);
    throw NotFound("character table: no class " + to_string(k));
}

int CharacterTable::irrep_index(const IrrLabel& l) const {
    for (size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i] == l) return static_cast<int>(i);
    throw NotFound("character table: no irreducible " + springer::to_string(l));
}

i64 CharacterTable::value(const IrrLabel& l, const ClassKey& k) const {
    return values[irrep_index(l)][class_index(k)];
}

std::shared_ptr<const CharacterTable> character_table(Family f, int n) {
    check_rank(f, n);
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto& slot = g_tables[{f, n}];
    if (!slot) slot = build_table(f, n);
    return slot;
}

TableCheck check_table(const CharacterTable& t) {
    TableCheck c;
    const size_t nc = t.classes.size(), ni = t.irreps.size();
    c.rows_orthonormal = ni == nc;
    for (size_t i = 0; i < ni && c.rows_orthonormal; ++i)
        for (size_t j = 0; j < ni; ++j) {
            i64 s = 0;
            for (size_t k = 0; k < nc; ++k) s += t.classes[k].size * t.values[i][k] * t.values[j][k];
            if (s != (i == j ? t.order : 0)) {
                c.rows_orthonormal = false;
                break;
            }
        }
    c.columns_orthogonal = ni == nc;
    for (size_t a = 0; a < nc && c.columns_orthogonal; ++a)
        for (size_t b = 0; b < nc; ++b) {
            i64 s = 0;
            for (size_t i = 0; i < ni; ++i) s += t.values[i][a] * t.values[i][b];
            i64 want = a == b ? t.order / t.classes[a].size : 0;
            if (s != want) {
                c.columns_orthogonal = false;
                break;
            }
        }
    ClassKey identity;
    identity.pos.assign(t.n, 1);
    const int id = t.class_index(identity);
    i64 sq = 0;
    c.degrees_match_dimension = true;
    for (size_t i = 0; i < ni; ++i) {
        i64 deg = t.values[i][id];
        sq += deg * deg;
        if (deg != dimension(t.irreps[i])) c.degrees_match_dimension = false;
    }
    i64 total = 0;
    for (const auto& cl : t.classes) total += cl.size;
    c.degrees_square_sum = sq == t.order && total == t.order;
    return c;
}

i64 symmetric_power_multiplicity(const IrrLabel& e, int i) {
    auto t = character_table(e.family, e.n);
    int row = t->irrep_index(e);
    i64 s = 0;
    for (size_t k = 0; k < t->classes.size(); ++k)
        s += t->classes[k].size * t->values[row][k] * molien_series(e.family, t->classes[k].key, i)[i];
    return exact_div(s, t->order, "symmetric power multiplicity");
}

BOracle b_oracle(const IrrLabel& e) {
    auto t = character_table(e.family, e.n);
    int row = t->irrep_index(e);
    int d = reflections(e.family, e.n);
    std::vector<i64> acc(d + 1, 0);
    for (size_t k = 0; k < t->classes.size(); ++k) {
        auto s = molien_series(e.family, t->classes[k].key, d);
        for (int i = 0; i <= d; ++i) acc[i] += t->classes[k].size * t->values[row][k] * s[i];
    }
    for (int i = 0; i <= d; ++i) {
        i64 m = exact_div(acc[i], t->order, "symmetric power multiplicity");
        if (m > 0) return {i, m};
    }
    throw OracleConsistencyError("b_oracle: " + springer::to_string(e) + " occurs in no symmetric power up to the top degree");
}

i64 induction_multiplicity(const IrrLabel& e, const Embedding& emb, const std::vector<IrrLabel>& factors) {
    validate(emb);
    const Family gf = emb.target_family();
    if (e.family != gf || e.n != emb.n()) throw DomainError("induction_multiplicity: target label does not fit the embedding");
    check_rank(gf, emb.n());
    auto blocks = blocks_of(emb);
    if (factors.size() != blocks.size()) throw DomainError("induction_multiplicity: wrong number of factors");
    auto gt = character_table(gf, emb.n());
    const int erow = gt->irrep_index(e);

    std::vector<std::vector<SignedPerm>> elems;
    std::vector<std::vector<i64>> psi;  // factor character per element
    i64 h_order = 1;
    for (size_t b = 0; b < blocks.size(); ++b) {
        const Block& bl = blocks[b];
        if (factors[b].family != bl.family || factors[b].n != bl.rank)
            throw DomainError("induction_multiplicity: factor " + springer::to_string(factors[b]) + " does not fit");
        auto ft = character_table(bl.family, bl.rank);
        const int frow = ft->irrep_index(factors[b]);
        elems.push_back(group_elements(bl.family, bl.rank));
        std::vector<i64> vals;
        for (const auto& w : elems.back()) vals.push_back(ft->values[frow][ft->class_index(class_of(w, bl.family))]);
        psi.push_back(std::move(vals));
        h_order *= static_cast<i64>(elems.back().size());
    }

    const int n = emb.n();
    i64 sum = 0;
    std::vector<size_t> idx(blocks.size(), 0);
    SignedPerm g(n);
    while (true) {
        i64 val = 1;
        for (size_t b = 0; b < blocks.size(); ++b) {
            const Block& bl = blocks[b];
            const SignedPerm& w = elems[b][idx[b]];
            val *= psi[b][idx[b]];
            for (int i = 0; i < bl.rank; ++i) {
                int img = w[i];
                int j = std::abs(img) - 1;
                int s = img > 0 ? 1 : -1;
                // conjugation by sign changes on the flipped coordinates
                bool fi = std::find(bl.flipped.begin(), bl.flipped.end(), i) != bl.flipped.end();
                bool fj = std::find(bl.flipped.begin(), bl.flipped.end(), j) != bl.flipped.end();
                if (fi != fj) s = -s;
                g[bl.offset + i] = s * (bl.offset + j + 1);
            }
        }
        if (val != 0) sum += val * gt->values[erow][gt->class_index(class_of(g, gf))];
        size_t b = 0;
        while (b < blocks.size() && ++idx[b] == elems[b].size()) idx[b++] = 0;
        if (b == blocks.size()) break;
    }
    return exact_div(sum, h_order, "induction multiplicity");
}

JOracle j_oracle(const Embedding& emb, const std::vector<IrrLabel>& factors) {
    validate(emb);
    int b = 0;
    for (const auto& f : factors) b += b_oracle(f).b;
    std::vector<JOracle> hits;
    for (const auto& e : all_irreps(emb.target_family(), emb.n())) {
        if (b_oracle(e).b != b) continue;
        i64 m = induction_multiplicity(e, emb, factors);
        if (m > 0) hits.push_back({e, b, m});
    }
    if (hits.size() != 1) {
        std::ostringstream os;
        os << "j_oracle: " << hits.size() << " constituents with b = " << b << " in " << springer::to_string(emb);
        for (const auto& h : hits) os << ' ' << springer::to_string(h.label);
        throw OracleConsistencyError(os.str());
    }
    return hits.front();
}

bool OracleReport::ok() const { return all_ok(lines); }

namespace {

std::vector<Embedding> embeddings_for(Family f, int n) {
    std::vector<Embedding> out;
    for (int r = 0; r <= n; ++r)
        for (int p = 0; r + p <= n; ++p) {
            int q = n - r - p;
            switch (f) {
                case Family::A:
                    if (p == 0) out.push_back({EmbeddingKind::A_split, r, 0, q});
                    break;
                case Family::BC:
                    if (r == 0) out.push_back({EmbeddingKind::B_SpWq, 0, p, q});
                    if (p == 0) out.push_back({EmbeddingKind::B_WrWq, r, 0, q});
                    out.push_back({EmbeddingKind::B_WrSpWq, r, p, q});
                    if (p == 0) out.push_back({EmbeddingKind::C_WrWDq, r, 0, q});
                    break;
                case Family::D:
                    if (r == 0) out.push_back({EmbeddingKind::D_SpWDq, 0, p, q});
                    for (int lam = 0; lam <= 3; ++lam) {
                        Embedding e{EmbeddingKind::D_triple, r, p, q, lam};
                        try {
                            validate(e);
                            out.push_back(e);
                        } catch (const DomainError&) {
                        }
                    }
                    break;
            }
        }
    return out;
}

std::vector<std::vector<IrrLabel>> factor_tuples(const Embedding& e) {
    std::vector<std::vector<IrrLabel>> out{{}};
    auto fams = e.factor_families();
    auto ranks = e.factor_ranks();
    for (size_t i = 0; i < fams.size(); ++i) {
        std::vector<IrrLabel> choices;
        if (fams[i] == Family::A)
            choices = all_irreps(Family::A, ranks[i]);
        else
            for (const auto& s : special_reps(fams[i], ranks[i])) choices.push_back(s.label);
        std::vector<std::vector<IrrLabel>> next;
        for (const auto& t : out)
            for (const auto& c : choices) {
                if (e.kind == EmbeddingKind::D_SpWDq && i == 1 && is_degenerate(c)) continue;
                auto u = t;
                u.push_back(c);
                next.push_back(std::move(u));
            }
        out = std::move(next);
    }
    return out;
}

void note(CheckLine& line, const std::string& s) {
    ++line.failures;
    if (line.notes.size() < 10) line.notes.push_back(s);
}

}  // namespace

OracleReport oracle_check(int max_a, int max_bd, int max_j) {
    OracleReport rep;
    CheckLine tables{"character tables exact"}, bvals{"b oracle equals b invariant"},
        special_mult{"special reps occur once in their lowest symmetric power"}, jvals{"j oracle equals j induction"},
        jmult{"j constituent has multiplicity one"};
    for (Family f : {Family::A, Family::BC, Family::D}) {
        int top = f == Family::A ? max_a : max_bd;
        for (int n = 0; n <= top; ++n) {
            auto t = character_table(f, n);
            ++tables.checks;
            if (!check_table(*t).ok()) note(tables, std::string(family_name(f)) + std::to_string(n));
            for (const auto& e : t->irreps) {
                ++bvals.checks;
                auto bo = b_oracle(e);
                if (bo.b != b_invariant(e))
                    note(bvals, springer::to_string(e) + " oracle " + std::to_string(bo.b) + " vs " +
                                    std::to_string(b_invariant(e)));
                if (is_special(e)) {
                    ++special_mult.checks;
                    if (bo.multiplicity != 1) note(special_mult, springer::to_string(e));
                }
            }
        }
    }
    for (Family f : {Family::A, Family::BC, Family::D}) {
        int top = f == Family::A ? max_a : max_j;
        for (int n = 0; n <= top; ++n)
            for (const auto& emb : embeddings_for(f, n))
                for (const auto& fs : factor_tuples(emb)) {
                    ++jvals.checks;
                    ++jmult.checks;
                    std::string where = springer::to_string(emb);
                    for (const auto& l : fs) where += " " + springer::to_string(l);
                    try {
                        auto jo = j_oracle(emb, fs);
                        auto ji = j_induce(emb, fs);
                        IrrLabel a = jo.label, b = ji.label;
                        if (ji.kappa_by_convention) a.kappa = b.kappa = 0;
                        if (a != b)
                            note(jvals, where + " -> oracle " + springer::to_string(jo.label) + " vs " +
                                            springer::to_string(ji.label));
                        if (jo.multiplicity != 1) note(jmult, where);
                    } catch (const OracleConsistencyError& ex) {
                        note(jvals, ex.what());
                        note(jmult, where);
                    }
                }
    }
    rep.lines = {tables, bvals, special_mult, jvals, jmult};
    return rep;
}

std::string to_string(const ClassKey& k) {
    std::ostringstream os;
    auto part = [&](const Partition& p) {
        os << '(';
        for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
        os << ')';
    };
    part(k.pos);
    os << ';';
    part(k.neg);
    if (k.half >= 0) os << (k.half == 0 ? "+" : "-");
    return os.str();
}

}  // namespace springer::oracle
