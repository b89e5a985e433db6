#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "springer/exceptional.hpp"
#include "springer/json_io.hpp"
#include "springer/lemmas.hpp"
#include "springer/oracle.hpp"
#include "springer/theorem.hpp"

using nlohmann::json;
using namespace springer;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void render_csv(const Table& t, std::ostream& os) {
    os << "schema_version";
    for (const auto& h : t.headers) os << ',' << csv_field(h);
    os << '\n';
    for (const auto& r : t.rows) {
        os << kOutputSchemaVersion;
        for (const auto& c : r) os << ',' << csv_field(c);
        os << '\n';
    }
}

void render_table(const Table& t, std::ostream& os) {
    std::vector<size_t> w(t.headers.size());
    for (size_t i = 0; i < w.size(); ++i) w[i] = t.headers[i].size();
    for (const auto& r : t.rows)
        for (size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (size_t i = 0; i < r.size(); ++i) {
            s += r[i];
            if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
        }
        os << s << '\n';
    };
    line(t.headers);
    for (const auto& r : t.rows) line(r);
}

struct Output {
    std::string format = "table";
    std::string path;

    void emit(const json& j, const Table& t) const {
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw UsageError("cannot write " + path);
            os = &file;
        }
        if (format == "json")
            *os << j.dump(2) << '\n';
        else if (format == "csv")
            render_csv(t, *os);
        else
            render_table(t, *os);
    }
};

void add_output(CLI::App* sub, Output& out) {
    sub->add_option("--format", out.format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}))
        ->capture_default_str();
    sub->add_option("-o,--output", out.path, "write to this file instead of stdout");
}

std::string seq_str(const Seq& s) { return to_string(s); }

json envelope(const std::string& command) { return {{"schema_version", kOutputSchemaVersion}, {"command", command}}; }

int enforce_floor(ClassFamily f, int n) {
    if (n < rank_floor(f))
        throw UsageError(std::string("rank ") + std::to_string(n) + " is below the floor " +
                         std::to_string(rank_floor(f)) + " for family " + class_family_name(f));
    return n;
}

// ---- subcommands ------------------------------------------------------------

int cmd_special_reps(const std::string& family, int n, int m, bool tilde, const Output& out) {
    Family f = parse_family(family);
    DParam param = tilde ? DParam::Tilde : DParam::Prime;
    if (tilde && f != Family::D) throw UsageError("--tilde applies to family D only");
    if (m < 0) m = tilde ? default_m_tilde(n) : default_m(f, n);
    auto reps = special_reps(f, n, m, param);
    json j = envelope("special-reps");
    j["family"] = family_name(f);
    j["n"] = n;
    j["m"] = m;
    j["reps"] = json::array();
    Table t{{"label", "x", "b", "f"}, {}};
    for (const auto& s : reps) {
        j["reps"].push_back(to_json(s));
        t.rows.push_back({to_string(s.label), seq_str(s.x), std::to_string(s.b), std::to_string(s.f)});
    }
    out.emit(j, t);
    return 0;
}

int cmd_springer(const std::string& family, int n, int m, const Output& out) {
    ClassFamily f = parse_class_family(family);
    enforce_floor(f, n);
    if (m < 0) m = class_default_m(f, n);
    json j = envelope("springer");
    j["family"] = class_family_name(f);
    j["n"] = n;
    j["m"] = m;
    j["classes"] = json::array();
    Table t{{"y", "bbar", "z", "ztilde/z", "labels"}, {}};
    if (f == ClassFamily::D) t.headers.insert(t.headers.begin() + 4, "uz/z");
    for (const auto& c : enumerate_classes(f, n, m)) {
        auto inv = class_invariants(c);
        auto fiber = tau_fiber(c);
        json labels = json::array();
        std::string names;
        for (const auto& l : fiber) {
            labels.push_back(to_json(l));
            names += (names.empty() ? "" : " ") + to_string(l);
        }
        json row = to_json(c);
        row["bbar"] = inv.bbar;
        row["z"] = inv.z;
        row["ztilde_over_z"] = inv.ztilde_over_z;
        if (f == ClassFamily::D) row["uz_over_z"] = inv.uz_over_z;
        row["labels"] = labels;
        j["classes"].push_back(row);
        std::vector<std::string> r{seq_str(c.y), std::to_string(inv.bbar), std::to_string(inv.z),
                                   std::to_string(inv.ztilde_over_z)};
        if (f == ClassFamily::D) r.push_back(std::to_string(inv.uz_over_z));
        r.push_back(names);
        t.rows.push_back(r);
    }
    out.emit(j, t);
    return 0;
}

json read_spec(const std::string& spec) {
    std::string text = spec;
    if (!spec.empty() && spec[0] == '@') {
        std::ifstream in(spec.substr(1));
        if (!in) throw UsageError("cannot read " + spec.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw UsageError(std::string("embedding spec is not valid JSON: ") + e.what());
    }
}

int cmd_j(const std::string& spec, bool with_oracle, const Output& out) {
    json s = read_spec(spec);
    Embedding e;
    std::vector<IrrLabel> factors;
    try {
        e = embedding_from_json(s);
        for (const auto& f : s.at("factors")) factors.push_back(label_from_json(f));
    } catch (const json::exception& ex) {
        throw UsageError(std::string("embedding spec: ") + ex.what());
    }
    JResult r = j_induce(e, factors);
    json j = envelope("j");
    j["embedding"] = to_json(e);
    j["factors"] = json::array();
    for (const auto& f : factors) j["factors"].push_back(to_json(f));
    j["result"] = to_json(r.label);
    j["b"] = b_invariant(r.label);
    j["kappa_by_convention"] = r.kappa_by_convention;
    Table t{{"embedding", "result", "b", "kappa_by_convention"},
            {{to_string(e), to_string(r.label), std::to_string(b_invariant(r.label)), r.kappa_by_convention ? "yes" : "no"}}};
    if (with_oracle) {
        auto o = oracle::j_oracle(e, factors);
        IrrLabel a = o.label, b = r.label;
        if (r.kappa_by_convention) a.kappa = b.kappa = 0;
        j["oracle"] = {{"result", to_json(o.label)}, {"b", o.b}, {"multiplicity", o.multiplicity}, {"agrees", a == b}};
        t.headers.insert(t.headers.end(), {"oracle", "multiplicity", "agrees"});
        t.rows[0].insert(t.rows[0].end(), {to_string(o.label), std::to_string(o.multiplicity), a == b ? "yes" : "no"});
        if (!(a == b) || o.multiplicity != 1) {
            out.emit(j, t);
            return 1;
        }
    }
    out.emit(j, t);
    return 0;
}

std::string witness_str(const Witness& w) {
    std::string s = "(" + w.J.describe() + ", ";
    for (size_t i = 0; i < w.factors.size(); ++i) s += (i ? " x " : "") + to_string(w.factors[i]);
    return s + ")";
}

int cmd_verify(const std::string& family, int n, bool serial, int m_extra, const Output& out) {
    ClassFamily f = parse_class_family(family);
    enforce_floor(f, n);
    auto rep = serial ? verify_serial(f, n, m_extra) : verify(f, n, {true, m_extra});
    Table t{{"rho_C", "bbar", "a x a'", "(J,E1)", "ok"}, {}};
    for (const auto& r : rep.records)
        t.rows.push_back({to_string(r.e), std::to_string(r.bbar),
                          std::to_string(r.z) + "x" + std::to_string(r.ztilde_over_z), witness_str(r.fa_witness),
                          r.ok() ? "yes" : "NO"});
    json j = to_json(rep);
    j["command"] = "verify";
    out.emit(j, t);
    if (out.format == "table") {
        std::ostream& os = std::cout;
        if (out.path.empty())
            os << "a=" << rep.a_ok << " b1=" << rep.b1_ok << " b2=" << rep.b2_ok << " b3=" << rep.b3_ok
               << " replay=" << rep.replay_ok << (rep.ok() ? "  PASS" : "  FAIL") << '\n';
    }
    return rep.ok() ? 0 : 1;
}

int emit_lines(const std::string& command, const std::vector<CheckLine>& lines, const Output& out) {
    json j = envelope(command);
    j["lines"] = json::array();
    Table t{{"check", "inputs", "failures"}, {}};
    for (const auto& l : lines) {
        j["lines"].push_back(to_json(l));
        t.rows.push_back({l.name, std::to_string(l.checks), std::to_string(l.failures)});
        for (const auto& note : l.notes) t.rows.push_back({"  " + note, "", ""});
    }
    j["ok"] = all_ok(lines);
    out.emit(j, t);
    return all_ok(lines) ? 0 : 1;
}

int cmd_oracle_table(const std::string& spec, const Output& out) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw UsageError("--table expects FAMILY:RANK, e.g. BC:3");
    int n = 0;
    try {
        n = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
        throw UsageError("--table expects FAMILY:RANK, e.g. BC:3");
    }
    auto t = oracle::character_table(parse_family(spec.substr(0, colon)), n);
    Table tab{{"irrep"}, {}};
    for (const auto& c : t->classes) tab.headers.push_back(oracle::to_string(c.key));
    for (size_t i = 0; i < t->irreps.size(); ++i) {
        std::vector<std::string> row{to_string(t->irreps[i])};
        for (auto v : t->values[i]) row.push_back(std::to_string(v));
        tab.rows.push_back(row);
    }
    out.emit(to_json(*t), tab);
    return 0;
}

int cmd_oracle_check(int max_a, int max_bd, int max_j, const Output& out) {
    if (max_a > oracle::kMaxRankA || max_bd > oracle::kMaxRankBD || max_j > oracle::kMaxRankBD)
        throw UsageError("oracle ranks are bounded by A <= 7 and BC/D <= 5");
    return emit_lines("oracle-check", oracle::oracle_check(max_a, max_bd, max_j).lines, out);
}

int cmd_lemmas(int max_m, int max_n, std::uint64_t seed, int samples, int random_m, const Output& out) {
    auto lines = run_lemmas(max_m, max_n).lines;
    if (samples > 0) {
        auto extra = run_random_lemmas(random_m, samples, seed).lines;
        lines.insert(lines.end(), extra.begin(), extra.end());
    }
    return emit_lines("lemmas", lines, out);
}

int cmd_exceptional(const std::string& group, const std::string& rho, int bbar, bool validate_only, const Output& out) {
    using namespace springer::exceptional;
    if (validate_only) {
        auto rep = validate_tables();
        json j = envelope("exceptional");
        j["schema_errors"] = rep.schema_errors;
        j["findings"] = json::array();
        Table t{{"group", "rho_C", "bbar", "status", "detail"}, {}};
        for (const auto& e : rep.schema_errors) t.rows.push_back({"schema", "", "", "FAIL", e});
        for (const auto& f : rep.rows) {
            if (!group.empty() && f.group != group) continue;
            j["findings"].push_back(to_json(f));
            t.rows.push_back({f.group, f.rho_name, std::to_string(f.bbar), status_name(f.status), f.detail});
        }
        j["ok"] = rep.ok();
        out.emit(j, t);
        return rep.ok() ? 0 : 1;
    }
    const auto& tables = load_tables();
    std::vector<const ExceptionalRow*> rows;
    if (!rho.empty()) {
        if (group.empty() || bbar < 0) throw UsageError("--rho needs --group and --bbar");
        rows.push_back(&lookup(group, rho, bbar));
    } else {
        for (const auto& g : group_names()) {
            if (!group.empty() && g != group) continue;
            for (const auto& r : tables.at(g).rows) rows.push_back(&r);
        }
        if (rows.empty()) throw UsageError("unknown group '" + group + "'");
    }
    json j = envelope("exceptional");
    j["rows"] = json::array();
    Table t{{"rho_C", "bbar", "a x a'", "(J,E1)"}, {}};
    for (const auto* r : rows) {
        j["rows"].push_back(to_json(*r));
        std::string a = omega_order(r->group) == 1 ? std::to_string(r->a)
                                                   : std::to_string(r->a) + "x" + std::to_string(r->a_prime);
        t.rows.push_back({r->rho_name, std::to_string(r->bbar), a, "(" + r->witness_J + "," + r->witness_E1 + ")"});
    }
    out.emit(j, t);
    return 0;
}

void configure_threads() {
#ifdef _OPENMP
    if (const char* env = std::getenv("SPRINGER_THREADS")) {
        int k = std::atoi(env);
        if (k > 0) omp_set_num_threads(k);
    }
#endif
}

}  // namespace

int main(int argc, char** argv) {
    configure_threads();
    CLI::App app{"Springer correspondence and component groups via j-induction"};
    app.require_subcommand(1);

    std::string family, spec, group, rho, table_spec;
    int rank = 0, m = -1, m_extra = 0, bbar = -1;
    int max_a = 6, max_bd = 5, max_j = 4, max_m = 8, max_n = 8, samples = 0, random_m = 20;
    std::uint64_t seed = 1;
    bool tilde = false, serial = false, with_oracle = false, validate_only = false;
    Output out;

    auto* sr = app.add_subcommand("special-reps", "list special representations with (label, x, b, f)");
    sr->add_option("--family", family, "A, B, C, BC or D")->required();
    sr->add_option("--rank", rank, "rank n")->required()->check(CLI::Range(0, kMaxLength));
    sr->add_option("--m", m, "sequence length minus one (default per family)");
    sr->add_flag("--tilde", tilde, "family D: parametrize by the even-length interleaving");
    add_output(sr, out);

    auto* sp = app.add_subcommand("springer", "list unipotent classes with (y, bbar, z, ztilde/z) and labels");
    sp->add_option("--family", family, "A, B, C or D")->required();
    sp->add_option("--rank", rank, "rank n")->required()->check(CLI::Range(0, kMaxLength));
    sp->add_option("--m", m, "sequence length minus one (default per family)");
    add_output(sp, out);

    auto* jj = app.add_subcommand("j", "one j-induction from a JSON embedding spec");
    jj->add_option("--spec", spec, "JSON {kind, r, p, q, lambda, factors} or @file")->required();
    jj->add_flag("--oracle", with_oracle, "cross-check against the character oracle");
    add_output(jj, out);

    auto* vf = app.add_subcommand("verify", "check the class side against the j-induction side");
    vf->add_option("--family", family, "A, B, C or D")->required();
    vf->add_option("--rank", rank, "rank n")->required()->check(CLI::Range(0, kMaxLength));
    vf->add_flag("--serial", serial, "use the serial reference path");
    vf->add_option("--m-extra", m_extra, "add this even amount to every default m")->check(CLI::Range(0, 16));
    add_output(vf, out);

    auto* oc = app.add_subcommand("oracle-check", "compare b and j with brute-force character theory");
    oc->add_option("--max-a", max_a, "largest S_n rank")->capture_default_str();
    oc->add_option("--max-bd", max_bd, "largest W_n / W'_n rank for tables and b")->capture_default_str();
    oc->add_option("--max-j", max_j, "largest W_n / W'_n rank for j")->capture_default_str();
    oc->add_option("--table", table_spec, "export one character table instead, as FAMILY:RANK");
    add_output(oc, out);

    auto* ex = app.add_subcommand("exceptional", "query or validate the exceptional tables");
    ex->add_option("--group", group, "G2, F4, E6, E7 or E8");
    ex->add_option("--rho", rho, "representation name");
    ex->add_option("--bbar", bbar, "b of the representation");
    ex->add_flag("--validate", validate_only, "run the table validation");
    add_output(ex, out);

    auto* lm = app.add_subcommand("lemmas", "structural properties of the sequence spaces");
    lm->add_option("--max-m", max_m, "largest m")->capture_default_str()->check(CLI::Range(1, 12));
    lm->add_option("--max-n", max_n, "largest statistic")->capture_default_str()->check(CLI::Range(0, 12));
    lm->add_option("--seed", seed, "seed for the randomized suite")->capture_default_str();
    lm->add_option("--samples", samples, "random samples (0 disables)")->capture_default_str();
    lm->add_option("--random-m", random_m, "m for random samples")->capture_default_str()->check(CLI::Range(1, kMaxLength));
    add_output(lm, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*sr) return cmd_special_reps(family, rank, m, tilde, out);
        if (*sp) return cmd_springer(family, rank, m, out);
        if (*jj) return cmd_j(spec, with_oracle, out);
        if (*vf) return cmd_verify(family, rank, serial, m_extra, out);
        if (*oc) return table_spec.empty() ? cmd_oracle_check(max_a, max_bd, max_j, out) : cmd_oracle_table(table_spec, out);
        if (*ex) return cmd_exceptional(group, rho, bbar, validate_only, out);
        if (*lm) return cmd_lemmas(max_m, max_n, seed, samples, random_m, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const NotFound& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnsupportedEmbedding& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
