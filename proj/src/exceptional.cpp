#include "springer/exceptional.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>
#include <string_view>

#include "json.hpp"
#include "springer/errors.hpp"
#include "springer/irreps.hpp"

namespace springer::exceptional {

extern const std::string_view kEmbeddedTables;

namespace {

using nlohmann::json;

ExceptionalRow row_from_json(const json& j) {
    ExceptionalRow r;
    r.group = j.at("group").get<std::string>();
    r.rho_name = j.at("rho_name").get<std::string>();
    r.bbar = j.at("bbar").get<int>();
    r.a = j.at("a").get<int>();
    r.a_prime = j.at("a_prime").get<int>();
    r.witness_J = j.at("witness_J").get<std::string>();
    r.witness_E1 = j.at("witness_E1").get<std::string>();
    r.transcription_flags = j.at("transcription_flags").get<std::vector<std::string>>();
    if (j.contains("raw")) {
        const auto& raw = j.at("raw");
        r.raw_rho_name = raw.at("rho_name").get<std::string>();
        r.raw_bbar = raw.at("bbar").get<std::string>();
        r.raw_a = raw.at("a").get<std::string>();
        r.raw_witness = raw.at("witness").get<std::string>();
    }
    return r;
}

struct Factor {
    char type;
    int rank;
};

std::vector<Factor> parse_J(const std::string& J) {
    std::vector<Factor> out;
    if (J == "empty") return out;
    static const std::regex tok("([ABCDEFG])'?_([0-9]+)");
    size_t consumed = 0;
    for (auto it = std::sregex_iterator(J.begin(), J.end(), tok); it != std::sregex_iterator(); ++it) {
        if (static_cast<size_t>(it->position()) != consumed) throw DomainError("witness J '" + J + "' does not parse");
        out.push_back({(*it)[1].str()[0], std::stoi((*it)[2].str())});
        consumed += it->length();
    }
    if (consumed != J.size() || out.empty()) throw DomainError("witness J '" + J + "' does not parse");
    return out;
}

std::vector<std::string> split_product(const std::string& s) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (true) {
        size_t x = s.find(" x ", pos);
        out.push_back(s.substr(pos, x == std::string::npos ? std::string::npos : x - pos));
        if (x == std::string::npos) break;
        pos = x + 3;
    }
    return out;
}

bool classical(const Factor& f) { return f.type == 'A' || f.type == 'B' || f.type == 'C' || f.type == 'D'; }

// Weyl group of a classical factor as (family, n).
std::pair<Family, int> weyl_of(const Factor& f) {
    switch (f.type) {
        case 'A': return {Family::A, f.rank + 1};
        case 'B':
        case 'C': return {Family::BC, f.rank};
        default: return {Family::D, f.rank};
    }
}

int reflection_count(Family fam, int n) {
    switch (fam) {
        case Family::A: return n * (n - 1) / 2;
        case Family::BC: return n * n;
        case Family::D: return n * (n - 1);
    }
    return 0;
}

// Special representations of the factor matching one witness entry.
std::vector<SpecialRep> candidates(const Factor& f, const std::string& entry) {
    auto [fam, n] = weyl_of(f);
    std::vector<SpecialRep> all = special_reps(fam, n);
    std::vector<SpecialRep> out;
    for (const auto& s : all) {
        if (entry == "eps") {
            if (s.b == reflection_count(fam, n)) out.push_back(s);
        } else if (entry == "1") {
            if (s.b == 0) out.push_back(s);
        } else if (dimension(s.label) == std::stoll(entry)) {
            out.push_back(s);
        }
    }
    return out;
}

bool numeric(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

RowFinding check_row(const ExceptionalRow& row) {
    RowFinding out{row.group, row.rho_name, row.bbar, Status::Unchecked, ""};
    std::vector<Factor> J;
    try {
        J = parse_J(row.witness_J);
    } catch (const DomainError& e) {
        out.status = Status::Fail;
        out.detail = e.what();
        return out;
    }
    if (J.empty()) {
        bool ok = row.witness_E1 == "1" && row.a == 1;
        out.status = ok ? Status::Pass : Status::Fail;
        out.detail = "empty J, f = 1";
        return out;
    }
    for (const auto& f : J)
        if (!classical(f)) {
            out.detail = "witness has an exceptional factor";
            return out;
        }
    auto entries = split_product(row.witness_E1);
    if (entries.size() == 1 && J.size() > 1) {
        if (entries[0] != "eps" && entries[0] != "1") {
            out.status = Status::Ambiguous;
            out.detail = "one entry for a product of factors";
            return out;
        }
        entries.assign(J.size(), entries[0]);
    }
    if (entries.size() != J.size()) {
        out.status = Status::Fail;
        out.detail = "witness factor count differs from entry count";
        return out;
    }
    for (const auto& e : entries)
        if (e != "eps" && e != "1" && !numeric(e)) {
            out.detail = "entry '" + e + "' is not a degree, 1 or eps";
            return out;
        }

    // Combinations of candidates whose b-values add up to bbar.
    std::vector<std::vector<SpecialRep>> cand;
    for (size_t i = 0; i < J.size(); ++i) cand.push_back(candidates(J[i], entries[i]));
    std::vector<std::vector<const SpecialRep*>> hits;
    std::vector<const SpecialRep*> cur;
    auto go = [&](auto&& self, size_t i, int b) -> void {
        if (i == cand.size()) {
            if (b == row.bbar) hits.push_back(cur);
            return;
        }
        for (const auto& s : cand[i]) {
            if (b + s.b > row.bbar) continue;
            cur.push_back(&s);
            self(self, i + 1, b + s.b);
            cur.pop_back();
        }
    };
    go(go, 0, 0);
    std::ostringstream os;
    if (hits.empty()) {
        out.status = Status::Fail;
        out.detail = "no special factor tuple of the stated degrees has b = bbar";
        return out;
    }
    if (hits.size() > 1) {
        out.status = Status::Ambiguous;
        os << hits.size() << " special factor tuples fit the degrees and bbar";
        out.detail = os.str();
        return out;
    }
    int f = 1;
    for (size_t i = 0; i < hits[0].size(); ++i) {
        f *= hits[0][i]->f;
        os << (i ? " x " : "") << to_string(hits[0][i]->label);
    }
    os << " has f = " << f;
    out.status = f == row.a ? Status::Pass : Status::Fail;
    out.detail = os.str();
    return out;
}

}  // namespace

const std::vector<std::string>& group_names() {
    static const std::vector<std::string> names{"G2", "F4", "E6", "E7", "E8"};
    return names;
}

int expected_rows(const std::string& group) {
    static const std::map<std::string, int> counts{{"G2", 5}, {"F4", 16}, {"E6", 21}, {"E7", 45}, {"E8", 70}};
    auto it = counts.find(group);
    if (it == counts.end()) throw DomainError("unknown exceptional group '" + group + "'");
    return it->second;
}

int omega_order(const std::string& group) {
    static const std::map<std::string, int> orders{{"G2", 1}, {"F4", 1}, {"E6", 3}, {"E7", 2}, {"E8", 1}};
    auto it = orders.find(group);
    if (it == orders.end()) throw DomainError("unknown exceptional group '" + group + "'");
    return it->second;
}

std::map<std::string, GroupTable> parse_tables(const std::string& json_text) {
    json doc = json::parse(json_text);
    if (doc.at("schema_version").get<int>() != kSchemaVersion) throw DomainError("exceptional tables: schema version mismatch");
    std::map<std::string, GroupTable> out;
    for (const auto& [name, g] : doc.at("groups").items()) {
        GroupTable t;
        t.group = name;
        t.omega_order = g.at("omega_order").get<int>();
        for (const auto& r : g.at("rows")) t.rows.push_back(row_from_json(r));
        out[name] = std::move(t);
    }
    return out;
}

const std::map<std::string, GroupTable>& load_tables() {
    static const std::map<std::string, GroupTable> tables = parse_tables(std::string(kEmbeddedTables));
    return tables;
}

const ExceptionalRow& lookup(const std::string& group, const std::string& rho_name, int bbar) {
    const auto& tables = load_tables();
    auto it = tables.find(group);
    if (it == tables.end()) throw NotFound("no exceptional table for '" + group + "'");
    const ExceptionalRow* hit = nullptr;
    int count = 0;
    for (const auto& r : it->second.rows)
        if (r.bbar == bbar && (r.rho_name == rho_name || r.raw_rho_name == rho_name)) {
            hit = &r;
            ++count;
        }
    if (count == 0) throw NotFound(group + ": no row " + rho_name + " with bbar " + std::to_string(bbar));
    if (count > 1)
        throw DomainError(group + ": " + rho_name + " at bbar " + std::to_string(bbar) +
                          " matches several rows; use the disambiguated name");
    return *hit;
}

const char* status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::Ambiguous: return "AMBIGUOUS";
        case Status::Unchecked: return "UNCHECKED";
    }
    return "?";
}

int ValidationReport::count(Status s) const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [s](const RowFinding& r) { return r.status == s; }));
}

bool ValidationReport::ok() const { return schema_errors.empty() && count(Status::Fail) == 0; }

ValidationReport validate_tables(const std::map<std::string, GroupTable>& tables) {
    ValidationReport rep;
    auto err = [&](const std::string& s) { rep.schema_errors.push_back(s); };
    for (const auto& g : group_names()) {
        auto it = tables.find(g);
        if (it == tables.end()) {
            err("missing group " + g);
            continue;
        }
        const GroupTable& t = it->second;
        if (t.omega_order != omega_order(g)) err(g + ": order of Omega is " + std::to_string(t.omega_order));
        if (static_cast<int>(t.rows.size()) != expected_rows(g))
            err(g + ": " + std::to_string(t.rows.size()) + " rows, expected " + std::to_string(expected_rows(g)));
        std::set<std::pair<std::string, int>> seen;
        for (const auto& r : t.rows) {
            std::string where = g + " " + r.rho_name + " @" + std::to_string(r.bbar);
            if (r.group != g) err(where + ": group field is " + r.group);
            if (!seen.insert({r.rho_name, r.bbar}).second) err(where + ": duplicate (rho_name, bbar)");
            if (r.a < 1 || r.a_prime < 1) err(where + ": a and a' must be positive");
            if (t.omega_order % r.a_prime != 0) err(where + ": a' does not divide the order of Omega");
            if (t.omega_order == 1 && r.a_prime != 1) err(where + ": a' must be 1 when Omega is trivial");
            if (r.bbar < 0) err(where + ": negative bbar");
            rep.rows.push_back(check_row(r));
        }
    }
    return rep;
}

ValidationReport validate_tables() { return validate_tables(load_tables()); }

}  // namespace springer::exceptional
