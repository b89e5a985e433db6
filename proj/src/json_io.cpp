#include "springer/json_io.hpp"

namespace springer {

using nlohmann::json;

json to_json(const IrrLabel& l) {
    json j{{"family", family_name(l.family)}, {"n", l.n}, {"name", to_string(l)}, {"z", l.z}};
    if (l.family == Family::A) {
        j["partition"] = partition_of(l.z);
        return j;
    }
    j["zp"] = l.zp;
    j["top"] = partition_of(l.z);
    j["bottom"] = partition_of(l.zp);
    if (l.family == Family::D) j["kappa"] = l.kappa;
    return j;
}

IrrLabel label_from_json(const json& j) {
    Family f = parse_family(j.at("family").get<std::string>());
    int kappa = j.value("kappa", 0);
    if (j.contains("z")) {
        Seq z = j.at("z").get<Seq>();
        if (f == Family::A) return label_a(z);
        Seq zp = j.at("zp").get<Seq>();
        return f == Family::BC ? label_bc(z, zp) : label_d(z, zp, kappa);
    }
    if (f == Family::A) return label_from_partition(j.value("partition", Partition{}));
    return label_from_bipartition(f, j.value("top", Partition{}), j.value("bottom", Partition{}), kappa);
}

json to_json(const Embedding& e) {
    return {{"kind", embedding_kind_name(e.kind)}, {"r", e.r}, {"p", e.p}, {"q", e.q}, {"lambda", e.lambda}};
}

Embedding embedding_from_json(const json& j) {
    Embedding e;
    e.kind = parse_embedding_kind(j.at("kind").get<std::string>());
    e.r = j.value("r", 0);
    e.p = j.value("p", 0);
    e.q = j.value("q", 0);
    e.lambda = j.value("lambda", 0);
    validate(e);
    return e;
}

json to_json(const SpecialRep& s) { return {{"label", to_json(s.label)}, {"x", s.x}, {"b", s.b}, {"f", s.f}}; }

json to_json(const ClassLabel& c) {
    return {{"family", class_family_name(c.family)}, {"n", c.n}, {"y", c.y}, {"renormalized", renormalized(c)}};
}

json to_json(const ParahoricSpec& p) {
    return {{"family", class_family_name(p.family)}, {"r", p.r},       {"p", p.p},
            {"q", p.q},                              {"lambda", p.lambda}, {"d", p.d},
            {"maximal", p.maximal},                  {"name", p.describe()}};
}

json to_json(const Witness& w) {
    json fs = json::array();
    for (const auto& l : w.factors) fs.push_back(to_json(l));
    return {{"J", to_json(w.J)}, {"factors", fs}, {"f", w.f}, {"order", w.order}, {"rule", w.rule}};
}

json to_json(const VerifyRecord& r) {
    return {{"E", to_json(r.e)},
            {"class", to_json(r.cls)},
            {"b_E", r.b_e},
            {"bbar", r.bbar},
            {"fa", r.fa},
            {"z", r.z},
            {"fc", r.fc},
            {"ztilde_over_z", r.ztilde_over_z},
            {"uz_over_z", r.uz_over_z},
            {"fa_witness", to_json(r.fa_witness)},
            {"fc_witness", to_json(r.fc_witness)},
            {"b1", r.b1},
            {"b2", r.b2},
            {"b3", r.b3},
            {"replay_ok", r.replay_ok},
            {"fa_le_z", r.fa_le_z},
            {"fc_divides_omega", r.fc_divides_omega}};
}

json to_json(const VerificationReport& r) {
    json recs = json::array(), missing = json::array(), extra = json::array();
    for (const auto& x : r.records) recs.push_back(to_json(x));
    for (const auto& x : r.missing_from_bar_s) missing.push_back(to_json(x));
    for (const auto& x : r.extra_in_bar_s) extra.push_back(to_json(x));
    return {{"schema_version", kOutputSchemaVersion},
            {"family", class_family_name(r.family)},
            {"n", r.n},
            {"m", r.m},
            {"a", r.a_ok},
            {"b1", r.b1_ok},
            {"b2", r.b2_ok},
            {"b3", r.b3_ok},
            {"replay", r.replay_ok},
            {"ok", r.ok()},
            {"kappa_convention_used", r.kappa_convention_used},
            {"missing_from_bar_s", missing},
            {"extra_in_bar_s", extra},
            {"records", recs}};
}

json to_json(const CheckLine& l) {
    return {{"name", l.name}, {"checks", l.checks}, {"failures", l.failures}, {"ok", l.ok()}, {"notes", l.notes}};
}

json to_json(const exceptional::ExceptionalRow& r) {
    return {{"group", r.group},
            {"rho_name", r.rho_name},
            {"bbar", r.bbar},
            {"a", r.a},
            {"a_prime", r.a_prime},
            {"witness_J", r.witness_J},
            {"witness_E1", r.witness_E1},
            {"transcription_flags", r.transcription_flags}};
}

json to_json(const exceptional::RowFinding& f) {
    return {{"group", f.group},
            {"rho_name", f.rho_name},
            {"bbar", f.bbar},
            {"status", exceptional::status_name(f.status)},
            {"detail", f.detail}};
}

json to_json(const oracle::CharacterTable& t) {
    json classes = json::array(), irreps = json::array();
    for (const auto& c : t.classes)
        classes.push_back({{"key", oracle::to_string(c.key)}, {"pos", c.key.pos}, {"neg", c.key.neg},
                           {"half", c.key.half}, {"size", c.size}});
    for (size_t i = 0; i < t.irreps.size(); ++i)
        irreps.push_back({{"label", to_json(t.irreps[i])}, {"values", t.values[i]}});
    return {{"schema_version", kOutputSchemaVersion},
            {"family", family_name(t.family)},
            {"n", t.n},
            {"order", t.order},
            {"reflection_class", t.reflection_class},
            {"classes", classes},
            {"irreps", irreps}};
}

}  // namespace springer
