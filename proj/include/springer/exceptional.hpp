#pragma once

#include <map>
#include <string>
#include <vector>

namespace springer::exceptional {

// One row of a unipotent-class table for an exceptional group: the Springer
// representation, its b, a = z_C, a' = z~_C / z_C, and a witness (J, E1).
struct ExceptionalRow {
    std::string group;
    std::string rho_name;
    int bbar = 0;
    int a = 1;
    int a_prime = 1;
    std::string witness_J;
    std::string witness_E1;
    std::vector<std::string> transcription_flags;
    // Verbatim source fields before curation.
    std::string raw_rho_name, raw_bbar, raw_a, raw_witness;
};

struct GroupTable {
    std::string group;
    int omega_order = 1;
    std::vector<ExceptionalRow> rows;
};

inline constexpr int kSchemaVersion = 1;
const std::vector<std::string>& group_names();  // G2 F4 E6 E7 E8
int expected_rows(const std::string& group);
int omega_order(const std::string& group);  // order of the automorphism group Omega

// Parses the tables compiled into the library.
const std::map<std::string, GroupTable>& load_tables();
// Parses a JSON document with the same schema.
std::map<std::string, GroupTable> parse_tables(const std::string& json_text);

// Matches the curated or the raw name; a miss raises NotFound and more than
// one match raises DomainError.
const ExceptionalRow& lookup(const std::string& group, const std::string& rho_name, int bbar);

enum class Status { Pass, Fail, Ambiguous, Unchecked };
const char* status_name(Status s);

struct RowFinding {
    std::string group;
    std::string rho_name;
    int bbar = 0;
    Status status = Status::Unchecked;
    std::string detail;
};

struct ValidationReport {
    std::vector<std::string> schema_errors;
    std::vector<RowFinding> rows;  // one per row, in table order
    int count(Status s) const;
    bool ok() const;  // no schema errors and no Fail rows
};

ValidationReport validate_tables(const std::map<std::string, GroupTable>& tables);
ValidationReport validate_tables();

}  // namespace springer::exceptional
