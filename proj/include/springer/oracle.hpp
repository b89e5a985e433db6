#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "springer/check_line.hpp"
#include "springer/irreps.hpp"
#include "springer/jinduction.hpp"

// Brute-force character theory of S_n, W_n and W'_n, independent of the
// sequence combinatorics except for the label codec (partition_of / label_from_*).
namespace springer::oracle {

inline constexpr int kMaxRankA = 7;
inline constexpr int kMaxRankBD = 5;

// A conjugacy class named by the signed cycle type. half is -1 unless the
// class splits in W'_n; then 0 marks the half containing unsigned permutations.
struct ClassKey {
    Partition pos;
    Partition neg;
    int half = -1;
    friend bool operator==(const ClassKey&, const ClassKey&) = default;
    friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

struct ConjClass {
    ClassKey key;
    std::int64_t size = 0;
};

struct CharacterTable {
    Family family = Family::A;
    int n = 0;
    std::int64_t order = 1;
    std::vector<ConjClass> classes;
    std::vector<IrrLabel> irreps;
    std::vector<std::vector<std::int64_t>> values;  // values[irrep][class]
    int reflection_class = -1;                       // class of a simple reflection; -1 if none

    int class_index(const ClassKey& k) const;
    int irrep_index(const IrrLabel& l) const;
    std::int64_t value(const IrrLabel& l, const ClassKey& k) const;
};

// Cached and immutable once built; safe to share across threads.
std::shared_ptr<const CharacterTable> character_table(Family f, int n);

// Row and column orthogonality, sum of squared degrees, degree vs dimension().
struct TableCheck {
    bool rows_orthonormal = false;
    bool columns_orthogonal = false;
    bool degrees_square_sum = false;
    bool degrees_match_dimension = false;
    bool ok() const { return rows_orthonormal && columns_orthogonal && degrees_square_sum && degrees_match_dimension; }
};
TableCheck check_table(const CharacterTable& t);

// Multiplicity of E in the i-th symmetric power of the reflection representation.
std::int64_t symmetric_power_multiplicity(const IrrLabel& e, int i);

struct BOracle {
    int b = 0;
    std::int64_t multiplicity = 0;
};
BOracle b_oracle(const IrrLabel& e);

// [E : Ind_H^G (E_1 x ... )] with H realized as a subgroup of signed permutations.
std::int64_t induction_multiplicity(const IrrLabel& e, const Embedding& emb, const std::vector<IrrLabel>& factors);

struct JOracle {
    IrrLabel label;
    int b = 0;
    std::int64_t multiplicity = 0;
};
// The unique E with b_E equal to the factor b-sum and positive multiplicity.
JOracle j_oracle(const Embedding& emb, const std::vector<IrrLabel>& factors);

struct OracleReport {
    std::vector<CheckLine> lines;
    bool ok() const;
};

// Tables and b for A up to max_a, BC/D up to max_bd; j for every embedding and
// special factor tuple up to max_a (A) and max_j (BC/D).
OracleReport oracle_check(int max_a, int max_bd, int max_j);

std::string to_string(const ClassKey& k);

}  // namespace springer::oracle
