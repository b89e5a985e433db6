#pragma once

#include <string>
#include <vector>

#include "springer/irreps.hpp"

namespace springer {

enum class EmbeddingKind {
    A_split,   // S_r x S_q in S_n
    B_SpWq,    // S_p x W_q in W_n
    B_WrWq,    // W_r x W_q in W_n
    B_WrSpWq,  // W_r x S_p x W_q in W_n
    C_WrWDq,   // W_r x W'_q in W_n
    D_SpWDq,   // S_p x W'_q in W'_n
    D_triple,  // W'_r x S_p^(lambda) x W'_q in W'_n
};

const char* embedding_kind_name(EmbeddingKind k);
EmbeddingKind parse_embedding_kind(const std::string& s);

struct Embedding {
    EmbeddingKind kind = EmbeddingKind::A_split;
    int r = 0;
    int p = 0;
    int q = 0;
    int lambda = 0;

    int n() const { return r + p + q; }
    // Factor families in order, e.g. {BC, A, BC} for W_r x S_p x W_q.
    std::vector<Family> factor_families() const;
    std::vector<int> factor_ranks() const;
    Family target_family() const;
    friend bool operator==(const Embedding&, const Embedding&) = default;
};

void validate(const Embedding& e);

// (u_{2i} - i, u_{2i+1} - i - 1) for a row u of length 2k+1 or 2k.
SeqPair double_dots(const Seq& u);

struct JResult {
    IrrLabel label;
    // Set when the output is degenerate and kappa comes from the
    // (kappa + kappa~ + lambda) mod 2 convention.
    bool kappa_by_convention = false;
};

JResult j_induce(const Embedding& e, const std::vector<IrrLabel>& factors);

struct ComposeReport {
    long checks = 0;
    long failures = 0;
    std::vector<std::string> failure_notes;
    bool ok() const { return failures == 0; }
};

// Transitivity of j along two-step chains at total rank n:
//   A : (S_a x S_b) x S_c versus S_a x (S_b x S_c)
//   BC: W_r x (S_p x W_q -> W_{p+q}) versus W_r x S_p x W_q
//   D : W'_r x (S_p x W'_q -> W'_{p+q}) versus W'_r x S_p x W'_q
// over all special inputs.
ComposeReport j_compose_check(Family f, int n);

std::string to_string(const Embedding& e);

}  // namespace springer
