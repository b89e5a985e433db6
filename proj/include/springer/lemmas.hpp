#pragma once

#include <cstdint>
#include <vector>

#include "springer/check_line.hpp"

namespace springer {

struct LemmaReport {
    std::vector<CheckLine> lines;
    bool ok() const { return all_ok(lines); }
};

// Exhaustive structural properties of the sequence spaces for 1 <= m <= max_m
// and statistic <= max_n.
LemmaReport run_lemmas(int max_m, int max_n);

// Randomized additivity and subadditivity checks on pairs of X-sequences of
// length m+1; deterministic for a fixed seed.
LemmaReport run_random_lemmas(int m, int samples, std::uint64_t seed);

}  // namespace springer
