#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace springer {

// One named property checked over many inputs.
struct CheckLine {
    CheckLine(std::string n = {}) : name(std::move(n)) {}

    std::string name;
    long checks = 0;
    long failures = 0;
    std::vector<std::string> notes;  // first few failures

    bool ok() const { return failures == 0; }
    void record(bool pass, const std::string& what) {
        ++checks;
        if (pass) return;
        ++failures;
        if (notes.size() < 10) notes.push_back(what);
    }
};

inline bool all_ok(const std::vector<CheckLine>& lines) {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.ok(); });
}

}  // namespace springer
