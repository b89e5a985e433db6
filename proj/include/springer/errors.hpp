#pragma once

#include <stdexcept>
#include <string>

namespace springer {

// Input outside an operation's domain (malformed sequence, bad rank, ...).
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Request exceeds the hard enumeration caps.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal invariant failed; always a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct NotFound : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Brute-force oracle could not single out a unique answer.
struct OracleConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Embedding not among the supported subgroup shapes.
struct UnsupportedEmbedding : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline void ensure(bool cond, const std::string& what) {
    if (!cond) throw InternalError(what);
}

}  // namespace springer
