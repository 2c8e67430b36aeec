#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace equilat {

// Malformed argument: shape mismatch, index out of range, broken invariant.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// A configurable cap was hit.  Computations fail loudly instead of
// truncating their result.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// The operation refuses to answer: the answer would require certifying an
// infinite object (e.g. connectivity of an infinite fiber graph), or a
// structural precondition fails (e.g. a non-independent coordinate set).
// Distinct from a negative answer.
struct RefusalError : std::runtime_error {
    explicit RefusalError(const std::string& msg, std::string reason_)
        : std::runtime_error(msg), reason(std::move(reason_)) {}
    std::string reason;  // machine-readable tag
};

// Caps for the search-style operations.  Values can be overridden per call;
// the CLI additionally honors the EQUILAT_BUDGET environment variable.
struct Budget {
    std::int64_t max_pairs = 200000;      // completion pair queue
    std::int64_t max_elements = 50000;    // stored basis elements / fiber vertices
    std::int64_t ball_nodes = 10000000;   // lattice ball enumeration nodes
    std::int64_t orbit_cap = 1000000;     // orbit size
    std::int64_t cell_cap = 20000;        // marginal matrix columns

    static Budget scaled(std::int64_t v) {
        Budget b;
        b.max_pairs = b.max_elements = b.ball_nodes = b.orbit_cap = b.cell_cap = v;
        return b;
    }
};

}  // namespace equilat
