#pragma once

#include <stdexcept>
#include <string>

namespace sphtile {

// Input outside the mathematical domain of an operation.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// A bracketed root could not be isolated inside the admissible interval.
struct IllConditioned : std::runtime_error {
    explicit IllConditioned(const std::string& what) : std::runtime_error(what) {}
};

// A half-edge mesh violates a structural invariant (open edge, bad loop, ...).
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

// Coordinate propagation reached the same vertex along two paths that
// disagree beyond tolerance; signals inconsistent angle data.
struct ClosureFailure : std::runtime_error {
    ClosureFailure(const std::string& what, double residual)
        : std::runtime_error(what), residual(residual) {}
    double residual;
};

// The search exceeded its node cap.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded(const std::string& what, std::uint64_t nodes)
        : std::runtime_error(what), nodes(nodes) {}
    std::uint64_t nodes;
};

// Malformed input file.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sphtile
