#pragma once

#include <stdexcept>
#include <string>

namespace triangulene {

/// Invalid billiard size (N < 2, or N beyond the dense-oracle limit).
struct SizeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Quantum numbers outside the allowed index set, or a degenerate branch request.
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Wrong number of states handed to a completeness computation.
struct CountError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Symmetry matching of the finite lattice failed (internal inconsistency).
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A constructive step produced an infeasible or incomplete result.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The brute-force eigensolver failed to converge.
struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace triangulene
