#pragma once

#include <stdexcept>
#include <string>

namespace risnet {

/// Bad or inconsistent user-supplied configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem read/write failure on a data path (CLI exit code 3).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Geometrically or mathematically undefined operation (zero distance,
/// node on the RIS vertical axis, graph too small, ...).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mismatched vector/matrix dimensions between related quantities.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace risnet
