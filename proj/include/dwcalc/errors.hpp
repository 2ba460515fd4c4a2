#pragma once

#include <stdexcept>
#include <string>

namespace dw {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Input failed structural validation (bad group table, bad complex, ...).
struct ValidationError : Error {
    using Error::Error;
};

// An enumeration would exceed the configured desk-scale budget.
struct BudgetError : Error {
    using Error::Error;
};

// The requested combination is outside the supported scope.
struct UnsupportedError : Error {
    using Error::Error;
};

// Manifest parsing / cross-reference resolution failure.
struct ManifestError : Error {
    using Error::Error;
};

}  // namespace dw
