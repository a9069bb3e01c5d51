#pragma once

#include <stdexcept>
#include <string>

namespace calrank {

// Error taxonomy shared by all modules. The CLI maps each kind to a
// machine-readable error object on stderr.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LookupError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline const char* error_kind(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return "config";
    if (dynamic_cast<const ShapeError*>(&e)) return "shape";
    if (dynamic_cast<const DomainError*>(&e)) return "domain";
    if (dynamic_cast<const NumericError*>(&e)) return "numeric";
    if (dynamic_cast<const DataError*>(&e)) return "data";
    if (dynamic_cast<const LookupError*>(&e)) return "lookup";
    if (dynamic_cast<const FitError*>(&e)) return "fit";
    if (dynamic_cast<const IoError*>(&e)) return "io";
    return "internal";
}

}  // namespace calrank
