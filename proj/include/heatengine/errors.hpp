#pragma once

#include <stdexcept>
#include <string>

namespace heatengine {

struct NonHermitianError : std::runtime_error {
    explicit NonHermitianError(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergenceError : std::runtime_error {
    explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatchError : std::invalid_argument {
    explicit DimensionMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidBetaError : std::invalid_argument {
    explicit InvalidBetaError(const std::string& what) : std::invalid_argument(what) {}
};

struct IncompleteSchemeError : std::invalid_argument {
    explicit IncompleteSchemeError(const std::string& what) : std::invalid_argument(what) {}
};

struct UnsupportedPairError : std::invalid_argument {
    explicit UnsupportedPairError(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownIdError : std::invalid_argument {
    explicit UnknownIdError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace heatengine
