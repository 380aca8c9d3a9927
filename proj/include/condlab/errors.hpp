#pragma once

#include <stdexcept>
#include <string>

namespace condlab {

// Exit-code contract: ConfigError -> 1, validation failure -> 2,
// numerical failure -> 3.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationFailure : std::runtime_error {
    explicit ValidationFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct InfeasibleGeometry : std::runtime_error {
    explicit InfeasibleGeometry(const std::string& msg) : std::runtime_error(msg) {}
};

struct MissingTunedK : std::runtime_error {
    explicit MissingTunedK(const std::string& msg) : std::runtime_error(msg) {}
};

struct SingularWeights : std::runtime_error {
    explicit SingularWeights(const std::string& msg) : std::runtime_error(msg) {}
};

struct SolverDiverged : std::runtime_error {
    explicit SolverDiverged(const std::string& msg) : std::runtime_error(msg) {}
};

struct BracketFailure : std::runtime_error {
    explicit BracketFailure(const std::string& msg) : std::runtime_error(msg) {}
};

struct InfiniteEnergy : std::runtime_error {
    explicit InfiniteEnergy(const std::string& msg) : std::runtime_error(msg) {}
};

struct HorizonTooShort : std::runtime_error {
    explicit HorizonTooShort(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroRate : std::runtime_error {
    explicit ZeroRate(const std::string& msg) : std::runtime_error(msg) {}
};

struct RoutingConflict : std::runtime_error {
    explicit RoutingConflict(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace condlab
