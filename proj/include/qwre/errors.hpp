#pragma once

#include <stdexcept>
#include <string>

namespace qwre {

/// Bad measure/environment/run configuration supplied by the caller.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Request exceeds a hard enumeration/precision cap.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qwre
