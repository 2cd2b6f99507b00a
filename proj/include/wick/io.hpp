#pragma once

#include <string>

#include "wick/lamination.hpp"

namespace wick {

struct DomainSpec {
    Lamination lam;
    Vec3 basepoint{1, 0, 0};
};

// ParseError for malformed documents, ValidationError when the lamination is invalid
DomainSpec parse_lamination(const std::string& text);
DomainSpec load_lamination(const std::string& path);

}  // namespace wick
