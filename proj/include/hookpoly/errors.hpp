#pragma once
// Error types shared across the library. Everything derives from hookpoly::error
// so callers can catch the whole family at the CLI boundary.

#include <stdexcept>
#include <string>

namespace hookpoly {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// precondition violations: bad t, off-domain w, n in the wrong residue class, ...
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// rational exponent falls off the series grid, or access beyond truncation order
struct grid_error : error {
    explicit grid_error(const std::string& msg) : error(msg) {}
};

// enumeration/truncation caps exceeded before the request could be satisfied
struct resource_limit_error : error {
    explicit resource_limit_error(const std::string& msg) : error(msg) {}
};

// iteration failed to converge, a residual certificate failed, or a contour
// winding number came out ambiguous
struct convergence_error : error {
    explicit convergence_error(const std::string& msg) : error(msg) {}
};

} // namespace hookpoly
