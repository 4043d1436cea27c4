// Exception taxonomy shared across the engine.
#pragma once

#include <stdexcept>
#include <string>

namespace monres {

// Scenario or state fails a declared precondition / schema check.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant the engine relies on was violated (a bug, or an
// input outside the checkable axiom set).  Always loud, never swallowed.
struct EngineError : std::logic_error {
    explicit EngineError(const std::string& msg) : std::logic_error(msg) {}
};

// The certified strict-decrease property failed along a successor edge.
struct DecreaseViolation : std::runtime_error {
    explicit DecreaseViolation(const std::string& msg) : std::runtime_error(msg) {}
};

// A resolution tree hit the configured depth cap.
struct DepthCapExceeded : std::runtime_error {
    explicit DepthCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace monres
