// Deterministic JSON-lines trace of a resolution run: one event per node,
// cleaning step and blow-up edge, closed by a manifest line with counts and
// the engine version.
#pragma once

#include <iosfwd>

#include "monres/driver.hpp"

namespace monres {

inline constexpr const char* kEngineVersion = "0.1.0";

void emit_trace(const ResolveResult& result, std::ostream& os,
                std::optional<long long> seed = std::nullopt);

// Human-oriented one-screen summary (CLI output).
void print_summary(const ResolveResult& result, std::ostream& os);

}  // namespace monres
