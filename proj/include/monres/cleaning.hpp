// Slopes, well-adaptedness and the cleaning loop that raises the slope by
// z-shifts until the initial form stops being a p^e-th power; the invariant
// H is the slope of a well-adapted element.
#pragma once

#include "monres/situation.hpp"

namespace monres {

// min{ ord(a_{p^e}) / p^e , mu } at the location; clamps to mu when the top
// coefficient vanishes.
Rat slope(const Situation& s, Loc at);

// Case A: slope == mu.  Case B: slope < mu and the initial form of a_{p^e}
// at the location is not a p^e-th power.
bool is_well_adapted(const Situation& s, Loc at);

struct CleanStep {
    Loc at;
    BiPoly w;  // the shift z = z' - w
};

struct CleanReport {
    std::vector<CleanStep> steps;
    Situation result;
};

// Makes the element well-adapted at P, xi_x and xi_y simultaneously.  Passes
// run in the order P, xi_x, xi_y and repeat until a full sweep changes
// nothing; every individual step must strictly raise the slope numerator it
// targets (checked, EngineError otherwise).
CleanReport clean(const Situation& s);

bool is_clean(const Situation& s);  // well-adapted at all three locations

// The slope of a well-adapted element; requires well-adaptedness at `at`.
Rat invariant_H(const Situation& s, Loc at);

// (H(xi_x), H(xi_y)); componentwise <= (alpha/a, beta/a).
std::pair<Rat, Rat> tight_monomial(const Situation& s);

}  // namespace monres
