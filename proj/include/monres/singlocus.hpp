// The local shape of the singular support and a brute-force rational-point
// oracle that cross-validates it.
#pragma once

#include "monres/cleaning.hpp"

namespace monres {

// Determined by h_x = H(xi_x) and h_y = H(xi_y): the support contains the
// curve {z = axis = 0} exactly when the slope there is >= 1.
enum class SupportShape { BothCurves, CurveX, CurveY, PointOnly };

std::string support_shape_name(SupportShape s);

// Requires a clean state with in_support(s) true.
SupportShape support_shape(const Situation& s);

struct Point3 {
    FieldElement x, y, z;
    friend bool operator==(const Point3&, const Point3&) = default;
};

// Enumerates every F_{p^m}-rational point (x0,y0,z0) and keeps those where
// all z-divided-power derivatives of h have high enough order and the
// boundary monomial meets its level.  `max_points` guards the q^3 scan.
std::vector<Point3> support_oracle(const Situation& s,
                                   uint64_t max_points = 1u << 22);

// The rational points of the variety support_shape predicts (empty when the
// state is out of support); sorted the same way the oracle sorts.
std::vector<Point3> predicted_support_points(const Situation& s);

}  // namespace monres
