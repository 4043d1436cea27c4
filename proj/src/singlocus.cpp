#include "monres/singlocus.hpp"

#include <algorithm>

namespace monres {

std::string support_shape_name(SupportShape s) {
    switch (s) {
        case SupportShape::BothCurves: return "both_curves";
        case SupportShape::CurveX: return "curve_x";
        case SupportShape::CurveY: return "curve_y";
        case SupportShape::PointOnly: return "point_only";
    }
    return "?";
}

SupportShape support_shape(const Situation& s) {
    if (!is_clean(s))
        throw EngineError("support_shape requires a clean state");
    if (!in_support(s))
        throw EngineError("support_shape requires the point in the support");
    Rat one(1);
    bool cx = invariant_H(s, Loc::XiX) >= one;
    bool cy = invariant_H(s, Loc::XiY) >= one;
    if (cx && cy) return SupportShape::BothCurves;
    if (cx) return SupportShape::CurveX;
    if (cy) return SupportShape::CurveY;
    return SupportShape::PointOnly;
}

namespace {

bool point_less(const Point3& a, const Point3& b) {
    auto ka = std::make_tuple(a.x.index(), a.y.index(), a.z.index());
    auto kb = std::make_tuple(b.x.index(), b.y.index(), b.z.index());
    return ka < kb;
}

Ord ord_min(Ord a, int64_t add) {
    if (!a) return a;
    return *a + add;
}

}  // namespace

namespace {

// Generic-point membership of the curve {z = axis = 0}: every divided
// z-derivative of the element keeps enough axis-valuation, and the boundary
// monomial meets its level along the curve.  Raw per-coefficient valuations,
// deliberately not the cleaned-slope route.
bool curve_generically_in_support(const Situation& s, Axis axis) {
    long long exp = axis == Axis::X ? s.alpha : s.beta;
    if (exp < s.level) return false;
    for (int64_t j = 1; j <= s.pe(); ++j) {
        Ord v = val_axis(s.coeffs[j - 1], axis);
        if (v && *v < j) return false;
    }
    return true;
}

}  // namespace

std::vector<Point3> support_oracle(const Situation& s, uint64_t max_points) {
    require_valid(s);
    const FieldSpec* spec = s.spec();
    uint64_t q = spec->order();
    if (q * q * q > max_points)
        throw ValidationError("support_oracle: field too large for the scan box");
    const int64_t pe = s.pe();
    const uint32_t p = spec->p;

    std::vector<FieldElement> elems = all_elements(spec);
    std::vector<Point3> found;

    for (const FieldElement& x0 : elems) {
        for (const FieldElement& y0 : elems) {
            // order of the boundary monomial at (x0, y0)
            int64_t mon_ord = (x0.is_zero() ? s.alpha : 0) +
                              (y0.is_zero() ? s.beta : 0);
            if (mon_ord < s.level) continue;

            // translate the coefficients once per (x0, y0)
            std::vector<BiPoly> b;
            b.reserve(pe);
            for (const auto& a : s.coeffs) b.push_back(translate(a, x0, y0));

            for (const FieldElement& z0 : elems) {
                // translated h = sum_k c_k(x,y) z^k with
                // c_k = sum_j binom(pe-j, k) z0^{pe-j-k} b_j   (b_0 = 1)
                std::vector<Ord> c_ord(pe + 1, std::nullopt);
                for (int64_t k = 0; k <= pe; ++k) {
                    BiPoly ck = BiPoly::zero(spec);
                    for (int64_t j = 0; j + k <= pe; ++j) {
                        uint64_t bin = binom_mod_p(pe - j, k, p);
                        if (bin == 0) continue;
                        FieldElement factor =
                            ff_scale(ff_pow(z0, pe - j - k), bin);
                        if (factor.is_zero()) continue;
                        if (j == 0) {
                            ck = add(ck, BiPoly::constant(spec, factor));
                        } else {
                            ck = add(ck, mul_scalar(b[j - 1], factor));
                        }
                    }
                    c_ord[k] = ord_origin(ck);
                }
                // every divided z-derivative must clear its level
                bool pass = true;
                for (int64_t n = 0; n < pe && pass; ++n) {
                    Ord best = std::nullopt;
                    for (int64_t k = n; k <= pe; ++k) {
                        if (binom_mod_p(k, n, p) == 0) continue;
                        Ord o = ord_min(c_ord[k], k - n);
                        if (o && (!best || *o < *best)) best = o;
                    }
                    if (best && *best < pe - n) pass = false;
                }
                if (pass) found.push_back({x0, y0, z0});
            }
        }
    }

    // Restrict to the germ at the origin: a distant point on an axis belongs
    // to a different local state unless the whole curve sits in the support,
    // which the generic-point test detects.
    bool cx = curve_generically_in_support(s, Axis::X);
    bool cy = curve_generically_in_support(s, Axis::Y);
    std::vector<Point3> germ;
    for (const Point3& pt : found) {
        bool at_origin = pt.x.is_zero() && pt.y.is_zero() && pt.z.is_zero();
        bool on_curve_x = cx && pt.x.is_zero() && pt.z.is_zero();
        bool on_curve_y = cy && pt.y.is_zero() && pt.z.is_zero();
        if (at_origin || on_curve_x || on_curve_y) germ.push_back(pt);
    }
    std::sort(germ.begin(), germ.end(), point_less);
    return germ;
}

std::vector<Point3> predicted_support_points(const Situation& s) {
    const FieldSpec* spec = s.spec();
    FieldElement z = FieldElement::zero(spec);
    std::vector<Point3> pts;
    if (!in_support(s)) return pts;
    SupportShape shape = support_shape(s);
    if (shape == SupportShape::PointOnly) {
        pts.push_back({z, z, z});
    } else {
        if (shape == SupportShape::BothCurves || shape == SupportShape::CurveX)
            for (const FieldElement& t : all_elements(spec))
                pts.push_back({z, t, z});
        if (shape == SupportShape::BothCurves || shape == SupportShape::CurveY)
            for (const FieldElement& t : all_elements(spec))
                pts.push_back({t, z, z});
    }
    std::sort(pts.begin(), pts.end(), point_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace monres
