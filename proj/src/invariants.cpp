#include "monres/invariants.hpp"

namespace monres {

GoodBad classify_divisor(const Situation& s, Axis axis) {
    Loc at = axis == Axis::X ? Loc::XiX : Loc::XiY;
    const DivisorInfo& d = axis == Axis::X ? s.div_x : s.div_y;
    if (!d.present)
        throw EngineError("classify_divisor: divisor absent on axis " +
                          std::string(axis == Axis::X ? "x" : "y"));
    return invariant_H(s, at) == mu(s, at) ? GoodBad::Good : GoodBad::Bad;
}

GoodBad classify_point(const Situation& s) {
    return invariant_H(s, Loc::P) == mu(s, Loc::P) ? GoodBad::Good : GoodBad::Bad;
}

Rat rho(const Situation& s, Axis axis) {
    Loc at = axis == Axis::X ? Loc::XiX : Loc::XiY;
    if (classify_divisor(s, axis) != GoodBad::Bad)
        throw EngineError("rho requested on a good divisor");
    if (!is_well_adapted(s, at))
        throw EngineError("rho requires well-adaptedness at " + loc_name(at));
    auto [r, g] = initial_form_axis(s.a_top(), axis);
    if (r % s.pe() != 0) {
        Ord o = uni_ord(g);
        return Rat(*o, s.pe());  // g != 0 by construction of the slice
    }
    Ord ro = res_ord_pe(g, s.e);
    if (!ro)
        throw EngineError(
            "rho: divisor slice is a perfect power despite well-adaptedness");
    return Rat(*ro, s.pe());
}

Configuration configuration(const Situation& s) {
    bool px = s.div_x.present, py = s.div_y.present;
    if (!px && !py)
        throw EngineError("configuration: no boundary divisor through the point");
    Configuration c;
    if (px && !py) {
        c.lone_axis = Axis::X;
        c.bad_axis = Axis::X;
        c.tag = classify_divisor(s, Axis::X) == GoodBad::Good ? 1 : 3;
        return c;
    }
    if (py && !px) {
        c.lone_axis = Axis::Y;
        c.bad_axis = Axis::Y;
        c.tag = classify_divisor(s, Axis::Y) == GoodBad::Good ? 1 : 3;
        return c;
    }
    GoodBad gx = classify_divisor(s, Axis::X);
    GoodBad gy = classify_divisor(s, Axis::Y);
    if (gx == GoodBad::Good && gy == GoodBad::Good) {
        c.tag = 2;
    } else if (gx == GoodBad::Bad && gy == GoodBad::Bad) {
        c.tag = 5;
    } else {
        c.tag = 4;
        c.bad_axis = gx == GoodBad::Bad ? Axis::X : Axis::Y;
    }
    return c;
}

std::string InvMon::str() const {
    std::string s = "C" + std::to_string(config) + "(";
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ",";
        s += tuple[i].str();
    }
    return s + ")";
}

InvMon inv_mon(const Situation& s) {
    Configuration c = configuration(s);
    InvMon inv;
    inv.config = c.tag;
    switch (c.tag) {
        case 1: {
            Rat m = mu(s, c.lone_axis == Axis::X ? Loc::XiX : Loc::XiY);
            inv.tuple = {Rat(0), Rat(0), m};
            break;
        }
        case 2: {
            Rat mx = mu(s, Loc::XiX), my = mu(s, Loc::XiY);
            inv.tuple = {Rat(0), Rat(0), rat_min(mx, my), rat_max(mx, my)};
            break;
        }
        case 3: {
            Rat r = rho(s, c.lone_axis);
            Rat m = mu(s, c.lone_axis == Axis::X ? Loc::XiX : Loc::XiY);
            inv.tuple = {r, Rat(0), m};
            break;
        }
        case 4: {
            // both entries read off the bad divisor
            Rat r = rho(s, c.bad_axis);
            Rat m = mu(s, c.bad_axis == Axis::X ? Loc::XiX : Loc::XiY);
            inv.tuple = {rat_min(r, m), rat_max(r, m)};
            break;
        }
        case 5: {
            Rat rx = rho(s, Axis::X), ry = rho(s, Axis::Y);
            inv.tuple = {rat_min(rx, ry), rat_max(rx, ry)};
            break;
        }
    }
    return inv;
}

InvMonCmp inv_mon_compare(const InvMon& b, const InvMon& a) {
    size_t n = std::max(b.tuple.size(), a.tuple.size());
    for (size_t i = 0; i < n; ++i) {
        bool in_b = i < b.tuple.size(), in_a = i < a.tuple.size();
        if (in_b && in_a) {
            if (b.tuple[i] == a.tuple[i]) continue;
            return {b.tuple[i] < a.tuple[i] ? -1 : 1, static_cast<int>(i), true};
        }
        // missing entry counts as -infinity
        if (!in_b) return {-1, static_cast<int>(i), false};
        return {1, static_cast<int>(i), false};
    }
    return {0, -1, true};
}

bool inv_mon_less(const InvMon& b, const InvMon& a) {
    return inv_mon_compare(b, a).cmp < 0;
}

}  // namespace monres
