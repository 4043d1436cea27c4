#include "monres/cleaning.hpp"

#include <algorithm>

namespace monres {

namespace {

// order of a_{p^e} at the location (total order at P, axis valuation at xi)
Ord top_order(const Situation& s, Loc at) {
    const BiPoly& a = s.a_top();
    switch (at) {
        case Loc::P: return ord_origin(a);
        case Loc::XiX: return val_axis(a, Axis::X);
        case Loc::XiY: return val_axis(a, Axis::Y);
    }
    return std::nullopt;
}

// the p^e-th root of the offending initial form, when it is a power
std::optional<BiPoly> initial_form_root(const Situation& s, Loc at) {
    const BiPoly& a = s.a_top();
    if (at == Loc::P) {
        BiPoly in = initial_form_origin(a);
        return is_pe_power(in, s.e);
    }
    Axis axis = at == Loc::XiX ? Axis::X : Axis::Y;
    auto [r, g] = initial_form_axis(a, axis);
    if (r % s.pe() != 0) return std::nullopt;
    auto groot = uni_is_pe_power(g, s.e);
    if (!groot) return std::nullopt;
    // root = axis^{r/p^e} * g^{1/p^e}(other)
    Axis other = axis == Axis::X ? Axis::Y : Axis::X;
    BiPoly root = uni_to_bipoly(*groot, other);
    int64_t shift = r / s.pe();
    return axis == Axis::X ? mul_monomial(root, shift, 0)
                           : mul_monomial(root, 0, shift);
}

}  // namespace

Rat slope(const Situation& s, Loc at) {
    Rat m = mu(s, at);
    Ord o = top_order(s, at);
    if (!o) return m;  // a_{p^e} = 0: clamp to mu
    return rat_min(Rat(*o, s.pe()), m);
}

bool is_well_adapted(const Situation& s, Loc at) {
    Rat m = mu(s, at);
    Ord o = top_order(s, at);
    if (!o) return true;                        // Case A via the clamp
    if (Rat(*o, s.pe()) >= m) return true;      // Case A
    return !initial_form_root(s, at);           // Case B
}

CleanReport clean(const Situation& s) {
    require_valid(s);
    CleanReport report;
    report.result = s;
    Situation& cur = report.result;

    // Step budget.  Every step lands the relevant order on a fresh multiple
    // of p^e below mu*p^e, so ~2*mu(P)+3 steps bound the whole run; the
    // first term keeps the configured formula-derived budget as well.
    long long cap = s.level * (s.alpha + s.beta + s.pe()) + s.pe();
    cap = std::max<long long>(cap, 2 * (s.alpha + s.beta) / s.level + 8);

    long long steps = 0;
    const Loc order[3] = {Loc::P, Loc::XiX, Loc::XiY};
    bool changed = true;
    while (changed) {
        changed = false;
        for (Loc at : order) {
            while (true) {
                Rat m = mu(cur, at);
                Ord before = top_order(cur, at);
                if (!before) break;
                if (Rat(*before, cur.pe()) >= m) break;
                std::optional<BiPoly> w = initial_form_root(cur, at);
                if (!w) break;  // Case B: well-adapted here
                cur = with_shifted_z(cur, *w);
                Ord after = top_order(cur, at);
                if (after && *after <= *before)
                    throw EngineError(
                        "cleaning step at " + loc_name(at) +
                        " failed to raise the slope (order " +
                        std::to_string(*before) + " -> " +
                        std::to_string(*after) +
                        "); the state lies outside the checkable axiom set");
                report.steps.push_back({at, *w});
                changed = true;
                if (++steps > cap)
                    throw EngineError("cleaning exceeded its step budget of " +
                                      std::to_string(cap));
            }
        }
    }

    ValidationResult v = validate(cur);
    if (!v.ok)
        throw EngineError(
            "cleaning broke a state invariant (" + v.message +
            "); the input lies outside the checkable axiom set");
    return report;
}

bool is_clean(const Situation& s) {
    return is_well_adapted(s, Loc::P) && is_well_adapted(s, Loc::XiX) &&
           is_well_adapted(s, Loc::XiY);
}

Rat invariant_H(const Situation& s, Loc at) {
    if (!is_well_adapted(s, at))
        throw EngineError("invariant H requested at " + loc_name(at) +
                          " where the element is not well-adapted");
    return slope(s, at);
}

std::pair<Rat, Rat> tight_monomial(const Situation& s) {
    return {invariant_H(s, Loc::XiX), invariant_H(s, Loc::XiY)};
}

}  // namespace monres
