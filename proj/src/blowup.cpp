#include "monres/blowup.hpp"

namespace monres {

std::string chart_kind_name(ChartKind k) {
    switch (k) {
        case ChartKind::Curve: return "curve";
        case ChartKind::PointChartX: return "x";
        case ChartKind::PointChartY: return "y";
    }
    return "?";
}

std::string BlowupOutcome::kind_name() const {
    switch (kind) {
        case Kind::NotInSupport: return "not_in_support";
        case Kind::SigmaDrop: return "sigma_drop";
        case Kind::Successor: return "successor";
    }
    return "?";
}

SigmaStatus sigma_status(const TriPoly& h_tilde, int e) {
    const FieldSpec* spec = h_tilde.spec();
    int64_t pe = 1;
    for (int i = 0; i < e; ++i) pe *= spec->p;
    Ord o = ord_origin(h_tilde);
    if (!o || *o != pe)
        throw EngineError("sigma_status: element does not have order p^e");
    bool unit_lead = false;
    for (const auto& t : h_tilde.terms())
        if (t.first == Exp3{0, 0, pe} && t.second.is_one()) unit_lead = true;
    if (!unit_lead)
        throw EngineError("sigma_status: z^{p^e} coefficient is not 1");

    TriPoly in = initial_form_origin(h_tilde);
    SigmaStatus st(spec);
    if (auto root = is_pe_power(in, e)) {
        // homogeneous of degree 1 and monic in z: root = z + c_x x + c_y y
        st.same = true;
        st.e_prime = e;
        std::vector<BiPoly::Term> w_terms;
        for (const auto& t : root->terms()) {
            if (t.first == Exp3{0, 0, 1}) continue;
            if (t.first == Exp3{1, 0, 0}) {
                w_terms.push_back({Exp2{1, 0}, t.second});
            } else if (t.first == Exp3{0, 1, 0}) {
                w_terms.push_back({Exp2{0, 1}, t.second});
            } else {
                throw EngineError("sigma_status: non-linear root term");
            }
        }
        st.shift_w = BiPoly::from_terms(spec, std::move(w_terms));
        return st;
    }
    st.same = false;
    for (int ep = e - 1; ep >= 0; --ep) {
        if (is_pe_power(in, ep)) {
            st.e_prime = ep;
            return st;
        }
    }
    throw EngineError("sigma_status: unreachable (p^0-th power always exists)");
}

namespace {

// Fresh age stamp: strictly younger than every divisor already present.
long long next_stamp(const Situation& s) {
    long long base = s.step_count;
    if (s.div_x.present) base = std::max(base, s.div_x.age);
    if (s.div_y.present) base = std::max(base, s.div_y.age);
    return base + 1;
}

TriPoly assemble_element(const FieldSpec* spec, const std::vector<BiPoly>& coeffs) {
    int64_t pe = static_cast<int64_t>(coeffs.size());
    std::vector<TriPoly::Term> terms;
    terms.push_back({Exp3{0, 0, pe}, FieldElement::one(spec)});
    for (int64_t i = 1; i <= pe; ++i)
        for (const auto& t : coeffs[i - 1].terms())
            terms.push_back({Exp3{t.first.x, t.first.y, pe - i}, t.second});
    return TriPoly::from_terms(spec, std::move(terms));
}

// Shared tail of every candidate: order gate, sigma analysis, normalizing
// shift, validation, re-cleaning, support membership.
void finish_candidate(Situation cand, BlowupOutcome& out) {
    const int64_t pe = cand.pe();
    for (int64_t i = 1; i <= pe; ++i) {
        Ord o = ord_origin(cand.coeffs[i - 1]);
        if (o && *o < i) {
            out.kind = BlowupOutcome::Kind::NotInSupport;
            return;
        }
    }
    TriPoly h = assemble_element(cand.spec(), cand.coeffs);
    SigmaStatus st = sigma_status(h, cand.e);
    if (!st.same) {
        out.kind = BlowupOutcome::Kind::SigmaDrop;
        out.sigma_e_prime = st.e_prime;
        return;
    }
    out.sigma_shift = st.shift_w;
    if (!st.shift_w.is_zero())
        cand.coeffs = shift_weierstrass(cand.coeffs, st.shift_w, cand.field->p);

    ValidationResult v = validate(cand);
    if (!v.ok)
        throw EngineError("blow-up produced an invalid state: " + v.message);

    if (!is_clean(cand)) {
        CleanReport cr = clean(cand);
        out.reclean_steps = std::move(cr.steps);
        cand = std::move(cr.result);
    }
    if (!in_support(cand)) {
        out.kind = BlowupOutcome::Kind::NotInSupport;
        return;
    }
    out.kind = BlowupOutcome::Kind::Successor;
    out.next = std::move(cand);
}

// Constraint polynomials in the x-chart translation parameter: the point
// (0, c, 0) lies in the support iff every divided derivative of every
// divided coefficient of order < i vanishes there.
std::vector<UniPoly> xchart_support_constraints(const Situation& s) {
    std::vector<UniPoly> polys;
    const FieldElement zero_c = FieldElement::zero(s.spec());
    for (int64_t i = 1; i <= s.pe(); ++i) {
        if (s.coeffs[i - 1].is_zero()) continue;
        BiPoly moved =
            divide_exact(subst_point_chart_x(s.coeffs[i - 1], zero_c), i, 0);
        for (int64_t dx = 0; dx < i; ++dx)
            for (int64_t dy = 0; dx + dy < i; ++dy) {
                BiPoly d = hasse_derivative(moved, dx, dy);
                UniPoly u = slice_axis(d, Axis::X, 0);
                if (!u.is_zero()) polys.push_back(std::move(u));
            }
    }
    return polys;
}

std::optional<NonRationalWarning> nonrational_analysis(const Situation& s) {
    // only x-chart points with nonzero translation can be non-rational, and
    // they all carry monomial exponent alpha + beta - level
    if (s.alpha + s.beta - s.level < s.level) return std::nullopt;
    std::vector<UniPoly> constraints = xchart_support_constraints(s);
    if (constraints.empty()) return std::nullopt;  // whole line in the support
    UniPoly g = constraints.front();
    for (size_t i = 1; i < constraints.size(); ++i) {
        g = uni_gcd(g, constraints[i]);
        if (g.degree() == 0) return std::nullopt;
    }
    g = uni_remove_rational_roots(g);
    if (g.degree() < 2) return std::nullopt;
    NonRationalWarning w{g, uni_min_irreducible_degree(g)};
    return w;
}

}  // namespace

std::vector<BlowupOutcome> blowup_curve(const Situation& s, Axis axis) {
    require_valid(s);
    if (!is_clean(s)) throw EngineError("blowup_curve requires a clean state");
    Loc at = axis == Axis::X ? Loc::XiX : Loc::XiY;
    if (invariant_H(s, at) < Rat(1))
        throw EngineError("blowup_curve: the chosen curve is not in the support");

    Situation cand = s;
    cand.step_count = next_stamp(s);
    for (int64_t i = 1; i <= s.pe(); ++i)
        cand.coeffs[i - 1] = axis == Axis::X
                                 ? divide_exact(s.coeffs[i - 1], i, 0)
                                 : divide_exact(s.coeffs[i - 1], 0, i);
    if (axis == Axis::X)
        cand.alpha = s.alpha - s.level;
    else
        cand.beta = s.beta - s.level;
    if (cand.alpha < 0 || cand.beta < 0)
        throw EngineError("blowup_curve: monomial exponent went negative");

    BlowupOutcome out(s.spec());
    out.chart = ChartKind::Curve;
    out.curve_axis = axis;
    finish_candidate(std::move(cand), out);
    return {std::move(out)};
}

PointBlowupResult blowup_point(const Situation& s) {
    require_valid(s);
    if (!is_clean(s)) throw EngineError("blowup_point requires a clean state");
    if (support_shape(s) != SupportShape::PointOnly)
        throw EngineError("blowup_point requires point-only support");

    PointBlowupResult result;
    const int64_t pe = s.pe();
    const long long exc_exp = s.alpha + s.beta - s.level;
    const long long new_age = next_stamp(s);

    // x-chart: one candidate per rational translation c
    for (const FieldElement& c : all_elements(s.spec())) {
        Situation cand = s;
        cand.step_count = new_age;
        for (int64_t i = 1; i <= pe; ++i)
            cand.coeffs[i - 1] =
                divide_exact(subst_point_chart_x(s.coeffs[i - 1], c), i, 0);
        cand.alpha = exc_exp;
        cand.div_x = {true, new_age};  // the exceptional divisor
        if (c.is_zero() && s.div_y.present) {
            cand.beta = s.beta;
            cand.div_y = s.div_y;  // strict transform of the old y-divisor
        } else {
            cand.beta = 0;
            cand.div_y = {false, 0};
        }
        BlowupOutcome out(s.spec());
        out.chart = ChartKind::PointChartX;
        out.translation = c;
        finish_candidate(std::move(cand), out);
        result.outcomes.push_back(std::move(out));
    }

    // y-chart origin: the one point of the exceptional line off the x-chart
    {
        Situation cand = s;
        cand.step_count = new_age;
        for (int64_t i = 1; i <= pe; ++i)
            cand.coeffs[i - 1] =
                divide_exact(subst_point_chart_y(s.coeffs[i - 1]), 0, i);
        cand.alpha = s.div_x.present ? s.alpha : 0;
        cand.div_x = s.div_x;  // strict transform of the old x-divisor
        cand.beta = exc_exp;
        cand.div_y = {true, new_age};  // the exceptional divisor
        BlowupOutcome out(s.spec());
        out.chart = ChartKind::PointChartY;
        finish_candidate(std::move(cand), out);
        result.outcomes.push_back(std::move(out));
    }

    result.warning = nonrational_analysis(s);
    return result;
}

}  // namespace monres
