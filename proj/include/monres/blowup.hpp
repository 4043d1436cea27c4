// Blow-up transforms of the monomial-stage state: the curve centers
// {z = x = 0} / {z = y = 0} and the point center, with chart enumeration,
// initial-form (sigma) analysis and post-transform readjustment.
#pragma once

#include <optional>

#include "monres/invariants.hpp"
#include "monres/singlocus.hpp"

namespace monres {

// Outcome of testing whether the degree-p^e initial form of the transformed
// element is still the p^e-th power of a linear form with unit z-part.
struct SigmaStatus {
    bool same = false;
    BiPoly shift_w;   // linear form in x,y normalizing the element (Same only)
    int e_prime = 0;  // largest e' with the initial form a p^{e'}-th power

    explicit SigmaStatus(const FieldSpec* spec) : shift_w(BiPoly::zero(spec)) {}
};

// Requires ord(h_tilde) = p^e at the origin and unit z^{p^e} coefficient.
SigmaStatus sigma_status(const TriPoly& h_tilde, int e);

enum class ChartKind { Curve, PointChartX, PointChartY };
std::string chart_kind_name(ChartKind k);

struct BlowupOutcome {
    ChartKind chart = ChartKind::Curve;
    Axis curve_axis = Axis::X;       // Curve only
    FieldElement translation;        // PointChartX only: the c of (0, c, 0)

    enum class Kind { NotInSupport, SigmaDrop, Successor };
    Kind kind = Kind::NotInSupport;
    int sigma_e_prime = 0;           // SigmaDrop only
    std::optional<Situation> next;   // Successor only (validated, cleaned)
    std::vector<CleanStep> reclean_steps;
    BiPoly sigma_shift;              // the normalizing w applied (may be 0)

    BlowupOutcome(const FieldSpec* spec)
        : translation(FieldElement::zero(spec)),
          sigma_shift(BiPoly::zero(spec)) {}

    std::string kind_name() const;
};

// Candidate successor points off the enumerated rational translations may
// exist when the support condition in the translation parameter has an
// irreducible factor of degree > 1; `residual` is that factor (product),
// `min_degree` the smallest degree of one of its irreducible factors.
struct NonRationalWarning {
    UniPoly residual;
    int min_degree = 0;
};

// Center V(z, axis).  Requires a clean state with H(xi_axis) >= 1.
// Exactly one candidate point (the axis-chart origin).
std::vector<BlowupOutcome> blowup_curve(const Situation& s, Axis axis);

struct PointBlowupResult {
    std::vector<BlowupOutcome> outcomes;  // x-chart by field order, then y-chart
    std::optional<NonRationalWarning> warning;
};

// Center P.  Requires a clean state with PointOnly support.
PointBlowupResult blowup_point(const Situation& s);

}  // namespace monres
