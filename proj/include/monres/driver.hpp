// Center selection, the exhaustive successor tree with its certified
// strict-decrease monitor, and the side loops for the divisor-only and
// two-element states.
#pragma once

#include <memory>

#include "monres/blowup.hpp"

namespace monres {

struct Center {
    enum class Kind { Point, CurveX, CurveY } kind = Kind::Point;
    std::string name() const;
};

// Curves first (the axis whose divisor has larger mu; on a tie the younger
// divisor, i.e. larger age); the point only when no curve is in the support.
Center choose_center(const Situation& s);

struct NodeInvariants {
    bool in_support = false;
    Rat H_P, H_x, H_y;
    std::optional<GoodBad> class_x, class_y;  // present divisors only
    GoodBad point_class = GoodBad::Good;
    std::optional<InvMon> inv;                // when a divisor is present
    std::optional<SupportShape> shape;        // when in support
};

NodeInvariants compute_invariants(const Situation& s);

struct TraceNode {
    Situation state;                       // cleaned
    std::vector<CleanStep> clean_steps;    // cleaning applied on entry
    NodeInvariants inv;
    std::optional<Center> center;
    std::optional<NonRationalWarning> warning;
    int depth = 0;
    bool depth_capped = false;             // in support but not expanded

    struct Child {
        BlowupOutcome outcome;
        std::unique_ptr<TraceNode> node;   // Successor outcomes only
    };
    std::vector<Child> children;
};

struct ResolveLimits {
    int max_depth = 64;
    // Largest total extension degree the driver may grow the field to when a
    // non-rational successor warning names a factor; 0 = never extend.
    int field_extension_cap = 0;
};

struct ResolveStats {
    long long nodes = 0;
    long long successor_edges = 0;
    long long leaves_not_in_support = 0;
    long long leaves_sigma_drop = 0;
    long long leaves_depth_cap = 0;
    long long warnings = 0;
    int max_depth = 0;
};

struct ResolveResult {
    std::unique_ptr<TraceNode> root;
    ResolveStats stats;
    std::vector<uint32_t> field_degrees;  // m of each attempt, root field first
};

// Cleans, records invariants, picks the dictated center, expands every
// candidate outcome and recurses into successors, asserting at every edge
// that the termination measure strictly decreases with the deciding index
// present in both tuples (DecreaseViolation otherwise).  Depth-cap leaves
// are recorded, never silent.  When a non-rational successor warning names
// a degree within the extension cap, the run restarts over the larger field.
ResolveResult resolve(const Situation& s, const ResolveLimits& limits = {});

// ------------------------------------------------------------ tau = 0 loop

struct GammaValue {
    long long g1 = 0;          // -(size of the smallest qualifying subset)
    Rat g2;                    // best multiplicity sum / level at that size
    std::vector<int> g3;       // component ids, ascending
    std::string str() const;
};

// Lexicographic on (g1, g2, g3); g3 tuples compare lexicographically.
int gamma_compare(const GammaValue& a, const GammaValue& b);

// nullopt when no subset of through-components reaches the level (the point
// left the singular locus).
std::optional<GammaValue> gamma_opt(const Tau0State& st);
GammaValue gamma(const Tau0State& st);  // throws ValidationError if undefined

struct Tau0StepResult {
    GammaValue before;
    Tau0State next;
    std::optional<GammaValue> after;  // nullopt: resolved
};

// Blows up the intersection of the Gamma_3 components and moves to the
// adversary's best admissible next point: the exceptional component (with
// multiplicity sum - level) plus any subset of the old through-components
// that no longer contains all of Gamma_3, maximizing the new Gamma.
// Asserts the strict decrease.
Tau0StepResult tau0_step(const Tau0State& st);

struct Tau0Chain {
    std::vector<Tau0StepResult> steps;
    Tau0State final_state;
};

Tau0Chain tau0_resolve(const Tau0State& st, int max_steps = 1000);

// ------------------------------------------------------------ tau = 2 loop

struct Tau2StepResult {
    enum class Kind { Step, Done, SigmaDrop } kind = Kind::Done;
    Tau2State next;
    int drop_element = 0;  // 1 or 2 (SigmaDrop only)
    int drop_e = 0;
};

bool tau2_in_support(const Tau2State& st);
Tau2StepResult tau2_step(const Tau2State& st);

struct Tau2Chain {
    long long blowups = 0;
    bool sigma_dropped = false;
    int drop_element = 0;
    int drop_e = 0;
    Tau2State final_state;
};

Tau2Chain tau2_resolve(const Tau2State& st, int max_steps = 10000);

}  // namespace monres
