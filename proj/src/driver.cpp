#include "monres/driver.hpp"

#include <algorithm>

namespace monres {

std::string Center::name() const {
    switch (kind) {
        case Kind::Point: return "point";
        case Kind::CurveX: return "curve_x";
        case Kind::CurveY: return "curve_y";
    }
    return "?";
}

Center choose_center(const Situation& s) {
    SupportShape shape = support_shape(s);
    switch (shape) {
        case SupportShape::CurveX: return {Center::Kind::CurveX};
        case SupportShape::CurveY: return {Center::Kind::CurveY};
        case SupportShape::PointOnly: return {Center::Kind::Point};
        case SupportShape::BothCurves: break;
    }
    Rat mx = mu(s, Loc::XiX), my = mu(s, Loc::XiY);
    if (mx > my) return {Center::Kind::CurveX};
    if (my > mx) return {Center::Kind::CurveY};
    // equal mu: blow up the divisor created later (larger age) first
    return s.div_x.age > s.div_y.age ? Center{Center::Kind::CurveX}
                                     : Center{Center::Kind::CurveY};
}

NodeInvariants compute_invariants(const Situation& s) {
    NodeInvariants n;
    n.H_P = invariant_H(s, Loc::P);
    n.H_x = invariant_H(s, Loc::XiX);
    n.H_y = invariant_H(s, Loc::XiY);
    n.point_class = classify_point(s);
    if (s.div_x.present) n.class_x = classify_divisor(s, Axis::X);
    if (s.div_y.present) n.class_y = classify_divisor(s, Axis::Y);
    if (s.div_x.present || s.div_y.present) n.inv = inv_mon(s);
    n.in_support = in_support(s);
    if (n.in_support) n.shape = support_shape(s);
    return n;
}

namespace {

struct TreeBuilder {
    const ResolveLimits& limits;
    ResolveStats stats;
    std::optional<int> extension_request;  // min degree asked for by a warning

    std::unique_ptr<TraceNode> build(Situation raw,
                                     std::vector<CleanStep> entry_steps,
                                     int depth) {
        auto node = std::make_unique<TraceNode>();
        if (entry_steps.empty() && !is_clean(raw)) {
            CleanReport cr = clean(raw);
            node->clean_steps = std::move(cr.steps);
            node->state = std::move(cr.result);
        } else {
            node->state = std::move(raw);
            node->clean_steps = std::move(entry_steps);
        }
        node->depth = depth;
        node->inv = compute_invariants(node->state);
        ++stats.nodes;
        stats.max_depth = std::max(stats.max_depth, depth);

        if (!node->inv.in_support) {
            ++stats.leaves_not_in_support;
            return node;
        }
        if (depth >= limits.max_depth) {
            node->depth_capped = true;
            ++stats.leaves_depth_cap;
            return node;
        }

        Center center = choose_center(node->state);
        node->center = center;

        std::vector<BlowupOutcome> outcomes;
        if (center.kind == Center::Kind::Point) {
            PointBlowupResult pr = blowup_point(node->state);
            outcomes = std::move(pr.outcomes);
            if (pr.warning) {
                node->warning = pr.warning;
                ++stats.warnings;
                int want = static_cast<int>(node->state.field->m) *
                           pr.warning->min_degree;
                if (want <= limits.field_extension_cap &&
                    (!extension_request || want < *extension_request))
                    extension_request = want;
            }
        } else {
            outcomes = blowup_curve(
                node->state,
                center.kind == Center::Kind::CurveX ? Axis::X : Axis::Y);
        }

        for (auto& out : outcomes) {
            std::unique_ptr<TraceNode> child_node;
            if (out.kind == BlowupOutcome::Kind::Successor) {
                Situation next = *out.next;
                std::vector<CleanStep> steps = out.reclean_steps;
                child_node = build(std::move(next), std::move(steps), depth + 1);
                ++stats.successor_edges;
                // Strict decrease of the termination measure along the edge,
                // decided at an index both tuples carry.
                const InvMon& pa = *node->inv.inv;
                const InvMon& ch = *child_node->inv.inv;
                InvMonCmp cmp = inv_mon_compare(ch, pa);
                if (cmp.cmp >= 0)
                    throw DecreaseViolation(
                        "termination measure did not decrease: parent " +
                        pa.str() + " -> child " + ch.str());
                if (!cmp.index_in_both)
                    throw DecreaseViolation(
                        "termination measure decided by tuple padding: parent " +
                        pa.str() + " -> child " + ch.str());
            } else if (out.kind == BlowupOutcome::Kind::SigmaDrop) {
                ++stats.leaves_sigma_drop;
            } else {
                ++stats.leaves_not_in_support;
            }
            node->children.push_back(
                TraceNode::Child{std::move(out), std::move(child_node)});
        }
        return node;
    }
};

Situation embed_situation(const Situation& s, const FieldSpecPtr& to) {
    FieldElement root = find_embedding_root(s.spec(), to.get());
    Situation r = s;
    r.field = to;
    auto embed_poly = [&](const BiPoly& f) {
        std::vector<BiPoly::Term> terms;
        for (const auto& t : f.terms())
            terms.push_back({t.first, ff_embed(t.second, to.get(), root)});
        return BiPoly::from_terms(to.get(), std::move(terms));
    };
    for (auto& a : r.coeffs) a = embed_poly(a);
    return r;
}

}  // namespace

ResolveResult resolve(const Situation& s, const ResolveLimits& limits) {
    require_valid(s);
    Situation root = s;
    // keep exceptional-divisor ages distinct from the initial ones
    long long base = root.step_count;
    if (root.div_x.present) base = std::max(base, root.div_x.age);
    if (root.div_y.present) base = std::max(base, root.div_y.age);
    root.step_count = base;

    ResolveResult result;
    result.field_degrees.push_back(root.field->m);
    while (true) {
        TreeBuilder builder{limits, {}, std::nullopt};
        result.root = builder.build(root, {}, 0);
        result.stats = builder.stats;
        if (!builder.extension_request) break;
        uint32_t new_m = static_cast<uint32_t>(*builder.extension_request);
        if (new_m <= root.field->m) break;
        FieldSpecPtr bigger = FieldSpec::make(root.field->p, new_m);
        root = embed_situation(root, bigger);
        result.field_degrees.push_back(new_m);
    }
    return result;
}

// --------------------------------------------------------------- tau = 0

std::string GammaValue::str() const {
    std::string s = "(" + std::to_string(g1) + ", " + g2.str() + ", (";
    for (size_t i = 0; i < g3.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g3[i]);
    }
    return s + "))";
}

int gamma_compare(const GammaValue& a, const GammaValue& b) {
    if (a.g1 != b.g1) return a.g1 < b.g1 ? -1 : 1;
    if (a.g2 != b.g2) return a.g2 < b.g2 ? -1 : 1;
    if (a.g3 != b.g3) return a.g3 < b.g3 ? -1 : 1;
    return 0;
}

std::optional<GammaValue> gamma_opt(const Tau0State& st) {
    std::vector<const Tau0Component*> through;
    for (const auto& c : st.components)
        if (c.through_point) through.push_back(&c);
    if (through.size() > 24)
        throw ValidationError("gamma: too many components through the point");

    // smallest qualifying cardinality via the largest multiplicities
    std::vector<long long> mults;
    for (auto* c : through) mults.push_back(c->multiplicity);
    std::sort(mults.rbegin(), mults.rend());
    long long acc = 0;
    size_t n = 0;
    while (n < mults.size() && acc < st.level) acc += mults[n++];
    if (acc < st.level) return std::nullopt;

    // among subsets of that cardinality: maximal sum, then maximal id tuple
    GammaValue best;
    best.g1 = -static_cast<long long>(n);
    bool have = false;
    std::vector<size_t> idx(n);
    // iterate combinations of size n out of through.size()
    for (size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
        long long sum = 0;
        for (size_t i : idx) sum += through[i]->multiplicity;
        if (sum >= st.level) {
            Rat g2(sum, st.level);
            std::vector<int> ids;
            for (size_t i : idx) ids.push_back(through[i]->id);
            std::sort(ids.begin(), ids.end());
            if (!have || g2 > best.g2 || (g2 == best.g2 && ids > best.g3)) {
                best.g2 = g2;
                best.g3 = std::move(ids);
                have = true;
            }
        }
        // next combination
        size_t k = n;
        while (k > 0) {
            --k;
            if (idx[k] != k + through.size() - n) {
                ++idx[k];
                for (size_t j = k + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (k == 0) {
                k = SIZE_MAX;
                break;
            }
        }
        if (k == SIZE_MAX || n == 0) break;
    }
    if (!have) return std::nullopt;
    return best;
}

GammaValue gamma(const Tau0State& st) {
    auto g = gamma_opt(st);
    if (!g)
        throw ValidationError(
            "gamma: no subset of through-components reaches the level");
    return *g;
}

Tau0StepResult tau0_step(const Tau0State& st) {
    Tau0StepResult res;
    res.before = gamma(st);
    const std::vector<int>& center = res.before.g3;
    long long center_sum = 0;
    for (const auto& c : st.components)
        if (std::find(center.begin(), center.end(), c.id) != center.end())
            center_sum += c.multiplicity;
    long long exc_mult = center_sum - st.level;

    std::vector<const Tau0Component*> through;
    for (const auto& c : st.components)
        if (c.through_point) through.push_back(&c);

    // adversary: any subset of the old through-components that does not
    // contain the whole center can share the next point with the
    // exceptional component
    size_t nt = through.size();
    std::optional<GammaValue> best_gamma;
    std::vector<int> best_keep;
    bool have_state = false;
    Tau0State best_state;
    for (uint64_t mask = 0; mask < (1ull << nt); ++mask) {
        // kept set must not contain all of the center components
        bool all_center_kept = true;
        for (size_t i = 0; i < nt; ++i) {
            bool kept = (mask >> i) & 1;
            bool in_center = std::find(center.begin(), center.end(),
                                       through[i]->id) != center.end();
            if (in_center && !kept) all_center_kept = false;
        }
        if (all_center_kept) continue;

        Tau0State cand;
        cand.level = st.level;
        for (const auto& c : st.components) {
            Tau0Component nc = c;
            if (c.through_point) {
                bool kept = false;
                for (size_t i = 0; i < nt; ++i)
                    if (through[i]->id == c.id) kept = (mask >> i) & 1;
                nc.through_point = kept;
            }
            cand.components.push_back(nc);
        }
        if (exc_mult > 0)
            cand.components.push_back({st.next_id(), exc_mult, true});

        auto g = gamma_opt(cand);
        std::vector<int> keep_ids;
        for (size_t i = 0; i < nt; ++i)
            if ((mask >> i) & 1) keep_ids.push_back(through[i]->id);
        std::sort(keep_ids.begin(), keep_ids.end());
        bool better = false;
        if (!have_state) {
            better = true;
        } else if (g && !best_gamma) {
            better = true;
        } else if (g && best_gamma) {
            int c = gamma_compare(*best_gamma, *g);
            if (c < 0 || (c == 0 && keep_ids > best_keep)) better = true;
        } else if (!g && !best_gamma && keep_ids > best_keep) {
            better = true;
        }
        if (better) {
            best_gamma = g;
            best_keep = std::move(keep_ids);
            best_state = std::move(cand);
            have_state = true;
        }
    }
    if (!have_state) throw EngineError("tau0_step: no admissible next point");
    res.next = std::move(best_state);
    res.after = best_gamma;
    if (res.after && gamma_compare(*res.after, res.before) >= 0)
        throw DecreaseViolation("gamma did not strictly decrease: " +
                                res.before.str() + " -> " + res.after->str());
    return res;
}

Tau0Chain tau0_resolve(const Tau0State& st, int max_steps) {
    Tau0Chain chain;
    Tau0State cur = st;
    for (int i = 0; i < max_steps; ++i) {
        if (!gamma_opt(cur)) {
            chain.final_state = cur;
            return chain;
        }
        Tau0StepResult step = tau0_step(cur);
        cur = step.next;
        chain.steps.push_back(std::move(step));
    }
    throw EngineError("tau0_resolve: step budget exhausted");
}

// --------------------------------------------------------------- tau = 2

bool tau2_in_support(const Tau2State& st) {
    for (int64_t i = 1; i <= st.pe1(); ++i) {
        Ord o = ord_origin(st.h1_coeffs[i - 1]);
        if (o && *o < i) return false;
    }
    for (int64_t i = 1; i <= st.pe2(); ++i) {
        Ord o = uni_ord(st.h2_coeffs[i - 1]);
        if (o && *o < i) return false;
    }
    return st.alpha >= st.level;
}

Tau2StepResult tau2_step(const Tau2State& st) {
    Tau2StepResult res;
    if (!tau2_in_support(st)) {
        res.kind = Tau2StepResult::Kind::Done;
        res.next = st;
        return res;
    }
    const FieldSpec* spec = st.field.get();
    Tau2State next = st;
    next.alpha = st.alpha - st.level;

    // chart (x, y/x, z/x): substitute y -> x*y, divide the i-th coefficient
    // by x^i; h2's coefficients live in k[x] and just shift down
    for (int64_t i = 1; i <= st.pe1(); ++i)
        next.h1_coeffs[i - 1] = divide_exact(
            subst_point_chart_x(st.h1_coeffs[i - 1], FieldElement::zero(spec)),
            i, 0);
    for (int64_t i = 1; i <= st.pe2(); ++i) {
        BiPoly lifted = uni_to_bipoly(st.h2_coeffs[i - 1], Axis::X);
        next.h2_coeffs[i - 1] = bipoly_to_uni(divide_exact(lifted, i, 0), Axis::X);
    }

    // order gates
    for (int64_t i = 1; i <= st.pe2(); ++i) {
        Ord o = uni_ord(next.h2_coeffs[i - 1]);
        if (o && *o < i) {
            res.kind = Tau2StepResult::Kind::Done;
            res.next = st;
            return res;
        }
    }
    for (int64_t i = 1; i <= st.pe1(); ++i) {
        Ord o = ord_origin(next.h1_coeffs[i - 1]);
        if (o && *o < i) {
            res.kind = Tau2StepResult::Kind::Done;
            res.next = st;
            return res;
        }
    }

    // second element first: its initial form (in x,y) must be the p^{e2}-th
    // power of a linear form with unit y-part; normalize y and push the
    // shift through the first element's coefficient ring
    {
        std::vector<BiPoly::Term> terms;
        terms.push_back({Exp2{0, st.pe2()}, FieldElement::one(spec)});
        for (int64_t i = 1; i <= st.pe2(); ++i)
            for (const auto& t : uni_to_bipoly(next.h2_coeffs[i - 1], Axis::X).terms())
                terms.push_back({Exp2{t.first.x, st.pe2() - i}, t.second});
        BiPoly h2 = BiPoly::from_terms(spec, std::move(terms));
        BiPoly in2 = initial_form_origin(h2);
        auto root = is_pe_power(in2, st.e2);
        if (!root) {
            res.kind = Tau2StepResult::Kind::SigmaDrop;
            res.drop_element = 2;
            for (int ep = st.e2 - 1; ep >= 0; --ep)
                if (is_pe_power(in2, ep)) {
                    res.drop_e = ep;
                    break;
                }
            res.next = st;
            return res;
        }
        // root = y + c*x; shift y = y' - c*x
        FieldElement c = FieldElement::zero(spec);
        for (const auto& t : root->terms()) {
            if (t.first == Exp2{0, 1}) continue;
            if (t.first == Exp2{1, 0})
                c = t.second;
            else
                throw EngineError("tau2_step: unexpected root shape for h2");
        }
        if (!c.is_zero()) {
            BiPoly w = BiPoly::monomial(spec, 1, 0, c);
            // h2 coefficients: Weierstrass shift in its own monic variable;
            // the shift formula only sees the coefficient list and w
            std::vector<BiPoly> lifted;
            for (auto& u : next.h2_coeffs) lifted.push_back(uni_to_bipoly(u, Axis::X));
            std::vector<BiPoly> shifted = shift_weierstrass(lifted, w, spec->p);
            for (int64_t i = 1; i <= st.pe2(); ++i)
                next.h2_coeffs[i - 1] = bipoly_to_uni(shifted[i - 1], Axis::X);
            // h1 coefficients: substitute y -> y - c*x
            BiPoly gx = BiPoly::monomial(spec, 1, 0, FieldElement::one(spec));
            BiPoly gy = add(BiPoly::monomial(spec, 0, 1, FieldElement::one(spec)),
                            BiPoly::monomial(spec, 1, 0, ff_neg(c)));
            for (auto& b : next.h1_coeffs) b = compose(b, gx, gy);
        }
    }

    // first element: trivariate initial form must be a p^{e1}-th power
    {
        std::vector<TriPoly::Term> terms;
        terms.push_back({Exp3{0, 0, st.pe1()}, FieldElement::one(spec)});
        for (int64_t i = 1; i <= st.pe1(); ++i)
            for (const auto& t : next.h1_coeffs[i - 1].terms())
                terms.push_back({Exp3{t.first.x, t.first.y, st.pe1() - i}, t.second});
        TriPoly h1 = TriPoly::from_terms(spec, std::move(terms));
        SigmaStatus sst = sigma_status(h1, st.e1);
        if (!sst.same) {
            res.kind = Tau2StepResult::Kind::SigmaDrop;
            res.drop_element = 1;
            res.drop_e = sst.e_prime;
            res.next = st;
            return res;
        }
        if (!sst.shift_w.is_zero())
            next.h1_coeffs = shift_weierstrass(next.h1_coeffs, sst.shift_w, spec->p);
    }

    ValidationResult v = validate(next);
    if (!v.ok) throw EngineError("tau2_step produced an invalid state: " + v.message);
    res.kind = Tau2StepResult::Kind::Step;
    res.next = std::move(next);
    return res;
}

Tau2Chain tau2_resolve(const Tau2State& st, int max_steps) {
    Tau2Chain chain;
    Tau2State cur = st;
    for (int i = 0; i < max_steps; ++i) {
        Tau2StepResult step = tau2_step(cur);
        switch (step.kind) {
            case Tau2StepResult::Kind::Done:
                chain.final_state = cur;
                return chain;
            case Tau2StepResult::Kind::SigmaDrop:
                chain.sigma_dropped = true;
                chain.drop_element = step.drop_element;
                chain.drop_e = step.drop_e;
                chain.final_state = cur;
                return chain;
            case Tau2StepResult::Kind::Step:
                ++chain.blowups;
                cur = std::move(step.next);
                break;
        }
    }
    throw EngineError("tau2_resolve: step budget exhausted");
}

}  // namespace monres
