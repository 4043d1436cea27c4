#include <sstream>

#include "doctest.h"
#include "monres/driver.hpp"
#include "monres/trace.hpp"

#include "../support/generators.hpp"
#include "../support/oracles.hpp"

using namespace monres;

namespace {

FieldSpecPtr F2 = FieldSpec::make(2, 1);

BiPoly P(const FieldSpec* f, std::initializer_list<std::pair<int, int>> exps) {
    std::vector<BiPoly::Term> terms;
    for (auto [i, j] : exps)
        terms.push_back({Exp2{i, j}, FieldElement::one(f)});
    return BiPoly::from_terms(f, std::move(terms));
}

Situation base_p2e1(BiPoly a2, long long alpha, long long beta, long long level) {
    Situation s;
    s.field = F2;
    s.e = 1;
    s.coeffs = {BiPoly::zero(F2.get()), std::move(a2)};
    s.alpha = alpha;
    s.beta = beta;
    s.level = level;
    s.div_x = {alpha > 0, 0};
    s.div_y = {beta > 0, 1};
    return s;
}

Tau0State tau0(long long level, std::vector<long long> mults) {
    Tau0State st;
    st.level = level;
    int id = 1;
    for (long long m : mults) st.components.push_back({id++, m, true});
    return st;
}

void check_leaves(const TraceNode& node) {
    if (node.children.empty()) {
        CHECK(!node.depth_capped);
        return;
    }
    for (const auto& c : node.children)
        if (c.node) check_leaves(*c.node);
}

}  // namespace

TEST_CASE("center choice follows the procedure") {
    // both curves, mu_x = 2 > mu_y = 1: the x-curve goes first
    Situation s = base_p2e1(P(F2.get(), {{3, 2}}), 4, 2, 2);
    CHECK(choose_center(s).kind == Center::Kind::CurveX);

    // tie on mu: the younger divisor (larger age) wins
    Situation t = base_p2e1(BiPoly::zero(F2.get()), 2, 2, 2);
    CHECK(choose_center(t).kind == Center::Kind::CurveY);
    t.div_x.age = 5;
    CHECK(choose_center(t).kind == Center::Kind::CurveX);

    // isolated point
    Situation u = base_p2e1(P(F2.get(), {{1, 3}}), 2, 0, 2);
    CHECK(choose_center(u).kind == Center::Kind::Point);
}

TEST_CASE("resolving the worked two-divisor instance") {
    Situation s = base_p2e1(P(F2.get(), {{3, 2}, {3, 3}}), 4, 2, 2);
    ResolveResult r = resolve(s);
    REQUIRE(r.root);
    CHECK(r.root->inv.inv->config == 4);
    CHECK(r.root->inv.inv->tuple == std::vector<Rat>{Rat(1), Rat(2)});
    CHECK(r.root->center->kind == Center::Kind::CurveX);
    CHECK(r.stats.leaves_depth_cap == 0);
    CHECK(r.stats.leaves_sigma_drop == 0);
    CHECK(r.stats.leaves_not_in_support > 0);
    check_leaves(*r.root);
    // the first successor lives on the other curve
    REQUIRE(r.root->children.size() == 1);
    REQUIRE(r.root->children[0].node);
    CHECK(*r.root->children[0].node->inv.shape == SupportShape::CurveY);
}

TEST_CASE("trace emission is byte-deterministic") {
    Situation s = base_p2e1(P(F2.get(), {{3, 2}, {3, 3}}), 4, 2, 2);
    std::ostringstream a, b;
    emit_trace(resolve(s), a);
    emit_trace(resolve(s), b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("\"event\":\"manifest\"") != std::string::npos);
}

TEST_CASE("a zero-coefficient chain walks the monomial down and out") {
    Situation s = base_p2e1(BiPoly::zero(F2.get()), 3, 1, 2);
    ResolveResult r = resolve(s);
    CHECK(r.stats.leaves_sigma_drop == 0);
    CHECK(r.stats.leaves_depth_cap == 0);
    CHECK(r.stats.nodes > 1);
    // every leaf left the support
    CHECK(r.stats.leaves_not_in_support > 0);
}

TEST_CASE("a degenerating instance ends in a level-drop leaf") {
    Situation s = base_p2e1(P(F2.get(), {{2, 1}}), 1, 1, 2);
    ResolveResult r = resolve(s);
    CHECK(r.stats.leaves_sigma_drop > 0);
}

TEST_CASE("resolution trees over random instances terminate cleanly") {
    testgen::Rng rng(307);
    for (int i = 0; i < 60; ++i) {
        testgen::SituationOptions opt;
        opt.p = rng.coin() ? 2 : 3;
        opt.e = opt.p == 2 ? static_cast<int>(rng.uniform(0, 2)) : 1;
        opt.need_support = true;
        Situation s = testgen::random_situation(rng, opt);
        ResolveResult r = resolve(s);  // decrease asserted internally
        CHECK(r.stats.leaves_depth_cap == 0);
    }
}

TEST_CASE("gamma on the worked examples") {
    GammaValue g1 = gamma(tau0(4, {2, 3}));
    CHECK(g1.g1 == -2);
    CHECK(g1.g2 == Rat(5, 4));
    CHECK(g1.g3 == std::vector<int>{1, 2});

    GammaValue g2 = gamma(tau0(4, {5}));
    CHECK(g2.g1 == -1);
    CHECK(g2.g2 == Rat(5, 4));
    CHECK(g2.g3 == std::vector<int>{1});

    GammaValue g3 = gamma(tau0(4, {4}));
    CHECK(g3.g1 == -1);
    CHECK(g3.g2 == Rat(1));
    CHECK(g3.g3 == std::vector<int>{1});

    CHECK_THROWS_AS(gamma(tau0(4, {1, 1})), ValidationError);
}

TEST_CASE("one divisor-only step") {
    Tau0StepResult r = tau0_step(tau0(4, {2, 3}));
    // exceptional multiplicity 2 + 3 - 4 = 1
    bool found = false;
    for (const auto& c : r.next.components)
        if (c.id == 3) {
            found = true;
            CHECK(c.multiplicity == 1);
            CHECK(c.through_point);
        }
    CHECK(found);
    REQUIRE(r.after.has_value());
    CHECK(gamma_compare(*r.after, r.before) < 0);

    // multiplicity exactly the level: the exceptional component vanishes
    Tau0StepResult r2 = tau0_step(tau0(4, {4}));
    CHECK(!r2.after.has_value());
    for (const auto& c : r2.next.components) CHECK(!(c.id == 2 && c.multiplicity > 0));
}

TEST_CASE("divisor-only chains terminate with the oracle in agreement") {
    Tau0Chain chain = tau0_resolve(tau0(4, {2, 3}));
    CHECK(!chain.steps.empty());
    CHECK(!gamma_opt(chain.final_state).has_value());

    testgen::Rng rng(401);
    for (int i = 0; i < 50; ++i) {
        Tau0State st;
        st.level = rng.uniform(1, 8);
        int n = static_cast<int>(rng.uniform(1, 6));
        for (int k = 0; k < n; ++k)
            st.components.push_back({k + 1, rng.uniform(1, 8), rng.coin(0.8)});
        CHECK(gamma_opt(st).has_value() ==
              testoracle::gamma_by_enumeration(st).has_value());
        if (!gamma_opt(st)) continue;
        Tau0Chain c = tau0_resolve(st);
        // oracle agreement at the start and after every step
        CHECK(gamma_compare(*testoracle::gamma_by_enumeration(st), gamma(st)) == 0);
        for (const auto& step : c.steps) {
            auto oracle = testoracle::gamma_by_enumeration(step.next);
            auto engine = gamma_opt(step.next);
            CHECK(oracle.has_value() == engine.has_value());
            if (oracle) CHECK(gamma_compare(*oracle, *engine) == 0);
        }
    }
}

TEST_CASE("two-element chains count alpha down by the level") {
    Tau2State st;
    st.field = F2;
    st.e1 = 1;
    st.e2 = 1;
    st.h1_coeffs = {BiPoly::zero(F2.get()), BiPoly::zero(F2.get())};
    st.h2_coeffs = {UniPoly::zero(F2.get()), UniPoly::zero(F2.get())};
    st.alpha = 6;
    st.level = 2;
    REQUIRE(validate(st).ok);
    Tau2Chain chain = tau2_resolve(st);
    CHECK(chain.blowups == 3);
    CHECK(!chain.sigma_dropped);

    st.alpha = 1;
    Tau2Chain at_once = tau2_resolve(st);
    CHECK(at_once.blowups == 0);
}

TEST_CASE("two-element chains can end in a level drop") {
    Tau2State st;
    st.field = F2;
    st.e1 = 1;
    st.e2 = 1;
    st.h1_coeffs = {BiPoly::zero(F2.get()), P(F2.get(), {{2, 1}})};
    st.h2_coeffs = {UniPoly::zero(F2.get()), UniPoly::zero(F2.get())};
    st.alpha = 4;
    st.level = 2;
    REQUIRE(validate(st).ok);
    Tau2Chain chain = tau2_resolve(st);
    CHECK(chain.sigma_dropped);
    CHECK(chain.drop_element == 1);
    CHECK(chain.drop_e == 0);
}

TEST_CASE("resolution over an extension field") {
    // the worked instance with coefficient t over F_4
    auto f4 = FieldSpec::make(2, 2);
    FieldElement t = FieldElement::from_coeffs(f4.get(), {0, 1});
    Situation s;
    s.field = f4;
    s.e = 1;
    s.coeffs = {BiPoly::zero(f4.get()),
                add(BiPoly::monomial(f4.get(), 3, 2, t),
                    BiPoly::monomial(f4.get(), 3, 3, FieldElement::one(f4.get())))};
    s.alpha = 4;
    s.beta = 2;
    s.level = 2;
    s.div_x = {true, 0};
    s.div_y = {true, 1};
    REQUIRE(validate(s).ok);
    ResolveResult r = resolve(s);
    CHECK(r.stats.leaves_depth_cap == 0);
    CHECK(r.stats.nodes > 1);
    // point blow-ups over F_4 enumerate all four translations plus the far chart
    std::ostringstream os;
    emit_trace(r, os);
    CHECK(os.str().find("manifest") != std::string::npos);
}

TEST_CASE("a characteristic-three chain followed by hand") {
    // h = z^3 + x^4 y^4 with monomial (3,3,3): both curves, equal mu, so the
    // younger divisor (y) goes first; its exponent drops to zero, then the
    // x-curve empties the support
    auto f3 = FieldSpec::make(3, 1);
    Situation s;
    s.field = f3;
    s.e = 1;
    s.coeffs = {BiPoly::zero(f3.get()), BiPoly::zero(f3.get()),
                BiPoly::monomial(f3.get(), 4, 4, FieldElement::one(f3.get()))};
    s.alpha = 3;
    s.beta = 3;
    s.level = 3;
    s.div_x = {true, 0};
    s.div_y = {true, 1};
    REQUIRE(validate(s).ok);
    REQUIRE(clean(s).steps.empty());
    CHECK(classify_point(s) == GoodBad::Good);
    CHECK(choose_center(s).kind == Center::Kind::CurveY);

    ResolveResult r = resolve(s);
    // out-of-support candidates are edge leaves, not nodes
    CHECK(r.stats.nodes == 2);
    CHECK(r.stats.successor_edges == 1);
    CHECK(r.stats.leaves_not_in_support == 1);
    CHECK(r.stats.leaves_sigma_drop == 0);
    CHECK(r.stats.max_depth == 1);

    const TraceNode& child = *r.root->children[0].node;
    CHECK(child.state.beta == 0);
    CHECK(child.state.div_y.present);  // still a boundary divisor, exponent 0
    CHECK(child.state.a_top() ==
          BiPoly::monomial(f3.get(), 4, 1, FieldElement::one(f3.get())));
    CHECK(child.inv.inv->config == 2);
    CHECK(child.inv.inv->tuple ==
          std::vector<Rat>{Rat(0), Rat(0), Rat(0), Rat(1)});
    CHECK(*child.inv.shape == SupportShape::CurveX);
    REQUIRE(child.children.size() == 1);
    CHECK(child.children[0].outcome.kind == BlowupOutcome::Kind::NotInSupport);
    CHECK(!child.children[0].node);
}
