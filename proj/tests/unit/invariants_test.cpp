#include "doctest.h"
#include "monres/invariants.hpp"

#include "../support/generators.hpp"

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

InvMon make_inv(int config, std::vector<Rat> tuple) {
    InvMon v;
    v.config = config;
    v.tuple = std::move(tuple);
    return v;
}

}  // namespace

TEST_CASE("divisor and point classification") {
    // H(xi_x) = 3/2 < mu_x = 2: bad
    Situation s = base_p2e1(P(F2.get(), {{3, 2}}), 4, 2, 2);
    CHECK(classify_divisor(s, Axis::X) == GoodBad::Bad);
    // H(xi_y) = min{1, 1} = 1 = mu_y: good
    CHECK(classify_divisor(s, Axis::Y) == GoodBad::Good);
    // H(P) = 5/2 < 3: bad point
    CHECK(classify_point(s) == GoodBad::Bad);

    Situation z = base_p2e1(BiPoly::zero(F2.get()), 4, 2, 2);
    CHECK(classify_divisor(z, Axis::X) == GoodBad::Good);
    CHECK(classify_divisor(z, Axis::Y) == GoodBad::Good);
    CHECK(classify_point(z) == GoodBad::Good);
}

TEST_CASE("rho from the divisor slice") {
    // a_2 = x y^3, r = 1 odd: rho = ord(y^3)/2
    Situation s1 = base_p2e1(P(F2.get(), {{1, 3}}), 2, 0, 1);
    CHECK(rho(s1, Axis::X) == Rat(3, 2));
    // a_2 = x^2(y^2 + y^3), r = 2 even: rho = res_ord(y^2+y^3)/2 = 3/2
    Situation s2 = base_p2e1(P(F2.get(), {{2, 2}, {2, 3}}), 4, 4, 2);
    CHECK(rho(s2, Axis::X) == Rat(3, 2));
    // a_2 = x^3, r = 3 odd, g = 1: rho = 0
    Situation s3 = base_p2e1(P(F2.get(), {{3, 0}}), 4, 0, 2);
    CHECK(rho(s3, Axis::X) == Rat(0));
    // rho is undefined on a good divisor
    Situation good = base_p2e1(BiPoly::zero(F2.get()), 4, 0, 2);
    CHECK_THROWS_AS(rho(good, Axis::X), EngineError);
}

TEST_CASE("configuration table") {
    // only x present, good
    CHECK(configuration(base_p2e1(BiPoly::zero(F2.get()), 4, 0, 2)).tag == 1);
    // only x present, bad
    CHECK(configuration(base_p2e1(P(F2.get(), {{3, 0}}), 4, 0, 2)).tag == 3);
    // x bad, y good
    Configuration c4 = configuration(base_p2e1(P(F2.get(), {{3, 2}}), 4, 2, 2));
    CHECK(c4.tag == 4);
    CHECK(c4.bad_axis == Axis::X);
    // both good
    CHECK(configuration(base_p2e1(BiPoly::zero(F2.get()), 4, 2, 2)).tag == 2);
    // both bad
    Situation c5 = base_p2e1(P(F2.get(), {{2, 3}, {4, 3}}), 4, 4, 2);
    CHECK(configuration(c5).tag == 5);
    // no divisor at all
    CHECK_THROWS_AS(configuration(base_p2e1(P(F2.get(), {{0, 3}}), 0, 0, 1)),
                    EngineError);
}

TEST_CASE("inv_mon tuples per configuration") {
    // worked two-divisor instance: rho_x = 1, mu_x = 2 -> (1, 2)
    Situation s = base_p2e1(P(F2.get(), {{3, 2}, {3, 3}}), 4, 2, 2);
    InvMon v = inv_mon(s);
    CHECK(v.config == 4);
    CHECK(v.tuple == std::vector<Rat>{Rat(1), Rat(2)});

    // lone good divisor: (0, 0, mu)
    Situation c1 = base_p2e1(BiPoly::zero(F2.get()), 3, 0, 2);
    CHECK(inv_mon(c1).tuple == std::vector<Rat>{Rat(0), Rat(0), Rat(3, 2)});

    // two bad divisors with rho_x = 3/2, rho_y = 1 -> (1, 3/2)
    Situation c5 = base_p2e1(P(F2.get(), {{2, 3}, {4, 3}}), 4, 4, 2);
    CHECK(rho(c5, Axis::X) == Rat(3, 2));
    CHECK(rho(c5, Axis::Y) == Rat(1));
    CHECK(inv_mon(c5).tuple == std::vector<Rat>{Rat(1), Rat(3, 2)});
}

TEST_CASE("lexicographic comparison with -infinity padding") {
    InvMon a = make_inv(4, {Rat(1), Rat(2)});
    InvMon b = make_inv(3, {Rat(3, 2), Rat(0), Rat(2)});
    InvMonCmp c = inv_mon_compare(a, b);
    CHECK(c.cmp < 0);
    CHECK(c.deciding_index == 0);
    CHECK(c.index_in_both);

    CHECK(!inv_mon_less(a, a));  // irreflexive

    InvMon s = make_inv(1, {Rat(0), Rat(0), Rat(1)});
    InvMon t = make_inv(2, {Rat(0), Rat(0), Rat(1), Rat(5)});
    InvMonCmp c2 = inv_mon_compare(s, t);
    CHECK(c2.cmp < 0);  // shorter is smaller under padding
    CHECK(c2.deciding_index == 3);
    CHECK(!c2.index_in_both);
}

TEST_CASE("the comparison is a strict total order on random tuples") {
    testgen::Rng rng(97);
    auto random_inv = [&rng]() {
        InvMon v;
        v.config = static_cast<int>(rng.uniform(1, 5));
        int len = static_cast<int>(rng.uniform(2, 4));
        for (int i = 0; i < len; ++i)
            v.tuple.push_back(Rat(rng.uniform(0, 6), rng.uniform(1, 4)));
        return v;
    };
    for (int i = 0; i < 2000; ++i) {
        InvMon a = random_inv(), b = random_inv(), c = random_inv();
        // trichotomy
        int ab = inv_mon_compare(a, b).cmp;
        int ba = inv_mon_compare(b, a).cmp;
        CHECK(ab == -ba);
        // transitivity
        if (inv_mon_less(a, b) && inv_mon_less(b, c)) CHECK(inv_mon_less(a, c));
        // irreflexivity
        CHECK(!inv_mon_less(a, a));
        // equality agrees with tuple equality
        if (ab == 0) CHECK(a.tuple == b.tuple);
    }
}

TEST_CASE("rho is invariant under shape-preserving re-coordinations") {
    testgen::Rng rng(83);
    int done = 0;
    while (done < 40) {
        testgen::SituationOptions opt;
        opt.p = 2;
        opt.e = 1;
        Situation s = testgen::random_situation(rng, opt);
        Situation c = clean(s).result;
        for (Axis axis : {Axis::X, Axis::Y}) {
            const DivisorInfo& d = axis == Axis::X ? c.div_x : c.div_y;
            if (!d.present || classify_divisor(c, axis) != GoodBad::Bad) continue;
            Rat r = rho(c, axis);
            for (int k = 0; k < 5; ++k) {
                BiPoly w = testgen::random_recoordination(rng, c);
                Situation t = clean(with_shifted_z(c, w)).result;
                CHECK(classify_divisor(t, axis) == GoodBad::Bad);
                CHECK(rho(t, axis) == r);
            }
            ++done;
        }
    }
}
