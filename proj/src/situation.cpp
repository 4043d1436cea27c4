#include "monres/situation.hpp"

#include <sstream>

namespace monres {

int64_t Situation::pe() const {
    int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= field->p;
    return q;
}

std::string Situation::canonical_key() const {
    // Ages enter behavior only through their relative order (tie-breaking
    // picks the younger divisor), so the key records that order, not the
    // raw stamps; step_count is likewise immaterial.
    std::ostringstream os;
    os << field->p << "," << field->m << ";";
    for (auto c : field->modulus) os << c << ".";
    os << "|e" << e << "|m" << alpha << "," << beta << "," << level;
    os << "|dx" << div_x.present << "|dy" << div_y.present;
    if (div_x.present && div_y.present)
        os << "|yx" << (div_x.age < div_y.age ? "<" : ">");
    os << "|";
    for (const auto& a : coeffs) {
        for (const auto& t : a.terms()) {
            os << t.first.x << "," << t.first.y << ":";
            for (uint32_t i = 0; i < field->m; ++i) os << t.second.coeff(i) << ".";
        }
        os << ";";
    }
    return os.str();
}

std::pair<uint64_t, uint64_t> Situation::canonical_fingerprint() const {
    // two independent mix streams over the same canonical data as
    // canonical_key(), without materializing the string
    uint64_t a = 1469598103934665603ull;
    uint64_t b = 0x2545f4914f6cdd1dull;
    auto feed = [&a, &b](uint64_t v) {
        a = (a ^ v) * 1099511628211ull;
        a ^= a >> 33;
        b = (b + v) * 0x9e3779b97f4a7c15ull;
        b ^= b >> 29;
    };
    feed(field->p);
    feed(field->m);
    for (auto c : field->modulus) feed(c);
    feed(static_cast<uint64_t>(e));
    feed(static_cast<uint64_t>(alpha));
    feed(static_cast<uint64_t>(beta));
    feed(static_cast<uint64_t>(level));
    feed(div_x.present ? 1 : 0);
    feed(div_y.present ? 2 : 0);
    if (div_x.present && div_y.present) feed(div_x.age < div_y.age ? 3 : 4);
    for (const auto& coeff : coeffs) {
        feed(0xabcdull);
        for (const auto& t : coeff.terms()) {
            feed(static_cast<uint64_t>(t.first.x));
            feed(static_cast<uint64_t>(t.first.y));
            for (uint32_t i = 0; i < field->m; ++i) feed(t.second.coeff(i));
        }
    }
    return {a, b};
}

ValidationResult validate(const Situation& s) {
    auto fail = [](std::string msg) { return ValidationResult{false, std::move(msg)}; };
    if (!s.field) return fail("no field");
    if (s.e < 0) return fail("e must be >= 0");
    int64_t pe = s.pe();
    if (pe > 512) return fail("p^e too large for this engine (cap 512)");
    if (static_cast<int64_t>(s.coeffs.size()) != pe)
        return fail("coefficient list must have length p^e = " + std::to_string(pe));
    if (s.level < 1) return fail("monomial level must be positive");
    if (s.alpha < 0 || s.beta < 0) return fail("monomial exponents must be >= 0");
    for (int64_t i = 1; i <= pe; ++i) {
        const BiPoly& a = s.coeffs[i - 1];
        if (a.spec() != s.spec()) return fail("coefficient field mismatch");
        Ord o = ord_origin(a);
        if (o && *o <= i)
            return fail("ord_P(a_" + std::to_string(i) + ") = " + std::to_string(*o) +
                        " <= " + std::to_string(i));
    }
    // ceil-divisibility for i = 1..p^e - 1
    for (int64_t i = 1; i < pe; ++i) {
        const BiPoly& a = s.coeffs[i - 1];
        if (a.is_zero()) continue;
        int64_t need_x = (s.alpha * i + s.level - 1) / s.level;
        int64_t need_y = (s.beta * i + s.level - 1) / s.level;
        if (*val_axis(a, Axis::X) < need_x)
            return fail("x^" + std::to_string(need_x) + " does not divide a_" +
                        std::to_string(i));
        if (*val_axis(a, Axis::Y) < need_y)
            return fail("y^" + std::to_string(need_y) + " does not divide a_" +
                        std::to_string(i));
    }
    if (s.alpha > 0 && !s.div_x.present)
        return fail("alpha > 0 requires the x-divisor to be present");
    if (s.beta > 0 && !s.div_y.present)
        return fail("beta > 0 requires the y-divisor to be present");
    if (s.div_x.present && s.div_y.present && s.div_x.age == s.div_y.age)
        return fail("divisor ages collide; tie-breaking needs distinct ages");
    return {};
}

void require_valid(const Situation& s) {
    ValidationResult r = validate(s);
    if (!r.ok) throw ValidationError("invalid state: " + r.message);
}

std::string loc_name(Loc l) {
    switch (l) {
        case Loc::P: return "P";
        case Loc::XiX: return "xi_x";
        case Loc::XiY: return "xi_y";
    }
    return "?";
}

Rat mu(const Situation& s, Loc at) {
    switch (at) {
        case Loc::P: return Rat(s.alpha + s.beta, s.level);
        case Loc::XiX: return Rat(s.alpha, s.level);
        case Loc::XiY: return Rat(s.beta, s.level);
    }
    return Rat(0);
}

bool in_support(const Situation& s) {
    int64_t pe = s.pe();
    for (int64_t i = 1; i <= pe; ++i) {
        Ord o = ord_origin(s.coeffs[i - 1]);
        if (o && *o < i) return false;
    }
    Ord otop = ord_origin(s.a_top());
    if (otop && *otop < pe) return false;
    return mu(s, Loc::P) >= Rat(1);
}

TriPoly weierstrass_poly(const Situation& s) {
    int64_t pe = s.pe();
    std::vector<TriPoly::Term> terms;
    terms.push_back({Exp3{0, 0, pe}, FieldElement::one(s.spec())});
    for (int64_t i = 1; i <= pe; ++i)
        for (const auto& t : s.coeffs[i - 1].terms())
            terms.push_back({Exp3{t.first.x, t.first.y, pe - i}, t.second});
    return TriPoly::from_terms(s.spec(), std::move(terms));
}

std::vector<BiPoly> shift_weierstrass(const std::vector<BiPoly>& coeffs,
                                      const BiPoly& w, uint32_t p) {
    const int64_t n = static_cast<int64_t>(coeffs.size());
    const FieldSpec* spec = w.spec();
    BiPoly neg_w = neg(w);
    // powers of (-w) up to n
    std::vector<BiPoly> wpow;
    wpow.push_back(BiPoly::constant(spec, FieldElement::one(spec)));
    for (int64_t i = 1; i <= n; ++i) wpow.push_back(mul(wpow.back(), neg_w));

    std::vector<BiPoly> out;
    out.reserve(n);
    for (int64_t k = 1; k <= n; ++k) {
        // j = 0 contribution: binom(n, k) (-w)^k
        BiPoly acc = BiPoly::zero(spec);
        uint64_t b0 = binom_mod_p(static_cast<uint64_t>(n),
                                  static_cast<uint64_t>(k), p);
        if (b0 != 0)
            acc = add(acc, mul_scalar(wpow[k],
                                      FieldElement::from_int(spec, b0)));
        for (int64_t j = 1; j <= k; ++j) {
            if (coeffs[j - 1].is_zero()) continue;
            uint64_t b = binom_mod_p(static_cast<uint64_t>(n - j),
                                     static_cast<uint64_t>(k - j), p);
            if (b == 0) continue;
            BiPoly term = mul(coeffs[j - 1], wpow[k - j]);
            if (b != 1)
                term = mul_scalar(term, FieldElement::from_int(spec, b));
            acc = add(acc, term);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

Situation with_shifted_z(const Situation& s, const BiPoly& w) {
    Situation r = s;
    r.coeffs = shift_weierstrass(s.coeffs, w, s.field->p);
    return r;
}

// --------------------------------------------------------- side variants

int Tau0State::next_id() const {
    int best = 0;
    for (const auto& c : components) best = std::max(best, c.id);
    return best + 1;
}

ValidationResult validate(const Tau0State& st) {
    auto fail = [](std::string msg) { return ValidationResult{false, std::move(msg)}; };
    if (st.level < 1) return fail("level must be positive");
    for (const auto& c : st.components) {
        if (c.multiplicity < 1) return fail("component multiplicities must be positive");
    }
    for (size_t i = 0; i < st.components.size(); ++i)
        for (size_t j = i + 1; j < st.components.size(); ++j)
            if (st.components[i].id == st.components[j].id)
                return fail("duplicate component id " +
                            std::to_string(st.components[i].id));
    return {};
}

int64_t Tau2State::pe1() const {
    int64_t q = 1;
    for (int i = 0; i < e1; ++i) q *= field->p;
    return q;
}

int64_t Tau2State::pe2() const {
    int64_t q = 1;
    for (int i = 0; i < e2; ++i) q *= field->p;
    return q;
}

ValidationResult validate(const Tau2State& st) {
    auto fail = [](std::string msg) { return ValidationResult{false, std::move(msg)}; };
    if (!st.field) return fail("no field");
    if (st.e1 < 0 || st.e2 < 0 || st.e1 > st.e2) return fail("need 0 <= e1 <= e2");
    if (st.level < 1) return fail("monomial level must be positive");
    if (st.alpha < 0) return fail("alpha must be >= 0");
    if (static_cast<int64_t>(st.h1_coeffs.size()) != st.pe1())
        return fail("h1 coefficient list must have length p^e1");
    if (static_cast<int64_t>(st.h2_coeffs.size()) != st.pe2())
        return fail("h2 coefficient list must have length p^e2");
    for (int64_t i = 1; i <= st.pe1(); ++i) {
        Ord o = ord_origin(st.h1_coeffs[i - 1]);
        if (o && *o <= i)
            return fail("ord(h1 coefficient " + std::to_string(i) + ") <= " +
                        std::to_string(i));
    }
    for (int64_t i = 1; i <= st.pe2(); ++i) {
        Ord o = uni_ord(st.h2_coeffs[i - 1]);
        if (o && *o <= i)
            return fail("ord(h2 coefficient " + std::to_string(i) + ") <= " +
                        std::to_string(i));
    }
    return {};
}

}  // namespace monres
