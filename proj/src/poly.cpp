#include "monres/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace monres {

namespace {

void check_exponent(int64_t e) {
    if (e < 0 || e > kMaxExponent)
        throw EngineError("polynomial exponent out of range: " + std::to_string(e));
}

}  // namespace

namespace {
// n, k < p prime: binomial via factorial quotients mod p
uint64_t binom_digit_mod_p(uint64_t n, uint64_t k, uint32_t p) {
    if (k > n) return 0;
    uint64_t num = 1, den = 1;
    for (uint64_t i = 0; i < k; ++i) {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return num * inv % p;
}
}  // namespace

uint64_t binom_mod_p(uint64_t n, uint64_t k, uint32_t p) {
    if (k > n) return 0;
    // Lucas: product of base-p digit binomials
    uint64_t result = 1;
    while ((n > 0 || k > 0) && result != 0) {
        uint64_t nd = n % p, kd = k % p;
        result = result * binom_digit_mod_p(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    return result;
}

// ------------------------------------------------------------------ BiPoly

BiPoly BiPoly::constant(const FieldSpec* spec, const FieldElement& c) {
    return monomial(spec, 0, 0, c);
}

BiPoly BiPoly::monomial(const FieldSpec* spec, int64_t i, int64_t j,
                        const FieldElement& c) {
    check_exponent(i);
    check_exponent(j);
    BiPoly f(spec);
    if (!c.is_zero()) f.terms_.push_back({Exp2{i, j}, c});
    return f;
}

BiPoly BiPoly::from_terms(const FieldSpec* spec, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    BiPoly f(spec);
    f.terms_.reserve(terms.size());
    for (auto& t : terms) {
        check_exponent(t.first.x);
        check_exponent(t.first.y);
        if (!f.terms_.empty() && f.terms_.back().first == t.first) {
            f.terms_.back().second = ff_add(f.terms_.back().second, t.second);
            if (f.terms_.back().second.is_zero()) f.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            f.terms_.push_back(std::move(t));
        }
    }
    return f;
}

std::string BiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (!(c.is_one()) || (e.x == 0 && e.y == 0)) {
            os << c.str();
            printed = true;
        }
        if (e.x > 0) {
            if (printed) os << "*";
            os << "x";
            if (e.x > 1) os << "^" << e.x;
            printed = true;
        }
        if (e.y > 0) {
            if (printed) os << "*";
            os << "y";
            if (e.y > 1) os << "^" << e.y;
        }
    }
    return os.str();
}

BiPoly add(const BiPoly& a, const BiPoly& b) {
    BiPoly r(a.spec_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        if (ia->first < ib->first) {
            r.terms_.push_back(*ia++);
        } else if (ib->first < ia->first) {
            r.terms_.push_back(*ib++);
        } else {
            FieldElement s = ff_add(ia->second, ib->second);
            if (!s.is_zero()) r.terms_.push_back({ia->first, s});
            ++ia;
            ++ib;
        }
    }
    r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
    r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
    return r;
}

BiPoly neg(const BiPoly& a) {
    BiPoly r = a;
    for (auto& t : r.terms_) t.second = ff_neg(t.second);
    return r;
}

BiPoly sub(const BiPoly& a, const BiPoly& b) { return add(a, neg(b)); }

BiPoly mul(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly::zero(a.spec_);
    std::vector<BiPoly::Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_)
            out.push_back({Exp2{ta.first.x + tb.first.x, ta.first.y + tb.first.y},
                           ff_mul(ta.second, tb.second)});
    return BiPoly::from_terms(a.spec_, std::move(out));
}

BiPoly mul_scalar(const BiPoly& a, const FieldElement& c) {
    if (c.is_zero()) return BiPoly::zero(a.spec());
    std::vector<BiPoly::Term> out;
    for (const auto& t : a.terms()) {
        FieldElement v = ff_mul(t.second, c);
        if (!v.is_zero()) out.push_back({t.first, v});
    }
    return BiPoly::from_terms(a.spec(), std::move(out));
}

BiPoly mul_monomial(const BiPoly& a, int64_t dx, int64_t dy) {
    std::vector<BiPoly::Term> out;
    out.reserve(a.terms().size());
    for (const auto& t : a.terms())
        out.push_back({Exp2{t.first.x + dx, t.first.y + dy}, t.second});
    return BiPoly::from_terms(a.spec(), std::move(out));
}

BiPoly pow(const BiPoly& a, uint64_t n) {
    BiPoly result = BiPoly::constant(a.spec(), FieldElement::one(a.spec()));
    BiPoly base = a;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        base = mul(base, base);
        n >>= 1;
    }
    return result;
}

Ord ord_origin(const BiPoly& f) {
    if (f.is_zero()) return std::nullopt;
    int64_t best = INT64_MAX;
    for (const auto& t : f.terms()) best = std::min(best, t.first.total());
    return best;
}

Ord val_axis(const BiPoly& f, Axis axis) {
    if (f.is_zero()) return std::nullopt;
    int64_t best = INT64_MAX;
    for (const auto& t : f.terms())
        best = std::min(best, axis == Axis::X ? t.first.x : t.first.y);
    return best;
}

BiPoly initial_form_origin(const BiPoly& f) {
    if (f.is_zero()) throw EngineError("initial form of the zero polynomial");
    int64_t d = *ord_origin(f);
    std::vector<BiPoly::Term> out;
    for (const auto& t : f.terms())
        if (t.first.total() == d) out.push_back(t);
    return BiPoly::from_terms(f.spec(), std::move(out));
}

UniPoly slice_axis(const BiPoly& f, Axis axis, int64_t r) {
    std::vector<FieldElement> coeffs;
    for (const auto& t : f.terms()) {
        int64_t a = axis == Axis::X ? t.first.x : t.first.y;
        int64_t b = axis == Axis::X ? t.first.y : t.first.x;
        if (a != r) continue;
        if (static_cast<int64_t>(coeffs.size()) <= b)
            coeffs.resize(b + 1, FieldElement::zero(f.spec()));
        coeffs[b] = t.second;
    }
    return UniPoly::from_coeffs(f.spec(), std::move(coeffs));
}

std::pair<int64_t, UniPoly> initial_form_axis(const BiPoly& f, Axis axis) {
    if (f.is_zero()) throw EngineError("axis initial form of the zero polynomial");
    int64_t r = *val_axis(f, axis);
    return {r, slice_axis(f, axis, r)};
}

std::optional<BiPoly> is_pe_power(const BiPoly& f, int e) {
    int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= f.spec()->p;
    std::vector<BiPoly::Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        if (t.first.x % q != 0 || t.first.y % q != 0) return std::nullopt;
        out.push_back({Exp2{t.first.x / q, t.first.y / q}, ff_pe_root(t.second, e)});
    }
    return BiPoly::from_terms(f.spec(), std::move(out));
}

BiPoly divide_exact(const BiPoly& f, int64_t x_pow, int64_t y_pow) {
    std::vector<BiPoly::Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        if (t.first.x < x_pow || t.first.y < y_pow)
            throw EngineError("divide_exact: insufficient valuation (term x^" +
                              std::to_string(t.first.x) + " y^" +
                              std::to_string(t.first.y) + " / x^" +
                              std::to_string(x_pow) + " y^" +
                              std::to_string(y_pow) + ")");
        out.push_back({Exp2{t.first.x - x_pow, t.first.y - y_pow}, t.second});
    }
    return BiPoly::from_terms(f.spec(), std::move(out));
}

BiPoly compose(const BiPoly& f, const BiPoly& gx, const BiPoly& gy) {
    // cache powers of gx, gy up to the needed exponents
    std::map<int64_t, BiPoly> px, py;
    auto power_of = [](std::map<int64_t, BiPoly>& cache, const BiPoly& base,
                       int64_t n) -> const BiPoly& {
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        BiPoly v = pow(base, static_cast<uint64_t>(n));
        return cache.emplace(n, std::move(v)).first->second;
    };
    BiPoly acc = BiPoly::zero(f.spec());
    for (const auto& t : f.terms()) {
        BiPoly term = BiPoly::constant(f.spec(), t.second);
        if (t.first.x > 0) term = mul(term, power_of(px, gx, t.first.x));
        if (t.first.y > 0) term = mul(term, power_of(py, gy, t.first.y));
        acc = add(acc, term);
    }
    return acc;
}

BiPoly subst_point_chart_x(const BiPoly& f, const FieldElement& c) {
    // x^j y^k -> x^{j+k} (y + c)^k
    const FieldSpec* s = f.spec();
    std::vector<BiPoly::Term> out;
    for (const auto& t : f.terms()) {
        int64_t j = t.first.x, k = t.first.y;
        if (c.is_zero()) {
            out.push_back({Exp2{j + k, k}, t.second});
            continue;
        }
        // expand (y + c)^k
        FieldElement cpow = FieldElement::one(s);
        for (int64_t l = k; l >= 0; --l) {
            // coefficient of y^l: binom(k, l) c^{k-l}
            uint64_t b = binom_mod_p(static_cast<uint64_t>(k),
                                     static_cast<uint64_t>(l), s->p);
            if (l < k) cpow = ff_mul(cpow, c);
            if (b == 0) continue;
            FieldElement coef = ff_scale(ff_mul(t.second, cpow), b);
            if (!coef.is_zero()) out.push_back({Exp2{j + k, l}, coef});
        }
    }
    return BiPoly::from_terms(s, std::move(out));
}

BiPoly subst_point_chart_y(const BiPoly& f) {
    // x^j y^k -> x^j y^{j+k}
    std::vector<BiPoly::Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms())
        out.push_back({Exp2{t.first.x, t.first.x + t.first.y}, t.second});
    return BiPoly::from_terms(f.spec(), std::move(out));
}

BiPoly translate(const BiPoly& f, const FieldElement& x0, const FieldElement& y0) {
    const FieldSpec* s = f.spec();
    if (x0.is_zero() && y0.is_zero()) return f;
    BiPoly gx = BiPoly::from_terms(
        s, {{Exp2{1, 0}, FieldElement::one(s)}, {Exp2{0, 0}, x0}});
    BiPoly gy = BiPoly::from_terms(
        s, {{Exp2{0, 1}, FieldElement::one(s)}, {Exp2{0, 0}, y0}});
    return compose(f, gx, gy);
}

FieldElement evaluate(const BiPoly& f, const FieldElement& x0,
                      const FieldElement& y0) {
    FieldElement acc = FieldElement::zero(f.spec());
    for (const auto& t : f.terms()) {
        FieldElement v = t.second;
        if (t.first.x > 0) v = ff_mul(v, ff_pow(x0, t.first.x));
        if (t.first.y > 0) v = ff_mul(v, ff_pow(y0, t.first.y));
        acc = ff_add(acc, v);
    }
    return acc;
}

BiPoly hasse_derivative(const BiPoly& f, int64_t dx, int64_t dy) {
    std::vector<BiPoly::Term> out;
    out.reserve(f.terms().size());
    const uint32_t p = f.spec()->p;
    for (const auto& t : f.terms()) {
        if (t.first.x < dx || t.first.y < dy) continue;
        uint64_t b = binom_mod_p(t.first.x, dx, p) * binom_mod_p(t.first.y, dy, p) % p;
        if (b == 0) continue;
        out.push_back({Exp2{t.first.x - dx, t.first.y - dy}, ff_scale(t.second, b)});
    }
    return BiPoly::from_terms(f.spec(), std::move(out));
}

// ----------------------------------------------------------------- UniPoly

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::from_coeffs(const FieldSpec* spec,
                             std::vector<FieldElement> coeffs) {
    UniPoly f(spec);
    f.coeffs_ = std::move(coeffs);
    f.trim();
    return f;
}

FieldElement UniPoly::coeff(int64_t i) const {
    if (i < 0 || i >= static_cast<int64_t>(coeffs_.size()))
        return FieldElement::zero(spec_);
    return coeffs_[i];
}

std::string UniPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i].str() << "*t^" << i;
    }
    return os.str();
}

UniPoly uni_add(const UniPoly& a, const UniPoly& b) {
    UniPoly r(a.spec_);
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()),
                     FieldElement::zero(a.spec_));
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        FieldElement x = i < a.coeffs_.size() ? a.coeffs_[i] : FieldElement::zero(a.spec_);
        FieldElement y = i < b.coeffs_.size() ? b.coeffs_[i] : FieldElement::zero(a.spec_);
        r.coeffs_[i] = ff_add(x, y);
    }
    r.trim();
    return r;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
    UniPoly nb = b;
    for (auto& c : nb.coeffs_) c = ff_neg(c);
    return uni_add(a, nb);
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly::zero(a.spec_);
    UniPoly r(a.spec_);
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1,
                     FieldElement::zero(a.spec_));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] =
                ff_add(r.coeffs_[i + j], ff_mul(a.coeffs_[i], b.coeffs_[j]));
    }
    r.trim();
    return r;
}

UniPoly uni_scale(const UniPoly& a, const FieldElement& c) {
    if (c.is_zero()) return UniPoly::zero(a.spec());
    std::vector<FieldElement> coeffs = a.coeffs();
    for (auto& x : coeffs) x = ff_mul(x, c);
    return UniPoly::from_coeffs(a.spec(), std::move(coeffs));
}

UniPoly uni_make_monic(const UniPoly& a) {
    if (a.is_zero()) return a;
    return uni_scale(a, ff_inv(a.coeffs().back()));
}

Ord uni_ord(const UniPoly& f) {
    if (f.is_zero()) return std::nullopt;
    for (size_t i = 0; i < f.coeffs().size(); ++i)
        if (!f.coeffs()[i].is_zero()) return static_cast<int64_t>(i);
    return std::nullopt;
}

FieldElement uni_eval(const UniPoly& f, const FieldElement& x0) {
    FieldElement acc = FieldElement::zero(f.spec());
    for (size_t i = f.coeffs().size(); i-- > 0;)
        acc = ff_add(ff_mul(acc, x0), f.coeffs()[i]);
    return acc;
}

std::optional<UniPoly> uni_is_pe_power(const UniPoly& f, int e) {
    int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= f.spec()->p;
    std::vector<FieldElement> out;
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        if (static_cast<int64_t>(i) % q != 0) return std::nullopt;
        int64_t j = static_cast<int64_t>(i) / q;
        if (static_cast<int64_t>(out.size()) <= j)
            out.resize(j + 1, FieldElement::zero(f.spec()));
        out[j] = ff_pe_root(f.coeffs()[i], e);
    }
    return UniPoly::from_coeffs(f.spec(), std::move(out));
}

Ord res_ord_pe(const UniPoly& g, int e) {
    int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= g.spec()->p;
    for (size_t n = 0; n < g.coeffs().size(); ++n)
        if (!g.coeffs()[n].is_zero() && static_cast<int64_t>(n) % q != 0)
            return static_cast<int64_t>(n);
    return std::nullopt;
}

UniPoly uni_mod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw EngineError("uni_mod: division by zero polynomial");
    UniPoly r = a;
    FieldElement leadinv = ff_inv(b.coeffs().back());
    std::vector<FieldElement> rc = r.coeffs();
    while (static_cast<int64_t>(rc.size()) >= static_cast<int64_t>(b.coeffs().size()) &&
           !rc.empty()) {
        FieldElement q = ff_mul(rc.back(), leadinv);
        size_t shift = rc.size() - b.coeffs().size();
        for (size_t i = 0; i < b.coeffs().size(); ++i)
            rc[shift + i] = ff_sub(rc[shift + i], ff_mul(q, b.coeffs()[i]));
        while (!rc.empty() && rc.back().is_zero()) rc.pop_back();
    }
    return UniPoly::from_coeffs(a.spec(), std::move(rc));
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = uni_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return uni_make_monic(a);
}

UniPoly uni_powmod(const UniPoly& base, uint64_t n, const UniPoly& f) {
    UniPoly result = UniPoly::from_coeffs(
        base.spec(), {FieldElement::one(base.spec())});
    UniPoly b = uni_mod(base, f);
    while (n > 0) {
        if (n & 1) result = uni_mod(uni_mul(result, b), f);
        b = uni_mod(uni_mul(b, b), f);
        n >>= 1;
    }
    return result;
}

UniPoly uni_remove_rational_roots(UniPoly f) {
    if (f.is_zero()) return f;
    const FieldSpec* s = f.spec();
    for (uint64_t i = 0; i < s->order(); ++i) {
        FieldElement c = FieldElement::from_index(s, i);
        // divide out (t - c) as long as c is a root
        while (!f.is_zero() && f.degree() >= 1 && uni_eval(f, c).is_zero()) {
            // synthetic division by (t - c)
            const auto& co = f.coeffs();
            std::vector<FieldElement> q(co.size() - 1, FieldElement::zero(s));
            FieldElement carry = FieldElement::zero(s);
            for (size_t k = co.size(); k-- > 1;) {
                carry = ff_add(co[k], ff_mul(carry, c));
                q[k - 1] = carry;
            }
            f = UniPoly::from_coeffs(s, std::move(q));
        }
    }
    return f;
}

int uni_min_irreducible_degree(const UniPoly& f) {
    if (f.degree() < 2)
        throw EngineError("uni_min_irreducible_degree: expected degree >= 2");
    const FieldSpec* s = f.spec();
    UniPoly g = uni_make_monic(f);
    UniPoly t = UniPoly::from_coeffs(
        s, {FieldElement::zero(s), FieldElement::one(s)});
    UniPoly x_qd = t;
    for (int d = 1; d <= g.degree(); ++d) {
        x_qd = uni_powmod(x_qd, s->order(), g);  // now t^{q^d} mod g
        if (d == 1) continue;                    // rational roots already removed
        UniPoly diff = uni_sub(x_qd, t);
        UniPoly h = uni_gcd(diff, g);
        if (h.degree() >= 1) return d;
    }
    throw EngineError("uni_min_irreducible_degree: no factor found");
}

BiPoly uni_to_bipoly(const UniPoly& g, Axis axis) {
    std::vector<BiPoly::Term> out;
    for (size_t i = 0; i < g.coeffs().size(); ++i) {
        if (g.coeffs()[i].is_zero()) continue;
        int64_t e = static_cast<int64_t>(i);
        out.push_back({axis == Axis::X ? Exp2{e, 0} : Exp2{0, e}, g.coeffs()[i]});
    }
    return BiPoly::from_terms(g.spec(), std::move(out));
}

UniPoly bipoly_to_uni(const BiPoly& f, Axis axis) {
    std::vector<FieldElement> coeffs;
    for (const auto& t : f.terms()) {
        int64_t main = axis == Axis::X ? t.first.x : t.first.y;
        int64_t other = axis == Axis::X ? t.first.y : t.first.x;
        if (other != 0)
            throw EngineError("bipoly_to_uni: polynomial is not univariate");
        if (static_cast<int64_t>(coeffs.size()) <= main)
            coeffs.resize(main + 1, FieldElement::zero(f.spec()));
        coeffs[main] = t.second;
    }
    return UniPoly::from_coeffs(f.spec(), std::move(coeffs));
}

// ----------------------------------------------------------------- TriPoly

TriPoly TriPoly::from_terms(const FieldSpec* spec, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    TriPoly f(spec);
    f.terms_.reserve(terms.size());
    for (auto& t : terms) {
        check_exponent(t.first.x);
        check_exponent(t.first.y);
        check_exponent(t.first.z);
        if (!f.terms_.empty() && f.terms_.back().first == t.first) {
            f.terms_.back().second = ff_add(f.terms_.back().second, t.second);
            if (f.terms_.back().second.is_zero()) f.terms_.pop_back();
        } else if (!t.second.is_zero()) {
            f.terms_.push_back(std::move(t));
        }
    }
    return f;
}

std::string TriPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*x^" << e.x << "*y^" << e.y << "*z^" << e.z;
    }
    return os.str();
}

Ord ord_origin(const TriPoly& f) {
    if (f.is_zero()) return std::nullopt;
    int64_t best = INT64_MAX;
    for (const auto& t : f.terms()) best = std::min(best, t.first.total());
    return best;
}

TriPoly initial_form_origin(const TriPoly& f) {
    if (f.is_zero()) throw EngineError("initial form of the zero polynomial");
    int64_t d = *ord_origin(f);
    std::vector<TriPoly::Term> out;
    for (const auto& t : f.terms())
        if (t.first.total() == d) out.push_back(t);
    return TriPoly::from_terms(f.spec(), std::move(out));
}

std::optional<TriPoly> is_pe_power(const TriPoly& f, int e) {
    int64_t q = 1;
    for (int i = 0; i < e; ++i) q *= f.spec()->p;
    std::vector<TriPoly::Term> out;
    for (const auto& t : f.terms()) {
        if (t.first.x % q != 0 || t.first.y % q != 0 || t.first.z % q != 0)
            return std::nullopt;
        out.push_back({Exp3{t.first.x / q, t.first.y / q, t.first.z / q},
                       ff_pe_root(t.second, e)});
    }
    return TriPoly::from_terms(f.spec(), std::move(out));
}

}  // namespace monres
