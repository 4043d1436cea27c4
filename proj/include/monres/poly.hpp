// Sparse exact polynomials over F_{p^m}: bivariate (the coefficient ring of
// the Weierstrass data), trivariate (initial-form analysis only) and dense
// univariate (divisor slices, residual orders, root hunting).
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monres/field.hpp"

namespace monres {

// Exponents stay far below this under every transform in scope; hitting it
// means a runaway substitution, so fail loudly.
inline constexpr long long kMaxExponent = 1 << 20;

enum class Axis { X, Y };

struct Exp2 {
    int64_t x = 0;
    int64_t y = 0;
    friend bool operator==(const Exp2&, const Exp2&) = default;
    friend auto operator<=>(const Exp2&, const Exp2&) = default;
    int64_t total() const { return x + y; }
};

struct Exp3 {
    int64_t x = 0;
    int64_t y = 0;
    int64_t z = 0;
    friend bool operator==(const Exp3&, const Exp3&) = default;
    friend auto operator<=>(const Exp3&, const Exp3&) = default;
    int64_t total() const { return x + y + z; }
};

// Order values: the zero polynomial has order +infinity, encoded as nullopt.
using Ord = std::optional<int64_t>;

class UniPoly;

class BiPoly {
public:
    using Term = std::pair<Exp2, FieldElement>;

    explicit BiPoly(const FieldSpec* spec) : spec_(spec) {}
    static BiPoly zero(const FieldSpec* spec) { return BiPoly(spec); }
    static BiPoly constant(const FieldSpec* spec, const FieldElement& c);
    static BiPoly monomial(const FieldSpec* spec, int64_t i, int64_t j,
                           const FieldElement& c);
    // Sums duplicates, drops zeros, sorts by exponent.
    static BiPoly from_terms(const FieldSpec* spec, std::vector<Term> terms);

    const FieldSpec* spec() const { return spec_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.spec_ == b.spec_ && a.terms_ == b.terms_;
    }

    std::string str() const;  // debug form, e.g. "x^3*y^2 + x^3*y^3"

private:
    friend BiPoly add(const BiPoly&, const BiPoly&);
    friend BiPoly sub(const BiPoly&, const BiPoly&);
    friend BiPoly neg(const BiPoly&);
    friend BiPoly mul(const BiPoly&, const BiPoly&);

    const FieldSpec* spec_;
    std::vector<Term> terms_;  // sorted by exponent, no zero coefficients
};

BiPoly add(const BiPoly& a, const BiPoly& b);
BiPoly sub(const BiPoly& a, const BiPoly& b);
BiPoly neg(const BiPoly& a);
BiPoly mul(const BiPoly& a, const BiPoly& b);
BiPoly mul_scalar(const BiPoly& a, const FieldElement& c);
BiPoly mul_monomial(const BiPoly& a, int64_t dx, int64_t dy);
BiPoly pow(const BiPoly& a, uint64_t n);

Ord ord_origin(const BiPoly& f);
Ord val_axis(const BiPoly& f, Axis axis);

// Sum of the terms of minimal total degree.  Requires f != 0.
BiPoly initial_form_origin(const BiPoly& f);

// f = axis^r * { g(other) + axis * omega }; returns (r, g).  Requires f != 0.
std::pair<int64_t, UniPoly> initial_form_axis(const BiPoly& f, Axis axis);

// The coefficient of axis^r in f, as a polynomial in the other variable.
UniPoly slice_axis(const BiPoly& f, Axis axis, int64_t r);

// p^e-th root if every exponent of every term is divisible by p^e (exact
// over a perfect field); coefficients get ff_pe_root.
std::optional<BiPoly> is_pe_power(const BiPoly& f, int e);

// Exact division by x^x_pow * y^y_pow; throws EngineError when the
// valuations are insufficient (a violated state invariant upstream).
BiPoly divide_exact(const BiPoly& f, int64_t x_pow, int64_t y_pow);

// f(gx, gy): full exact substitution.
BiPoly compose(const BiPoly& f, const BiPoly& gx, const BiPoly& gy);

// Specialized chart maps, cheaper than compose:
//   x-chart of a point blow-up:  f(x, x*(y + c))
BiPoly subst_point_chart_x(const BiPoly& f, const FieldElement& c);
//   y-chart of a point blow-up:  f(x*y, y)
BiPoly subst_point_chart_y(const BiPoly& f);
//   translation f(x + x0, y + y0)
BiPoly translate(const BiPoly& f, const FieldElement& x0, const FieldElement& y0);

FieldElement evaluate(const BiPoly& f, const FieldElement& x0,
                      const FieldElement& y0);

// Hasse (divided-power) derivative D^{(dx,dy)} f, the right notion in
// characteristic p.
BiPoly hasse_derivative(const BiPoly& f, int64_t dx, int64_t dy);

// Binomial coefficient mod p by Lucas' theorem.
uint64_t binom_mod_p(uint64_t n, uint64_t k, uint32_t p);

// ------------------------------------------------------------- univariate

// Dense univariate polynomial; the variable is whichever the caller says.
class UniPoly {
public:
    explicit UniPoly(const FieldSpec* spec) : spec_(spec) {}
    static UniPoly zero(const FieldSpec* spec) { return UniPoly(spec); }
    static UniPoly from_coeffs(const FieldSpec* spec,
                               std::vector<FieldElement> coeffs);

    const FieldSpec* spec() const { return spec_; }
    bool is_zero() const { return coeffs_.empty(); }
    int64_t degree() const { return static_cast<int64_t>(coeffs_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    FieldElement coeff(int64_t i) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

private:
    friend UniPoly uni_add(const UniPoly&, const UniPoly&);
    friend UniPoly uni_sub(const UniPoly&, const UniPoly&);
    friend UniPoly uni_mul(const UniPoly&, const UniPoly&);
    void trim();

    const FieldSpec* spec_;
    std::vector<FieldElement> coeffs_;  // coeffs_[i] multiplies var^i; back() != 0
};

UniPoly uni_add(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const UniPoly& a, const FieldElement& c);
UniPoly uni_make_monic(const UniPoly& a);

Ord uni_ord(const UniPoly& f);  // lowest exponent with nonzero coefficient
FieldElement uni_eval(const UniPoly& f, const FieldElement& x0);

std::optional<UniPoly> uni_is_pe_power(const UniPoly& f, int e);

// min{ n : coeff of var^n nonzero and p^e does not divide n }; nullopt when
// every term is a p^e-th power.
Ord res_ord_pe(const UniPoly& g, int e);

// remainder of a mod b (b != 0)
UniPoly uni_mod(const UniPoly& a, const UniPoly& b);
UniPoly uni_gcd(UniPoly a, UniPoly b);  // monic gcd
// (base^n) mod f
UniPoly uni_powmod(const UniPoly& base, uint64_t n, const UniPoly& f);
// divide out (var - c)^multiplicity for every root c in the base field;
// returns the quotient.
UniPoly uni_remove_rational_roots(UniPoly f);
// smallest d >= 2 such that f (nonconstant, no rational roots) has an
// irreducible factor of degree d over the base field.
int uni_min_irreducible_degree(const UniPoly& f);

// embed a bivariate poly's variable: view g(t) as a BiPoly in the given axis
BiPoly uni_to_bipoly(const UniPoly& g, Axis axis);
UniPoly bipoly_to_uni(const BiPoly& f, Axis axis);  // requires other axis absent

// ------------------------------------------------------------- trivariate

class TriPoly {
public:
    using Term = std::pair<Exp3, FieldElement>;

    explicit TriPoly(const FieldSpec* spec) : spec_(spec) {}
    static TriPoly zero(const FieldSpec* spec) { return TriPoly(spec); }
    static TriPoly from_terms(const FieldSpec* spec, std::vector<Term> terms);

    const FieldSpec* spec() const { return spec_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    friend bool operator==(const TriPoly& a, const TriPoly& b) {
        return a.spec_ == b.spec_ && a.terms_ == b.terms_;
    }

    std::string str() const;

private:
    const FieldSpec* spec_;
    std::vector<Term> terms_;
};

Ord ord_origin(const TriPoly& f);
TriPoly initial_form_origin(const TriPoly& f);
std::optional<TriPoly> is_pe_power(const TriPoly& f, int e);

}  // namespace monres
