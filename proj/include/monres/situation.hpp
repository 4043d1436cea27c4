// The monomial-stage state: a Weierstrass element h = z^{p^e} + a_1 z^{p^e-1}
// + ... + a_{p^e} over F_{p^m}[x,y], a boundary monomial (x^alpha y^beta, a),
// and per-axis divisor metadata.  Also the side states for the divisor-only
// and two-element variants.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "monres/poly.hpp"
#include "monres/rational.hpp"

namespace monres {

struct DivisorInfo {
    bool present = false;
    long long age = 0;  // creation time; larger = younger
};

struct Situation {
    FieldSpecPtr field;
    int e = 0;                    // the element sits at level p^e
    std::vector<BiPoly> coeffs;   // coeffs[i-1] = a_i, i = 1..p^e
    long long alpha = 0;
    long long beta = 0;
    long long level = 1;          // the monomial's level a
    DivisorInfo div_x;
    DivisorInfo div_y;
    long long step_count = 0;

    int64_t pe() const;
    const BiPoly& a_top() const { return coeffs.back(); }  // a_{p^e}
    const FieldSpec* spec() const { return field.get(); }

    // Canonical byte string: equal states serialize equally (dedup key).
    std::string canonical_key() const;
    // 128-bit hash of the canonical key, for large in-memory dedup tables.
    std::pair<uint64_t, uint64_t> canonical_fingerprint() const;
};

struct ValidationResult {
    bool ok = true;
    std::string message;
};

// Checks every structural invariant; reports the first violated clause.
ValidationResult validate(const Situation& s);
void require_valid(const Situation& s);  // throws ValidationError

enum class Loc { P, XiX, XiY };
std::string loc_name(Loc l);

// The usual-monomial order: (alpha+beta)/a at P, alpha/a along {x=0},
// beta/a along {y=0}.
Rat mu(const Situation& s, Loc at);

// Membership of the closed point in the support: the element has order
// >= p^e at the origin and the monomial has order >= its level.
bool in_support(const Situation& s);

// h as an actual trivariate polynomial (used for initial-form analysis).
TriPoly weierstrass_poly(const Situation& s);

// The coefficient list after the substitution z = z' - w, w in k[x,y]:
// a'_k = sum_{j<=k} binom(p^e-j, k-j) * (-w)^{k-j} * a_j   (a_0 = 1).
std::vector<BiPoly> shift_weierstrass(const std::vector<BiPoly>& coeffs,
                                      const BiPoly& w, uint32_t p);

Situation with_shifted_z(const Situation& s, const BiPoly& w);

// --------------------------------------------------------- side variants

// Divisor-only state: a monomial of boundary components at a level.
struct Tau0Component {
    int id = 0;
    long long multiplicity = 0;
    bool through_point = false;
};

struct Tau0State {
    long long level = 1;
    std::vector<Tau0Component> components;
    int next_id() const;
};

// Two-element state: h1 monic in z over k[x,y], h2 monic in y over k[x],
// monomial (x^alpha, a).
struct Tau2State {
    FieldSpecPtr field;
    int e1 = 0;
    int e2 = 0;
    std::vector<BiPoly> h1_coeffs;  // b_i in k[x,y], i = 1..p^{e1}
    std::vector<UniPoly> h2_coeffs; // c_i in k[x],  i = 1..p^{e2}
    long long alpha = 0;
    long long level = 1;

    int64_t pe1() const;
    int64_t pe2() const;
};

ValidationResult validate(const Tau0State& st);
ValidationResult validate(const Tau2State& st);

}  // namespace monres
