// Exact arithmetic in F_{p^m} with inverse-Frobenius root extraction.
#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "monres/errors.hpp"

namespace monres {

// Hard limit on the extension degree of any field the engine touches.
// Keeps elements inline and copy-cheap; raised only if a use case appears.
inline constexpr int kMaxExtDegree = 12;

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

// Immutable description of F_{p^m}.  Instances are interned for the lifetime
// of the process so elements can hold plain pointers.
class FieldSpec {
public:
    uint32_t p;                       // characteristic, prime
    uint32_t m;                       // extension degree >= 1
    std::vector<uint32_t> modulus;    // monic irreducible, little-endian, length m+1

    uint64_t order() const;           // p^m

    // Construct (or fetch the interned copy of) F_{p^m}.  With no modulus the
    // lexicographically smallest monic irreducible of degree m over F_p is
    // used, so traces are reproducible across runs.
    static FieldSpecPtr make(uint32_t p, uint32_t m,
                             const std::vector<uint32_t>& modulus = {});

    std::string name() const;         // "F_9" style

private:
    FieldSpec() = default;
};

bool is_prime_u32(uint32_t n);

// Lexicographically smallest monic irreducible polynomial of degree m over
// F_p (little-endian coefficient vector of length m+1).
std::vector<uint32_t> default_modulus(uint32_t p, uint32_t m);

bool is_irreducible_mod_p(const std::vector<uint32_t>& poly, uint32_t p);

// One element of F_{p^m}: coefficient vector in the modulus basis,
// little-endian, entries reduced mod p.  Value type, trivially copyable.
class FieldElement {
public:
    FieldElement() : spec_(nullptr) { c_.fill(0); }
    explicit FieldElement(const FieldSpec* spec) : spec_(spec) { c_.fill(0); }

    static FieldElement zero(const FieldSpec* spec) { return FieldElement(spec); }
    static FieldElement one(const FieldSpec* spec);
    static FieldElement from_int(const FieldSpec* spec, long long v);
    static FieldElement from_coeffs(const FieldSpec* spec,
                                    const std::vector<long long>& coeffs);

    const FieldSpec* spec() const { return spec_; }
    bool is_zero() const {
        for (uint32_t i = 0; i < spec_->m; ++i)
            if (c_[i] != 0) return false;
        return true;
    }
    bool is_one() const;
    uint32_t coeff(uint32_t i) const { return c_[i]; }
    std::vector<int> coeff_vector() const;  // length m, little-endian

    // Canonical enumeration index: sum c_i * p^i.  Orders chart translations
    // deterministically and indexes brute-force loops.
    uint64_t index() const;
    static FieldElement from_index(const FieldSpec* spec, uint64_t idx);

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        if (a.spec_ != b.spec_)
            throw EngineError("field element comparison across different fields");
        for (uint32_t i = 0; i < a.spec_->m; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    friend FieldElement ff_add(const FieldElement&, const FieldElement&);
    friend FieldElement ff_sub(const FieldElement&, const FieldElement&);
    friend FieldElement ff_neg(const FieldElement&);
    friend FieldElement ff_mul(const FieldElement&, const FieldElement&);
    friend FieldElement ff_scale(const FieldElement&, uint64_t);
    friend FieldElement ff_inv(const FieldElement&);
    friend FieldElement ff_mul_ext(const FieldElement&, const FieldElement&);

    const FieldSpec* spec_;
    std::array<uint32_t, kMaxExtDegree> c_;
};

inline FieldElement ff_add(const FieldElement& a, const FieldElement& b) {
    if (a.spec_ != b.spec_)
        throw EngineError("field arithmetic across different fields");
    FieldElement r(a.spec_);
    uint32_t p = a.spec_->p;
    for (uint32_t i = 0; i < a.spec_->m; ++i) r.c_[i] = (a.c_[i] + b.c_[i]) % p;
    return r;
}

inline FieldElement ff_sub(const FieldElement& a, const FieldElement& b) {
    if (a.spec_ != b.spec_)
        throw EngineError("field arithmetic across different fields");
    FieldElement r(a.spec_);
    uint32_t p = a.spec_->p;
    for (uint32_t i = 0; i < a.spec_->m; ++i)
        r.c_[i] = (a.c_[i] + p - b.c_[i]) % p;
    return r;
}

inline FieldElement ff_neg(const FieldElement& a) {
    FieldElement r(a.spec_);
    uint32_t p = a.spec_->p;
    for (uint32_t i = 0; i < a.spec_->m; ++i) r.c_[i] = (p - a.c_[i]) % p;
    return r;
}

inline FieldElement ff_mul(const FieldElement& a, const FieldElement& b) {
    if (a.spec_ != b.spec_)
        throw EngineError("field arithmetic across different fields");
    if (a.spec_->m == 1) {
        FieldElement r(a.spec_);
        r.c_[0] = static_cast<uint32_t>(
            static_cast<uint64_t>(a.c_[0]) * b.c_[0] % a.spec_->p);
        return r;
    }
    return ff_mul_ext(a, b);
}

// Multiply by an integer scalar (i.e. repeated addition), used for binomial
// coefficients reduced mod p.
inline FieldElement ff_scale(const FieldElement& a, uint64_t k) {
    uint64_t r = k % a.spec_->p;
    if (r == 0) return FieldElement::zero(a.spec_);
    FieldElement out(a.spec_);
    for (uint32_t i = 0; i < a.spec_->m; ++i)
        out.c_[i] = static_cast<uint32_t>(a.c_[i] * r % a.spec_->p);
    return out;
}

FieldElement ff_inv(const FieldElement& a);          // throws on zero
FieldElement ff_div(const FieldElement& a, const FieldElement& b);
FieldElement ff_pow(const FieldElement& a, uint64_t n);
// reduction of a full product by the monic modulus (extension fields)
FieldElement ff_mul_ext(const FieldElement& a, const FieldElement& b);

// The unique d with d^{p^e} = c.  Frobenius is bijective on a finite field,
// so this always exists.
FieldElement ff_pe_root(const FieldElement& c, int e);

FieldElement ff_frobenius(const FieldElement& a);    // a -> a^p

// All q elements in index order 0..q-1.
std::vector<FieldElement> all_elements(const FieldSpec* spec);

// Image of `a` (element of `from`) inside `to`, where `root` is a root of
// from->modulus in `to`.  Used when the driver enlarges the field.
FieldElement ff_embed(const FieldElement& a, const FieldSpec* to,
                      const FieldElement& root);

// A root in `to` of the degree-m modulus of `from`; requires that
// to = F_{p^{m*d}} for some d.  Brute-force scan, guarded by field size.
FieldElement find_embedding_root(const FieldSpec* from, const FieldSpec* to);

}  // namespace monres
