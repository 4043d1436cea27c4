#include "monres/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace monres {

namespace {

// ---- plain mod-p polynomial helpers (bootstrap; no FieldSpec involved) ----

using PolyP = std::vector<uint32_t>;  // little-endian, reduced mod p

void trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP mod_poly(PolyP a, const PolyP& f, uint32_t p) {
    trim(a);
    const size_t df = f.size() - 1;
    // f is monic
    while (a.size() > df) {
        uint32_t lead = a.back();
        size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            for (size_t i = 0; i <= df; ++i) {
                uint64_t sub = static_cast<uint64_t>(lead) * f[i] % p;
                uint64_t cur = a[shift + i];
                a[shift + i] = static_cast<uint32_t>((cur + p - sub) % p);
            }
        }
        a.pop_back();
        trim(a);
        if (a.size() <= df) break;
    }
    return a;
}

PolyP mul_mod(const PolyP& a, const PolyP& b, const PolyP& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<uint32_t>(
                (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
        }
    }
    return mod_poly(std::move(r), f, p);
}

PolyP pow_mod(PolyP base, uint64_t n, const PolyP& f, uint32_t p) {
    PolyP result{1};
    while (n > 0) {
        if (n & 1) result = mul_mod(result, base, f, p);
        base = mul_mod(base, base, f, p);
        n >>= 1;
    }
    return result;
}

PolyP gcd_poly(PolyP a, PolyP b, uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic to divide
        uint32_t lead = b.back();
        if (lead != 1) {
            // lead^{-1} mod p by Fermat
            uint64_t inv = 1, base = lead, e = p - 2;
            while (e) {
                if (e & 1) inv = inv * base % p;
                base = base * base % p;
                e >>= 1;
            }
            for (auto& c : b)
                c = static_cast<uint32_t>(c * inv % p);
        }
        PolyP r = mod_poly(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<uint32_t> prime_factors(uint32_t n) {
    std::vector<uint32_t> fs;
    for (uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

uint64_t ipow(uint64_t b, uint32_t e) {
    uint64_t r = 1;
    while (e--) {
        if (r > UINT64_MAX / b) throw EngineError("field order overflow");
        r *= b;
    }
    return r;
}

}  // namespace

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<uint32_t>& poly, uint32_t p) {
    PolyP f = poly;
    trim(f);
    if (f.size() < 2) return false;
    uint32_t m = static_cast<uint32_t>(f.size() - 1);
    if (f.back() != 1) return false;  // require monic
    if (m == 1) return true;
    // x^{p^m} == x mod f, and gcd(x^{p^{m/l}} - x, f) = 1 for prime l | m.
    // x^{p^k} is computed by iterating the p-power map k times.
    PolyP x{0, 1};
    PolyP acc = x;
    for (uint32_t i = 0; i < m; ++i) acc = pow_mod(acc, p, f, p);
    PolyP diff = acc;
    // diff - x
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
    trim(diff);
    if (!diff.empty()) return false;
    for (uint32_t l : prime_factors(m)) {
        uint32_t k = m / l;
        PolyP a = x;
        for (uint32_t i = 0; i < k; ++i) a = pow_mod(a, p, f, p);
        // a - x
        if (a.size() < 2) a.resize(2, 0);
        a[1] = static_cast<uint32_t>((a[1] + p - 1) % p);
        trim(a);
        PolyP g = gcd_poly(a, f, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

std::vector<uint32_t> default_modulus(uint32_t p, uint32_t m) {
    if (m == 1) return {0, 1};
    // scan coefficient vectors (c_0,...,c_{m-1}) in lexicographic order
    std::vector<uint32_t> c(m, 0);
    while (true) {
        std::vector<uint32_t> f(c);
        f.push_back(1);
        if (is_irreducible_mod_p(f, p)) return f;
        // increment little-endian vector, most significant digit last
        uint32_t i = m;
        while (i > 0) {
            --i;
            if (++c[i] < p) break;
            c[i] = 0;
            if (i == 0) throw EngineError("no irreducible polynomial found");
        }
    }
}

uint64_t FieldSpec::order() const { return ipow(p, m); }

std::string FieldSpec::name() const {
    std::ostringstream os;
    os << "F_" << order();
    return os.str();
}

FieldSpecPtr FieldSpec::make(uint32_t p, uint32_t m,
                             const std::vector<uint32_t>& modulus) {
    if (!is_prime_u32(p))
        throw ValidationError("field: p = " + std::to_string(p) + " is not prime");
    if (m < 1 || m > static_cast<uint32_t>(kMaxExtDegree))
        throw ValidationError("field: extension degree m must be in [1, " +
                              std::to_string(kMaxExtDegree) + "]");
    std::vector<uint32_t> mod = modulus;
    for (auto& c : mod) c %= p;
    if (mod.empty()) {
        mod = default_modulus(p, m);
    } else {
        while (!mod.empty() && mod.back() == 0) mod.pop_back();
        if (mod.size() != m + 1)
            throw ValidationError("field: modulus degree must equal m");
        if (mod.back() != 1)
            throw ValidationError("field: modulus must be monic");
        if (m >= 2 && !is_irreducible_mod_p(mod, p))
            throw ValidationError("field: modulus is not irreducible over F_p");
    }

    static std::mutex mu;
    static std::map<std::tuple<uint32_t, uint32_t, std::vector<uint32_t>>,
                    FieldSpecPtr>
        interned;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, m, mod);
    auto it = interned.find(key);
    if (it != interned.end()) return it->second;
    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
    spec->p = p;
    spec->m = m;
    spec->modulus = mod;
    interned[key] = spec;
    return spec;
}

// ---------------------------------------------------------------- elements

FieldElement FieldElement::one(const FieldSpec* spec) {
    FieldElement e(spec);
    e.c_[0] = 1 % spec->p;
    return e;
}

FieldElement FieldElement::from_int(const FieldSpec* spec, long long v) {
    FieldElement e(spec);
    long long r = v % static_cast<long long>(spec->p);
    if (r < 0) r += spec->p;
    e.c_[0] = static_cast<uint32_t>(r);
    return e;
}

FieldElement FieldElement::from_coeffs(const FieldSpec* spec,
                                       const std::vector<long long>& coeffs) {
    if (coeffs.size() > spec->m)
        throw ValidationError("field element: coefficient vector longer than m");
    FieldElement e(spec);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        long long r = coeffs[i] % static_cast<long long>(spec->p);
        if (r < 0) r += spec->p;
        e.c_[i] = static_cast<uint32_t>(r);
    }
    return e;
}

bool FieldElement::is_one() const {
    if (c_[0] != 1) return false;
    for (uint32_t i = 1; i < spec_->m; ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::vector<int> FieldElement::coeff_vector() const {
    std::vector<int> v(spec_->m);
    for (uint32_t i = 0; i < spec_->m; ++i) v[i] = static_cast<int>(c_[i]);
    return v;
}

uint64_t FieldElement::index() const {
    uint64_t idx = 0;
    for (uint32_t i = spec_->m; i-- > 0;) idx = idx * spec_->p + c_[i];
    return idx;
}

FieldElement FieldElement::from_index(const FieldSpec* spec, uint64_t idx) {
    FieldElement e(spec);
    for (uint32_t i = 0; i < spec->m; ++i) {
        e.c_[i] = static_cast<uint32_t>(idx % spec->p);
        idx /= spec->p;
    }
    return e;
}

std::string FieldElement::str() const {
    std::ostringstream os;
    os << "[";
    for (uint32_t i = 0; i < spec_->m; ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]";
    return os.str();
}

FieldElement ff_mul_ext(const FieldElement& a, const FieldElement& b) {
    const FieldSpec* s = a.spec_;
    const uint32_t p = s->p, m = s->m;
    std::array<uint64_t, 2 * kMaxExtDegree> prod{};
    for (uint32_t i = 0; i < m; ++i) {
        if (a.c_[i] == 0) continue;
        for (uint32_t j = 0; j < m; ++j)
            prod[i + j] += static_cast<uint64_t>(a.c_[i]) * b.c_[j];
    }
    // reduce by the monic modulus, top down
    for (uint32_t k = 2 * m - 2; k >= m; --k) {
        uint64_t lead = prod[k] % p;
        prod[k] = 0;
        if (lead == 0) continue;
        // x^k = x^{k-m} * (x^m) = -x^{k-m} * (modulus - x^m)
        for (uint32_t i = 0; i < m; ++i) {
            uint64_t sub = lead * s->modulus[i] % p;
            prod[k - m + i] = (prod[k - m + i] % p + p - sub) % p;
        }
    }
    FieldElement r(s);
    for (uint32_t i = 0; i < m; ++i) r.c_[i] = static_cast<uint32_t>(prod[i] % p);
    return r;
}

FieldElement ff_inv(const FieldElement& a) {
    if (a.is_zero()) throw ValidationError("division by zero field element");
    const FieldSpec* s = a.spec_;
    const uint32_t p = s->p, m = s->m;
    if (m == 1) {
        uint64_t inv = 1, base = a.c_[0], e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        FieldElement r(s);
        r.c_[0] = static_cast<uint32_t>(inv);
        return r;
    }
    // extended Euclid in F_p[t] against the modulus
    PolyP r0(s->modulus.begin(), s->modulus.end());
    PolyP r1;
    for (uint32_t i = 0; i < m; ++i)
        if (a.c_[i]) {
            r1.resize(i + 1, 0);
            r1[i] = a.c_[i];
        }
    PolyP t0;        // 0
    PolyP t1{1};     // 1
    auto scalar_inv = [p](uint32_t v) {
        uint64_t inv = 1, base = v, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<uint32_t>(inv);
    };
    while (!r1.empty()) {
        // divide r0 by r1
        PolyP q;
        PolyP rem = r0;
        trim(rem);
        uint32_t linv = scalar_inv(r1.back());
        while (rem.size() >= r1.size() && !rem.empty()) {
            size_t shift = rem.size() - r1.size();
            uint32_t coef = static_cast<uint32_t>(
                static_cast<uint64_t>(rem.back()) * linv % p);
            if (q.size() < shift + 1) q.resize(shift + 1, 0);
            q[shift] = coef;
            for (size_t i = 0; i < r1.size(); ++i) {
                uint64_t sub = static_cast<uint64_t>(coef) * r1[i] % p;
                rem[shift + i] =
                    static_cast<uint32_t>((rem[shift + i] + p - sub) % p);
            }
            trim(rem);
        }
        // t_next = t0 - q * t1
        PolyP qt(q.size() + t1.size(), 0);
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < t1.size(); ++j)
                qt[i + j] = static_cast<uint32_t>(
                    (qt[i + j] + static_cast<uint64_t>(q[i]) * t1[j]) % p);
        }
        PolyP tn(std::max(t0.size(), qt.size()), 0);
        for (size_t i = 0; i < tn.size(); ++i) {
            uint32_t x = i < t0.size() ? t0[i] : 0;
            uint32_t y = i < qt.size() ? qt[i] : 0;
            tn[i] = (x + p - y) % p;
        }
        trim(tn);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(tn);
    }
    // r0 = gcd (a nonzero constant since the modulus is irreducible)
    if (r0.size() != 1) throw EngineError("field inverse: gcd not constant");
    uint32_t ginv = scalar_inv(r0[0]);
    FieldElement r(s);
    for (size_t i = 0; i < t0.size() && i < m; ++i)
        r.c_[i] = static_cast<uint32_t>(static_cast<uint64_t>(t0[i]) * ginv % p);
    return r;
}

FieldElement ff_div(const FieldElement& a, const FieldElement& b) {
    return ff_mul(a, ff_inv(b));
}

FieldElement ff_pow(const FieldElement& a, uint64_t n) {
    FieldElement result = FieldElement::one(a.spec());
    FieldElement base = a;
    while (n > 0) {
        if (n & 1) result = ff_mul(result, base);
        base = ff_mul(base, base);
        n >>= 1;
    }
    return result;
}

FieldElement ff_frobenius(const FieldElement& a) {
    return ff_pow(a, a.spec()->p);
}

FieldElement ff_pe_root(const FieldElement& c, int e) {
    if (e < 0) throw ValidationError("ff_pe_root: negative exponent");
    // inverse Frobenius is a -> a^{p^{m-1}}; apply it e times
    FieldElement r = c;
    const uint32_t p = c.spec()->p, m = c.spec()->m;
    for (int i = 0; i < e; ++i) {
        if (m == 1) continue;  // Frobenius is the identity on F_p
        FieldElement x = r;
        for (uint32_t j = 0; j + 1 < m; ++j) x = ff_pow(x, p);
        r = x;
    }
    return r;
}

std::vector<FieldElement> all_elements(const FieldSpec* spec) {
    uint64_t q = spec->order();
    std::vector<FieldElement> v;
    v.reserve(q);
    for (uint64_t i = 0; i < q; ++i) v.push_back(FieldElement::from_index(spec, i));
    return v;
}

FieldElement ff_embed(const FieldElement& a, const FieldSpec* to,
                      const FieldElement& root) {
    FieldElement acc = FieldElement::zero(to);
    FieldElement pw = FieldElement::one(to);
    for (uint32_t i = 0; i < a.spec()->m; ++i) {
        acc = ff_add(acc, ff_scale(pw, a.coeff(i)));
        pw = ff_mul(pw, root);
    }
    return acc;
}

FieldElement find_embedding_root(const FieldSpec* from, const FieldSpec* to) {
    if (from->p != to->p || to->m % from->m != 0)
        throw ValidationError("field embedding: target is not an extension");
    if (to->order() > (1ull << 20))
        throw ValidationError("field embedding: target field too large to scan");
    // evaluate from->modulus at every element of `to`
    for (uint64_t i = 0; i < to->order(); ++i) {
        FieldElement x = FieldElement::from_index(to, i);
        FieldElement acc = FieldElement::zero(to);
        FieldElement pw = FieldElement::one(to);
        for (size_t k = 0; k < from->modulus.size(); ++k) {
            acc = ff_add(acc, ff_scale(pw, from->modulus[k]));
            pw = ff_mul(pw, x);
        }
        if (acc.is_zero()) return x;
    }
    throw EngineError("field embedding: no root of modulus in extension");
}

}  // namespace monres
