#include "monres/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace monres {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw ValidationError("scenario schema error at " + path + ": " + what);
}

long long require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_error(path, "expected an integer");
    return j.get<long long>();
}

const json& require_key(const json& j, const char* key, const std::string& path) {
    if (!j.is_object() || !j.contains(key)) schema_error(path, "missing");
    return j.at(key);
}

FieldSpecPtr parse_field(const json& j) {
    if (!j.is_object()) schema_error("/field", "expected an object");
    long long p = require_int(require_key(j, "p", "/field/p"), "/field/p");
    long long m = j.contains("m") ? require_int(j.at("m"), "/field/m") : 1;
    if (p < 2) schema_error("/field/p", "p must be >= 2");
    if (m < 1) schema_error("/field/m", "m must be >= 1");
    std::vector<uint32_t> modulus;
    if (j.contains("modulus")) {
        const json& mv = j.at("modulus");
        if (!mv.is_array()) schema_error("/field/modulus", "expected an array");
        for (const auto& c : mv)
            modulus.push_back(static_cast<uint32_t>(
                require_int(c, "/field/modulus")));
    }
    return FieldSpec::make(static_cast<uint32_t>(p), static_cast<uint32_t>(m),
                           modulus);
}

FieldElement parse_coeff_vector(const json& j, const FieldSpec* spec,
                                const std::string& path) {
    if (j.is_number_integer())
        return FieldElement::from_int(spec, j.get<long long>());
    if (!j.is_array()) schema_error(path, "expected coefficient vector or integer");
    std::vector<long long> v;
    for (const auto& c : j) v.push_back(require_int(c, path));
    if (v.size() > spec->m) schema_error(path, "coefficient vector longer than m");
    return FieldElement::from_coeffs(spec, v);
}

BiPoly parse_bipoly(const json& j, const FieldSpec* spec, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array of terms");
    std::vector<BiPoly::Term> terms;
    for (size_t i = 0; i < j.size(); ++i) {
        const json& t = j[i];
        std::string tpath = path + "/" + std::to_string(i);
        if (!t.is_array() || t.size() != 3)
            schema_error(tpath, "expected [x_exp, y_exp, coeff]");
        long long xe = require_int(t[0], tpath + "/0");
        long long ye = require_int(t[1], tpath + "/1");
        if (xe < 0 || ye < 0) schema_error(tpath, "negative exponent");
        FieldElement c = parse_coeff_vector(t[2], spec, tpath + "/2");
        terms.push_back({Exp2{xe, ye}, c});
    }
    return BiPoly::from_terms(spec, std::move(terms));
}

UniPoly parse_unipoly(const json& j, const FieldSpec* spec, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array of terms");
    std::vector<FieldElement> coeffs;
    for (size_t i = 0; i < j.size(); ++i) {
        const json& t = j[i];
        std::string tpath = path + "/" + std::to_string(i);
        if (!t.is_array() || t.size() != 2)
            schema_error(tpath, "expected [exp, coeff]");
        long long e = require_int(t[0], tpath + "/0");
        if (e < 0) schema_error(tpath, "negative exponent");
        FieldElement c = parse_coeff_vector(t[1], spec, tpath + "/1");
        if (static_cast<long long>(coeffs.size()) <= e)
            coeffs.resize(e + 1, FieldElement::zero(spec));
        coeffs[e] = ff_add(coeffs[e], c);
    }
    return UniPoly::from_coeffs(spec, std::move(coeffs));
}

json bipoly_to_json(const BiPoly& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) {
        json coeff = json::array();
        for (int c : t.second.coeff_vector()) coeff.push_back(c);
        terms.push_back(json::array({t.first.x, t.first.y, coeff}));
    }
    return terms;
}

json unipoly_to_json(const UniPoly& f) {
    json terms = json::array();
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i].is_zero()) continue;
        json coeff = json::array();
        for (int c : f.coeffs()[i].coeff_vector()) coeff.push_back(c);
        terms.push_back(json::array({i, coeff}));
    }
    return terms;
}

Situation parse_tau1(const json& j) {
    Situation s;
    s.field = parse_field(require_key(j, "field", "/field"));
    s.e = static_cast<int>(require_int(require_key(j, "e", "/e"), "/e"));
    if (s.e < 0) schema_error("/e", "e must be >= 0");
    if (s.e > 9) schema_error("/e", "e too large for this engine");
    int64_t pe = 1;
    for (int i = 0; i < s.e; ++i) pe *= s.field->p;
    if (pe > 512) schema_error("/e", "p^e too large for this engine (cap 512)");
    s.coeffs.assign(pe, BiPoly::zero(s.spec()));

    if (j.contains("coefficients")) {
        const json& co = j.at("coefficients");
        if (!co.is_object()) schema_error("/coefficients", "expected an object");
        for (auto it = co.begin(); it != co.end(); ++it) {
            long long i = 0;
            try {
                i = std::stoll(it.key());
            } catch (...) {
                schema_error("/coefficients/" + it.key(), "key must be an index");
            }
            if (i < 1 || i > pe)
                schema_error("/coefficients/" + it.key(),
                             "index out of range 1..p^e");
            s.coeffs[i - 1] =
                parse_bipoly(it.value(), s.spec(), "/coefficients/" + it.key());
        }
    }

    const json& mo = require_key(j, "monomial", "/monomial");
    if (!mo.is_object()) schema_error("/monomial", "expected an object");
    s.alpha = require_int(require_key(mo, "alpha", "/monomial/alpha"), "/monomial/alpha");
    s.beta = require_int(require_key(mo, "beta", "/monomial/beta"), "/monomial/beta");
    s.level = require_int(require_key(mo, "level", "/monomial/level"), "/monomial/level");

    if (j.contains("divisors")) {
        const json& dv = j.at("divisors");
        if (!dv.is_object()) schema_error("/divisors", "expected an object");
        if (dv.contains("x")) {
            s.div_x.present = true;
            s.div_x.age = require_int(require_key(dv.at("x"), "age", "/divisors/x/age"),
                                      "/divisors/x/age");
        }
        if (dv.contains("y")) {
            s.div_y.present = true;
            s.div_y.age = require_int(require_key(dv.at("y"), "age", "/divisors/y/age"),
                                      "/divisors/y/age");
        }
    }
    if (j.contains("step_count"))
        s.step_count = require_int(j.at("step_count"), "/step_count");

    ValidationResult v = validate(s);
    if (!v.ok) throw ValidationError("scenario state invalid: " + v.message);
    return s;
}

Tau0State parse_tau0(const json& j) {
    Tau0State st;
    st.level = require_int(require_key(j, "level", "/level"), "/level");
    const json& comps = require_key(j, "components", "/components");
    if (!comps.is_array()) schema_error("/components", "expected an array");
    for (size_t i = 0; i < comps.size(); ++i) {
        const json& c = comps[i];
        std::string path = "/components/" + std::to_string(i);
        Tau0Component comp;
        comp.id = static_cast<int>(
            require_int(require_key(c, "id", path + "/id"), path + "/id"));
        comp.multiplicity = require_int(
            require_key(c, "multiplicity", path + "/multiplicity"),
            path + "/multiplicity");
        comp.through_point =
            c.contains("through_point") ? c.at("through_point").get<bool>() : true;
        st.components.push_back(comp);
    }
    ValidationResult v = validate(st);
    if (!v.ok) throw ValidationError("scenario state invalid: " + v.message);
    return st;
}

Tau2State parse_tau2(const json& j) {
    Tau2State st;
    st.field = parse_field(require_key(j, "field", "/field"));
    st.e1 = static_cast<int>(require_int(require_key(j, "e1", "/e1"), "/e1"));
    st.e2 = static_cast<int>(require_int(require_key(j, "e2", "/e2"), "/e2"));
    if (st.e1 < 0 || st.e2 < 0 || st.e1 > st.e2)
        schema_error("/e1", "need 0 <= e1 <= e2");
    st.h1_coeffs.assign(st.pe1(), BiPoly::zero(st.field.get()));
    st.h2_coeffs.assign(st.pe2(), UniPoly::zero(st.field.get()));
    if (j.contains("h1_coefficients")) {
        const json& co = j.at("h1_coefficients");
        for (auto it = co.begin(); it != co.end(); ++it) {
            long long i = 0;
            try {
                i = std::stoll(it.key());
            } catch (...) {
                schema_error("/h1_coefficients/" + it.key(), "key must be an index");
            }
            if (i < 1 || i > st.pe1())
                schema_error("/h1_coefficients/" + it.key(), "index out of range");
            st.h1_coeffs[i - 1] = parse_bipoly(it.value(), st.field.get(),
                                               "/h1_coefficients/" + it.key());
        }
    }
    if (j.contains("h2_coefficients")) {
        const json& co = j.at("h2_coefficients");
        for (auto it = co.begin(); it != co.end(); ++it) {
            long long i = 0;
            try {
                i = std::stoll(it.key());
            } catch (...) {
                schema_error("/h2_coefficients/" + it.key(), "key must be an index");
            }
            if (i < 1 || i > st.pe2())
                schema_error("/h2_coefficients/" + it.key(), "index out of range");
            st.h2_coeffs[i - 1] = parse_unipoly(it.value(), st.field.get(),
                                                "/h2_coefficients/" + it.key());
        }
    }
    const json& mo = require_key(j, "monomial", "/monomial");
    st.alpha = require_int(require_key(mo, "alpha", "/monomial/alpha"),
                           "/monomial/alpha");
    st.level = require_int(require_key(mo, "level", "/monomial/level"),
                           "/monomial/level");
    ValidationResult v = validate(st);
    if (!v.ok) throw ValidationError("scenario state invalid: " + v.message);
    return st;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("scenario parse error: ") + e.what());
    }
    if (!j.is_object()) throw ValidationError("scenario: expected a JSON object");
    Scenario sc;
    sc.tau = j.contains("tau")
                 ? static_cast<int>(require_int(j.at("tau"), "/tau"))
                 : 1;
    if (sc.tau == 3)
        throw ValidationError(
            "tau = 3 rejected: with three element directions in ambient "
            "dimension 3 the state admits no monomial stage; no such input "
            "can occur (see README, scenario format)");
    if (sc.tau < 0 || sc.tau > 2)
        throw ValidationError("tau must be 0, 1 or 2");
    switch (sc.tau) {
        case 0: sc.tau0 = parse_tau0(j); break;
        case 1: sc.situation = parse_tau1(j); break;
        case 2: sc.tau2 = parse_tau2(j); break;
    }
    if (j.contains("seed")) sc.seed = require_int(j.at("seed"), "/seed");
    if (j.contains("limits")) {
        const json& l = j.at("limits");
        if (l.contains("max_depth"))
            sc.limits.max_depth =
                static_cast<int>(require_int(l.at("max_depth"), "/limits/max_depth"));
        if (l.contains("field_extension_cap"))
            sc.limits.field_extension_cap = static_cast<int>(
                require_int(l.at("field_extension_cap"), "/limits/field_extension_cap"));
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str());
}

std::string scenario_to_json(const Scenario& sc) {
    json j;
    j["tau"] = sc.tau;
    if (sc.tau == 1) {
        const Situation& s = *sc.situation;
        json field;
        field["p"] = s.field->p;
        field["m"] = s.field->m;
        if (s.field->m > 1) {
            json mod = json::array();
            for (uint32_t c : s.field->modulus) mod.push_back(c);
            field["modulus"] = mod;
        }
        j["field"] = field;
        j["e"] = s.e;
        json co = json::object();
        for (size_t i = 0; i < s.coeffs.size(); ++i)
            if (!s.coeffs[i].is_zero())
                co[std::to_string(i + 1)] = bipoly_to_json(s.coeffs[i]);
        j["coefficients"] = co;
        j["monomial"] = {{"alpha", s.alpha}, {"beta", s.beta}, {"level", s.level}};
        json dv = json::object();
        if (s.div_x.present) dv["x"] = {{"age", s.div_x.age}};
        if (s.div_y.present) dv["y"] = {{"age", s.div_y.age}};
        j["divisors"] = dv;
        if (s.step_count != 0) j["step_count"] = s.step_count;
    } else if (sc.tau == 0) {
        const Tau0State& st = *sc.tau0;
        j["level"] = st.level;
        json comps = json::array();
        for (const auto& c : st.components)
            comps.push_back({{"id", c.id},
                             {"multiplicity", c.multiplicity},
                             {"through_point", c.through_point}});
        j["components"] = comps;
    } else {
        const Tau2State& st = *sc.tau2;
        json field;
        field["p"] = st.field->p;
        field["m"] = st.field->m;
        if (st.field->m > 1) {
            json mod = json::array();
            for (uint32_t c : st.field->modulus) mod.push_back(c);
            field["modulus"] = mod;
        }
        j["field"] = field;
        j["e1"] = st.e1;
        j["e2"] = st.e2;
        json h1 = json::object(), h2 = json::object();
        for (size_t i = 0; i < st.h1_coeffs.size(); ++i)
            if (!st.h1_coeffs[i].is_zero())
                h1[std::to_string(i + 1)] = bipoly_to_json(st.h1_coeffs[i]);
        for (size_t i = 0; i < st.h2_coeffs.size(); ++i)
            if (!st.h2_coeffs[i].is_zero())
                h2[std::to_string(i + 1)] = unipoly_to_json(st.h2_coeffs[i]);
        j["h1_coefficients"] = h1;
        j["h2_coefficients"] = h2;
        j["monomial"] = {{"alpha", st.alpha}, {"level", st.level}};
    }
    if (sc.seed) j["seed"] = *sc.seed;
    return j.dump(2) + "\n";
}

void save_scenario(const Scenario& sc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write scenario file: " + path);
    out << scenario_to_json(sc);
}

}  // namespace monres
