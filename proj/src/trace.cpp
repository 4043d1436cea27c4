#include "monres/trace.hpp"

#include <ostream>

#include "json.hpp"

namespace monres {

using json = nlohmann::ordered_json;

namespace {

json poly_json(const BiPoly& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) {
        json coeff = json::array();
        for (int c : t.second.coeff_vector()) coeff.push_back(c);
        terms.push_back(json::array({t.first.x, t.first.y, coeff}));
    }
    return terms;
}

json elem_json(const FieldElement& c) {
    json v = json::array();
    for (int x : c.coeff_vector()) v.push_back(x);
    return v;
}

json situation_json(const Situation& s) {
    json j;
    j["field"] = {{"p", s.field->p}, {"m", s.field->m}};
    j["e"] = s.e;
    json co = json::object();
    for (size_t i = 0; i < s.coeffs.size(); ++i)
        if (!s.coeffs[i].is_zero())
            co[std::to_string(i + 1)] = poly_json(s.coeffs[i]);
    j["coefficients"] = co;
    j["monomial"] = {{"alpha", s.alpha}, {"beta", s.beta}, {"level", s.level}};
    json dv = json::object();
    if (s.div_x.present) dv["x"] = {{"age", s.div_x.age}};
    if (s.div_y.present) dv["y"] = {{"age", s.div_y.age}};
    j["divisors"] = dv;
    return j;
}

json invariants_json(const NodeInvariants& inv) {
    json j;
    j["in_support"] = inv.in_support;
    j["H"] = {{"P", inv.H_P.str()}, {"xi_x", inv.H_x.str()}, {"xi_y", inv.H_y.str()}};
    j["point_class"] = inv.point_class == GoodBad::Good ? "good" : "bad";
    json classes = json::object();
    if (inv.class_x)
        classes["x"] = *inv.class_x == GoodBad::Good ? "good" : "bad";
    if (inv.class_y)
        classes["y"] = *inv.class_y == GoodBad::Good ? "good" : "bad";
    j["divisor_classes"] = classes;
    if (inv.inv) {
        json tuple = json::array();
        for (const Rat& r : inv.inv->tuple) tuple.push_back(r.str());
        j["inv_mon"] = {{"config", "C" + std::to_string(inv.inv->config)},
                        {"tuple", tuple}};
    }
    if (inv.shape) j["support"] = support_shape_name(*inv.shape);
    return j;
}

struct Emitter {
    std::ostream& os;
    long long next_id = 0;

    long long emit_node(const TraceNode& node) {
        long long id = next_id++;
        json j;
        j["event"] = "node";
        j["id"] = id;
        j["depth"] = node.depth;
        j["situation"] = situation_json(node.state);
        j["invariants"] = invariants_json(node.inv);
        if (node.center) j["center"] = node.center->name();
        if (node.depth_capped) j["depth_capped"] = true;
        if (node.warning) {
            j["warning"] = {
                {"kind", "non_rational_successor_possible"},
                {"min_degree", node.warning->min_degree},
                {"residual_degree", node.warning->residual.degree()}};
        }
        os << j.dump() << "\n";
        for (const auto& step : node.clean_steps) {
            json cj;
            cj["event"] = "clean_step";
            cj["node"] = id;
            cj["at"] = loc_name(step.at);
            cj["w"] = poly_json(step.w);
            os << cj.dump() << "\n";
        }
        for (const auto& child : node.children) {
            json ej;
            ej["event"] = "blowup";
            ej["parent"] = id;
            ej["center"] = node.center ? node.center->name() : "?";
            if (node.center && node.center->kind == Center::Kind::Point) {
                ej["chart"] = chart_kind_name(child.outcome.chart);
                if (child.outcome.chart == ChartKind::PointChartX)
                    ej["c"] = elem_json(child.outcome.translation);
            }
            ej["result"] = child.outcome.kind_name();
            if (child.outcome.kind == BlowupOutcome::Kind::SigmaDrop)
                ej["e_prime"] = child.outcome.sigma_e_prime;
            if (child.outcome.kind == BlowupOutcome::Kind::Successor &&
                !child.outcome.sigma_shift.is_zero())
                ej["normalizing_shift"] = poly_json(child.outcome.sigma_shift);
            long long child_id = -1;
            if (child.node) {
                // ids are assigned depth-first in emission order; the edge
                // line precedes its subtree and names the id it will get
                ej["child"] = next_id;
                os << ej.dump() << "\n";
                child_id = emit_node(*child.node);
                (void)child_id;
            } else {
                os << ej.dump() << "\n";
            }
        }
        return id;
    }
};

}  // namespace

void emit_trace(const ResolveResult& result, std::ostream& os,
                std::optional<long long> seed) {
    Emitter em{os};
    em.emit_node(*result.root);
    json m;
    m["event"] = "manifest";
    m["version"] = kEngineVersion;
    m["nodes"] = result.stats.nodes;
    m["leaves"] = {{"not_in_support", result.stats.leaves_not_in_support},
                   {"sigma_drop", result.stats.leaves_sigma_drop},
                   {"depth_cap", result.stats.leaves_depth_cap}};
    m["successor_edges"] = result.stats.successor_edges;
    m["max_depth"] = result.stats.max_depth;
    m["warnings"] = result.stats.warnings;
    json degs = json::array();
    for (uint32_t d : result.field_degrees) degs.push_back(d);
    m["field_degrees"] = degs;
    if (seed) m["seed"] = *seed;
    os << m.dump() << "\n";
}

void print_summary(const ResolveResult& result, std::ostream& os) {
    const ResolveStats& st = result.stats;
    os << "nodes: " << st.nodes << ", successor edges: " << st.successor_edges
       << ", max depth: " << st.max_depth << "\n";
    os << "leaves: " << st.leaves_not_in_support << " out of support, "
       << st.leaves_sigma_drop << " sigma drop, " << st.leaves_depth_cap
       << " depth cap\n";
    if (st.warnings)
        os << "warnings: " << st.warnings
           << " node(s) may have non-rational successor points\n";
    if (result.field_degrees.size() > 1) {
        os << "field extended:";
        for (uint32_t d : result.field_degrees) os << " m=" << d;
        os << "\n";
    }
}

}  // namespace monres
