// monres: exact monomial-stage blow-up engine over finite fields.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "monres/scenario.hpp"
#include "monres/trace.hpp"

namespace {

using namespace monres;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitValidation = 2;
constexpr int kExitInvariantBreach = 3;
constexpr int kExitDepthCap = 4;

const Situation& need_tau1(const Scenario& sc, const std::string& cmd) {
    if (!sc.situation)
        throw ValidationError(cmd + " expects a tau = 1 scenario");
    return *sc.situation;
}

void print_invariants(const Situation& cleaned) {
    NodeInvariants inv = compute_invariants(cleaned);
    std::cout << "mu(P) = " << mu(cleaned, Loc::P).str()
              << ", mu(xi_x) = " << mu(cleaned, Loc::XiX).str()
              << ", mu(xi_y) = " << mu(cleaned, Loc::XiY).str() << "\n";
    std::cout << "H(P) = " << inv.H_P.str() << ", H(xi_x) = " << inv.H_x.str()
              << ", H(xi_y) = " << inv.H_y.str() << "\n";
    std::cout << "point: "
              << (inv.point_class == GoodBad::Good ? "good" : "bad") << "\n";
    if (inv.class_x)
        std::cout << "divisor x: "
                  << (*inv.class_x == GoodBad::Good ? "good" : "bad") << "\n";
    if (inv.class_y)
        std::cout << "divisor y: "
                  << (*inv.class_y == GoodBad::Good ? "good" : "bad") << "\n";
    if (inv.inv) std::cout << "inv_mon = " << inv.inv->str() << "\n";
    std::cout << "in support: " << (inv.in_support ? "yes" : "no") << "\n";
    if (inv.shape)
        std::cout << "support shape: " << support_shape_name(*inv.shape) << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact monomial-stage blow-up engine over finite fields"};
    app.require_subcommand(1);

    std::string file;
    std::string center_opt = "auto";
    std::string trace_path;
    int max_depth = 64;
    int extend_cap = 0;
    uint64_t box = 9;

    auto* c_validate = app.add_subcommand("validate", "check a scenario file");
    c_validate->add_option("file", file)->required();

    auto* c_inv = app.add_subcommand("invariants",
                                     "clean and print the invariants");
    c_inv->add_option("file", file)->required();

    auto* c_clean = app.add_subcommand("clean", "run cleaning, print the result");
    c_clean->add_option("file", file)->required();

    auto* c_blow = app.add_subcommand("blowup", "apply one blow-up");
    c_blow->add_option("file", file)->required();
    c_blow->add_option("--center", center_opt,
                       "point|curve-x|curve-y (default: procedure's choice)");

    auto* c_res = app.add_subcommand("resolve", "expand the full successor tree");
    c_res->add_option("file", file)->required();
    c_res->add_option("--max-depth", max_depth);
    c_res->add_option("--extend-field-cap", extend_cap,
                      "largest total extension degree the driver may grow to");
    c_res->add_option("--trace", trace_path, "write a JSON-lines trace");

    auto* c_oracle = app.add_subcommand("oracle-support",
                                        "brute-force rational support points");
    c_oracle->add_option("file", file)->required();
    c_oracle->add_option("--box", box, "largest field size q to scan");

    auto* c_gamma = app.add_subcommand("gamma",
                                       "combinatorial invariant of a tau=0 state");
    c_gamma->add_option("file", file)->required();

    CLI11_PARSE(app, argc, argv);

    Scenario sc = load_scenario(file);
    if (const char* env = std::getenv("MONRES_SEED")) sc.seed = std::atoll(env);

    if (c_validate->parsed()) {
        std::cout << "ok (tau = " << sc.tau << ")\n";
        return kExitOk;
    }

    if (c_gamma->parsed()) {
        if (!sc.tau0) throw ValidationError("gamma expects a tau = 0 scenario");
        std::cout << "Gamma = " << gamma(*sc.tau0).str() << "\n";
        return kExitOk;
    }

    if (c_inv->parsed()) {
        Situation s = clean(need_tau1(sc, "invariants")).result;
        print_invariants(s);
        return kExitOk;
    }

    if (c_clean->parsed()) {
        CleanReport cr = clean(need_tau1(sc, "clean"));
        std::cout << cr.steps.size() << " cleaning step(s)\n";
        for (const auto& st : cr.steps)
            std::cout << "  at " << loc_name(st.at) << ": w = " << st.w.str()
                      << "\n";
        Scenario out;
        out.tau = 1;
        out.situation = cr.result;
        std::cout << scenario_to_json(out);
        return kExitOk;
    }

    if (c_oracle->parsed()) {
        const Situation& s0 = need_tau1(sc, "oracle-support");
        if (s0.field->order() > box)
            throw ValidationError("field size exceeds --box");
        Situation s = clean(s0).result;
        auto pts = support_oracle(s);
        std::cout << pts.size() << " rational support point(s)\n";
        for (const auto& p : pts)
            std::cout << "  (" << p.x.str() << ", " << p.y.str() << ", "
                      << p.z.str() << ")\n";
        return kExitOk;
    }

    if (c_blow->parsed()) {
        Situation s = clean(need_tau1(sc, "blowup")).result;
        if (!in_support(s)) throw ValidationError("point is not in the support");
        SupportShape shape = support_shape(s);
        std::vector<BlowupOutcome> outcomes;
        if (center_opt == "auto") {
            Center c = choose_center(s);
            std::cout << "center: " << c.name() << "\n";
            if (c.kind == Center::Kind::Point)
                outcomes = blowup_point(s).outcomes;
            else
                outcomes = blowup_curve(
                    s, c.kind == Center::Kind::CurveX ? Axis::X : Axis::Y);
        } else if (center_opt == "point") {
            if (shape != SupportShape::PointOnly)
                throw ValidationError(
                    "the support is one-dimensional here; a point center "
                    "does not apply (support shape: " +
                    support_shape_name(shape) + ")");
            outcomes = blowup_point(s).outcomes;
        } else if (center_opt == "curve-x" || center_opt == "curve-y") {
            Axis axis = center_opt == "curve-x" ? Axis::X : Axis::Y;
            bool available =
                shape == SupportShape::BothCurves ||
                (axis == Axis::X && shape == SupportShape::CurveX) ||
                (axis == Axis::Y && shape == SupportShape::CurveY);
            if (!available)
                throw ValidationError("the requested curve is not in the "
                                      "support (support shape: " +
                                      support_shape_name(shape) + ")");
            outcomes = blowup_curve(s, axis);
        } else {
            throw ValidationError("--center must be point, curve-x or curve-y");
        }
        for (const auto& out : outcomes) {
            std::cout << chart_kind_name(out.chart);
            if (out.chart == ChartKind::PointChartX)
                std::cout << " c=" << out.translation.str();
            std::cout << ": " << out.kind_name();
            if (out.kind == BlowupOutcome::Kind::SigmaDrop)
                std::cout << " (e' = " << out.sigma_e_prime << ")";
            if (out.kind == BlowupOutcome::Kind::Successor) {
                const Situation& n = *out.next;
                std::cout << " monomial (" << n.alpha << "," << n.beta << ","
                          << n.level << ")";
            }
            std::cout << "\n";
        }
        return kExitOk;
    }

    // resolve
    if (sc.tau == 0) {
        Tau0Chain chain = tau0_resolve(*sc.tau0);
        std::cout << chain.steps.size() << " step(s)\n";
        for (const auto& st : chain.steps) {
            std::cout << "  Gamma " << st.before.str() << " -> "
                      << (st.after ? st.after->str() : "resolved") << "\n";
        }
        return kExitOk;
    }
    if (sc.tau == 2) {
        Tau2Chain chain = tau2_resolve(*sc.tau2);
        std::cout << chain.blowups << " blow-up(s); "
                  << (chain.sigma_dropped
                          ? "sigma dropped (element " +
                                std::to_string(chain.drop_element) + ", e' = " +
                                std::to_string(chain.drop_e) + ")"
                          : "support emptied")
                  << "\n";
        return kExitOk;
    }

    ResolveLimits limits = sc.limits;
    if (c_res->count("--max-depth")) limits.max_depth = max_depth;
    if (c_res->count("--extend-field-cap"))
        limits.field_extension_cap = extend_cap;
    ResolveResult result = resolve(need_tau1(sc, "resolve"), limits);
    print_summary(result, std::cout);
    if (!trace_path.empty()) {
        std::ofstream out(trace_path, std::ios::binary);
        if (!out) throw ValidationError("cannot write trace: " + trace_path);
        emit_trace(result, out, sc.seed);
        std::cout << "trace written to " << trace_path << "\n";
    }
    return result.stats.leaves_depth_cap > 0 ? kExitDepthCap : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DecreaseViolation& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return kExitInvariantBreach;
    } catch (const EngineError& e) {
        std::cerr << "engine invariant breach: " << e.what() << "\n";
        return kExitInvariantBreach;
    } catch (const DepthCapExceeded& e) {
        std::cerr << "depth cap: " << e.what() << "\n";
        return kExitDepthCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
