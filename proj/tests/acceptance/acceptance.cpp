// Acceptance checks: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chargealg/algebra.hpp"
#include "chargealg/cli.hpp"
#include "chargealg/errors.hpp"
#include "chargealg/flow.hpp"
#include "chargealg/syntax.hpp"
#include "chargealg/sysdsl.hpp"
#include "support/random.hpp"

using namespace chargealg;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) {
                detail += "; ";
            }
            detail += what;
        }
    }
};

std::string fixture_path(const std::string &name) { return std::string(CHARGEALG_FIXTURE_DIR) + "/" + name; }

SystemSpec fixture(const std::string &name) {
    std::ifstream in(fixture_path(name));
    if (!in) {
        throw std::runtime_error("missing fixture " + name);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
}

const std::vector<std::string> kAccepted = {"galilei.sys", "magnetic.sys", "scale_free.sys", "oscillator.sys",
                                            "schrodinger2d.sys"};

NumericConfig unit_config(const SymbolTable &t) {
    NumericConfig cfg;
    for (auto id : t.parameters()) {
        cfg.bindings[t.name(id)] = 1.0;
    }
    return cfg;
}

Expr P(std::string_view text, const SymbolTable &t) { return parse_expr(text, t); }

std::vector<double> random_element(std::size_t w, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> g(w);
    for (auto &v : g) {
        v = u(rng);
    }
    return g;
}

Outcome galilei() {
    Outcome o;
    const auto rep = analyze(fixture("galilei.sys"));
    const auto &t = rep.phase.symbols();
    const Expr M = Expr::symbol(t.id("M"));
    o.require(rep.C.is_zero(), "C != 0");
    for (std::size_t r = 0; r < 3; ++r) {
        const std::string i = std::to_string(r + 1);
        o.require(rep.charges[r].charge == P("p" + i + "*t - M*q" + i, t), "boost charge " + i);
        o.require(rep.charges[3 + r].charge == P("p" + i, t), "translation charge " + i);
        for (std::size_t s = 0; s < 3; ++s) {
            const Expr expected = r == s ? M : Expr();
            // direct bracket {P_r, K_s} as an independent route
            o.require(poisson(rep.charges[3 + r].charge, rep.charges[s].charge, t) == expected, "{P, K}");
            o.require(rep.L()[3 + r][s] == expected, "L(P_r, K_s) != M delta_rs");
        }
    }
    o.require(rep.ok(), "checks failed");
    return o;
}

Outcome magnetic() {
    Outcome o;
    const auto rep = analyze(fixture("magnetic.sys"));
    const auto &t = rep.phase.symbols();
    const Expr eBc = P("e*B/c", t);
    const int eps[2][2] = {{0, -1}, {1, 0}};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const Expr expected = eBc * Expr(eps[i][j]);
            o.require(rep.L_direct[i][j] == expected, "direct L" + std::to_string(i) + std::to_string(j));
            o.require(rep.L_formula[i][j] == expected, "formula L" + std::to_string(i) + std::to_string(j));
            const std::map<SymbolId, Expr> unit_charge = {{t.id("e"), Expr(1)}, {t.id("c"), Expr(1)}};
            o.require(substitute(rep.L_direct[i][j], unit_charge) == Expr::symbol(t.id("B")) * Expr(eps[i][j]),
                      "B eps with e = c = 1");
        }
    }
    o.require(rep.consistent, "consistent flag false");
    return o;
}

Outcome scale() {
    Outcome o;
    const auto rep = analyze(fixture("scale_free.sys"));
    for (const auto &row : rep.L()) {
        for (const auto &x : row) {
            o.require(x.is_zero(), "nonzero entry");
        }
    }
    o.require(rep.ok(), "checks failed");
    return o;
}

Outcome cross_derivation() {
    Outcome o;
    for (const auto &name : kAccepted) {
        const auto rep = analyze(fixture(name));
        o.require(rep.L_direct == rep.L_formula && rep.consistent, name);
    }
    return o;
}

Outcome constancy() {
    Outcome o;
    for (const auto &name : kAccepted) {
        const auto rep = analyze(fixture(name));
        const auto &t = rep.phase.symbols();
        std::vector<SymbolId> vars = t.coordinates();
        vars.insert(vars.end(), t.momenta().begin(), t.momenta().end());
        vars.push_back(t.time());
        for (const auto &row : rep.L()) {
            for (const auto &x : row) {
                for (auto v : vars) {
                    o.require(diff(x, v).is_zero(), name + " d/d" + t.name(v));
                }
            }
        }
    }
    return o;
}

Outcome conservation() {
    Outcome o;
    double worst = 0.0;
    for (const auto &name : kAccepted) {
        const auto rep = analyze(fixture(name));
        const auto &t = rep.phase.symbols();
        for (std::size_t r = 0; r < rep.charges.size(); ++r) {
            o.require(check_conservation(rep.charges[r].charge, rep.phase.hamiltonian, t).is_zero(),
                      name + " symbolic residual");
        }
        NumericConfig cfg = unit_config(t);
        cfg.horizon = 10.0;
        cfg.dt = 1e-3;
        const PhaseEvaluator eval(t, cfg);
        std::vector<CompiledExpr> Q;
        for (const auto &c : rep.charges.charges) {
            Q.emplace_back(c.charge);
        }
        std::mt19937_64 rng(2024);
        for (int k = 0; k < 20; ++k) {
            const PhaseState x0 = random_state(t.dof(), rng);
            const auto traj = integrate_hamilton(rep.phase, x0, cfg);
            for (const auto &q : Q) {
                const double q0 = eval(q, x0);
                for (const auto &x : traj) {
                    const double rel = std::abs(eval(q, x) - q0) / (1.0 + std::abs(q0));
                    worst = std::max(worst, rel);
                }
            }
        }
    }
    std::ostringstream ss;
    ss << worst;
    o.require(worst <= 1e-6, "drift " + ss.str());
    if (o.pass) {
        o.detail = "max relative drift " + ss.str();
    }
    return o;
}

Outcome cochains() {
    Outcome o;
    const auto rep = analyze(fixture("magnetic.sys"));
    const ChargeFlows flows(rep, unit_config(rep.phase.symbols()));
    std::mt19937_64 rng(77);
    double worst_rel = 0.0;
    double worst_delta2 = 0.0;
    for (int k = 0; k < 50; ++k) {
        const auto g1 = random_element(2, rng);
        const auto g2 = random_element(2, rng);
        const PhaseState x0 = random_state(2, rng);
        // (e B / c) eps_ij g1_i g2_j with eps_12 = -1 and e = B = c = 1
        const double predicted = -g1[0] * g2[1] + g1[1] * g2[0];
        const double diff = flows.omega2(x0, g1, g2) - flows.omega2(x0, g2, g1);
        const double rel = std::abs(diff - predicted) / std::max(std::abs(predicted), 1e-12);
        worst_rel = std::max(worst_rel, rel);
        worst_delta2 = std::max(worst_delta2, std::abs(flows.delta2_lagrangian(x0, g1, g2)));
    }
    o.require(worst_rel <= 1e-6, "omega2 relative error " + std::to_string(worst_rel));
    o.require(worst_delta2 <= 1e-6, "delta2 residual " + std::to_string(worst_delta2));
    if (o.pass) {
        std::ostringstream ss;
        ss << "omega2 rel err " << worst_rel << ", delta2 " << worst_delta2;
        o.detail = ss.str();
    }
    return o;
}

Outcome composition() {
    Outcome o;
    double worst = 0.0;
    for (const char *name : {"magnetic.sys", "galilei.sys"}) {
        const auto rep = analyze(fixture(name));
        const ChargeFlows flows(rep, unit_config(rep.phase.symbols()));
        const std::size_t n = rep.phase.symbols().dof();
        std::mt19937_64 rng(31);
        for (int k = 0; k < 20; ++k) {
            const auto g1 = random_element(flows.size(), rng);
            const auto g2 = random_element(flows.size(), rng);
            const PhaseState x0 = random_state(n, rng);
            std::vector<double> g12(flows.size());
            for (std::size_t r = 0; r < g12.size(); ++r) {
                g12[r] = g1[r] + g2[r];
            }
            worst = std::max(worst, distance(flows.act(g2, flows.act(g1, x0)), flows.act(g12, x0)));
        }
    }
    std::ostringstream ss;
    ss << worst;
    o.require(worst <= 1e-8, "defect " + ss.str());
    if (o.pass) {
        o.detail = "max defect " + ss.str();
    }
    return o;
}

Outcome properties() {
    Outcome o;
    {
        const SymbolTable t({"q1", "q2"}, {{"M", true}});
        std::vector<SymbolId> syms = {t.coordinate(0), t.coordinate(1), t.momentum(0), t.momentum(1), t.time()};
        std::mt19937_64 rng(1);
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            const Expr f = testing::random_polynomial(rng, syms, 3);
            const Expr g = testing::random_polynomial(rng, syms, 3);
            const Expr h = testing::random_polynomial(rng, syms, 3);
            const bool ok =
                poisson(f, g, t) == -poisson(g, f, t) &&
                poisson(f, g * h, t) == poisson(f, g, t) * h + g * poisson(f, h, t) &&
                (poisson(f, poisson(g, h, t), t) + poisson(g, poisson(h, f, t), t) + poisson(h, poisson(f, g, t), t))
                    .is_zero();
            bad += ok ? 0 : 1;
        }
        o.require(bad == 0, std::to_string(bad) + " poisson failures");
    }
    {
        const SymbolTable t({"q1", "q2"}, {{"M", true}});
        const std::vector<std::string> names = {"q1", "q2", "dq1", "M", "t"};
        std::mt19937_64 rng(2);
        std::uniform_real_distribution<double> value(0.5, 1.5);
        int bad = 0;
        for (int i = 0; i < 200; ++i) {
            const Expr e = normalize(testing::random_tree(rng, names, {"M", "q1"}, 4), t);
            std::map<std::string, double> point;
            for (const auto &n : names) {
                point[n] = value(rng);
            }
            const std::string &s = names[static_cast<std::size_t>(i) % names.size()];
            const double exact = eval_numeric(diff(e, s, t), point, t);
            constexpr double h = 1e-5;
            auto plus = point;
            auto minus = point;
            plus[s] += h;
            minus[s] -= h;
            const double fd = (eval_numeric(e, plus, t) - eval_numeric(e, minus, t)) / (2 * h);
            bad += std::abs(exact - fd) <= 1e-6 * std::max(1.0, std::abs(exact)) ? 0 : 1;
        }
        o.require(bad == 0, std::to_string(bad) + " finite-difference failures");
    }
    {
        std::mt19937_64 rng(3);
        int bad = 0;
        for (int i = 0; i < 100; ++i) {
            const auto spec = testing::random_spec(rng);
            bad += parse_system(render_system(spec)) == spec ? 0 : 1;
        }
        o.require(bad == 0, std::to_string(bad) + " round-trip failures");
    }
    return o;
}

Outcome rejection() {
    Outcome o;
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli({"analyze", fixture_path("not_a_symmetry.sys")}, out, err);
    o.require(code == 1, "exit code " + std::to_string(code));
    const std::string text = out.str();
    const auto at = text.find("residual = ");
    o.require(at != std::string::npos, "no residual printed");
    if (at != std::string::npos) {
        const std::string residual = text.substr(at + 11, text.find('\n', at) - at - 11);
        const auto spec = fixture("not_a_symmetry.sys");
        o.require(!parse_expr(residual, spec.symbols).is_zero(), "zero residual");
        o.detail = "residual = " + residual;
    }
    o.require(text.find("central extension") == std::string::npos, "extension reported");
    return o;
}

struct Criterion {
    int id;
    std::string title;
    double budget; // seconds, 0 = none
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "galilei charges and mass extension", 1.0, galilei},
        {2, "magnetic extension (eB/c) eps from both routes", 1.0, magnetic},
        {3, "scale-free particle has no extension", 1.0, scale},
        {4, "direct and surface-term routes agree on every fixture", 0.0, cross_derivation},
        {5, "extensions are free of q, p and t", 0.0, constancy},
        {6, "charges conserved symbolically and along trajectories", 10.0, conservation},
        {7, "two-cochain antisymmetric part and delta^2 on magnetic", 30.0, cochains},
        {8, "flow composition on magnetic and galilei groups", 0.0, composition},
        {9, "poisson axioms, diff vs finite differences, round-trip", 60.0, properties},
        {10, "non-symmetry rejected with residual and exit 1", 0.0, rejection},
    };
    int failed = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget > 0 && secs > c.budget) {
            o.require(false, "over time budget of " + std::to_string(c.budget) + " s");
        }
        failed += o.pass ? 0 : 1;
        std::ostringstream line;
        line.precision(3);
        line << (o.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (" << std::fixed << secs << " s)";
        if (!o.detail.empty()) {
            line << ": " << o.detail;
        }
        std::cout << line.str() << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
