#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "chargealg/algebra.hpp"
#include "chargealg/expr.hpp"
#include "chargealg/legendre.hpp"

namespace chargealg {

struct PhaseState {
    std::vector<double> q;
    std::vector<double> p;
    double t = 0.0;

    std::vector<double> flat() const;
};

double distance(const PhaseState &a, const PhaseState &b);

struct NumericConfig {
    double dt = 1e-3;
    double horizon = 10.0;
    std::map<std::string, double> bindings;
    std::uint64_t seed = 0;
    double tolerance = 1e-6;      ///< relative, for nonlinear quantities
    double flow_tolerance = 1e-8; ///< absolute, for flow composition defects
};

/// Throws RejectionError unless dt, T > 0, every parameter is bound to a
/// finite value, positive parameters are bound positive, and no binding
/// names an unknown parameter.
void check_config(const NumericConfig &cfg, const SymbolTable &table);

/// q, p uniform in [-1, 1], t uniform in [0, 1].
PhaseState random_state(std::size_t dof, std::mt19937_64 &rng);

/// Evaluates compiled phase-space expressions with the parameters bound.
class PhaseEvaluator {
  public:
    PhaseEvaluator(const SymbolTable &table, const NumericConfig &cfg);

    double operator()(const CompiledExpr &e, const PhaseState &x) const;
    double operator()(const Expr &e, const PhaseState &x) const { return (*this)(CompiledExpr(e), x); }

  private:
    const SymbolTable *table_;
    std::vector<double> base_;
};

using Trajectory = std::vector<PhaseState>;

/// Classical RK4 at fixed step over [t0, t0 + horizon]; the step is shrunk
/// slightly so the last sample lands on the horizon. Every step is returned.
/// Throws IntegrationFailure on a non-finite state.
Trajectory integrate_hamilton(const PhaseSystem &ps, const PhaseState &x0, const NumericConfig &cfg);

/// max_t |Q(x(t), t) - Q(x0, t0)|
double charge_drift(const Expr &Q, const PhaseSystem &ps, const Trajectory &trajectory, const NumericConfig &cfg);

/// Image of x0 under the canonical flow dq/db = dG/dp, dp/db = -dG/dq for
/// b in [0, sigma], at frozen time.
PhaseState canonical_flow(const PhaseSystem &ps, const Expr &G, const PhaseState &x0, double sigma,
                          const NumericConfig &cfg);

/// Precompiled charges of an analyzed system. A group element is the
/// vector of parameters alpha_r; its action on x is the unit-time flow of
/// G = alpha_r Q_r.
class ChargeFlows {
  public:
    ChargeFlows(const AlgebraReport &report, const NumericConfig &cfg);

    std::size_t size() const { return w_; }
    const NumericConfig &config() const { return cfg_; }
    const PhaseEvaluator &evaluator() const { return eval_; }

    PhaseState act(const std::vector<double> &alpha, const PhaseState &x) const;
    /// Lambda^T_f(x; g) = int_0^1 alpha_r (Lambda_r - L delta^r t)(x(b)) db along the flow.
    double lambda_T_f(const std::vector<double> &alpha, const PhaseState &x) const;
    /// Phase-space Lagrangian p.dH/dp - H.
    double lagrangian(const PhaseState &x) const { return eval_(L_phase_, x); }
    double hamiltonian(const PhaseState &x) const { return eval_(H_, x); }
    double charge(std::size_t r, const PhaseState &x) const { return eval_(Q_[r], x); }

    /// True if C^u_rs = 0 for every r, s in the supports of the elements.
    bool commuting(const std::vector<double> &a, const std::vector<double> &b) const;
    /// Product in a commuting subgroup: alpha_1 + alpha_2. Throws RejectionError otherwise.
    std::vector<double> compose(const std::vector<double> &a, const std::vector<double> &b) const;

    /// omega_2(x; g1, g2) = Lf(x^g1; g2) - Lf(x; g1 g2) + Lf(x; g1)
    double omega2(const PhaseState &x, const std::vector<double> &g1, const std::vector<double> &g2) const;
    /// L_rs g1_r g2_s with the parameters bound.
    double predicted_extension(const std::vector<double> &g1, const std::vector<double> &g2) const;
    /// Coboundary applied twice to the 0-cochain L: L((x^g1)^g2) - L(x^(g1 g2)).
    double delta2_lagrangian(const PhaseState &x, const std::vector<double> &g1,
                             const std::vector<double> &g2) const;

    const std::vector<std::vector<double>> &extension() const { return L_; }
    const StructureConstants &structure() const { return C_; }

  private:
    std::size_t w_;
    std::size_t n_;
    NumericConfig cfg_;
    const SymbolTable *table_;
    std::vector<double> base_;
    PhaseEvaluator eval_;
    StructureConstants C_;
    CompiledExpr H_;
    CompiledExpr L_phase_;
    std::vector<CompiledExpr> Q_;
    std::vector<std::vector<CompiledExpr>> dQdq_;
    std::vector<std::vector<CompiledExpr>> dQdp_;
    std::vector<CompiledExpr> lambda_T_;
    std::vector<std::vector<double>> L_;
};

/// Distance between x^(r then s) and x^(s then r), less the second-order
/// prediction from C: |(x_rs - x_sr) - (F_+(x) - F_-(x))| with F_+- the flows
/// of a1 Q_r + a2 Q_s +- a1 a2 C^u_rs Q_u / 2. Exact when C vanishes.
double flow_commutator_defect(const ChargeFlows &flows, std::size_t r, std::size_t s, const PhaseState &x0, double a1,
                              double a2);

/// |x^(r then s) - F_+(x)|: the composed flow against the single flow of the
/// composed generator.
double composition_defect(const ChargeFlows &flows, std::size_t r, std::size_t s, const PhaseState &x0, double a1,
                          double a2);

double lambda_T_f(const ChargeFlows &flows, const std::vector<double> &alpha, const PhaseState &x0);

struct CoboundaryResult {
    double omega2_diff = 0.0; ///< omega_2(g1, g2) - omega_2(g2, g1)
    double predicted = 0.0;   ///< L_rs g1_r g2_s
    double drift = 0.0;       ///< max_t |omega_2(x(t)) - omega_2(x0)| along the Hamiltonian trajectory
};

/// Requires g1 and g2 to lie in a commuting subgroup.
CoboundaryResult coboundary_check(const ChargeFlows &flows, const PhaseSystem &ps, const std::vector<double> &g1,
                                  const std::vector<double> &g2, const PhaseState &x0);

/// max over sample times along the trajectory from x0 of
/// |L(x^g) - L(x) - d/dt Lambda^T_f(x; g)| / (1 + |L(x^g) - L(x)|), with the
/// time derivative taken by a fourth-order central difference.
double lie_derivative_defect(const ChargeFlows &flows, const PhaseSystem &ps, const std::vector<double> &g,
                             const PhaseState &x0);

struct NumericCheck {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct NumericReport {
    std::size_t samples = 0;
    std::vector<NumericCheck> checks;
    std::vector<std::string> notes;
    std::vector<std::vector<double>> extension; ///< L_rs with the parameters bound

    bool pass() const;
};

/// Conservation drift, flow composition, cochain and Lie-derivative checks
/// on `samples` seeded random points.
NumericReport run_numeric_suite(const AlgebraReport &report, const NumericConfig &cfg, std::size_t samples = 20);

} // namespace chargealg
