#include "chargealg/flow.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "chargealg/errors.hpp"

namespace chargealg {

namespace {

using Field = std::function<void(const std::vector<double> &y, double t, std::vector<double> &dy)>;

/// One classical fourth-order step of size h (may be negative).
void rk4_step(const Field &f, std::vector<double> &y, double t, double h) {
    const std::size_t m = y.size();
    std::vector<double> k1(m), k2(m), k3(m), k4(m), tmp(m);
    f(y, t, k1);
    for (std::size_t i = 0; i < m; ++i) {
        tmp[i] = y[i] + 0.5 * h * k1[i];
    }
    f(tmp, t + 0.5 * h, k2);
    for (std::size_t i = 0; i < m; ++i) {
        tmp[i] = y[i] + 0.5 * h * k2[i];
    }
    f(tmp, t + 0.5 * h, k3);
    for (std::size_t i = 0; i < m; ++i) {
        tmp[i] = y[i] + h * k3[i];
    }
    f(tmp, t + h, k4);
    for (std::size_t i = 0; i < m; ++i) {
        y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
}

bool finite(const std::vector<double> &y) {
    return std::all_of(y.begin(), y.end(), [](double v) { return std::isfinite(v); });
}

std::size_t step_count(double span, double dt) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::abs(span) / dt - 1e-9)));
}

PhaseState unpack(const std::vector<double> &y, std::size_t n, double t) {
    PhaseState x;
    x.q.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
    x.p.assign(y.begin() + static_cast<std::ptrdiff_t>(n), y.begin() + static_cast<std::ptrdiff_t>(2 * n));
    x.t = t;
    return x;
}

std::vector<double> pack(const PhaseState &x) {
    std::vector<double> y = x.q;
    y.insert(y.end(), x.p.begin(), x.p.end());
    return y;
}

/// Values indexed by SymbolId for a given state.
class PointBuffer {
  public:
    PointBuffer(const SymbolTable &table, std::vector<double> base) : table_(&table), values_(std::move(base)) {}

    std::span<const double> at(const double *q, const double *p, double t) {
        const std::size_t n = table_->dof();
        for (std::size_t i = 0; i < n; ++i) {
            values_[table_->coordinate(i)] = q[i];
            values_[table_->momentum(i)] = p[i];
        }
        values_[table_->time()] = t;
        return values_;
    }

  private:
    const SymbolTable *table_;
    std::vector<double> values_;
};

std::vector<double> bound_parameters(const SymbolTable &table, const NumericConfig &cfg) {
    std::vector<double> base(table.size(), 0.0);
    for (auto id : table.parameters()) {
        auto it = cfg.bindings.find(table.name(id));
        if (it == cfg.bindings.end()) {
            throw RejectionError("parameter '" + table.name(id) + "' needs a numeric binding");
        }
        base[id] = it->second;
    }
    return base;
}

} // namespace

std::vector<double> PhaseState::flat() const {
    std::vector<double> out = pack(*this);
    out.push_back(t);
    return out;
}

double distance(const PhaseState &a, const PhaseState &b) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.q.size(); ++i) {
        sum += (a.q[i] - b.q[i]) * (a.q[i] - b.q[i]) + (a.p[i] - b.p[i]) * (a.p[i] - b.p[i]);
    }
    return std::sqrt(sum);
}

void check_config(const NumericConfig &cfg, const SymbolTable &table) {
    if (!(cfg.dt > 0) || !std::isfinite(cfg.dt)) {
        throw RejectionError("dt must be a positive number");
    }
    if (!(cfg.horizon > 0) || !std::isfinite(cfg.horizon)) {
        throw RejectionError("the horizon must be a positive number");
    }
    if (!(cfg.tolerance > 0) || !(cfg.flow_tolerance > 0)) {
        throw RejectionError("tolerances must be positive");
    }
    for (const auto &[name, value] : cfg.bindings) {
        const auto id = table.find(name);
        if (!id || table.kind(*id) != SymbolKind::Parameter) {
            throw RejectionError("binding '" + name + "' does not name a declared parameter");
        }
        if (!std::isfinite(value)) {
            throw RejectionError("binding '" + name + "' is not finite");
        }
        if (table.positive(*id) && !(value > 0)) {
            throw RejectionError("parameter '" + name + "' is declared > 0 but bound to " + std::to_string(value));
        }
    }
    for (auto id : table.parameters()) {
        if (!cfg.bindings.contains(table.name(id))) {
            throw RejectionError("parameter '" + table.name(id) + "' needs a numeric binding (--bind " +
                                 table.name(id) + "=...)");
        }
    }
}

PhaseState random_state(std::size_t dof, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> time(0.0, 1.0);
    PhaseState x;
    for (std::size_t i = 0; i < dof; ++i) {
        x.q.push_back(unit(rng));
    }
    for (std::size_t i = 0; i < dof; ++i) {
        x.p.push_back(unit(rng));
    }
    x.t = time(rng);
    return x;
}

PhaseEvaluator::PhaseEvaluator(const SymbolTable &table, const NumericConfig &cfg)
    : table_(&table), base_(bound_parameters(table, cfg)) {}

double PhaseEvaluator::operator()(const CompiledExpr &e, const PhaseState &x) const {
    PointBuffer buf(*table_, base_);
    return e(buf.at(x.q.data(), x.p.data(), x.t));
}

Trajectory integrate_hamilton(const PhaseSystem &ps, const PhaseState &x0, const NumericConfig &cfg) {
    const auto &table = ps.symbols();
    const std::size_t n = table.dof();
    std::vector<CompiledExpr> dHdq;
    std::vector<CompiledExpr> dHdp;
    for (std::size_t i = 0; i < n; ++i) {
        dHdq.emplace_back(diff(ps.hamiltonian, table.coordinate(i)));
        dHdp.emplace_back(diff(ps.hamiltonian, table.momentum(i)));
    }
    PointBuffer buf(table, bound_parameters(table, cfg));
    Field field = [&](const std::vector<double> &y, double t, std::vector<double> &dy) {
        const auto v = buf.at(y.data(), y.data() + n, t);
        for (std::size_t i = 0; i < n; ++i) {
            dy[i] = dHdp[i](v);
            dy[n + i] = -dHdq[i](v);
        }
    };

    const std::size_t steps = step_count(cfg.horizon, cfg.dt);
    const double h = cfg.horizon / static_cast<double>(steps);
    Trajectory out;
    out.reserve(steps + 1);
    out.push_back(x0);
    std::vector<double> y = pack(x0);
    for (std::size_t k = 0; k < steps; ++k) {
        const double t = x0.t + h * static_cast<double>(k);
        rk4_step(field, y, t, h);
        if (!finite(y)) {
            throw IntegrationFailure("non-finite state at t = " + std::to_string(t + h), out.back().flat());
        }
        out.push_back(unpack(y, n, x0.t + h * static_cast<double>(k + 1)));
    }
    return out;
}

double charge_drift(const Expr &Q, const PhaseSystem &ps, const Trajectory &trajectory, const NumericConfig &cfg) {
    const PhaseEvaluator eval(ps.symbols(), cfg);
    const CompiledExpr q(Q);
    const double q0 = eval(q, trajectory.front());
    double worst = 0.0;
    for (const auto &x : trajectory) {
        worst = std::max(worst, std::abs(eval(q, x) - q0));
    }
    return worst;
}

PhaseState canonical_flow(const PhaseSystem &ps, const Expr &G, const PhaseState &x0, double sigma,
                          const NumericConfig &cfg) {
    const auto &table = ps.symbols();
    const std::size_t n = table.dof();
    std::vector<CompiledExpr> dGdq;
    std::vector<CompiledExpr> dGdp;
    for (std::size_t i = 0; i < n; ++i) {
        dGdq.emplace_back(diff(G, table.coordinate(i)));
        dGdp.emplace_back(diff(G, table.momentum(i)));
    }
    PointBuffer buf(table, bound_parameters(table, cfg));
    const double t = x0.t;
    Field field = [&](const std::vector<double> &y, double, std::vector<double> &dy) {
        const auto v = buf.at(y.data(), y.data() + n, t);
        for (std::size_t i = 0; i < n; ++i) {
            dy[i] = dGdp[i](v);
            dy[n + i] = -dGdq[i](v);
        }
    };
    if (sigma == 0.0) {
        return x0;
    }
    const std::size_t steps = step_count(sigma, cfg.dt);
    const double h = sigma / static_cast<double>(steps);
    std::vector<double> y = pack(x0);
    for (std::size_t k = 0; k < steps; ++k) {
        rk4_step(field, y, 0.0, h);
        if (!finite(y)) {
            throw IntegrationFailure("canonical flow left the finite range", x0.flat());
        }
    }
    return unpack(y, n, t);
}

// ------------------------------------------------------------ ChargeFlows

ChargeFlows::ChargeFlows(const AlgebraReport &report, const NumericConfig &cfg)
    : w_(report.charges.size()), n_(report.phase.symbols().dof()), cfg_(cfg), table_(&report.phase.symbols()),
      base_(bound_parameters(report.phase.symbols(), cfg)), eval_(report.phase.symbols(), cfg), C_(report.C), H_(report.phase.hamiltonian), L_phase_(report.phase.phase_lagrangian) {
    const auto &ps = report.phase;
    const auto &table = ps.symbols();
    for (std::size_t r = 0; r < w_; ++r) {
        const Expr &Q = report.charges[r].charge;
        Q_.emplace_back(Q);
        dQdq_.emplace_back();
        dQdp_.emplace_back();
        for (std::size_t i = 0; i < n_; ++i) {
            dQdq_.back().emplace_back(diff(Q, table.coordinate(i)));
            dQdp_.back().emplace_back(diff(Q, table.momentum(i)));
        }
        lambda_T_.emplace_back(report.charges[r].lambda - ps.phase_lagrangian * ps.spec.generators[r].delta_t);
    }
    L_.assign(w_, std::vector<double>(w_, 0.0));
    for (std::size_t r = 0; r < w_; ++r) {
        for (std::size_t s = 0; s < w_; ++s) {
            // central entries: evaluation at any point gives the constant
            L_[r][s] = eval_(report.L_direct[r][s], PhaseState{std::vector<double>(n_), std::vector<double>(n_), 0.0});
        }
    }
}

PhaseState ChargeFlows::act(const std::vector<double> &alpha, const PhaseState &x) const {
    double size = 0.0;
    for (double a : alpha) {
        size += std::abs(a);
    }
    if (size == 0.0) {
        return x;
    }
    const std::size_t n = n_;
    const double t = x.t;
    PointBuffer buf(*table_, base_);
    Field field = [&](const std::vector<double> &y, double, std::vector<double> &dy) {
        const auto v = buf.at(y.data(), y.data() + n, t);
        std::fill(dy.begin(), dy.end(), 0.0);
        for (std::size_t r = 0; r < w_; ++r) {
            if (alpha[r] == 0.0) {
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                dy[i] += alpha[r] * dQdp_[r][i](v);
                dy[n + i] -= alpha[r] * dQdq_[r][i](v);
            }
        }
    };
    const std::size_t steps = step_count(size, cfg_.dt);
    const double h = 1.0 / static_cast<double>(steps);
    std::vector<double> y = pack(x);
    for (std::size_t k = 0; k < steps; ++k) {
        rk4_step(field, y, 0.0, h);
    }
    if (!finite(y)) {
        throw IntegrationFailure("canonical flow left the finite range", x.flat());
    }
    return unpack(y, n, t);
}

double ChargeFlows::lambda_T_f(const std::vector<double> &alpha, const PhaseState &x) const {
    double size = 0.0;
    for (double a : alpha) {
        size += std::abs(a);
    }
    if (size == 0.0) {
        return 0.0;
    }
    const std::size_t n = n_;
    const double t = x.t;
    PointBuffer buf(*table_, base_);
    // (q, p, I) with dI/db = alpha_r Lambda^T_r
    Field field = [&](const std::vector<double> &y, double, std::vector<double> &dy) {
        const auto v = buf.at(y.data(), y.data() + n, t);
        std::fill(dy.begin(), dy.end(), 0.0);
        for (std::size_t r = 0; r < w_; ++r) {
            if (alpha[r] == 0.0) {
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) {
                dy[i] += alpha[r] * dQdp_[r][i](v);
                dy[n + i] -= alpha[r] * dQdq_[r][i](v);
            }
            dy[2 * n] += alpha[r] * lambda_T_[r](v);
        }
    };
    const std::size_t steps = step_count(size, cfg_.dt);
    const double h = 1.0 / static_cast<double>(steps);
    std::vector<double> y = pack(x);
    y.push_back(0.0);
    for (std::size_t k = 0; k < steps; ++k) {
        rk4_step(field, y, 0.0, h);
    }
    if (!finite(y)) {
        throw IntegrationFailure("surface-term quadrature left the finite range", x.flat());
    }
    return y.back();
}

bool ChargeFlows::commuting(const std::vector<double> &a, const std::vector<double> &b) const {
    std::vector<std::size_t> support;
    for (std::size_t r = 0; r < w_; ++r) {
        if (a[r] != 0.0 || b[r] != 0.0) {
            support.push_back(r);
        }
    }
    for (auto r : support) {
        for (auto s : support) {
            for (std::size_t u = 0; u < w_; ++u) {
                if (C_(u, r, s) != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<double> ChargeFlows::compose(const std::vector<double> &a, const std::vector<double> &b) const {
    if (!commuting(a, b)) {
        throw RejectionError("group elements do not lie in a commuting subgroup; their product is not available");
    }
    std::vector<double> out(w_);
    for (std::size_t r = 0; r < w_; ++r) {
        out[r] = a[r] + b[r];
    }
    return out;
}

double ChargeFlows::omega2(const PhaseState &x, const std::vector<double> &g1, const std::vector<double> &g2) const {
    return lambda_T_f(g2, act(g1, x)) - lambda_T_f(compose(g1, g2), x) + lambda_T_f(g1, x);
}

double ChargeFlows::predicted_extension(const std::vector<double> &g1, const std::vector<double> &g2) const {
    double sum = 0.0;
    for (std::size_t r = 0; r < w_; ++r) {
        for (std::size_t s = 0; s < w_; ++s) {
            sum += L_[r][s] * g1[r] * g2[s];
        }
    }
    return sum;
}

double ChargeFlows::delta2_lagrangian(const PhaseState &x, const std::vector<double> &g1,
                                      const std::vector<double> &g2) const {
    return lagrangian(act(g2, act(g1, x))) - lagrangian(act(compose(g1, g2), x));
}

// ------------------------------------------------------------ checks

namespace {

std::vector<double> unit_combination(std::size_t w, std::size_t r, double a) {
    std::vector<double> out(w, 0.0);
    out[r] = a;
    return out;
}

std::vector<double> bch_generator(const ChargeFlows &flows, std::size_t r, std::size_t s, double a1, double a2,
                                  double sign) {
    const std::size_t w = flows.size();
    std::vector<double> g(w, 0.0);
    g[r] += a1;
    g[s] += a2;
    for (std::size_t u = 0; u < w; ++u) {
        g[u] += sign * 0.5 * a1 * a2 * flows.structure()(u, r, s).get_d();
    }
    return g;
}

} // namespace

double flow_commutator_defect(const ChargeFlows &flows, std::size_t r, std::size_t s, const PhaseState &x0, double a1,
                              double a2) {
    const std::size_t w = flows.size();
    const PhaseState xrs = flows.act(unit_combination(w, s, a2), flows.act(unit_combination(w, r, a1), x0));
    const PhaseState xsr = flows.act(unit_combination(w, r, a1), flows.act(unit_combination(w, s, a2), x0));
    const PhaseState fp = flows.act(bch_generator(flows, r, s, a1, a2, 1.0), x0);
    const PhaseState fm = flows.act(bch_generator(flows, r, s, a1, a2, -1.0), x0);
    double sum = 0.0;
    auto add = [&](double a, double b, double c, double d) { sum += ((a - b) - (c - d)) * ((a - b) - (c - d)); };
    for (std::size_t i = 0; i < x0.q.size(); ++i) {
        add(xrs.q[i], xsr.q[i], fp.q[i], fm.q[i]);
        add(xrs.p[i], xsr.p[i], fp.p[i], fm.p[i]);
    }
    return std::sqrt(sum);
}

double composition_defect(const ChargeFlows &flows, std::size_t r, std::size_t s, const PhaseState &x0, double a1,
                          double a2) {
    const std::size_t w = flows.size();
    const PhaseState xrs = flows.act(unit_combination(w, s, a2), flows.act(unit_combination(w, r, a1), x0));
    return distance(xrs, flows.act(bch_generator(flows, r, s, a1, a2, 1.0), x0));
}

double lambda_T_f(const ChargeFlows &flows, const std::vector<double> &alpha, const PhaseState &x0) {
    return flows.lambda_T_f(alpha, x0);
}

CoboundaryResult coboundary_check(const ChargeFlows &flows, const PhaseSystem &ps, const std::vector<double> &g1,
                                  const std::vector<double> &g2, const PhaseState &x0) {
    CoboundaryResult out;
    const double w0 = flows.omega2(x0, g1, g2);
    out.omega2_diff = w0 - flows.omega2(x0, g2, g1);
    out.predicted = flows.predicted_extension(g1, g2);
    const Trajectory traj = integrate_hamilton(ps, x0, flows.config());
    constexpr std::size_t probes = 4;
    for (std::size_t k = 1; k <= probes; ++k) {
        const auto &x = traj[(traj.size() - 1) * k / probes];
        out.drift = std::max(out.drift, std::abs(flows.omega2(x, g1, g2) - w0));
    }
    return out;
}

double lie_derivative_defect(const ChargeFlows &flows, const PhaseSystem &ps, const std::vector<double> &g,
                             const PhaseState &x0) {
    // Short trajectory with step h; the stencil needs two samples each side.
    constexpr double h = 1e-2;
    constexpr std::size_t probes = 3;
    NumericConfig cfg = flows.config();
    cfg.dt = h;
    cfg.horizon = h * static_cast<double>(4 * probes + 4);
    const Trajectory traj = integrate_hamilton(ps, x0, cfg);
    double worst = 0.0;
    for (std::size_t k = 0; k < probes; ++k) {
        const std::size_t c = 2 + 4 * k + 2;
        const auto lf = [&](std::size_t i) { return flows.lambda_T_f(g, traj[i]); };
        const double derivative = (lf(c - 2) - 8.0 * lf(c - 1) + 8.0 * lf(c + 1) - lf(c + 2)) / (12.0 * h);
        const double change = flows.lagrangian(flows.act(g, traj[c])) - flows.lagrangian(traj[c]);
        worst = std::max(worst, std::abs(change - derivative) / (1.0 + std::abs(change)));
    }
    return worst;
}

// ------------------------------------------------------------ suite

bool NumericReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const NumericCheck &c) { return c.pass; });
}

NumericReport run_numeric_suite(const AlgebraReport &report, const NumericConfig &cfg, std::size_t samples) {
    const auto &ps = report.phase;
    const auto &table = ps.symbols();
    check_config(cfg, table);
    const ChargeFlows flows(report, cfg);
    const std::size_t w = flows.size();
    const std::size_t n = table.dof();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    NumericReport out;
    out.extension = flows.extension();
    out.samples = samples;

    // Conservation along Hamiltonian trajectories, normalized by 1 + |Q(0)|.
    std::vector<double> drift(w, 0.0);
    double energy_drift = 0.0;
    const bool autonomous = !ps.hamiltonian.depends_on(table.time());
    for (std::size_t k = 0; k < samples; ++k) {
        const PhaseState x0 = random_state(n, rng);
        const Trajectory traj = integrate_hamilton(ps, x0, cfg);
        for (std::size_t r = 0; r < w; ++r) {
            const double q0 = flows.charge(r, x0);
            drift[r] = std::max(drift[r], charge_drift(report.charges[r].charge, ps, traj, cfg) / (1.0 + std::abs(q0)));
        }
        if (autonomous) {
            energy_drift = std::max(energy_drift, charge_drift(ps.hamiltonian, ps, traj, cfg) /
                                                      (1.0 + std::abs(flows.hamiltonian(x0))));
        }
    }
    for (std::size_t r = 0; r < w; ++r) {
        out.checks.push_back({"charge_drift[" + report.charges[r].name + "]", drift[r], cfg.tolerance,
                              drift[r] <= cfg.tolerance});
    }
    if (autonomous) {
        out.checks.push_back({"energy_drift", energy_drift, cfg.tolerance, energy_drift <= cfg.tolerance});
    }

    // Commuting blocks: the whole group if C vanishes, otherwise every
    // commuting pair of generators.
    std::vector<std::vector<std::size_t>> blocks;
    if (report.C.is_zero()) {
        std::vector<std::size_t> all(w);
        for (std::size_t r = 0; r < w; ++r) {
            all[r] = r;
        }
        blocks.push_back(all);
    } else {
        for (std::size_t r = 0; r < w; ++r) {
            for (std::size_t s = r + 1; s < w; ++s) {
                if (flows.commuting(unit_combination(w, r, 1.0), unit_combination(w, s, 1.0))) {
                    blocks.push_back({r, s});
                }
            }
        }
        if (blocks.empty()) {
            out.notes.emplace_back("no commuting pair of generators; cochain checks use one-parameter subgroups");
            for (std::size_t r = 0; r < w; ++r) {
                blocks.push_back({r});
            }
        }
    }

    double flow_defect = 0.0;
    double comp_defect = 0.0;
    std::size_t pairs = 0;
    for (std::size_t r = 0; r < w; ++r) {
        for (std::size_t s = r + 1; s < w; ++s) {
            if (!flows.commuting(unit_combination(w, r, 1.0), unit_combination(w, s, 1.0))) {
                continue;
            }
            ++pairs;
            for (std::size_t k = 0; k < samples; ++k) {
                const PhaseState x0 = random_state(n, rng);
                const double a1 = unit(rng);
                const double a2 = unit(rng);
                flow_defect = std::max(flow_defect, flow_commutator_defect(flows, r, s, x0, a1, a2));
                comp_defect = std::max(comp_defect, composition_defect(flows, r, s, x0, a1, a2));
            }
        }
    }
    if (pairs > 0) {
        out.checks.push_back(
            {"flow_commutator_defect", flow_defect, cfg.flow_tolerance, flow_defect <= cfg.flow_tolerance});
        out.checks.push_back(
            {"composition_defect", comp_defect, cfg.flow_tolerance, comp_defect <= cfg.flow_tolerance});
    } else {
        out.notes.emplace_back("no commuting generator pairs; flow composition checks skipped");
    }

    double omega_error = 0.0;
    double omega_drift = 0.0;
    double delta2 = 0.0;
    double lie = 0.0;
    for (std::size_t k = 0; k < samples; ++k) {
        const auto &block = blocks[k % blocks.size()];
        std::vector<double> g1(w, 0.0);
        std::vector<double> g2(w, 0.0);
        for (auto r : block) {
            g1[r] = unit(rng);
            g2[r] = unit(rng);
        }
        const PhaseState x0 = random_state(n, rng);
        const auto cob = coboundary_check(flows, ps, g1, g2, x0);
        const double err = std::abs(cob.omega2_diff - cob.predicted);
        // relative, with an absolute floor for vanishing predictions
        omega_error = std::max(omega_error, err <= 1e-12 ? 0.0 : err / std::max(std::abs(cob.predicted), 1e-12));
        omega_drift = std::max(omega_drift, cob.drift);
        delta2 = std::max(delta2, std::abs(flows.delta2_lagrangian(x0, g1, g2)));
        lie = std::max(lie, lie_derivative_defect(flows, ps, g1, x0));
    }
    if (samples > 0) {
        out.checks.push_back({"omega2_antisymmetric_error", omega_error, cfg.tolerance, omega_error <= cfg.tolerance});
        out.checks.push_back({"omega2_time_drift", omega_drift, cfg.tolerance, omega_drift <= cfg.tolerance});
        out.checks.push_back({"delta2_lagrangian", delta2, cfg.tolerance, delta2 <= cfg.tolerance});
        out.checks.push_back({"lie_derivative_defect", lie, cfg.tolerance, lie <= cfg.tolerance});
    }
    return out;
}

} // namespace chargealg
