#include "chargealg/report.hpp"

#include <algorithm>

#include <fmt/format.h>

#include <json.hpp>

#include "chargealg/errors.hpp"

namespace chargealg {

namespace {

using Json = nlohmann::ordered_json;

std::string status_name(ExitStatus s) {
    switch (s) {
    case ExitStatus::Ok:
        return "ok";
    case ExitStatus::Rejected:
        return "rejected";
    case ExitStatus::Inconsistent:
        return "inconsistent";
    }
    return "unknown";
}

Json matrix_json(const ExprMatrix &m, const SymbolTable &table) {
    Json out = Json::array();
    for (const auto &row : m) {
        Json r = Json::array();
        for (const auto &e : row) {
            r.push_back(render(e, table));
        }
        out.push_back(r);
    }
    return out;
}

Json algebra_json(const AlgebraReport &a) {
    const auto &ps = a.phase;
    const auto &table = ps.symbols();
    const auto &spec = ps.spec;
    Json j;
    j["regularity"] = {{"regular", true},
                       {"hessian", matrix_json(ps.hessian, table)},
                       {"hessian_det", render(ps.hessian_det, table)}};
    Json momenta = Json::array();
    Json velocities = Json::array();
    for (std::size_t i = 0; i < table.dof(); ++i) {
        momenta.push_back(render(ps.momenta[i], table));
        velocities.push_back(render(ps.inverse_velocity_map[i], table));
    }
    j["momenta"] = momenta;
    j["inverse_velocity_map"] = velocities;
    j["hamiltonian"] = render(ps.hamiltonian, table);

    Json gens = Json::array();
    const auto coords = table.coordinate_names();
    for (std::size_t r = 0; r < a.charges.size(); ++r) {
        const auto &c = a.charges[r];
        const auto &g = spec.generators[r];
        Json dq = Json::object();
        Json dcq = Json::object();
        for (std::size_t i = 0; i < coords.size(); ++i) {
            dq[coords[i]] = render(g.delta_q[i], table);
            dcq[coords[i]] = render(c.canonical_variation[i], table);
        }
        gens.push_back({{"name", c.name},
                        {"delta_q", dq},
                        {"delta_t", render(g.delta_t, table)},
                        {"lambda", render(c.lambda, table)},
                        {"lambda_declared", c.lambda_declared},
                        {"charge_config", render(c.config_charge, table)},
                        {"charge", render(c.charge, table)},
                        {"canonical_variation", dcq},
                        {"conservation_residual", render(a.conservation[r], table)}});
    }
    j["generators"] = gens;

    Json C = Json::array();
    const std::size_t w = a.charges.size();
    for (std::size_t r = 0; r < w; ++r) {
        for (std::size_t s = r + 1; s < w; ++s) {
            for (std::size_t u = 0; u < w; ++u) {
                if (a.C(u, r, s) != 0) {
                    C.push_back({{"u", a.charges[u].name},
                                 {"r", a.charges[r].name},
                                 {"s", a.charges[s].name},
                                 {"value", to_string(a.C(u, r, s))}});
                }
            }
        }
    }
    j["structure_constants"] = C;

    Json names = Json::array();
    for (const auto &c : a.charges.charges) {
        names.push_back(c.name);
    }
    j["central_extension"] = {{"order", names},
                              {"direct", matrix_json(a.L_direct, table)},
                              {"formula", matrix_json(a.L_formula, table)},
                              {"consistent", a.consistent},
                              {"antisymmetric", a.antisymmetric},
                              {"central", a.central},
                              {"constant", a.constant},
                              {"cocycle", a.cocycle},
                              {"jacobi", a.jacobi}};
    const bool extended = std::any_of(a.L_direct.begin(), a.L_direct.end(), [](const auto &row) {
        return std::any_of(row.begin(), row.end(), [](const Expr &x) { return !x.is_zero(); });
    });
    if (extended) {
        j["central_extension"]["note"] =
            "whether this cocycle is a coboundary (a removable extension) is not decided";
    }
    return j;
}

Json numeric_json(const NumericSettings &s, const NumericReport &n) {
    Json bindings = Json::object();
    for (const auto &[k, v] : s.config.bindings) {
        bindings[k] = v;
    }
    Json checks = Json::array();
    for (const auto &c : n.checks) {
        checks.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass}});
    }
    return {{"dt", s.config.dt},
            {"horizon", s.config.horizon},
            {"seed", s.config.seed},
            {"tolerance", s.config.tolerance},
            {"flow_tolerance", s.config.flow_tolerance},
            {"samples", s.samples},
            {"bindings", bindings},
            {"pass", n.pass()},
            {"extension", n.extension},
            {"checks", checks},
            {"notes", n.notes}};
}

Json to_json(const Report &rep) {
    Json j;
    j["schema"] = kReportSchema;
    j["system"] = rep.system;
    j["source"] = rep.source;
    j["status"] = status_name(rep.status);
    j["exit_code"] = static_cast<int>(rep.status);
    j["conventions"] = {{"poisson", "{q_i, p_j} = delta_ij"},
                        {"structure_constants", "commutator of generator vector fields on (q, t), (r, s) order"},
                        {"central_extension", "L_rs = {Q_r, Q_s} + C^u_rs Q_u"},
                        {"surface_term_gauge", "Lambda(0, 0) = 0"}};
    if (rep.algebra) {
        const Json a = algebra_json(*rep.algebra);
        for (const auto &[k, v] : a.items()) {
            j[k] = v;
        }
    }
    if (rep.numeric && rep.settings) {
        j["numeric"] = numeric_json(*rep.settings, *rep.numeric);
    }
    if (rep.error) {
        Json details = Json::object();
        for (const auto &[k, v] : rep.error->details) {
            details[k] = v;
        }
        j["error"] = {{"kind", rep.error->kind}, {"message", rep.error->message}, {"details", details}};
    }
    return j;
}

std::string yes_no(const Json &b) { return b.get<bool>() ? "yes" : "no"; }

void text_matrix(std::string &out, const Json &m, const Json &names) {
    std::size_t width = 0;
    std::size_t label = 0;
    for (const auto &row : m) {
        for (const auto &e : row) {
            width = std::max(width, e.get<std::string>().size());
        }
    }
    for (const auto &n : names) {
        label = std::max(label, n.get<std::string>().size());
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
        out += fmt::format("    {:<{}} [", names[r].get<std::string>(), label);
        for (std::size_t s = 0; s < m[r].size(); ++s) {
            out += fmt::format(" {:>{}}", m[r][s].get<std::string>(), width);
        }
        out += " ]\n";
    }
}

std::string number(const Json &v) {
    if (v.is_number_float()) {
        return fmt::format("{:.6g}", v.get<double>());
    }
    return v.dump();
}

} // namespace

std::pair<ExitStatus, ErrorInfo> classify(const std::exception &e) {
    ErrorInfo info;
    info.message = e.what();
    ExitStatus status = ExitStatus::Rejected;
    if (auto *x = dynamic_cast<const ParseError *>(&e)) {
        info.kind = "parse";
        info.details["line"] = std::to_string(x->span().line);
        info.details["column"] = std::to_string(x->span().column);
    } else if (auto *x = dynamic_cast<const NotASymmetryError *>(&e)) {
        info.kind = "not_a_symmetry";
        info.details["generator"] = x->generator();
        info.details["residual"] = x->residual();
    } else if (auto *x = dynamic_cast<const NotClosedError *>(&e)) {
        info.kind = "not_closed";
        info.details["first"] = x->first();
        info.details["second"] = x->second();
        std::string residual;
        for (const auto &r : x->residual()) {
            residual += (residual.empty() ? "" : ", ") + r;
        }
        info.details["commutator"] = "(" + residual + ")";
    } else if (dynamic_cast<const RegularityError *>(&e)) {
        info.kind = "regularity";
    } else if (dynamic_cast<const UnsupportedClassError *>(&e)) {
        info.kind = "unsupported";
    } else if (dynamic_cast<const LinearDependenceError *>(&e)) {
        info.kind = "linear_dependence";
    } else if (dynamic_cast<const RejectionError *>(&e)) {
        info.kind = "rejected";
    } else if (auto *x = dynamic_cast<const IntegrationFailure *>(&e)) {
        info.kind = "integration_failure";
        std::string state;
        for (double v : x->last_good_state()) {
            state += (state.empty() ? "" : ", ") + fmt::format("{:.17g}", v);
        }
        info.details["last_good_state"] = "(" + state + ")";
        status = ExitStatus::Inconsistent;
    } else if (dynamic_cast<const InconsistencyError *>(&e)) {
        info.kind = "inconsistent";
        status = ExitStatus::Inconsistent;
    } else if (dynamic_cast<const UnboundSymbolError *>(&e) || dynamic_cast<const DivisionByZeroError *>(&e)) {
        info.kind = "evaluation";
    } else {
        info.kind = "internal";
        status = ExitStatus::Inconsistent;
    }
    return {status, info};
}

Report build_report(const std::string &text, const std::string &source,
                    const std::optional<NumericSettings> &numeric) {
    Report rep;
    rep.source = source;
    rep.settings = numeric;
    try {
        const SystemSpec spec = parse_system(text);
        rep.system = spec.name;
        rep.algebra = analyze(spec);
        if (!rep.algebra->ok()) {
            std::string why;
            for (const auto &f : rep.algebra->failures()) {
                why += (why.empty() ? "" : "; ") + f;
            }
            rep.status = ExitStatus::Inconsistent;
            rep.error = ErrorInfo{"inconsistent", why, {}};
            return rep;
        }
        if (numeric) {
            rep.numeric = run_numeric_suite(*rep.algebra, numeric->config, numeric->samples);
            if (!rep.numeric->pass()) {
                std::string why;
                for (const auto &c : rep.numeric->checks) {
                    if (!c.pass) {
                        why += (why.empty() ? "" : ", ") + c.name;
                    }
                }
                rep.status = ExitStatus::Inconsistent;
                rep.error = ErrorInfo{"numeric_check_failed", "numeric checks failed: " + why, {}};
            }
        }
    } catch (const std::exception &e) {
        auto [status, info] = classify(e);
        rep.status = status;
        rep.error = info;
        if (status == ExitStatus::Rejected) {
            rep.algebra.reset();
            rep.numeric.reset();
        }
    }
    return rep;
}

std::string report_json(const Report &report) { return to_json(report).dump(2) + "\n"; }

std::string report_text(const Report &report) {
    const Json j = to_json(report);
    std::string out;
    out += fmt::format("system: {}\n", j["system"].get<std::string>());
    out += fmt::format("status: {} (exit {})\n", j["status"].get<std::string>(), j["exit_code"].get<int>());
    if (j.contains("regularity")) {
        out += fmt::format("regularity: regular, det(d2L/d dq d dq) = {}\n",
                           j["regularity"]["hessian_det"].get<std::string>());
        out += fmt::format("hamiltonian: H = {}\n", j["hamiltonian"].get<std::string>());
        out += "generators:\n";
        for (const auto &g : j["generators"]) {
            out += fmt::format("  {}\n", g["name"].get<std::string>());
            std::string dq;
            for (const auto &[k, v] : g["delta_q"].items()) {
                dq += fmt::format("{}{} = {}", dq.empty() ? "" : ", ", k, v.get<std::string>());
            }
            out += fmt::format("    delta q: {}; delta t = {}\n", dq, g["delta_t"].get<std::string>());
            out += fmt::format("    lambda = {}{}\n", g["lambda"].get<std::string>(),
                               g["lambda_declared"].get<bool>() ? " (declared)" : " (derived)");
            out += fmt::format("    Q(q, dq, t) = {}\n", g["charge_config"].get<std::string>());
            out += fmt::format("    Q(q, p, t) = {}\n", g["charge"].get<std::string>());
            out += fmt::format("    {{Q, H}} + dQ/dt = {}\n", g["conservation_residual"].get<std::string>());
        }
        out += "structure constants:";
        if (j["structure_constants"].empty()) {
            out += " all zero\n";
        } else {
            out += "\n";
            for (const auto &c : j["structure_constants"]) {
                out += fmt::format("  C^{}_({}, {}) = {}\n", c["u"].get<std::string>(), c["r"].get<std::string>(),
                                   c["s"].get<std::string>(), c["value"].get<std::string>());
            }
        }
        const auto &ce = j["central_extension"];
        out += "central extension L_rs = {Q_r, Q_s} + C^u_rs Q_u:\n";
        text_matrix(out, ce["direct"], ce["order"]);
        out += "  from surface terms:\n";
        text_matrix(out, ce["formula"], ce["order"]);
        out += fmt::format("  consistent: {}  antisymmetric: {}  central: {}  constant: {}  cocycle: {}  jacobi: {}\n",
                           yes_no(ce["consistent"]), yes_no(ce["antisymmetric"]), yes_no(ce["central"]),
                           yes_no(ce["constant"]), yes_no(ce["cocycle"]), yes_no(ce["jacobi"]));
        if (ce.contains("note")) {
            out += fmt::format("  note: {}\n", ce["note"].get<std::string>());
        }
    }
    if (j.contains("numeric")) {
        const auto &n = j["numeric"];
        std::string bindings;
        for (const auto &[k, v] : n["bindings"].items()) {
            bindings += fmt::format("{}{}={}", bindings.empty() ? "" : ",", k, number(v));
        }
        out += fmt::format("numeric: dt = {}, horizon = {}, seed = {}, samples = {}, bindings {{{}}}\n",
                           number(n["dt"]), number(n["horizon"]), number(n["seed"]), number(n["samples"]),
                           bindings);
        out += "  L with bindings:\n";
        for (const auto &row : n["extension"]) {
            std::string cells;
            for (const auto &x : row) {
                cells += fmt::format(" {:>12}", number(x));
            }
            out += fmt::format("   [{} ]\n", cells);
        }
        for (const auto &c : n["checks"]) {
            out += fmt::format("  {:<32} {:>12} <= {:<8} {}\n", c["name"].get<std::string>(), number(c["value"]),
                               number(c["threshold"]), c["pass"].get<bool>() ? "pass" : "FAIL");
        }
        for (const auto &note : n["notes"]) {
            out += fmt::format("  note: {}\n", note.get<std::string>());
        }
    }
    if (j.contains("error")) {
        const auto &e = j["error"];
        out += fmt::format("error ({}): {}\n", e["kind"].get<std::string>(), e["message"].get<std::string>());
        for (const auto &[k, v] : e["details"].items()) {
            out += fmt::format("  {}: {}\n", k, v.get<std::string>());
        }
    }
    return out;
}

} // namespace chargealg
