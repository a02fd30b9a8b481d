#include "chargealg/legendre.hpp"

#include "chargealg/errors.hpp"

namespace chargealg {

namespace {

/// Regularity certificate: the determinant must be c * prod(param^k) with
/// c != 0 and every parameter declared positive.
void certify_regular(const Expr &det, const SymbolTable &table) {
    if (det.is_zero()) {
        throw RegularityError("singular Hessian: det(d^2L/d dq d dq) = 0");
    }
    for (auto id : det.symbols()) {
        if (table.kind(id) != SymbolKind::Parameter) {
            throw UnsupportedClassError("Hessian determinant " + render(det, table) + " depends on " +
                                        std::string(to_string(table.kind(id))) + " '" + table.name(id) +
                                        "'; the inverse velocity map would leave the polynomial class");
        }
    }
    auto term = det.as_term();
    if (!term) {
        throw UnsupportedClassError("Hessian determinant " + render(det, table) +
                                    " is not a single parameter monomial; cannot invert exactly");
    }
    for (const auto &f : term->first.factors()) {
        if (!table.positive(f.symbol)) {
            throw RegularityError("cannot certify Hessian determinant " + render(det, table) +
                                  " is nonzero: declare '" + table.name(f.symbol) + " > 0'");
        }
    }
}

ExprMatrix minor_of(const ExprMatrix &m, std::size_t row, std::size_t col) {
    ExprMatrix out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i == row) {
            continue;
        }
        std::vector<Expr> r;
        for (std::size_t j = 0; j < m.size(); ++j) {
            if (j != col) {
                r.push_back(m[i][j]);
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace

HessianResult hessian(const SystemSpec &spec) {
    const auto &table = spec.symbols;
    const std::size_t n = spec.dof();
    HessianResult out;
    out.matrix.assign(n, std::vector<Expr>(n));
    for (std::size_t i = 0; i < n; ++i) {
        const Expr first = diff(spec.lagrangian, table.velocity(i));
        for (std::size_t j = 0; j < n; ++j) {
            out.matrix[i][j] = diff(first, table.velocity(j));
        }
    }
    out.determinant = determinant(out.matrix);
    return out;
}

PhaseSystem legendre_transform(const SystemSpec &spec) {
    const auto &table = spec.symbols;
    const std::size_t n = spec.dof();

    const auto degrees = is_polynomial_in(spec.lagrangian, table.velocities());
    if (!degrees.polynomial) {
        throw UnsupportedClassError("the lagrangian has negative powers of velocities");
    }
    if (degrees.total_degree > 2) {
        throw UnsupportedClassError("the lagrangian has degree " + std::to_string(degrees.total_degree) +
                                    " in the velocities; only degree <= 2 is supported");
    }

    PhaseSystem ps;
    ps.spec = spec;
    auto h = hessian(spec);
    ps.hessian = h.matrix;
    ps.hessian_det = h.determinant;
    certify_regular(ps.hessian_det, table);

    // p_i = W_ij dq_j + b_i(q, t); solve dq = W^{-1} (p - b) with the adjugate.
    std::map<SymbolId, Expr> at_rest;
    for (auto v : table.velocities()) {
        at_rest.emplace(v, Expr());
    }
    std::vector<Expr> offset(n);
    for (std::size_t i = 0; i < n; ++i) {
        ps.momenta.push_back(diff(spec.lagrangian, table.velocity(i)));
        offset[i] = substitute(ps.momenta[i], at_rest);
    }
    const Expr inv_det = Expr(1) / ps.hessian_det;
    ps.inverse_velocity_map.assign(n, Expr());
    for (std::size_t i = 0; i < n; ++i) {
        ExprAccumulator acc;
        for (std::size_t j = 0; j < n; ++j) {
            // inverse(W)_ij = cofactor_ji / det
            const Expr cofactor =
                n == 1 ? Expr(1)
                       : determinant(minor_of(ps.hessian, j, i)) * Expr((i + j) % 2 == 0 ? 1 : -1);
            acc.add(cofactor * (Expr::symbol(table.momentum(j)) - offset[j]));
        }
        ps.inverse_velocity_map[i] = acc.take() * inv_det;
    }

    ExprAccumulator legendre;
    for (std::size_t i = 0; i < n; ++i) {
        legendre.add(Expr::symbol(table.momentum(i)) * Expr::symbol(table.velocity(i)));
    }
    legendre.add(spec.lagrangian, Rational(-1));
    ps.hamiltonian = to_phase(legendre.take(), ps);

    ExprAccumulator lag;
    for (std::size_t i = 0; i < n; ++i) {
        lag.add(Expr::symbol(table.momentum(i)) * diff(ps.hamiltonian, table.momentum(i)));
    }
    lag.add(ps.hamiltonian, Rational(-1));
    ps.phase_lagrangian = lag.take();
    return ps;
}

Expr to_phase(const Expr &e, const PhaseSystem &ps) {
    const auto &table = ps.symbols();
    std::map<SymbolId, Expr> bindings;
    for (std::size_t i = 0; i < table.dof(); ++i) {
        bindings.emplace(table.velocity(i), ps.inverse_velocity_map[i]);
    }
    return substitute(e, bindings);
}

} // namespace chargealg
