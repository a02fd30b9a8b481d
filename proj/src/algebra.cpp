#include "chargealg/algebra.hpp"

#include "chargealg/errors.hpp"

namespace chargealg {

Expr poisson(const Expr &a, const Expr &b, const SymbolTable &table) {
    ExprAccumulator acc;
    for (std::size_t i = 0; i < table.dof(); ++i) {
        const SymbolId q = table.coordinate(i);
        const SymbolId p = table.momentum(i);
        acc.add(diff(a, q) * diff(b, p));
        acc.add(diff(a, p) * diff(b, q), Rational(-1));
    }
    return acc.take();
}

Expr check_conservation(const Expr &Q, const Expr &H, const SymbolTable &table) {
    return poisson(Q, H, table) + diff(Q, table.time());
}

ExprMatrix central_extension_direct(const ChargeSet &charges, const StructureConstants &C, const SymbolTable &table) {
    const std::size_t w = charges.size();
    ExprMatrix L(w, std::vector<Expr>(w));
    for (std::size_t r = 0; r < w; ++r) {
        for (std::size_t s = 0; s < w; ++s) {
            ExprAccumulator acc;
            acc.add(poisson(charges[r].charge, charges[s].charge, table));
            for (std::size_t u = 0; u < w; ++u) {
                if (C(u, r, s) != 0) {
                    acc.add(charges[u].charge, C(u, r, s));
                }
            }
            L[r][s] = acc.take();
        }
    }
    return L;
}

ExprMatrix central_extension_formula(const ChargeSet &charges, const StructureConstants &C, const SystemSpec &spec) {
    const auto &table = spec.symbols;
    const std::size_t w = charges.size();
    ExprMatrix L(w, std::vector<Expr>(w));
    for (std::size_t r = 0; r < w; ++r) {
        for (std::size_t s = 0; s < w; ++s) {
            ExprAccumulator acc;
            for (std::size_t j = 0; j < table.dof(); ++j) {
                const SymbolId q = table.coordinate(j);
                acc.add(diff(charges[s].lambda, q) * spec.generators[r].delta_q[j]);
                acc.add(diff(charges[r].lambda, q) * spec.generators[s].delta_q[j], Rational(-1));
            }
            for (std::size_t u = 0; u < w; ++u) {
                if (C(u, r, s) != 0) {
                    acc.add(charges[u].lambda, -C(u, r, s));
                }
            }
            L[r][s] = acc.take();
        }
    }
    return L;
}

std::vector<std::string> AlgebraReport::failures() const {
    std::vector<std::string> out;
    if (!consistent) {
        out.emplace_back("L_direct and L_formula differ");
    }
    if (!antisymmetric) {
        out.emplace_back("L is not antisymmetric");
    }
    if (!central) {
        out.emplace_back("L depends on coordinates, momenta or time");
    }
    if (!constant) {
        out.emplace_back("derivatives of L do not vanish");
    }
    if (!jacobi) {
        out.emplace_back("structure constants violate the Jacobi identity");
    }
    if (!cocycle) {
        out.emplace_back("L violates the cocycle condition");
    }
    return out;
}

AlgebraReport analyze(const SystemSpec &spec) {
    validate(spec);
    AlgebraReport rep;
    rep.phase = legendre_transform(spec);
    const auto &table = spec.symbols;
    rep.charges = derive_charges(rep.phase);
    rep.C = structure_constants(spec);

    for (const auto &c : rep.charges.charges) {
        rep.conservation.push_back(check_conservation(c.charge, rep.phase.hamiltonian, table));
        if (!rep.conservation.back().is_zero()) {
            throw InconsistencyError("charge '" + c.name + "' is not conserved: {Q, H} + dQ/dt = " +
                                     render(rep.conservation.back(), table));
        }
    }

    rep.L_direct = central_extension_direct(rep.charges, rep.C, table);
    rep.L_formula = central_extension_formula(rep.charges, rep.C, spec);

    const std::size_t w = rep.charges.size();
    rep.consistent = rep.L_direct == rep.L_formula;
    rep.antisymmetric = true;
    rep.central = true;
    rep.constant = true;
    for (std::size_t r = 0; r < w; ++r) {
        for (std::size_t s = 0; s < w; ++s) {
            const Expr &e = rep.L_direct[r][s];
            rep.antisymmetric = rep.antisymmetric && e == -rep.L_direct[s][r];
            for (auto kind : {SymbolKind::Coordinate, SymbolKind::Momentum, SymbolKind::Time, SymbolKind::Velocity}) {
                rep.central = rep.central && !e.depends_on_kind(table, kind);
            }
            bool zero = diff(e, table.time()).is_zero();
            for (std::size_t j = 0; j < table.dof(); ++j) {
                zero = zero && diff(e, table.coordinate(j)).is_zero() && diff(e, table.momentum(j)).is_zero();
            }
            rep.constant = rep.constant && zero;
        }
    }

    rep.jacobi = rep.C.antisymmetric() && rep.C.satisfies_jacobi();
    rep.cocycle = true;
    for (std::size_t r = 0; r < w; ++r) {
        for (std::size_t s = 0; s < w; ++s) {
            for (std::size_t t = 0; t < w; ++t) {
                ExprAccumulator acc;
                for (std::size_t u = 0; u < w; ++u) {
                    acc.add(rep.L_direct[u][t], rep.C(u, r, s));
                    acc.add(rep.L_direct[u][r], rep.C(u, s, t));
                    acc.add(rep.L_direct[u][s], rep.C(u, t, r));
                }
                rep.cocycle = rep.cocycle && acc.take().is_zero();
            }
        }
    }
    return rep;
}

} // namespace chargealg
