#include "chargealg/noether.hpp"

#include <map>

#include "chargealg/errors.hpp"
#include "linsolve.hpp"

namespace chargealg {

namespace {

Expr var(SymbolId id) { return Expr::symbol(id); }

/// The generator as a vector on (q_1..q_n, t).
std::vector<Expr> generator_vector(const GeneratorDecl &g) {
    std::vector<Expr> out = g.delta_q;
    out.push_back(g.delta_t);
    return out;
}

using EquationKey = std::pair<std::size_t, Monomial>;

struct EquationKeyLess {
    bool operator()(const EquationKey &a, const EquationKey &b) const {
        if (a.first != b.first) {
            return a.first < b.first;
        }
        return MonomialOrder{}(a.second, b.second);
    }
};

/// Writes target = sum_u x_u basis_u as one equation per (component,
/// monomial), restricted to the first `components` entries of each vector.
detail::RationalSystem expansion_system(const std::vector<std::vector<Expr>> &basis, const std::vector<Expr> &target,
                                        std::size_t components) {
    std::map<EquationKey, std::pair<std::vector<Rational>, Rational>, EquationKeyLess> rows;
    const std::size_t w = basis.size();
    for (std::size_t u = 0; u < w; ++u) {
        for (std::size_t c = 0; c < components; ++c) {
            for (const auto &[m, coef] : basis[u][c].terms()) {
                auto &row = rows[{c, m}];
                row.first.resize(w);
                row.first[u] = coef;
            }
        }
    }
    for (std::size_t c = 0; c < components && c < target.size(); ++c) {
        for (const auto &[m, coef] : target[c].terms()) {
            auto &row = rows[{c, m}];
            row.first.resize(w);
            row.second = coef;
        }
    }
    detail::RationalSystem system(w);
    for (auto &[key, row] : rows) {
        system.add_row(std::move(row.first), std::move(row.second));
    }
    return system;
}

} // namespace

Expr total_time_derivative(const Expr &e, const SymbolTable &table) {
    if (e.depends_on_kind(table, SymbolKind::Velocity)) {
        throw UnsupportedClassError("total time derivative of a velocity-dependent expression " + render(e, table) +
                                    " would involve accelerations");
    }
    ExprAccumulator acc;
    acc.add(diff(e, table.time()));
    for (std::size_t j = 0; j < table.dof(); ++j) {
        acc.add(diff(e, table.coordinate(j)) * var(table.velocity(j)));
    }
    return acc.take();
}

Expr first_order_variation(const SystemSpec &spec, std::size_t r) {
    const auto &table = spec.symbols;
    const auto &g = spec.generators.at(r);
    const Expr &L = spec.lagrangian;
    const Expr d_dt = total_time_derivative(g.delta_t, table);
    ExprAccumulator acc;
    for (std::size_t j = 0; j < table.dof(); ++j) {
        acc.add(diff(L, table.coordinate(j)) * g.delta_q[j]);
        acc.add(diff(L, table.velocity(j)) *
                (total_time_derivative(g.delta_q[j], table) - var(table.velocity(j)) * d_dt));
    }
    acc.add(diff(L, table.time()) * g.delta_t);
    acc.add(L * d_dt);
    return acc.take();
}

Expr find_surface_term(const SystemSpec &spec, std::size_t r) {
    const auto &table = spec.symbols;
    const auto &g = spec.generators.at(r);
    const Expr delta = first_order_variation(spec, r);

    if (g.lambda) {
        const Expr residual = delta - total_time_derivative(*g.lambda, table);
        if (!residual.is_zero()) {
            throw NotASymmetryError(g.name, render(residual, table),
                                    "delta L differs from the time derivative of the declared lambda");
        }
        return *g.lambda;
    }

    // delta L = A_j(q, t) dq_j + B(q, t) + (higher velocity terms)
    Expr B;
    std::vector<Expr> A(table.dof());
    bool higher = false;
    for (const auto &[m, coef] : collect(delta, table.velocities())) {
        if (m.is_one()) {
            B = coef;
            continue;
        }
        const auto &f = m.factors();
        if (f.size() == 1 && f[0].exponent == 1) {
            for (std::size_t j = 0; j < table.dof(); ++j) {
                if (table.velocity(j) == f[0].symbol) {
                    A[j] = coef;
                }
            }
        } else {
            higher = true;
        }
    }

    auto reject_negative = [&](const Expr &e, SymbolKind kind) {
        for (const auto &[m, coef] : e.terms()) {
            for (const auto &f : m.factors()) {
                if (f.exponent < 0 && table.kind(f.symbol) == kind) {
                    throw UnsupportedClassError("cannot integrate delta L of generator '" + g.name + "': term " +
                                                render(Expr::term(coef, m), table) + " is singular at the origin");
                }
            }
        }
    };

    // Straight-line path from q = 0: integral_0^1 q_j A_j(s q, t) ds.
    ExprAccumulator lambda;
    for (std::size_t j = 0; j < table.dof(); ++j) {
        reject_negative(A[j], SymbolKind::Coordinate);
        for (const auto &[m, coef] : A[j].terms()) {
            int k = 0;
            for (auto q : table.coordinates()) {
                k += m.exponent(q);
            }
            lambda.add_term(m * Monomial::of(table.coordinate(j)), coef / (k + 1));
        }
    }
    // plus integral_0^t B(0, tau) dtau
    reject_negative(B, SymbolKind::Coordinate);
    std::map<SymbolId, Expr> origin;
    for (auto q : table.coordinates()) {
        origin.emplace(q, Expr());
    }
    const Expr B0 = substitute(B, origin);
    reject_negative(B0, SymbolKind::Time);
    for (const auto &[m, coef] : B0.terms()) {
        const int e = m.exponent(table.time());
        lambda.add_term(m.with_exponent(table.time(), e + 1), coef / (e + 1));
    }
    Expr result = lambda.take();

    const Expr residual = delta - total_time_derivative(result, table);
    if (!residual.is_zero()) {
        throw NotASymmetryError(g.name, render(residual, table),
                                higher ? "delta L has terms of degree > 1 in the velocities"
                                       : "delta L is not a total time derivative");
    }
    return result;
}

Charge noether_charge(const SystemSpec &spec, const PhaseSystem &ps, std::size_t r, const Expr &lambda) {
    const auto &table = spec.symbols;
    const auto &g = spec.generators.at(r);
    const Expr &L = spec.lagrangian;

    Charge out;
    out.name = g.name;
    out.lambda = lambda;
    out.lambda_declared = g.lambda.has_value();

    ExprAccumulator config;
    ExprAccumulator energy;
    ExprAccumulator phase;
    for (std::size_t j = 0; j < table.dof(); ++j) {
        const Expr pj = diff(L, table.velocity(j));
        config.add(pj * g.delta_q[j]);
        energy.add(pj * var(table.velocity(j)));
        phase.add(var(table.momentum(j)) * g.delta_q[j]);
    }
    energy.add(L, Rational(-1));
    config.add(energy.take() * g.delta_t, Rational(-1));
    config.add(lambda, Rational(-1));
    out.config_charge = config.take();

    phase.add(ps.hamiltonian * g.delta_t, Rational(-1));
    phase.add(lambda, Rational(-1));
    out.charge = phase.take();

    if (to_phase(out.config_charge, ps) != out.charge) {
        throw InconsistencyError("configuration and phase-space charges of '" + g.name + "' disagree");
    }

    for (std::size_t j = 0; j < table.dof(); ++j) {
        out.canonical_variation.push_back(g.delta_q[j] - diff(ps.hamiltonian, table.momentum(j)) * g.delta_t);
    }
    return out;
}

ChargeSet derive_charges(const PhaseSystem &ps) {
    ChargeSet out;
    for (std::size_t r = 0; r < ps.spec.generators.size(); ++r) {
        out.charges.push_back(noether_charge(ps.spec, ps, r, find_surface_term(ps.spec, r)));
    }
    return out;
}

bool StructureConstants::is_zero() const {
    for (const auto &c : data_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool StructureConstants::antisymmetric() const {
    for (std::size_t u = 0; u < w_; ++u) {
        for (std::size_t r = 0; r < w_; ++r) {
            for (std::size_t s = 0; s < w_; ++s) {
                if ((*this)(u, r, s) != -(*this)(u, s, r)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool StructureConstants::satisfies_jacobi() const {
    const auto &C = *this;
    for (std::size_t r = 0; r < w_; ++r) {
        for (std::size_t s = 0; s < w_; ++s) {
            for (std::size_t t = 0; t < w_; ++t) {
                for (std::size_t v = 0; v < w_; ++v) {
                    Rational total = 0;
                    for (std::size_t u = 0; u < w_; ++u) {
                        total += C(u, r, s) * C(v, u, t) + C(u, s, t) * C(v, u, r) + C(u, t, r) * C(v, u, s);
                    }
                    if (total != 0) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

std::vector<Expr> generator_commutator(const SystemSpec &spec, std::size_t r, std::size_t s) {
    const auto &table = spec.symbols;
    const auto Xr = generator_vector(spec.generators.at(r));
    const auto Xs = generator_vector(spec.generators.at(s));
    const SymbolId t = table.time();
    std::vector<Expr> out;
    for (std::size_t i = 0; i < Xr.size(); ++i) {
        ExprAccumulator acc;
        for (std::size_t j = 0; j < table.dof(); ++j) {
            const SymbolId qj = table.coordinate(j);
            acc.add(Xr[j] * diff(Xs[i], qj));
            acc.add(Xs[j] * diff(Xr[i], qj), Rational(-1));
        }
        acc.add(Xr.back() * diff(Xs[i], t));
        acc.add(Xs.back() * diff(Xr[i], t), Rational(-1));
        out.push_back(acc.take());
    }
    return out;
}

StructureConstants structure_constants(const SystemSpec &spec) {
    const auto &gens = spec.generators;
    const std::size_t w = gens.size();
    const std::size_t n = spec.dof();
    std::vector<std::vector<Expr>> basis;
    for (std::size_t u = 0; u < w; ++u) {
        basis.push_back(generator_vector(gens[u]));
        if (expansion_system(basis, {}, n + 1).rank() < basis.size()) {
            throw LinearDependenceError("generator '" + gens[u].name +
                                        "' is a linear combination of the generators declared before it; "
                                        "structure constants would not be unique");
        }
    }

    StructureConstants C(w);
    for (std::size_t r = 0; r < w; ++r) {
        for (std::size_t s = r + 1; s < w; ++s) {
            const auto bracket = generator_commutator(spec, r, s);
            const auto x = expansion_system(basis, bracket, n + 1).solve();
            if (!x) {
                std::vector<std::string> rendered;
                for (const auto &e : bracket) {
                    rendered.push_back(render(e, spec.symbols));
                }
                const bool q_closes = expansion_system(basis, bracket, n).solve().has_value();
                throw NotClosedError(gens[r].name, gens[s].name, rendered,
                                     q_closes ? "the time components of the commutator are not spanned with the same "
                                                "constants as the coordinate components"
                                              : "the commutator is not a rational combination of the generators");
            }
            for (std::size_t u = 0; u < w; ++u) {
                C.at(u, r, s) = (*x)[u];
                C.at(u, s, r) = -(*x)[u];
            }
        }
    }
    return C;
}

} // namespace chargealg
