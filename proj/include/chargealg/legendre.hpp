#pragma once

#include <vector>

#include "chargealg/expr.hpp"
#include "chargealg/sysdsl.hpp"

namespace chargealg {

struct HessianResult {
    ExprMatrix matrix; ///< d^2 L / d dq_i d dq_j
    Expr determinant;
};

/// Hamiltonian form of a regular system.
struct PhaseSystem {
    SystemSpec spec;
    std::vector<Expr> momenta;              ///< p_i(q, dq, t) = dL/d dq_i
    std::vector<Expr> inverse_velocity_map; ///< dq_i(q, p, t)
    Expr hamiltonian;                       ///< H(q, p, t)
    Expr phase_lagrangian;                  ///< L(q, p, t) = p.dH/dp - H
    ExprMatrix hessian;
    Expr hessian_det;

    const SymbolTable &symbols() const { return spec.symbols; }
};

HessianResult hessian(const SystemSpec &spec);

/// Builds momenta, the exact inverse velocity map and the Hamiltonian.
///
/// Supported class: L of degree <= 2 in the velocities, whose Hessian
/// determinant is a nonzero rational times a monomial in parameters
/// declared positive. Throws UnsupportedClassError for anything outside
/// that class and RegularityError for singular or uncertifiable Hessians.
PhaseSystem legendre_transform(const SystemSpec &spec);

/// Rewrites a configuration-space expression in (q, p, t).
Expr to_phase(const Expr &e, const PhaseSystem &ps);

} // namespace chargealg
