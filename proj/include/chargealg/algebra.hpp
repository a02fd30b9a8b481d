#pragma once

#include <string>
#include <vector>

#include "chargealg/expr.hpp"
#include "chargealg/legendre.hpp"
#include "chargealg/noether.hpp"

namespace chargealg {

/// {a, b} = sum_i (da/dq_i db/dp_i - da/dp_i db/dq_i), so {q_i, p_j} = delta_ij.
Expr poisson(const Expr &a, const Expr &b, const SymbolTable &table);

/// {Q, H} + dQ/dt; zero iff Q is conserved.
Expr check_conservation(const Expr &Q, const Expr &H, const SymbolTable &table);

/// L_rs = {Q_r, Q_s} + C^u_rs Q_u.
///
/// With C read off the vector-field commutator and {q, p} = +1 the charges
/// realize the algebra with the opposite orientation, {Q_r, Q_s} = -C^u_rs Q_u
/// + L_rs, hence the plus sign.
ExprMatrix central_extension_direct(const ChargeSet &charges, const StructureConstants &C, const SymbolTable &table);

/// L_rs = dLambda_s/dq_j delta^r q_j - dLambda_r/dq_j delta^s q_j - C^u_rs Lambda_u.
ExprMatrix central_extension_formula(const ChargeSet &charges, const StructureConstants &C, const SystemSpec &spec);

struct AlgebraReport {
    PhaseSystem phase;
    ChargeSet charges;
    StructureConstants C;
    std::vector<Expr> conservation; ///< residual per charge, all zero
    ExprMatrix L_direct;
    ExprMatrix L_formula;
    bool consistent = false;   ///< L_direct == L_formula entrywise
    bool antisymmetric = false;
    bool central = false;      ///< every entry free of q, p, t
    bool constant = false;     ///< dL/dq, dL/dp, dL/dt all vanish
    bool cocycle = false;      ///< sum_cyclic C^u_rs L_ut == 0
    bool jacobi = false;

    const ExprMatrix &L() const { return L_direct; }
    bool ok() const { return consistent && antisymmetric && central && constant && cocycle && jacobi; }
    /// Human-readable list of failed checks, empty when ok().
    std::vector<std::string> failures() const;
};

/// Full symbolic pipeline. Throws the rejection errors of the stages it
/// runs, and InconsistencyError if a charge is not conserved (the extension
/// is meaningless then). Check failures after that are reported in the
/// returned flags.
AlgebraReport analyze(const SystemSpec &spec);

} // namespace chargealg
