#pragma once

#include <string>
#include <vector>

#include "chargealg/expr.hpp"
#include "chargealg/legendre.hpp"
#include "chargealg/sysdsl.hpp"

namespace chargealg {

/// delta L for the infinitesimal transformation of generator `r`:
///   sum_j [dL/dq_j dq_j + dL/d(dq_j) (D dq_j - dq_j D dt)] + dL/dt dt + L D dt
Expr first_order_variation(const SystemSpec &spec, std::size_t r);

/// D = d/dt + dq_j d/dq_j. Throws UnsupportedClassError if `e` depends on
/// velocities, since accelerations would appear.
Expr total_time_derivative(const Expr &e, const SymbolTable &table);

/// Lambda_r(q, t) with delta L = D Lambda_r. A declared lambda is verified,
/// otherwise one is constructed with the gauge Lambda_r(0, 0) = 0.
/// Throws NotASymmetryError carrying the residual.
Expr find_surface_term(const SystemSpec &spec, std::size_t r);

struct Charge {
    std::string name;
    Expr lambda;                            ///< Lambda_r(q, t)
    bool lambda_declared = false;
    Expr config_charge;                     ///< Q~_r(q, dq, t)
    Expr charge;                            ///< Q_r(q, p, t)
    std::vector<Expr> canonical_variation;  ///< delta_c q_j = delta q_j - dH/dp_j delta t
};

struct ChargeSet {
    std::vector<Charge> charges;

    std::size_t size() const { return charges.size(); }
    const Charge &operator[](std::size_t r) const { return charges[r]; }
};

/// Q~_r = dL/d(dq_j) delta q_j - (dq_j dL/d(dq_j) - L) delta t - Lambda_r
/// and its phase-space form Q_r = p_j delta q_j - H delta t - Lambda_r.
Charge noether_charge(const SystemSpec &spec, const PhaseSystem &ps, std::size_t r, const Expr &lambda);

ChargeSet derive_charges(const PhaseSystem &ps);

/// C^u_rs stored densely; index order (u, r, s).
class StructureConstants {
  public:
    StructureConstants() = default;
    explicit StructureConstants(std::size_t w) : w_(w), data_(w * w * w) {}

    std::size_t size() const { return w_; }
    const Rational &operator()(std::size_t u, std::size_t r, std::size_t s) const { return data_[index(u, r, s)]; }
    Rational &at(std::size_t u, std::size_t r, std::size_t s) { return data_[index(u, r, s)]; }

    bool is_zero() const;
    bool antisymmetric() const;
    bool satisfies_jacobi() const;

    bool operator==(const StructureConstants &) const = default;

  private:
    std::size_t index(std::size_t u, std::size_t r, std::size_t s) const { return (u * w_ + r) * w_ + s; }

    std::size_t w_ = 0;
    std::vector<Rational> data_;
};

/// The (n+1)-vector of the commutator of generators r and s on (q, t):
///   delta^r q_j d_j delta^s x - delta^s q_j d_j delta^r x
///   + delta^r t d_t delta^s x - delta^s t d_t delta^r x,   x in (q_i, t)
std::vector<Expr> generator_commutator(const SystemSpec &spec, std::size_t r, std::size_t s);

/// Solves generator_commutator(r, s) = C^u_rs (delta^u q, delta^u t) with
/// rational C. Throws LinearDependenceError if the generator vectors are
/// dependent and NotClosedError if some commutator is not in their span.
StructureConstants structure_constants(const SystemSpec &spec);

} // namespace chargealg
