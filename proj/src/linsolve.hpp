#pragma once

#include <optional>
#include <vector>

#include "chargealg/expr.hpp"

namespace chargealg::detail {

/// Dense exact linear system over the rationals, one row per equation.
class RationalSystem {
  public:
    explicit RationalSystem(std::size_t unknowns) : unknowns_(unknowns) {}

    void add_row(std::vector<Rational> coefficients, Rational rhs);
    std::size_t rank() const;
    /// Unique solution when the coefficient matrix has full column rank and
    /// the system is consistent; nullopt if inconsistent.
    std::optional<std::vector<Rational>> solve() const;

  private:
    std::size_t unknowns_;
    std::vector<std::vector<Rational>> rows_; ///< coefficients followed by rhs
};

/// Row-reduces in place; returns the pivot column of each pivot row.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>> &rows, std::size_t columns);

} // namespace chargealg::detail
