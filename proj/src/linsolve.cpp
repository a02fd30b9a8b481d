#include "linsolve.hpp"

namespace chargealg::detail {

std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>> &rows, std::size_t columns) {
    std::vector<std::size_t> pivots;
    std::size_t next = 0;
    for (std::size_t col = 0; col < columns && next < rows.size(); ++col) {
        std::size_t found = next;
        while (found < rows.size() && rows[found][col] == 0) {
            ++found;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        const Rational inv = 1 / rows[next][col];
        for (auto &x : rows[next]) {
            x *= inv;
        }
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == next || rows[i][col] == 0) {
                continue;
            }
            const Rational f = rows[i][col];
            for (std::size_t j = col; j < rows[i].size(); ++j) {
                rows[i][j] -= f * rows[next][j];
            }
        }
        pivots.push_back(col);
        ++next;
    }
    return pivots;
}

void RationalSystem::add_row(std::vector<Rational> coefficients, Rational rhs) {
    coefficients.resize(unknowns_);
    coefficients.push_back(std::move(rhs));
    rows_.push_back(std::move(coefficients));
}

std::size_t RationalSystem::rank() const {
    auto rows = rows_;
    return row_reduce(rows, unknowns_).size();
}

std::optional<std::vector<Rational>> RationalSystem::solve() const {
    auto rows = rows_;
    const auto pivots = row_reduce(rows, unknowns_);
    for (std::size_t i = pivots.size(); i < rows.size(); ++i) {
        if (rows[i][unknowns_] != 0) {
            return std::nullopt;
        }
    }
    // Free columns are set to zero; callers check rank first.
    std::vector<Rational> x(unknowns_);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        x[pivots[i]] = rows[i][unknowns_];
    }
    return x;
}

} // namespace chargealg::detail
