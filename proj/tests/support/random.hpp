#pragma once

// Seeded generators for property tests.

#include <random>
#include <string>
#include <vector>

#include "chargealg/expr.hpp"
#include "chargealg/syntax.hpp"
#include "chargealg/sysdsl.hpp"

namespace chargealg::testing {

inline Rational random_rational(std::mt19937_64 &rng, int span = 5) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, 4);
    int n = 0;
    while (n == 0) {
        n = num(rng);
    }
    Rational r(n, den(rng));
    r.canonicalize();
    return r;
}

/// Random polynomial in `symbols` of total degree <= max_degree.
inline Expr random_polynomial(std::mt19937_64 &rng, const std::vector<SymbolId> &symbols, int max_degree,
                              int max_terms = 5) {
    std::uniform_int_distribution<int> terms(1, max_terms);
    std::uniform_int_distribution<std::size_t> pick(0, symbols.size() - 1);
    std::uniform_int_distribution<int> deg(0, max_degree);
    ExprAccumulator acc;
    const int count = terms(rng);
    for (int k = 0; k < count; ++k) {
        const int d = deg(rng);
        std::vector<Factor> factors;
        for (int i = 0; i < d; ++i) {
            factors.push_back({symbols[pick(rng)], 1});
        }
        acc.add_term(Monomial::from_factors(factors), random_rational(rng));
    }
    return acc.take();
}

/// Random syntax tree over `names`; divisions only by names listed in `divisors`.
inline ExprTree random_tree(std::mt19937_64 &rng, const std::vector<std::string> &names,
                            const std::vector<std::string> &divisors, int depth) {
    std::uniform_int_distribution<int> kind(0, depth <= 0 ? 1 : 6);
    std::uniform_int_distribution<std::size_t> name(0, names.size() - 1);
    switch (kind(rng)) {
    case 0:
        return ExprTree::constant(random_rational(rng));
    case 1:
        return ExprTree::symbol(names[name(rng)]);
    case 2:
    case 3:
        return ExprTree::sum({random_tree(rng, names, divisors, depth - 1), random_tree(rng, names, divisors, depth - 1)});
    case 4:
        return ExprTree::product(
            {random_tree(rng, names, divisors, depth - 1), random_tree(rng, names, divisors, depth - 1)});
    case 5: {
        std::uniform_int_distribution<int> e(2, 3);
        return ExprTree::power(random_tree(rng, names, divisors, depth - 1), e(rng));
    }
    default:
        if (!divisors.empty()) {
            std::uniform_int_distribution<std::size_t> d(0, divisors.size() - 1);
            return ExprTree::product({random_tree(rng, names, divisors, depth - 1),
                                      ExprTree::power(ExprTree::symbol(divisors[d(rng)]), -1)});
        }
        return ExprTree::negation(random_tree(rng, names, divisors, depth - 1));
    }
}

/// Small random but valid system: 1-3 coordinates, 0-2 parameters,
/// 1-3 generators with arbitrary (not necessarily symmetric) data.
inline SystemSpec random_spec(std::mt19937_64 &rng) {
    static const std::vector<std::string> coord_pool = {"q1", "q2", "x", "y"};
    static const std::vector<std::string> param_pool = {"M", "k", "g"};
    std::uniform_int_distribution<int> ncoord(1, 3);
    std::uniform_int_distribution<int> nparam(0, 2);
    std::uniform_int_distribution<int> ngen(1, 3);
    std::bernoulli_distribution coin(0.5);

    std::vector<std::string> coords(coord_pool.begin(), coord_pool.begin() + ncoord(rng));
    std::vector<ParameterDecl> params;
    const int np = nparam(rng);
    for (int i = 0; i < np; ++i) {
        params.push_back({param_pool[static_cast<std::size_t>(i)], coin(rng)});
    }
    SystemSpec spec;
    spec.name = "random" + std::to_string(rng() % 1000);
    spec.symbols = SymbolTable(coords, params);
    const auto &table = spec.symbols;

    std::vector<SymbolId> config = table.coordinates();
    config.insert(config.end(), table.velocities().begin(), table.velocities().end());
    config.insert(config.end(), table.parameters().begin(), table.parameters().end());
    config.push_back(table.time());
    spec.lagrangian = random_polynomial(rng, config, 3);

    std::vector<SymbolId> point = table.coordinates();
    point.push_back(table.time());
    point.insert(point.end(), table.parameters().begin(), table.parameters().end());
    std::vector<SymbolId> time_only = table.parameters();
    time_only.push_back(table.time());

    const int w = ngen(rng);
    for (int r = 0; r < w; ++r) {
        GeneratorDecl g;
        g.name = "g" + std::to_string(r);
        for (std::size_t j = 0; j < table.dof(); ++j) {
            g.delta_q.push_back(coin(rng) ? random_polynomial(rng, point, 2, 3) : Expr());
        }
        if (coin(rng)) {
            g.delta_t = random_polynomial(rng, time_only, 2, 2);
        }
        if (coin(rng)) {
            g.lambda = random_polynomial(rng, point, 2, 3);
        }
        spec.generators.push_back(std::move(g));
    }
    return spec;
}

} // namespace chargealg::testing
