#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "chargealg/errors.hpp"
#include "chargealg/legendre.hpp"
#include "chargealg/noether.hpp"
#include "chargealg/syntax.hpp"
#include "chargealg/sysdsl.hpp"
#include "support/random.hpp"

using namespace chargealg;

namespace {

SystemSpec fixture(const std::string &name) {
    std::ifstream in(std::string(CHARGEALG_FIXTURE_DIR) + "/" + name);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_system(ss.str());
}

Expr P(std::string_view text, const SystemSpec &s) { return parse_expr(text, s.symbols); }

// Free-particle kinetic term plus random velocity-linear and potential
// pieces; regular for every draw.
SystemSpec random_regular(std::mt19937_64 &rng) {
    SystemSpec spec = testing::random_spec(rng);
    const auto &t = spec.symbols;
    std::vector<SymbolId> point = t.coordinates();
    point.push_back(t.time());
    point.insert(point.end(), t.parameters().begin(), t.parameters().end());
    ExprAccumulator L;
    for (std::size_t j = 0; j < t.dof(); ++j) {
        const Expr v = Expr::symbol(t.velocity(j));
        L.add(v * v, Rational(1, 2));
        L.add(testing::random_polynomial(rng, point, 2) * v);
    }
    L.add(testing::random_polynomial(rng, point, 3));
    spec.lagrangian = L.take();
    return spec;
}

// Total derivative with accelerations: D2 f = df/dt + dq.df/dq + ddq.df/d(dq).
struct SecondOrder {
    SymbolTable table;
    std::vector<SymbolId> acc;

    explicit SecondOrder(const SymbolTable &base) {
        std::vector<ParameterDecl> extra;
        for (const auto &name : base.coordinate_names()) {
            extra.push_back({"dd" + name, false});
        }
        table = base.with_extra_parameters(extra);
        for (const auto &name : base.coordinate_names()) {
            acc.push_back(table.id("dd" + name));
        }
    }

    Expr D(const Expr &f) const {
        Expr out = diff(f, table.time());
        for (std::size_t j = 0; j < table.dof(); ++j) {
            out = out + Expr::symbol(table.velocity(j)) * diff(f, table.coordinate(j)) +
                  Expr::symbol(acc[j]) * diff(f, table.velocity(j));
        }
        return out;
    }
};

} // namespace

TEST_CASE("galilei charges") {
    const auto spec = fixture("galilei.sys");
    const auto ps = legendre_transform(spec);
    const auto charges = derive_charges(ps);
    REQUIRE(charges.size() == 6);
    for (int r = 1; r <= 3; ++r) {
        const std::string i = std::to_string(r);
        CHECK(charges[static_cast<std::size_t>(r - 1)].lambda == P("M*q" + i, spec));
        CHECK(charges[static_cast<std::size_t>(r - 1)].charge == P("p" + i + "*t - M*q" + i, spec));
        CHECK(charges[static_cast<std::size_t>(r + 2)].charge == P("p" + i, spec));
        CHECK(charges[static_cast<std::size_t>(r + 2)].lambda.is_zero());
    }
    CHECK(charges[0].config_charge == P("M*dq1*t - M*q1", spec));
}

TEST_CASE("magnetic surface terms") {
    const auto spec = fixture("magnetic.sys");
    // Lambda_i = -(e/c) A_i(q) with A = (B/2)(-q2, q1)
    CHECK(find_surface_term(spec, 0) == P("e*B*q2/(2*c)", spec));
    CHECK(find_surface_term(spec, 1) == P("-e*B*q1/(2*c)", spec));
    const auto ps = legendre_transform(spec);
    const auto charges = derive_charges(ps);
    CHECK(charges[0].charge == P("p1 - e*B*q2/(2*c)", spec));
    CHECK(charges[1].charge == P("p2 + e*B*q1/(2*c)", spec));
    CHECK(charges[0].config_charge == P("M*dq1 - e*B*q2/c", spec));
}

TEST_CASE("time translation gives minus the energy") {
    const auto spec = fixture("oscillator.sys");
    const auto ps = legendre_transform(spec);
    const auto charges = derive_charges(ps);
    CHECK(charges[0].charge == -ps.hamiltonian);
    CHECK(charges[0].canonical_variation[0] == P("-p", spec));
}

TEST_CASE("declared surface terms are verified, not replaced") {
    const auto spec = fixture("schrodinger2d.sys");
    CHECK(find_surface_term(spec, 7) == P("M/2*(q1^2 + q2^2)", spec));
    auto bad = spec;
    bad.generators[7].lambda = P("M*(q1^2 + q2^2)", spec);
    CHECK_THROWS_AS(find_surface_term(bad, 7), NotASymmetryError);
    // a declared lambda differing by a constant is accepted as written
    auto shifted = spec;
    shifted.generators[0].lambda = P("M", spec);
    CHECK(find_surface_term(shifted, 0) == P("M", spec));
}

TEST_CASE("dilatation of the free particle is an exact invariance") {
    const auto spec = fixture("scale_free.sys");
    CHECK(first_order_variation(spec, 0).is_zero());
    CHECK(find_surface_term(spec, 0).is_zero());
}

TEST_CASE("non-symmetries carry their residual") {
    const auto spec = fixture("not_a_symmetry.sys");
    try {
        find_surface_term(spec, 0);
        FAIL("expected NotASymmetryError");
    } catch (const NotASymmetryError &e) {
        CHECK(e.generator() == "shift");
        CHECK(parse_expr(e.residual(), spec.symbols) == P("-q", spec));
    }
}

TEST_CASE("surface term of an added total derivative") {
    // L = dq^2/2 + D F is translation-quasi-invariant with Lambda = dF/dq1 - dF/dq1(0, 0).
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
        const auto table = SymbolTable({"q1", "q2"}, {{"M", true}});
        std::vector<SymbolId> point = {table.coordinate(0), table.coordinate(1), table.time(), table.id("M")};
        const Expr F = testing::random_polynomial(rng, point, 3);
        SystemSpec spec;
        spec.name = "s";
        spec.symbols = table;
        spec.lagrangian = (Expr::symbol(table.velocity(0)).pow(2) + Expr::symbol(table.velocity(1)).pow(2)) / Expr(2) +
                          total_time_derivative(F, table);
        spec.generators.push_back({"trans1", {Expr(1), Expr()}, Expr(), std::nullopt});
        const Expr dF = diff(F, table.coordinate(0));
        const Expr at_origin =
            substitute(dF, {{table.coordinate(0), Expr()}, {table.coordinate(1), Expr()}, {table.time(), Expr()}});
        CHECK(find_surface_term(spec, 0) == dF - at_origin);
    }
}

TEST_CASE("total time derivative") {
    const auto spec = fixture("magnetic.sys");
    CHECK(total_time_derivative(P("t*q1^2", spec), spec.symbols) == P("q1^2 + 2*t*q1*dq1", spec));
    CHECK_THROWS_AS(total_time_derivative(P("dq1", spec), spec.symbols), UnsupportedClassError);
}

TEST_CASE("noether identity holds off shell for arbitrary generators") {
    // delta L - D Lambda = EL . (delta q - dq delta t) + D2(Q~)
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 60; ++trial) {
        const SystemSpec spec = random_regular(rng);
        const auto ps = legendre_transform(spec);
        const SecondOrder so(spec.symbols);
        const auto &t = spec.symbols;
        for (std::size_t r = 0; r < spec.generators.size(); ++r) {
            const auto &g = spec.generators[r];
            const Expr lambda = g.lambda.value_or(Expr());
            const Charge charge = noether_charge(spec, ps, r, lambda);
            Expr rhs = so.D(charge.config_charge);
            for (std::size_t j = 0; j < t.dof(); ++j) {
                const Expr el = diff(spec.lagrangian, t.coordinate(j)) - so.D(diff(spec.lagrangian, t.velocity(j)));
                rhs = rhs + el * (g.delta_q[j] - Expr::symbol(t.velocity(j)) * g.delta_t);
            }
            const Expr lhs = first_order_variation(spec, r) - total_time_derivative(lambda, t);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("structure constants from vector-field commutators") {
    const auto g = structure_constants(fixture("galilei.sys"));
    CHECK(g.is_zero());

    // [scale, trans1] on (q, t): -delta^trans1 q1 d/dq1 (-q1/2) = +1/2 along trans1
    const auto s = structure_constants(fixture("scale_free.sys"));
    CHECK(s(1, 0, 1) == Rational(1, 2));
    CHECK(s(1, 1, 0) == Rational(-1, 2));
    CHECK(s(2, 0, 2) == Rational(1, 2));
    CHECK(s.antisymmetric());
    CHECK(s.satisfies_jacobi());

    const auto sc = fixture("schrodinger2d.sys");
    const auto c = structure_constants(sc);
    // generator order: a1 a2 b1 b2 rot tt dil exp
    CHECK(c(1, 4, 0) == Rational(-1)); // [rot, a1] = -a2
    CHECK(c(0, 4, 1) == Rational(1));  // [rot, a2] = a1
    CHECK(c(0, 5, 2) == Rational(1));  // [tt, b1] = d/dt t along a1
    CHECK(c.antisymmetric());
    CHECK(c.satisfies_jacobi());
    // generator_commutator agrees with the solved combination
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t q = 0; q < 8; ++q) {
            const auto lhs = generator_commutator(sc, r, q);
            for (std::size_t k = 0; k < lhs.size(); ++k) {
                ExprAccumulator acc;
                for (std::size_t u = 0; u < 8; ++u) {
                    const auto &gu = sc.generators[u];
                    acc.add(k < sc.dof() ? gu.delta_q[k] : gu.delta_t, c(u, r, q));
                }
                CHECK(acc.take() == lhs[k]);
            }
        }
    }
}

TEST_CASE("dependent and open generator sets are rejected") {
    auto spec = fixture("galilei.sys");
    spec.generators.push_back({"again", {Expr(1), Expr(), Expr()}, Expr(), std::nullopt});
    try {
        structure_constants(spec);
        FAIL("expected LinearDependenceError");
    } catch (const LinearDependenceError &e) {
        CHECK(std::string(e.what()).find("again") != std::string::npos);
    }

    auto open = fixture("oscillator.sys");
    open.generators = {{"a", {Expr(1)}, Expr(), std::nullopt},
                       {"sq", {Expr::symbol(open.symbols.coordinate(0)).pow(2)}, Expr(), std::nullopt}};
    try {
        structure_constants(open);
        FAIL("expected NotClosedError");
    } catch (const NotClosedError &e) {
        CHECK(e.first() == "a");
        CHECK(e.second() == "sq");
    }
}
