#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "chargealg/algebra.hpp"
#include "chargealg/errors.hpp"
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

Expr P(std::string_view text, const SymbolTable &t) { return parse_expr(text, t); }

} // namespace

TEST_CASE("canonical brackets") {
    const SymbolTable t({"q1", "q2", "q3"}, {});
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            const Expr qi = Expr::symbol(t.coordinate(i));
            const Expr pj = Expr::symbol(t.momentum(j));
            CHECK(poisson(qi, pj, t) == Expr(i == j ? 1 : 0));
            CHECK(poisson(qi, Expr::symbol(t.coordinate(j)), t).is_zero());
            CHECK(poisson(Expr::symbol(t.momentum(i)), pj, t).is_zero());
        }
    }
    // angular momentum: {L3, L1} = L2
    const Expr L3 = P("q1*p2 - q2*p1", t);
    const Expr L1 = P("q2*p3 - q3*p2", t);
    CHECK(poisson(L3, L1, t) == P("q3*p1 - q1*p3", t));
}

TEST_CASE("poisson axioms on random polynomials") {
    const SymbolTable t({"q1", "q2"}, {{"M", true}});
    std::vector<SymbolId> syms = {t.coordinate(0), t.coordinate(1), t.momentum(0), t.momentum(1), t.time(),
                                  t.id("M")};
    std::mt19937_64 rng(83);
    for (int i = 0; i < 200; ++i) {
        const Expr f = testing::random_polynomial(rng, syms, 3);
        const Expr g = testing::random_polynomial(rng, syms, 3);
        const Expr h = testing::random_polynomial(rng, syms, 3);
        CHECK(poisson(f, g, t) == -poisson(g, f, t));
        CHECK(poisson(f, g * h, t) == poisson(f, g, t) * h + g * poisson(f, h, t));
        CHECK((poisson(f, poisson(g, h, t), t) + poisson(g, poisson(h, f, t), t) + poisson(h, poisson(f, g, t), t))
                  .is_zero());
    }
}

TEST_CASE("conservation residual") {
    const SymbolTable t({"q"}, {});
    const Expr H = P("p^2/2 + q^2/2", t);
    CHECK(check_conservation(H, H, t).is_zero());
    CHECK(check_conservation(P("q", t), H, t) == P("p", t));
    // explicitly time-dependent boost charge of the free particle
    CHECK(check_conservation(P("t*p - q", t), P("p^2/2", t), t).is_zero());
}

TEST_CASE("galilei extension is the mass") {
    const auto rep = analyze(fixture("galilei.sys"));
    CHECK(rep.ok());
    CHECK(rep.C.is_zero());
    const Expr M = Expr::symbol(rep.phase.symbols().id("M"));
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t s = 0; s < 3; ++s) {
            // rows/cols: boost 0..2, trans 3..5; {P_r, K_s} = M delta_rs
            CHECK(rep.L()[3 + r][s] == (r == s ? M : Expr()));
            CHECK(rep.L()[s][3 + r] == (r == s ? -M : Expr()));
            CHECK(rep.L()[r][s].is_zero());
            CHECK(rep.L()[3 + r][3 + s].is_zero());
        }
    }
}

TEST_CASE("magnetic extension is the field strength") {
    const auto rep = analyze(fixture("magnetic.sys"));
    CHECK(rep.ok());
    const auto &t = rep.phase.symbols();
    // (e B / c) eps_ij with eps_12 = -1
    CHECK(rep.L_direct[0][1] == P("-e*B/c", t));
    CHECK(rep.L_direct[1][0] == P("e*B/c", t));
    CHECK(rep.L_formula == rep.L_direct);
    CHECK(rep.L_direct[0][0].is_zero());
}

TEST_CASE("scale-free particle has no extension") {
    const auto rep = analyze(fixture("scale_free.sys"));
    CHECK(rep.ok());
    for (const auto &row : rep.L()) {
        for (const auto &x : row) {
            CHECK(x.is_zero());
        }
    }
}

TEST_CASE("two routes agree on every fixture") {
    for (const char *name : {"galilei.sys", "magnetic.sys", "scale_free.sys", "oscillator.sys", "schrodinger2d.sys"}) {
        CAPTURE(name);
        const auto rep = analyze(fixture(name));
        CHECK(rep.consistent);
        CHECK(rep.L_direct == rep.L_formula);
        CHECK(rep.failures().empty());
        for (const auto &c : rep.conservation) {
            CHECK(c.is_zero());
        }
    }
}

TEST_CASE("charges realize the algebra up to the extension") {
    // {Q_r, Q_s} = -C^u_rs Q_u + L_rs; checked on the full point group of the free particle.
    const auto rep = analyze(fixture("schrodinger2d.sys"));
    const auto &t = rep.phase.symbols();
    const std::size_t w = rep.charges.size();
    for (std::size_t r = 0; r < w; ++r) {
        for (std::size_t s = 0; s < w; ++s) {
            Expr rhs = rep.L()[r][s];
            for (std::size_t u = 0; u < w; ++u) {
                rhs = rhs - Expr(rep.C(u, r, s)) * rep.charges[u].charge;
            }
            CHECK(poisson(rep.charges[r].charge, rep.charges[s].charge, t) == rhs);
        }
    }
    // only the Galilei block is extended: {a_i, b_j} = M delta_ij
    const Expr M = Expr::symbol(t.id("M"));
    CHECK(rep.L()[0][2] == M);
    CHECK(rep.L()[1][3] == M);
    CHECK(rep.L()[0][3].is_zero());
    CHECK(rep.L()[4][5].is_zero());
}

TEST_CASE("pipeline rejections propagate") {
    CHECK_THROWS_AS(analyze(fixture("not_a_symmetry.sys")), NotASymmetryError);
    auto singular = fixture("oscillator.sys");
    singular.lagrangian = P("q*dq", singular.symbols);
    CHECK_THROWS_AS(analyze(singular), RegularityError);
}
