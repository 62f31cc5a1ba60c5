#include <doctest.h>

#include <numbers>
#include <random>

#include "mpsorf/schur.hpp"
#include "mpsorf/szego.hpp"

using namespace mpsorf;

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(CircleGrid(1000), ValidationError);
    CHECK_THROWS_AS(CircleGrid(128), ValidationError);
    CHECK_NOTHROW(CircleGrid(256));
    const CircleGrid g(512);
    CHECK(g.size() == 512);
    CHECK(std::abs(g.node(0) - cplx{1.0, 0.0}) == 0.0);
}

TEST_CASE("grid phase clearance") {
    // a direction sitting on node 3 forces the half-spacing nudge
    const CircleGrid g(256);
    const double on_node = g.theta(3);
    std::vector<double> dirs{on_node};
    const CircleGrid nudged = CircleGrid::with_clearance(256, dirs);
    CHECK(nudged.phase() == doctest::Approx(0.5 * nudged.spacing()));
    std::vector<double> off{on_node + 0.3 * g.spacing()};
    CHECK(CircleGrid::with_clearance(256, off).phase() == 0.0);
}

TEST_CASE("integrate on the grid") {
    const CircleGrid g(1024);
    SUBCASE("constant") {
        std::vector<cplx> s(1024, cplx{2.5, -1.0});
        CHECK(std::abs(integrate(g, s) - cplx{2.5, -1.0}) == 0.0);
    }
    SUBCASE("first Fourier mode averages out") {
        std::vector<cplx> s(g.nodes().begin(), g.nodes().end());
        CHECK(std::abs(integrate(g, s)) < 1e-15);
    }
    SUBCASE("Poisson samples have unit mean") {
        std::vector<cplx> s(1024);
        for (int j = 0; j < 1024; ++j) s[j] = poisson_kernel(g.node(j), {0.3, 0.0});
        CHECK(std::abs(integrate(g, s) - 1.0) < 1e-12);
    }
}

TEST_CASE("measure construction invariants") {
    const CircleGrid g(256);
    std::vector<double> d(256, 1.0);
    SUBCASE("probability flag checks the mass") {
        CHECK_NOTHROW(CircleMeasure(g, d, {}, true));
        std::vector<double> bad(256, 1.01);
        CHECK_THROWS_AS(CircleMeasure(g, bad, {}, true), ValidationError);
        CHECK_NOTHROW(CircleMeasure(g, bad, {}, false));
    }
    SUBCASE("negative density rejected") {
        std::vector<double> bad = d;
        bad[7] = -1e-6;
        CHECK_THROWS_AS(CircleMeasure(g, bad, {}, false), ValidationError);
    }
    SUBCASE("atoms must be off the grid and distinct") {
        std::vector<double> half(256, 0.5);
        CHECK_THROWS_AS(CircleMeasure(g, half, {{g.node(5), 0.5}}, true), AtomCollision);
        const CircleGrid ng =
            CircleGrid::with_clearance(256, std::vector<double>{g.theta(5)});
        CHECK_NOTHROW(CircleMeasure(ng, half, {{g.node(5), 0.5}}, true));
        CHECK_THROWS_AS(
            CircleMeasure(ng, half, {{g.node(5), 0.25}, {g.node(5), 0.25}}, true),
            ValidationError);
    }
}

TEST_CASE("interior Herglotz transform") {
    const CircleGrid g(1024);
    SUBCASE("Lebesgue gives the constant 1") {
        const CircleMeasure mu = CircleMeasure::lebesgue(g);
        for (cplx z : {cplx{0.3, 0.1}, cplx{-0.7, 0.2}, cplx{0.0, 0.0}})
            CHECK(std::abs(herglotz_interior(mu, z) - 1.0) < 1e-12);
    }
    SUBCASE("single atom reproduces its kernel") {
        const CircleGrid ng = CircleGrid::with_clearance(1024, std::vector<double>{0.0});
        std::vector<double> zero(1024, 0.0);
        const CircleMeasure mu(ng, zero, {{cplx{1.0, 0.0}, 1.0}}, true);
        const cplx z{0.3, -0.4};
        CHECK(std::abs(herglotz_interior(mu, z) - (1.0 + z) / (1.0 - z)) < 1e-14);
    }
    SUBCASE("f(z) = z/2 matches the closed form (1+zf)/(1-zf)") {
        // oracle: F at 0.3 equals (1 + 0.3*0.15)/(1 - 0.3*0.15)
        const SchurFunction f = SchurFunction::scaled_identity({0.5, 0.0});
        const CircleMeasure mu = measure_from_schur(f, g, true);
        const cplx expected = cplx{1.045, 0.0} / cplx{0.955, 0.0};
        CHECK(std::abs(herglotz_interior(mu, {0.3, 0.0}) - expected) < 1e-10);
        CHECK(herglotz_interior(mu, {0.0, 0.0}).real() ==
              doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("boundary Herglotz transform") {
    const CircleGrid g(1024);
    SUBCASE("Lebesgue boundary values are 1") {
        const CircleMeasure mu = CircleMeasure::lebesgue(g);
        for (const cplx& v : herglotz_boundary_all(mu)) CHECK(std::abs(v - 1.0) < 1e-12);
    }
    SUBCASE("single harmonic: conjugate of cos is sin") {
        std::vector<double> d(1024);
        for (int j = 0; j < 1024; ++j) d[j] = 1.0 + g.node(j).real();
        const CircleMeasure mu(g, d, {}, true);
        const auto f = herglotz_boundary_all(mu);
        for (int j = 0; j < 1024; ++j) CHECK(std::abs(f[j] - (1.0 + g.node(j))) < 1e-12);
    }
    SUBCASE("real part against the pointwise density oracle") {
        // oracle: density of f(z) = z/2 evaluated by the boundary formula
        const SchurFunction f = SchurFunction::scaled_identity({0.5, 0.0});
        const CircleMeasure mu = measure_from_schur(f, g, true);
        const auto vals = herglotz_boundary_all(mu);
        for (int j = 0; j < 1024; ++j) {
            const cplx t = g.node(j);
            const cplx v = 0.5 * t;
            const double expect = (1.0 - std::norm(v)) / std::norm(1.0 - t * v);
            CHECK(std::abs(vals[j].real() - expect) < 1e-8);
        }
    }
}

TEST_CASE("measure from a Schur function") {
    const CircleGrid g(1024);
    SUBCASE("f = 0 gives Lebesgue") {
        const CircleMeasure mu = measure_from_schur(SchurFunction::constant(0.0), g, true);
        for (double d : mu.density()) CHECK(d == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("constant 1/2 matches the substitution formula") {
        const CircleMeasure mu =
            measure_from_schur(SchurFunction::constant({0.5, 0.0}), g, false);
        for (int j = 0; j < 1024; ++j) {
            const double expect = 0.75 / std::norm(1.0 - 0.5 * g.node(j));
            CHECK(mu.density()[j] == doctest::Approx(expect).epsilon(1e-12));
        }
    }
    SUBCASE("f(z) = z/2 produces an a.c. probability measure") {
        // oracle: quadrature at M = 2^20 confirms unit mass
        const SchurFunction f = SchurFunction::scaled_identity({0.5, 0.0});
        const CircleGrid fine(1 << 20);
        const CircleMeasure mu = measure_from_schur(f, fine, false);
        CHECK(std::abs(integrate_real(fine, mu.density()) - 1.0) < 1e-10);
    }
    SUBCASE("unimodular point of (z+1)/2 degenerates gracefully") {
        const SchurFunction f =
            SchurFunction::rational({{0.5, 0.0}, {0.5, 0.0}}, {{1.0, 0.0}});
        const CircleMeasure mu = measure_from_schur(f, g, false);
        CHECK(mu.density()[0] == 0.0);  // the 0/0 node at t = 1
        CHECK(degenerate_density_fraction(mu) < 0.01);
    }
}

TEST_CASE("Schur function from a measure") {
    const CircleGrid g(1024);
    SUBCASE("Lebesgue gives zero") {
        const CircleMeasure mu = CircleMeasure::lebesgue(g);
        CHECK(std::abs(schur_from_measure(mu, {0.4, 0.2})) < 1e-12);
        CHECK(std::abs(schur_from_measure(mu, {0.0, 0.0})) < 1e-12);
    }
    SUBCASE("round trip at 0.4i") {
        // oracle: direct evaluation of f(z) = z/2
        const SchurFunction f = SchurFunction::scaled_identity({0.5, 0.0});
        const CircleMeasure mu = measure_from_schur(f, g, true);
        const cplx z{0.0, 0.4};
        CHECK(std::abs(schur_from_measure(mu, z) - f(z)) < 1e-8);
    }
    SUBCASE("pure atom at 1 returns the excluded constant") {
        const CircleGrid ng = CircleGrid::with_clearance(1024, std::vector<double>{0.0});
        std::vector<double> zero(1024, 0.0);
        const CircleMeasure mu(ng, zero, {{cplx{1.0, 0.0}, 1.0}}, true);
        for (cplx z : {cplx{0.3, 0.0}, cplx{-0.2, 0.5}, cplx{0.0, 0.0}})
            CHECK(std::abs(schur_from_measure(mu, z) - 1.0) < 1e-12);
        // downstream validation must flag it as a finite Blaschke product
        const SchurFunction f = SchurFunction::from_measure(mu);
        CHECK(validate_schur(f, ng).finite_blaschke);
    }
}

TEST_CASE("Szego function") {
    const CircleGrid g(2048);
    SUBCASE("unit density gives the constant 1") {
        const SzegoFunction s(CircleMeasure::lebesgue(g));
        CHECK(s.value_at_origin() == doctest::Approx(1.0).epsilon(1e-14));
        for (int j = 0; j < g.size(); j += 31) CHECK(std::abs(s.at_node(j) - 1.0) < 1e-12);
        CHECK(std::abs(s.at_interior({0.3, 0.4}) - 1.0) < 1e-12);
    }
    SUBCASE("density |1-t|^2 has outer function 1-z") {
        // the log-density is singular at t = 1: interior accuracy is limited
        // by the floor clip at the offending node, about 2 log(M)/M
        std::vector<double> d(static_cast<std::size_t>(g.size()));
        for (int j = 0; j < g.size(); ++j) d[j] = std::norm(1.0 - g.node(j));
        const CircleMeasure mu(g, d, {}, false);
        const SzegoFunction s(mu);
        CHECK(s.value_at_origin() > 0.0);
        for (cplx z : {cplx{0.3, 0.0}, cplx{-0.2, 0.4}, cplx{0.0, 0.5}})
            CHECK(std::abs(s.at_interior(z) - (1.0 - z)) < 1e-2);
        for (int j = 64; j < g.size(); j += 97)
            CHECK(std::abs(std::abs(s.at_node(j)) - std::abs(1.0 - g.node(j))) < 1e-9);
    }
    SUBCASE("modulus squared reproduces the density of f = z/2") {
        // self-consistency oracle at doubled M
        const SchurFunction f = SchurFunction::scaled_identity({0.5, 0.0});
        for (int m : {2048, 4096}) {
            const CircleGrid gg(m);
            const CircleMeasure mu = measure_from_schur(f, gg, true);
            const SzegoFunction s(mu);
            for (int j = 0; j < m; j += 13)
                CHECK(std::abs(std::norm(s.at_node(j)) - mu.density()[j]) /
                          mu.density()[j] <
                      1e-6);
        }
    }
    SUBCASE("clipping beyond 5% raises NotSzego") {
        std::vector<double> d(static_cast<std::size_t>(g.size()), 1.9);
        for (int j = 0; j < g.size() / 10; ++j) d[static_cast<std::size_t>(j)] = 0.0;
        const CircleMeasure mu(g, d, {}, false);
        CHECK_THROWS_AS(SzegoFunction{mu}, NotSzego);
    }
}

TEST_CASE("second kind measure") {
    const CircleGrid g(2048);
    SUBCASE("Lebesgue is self-dual") {
        const CircleMeasure mu2 = second_kind_measure(CircleMeasure::lebesgue(g));
        for (double d : mu2.density()) CHECK(d == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("f -> -f symmetry") {
        const SchurFunction f = SchurFunction::scaled_identity({0.5, 0.0});
        const SchurFunction mf = SchurFunction::scaled_identity({-0.5, 0.0});
        const CircleMeasure mu2 = second_kind_measure(measure_from_schur(f, g, true));
        const CircleMeasure expect = measure_from_schur(mf, g, true);
        for (int j = 0; j < g.size(); ++j)
            CHECK(std::abs(mu2.density()[j] - expect.density()[j]) < 1e-10);
    }
    SUBCASE("outer function quotient reproduces |F|") {
        // oracle: boundary Herglotz values
        const SchurFunction f = SchurFunction::scaled_identity({0.5, 0.0});
        const CircleMeasure mu = measure_from_schur(f, g, true);
        const CircleMeasure mu2 = second_kind_measure(mu);
        const SzegoFunction s(mu), s2(mu2);
        const auto fb = herglotz_boundary_all(mu);
        for (int j = 0; j < g.size(); j += 11) {
            const double q = std::abs(s.at_node(j)) / std::abs(s2.at_node(j));
            CHECK(std::abs(q - std::abs(fb[j])) / std::abs(fb[j]) < 1e-6);
        }
    }
}

TEST_CASE("measure JSON round trip") {
    const CircleGrid ng = CircleGrid::with_clearance(256, std::vector<double>{1.0});
    std::vector<double> d(256);
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ur(0.1, 2.0);
    for (auto& v : d) v = ur(rng);
    const CircleMeasure mu(ng, d, {{std::polar(1.0, 1.0), 0.25}}, false);
    const CircleMeasure back = measure_from_json(measure_to_json(mu));
    CHECK(back.grid().size() == mu.grid().size());
    CHECK(back.grid().phase() == mu.grid().phase());
    for (int j = 0; j < 256; ++j) CHECK(back.density()[j] == mu.density()[j]);
    REQUIRE(back.atoms().size() == 1);
    CHECK(std::abs(back.atoms()[0].position - mu.atoms()[0].position) < 1e-15);
    CHECK(back.atoms()[0].mass == mu.atoms()[0].mass);
    CHECK_THROWS_AS(measure_from_json("{not json"), ParseError);
}
