#include <doctest.h>

#include <numbers>

#include "mpsorf/diagnostics.hpp"
#include "mpsorf/scenario.hpp"

using namespace mpsorf;

namespace {

DiagnosticsInput base_input(const std::string& id, SchurFunction f, AlphaSequence a,
                            int m, int n_max) {
    return DiagnosticsInput{id, std::move(f), std::move(a), CircleGrid(m), n_max,
                            std::nullopt, {}};
}

}  // namespace

TEST_CASE("zero function: every error series vanishes, Szego quantity is one") {
    auto in = base_input("zero", SchurFunction::constant(0.0),
                         AlphaSequence::radial(14, {1.0, 0.0}), 1024, 12);
    const DiagnosticsReport rep = run_diagnostics(in);
    for (const char* kind : {"remainder_energy", "pseudo_error", "hyperbolic_error",
                             "lp_error", "sup_error"})
        for (const auto& [n, v] : rep.get(kind).values) CHECK(std::abs(v) < 1e-12);
    for (const auto& [n, v] : rep.get("szego_quantity").values)
        CHECK(v == doctest::Approx(1.0).epsilon(1e-9));
    // a priori monitor: mu'^2 |phi_n|^2 - mu' P vanishes identically for Lebesgue
    for (const auto& [n, v] : rep.get("apriori_bound").values) CHECK(std::abs(v) < 1e-10);
    // boundary gap: psi* = phi* when every parameter vanishes
    for (const auto& [n, v] : rep.get("boundary_uniform_gap").values)
        CHECK(std::abs(v) < 1e-10);
}

TEST_CASE("constant function collapses after one step") {
    auto in = base_input("const", SchurFunction::constant({0.3, 0.1}),
                         AlphaSequence::classical(16), 1024, 10);
    in.enabled = {"remainder_energy", "pseudo_error", "lp_error"};
    const DiagnosticsReport rep = run_diagnostics(in);
    for (const auto& [n, v] : rep.get("remainder_energy").values)
        if (n >= 1) CHECK(std::abs(v) < 1e-25);
    for (const auto& [n, v] : rep.get("pseudo_error").values) CHECK(std::abs(v) < 1e-25);
    for (const auto& [n, v] : rep.get("lp_error").values) CHECK(std::abs(v) < 1e-25);
}

TEST_CASE("functional identities on the half-z radial scenario") {
    auto in = base_input("hzr", SchurFunction::scaled_identity({0.5, 0.0}),
                         AlphaSequence::radial(20, {1.0, 0.0}), 2048, 16);
    const DiagnosticsReport rep = run_diagnostics(in);

    SUBCASE("pseudo error is the shifted remainder energy") {
        const auto& re = rep.get("remainder_energy");
        const auto& pe = rep.get("pseudo_error");
        for (int n = 0; n < 16; ++n) CHECK(std::abs(pe.at(n) - re.at(n + 1)) < 1e-10);
    }
    SUBCASE("metric and Poisson identity residuals are tiny") {
        CHECK(rep.get("metric_identity").max_value() < 1e-9);
        CHECK(rep.get("orf_poisson").max_value() < 1e-8);
        CHECK(rep.get("measure_reconstruction").max_value() < 1e-7);
        CHECK(rep.get("bridge").max_value() < 1e-9);
        CHECK(rep.get("divfmu").max_value() < 1e-7);
    }
    SUBCASE("harmonic identity ties the log defect to the Szego quantity") {
        CHECK(rep.get("e7_gap").max_value() < 1e-6);
    }
    SUBCASE("inequality chain") {
        const auto& re = rep.get("remainder_energy");
        const auto& lp = rep.get("lp_error");
        const auto& pe = rep.get("pseudo_error");
        const auto& he = rep.get("hyperbolic_error");
        for (int n = 0; n < 16; ++n) {
            CHECK(lp.at(n) <= 4.0 * re.at(n + 1) + 1e-12);
            CHECK(he.at(n) >= 4.0 * pe.at(n) - 1e-12);
        }
    }
    SUBCASE("szego bound holds") {
        CHECK(rep.get("szego_quantity").max_value() <= 1.0 + 1e-8);
    }
    SUBCASE("weak-star gap decreases for smooth test functions") {
        const auto& ws = rep.get("weakstar_gap");
        CHECK(ws.at(16) < ws.at(1));
        CHECK(ws.at(16) < 5e-2);
    }
}

TEST_CASE("weak-star gap for Lebesgue test functions of low degree") {
    auto in = base_input("leb", SchurFunction::constant(0.0),
                         AlphaSequence::radial(10, {1.0, 0.0}), 1024, 8);
    in.enabled = {"weakstar_gap"};
    const DiagnosticsReport rep = run_diagnostics(in);
    // h in L_n + conj(L_n) is integrated exactly once n >= deg h
    for (const auto& [n, v] : rep.get("weakstar_gap").values)
        if (n >= 3) CHECK(v < 1e-8);
}

TEST_CASE("resolution guard") {
    // alpha_12 = 1 - 1/13: M = 256 gives M (1-|alpha|) ~ 20 < 50
    auto in = base_input("guard", SchurFunction::scaled_identity({0.5, 0.0}),
                         AlphaSequence::radial(14, {1.0, 0.0}), 256, 12);
    in.enabled = {"remainder_energy"};
    CHECK_THROWS_AS(run_diagnostics(in), ResolutionRefused);
    in.force = true;
    const DiagnosticsReport rep = run_diagnostics(in);
    bool warned = false;
    for (const auto& w : rep.warnings)
        if (w.find("under-resolved") != std::string::npos) warned = true;
    CHECK(warned);
}

TEST_CASE("unknown diagnostic kinds are rejected") {
    auto in = base_input("bad", SchurFunction::constant(0.0),
                         AlphaSequence::classical(8), 512, 4);
    in.enabled = {"no_such_series"};
    CHECK_THROWS_AS(run_diagnostics(in), ValidationError);
}

TEST_CASE("sweep is deterministic across thread counts") {
    auto make = [](int jobs) {
        auto in = base_input("det", SchurFunction::scaled_identity({0.5, 0.0}),
                             AlphaSequence::radial(14, {1.0, 0.0}), 1024, 10);
        in.jobs = jobs;
        return run_diagnostics(in);
    };
    const DiagnosticsReport a = make(1), b = make(4);
    REQUIRE(a.series.size() == b.series.size());
    for (const auto& [kind, sa] : a.series) {
        const auto& sb = b.get(kind);
        REQUIRE(sa.values.size() == sb.values.size());
        for (std::size_t i = 0; i < sa.values.size(); ++i) {
            CHECK(sa.values[i].first == sb.values[i].first);
            // bitwise equality: the chunk layout does not depend on jobs
            CHECK(sa.values[i].second == sb.values[i].second);
        }
    }
}

TEST_CASE("series accessors") {
    ConvergenceSeries s;
    s.kind = "x";
    s.values = {{0, 1.0}, {1, 0.5}, {2, 2.0}};
    CHECK(s.at(1) == 0.5);
    CHECK(s.max_value() == 2.0);
    CHECK_THROWS_AS(s.at(7), ValidationError);
}

TEST_CASE("arcs wrap around the circle") {
    const Arc a{-0.5, 0.5};
    CHECK(a.contains(0.0));
    CHECK(a.contains(2.0 * std::numbers::pi - 0.2));
    CHECK_FALSE(a.contains(std::numbers::pi));
    const Arc b{1.0, 2.0};
    CHECK(b.contains(1.5));
    CHECK_FALSE(b.contains(0.5));
}
