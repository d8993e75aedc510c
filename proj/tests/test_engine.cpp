#include <doctest.h>

#include <cmath>
#include <cstdio>

#include "heatengine/closed_forms.hpp"
#include "heatengine/engine.hpp"

using namespace heatengine;

namespace {

CyclePoint make_point(int twice_sa, int twice_sb, double j, double b1, double b2, const char* axis_a,
                      const char* axis_b, double beta = 1.0) {
    WorkingMedium medium(SpinValue(twice_sa), SpinValue(twice_sb), j);
    MeasurementScheme scheme = make_scheme(medium, SideSpec::parse(axis_a), SideSpec::parse(axis_b));
    return CyclePoint{std::move(medium), FieldPoint{b1}, FieldPoint{b2}, beta, std::move(scheme)};
}

}  // namespace

TEST_SUITE_BEGIN("engine");

TEST_CASE("uncoupled cycle gives eta = 1 - B1/B2") {
    const CycleResult r = run_cycle(make_point(1, 1, 0.0, 3.0, 4.0, "x", "z"));
    REQUIRE(r.eta.has_value());
    CHECK(*r.eta == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("z x z scheme: no work at any coupling") {
    SUBCASE("J = 0 commutes outright, so eta is a 0/0 flag") {
        const CycleResult r = run_cycle(make_point(1, 1, 0.0, 3.0, 4.0, "z", "z"));
        CHECK(std::abs(r.wt) < 1e-12);
        CHECK(std::abs(r.qm) < 1e-12);
        CHECK(!r.eta.has_value());
    }
    SUBCASE("J > 0 still extracts nothing but absorbs measurement heat") {
        const double j = 0.5, b1 = 3.0;
        const CycleResult r = run_cycle(make_point(1, 1, j, b1, 4.0, "z", "z"));
        CHECK(std::abs(r.wt) < 1e-12);
        // dephasing the singlet/triplet coherence costs 4J (P1 - P3)
        const double w1 = std::exp(6 * j), w2 = std::exp(2 * b1 - 2 * j);
        const double w3 = std::exp(-2 * j), w4 = std::exp(-2 * b1 - 2 * j);
        const double z = w1 + w2 + w3 + w4;
        CHECK(r.qm == doctest::Approx(4 * j * (w1 - w3) / z).epsilon(1e-12));
        REQUIRE(r.eta.has_value());
        CHECK(std::abs(*r.eta) < 1e-12);
    }
}

TEST_CASE("worked example: eta = 0.975011 at J = 0.0014, B1 = 0.1, B2 = 4") {
    const CycleResult r = run_cycle(make_point(1, 1, 0.0014, 0.1, 4.0, "x", "z"));
    REQUIRE(r.eta.has_value());
    CHECK(std::abs(*r.eta - 0.975011) < 1e-5);
}

TEST_CASE("degenerate cycle B1 = B2") {
    const CycleResult r = run_cycle(make_point(1, 1, 0.4, 3.0, 3.0, "x", "z"));
    CHECK(std::abs(r.w1) < 1e-12);
    CHECK(std::abs(r.w2) < 1e-12);
    CHECK(std::abs(r.wt) < 1e-12);
    CHECK(r.qm > -1e-12);
}

TEST_CASE("first law, heat signs, and post probabilities across pairs and schemes") {
    const int pairs[][2] = {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}};
    const char* schemes[][2] = {{"x", "z"}, {"x", "y"}, {"y", "y"}, {"z", "z"}};
    for (const auto& p : pairs) {
        for (const auto& s : schemes) {
            for (double j : {0.0, 0.45, 1.1}) {
                CAPTURE(p[0]);
                CAPTURE(p[1]);
                CAPTURE(s[0]);
                CAPTURE(j);
                const CycleResult r = run_cycle(make_point(p[0], p[1], j, 2.7, 3.6, s[0], s[1]));
                CHECK(std::abs(r.w1 + r.w2 + r.qm + r.qt) < 1e-10);
                CHECK(r.qm >= -1e-10);
                CHECK(r.qt <= 1e-10);
                CHECK(r.wt == doctest::Approx(-(r.w1 + r.w2)).epsilon(1e-14));
                double psum = 0.0;
                for (double prob : r.post_probs) {
                    psum += prob;
                    CHECK(prob > -1e-12);
                }
                CHECK(std::abs(psum - 1.0) < 1e-10);
            }
        }
    }
}

TEST_CASE("sic scheme on side A also satisfies the cycle structure") {
    const WorkingMedium medium(SpinValue(1), SpinValue(2), 0.5);
    const CyclePoint point{medium, FieldPoint{1.2}, FieldPoint{2.5}, 1.0,
                           make_scheme(medium, SideSpec::parse("sic"), SideSpec::parse("z"))};
    const CycleResult r = run_cycle(point);
    CHECK(std::abs(r.w1 + r.w2 + r.qm + r.qt) < 1e-10);
    CHECK(r.qm >= -1e-10);
    CHECK(r.qt <= 1e-10);
    const int n = r.transition.dim;
    for (int a = 0; a < n; ++a) {
        double row = 0.0;
        for (int b = 0; b < n; ++b) {
            row += r.transition(a, b);
            CHECK(std::abs(r.transition(a, b) - r.transition(b, a)) < 1e-10);
        }
        CHECK(row == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("eta is independent of phi for z (x) (theta,phi) measurements") {
    const double theta = 1.1;
    double reference = 0.0;
    bool first = true;
    for (double phi : {0.0, M_PI / 3.0, M_PI / 2.0, M_PI}) {
        WorkingMedium medium(SpinValue(1), SpinValue(1), 0.3);
        char desc[64];
        std::snprintf(desc, sizeof(desc), "theta=%.17g,phi=%.17g", theta, phi);
        const CyclePoint point{medium, FieldPoint{3.0}, FieldPoint{4.0}, 1.0,
                               make_scheme(medium, SideSpec::parse(desc), SideSpec::parse("z"))};
        const CycleResult r = run_cycle(point);
        REQUIRE(r.eta.has_value());
        if (first) {
            reference = *r.eta;
            first = false;
        } else {
            CHECK(std::abs(*r.eta - reference) < 1e-10);
        }
    }
}

TEST_CASE("swapping which side is measured along x or z does not change the energetics") {
    const CycleResult xz = run_cycle(make_point(1, 1, 0.6, 3.0, 4.0, "x", "z"));
    const CycleResult zx = run_cycle(make_point(1, 1, 0.6, 3.0, 4.0, "z", "x"));
    CHECK(xz.qm == doctest::Approx(zx.qm).epsilon(1e-12));
    CHECK(xz.wt == doctest::Approx(zx.wt).epsilon(1e-12));
}

TEST_CASE("work decomposition") {
    SUBCASE("pair structure at J = 1.1 (sorted order equals the analytic labels)") {
        // At 4J > B2 the ascending eigenbasis is (singlet, |11>, triplet-0, |00>).
        const WorkDecomposition d = work_decomposition(make_point(1, 1, 1.1, 3.0, 4.0, "x", "z"));
        REQUIRE(d.dim == 4);
        CHECK(-d.term(0, 1) < 0.0);  // -W12 negative
        CHECK(-d.term(0, 3) > 0.0);  // -W14 positive
        CHECK(-d.term(1, 2) > 0.0);  // -W23 positive
        CHECK(std::abs(d.term(0, 2)) < 1e-12);  // equal field slopes
        CHECK(std::abs(d.term(1, 3)) < 1e-12);  // forbidden transition
        CHECK(std::abs(d.term(2, 3)) < 2e-4);   // suppressed by the thermal weights
        // symmetry W_mn = W_nm, and the gap matrices match the basis
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                CHECK(std::abs(d.term(a, b) - d.term(b, a)) < 1e-11);
                CHECK(d.delta_f[static_cast<size_t>(a) * 4 + b] ==
                      doctest::Approx(-d.delta_f[static_cast<size_t>(b) * 4 + a]).epsilon(1e-14));
            }
    }
    SUBCASE("sum reproduces the closed-form work at J = 0") {
        const WorkDecomposition d = work_decomposition(make_point(1, 1, 0.0, 3.0, 4.0, "x", "z"));
        CHECK(d.total() == doctest::Approx(-evaluate(ClosedFormId::wt_xz_hh, 0.0, 3.0, 4.0)).epsilon(1e-10));
    }
    SUBCASE("identity transition matrix means no work terms") {
        WorkingMedium medium(SpinValue(1), SpinValue(1), 0.7);
        MeasurementScheme id;
        id.operators.push_back(ComplexMatrix::identity(4));
        const CyclePoint point{std::move(medium), FieldPoint{3.0}, FieldPoint{4.0}, 1.0, std::move(id)};
        const WorkDecomposition d = work_decomposition(point);
        for (double t : d.terms) CHECK(std::abs(t) < 1e-12);
    }
    SUBCASE("sum matches -wt for a higher-spin pair") {
        const CyclePoint p = make_point(2, 3, 0.55, 1.0, 2.0, "x", "z");
        const WorkDecomposition d = work_decomposition(p);
        const CycleResult r = run_cycle(p);
        CHECK(std::abs(d.total() + r.wt) < 1e-10);
    }
}

TEST_CASE("symmetrized energetics match the trace forms") {
    SUBCASE("(1/2, 1/2) x (x) z") {
        const CyclePoint p = make_point(1, 1, 0.5, 3.0, 4.0, "x", "z");
        const SymmetrizedEnergetics s = symmetrized_energetics(p);
        const CycleResult r = run_cycle(p);
        CHECK(std::abs(s.qm_sym - r.qm) < 1e-9);
        CHECK(std::abs(s.qt_sym - r.qt) < 1e-9);
        CHECK(std::abs(s.w_sym - (r.w1 + r.w2)) < 1e-9);
    }
    SUBCASE("commuting scheme gives zero") {
        const SymmetrizedEnergetics s = symmetrized_energetics(make_point(1, 1, 0.0, 3.0, 4.0, "z", "z"));
        CHECK(std::abs(s.qm_sym) < 1e-12);
    }
    SUBCASE("z x z dephasing heat also matches in the double-sum form") {
        const CyclePoint p = make_point(1, 1, 0.5, 3.0, 4.0, "z", "z");
        const SymmetrizedEnergetics s = symmetrized_energetics(p);
        const CycleResult r = run_cycle(p);
        CHECK(std::abs(s.qm_sym - r.qm) < 1e-9);
    }
    SUBCASE("(1/2, 1) x (x) z") {
        const CyclePoint p = make_point(1, 2, 0.3, 3.0, 4.0, "x", "z");
        const SymmetrizedEnergetics s = symmetrized_energetics(p);
        const CycleResult r = run_cycle(p);
        CHECK(std::abs(s.qm_sym - r.qm) < 1e-9);
        CHECK(std::abs(s.qt_sym - r.qt) < 1e-9);
        CHECK(std::abs(s.w_sym - (r.w1 + r.w2)) < 1e-9);
    }
}

TEST_CASE("symmetric pairs keep the work sign tied to the field order") {
    for (int ts : {1, 2, 3}) {
        for (double j : {0.0, 0.3, 0.8, 1.2}) {
            const CycleResult forward = run_cycle(make_point(ts, ts, j, 3.0, 4.0, "x", "z"));
            CHECK(forward.wt >= -1e-10);
            const CycleResult backward = run_cycle(make_point(ts, ts, j, 4.0, 3.0, "x", "z"));
            CHECK(backward.wt <= 1e-10);
        }
    }
}

TEST_SUITE_END();
