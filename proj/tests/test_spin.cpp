#include <doctest.h>

#include <cmath>

#include "heatengine/spin.hpp"

using namespace heatengine;

TEST_SUITE_BEGIN("spin");

TEST_CASE("spin-1/2 operators are the halved Pauli matrices") {
    const SpinOperators ops = spin_operators(SpinValue(1));
    CHECK(ops.sz(0, 0) == cplx(0.5, 0.0));
    CHECK(ops.sz(1, 1) == cplx(-0.5, 0.0));
    CHECK(ops.sx(0, 1) == cplx(0.5, 0.0));
    CHECK(ops.sx(1, 0) == cplx(0.5, 0.0));
    CHECK(ops.sy(0, 1) == cplx(0.0, -0.5));
    CHECK(ops.sy(1, 0) == cplx(0.0, 0.5));
}

TEST_CASE("spin-1 matches the standard representation") {
    const SpinOperators ops = spin_operators(SpinValue(2));
    CHECK(ops.sz(0, 0) == cplx(1.0, 0.0));
    CHECK(ops.sz(1, 1) == cplx(0.0, 0.0));
    CHECK(ops.sz(2, 2) == cplx(-1.0, 0.0));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(ops.sx(0, 1).real() == doctest::Approx(r));
    CHECK(ops.sx(1, 2).real() == doctest::Approx(r));
    CHECK(std::abs(ops.sx(0, 2)) == 0.0);
}

TEST_CASE("ladder amplitudes and SU(2) algebra up to s = 5/2") {
    for (int ts = 1; ts <= 5; ++ts) {
        const SpinValue s(ts);
        const SpinOperators ops = spin_operators(s);
        CHECK(ops.sx.hermiticity_defect() < 1e-14);
        CHECK(ops.sy.hermiticity_defect() < 1e-14);
        CHECK(ops.sz.hermiticity_defect() < 1e-14);

        // ladder-operator oracle: <m+1|S+|m> = sqrt(s(s+1) - m(m+1))
        const double sv = s.value();
        for (int i = 1; i < s.dimension(); ++i) {
            const double m = sv - i;
            const double amp = std::sqrt(sv * (sv + 1.0) - m * (m + 1.0));
            const cplx splus = ops.sx(i - 1, i) + cplx(0.0, 1.0) * ops.sy(i - 1, i);
            CHECK(std::abs(splus - cplx(amp, 0.0)) < 1e-13);
        }

        const cplx iu(0.0, 1.0);
        CHECK((ops.sx * ops.sy - ops.sy * ops.sx - iu * ops.sz).max_abs() < 1e-12);
        CHECK((ops.sy * ops.sz - ops.sz * ops.sy - iu * ops.sx).max_abs() < 1e-12);
        CHECK((ops.sz * ops.sx - ops.sx * ops.sz - iu * ops.sy).max_abs() < 1e-12);

        ComplexMatrix casimir = ops.sx * ops.sx + ops.sy * ops.sy + ops.sz * ops.sz;
        casimir -= sv * (sv + 1.0) * ComplexMatrix::identity(s.dimension());
        CHECK(casimir.max_abs() < 1e-12);
    }
}

TEST_CASE("direction operator hits the axes and keeps the spectrum") {
    const SpinValue half(1);
    const SpinOperators ops = spin_operators(half);
    CHECK((spin_direction_operator(half, 0.0, 0.0) - ops.sz).max_abs() < 1e-15);
    CHECK((spin_direction_operator(half, M_PI / 2.0, 0.0) - ops.sx).max_abs() < 1e-15);

    const SpinValue one(2);
    const auto sd = hermitian_eigendecompose(spin_direction_operator(one, M_PI / 3.0, M_PI / 4.0));
    CHECK(sd.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-10));
    CHECK(sd.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(sd.eigenvalues[2] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("eigenprojectors: completeness, orthogonality, degeneracy grouping") {
    const SpinValue half(1);
    const SpinOperators ops = spin_operators(half);

    auto proj_z = eigenprojectors_of(ops.sz);
    REQUIRE(proj_z.size() == 2);
    CHECK(proj_z[0].eigenvalue == doctest::Approx(-0.5));
    CHECK(std::abs(proj_z[0].projector(1, 1) - 1.0) < 1e-14);
    CHECK(proj_z[1].eigenvalue == doctest::Approx(0.5));
    CHECK(std::abs(proj_z[1].projector(0, 0) - 1.0) < 1e-14);

    auto proj_full = eigenprojectors_of(ComplexMatrix::identity(3));
    REQUIRE(proj_full.size() == 1);
    CHECK((proj_full[0].projector - ComplexMatrix::identity(3)).max_abs() < 1e-14);

    // projectors of sx are onto (|0> +- |1>)/sqrt(2)
    auto proj_x = eigenprojectors_of(ops.sx);
    REQUIRE(proj_x.size() == 2);
    for (const auto& p : proj_x) {
        CHECK(std::abs(p.projector(0, 0) - 0.5) < 1e-14);
        CHECK(std::abs(p.projector(1, 1) - 0.5) < 1e-14);
        CHECK(std::abs(std::abs(p.projector(0, 1)) - 0.5) < 1e-14);
    }
    CHECK(proj_x[1].projector(0, 1).real() == doctest::Approx(0.5));   // + eigenvector
    CHECK(proj_x[0].projector(0, 1).real() == doctest::Approx(-0.5));  // - eigenvector

    for (int ts = 1; ts <= 5; ++ts) {
        const auto projectors = eigenprojectors_of(spin_direction_operator(SpinValue(ts), 0.7, 1.9));
        ComplexMatrix sum(ts + 1, ts + 1);
        for (size_t i = 0; i < projectors.size(); ++i) {
            for (size_t j = 0; j < projectors.size(); ++j) {
                const ComplexMatrix prod = projectors[i].projector * projectors[j].projector;
                if (i == j)
                    CHECK((prod - projectors[i].projector).max_abs() < 1e-10);
                else
                    CHECK(prod.max_abs() < 1e-10);
            }
            sum += projectors[i].projector;
        }
        CHECK((sum - ComplexMatrix::identity(ts + 1)).max_abs() < 1e-10);
    }
}

TEST_CASE("eigenprojectors reject non-hermitian input") {
    ComplexMatrix a(2, 2);
    a(0, 1) = cplx(0.0, 1.0);
    a(1, 0) = cplx(0.0, 1.0);
    CHECK_THROWS_AS(eigenprojectors_of(a), NonHermitianError);
}

TEST_CASE("spin tag parsing round-trips") {
    CHECK(SpinValue::parse("1/2").twice_s == 1);
    CHECK(SpinValue::parse("1").twice_s == 2);
    CHECK(SpinValue::parse("3/2").twice_s == 3);
    CHECK(SpinValue::parse("2").twice_s == 4);
    CHECK(SpinValue(3).label() == "3/2");
    CHECK(SpinValue(4).label() == "2");
    CHECK_THROWS_AS(SpinValue::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(SpinValue::parse("1/3"), std::invalid_argument);
}

TEST_SUITE_END();
