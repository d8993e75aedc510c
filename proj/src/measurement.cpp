#include "heatengine/measurement.hpp"

#include <cmath>
#include <cstdio>

namespace heatengine {

namespace {

constexpr double kCompletenessTol = 1e-10;

void check_complete(const MeasurementScheme& scheme, int dim) {
    ComplexMatrix sum(dim, dim);
    for (const ComplexMatrix& m : scheme.operators) {
        if (m.rows() != dim || m.cols() != dim)
            throw DimensionMismatchError("measurement operator dimension differs from state dimension");
        sum += m.adjoint() * m;
    }
    sum -= ComplexMatrix::identity(dim);
    if (sum.max_abs() > kCompletenessTol)
        throw IncompleteSchemeError("measurement operators do not resolve the identity");
}

std::string format_angle_label(double theta, double phi) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "theta=%.10g,phi=%.10g", theta, phi);
    return buf;
}

}  // namespace

MeasurementScheme local_projective_scheme(const WorkingMedium& m, Direction dir_a, Direction dir_b) {
    const auto proj_a = eigenprojectors_of(spin_direction_operator(m.spin_a, dir_a.theta, dir_a.phi));
    const auto proj_b = eigenprojectors_of(spin_direction_operator(m.spin_b, dir_b.theta, dir_b.phi));

    MeasurementScheme scheme;
    scheme.label_a = format_angle_label(dir_a.theta, dir_a.phi);
    scheme.label_b = format_angle_label(dir_b.theta, dir_b.phi);
    for (const EigenProjector& pa : proj_a)
        for (const EigenProjector& pb : proj_b) scheme.operators.push_back(kron(pa.projector, pb.projector));
    return scheme;
}

MeasurementScheme qubit_sic_scheme() {
    static const double inv_r3 = 1.0 / std::sqrt(3.0);
    static const double bloch[4][3] = {
        {inv_r3, inv_r3, inv_r3},
        {inv_r3, -inv_r3, -inv_r3},
        {-inv_r3, inv_r3, -inv_r3},
        {-inv_r3, -inv_r3, inv_r3},
    };

    MeasurementScheme scheme;
    scheme.label_a = "sic";
    for (const double* b : bloch) {
        // sqrt of the effect (1 + b.sigma)/4: the projector scaled by 1/sqrt(2).
        ComplexMatrix m(2, 2);
        const double f = 0.5 / std::sqrt(2.0);
        m(0, 0) = f * (1.0 + b[2]);
        m(0, 1) = f * cplx(b[0], -b[1]);
        m(1, 0) = f * cplx(b[0], b[1]);
        m(1, 1) = f * (1.0 - b[2]);
        scheme.operators.push_back(std::move(m));
    }
    return scheme;
}

MeasurementScheme sic_with_projective_scheme(const WorkingMedium& m, Direction dir_b) {
    if (m.spin_a.twice_s != 1)
        throw DimensionMismatchError("sic measurement requires a spin-1/2 A side");
    const MeasurementScheme sic = qubit_sic_scheme();
    const auto proj_b = eigenprojectors_of(spin_direction_operator(m.spin_b, dir_b.theta, dir_b.phi));

    MeasurementScheme scheme;
    scheme.label_a = "sic";
    scheme.label_b = format_angle_label(dir_b.theta, dir_b.phi);
    for (const ComplexMatrix& ma : sic.operators)
        for (const EigenProjector& pb : proj_b) scheme.operators.push_back(kron(ma, pb.projector));
    return scheme;
}

ComplexMatrix apply_nonselective(const MeasurementScheme& scheme, const ComplexMatrix& rho) {
    if (!rho.square()) throw DimensionMismatchError("apply_nonselective: state must be square");
    check_complete(scheme, rho.rows());
    ComplexMatrix out(rho.rows(), rho.cols());
    for (const ComplexMatrix& m : scheme.operators) out += m * rho * m.adjoint();
    return out;
}

ComplexMatrix heisenberg_dual(const MeasurementScheme& scheme, const ComplexMatrix& h) {
    if (!h.square()) throw DimensionMismatchError("heisenberg_dual: observable must be square");
    check_complete(scheme, h.rows());
    ComplexMatrix out(h.rows(), h.cols());
    for (const ComplexMatrix& m : scheme.operators) out += m.adjoint() * h * m;
    return out;
}

TransitionMatrix transition_matrix(const MeasurementScheme& scheme, const SpectralDecomposition& basis) {
    const int n = basis.dimension();
    check_complete(scheme, n);

    TransitionMatrix t;
    t.dim = n;
    t.entries.assign(static_cast<size_t>(n) * n, 0.0);
    t.basis = basis;
    const ComplexMatrix vdag = basis.eigenvectors.adjoint();
    for (const ComplexMatrix& m : scheme.operators) {
        const ComplexMatrix w = vdag * m * basis.eigenvectors;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t.entries[static_cast<size_t>(i) * n + j] += std::norm(w(i, j));
    }
    return t;
}

Direction SideSpec::direction() const {
    switch (kind) {
        case Kind::Axis:
            if (axis == 'x') return Direction::x();
            if (axis == 'y') return Direction::y();
            return Direction::z();
        case Kind::Angles:
            return {theta, phi};
        case Kind::Sic:
            break;
    }
    throw std::logic_error("sic side has no measurement direction");
}

std::string SideSpec::label() const {
    switch (kind) {
        case Kind::Axis:
            return std::string(1, axis);
        case Kind::Angles:
            return format_angle_label(theta, phi);
        case Kind::Sic:
            return "sic";
    }
    return {};
}

SideSpec SideSpec::parse(const std::string& text) {
    SideSpec s;
    if (text == "x" || text == "y" || text == "z") {
        s.kind = Kind::Axis;
        s.axis = text[0];
        return s;
    }
    if (text == "sic") {
        s.kind = Kind::Sic;
        return s;
    }
    double theta = 0.0, phi = 0.0;
    if (std::sscanf(text.c_str(), "theta=%lf,phi=%lf", &theta, &phi) == 2) {
        s.kind = Kind::Angles;
        s.theta = theta;
        s.phi = phi;
        return s;
    }
    throw std::invalid_argument("cannot parse measurement descriptor '" + text +
                                "' (expected x|y|z|sic|theta=<v>,phi=<v>)");
}

MeasurementScheme make_scheme(const WorkingMedium& m, const SideSpec& side_a, const SideSpec& side_b) {
    if (side_b.kind == SideSpec::Kind::Sic)
        throw std::invalid_argument("sic is only supported on side A");
    MeasurementScheme scheme;
    if (side_a.kind == SideSpec::Kind::Sic) {
        scheme = sic_with_projective_scheme(m, side_b.direction());
    } else {
        scheme = local_projective_scheme(m, side_a.direction(), side_b.direction());
    }
    scheme.label_a = side_a.label();
    scheme.label_b = side_b.label();
    return scheme;
}

}  // namespace heatengine
