#include "xxzsim/measures.hpp"

#include <algorithm>
#include <cmath>

namespace xxzsim {

namespace {

double clamped_product(const std::vector<double>& eigenvalues) {
    double det = 1.0;
    for (double lam : eigenvalues) det *= lam;
    return std::max(det, 0.0);
}

CMat projector2(const cplx& a00, const cplx& a01, const cplx& a10, const cplx& a11) {
    CMat p(2);
    p(0, 0) = a00;
    p(0, 1) = a01;
    p(1, 0) = a10;
    p(1, 1) = a11;
    return p;
}

// sum_i (Pi_i (x) I) rho (Pi_i (x) I) for a pair of rank-1 projectors on
// the first qubit
CMat measured_state(const CMat& rho, const CMat& pi0, const CMat& pi1) {
    const CMat eye2 = CMat::identity(2);
    CMat out(4);
    for (const CMat* pi : {&pi0, &pi1}) {
        const CMat p4 = kron(*pi, eye2);
        out += p4 * rho * p4;
    }
    return out;
}

}  // namespace

double negativity_raw(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("negativity: need a two-qubit state");
    const Eigensystem es = hermitian_eigensystem(partial_transpose_first(rho.mat()));
    double neg = 0.0;
    for (double lam : es.values)
        if (lam < 0.0) neg -= lam;
    return 2.0 * neg;
}

double negativity(const DensityMatrix& rho) {
    return std::clamp(negativity_raw(rho), 0.0, 1.0);
}

double l1_coherence(const DensityMatrix& rho) {
    const CMat& m = rho.mat();
    double s = 0.0;
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (i != j) s += std::abs(m(i, j));
    return s;
}

double entropic_uncertainty(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw std::invalid_argument("entropic_uncertainty: need a two-qubit state");
    const DensityMatrix rho_b(partial_trace(rho.mat(), Subsystem::Second));
    const double s_b = von_neumann_entropy(rho_b);

    // sigma_z eigenprojectors |0><0|, |1><1|
    const CMat z0 = projector2(1.0, 0.0, 0.0, 0.0);
    const CMat z1 = projector2(0.0, 0.0, 0.0, 1.0);
    // sigma_x eigenprojectors |+><+|, |-><-|
    const CMat xp = projector2(0.5, 0.5, 0.5, 0.5);
    const CMat xm = projector2(0.5, -0.5, -0.5, 0.5);

    const double s_xb = von_neumann_entropy(DensityMatrix(measured_state(rho.mat(), xp, xm)));
    const double s_zb = von_neumann_entropy(DensityMatrix(measured_state(rho.mat(), z0, z1)));
    return (s_xb - s_b) + (s_zb - s_b);
}

double mixedness_entropy(const DensityMatrix& rho) { return von_neumann_entropy(rho); }

double fidelity_pair(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != 4 || sigma.dim() != 4)
        throw std::invalid_argument("fidelity_pair: need two-qubit states");
    const double overlap = (rho.mat() * sigma.mat()).trace().real();
    return overlap + 2.0 * std::sqrt(clamped_product(rho.eigenvalues()) *
                                     clamped_product(sigma.eigenvalues()));
}

double fidelity_to_initial(const SpinParams& p, const ChannelParams& c, double t) {
    const XState r = thermal_state(p);
    const double s = sinc_dephasing_factor(c.Delta_Q, c.lambda, t);
    const double a14 = std::norm(r.r14);
    const double a23 = std::norm(r.r23);

    const double x1 = r.r11 * r.r11 + r.r22 * r.r22 + r.r33 * r.r33 + r.r44 * r.r44 + 2.0 * a23;
    const double x2 = 2.0 * a14 * s * std::cos(4.0 * c.delta_o * c.lambda * t);
    // det factors of both X-states; round-off on rank-deficient blocks is
    // clamped before the root
    const double outer0 = std::max(r.r11 * r.r44 - a14, 0.0);
    const double outer_t = std::max(r.r11 * r.r44 - a14 * s * s, 0.0);
    const double inner = std::max(r.r22 * r.r33 - a23, 0.0);
    const double x3 = 2.0 * inner * std::sqrt(outer0 * outer_t);
    return x1 + x2 + x3;
}

double fidelity_to_bell(const SpinParams& p, const ChannelParams& c, double t) {
    const XState r = thermal_state(p);
    const double s = sinc_dephasing_factor(c.Delta_Q, c.lambda, t);
    const cplx damped14 = r.r14 * std::polar(1.0, -4.0 * c.delta_o * c.lambda * t) * s;
    return 0.5 * (r.r11 + r.r44) + damped14.real();
}

StateMeasures x_state_measures(const XState& s) {
    XState canonical = s;
    canonical.r14 = std::abs(s.r14);
    canonical.r23 = std::abs(s.r23);
    const DensityMatrix rho(canonical.to_matrix());
    return StateMeasures{negativity(rho), entropic_uncertainty(rho), l1_coherence(rho),
                         mixedness_entropy(rho)};
}

}  // namespace xxzsim
