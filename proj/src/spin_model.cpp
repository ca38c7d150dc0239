#include "xxzsim/spin_model.hpp"

#include <cmath>

namespace xxzsim {

namespace {

struct BoltzmannWeights {
    std::array<double, 4> energies;  // {dz+L, dz-L, -dz+u, -dz-u}
    std::array<double, 4> w;         // exp(-(E_k - E_min)/T), all in (0, 1]
    double sum;                      // rescaled partition function
    double shift;                    // -E_min/T, so Z = exp(shift) * sum
};

BoltzmannWeights boltzmann_weights(const SpinParams& p, double lam, double ups) {
    BoltzmannWeights bw;
    bw.energies = {p.delta_z + lam, p.delta_z - lam, -p.delta_z + ups, -p.delta_z - ups};
    double m = -bw.energies[0] / p.T;
    for (double e : bw.energies) m = std::max(m, -e / p.T);
    bw.sum = 0.0;
    for (size_t k = 0; k < 4; ++k) {
        bw.w[k] = std::exp(-bw.energies[k] / p.T - m);
        bw.sum += bw.w[k];
    }
    bw.shift = m;
    return bw;
}

void require_positive_temperature(const SpinParams& p) {
    if (!(p.T > 0.0)) throw std::invalid_argument("thermal state requires T > 0");
}

}  // namespace

CMat XState::to_matrix() const {
    CMat m(4);
    m(0, 0) = r11;
    m(1, 1) = r22;
    m(2, 2) = r33;
    m(3, 3) = r44;
    m(0, 3) = r14;
    m(3, 0) = std::conj(r14);
    m(1, 2) = r23;
    m(2, 1) = std::conj(r23);
    return m;
}

CMat build_hamiltonian(const SpinParams& p) {
    CMat h(4);
    h(0, 0) = 2.0 * p.B + p.delta_z;
    h(1, 1) = -p.delta_z;
    h(2, 2) = -p.delta_z;
    h(3, 3) = -2.0 * p.B + p.delta_z;
    h(0, 3) = cplx(0.0, -2.0 * p.K_z);
    h(3, 0) = cplx(0.0, 2.0 * p.K_z);
    h(1, 2) = cplx(2.0 * p.J, 2.0 * p.D_z);
    h(2, 1) = cplx(2.0 * p.J, -2.0 * p.D_z);
    return h;
}

HamiltonianSpectrum hamiltonian_spectrum(const SpinParams& p) {
    const double lam = 2.0 * std::hypot(p.B, p.K_z);
    const double ups = 2.0 * std::hypot(p.J, p.D_z);

    HamiltonianSpectrum sp{{p.delta_z + lam, p.delta_z - lam, -p.delta_z + ups, -p.delta_z - ups},
                           CMat(4)};

    // Outer block, spanned by |00> and |11>:
    //   [[2B+dz, -2iK], [2iK, -2B+dz]]
    // Unnormalized eigenvectors are (Lambda+2B, 2iK) for dz+Lambda and
    // (2iK, Lambda+2B) for dz-Lambda. Both vanish only when K_z = 0 and
    // Lambda+2B = 0, and there the block is already diagonal.
    {
        const cplx c0(lam + 2.0 * p.B, 0.0);
        const cplx c1(0.0, 2.0 * p.K_z);
        const double nrm = std::sqrt(std::norm(c0) + std::norm(c1));
        if (nrm > 1e-14 * std::max(1.0, lam)) {
            sp.states(0, 0) = c0 / nrm;
            sp.states(3, 0) = c1 / nrm;
            sp.states(0, 1) = c1 / nrm;
            sp.states(3, 1) = c0 / nrm;
        } else if (p.B < 0.0) {
            sp.states(3, 0) = 1.0;  // |11> carries energy dz - 2B = dz + Lambda
            sp.states(0, 1) = 1.0;
        } else {
            sp.states(0, 0) = 1.0;
            sp.states(3, 1) = 1.0;
        }
    }

    // Inner block, spanned by |01> and |10>:
    //   [[-dz, a], [conj(a), -dz]] with a = 2J + 2iD_z, |a| = upsilon.
    // Eigenvectors (a, upsilon) and (-upsilon, conj(a)), each of norm
    // upsilon * sqrt(2).
    {
        const cplx a(2.0 * p.J, 2.0 * p.D_z);
        if (ups > 0.0) {
            const double nrm = std::sqrt(2.0) * ups;
            sp.states(1, 2) = a / nrm;
            sp.states(2, 2) = ups / nrm;
            sp.states(1, 3) = -ups / nrm;
            sp.states(2, 3) = std::conj(a) / nrm;
        } else {
            sp.states(1, 2) = 1.0;
            sp.states(2, 3) = 1.0;
        }
    }

    // phase convention: first nonzero component real positive
    for (int col = 0; col < 4; ++col) {
        cplx phase(1.0, 0.0);
        for (int k = 0; k < 4; ++k) {
            const double mag = std::abs(sp.states(k, col));
            if (mag > 1e-12) {
                phase = std::conj(sp.states(k, col)) / mag;
                break;
            }
        }
        for (int k = 0; k < 4; ++k) sp.states(k, col) *= phase;
    }
    return sp;
}

DerivedScales derived_scales(const SpinParams& p) {
    require_positive_temperature(p);
    DerivedScales d;
    d.Lambda = 2.0 * std::hypot(p.B, p.K_z);
    d.upsilon = 2.0 * std::hypot(p.J, p.D_z);
    d.phi = d.Lambda / p.T;
    d.varpi = d.upsilon / p.T;
    const BoltzmannWeights bw = boltzmann_weights(p, d.Lambda, d.upsilon);
    d.log_Z = bw.shift + std::log(bw.sum);
    d.Z = std::exp(d.log_Z);
    return d;
}

XState thermal_state(const SpinParams& p) {
    require_positive_temperature(p);
    const double lam = 2.0 * std::hypot(p.B, p.K_z);
    const double ups = 2.0 * std::hypot(p.J, p.D_z);
    const BoltzmannWeights bw = boltzmann_weights(p, lam, ups);
    const double w1 = bw.w[0], w4 = bw.w[1], w2 = bw.w[2], w3 = bw.w[3];
    const double zt = bw.sum;

    // cosh/sinh products rewritten as sums of Boltzmann weights:
    //   e^{-dz/T} cosh(phi)   = (w4 + w1)/2   e^{-dz/T} sinh(phi)   = (w4 - w1)/2
    //   e^{+dz/T} cosh(varpi) = (w3 + w2)/2   e^{+dz/T} sinh(varpi) = (w3 - w2)/2
    // This keeps every intermediate in [0, 1] regardless of parameters.
    const double cb = lam > 0.0 ? 2.0 * p.B / lam : 0.0;    // B / sqrt(B^2+K^2)
    const double ck = lam > 0.0 ? 2.0 * p.K_z / lam : 0.0;  // K_z / sqrt(B^2+K^2)

    XState s;
    s.r11 = 0.5 * ((1.0 - cb) * w4 + (1.0 + cb) * w1) / zt;
    s.r44 = 0.5 * ((1.0 + cb) * w4 + (1.0 - cb) * w1) / zt;
    s.r22 = 0.5 * (w3 + w2) / zt;
    s.r33 = s.r22;
    s.r14 = cplx(0.0, ck) * (0.5 * (w4 - w1) / zt);
    if (ups > 0.0) {
        const cplx dir(-2.0 * p.J / ups, -2.0 * p.D_z / ups);  // (-J - iD_z)/sqrt(J^2+D_z^2)
        s.r23 = dir * (0.5 * (w3 - w2) / zt);
    }
    return s;
}

std::array<double, 4> thermal_state_eigenvalues(const XState& s) {
    const double outer = std::sqrt((s.r11 - s.r44) * (s.r11 - s.r44) + 4.0 * std::norm(s.r14));
    const double inner = std::sqrt((s.r22 - s.r33) * (s.r22 - s.r33) + 4.0 * std::norm(s.r23));
    return {0.5 * (s.r11 + s.r44 + outer), 0.5 * (s.r11 + s.r44 - outer),
            0.5 * (s.r22 + s.r33 + inner), 0.5 * (s.r22 + s.r33 - inner)};
}

}  // namespace xxzsim
