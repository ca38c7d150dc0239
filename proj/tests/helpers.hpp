#pragma once

// Shared oracles and generators for the test suites. Everything here stays
// independent of the closed-form code paths it is used to check: the thermal
// oracle goes through the numeric eigensystem, the quadrature oracles
// integrate the phase directly.

#include <cmath>
#include <ostream>
#include <random>
#include <vector>

#include "xxzsim/channel.hpp"
#include "xxzsim/linalg.hpp"
#include "xxzsim/spin_model.hpp"

namespace testutil {

using xxzsim::CMat;
using xxzsim::cplx;

/// absolute-tolerance comparison target, |value - target| <= tol
struct Near {
    double target;
    double tol;
};

inline Near near(double target, double tol) { return {target, tol}; }
inline bool operator==(double v, const Near& n) { return std::abs(v - n.target) <= n.tol; }
inline std::ostream& operator<<(std::ostream& os, const Near& n) {
    return os << n.target << " +- " << n.tol;
}

inline double max_abs_diff(const CMat& a, const CMat& b) {
    double d = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) d = std::max(d, std::abs(a(i, j) - b(i, j)));
    return d;
}

inline CMat random_hermitian(std::mt19937_64& rng, int dim, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    CMat m(dim);
    for (int i = 0; i < dim; ++i) {
        m(i, i) = u(rng);
        for (int j = i + 1; j < dim; ++j) {
            const cplx z(u(rng), u(rng));
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

// Ginibre construction: G G^dag normalized to unit trace is a valid random
// density matrix of full rank with probability one.
inline xxzsim::DensityMatrix random_density_matrix(std::mt19937_64& rng, int dim = 4) {
    std::normal_distribution<double> g(0.0, 1.0);
    CMat gm(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) gm(i, j) = cplx(g(rng), g(rng));
    CMat rho = gm * gm.adjoint();
    const double tr = rho.trace().real();
    rho = rho * cplx(1.0 / tr, 0.0);
    // re-symmetrize the round-off
    rho = (rho + rho.adjoint()) * cplx(0.5, 0.0);
    return xxzsim::DensityMatrix(rho);
}

inline xxzsim::SpinParams random_spin_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coupling(-10.0, 10.0);
    std::uniform_real_distribution<double> temp(0.05, 20.0);
    xxzsim::SpinParams p;
    p.J = coupling(rng);
    p.delta_z = coupling(rng);
    p.D_z = coupling(rng);
    p.K_z = coupling(rng);
    p.B = coupling(rng);
    p.T = temp(rng);
    return p;
}

// exp(-H/T)/Z assembled from the numeric eigensystem, with the weights
// rescaled by the largest one so extreme spectra cannot overflow.
inline CMat thermal_oracle(const CMat& h, double temperature) {
    const xxzsim::Eigensystem es = xxzsim::hermitian_eigensystem(h);
    const int n = h.dim();
    const double e_min = es.values.front();
    std::vector<double> w(static_cast<size_t>(n));
    double z = 0.0;
    for (int k = 0; k < n; ++k) {
        w[static_cast<size_t>(k)] = std::exp(-(es.values[static_cast<size_t>(k)] - e_min) / temperature);
        z += w[static_cast<size_t>(k)];
    }
    CMat rho(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx acc(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                acc += es.vectors(i, k) * std::conj(es.vectors(j, k)) * (w[static_cast<size_t>(k)] / z);
            rho(i, j) = acc;
        }
    return rho;
}

inline CMat bell_phi_plus() {
    CMat rho(4);
    rho(0, 0) = 0.5;
    rho(0, 3) = 0.5;
    rho(3, 0) = 0.5;
    rho(3, 3) = 0.5;
    return rho;
}

// transpose over the second qubit, used only to compare spectra against
// partial_transpose_first
inline CMat partial_transpose_second(const CMat& m) {
    CMat out(4);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) out(2 * a + b, 2 * c + d) = m(2 * a + d, 2 * c + b);
    return out;
}

// (1/Dq) integral of e^{-4 i u lambda t} over [delta_o - Dq/2, delta_o + Dq/2]
// by composite Simpson with the given number of panels.
inline cplx simpson_phase_average(double delta_o, double delta_q, double lambda, double t,
                                  int panels) {
    const double a = delta_o - 0.5 * delta_q;
    const double h = delta_q / panels;
    auto f = [&](double u) { return std::polar(1.0, -4.0 * u * lambda * t); };
    cplx acc = f(a) + f(a + delta_q);
    for (int k = 1; k < panels; ++k) acc += f(a + k * h) * (k % 2 == 1 ? 4.0 : 2.0);
    return acc * (h / 3.0) / delta_q;
}

// Stratified uniform sampling of the same average: one uniform draw per
// stratum, which keeps the estimator unbiased while shrinking the variance
// far below the plain Monte-Carlo rate.
inline cplx stratified_phase_average(std::mt19937_64& rng, double delta_o, double delta_q,
                                     double lambda, double t, int samples) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double a = delta_o - 0.5 * delta_q;
    const double h = delta_q / samples;
    cplx acc(0.0, 0.0);
    for (int k = 0; k < samples; ++k) {
        const double u = a + (k + u01(rng)) * h;
        acc += std::polar(1.0, -4.0 * u * lambda * t);
    }
    return acc / static_cast<double>(samples);
}

inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

}  // namespace testutil
