#pragma once

#include <array>

#include "xxzsim/linalg.hpp"

namespace xxzsim {

/// Couplings of the two-qubit XXZ pair plus bath temperature. Units are
/// dimensionless with hbar = k_B = 1.
struct SpinParams {
    double J = 1.0;        // Heisenberg exchange; J > 0 antiferromagnetic
    double delta_z = 1.0;  // z-axis anisotropy
    double D_z = 1.0;      // Dzyaloshinskii-Moriya (antisymmetric spin-orbit)
    double K_z = 5.0;      // KSEA (symmetric spin-orbit)
    double B = 1.0;        // homogeneous magnetic field
    double T = 1.0;        // temperature, must be > 0
};

/// Quantities derived from SpinParams that recur in the closed forms.
struct DerivedScales {
    double Lambda;   // sqrt(4B^2 + 4K_z^2), splitting of the |00>/|11> block
    double upsilon;  // sqrt(4J^2 + 4D_z^2), splitting of the |01>/|10> block
    double phi;      // Lambda / T
    double varpi;    // upsilon / T
    double Z;        // partition function; may overflow to inf at extreme params
    double log_Z;    // always finite
};

/// Two-qubit X-state: the only nonzero entries sit on the diagonal and the
/// anti-diagonal of the computational-basis matrix. Closed under every
/// channel in this project. Basis index is 2a+b, qubit a first.
struct XState {
    double r11 = 0.0, r22 = 0.0, r33 = 0.0, r44 = 0.0;
    cplx r14{0.0, 0.0};  // |00><11| coherence
    cplx r23{0.0, 0.0};  // |01><10| coherence

    CMat to_matrix() const;
    DensityMatrix to_density_matrix() const { return DensityMatrix(to_matrix()); }
};

/// Hamiltonian in the computational basis {|00>,|01>,|10>,|11>}:
///   diag(2B+dz, -dz, -dz, -2B+dz),
///   (0,3) = -2i K_z, (1,2) = 2i D_z + 2J, plus conjugates.
CMat build_hamiltonian(const SpinParams& p);

struct HamiltonianSpectrum {
    /// {dz+Lambda, dz-Lambda, -dz+upsilon, -dz-upsilon}
    std::array<double, 4> energies;
    /// normalized eigenvectors as columns, same order as energies
    CMat states;
};

/// Closed-form spectrum. Each eigenvector pair lives in one 2x2 block of the
/// X-pattern; degenerate blocks fall back to the computational basis states,
/// which are exact eigenvectors there. Phases follow the convention of
/// hermitian_eigensystem (first nonzero component real positive).
HamiltonianSpectrum hamiltonian_spectrum(const SpinParams& p);

DerivedScales derived_scales(const SpinParams& p);

/// Gibbs state exp(-H/T)/Z evaluated from the closed-form entries. Weights
/// are rescaled by the largest Boltzmann factor internally, so extreme
/// coupling/temperature ratios do not overflow. Throws for T <= 0.
XState thermal_state(const SpinParams& p);

/// Spectrum of an X-state from the two 2x2 blocks:
///   (r11+r44)/2 +- sqrt((r11-r44)^2/4 + |r14|^2)  and the r22/r33 analogue.
/// Order: outer +, outer -, inner +, inner -.
std::array<double, 4> thermal_state_eigenvalues(const XState& s);

}  // namespace xxzsim
