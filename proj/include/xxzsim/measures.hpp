#pragma once

#include "xxzsim/channel.hpp"
#include "xxzsim/linalg.hpp"
#include "xxzsim/spin_model.hpp"

namespace xxzsim {

/// Entanglement negativity, 2 * sum |negative eigenvalues| of the partial
/// transpose over the first qubit, clamped to [0, 1]. 1 for Bell states,
/// 0 exactly for PPT (= separable, for two qubits) states.
double negativity(const DensityMatrix& rho);

/// Same without the clamp, for diagnostics.
double negativity_raw(const DensityMatrix& rho);

/// l1-norm coherence: sum of |rho_ij| over all off-diagonal entries in the
/// computational basis. Equals 2(|r14| + |r23|) on an X-state.
double l1_coherence(const DensityMatrix& rho);

/// Memory-assisted entropic uncertainty for sigma_x and sigma_z measured on
/// the first qubit with the second as memory:
///   EU = S(X|B) + S(Z|B),  S(O|B) = S(rho_OB) - S(rho_B),
/// where rho_OB = sum_i (Pi_i (x) I) rho (Pi_i (x) I) over the eigenprojectors
/// of O. Lies in [0, 2]; 0 on Bell states, 2 on the maximally mixed state.
double entropic_uncertainty(const DensityMatrix& rho);

/// Mixedness in bits, -Tr[rho log2 rho].
double mixedness_entropy(const DensityMatrix& rho);

/// Overlap functional Tr[rho sigma] + 2 sqrt(det rho * det sigma).
/// Determinants come from the cached spectra; round-off negatives are
/// clamped to zero before the square root.
double fidelity_pair(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Closed form for fidelity_pair(dephased thermal state at time t, thermal
/// state at time 0), evaluated directly from the thermal entries and the
/// sinc damping factor.
double fidelity_to_initial(const SpinParams& p, const ChannelParams& c, double t);

/// Closed form for fidelity_pair against the Bell state (|00>+|11>)/sqrt(2):
///   (r11 + r44)/2 + Re(r14 * e^{-4i delta_o lambda t}) * sinc factor.
double fidelity_to_bell(const SpinParams& p, const ChannelParams& c, double t);

struct StateMeasures {
    double ng;  // negativity
    double eu;  // entropic uncertainty
    double lc;  // l1 coherence
    double en;  // entropy
};

/// The four state measures of an X-state, evaluated in the local frame where
/// both coherences are real and non-negative. Local phase rotations change
/// none of entanglement, coherence or entropy, and pinning the frame makes
/// every measure a function of the populations and coherence magnitudes
/// alone, so sweep output is independent of the noise mean delta_o and the
/// splitting epsilon.
StateMeasures x_state_measures(const XState& s);

}  // namespace xxzsim
