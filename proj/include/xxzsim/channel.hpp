#pragma once

#include "xxzsim/linalg.hpp"
#include "xxzsim/spin_model.hpp"

namespace xxzsim {

/// Classical dephasing field with static disorder. The noise level seen by
/// the pair is a random constant drawn uniformly from
/// [delta_o - Delta_Q/2, delta_o + Delta_Q/2].
struct ChannelParams {
    double lambda = 1.0;   // coupling to the classical field
    double Delta_Q = 1.0;  // disorder width, >= 0
    double delta_o = 1.0;  // mean noise level
    double epsilon = 1.0;  // equal energy splitting; cancels in every state map
};

/// Two-qubit time propagator for noise levels (Delta_X, Delta_Y), entries
///   U11 = e^{-2it eps} cos(Dx l t) cos(Dy l t)
///   U12 = -i e^{-2it eps} cos(Dx l t) sin(Dy l t)
///   U13 = -i e^{-2it eps} sin(Dx l t) cos(Dy l t)
///   U14 = -e^{-2it eps} sin(Dx l t) sin(Dy l t)
/// arranged in the symmetric circulant-like pattern over the four rows.
CMat evolution_unitary(const ChannelParams& c, double delta_x, double delta_y, double t);

/// Evolution of an X-state under identical sub-channels Delta_X = Delta_Y:
/// populations and r23 are untouched, r14 picks up e^{-4i Delta_X lambda t}.
XState evolve_state(const XState& s, const ChannelParams& c, double delta_x, double t);

/// sin(2 Dq l t) / (2 Dq l t), with the removable singularity handled by the
/// quadratic Taylor form below |2 Dq l t| = 1e-6. Always in [-1, 1].
double sinc_dephasing_factor(double delta_q, double lambda, double t);

/// Average of evolve_state over the uniform noise distribution:
/// r14 -> r14 * e^{-4i delta_o lambda t} * sinc_dephasing_factor(...).
/// Delta_Q -> 0 recovers evolve_state at Delta_X = delta_o.
XState static_average(const XState& s, const ChannelParams& c, double t);

}  // namespace xxzsim
