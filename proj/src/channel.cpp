#include "xxzsim/channel.hpp"

#include <cmath>

namespace xxzsim {

namespace {

void require_nonnegative_time(double t) {
    if (t < 0.0) throw std::invalid_argument("channel evolution requires t >= 0");
}

}  // namespace

CMat evolution_unitary(const ChannelParams& c, double delta_x, double delta_y, double t) {
    require_nonnegative_time(t);
    const cplx phase = std::polar(1.0, -2.0 * t * c.epsilon);
    const double cx = std::cos(delta_x * c.lambda * t);
    const double sx = std::sin(delta_x * c.lambda * t);
    const double cy = std::cos(delta_y * c.lambda * t);
    const double sy = std::sin(delta_y * c.lambda * t);
    const cplx u11 = phase * cx * cy;
    const cplx u12 = cplx(0.0, -1.0) * phase * cx * sy;
    const cplx u13 = cplx(0.0, -1.0) * phase * sx * cy;
    const cplx u14 = -phase * sx * sy;

    CMat u(4);
    const cplx row0[4] = {u11, u12, u13, u14};
    const cplx row1[4] = {u12, u11, u14, u13};
    const cplx row2[4] = {u13, u14, u11, u12};
    const cplx row3[4] = {u14, u13, u12, u11};
    const cplx* rows[4] = {row0, row1, row2, row3};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) u(i, j) = rows[i][j];
    return u;
}

XState evolve_state(const XState& s, const ChannelParams& c, double delta_x, double t) {
    require_nonnegative_time(t);
    XState out = s;
    out.r14 *= std::polar(1.0, -4.0 * delta_x * c.lambda * t);
    return out;
}

double sinc_dephasing_factor(double delta_q, double lambda, double t) {
    const double x = 2.0 * delta_q * lambda * t;
    if (std::abs(x) < 1e-6) return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

XState static_average(const XState& s, const ChannelParams& c, double t) {
    require_nonnegative_time(t);
    if (c.Delta_Q < 0.0) throw std::invalid_argument("static_average requires Delta_Q >= 0");
    XState out = s;
    out.r14 *= std::polar(1.0, -4.0 * c.delta_o * c.lambda * t) *
               sinc_dephasing_factor(c.Delta_Q, c.lambda, t);
    return out;
}

}  // namespace xxzsim
