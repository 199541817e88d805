#include "he3/dynamics.hpp"

#include <cmath>

namespace he3 {

namespace {
const double s3 = std::sqrt(3.0);
const double s6 = std::sqrt(6.0);
const double s10 = std::sqrt(10.0);
const double s15 = std::sqrt(15.0);
const double s32 = std::sqrt(1.5);     // sqrt(3/2)
const double s52 = std::sqrt(2.5);     // sqrt(5/2)
} // namespace

StateVec light_rhs(const StateVec& s, const CouplingRates& c) {
    using namespace var;
    const double chi = c.chi, eta = c.eta, mu = c.mu;
    StateVec d = StateVec::Zero();

    const double S0 = s[var::S0], Sx = s[var::Sx], Sy = s[var::Sy], Sz = s[var::Sz];
    const double faraday = chi * s[Kz] + eta * s[Jz];

    d[var::Sx] = -faraday * Sy + 2.0 * s3 * mu * s[IT22] * Sz;
    d[var::Sy] = faraday * Sx - 2.0 * s3 * mu * s[RT22] * Sz;
    d[var::Sz] = 2.0 * s3 * mu * (s[RT22] * Sy - s[IT22] * Sx);

    d[Kx] = -chi * s[Ky] * Sz;
    d[Ky] = chi * s[Kx] * Sz;

    d[Jx] = -eta * s[Jy] * Sz - 2.0 * s3 * mu * (s[IT21] * (S0 - Sx) + s[RT21] * Sy);
    d[Jy] = eta * s[Jx] * Sz + 2.0 * s3 * mu * (s[RT21] * (S0 + Sx) + s[IT21] * Sy);
    d[Jz] = 4.0 * s3 * mu * (s[IT22] * Sx - s[RT22] * Sy);

    d[T20] = 2.0 * s3 * mu * (s[IT32] * Sx - s[RT32] * Sy);
    d[RT21] = -eta * Sz * s[IT21] +
              mu * (s10 / 5.0 * s[IT31] * (2.0 * S0 - 3.0 * Sx) + s6 * s[IT33] * Sx +
                    2.0 * s3 / 5.0 * (s[Jx] * Sy - s[Jy] * (S0 + Sx)) +
                    3.0 * s10 / 5.0 * s[RT31] * Sy - s6 * s[RT33] * Sy);
    d[IT21] = eta * Sz * s[RT21] +
              mu * (-s10 / 5.0 * s[RT31] * (2.0 * S0 + 3.0 * Sx) - s6 * s[RT33] * Sx +
                    2.0 * s3 / 5.0 * (s[Jx] * (S0 - Sx) - s[Jy] * Sy) -
                    3.0 * s10 / 5.0 * s[IT31] * Sy - s6 * s[IT33] * Sy);
    d[RT22] = -2.0 * eta * Sz * s[IT22] +
              mu * (2.0 * s[IT32] * S0 + (4.0 * s3 * s[Jz] - 2.0 * s15 * s[T30]) / 5.0 * Sy);
    d[IT22] = 2.0 * eta * Sz * s[RT22] -
              mu * (2.0 * s[RT32] * S0 + (4.0 * s3 * s[Jz] - 2.0 * s15 * s[T30]) / 5.0 * Sx);

    d[T30] = 2.0 * s15 / 5.0 * mu * (s[RT22] * Sy - s[IT22] * Sx);
    d[RT31] = -eta * Sz * s[IT31] +
              s10 / 5.0 * mu * (s[IT21] * (2.0 * S0 + 3.0 * Sx) - 3.0 * s[RT21] * Sy);
    d[IT31] = eta * Sz * s[RT31] -
              s10 / 5.0 * mu * (s[RT21] * (2.0 * S0 - 3.0 * Sx) - 3.0 * s[IT21] * Sy);
    d[RT32] = -2.0 * eta * Sz * s[IT32] + 2.0 * mu * (s[IT22] * S0 + s3 * s[T20] * Sy);
    d[IT32] = 2.0 * eta * Sz * s[RT32] - 2.0 * mu * (s[RT22] * S0 + s3 * s[T20] * Sx);
    d[RT33] = -3.0 * eta * Sz * s[IT33] + s6 * mu * (s[IT21] * Sx + s[RT21] * Sy);
    d[IT33] = 3.0 * eta * Sz * s[RT33] + s6 * mu * (s[IT21] * Sy - s[RT21] * Sx);
    return d;
}

StateVec magnetic_rhs(const StateVec& s, const Eigen::Vector3d& B,
                      const PhysicalConstants& pc) {
    using namespace var;
    const double Bx = B[0], By = B[1], Bz = B[2];
    const double gn = pc.gamma_nuc;
    const double g12 = pc.gamma_half();
    const double g32 = pc.gamma_threehalf();
    StateVec d = StateVec::Zero();

    const Eigen::Vector3d I = s.segment<3>(Ix), K = s.segment<3>(Kx), J = s.segment<3>(Jx);
    d.segment<3>(Ix) = gn * I.cross(B);
    d.segment<3>(Kx) = g12 * K.cross(B);
    d.segment<3>(Jx) = g32 * J.cross(B);

    d[T20] = g32 * s3 * (Bx * s[IT21] - By * s[RT21]);
    d[RT21] = g32 * (Bx * s[IT22] + By * (s3 * s[T20] - s[RT22]) + Bz * s[IT21]);
    d[IT21] = g32 * (-Bx * (s3 * s[T20] + s[RT22]) - By * s[IT22] - Bz * s[RT21]);
    d[RT22] = g32 * (Bx * s[IT21] + By * s[RT21] + 2.0 * Bz * s[IT22]);
    d[IT22] = g32 * (-Bx * s[RT21] + By * s[IT21] - 2.0 * Bz * s[RT22]);

    d[T30] = g32 * s6 * (Bx * s[IT31] - By * s[RT31]);
    d[RT31] = g32 * (s52 * Bx * s[IT32] + By * (s6 * s[T30] - s52 * s[RT32]) + Bz * s[IT31]);
    d[IT31] = g32 * (-Bx * (s6 * s[T30] + s52 * s[RT32]) - s52 * By * s[IT32] - Bz * s[RT31]);
    d[RT32] = g32 * (Bx * (s52 * s[IT31] + s32 * s[IT33]) +
                     By * (s52 * s[RT31] - s32 * s[RT33]) + 2.0 * Bz * s[IT32]);
    d[IT32] = g32 * (-Bx * (s52 * s[RT31] + s32 * s[RT33]) +
                     By * (s52 * s[IT31] - s32 * s[IT33]) - 2.0 * Bz * s[RT32]);
    d[RT33] = g32 * (s32 * Bx * s[IT32] + s32 * By * s[RT32] + 3.0 * Bz * s[IT33]);
    d[IT33] = g32 * (-s32 * Bx * s[RT32] + s32 * By * s[IT32] - 3.0 * Bz * s[RT33]);
    return d;
}

StateVec mec_rhs(const StateVec& s, const CellParams& cell) {
    using namespace var;
    const double N = cell.N_cell, n = cell.n_cell, T = cell.T, tau = cell.tau;
    StateVec d = StateVec::Zero();

    const Eigen::Vector3d I = s.segment<3>(Ix), K = s.segment<3>(Kx), J = s.segment<3>(Jx);
    const Eigen::Vector3d Sig = 2.0 / 3.0 * (J + 2.0 * K);

    // alignment tensor from the rank-2 components
    Eigen::Matrix3d Q;
    Q(0, 0) = (s3 * s[RT22] - s[T20]) / 6.0;
    Q(1, 1) = -(s3 * s[RT22] + s[T20]) / 6.0;
    Q(2, 2) = s[T20] / 3.0;
    Q(0, 1) = Q(1, 0) = s[IT22] / (2.0 * s3);
    Q(0, 2) = Q(2, 0) = -s[RT21] / (2.0 * s3);
    Q(1, 2) = Q(2, 1) = -s[IT21] / (2.0 * s3);
    const Eigen::Vector3d QI = Q * I;

    d.segment<3>(Ix) = -I / T + N / (3.0 * T * n) * (J - K);
    d.segment<3>(Kx) = -7.0 / (9.0 * tau) * K + J / (9.0 * tau) - n / (9.0 * tau * N) * I -
                       4.0 / (3.0 * tau * N) * QI;
    d.segment<3>(Jx) = -4.0 / (9.0 * tau) * J + 10.0 / (9.0 * tau) * K +
                       10.0 * n / (9.0 * tau * N) * I + 4.0 / (3.0 * tau * N) * QI;

    const double r2 = 2.0 / (3.0 * tau);
    d[RT22] = -r2 * s[RT22] + (I.x() * Sig.x() - I.y() * Sig.y()) / (s3 * tau * N);
    d[IT22] = -r2 * s[IT22] + (I.x() * Sig.y() + I.y() * Sig.x()) / (s3 * tau * N);
    d[RT21] = -r2 * s[RT21] - (I.x() * Sig.z() + I.z() * Sig.x()) / (s3 * tau * N);
    d[IT21] = -r2 * s[IT21] - (I.y() * Sig.z() + I.z() * Sig.y()) / (s3 * tau * N);
    d[T20] = -r2 * s[T20] + (3.0 * I.z() * Sig.z() - I.dot(Sig)) / (3.0 * tau * N);

    const double r3 = 1.0 / tau;
    d[RT33] = -r3 * s[RT33] - s6 / (3.0 * tau * N) * (I.x() * s[RT22] - I.y() * s[IT22]);
    d[IT33] = -r3 * s[IT33] - s6 / (3.0 * tau * N) * (I.x() * s[IT22] + I.y() * s[RT22]);
    d[RT32] = -r3 * s[RT32] -
              2.0 / (3.0 * tau * N) * (I.x() * s[RT21] - I.y() * s[IT21] - I.z() * s[RT22]);
    d[IT32] = -r3 * s[IT32] -
              2.0 / (3.0 * tau * N) * (I.x() * s[IT21] + I.y() * s[RT21] - I.z() * s[IT22]);
    d[RT31] = -r3 * s[RT31] + 2.0 / (3.0 * s10 * tau * N) *
              (I.x() * (s[RT22] - 2.0 * s3 * s[T20]) + I.y() * s[IT22] + 4.0 * I.z() * s[RT21]);
    d[IT31] = -r3 * s[IT31] + 2.0 / (3.0 * s10 * tau * N) *
              (I.x() * s[IT22] - I.y() * (s[RT22] + 2.0 * s3 * s[T20]) + 4.0 * I.z() * s[IT21]);
    d[T30] = -r3 * s[T30] + 2.0 / (std::sqrt(5.0) * tau * N) *
             (s3 / 3.0 * (I.x() * s[RT21] + I.y() * s[IT21]) + I.z() * s[T20]);
    return d;
}

DerivativeBreakdown full_rhs(const StateVec& s, const CouplingRates& c,
                             const CellParams& cell, const PhysicalConstants& pc) {
    DerivativeBreakdown out;
    out.light = light_rhs(s, c);
    out.magnetic = magnetic_rhs(s, Eigen::Vector3d(cell.B_x, 0.0, 0.0), pc);
    out.mec = mec_rhs(s, cell);
    return out;
}

} // namespace he3
