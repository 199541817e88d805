#include "he3/steady.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace he3 {

SemiclassicalState stationary_state(double M, const CellParams& cell) {
    if (std::abs(M) > 1.0) throw std::invalid_argument("stationary_state: need |M| <= 1");
    const double n = cell.n_cell, q = 3.0 + M * M;
    SemiclassicalState s;
    s[var::S0] = cell.n_ph / 2.0;
    s[var::Sx] = cell.n_ph / 2.0;
    s[var::Ix] = M * cell.N_cell / 2.0;
    s[var::Kx] = 0.5 * M * (1.0 - M * M) / q * n;
    s[var::Jx] = M * (5.0 + M * M) / q * n;
    s[var::T20] = -M * M / q * n;
    s[var::RT22] = std::sqrt(3.0) * M * M / q * n;
    s[var::RT31] = std::sqrt(0.3) * M * M * M / q * n;
    s[var::RT33] = -M * M * M / (std::sqrt(2.0) * q) * n;
    return s;
}

const std::array<int, 14>& LinearizedSystem::ordering_a() {
    static const std::array<int, 14> a = {
        var::Sy, var::Sz, var::Iy, var::Iz, var::Ky, var::Kz, var::Jy, var::Jz,
        var::RT21, var::IT22, var::T30, var::IT31, var::RT32, var::IT33};
    return a;
}

const std::array<int, 11>& LinearizedSystem::ordering_b() {
    static const std::array<int, 11> b = {
        var::S0, var::Sx, var::Ix, var::Kx, var::Jx, var::T20,
        var::IT21, var::RT22, var::RT31, var::IT32, var::RT33};
    return b;
}

LinearizedSystem analytic_linearization(double M, const CouplingRates& c,
                                        const CellParams& cell, const PhysicalConstants& pc) {
    const double chi = c.chi, eta = c.eta, mu = c.mu;
    const double n = cell.n_cell, N = cell.N_cell, T = cell.T, tau = cell.tau;
    const double nph = cell.n_ph, Bx = cell.B_x;
    const double q = M * M + 3.0;
    const double gB = pc.gamma_threehalf() * Bx;
    const double g12B = pc.gamma_half() * Bx;
    const double gnB = pc.gamma_nuc * Bx;
    const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0), s5 = std::sqrt(5.0);
    const double s6 = std::sqrt(6.0), s10 = std::sqrt(10.0), s15 = std::sqrt(15.0);
    const double s32 = std::sqrt(1.5), s52 = std::sqrt(2.5), s35 = std::sqrt(0.6);

    LinearizedSystem sys;
    auto& A = sys.A;
    auto& B = sys.B;
    A.setZero();
    B.setZero();

    // a = (Sy, Sz, Iy, Iz, Ky, Kz, Jy, Jz, RT21, IT22, T30, IT31, RT32, IT33)
    A(0, 1) = -6.0 * mu * M * M * n / q;
    A(0, 5) = chi * nph / 2.0;
    A(0, 7) = eta * nph / 2.0;
    A(1, 0) = 6.0 * mu * M * M * n / q;
    A(1, 9) = -s3 * mu * nph;
    A(2, 2) = -1.0 / T;  A(2, 3) = gnB;
    A(2, 4) = -N / (3.0 * n * T);  A(2, 6) = N / (3.0 * n * T);
    A(3, 2) = -gnB;  A(3, 3) = -1.0 / T;
    A(3, 5) = -N / (3.0 * n * T);  A(3, 7) = N / (3.0 * n * T);
    A(4, 1) = 0.5 * M * (4.0 / q - 1.0) * n * chi;
    A(4, 2) = -n * (1.0 - M * M) / (3.0 * N * tau * q);
    A(4, 4) = -7.0 / (9.0 * tau);  A(4, 5) = g12B;  A(4, 6) = 1.0 / (9.0 * tau);
    A(4, 9) = -M / (3.0 * s3 * tau);
    A(5, 3) = -n * (1.0 - M * M) / (3.0 * N * tau * q);
    A(5, 4) = -g12B;  A(5, 5) = -7.0 / (9.0 * tau);  A(5, 7) = 1.0 / (9.0 * tau);
    A(5, 8) = M / (3.0 * s3 * tau);
    A(6, 1) = eta * M * (M * M + 5.0) * n / q;
    A(6, 2) = 2.0 * (M * M + 5.0) * n / (3.0 * q * N * tau);
    A(6, 4) = 10.0 / (9.0 * tau);  A(6, 6) = -4.0 / (9.0 * tau);  A(6, 7) = gB;
    A(6, 8) = 2.0 * s3 * mu * nph;  A(6, 9) = M / (3.0 * s3 * tau);
    A(7, 0) = -12.0 * mu * M * M * n / q;
    A(7, 3) = 2.0 * (M * M + 5.0) * n / (3.0 * q * N * tau);
    A(7, 5) = 10.0 / (9.0 * tau);  A(7, 6) = -gB;  A(7, 7) = -4.0 / (9.0 * tau);
    A(7, 8) = -M / (3.0 * s3 * tau);  A(7, 9) = 2.0 * s3 * mu * nph;
    A(8, 0) = 2.0 * s3 * mu * M * (M * M + 1.0) * n / q;
    A(8, 3) = -4.0 * M * n / (s3 * N * tau * q);
    A(8, 5) = -2.0 * M / (3.0 * s3 * tau);
    A(8, 6) = -0.4 * s3 * mu * nph;  A(8, 7) = -M / (3.0 * s3 * tau);
    A(8, 8) = -2.0 / (3.0 * tau);  A(8, 9) = gB;
    A(8, 11) = -mu * nph / s10;  A(8, 13) = s32 * mu * nph;
    A(9, 1) = 2.0 * s3 * eta * M * M * n / q;
    A(9, 2) = 4.0 * M * n / (s3 * N * tau * q);
    A(9, 4) = 2.0 * M / (3.0 * s3 * tau);  A(9, 6) = M / (3.0 * s3 * tau);
    A(9, 7) = -0.4 * s3 * mu * nph;  A(9, 8) = -gB;  A(9, 9) = -2.0 / (3.0 * tau);
    A(9, 10) = s35 * mu * nph;  A(9, 12) = -mu * nph;
    A(10, 0) = 6.0 * mu * M * M * n / (s5 * q);
    A(10, 3) = -2.0 * M * M * n / (s5 * N * tau * q);
    A(10, 8) = M / (s15 * tau);  A(10, 9) = -s35 * mu * nph;
    A(10, 10) = -1.0 / tau;  A(10, 11) = s6 * gB;
    A(11, 1) = std::sqrt(0.3) * eta * M * M * M * n / q;
    A(11, 2) = std::sqrt(2.0 / 15.0) * M * M * n / (N * tau * q);
    A(11, 8) = mu * nph / s10;  A(11, 9) = M / (3.0 * s10 * tau);
    A(11, 10) = -s6 * gB;  A(11, 11) = -1.0 / tau;  A(11, 12) = -s52 * gB;
    A(12, 0) = -2.0 * s3 * mu * M * M * n / q;
    A(12, 3) = 2.0 * M * M * n / (s3 * N * tau * q);
    A(12, 8) = -M / (3.0 * tau);  A(12, 9) = mu * nph;
    A(12, 11) = s52 * gB;  A(12, 12) = -1.0 / tau;  A(12, 13) = s32 * gB;
    A(13, 1) = -3.0 * eta * M * M * M * n / (s2 * q);
    A(13, 2) = -s2 * M * M * n / (N * tau * q);
    A(13, 8) = -s32 * mu * nph;  A(13, 9) = -M / (s6 * tau);
    A(13, 12) = -s32 * gB;  A(13, 13) = -1.0 / tau;

    // b = (S0, Sx, Ix, Kx, Jx, T20, IT21, RT22, RT31, IT32, RT33)
    B(2, 2) = -1.0 / T;  B(2, 3) = -N / (3.0 * n * T);  B(2, 4) = N / (3.0 * n * T);
    B(3, 2) = -n * (3.0 * M * M + 1.0) / (3.0 * N * tau * q);
    B(3, 3) = -7.0 / (9.0 * tau);  B(3, 4) = 1.0 / (9.0 * tau);
    B(3, 5) = M / (9.0 * tau);  B(3, 7) = -M / (3.0 * s3 * tau);
    B(4, 2) = n * (6.0 * M * M + 10.0) / (3.0 * N * tau * q);
    B(4, 3) = 10.0 / (9.0 * tau);  B(4, 4) = -4.0 / (9.0 * tau);
    B(4, 5) = -M / (9.0 * tau);  B(4, 7) = M / (3.0 * s3 * tau);
    B(5, 2) = -4.0 * M * n / (3.0 * N * tau * q);
    B(5, 3) = -2.0 * M / (9.0 * tau);  B(5, 4) = -M / (9.0 * tau);
    B(5, 5) = -2.0 / (3.0 * tau);  B(5, 6) = s3 * gB;  B(5, 9) = s3 * mu * nph;
    B(6, 0) = 2.0 * s3 * mu * M * n / q;  B(6, 1) = -2.0 * s3 * mu * M * n / q;
    B(6, 5) = -s3 * gB;  B(6, 6) = -2.0 / (3.0 * tau);  B(6, 7) = -gB;
    B(6, 8) = -s52 * mu * nph;  B(6, 10) = -s32 * mu * nph;
    B(7, 2) = 4.0 * M * n / (s3 * N * tau * q);
    B(7, 3) = 2.0 * M / (3.0 * s3 * tau);  B(7, 4) = M / (3.0 * s3 * tau);
    B(7, 6) = gB;  B(7, 7) = -2.0 / (3.0 * tau);  B(7, 9) = mu * nph;
    B(8, 2) = std::sqrt(1.2) * M * M * n / (N * tau * q);
    B(8, 5) = -std::sqrt(2.0 / 15.0) * M / tau;
    B(8, 6) = s52 * mu * nph;  B(8, 7) = M / (3.0 * s10 * tau);
    B(8, 8) = -1.0 / tau;  B(8, 9) = s52 * gB;
    B(9, 0) = -2.0 * s3 * mu * M * M * n / q;  B(9, 1) = 2.0 * s3 * mu * M * M * n / q;
    B(9, 5) = -s3 * mu * nph;  B(9, 6) = -M / (3.0 * tau);  B(9, 7) = -mu * nph;
    B(9, 8) = -s52 * gB;  B(9, 9) = -1.0 / tau;  B(9, 10) = -s32 * gB;
    B(10, 2) = -s2 * M * M * n / (N * tau * q);
    B(10, 6) = s32 * mu * nph;  B(10, 7) = -M / (s6 * tau);
    B(10, 9) = s32 * gB;  B(10, 10) = -1.0 / tau;
    return sys;
}

NumericJacobian numeric_jacobian(double M, const CouplingRates& c, const CellParams& cell,
                                 double h_rel, const PhysicalConstants& pc) {
    const SemiclassicalState s0 = stationary_state(M, cell);

    // per-component scales for the finite-difference step
    StateVec scale;
    for (int i = 0; i < kStateDim; ++i) {
        double sc = cell.n_cell;
        if (i <= var::Sz) sc = std::max(cell.n_ph / 2.0, 1e-30);
        else if (i <= var::Iz) sc = cell.N_cell / 2.0;
        scale[i] = std::max(std::abs(s0.v[i]), sc);
    }

    NumericJacobian out;
    for (int j = 0; j < kStateDim; ++j) {
        const double h = h_rel * scale[j];
        StateVec sp = s0.v, sm = s0.v;
        sp[j] += h;
        sm[j] -= h;
        const StateVec fp = full_rhs(sp, c, cell, pc).total();
        const StateVec fm = full_rhs(sm, c, cell, pc).total();
        out.full.col(j) = (fp - fm) / (2.0 * h);
    }

    const auto& ao = LinearizedSystem::ordering_a();
    const auto& bo = LinearizedSystem::ordering_b();
    for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j) out.sys.A(i, j) = out.full(ao[i], ao[j]);
    for (int i = 0; i < 11; ++i)
        for (int j = 0; j < 11; ++j) out.sys.B(i, j) = out.full(bo[i], bo[j]);

    double cross2 = 0.0;
    for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 11; ++j) {
            cross2 += out.full(ao[i], bo[j]) * out.full(ao[i], bo[j]);
            cross2 += out.full(bo[j], ao[i]) * out.full(bo[j], ao[i]);
        }
    out.cross_norm = std::sqrt(cross2);
    return out;
}

Eigen::MatrixXd adiabatic_eliminate(const Eigen::MatrixXd& gen,
                                    const std::vector<int>& fast_indices) {
    const int n = static_cast<int>(gen.rows());
    if (gen.cols() != n) throw std::invalid_argument("adiabatic_eliminate: square matrix required");
    std::vector<bool> is_fast(n, false);
    for (int k : fast_indices) {
        if (k < 0 || k >= n) throw std::invalid_argument("adiabatic_eliminate: index out of range");
        if (is_fast[k]) throw std::invalid_argument("adiabatic_eliminate: duplicate fast index");
        is_fast[k] = true;
    }
    if (fast_indices.empty()) return gen;

    std::vector<int> slow;
    for (int i = 0; i < n; ++i)
        if (!is_fast[i]) slow.push_back(i);
    const int ns = static_cast<int>(slow.size());
    const int nf = static_cast<int>(fast_indices.size());

    Eigen::MatrixXd Ass(ns, ns), Asf(ns, nf), Afs(nf, ns), Aff(nf, nf);
    for (int i = 0; i < ns; ++i) {
        for (int j = 0; j < ns; ++j) Ass(i, j) = gen(slow[i], slow[j]);
        for (int j = 0; j < nf; ++j) Asf(i, j) = gen(slow[i], fast_indices[j]);
    }
    for (int i = 0; i < nf; ++i) {
        for (int j = 0; j < ns; ++j) Afs(i, j) = gen(fast_indices[i], slow[j]);
        for (int j = 0; j < nf; ++j) Aff(i, j) = gen(fast_indices[i], fast_indices[j]);
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Aff, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smin = svd.singularValues().minCoeff();
    const double smax = svd.singularValues().maxCoeff();
    if (!(smin > 0.0) || smax / smin > 1e14)
        throw std::runtime_error("adiabatic_eliminate: fast block singular, cond = " +
                                 std::to_string(smax / (smin > 0 ? smin : 1e-300)));
    return Ass - Asf * Aff.partialPivLu().solve(Afs);
}

} // namespace he3
