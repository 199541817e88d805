#include "he3/oracles.hpp"

#include "he3/tensor_ops.hpp"

#include <cmath>

namespace he3 {

namespace {

using cd = std::complex<double>;

const TensorOperatorSet& ops32() {
    static const TensorOperatorSet set = build_tensor_ops(HalfInt{3});
    return set;
}
const TensorOperatorSet& ops12() {
    static const TensorOperatorSet set = build_tensor_ops(HalfInt{1});
    return set;
}

/// Coupled |1..6> columns in the decoupled basis, index = 2*m_S_idx + m_I_idx.
const Matrix6cd& coupled_to_decoupled() {
    static const Matrix6cd U = [] {
        Matrix6cd u = Matrix6cd::Zero();
        const double r13 = std::sqrt(1.0 / 3.0), r23 = std::sqrt(2.0 / 3.0);
        auto dec = [](int e, int nn) { return 2 * e + nn; };
        u(dec(0, 0), 0) = 1.0;                                   // |1> = |-1,-1/2>
        u(dec(1, 0), 1) = r23; u(dec(0, 1), 1) = r13;            // |2>
        u(dec(1, 1), 2) = r23; u(dec(2, 0), 2) = r13;            // |3>
        u(dec(2, 1), 3) = 1.0;                                   // |4> = |1,+1/2>
        u(dec(1, 0), 4) = r13; u(dec(0, 1), 4) = -r23;           // |5>
        u(dec(1, 1), 5) = -r13; u(dec(2, 0), 5) = r23;           // |6>
        return u;
    }();
    return U;
}

Matrix6cd project_blocks(const Matrix6cd& m) {
    Matrix6cd out = Matrix6cd::Zero();
    out.topLeftCorner<4, 4>() = m.topLeftCorner<4, 4>();
    out.bottomRightCorner<2, 2>() = m.bottomRightCorner<2, 2>();
    return out;
}

// the 15 traceless F=3/2 observables paired with their state components
struct Obs32 {
    int index;
    const ComplexMatrix* op;
};
const std::vector<Obs32>& obs32_table() {
    static const std::vector<Obs32> table = [] {
        const auto& o = ops32();
        std::vector<Obs32> t;
        t.push_back({var::Jx, &o.Fx});
        t.push_back({var::Jy, &o.Fy});
        t.push_back({var::Jz, &o.Fz});
        t.push_back({var::T20, &o.t.at({2, 0})});
        t.push_back({var::RT21, &o.rt.at({2, 1})});
        t.push_back({var::IT21, &o.it.at({2, 1})});
        t.push_back({var::RT22, &o.rt.at({2, 2})});
        t.push_back({var::IT22, &o.it.at({2, 2})});
        t.push_back({var::T30, &o.t.at({3, 0})});
        t.push_back({var::RT31, &o.rt.at({3, 1})});
        t.push_back({var::IT31, &o.it.at({3, 1})});
        t.push_back({var::RT32, &o.rt.at({3, 2})});
        t.push_back({var::IT32, &o.it.at({3, 2})});
        t.push_back({var::RT33, &o.rt.at({3, 3})});
        t.push_back({var::IT33, &o.it.at({3, 3})});
        return t;
    }();
    return table;
}

/// rho (up to an identity shift, which commutators do not see) carrying the
/// collective expectations of one F=3/2 manifold.
ComplexMatrix rho32_from_state(const StateVec& s) {
    const auto& o = ops32();
    ComplexMatrix rho = (o.Fx * s[var::Jx] + o.Fy * s[var::Jy] + o.Fz * s[var::Jz]) / 5.0;
    for (const auto& e : obs32_table())
        if (e.index >= var::T20) rho += s[e.index] * (*e.op);
    return rho;
}

Eigen::Matrix2cd pauli(int a) {
    Eigen::Matrix2cd m;
    if (a == 0) m << 0, 1, 1, 0;
    else if (a == 1) m << 0, cd(0, -1), cd(0, 1), 0;
    else m << -1, 0, 0, 1;      // increasing-m basis (-1/2, +1/2)
    return m;
}

} // namespace

BlockDensityMatrix BlockDensityMatrix::checked(const Matrix6cd& rho_m, const Matrix2cd& rho_f) {
    auto hermitian = [](const auto& m) { return (m - m.adjoint()).norm() < 1e-10; };
    if (!hermitian(rho_m) || !hermitian(rho_f))
        throw std::invalid_argument("BlockDensityMatrix: non-Hermitian block");
    if (std::abs(rho_m.trace().real() - 1.0) > 1e-10 || std::abs(rho_f.trace().real() - 1.0) > 1e-10)
        throw std::invalid_argument("BlockDensityMatrix: blocks must have unit trace");
    if ((rho_m - project_blocks(rho_m)).norm() > 1e-10)
        throw std::invalid_argument("BlockDensityMatrix: forbidden F=3/2 - F=1/2 coherences");
    Eigen::SelfAdjointEigenSolver<Matrix6cd> es_m(rho_m);
    Eigen::SelfAdjointEigenSolver<Matrix2cd> es_f(rho_f);
    if (es_m.eigenvalues().minCoeff() < -1e-10 || es_f.eigenvalues().minCoeff() < -1e-10)
        throw std::invalid_argument("BlockDensityMatrix: block not positive semidefinite");
    BlockDensityMatrix out;
    out.rho_m = rho_m;
    out.rho_f = rho_f;
    return out;
}

Eigen::Matrix3cd partial_trace_nuclear(const Matrix6cd& rho_m) {
    const Matrix6cd& U = coupled_to_decoupled();
    const Matrix6cd dec = U * rho_m * U.adjoint();
    Eigen::Matrix3cd out;
    for (int e1 = 0; e1 < 3; ++e1)
        for (int e2 = 0; e2 < 3; ++e2)
            out(e1, e2) = dec(2 * e1, 2 * e2) + dec(2 * e1 + 1, 2 * e2 + 1);
    return out;
}

Matrix2cd partial_trace_electronic(const Matrix6cd& rho_m) {
    const Matrix6cd& U = coupled_to_decoupled();
    const Matrix6cd dec = U * rho_m * U.adjoint();
    Matrix2cd out = Matrix2cd::Zero();
    for (int n1 = 0; n1 < 2; ++n1)
        for (int n2 = 0; n2 < 2; ++n2)
            for (int e = 0; e < 3; ++e)
                out(n1, n2) += dec(2 * e + n1, 2 * e + n2);
    return out;
}

BlockDerivative mec_rho_rhs(const BlockDensityMatrix& rho, const CellParams& cell) {
    const Matrix6cd& U = coupled_to_decoupled();
    const Eigen::Matrix3cd trn = partial_trace_nuclear(rho.rho_m);
    const Matrix2cd tre = partial_trace_electronic(rho.rho_m);

    BlockDerivative d;
    d.drho_f = (-rho.rho_f + tre) / cell.T;

    Matrix6cd recombined = Matrix6cd::Zero();
    for (int e1 = 0; e1 < 3; ++e1)
        for (int e2 = 0; e2 < 3; ++e2)
            for (int n1 = 0; n1 < 2; ++n1)
                for (int n2 = 0; n2 < 2; ++n2)
                    recombined(2 * e1 + n1, 2 * e2 + n2) = trn(e1, e2) * rho.rho_f(n1, n2);
    const Matrix6cd recombined_coupled = U.adjoint() * recombined * U;
    d.drho_m = project_blocks((-rho.rho_m + recombined_coupled) / cell.tau);
    return d;
}

SemiclassicalState expectations_from_rho(const BlockDensityMatrix& rho,
                                         const CellParams& cell) {
    SemiclassicalState s;
    const Matrix2cd rho12 = rho.rho_m.bottomRightCorner<2, 2>();
    const ComplexMatrix rho32 = rho.rho_m.topLeftCorner<4, 4>();
    for (int a = 0; a < 3; ++a) {
        s[var::Ix + a] = cell.N_cell * (rho.rho_f * (0.5 * pauli(a))).trace().real();
        s[var::Kx + a] = cell.n_cell * (rho12 * (0.5 * pauli(a))).trace().real();
    }
    for (const auto& e : obs32_table())
        s[e.index] = cell.n_cell * (rho32 * (*e.op)).trace().real();
    return s;
}

BlockDensityMatrix random_block_rho(std::mt19937& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.2, 0.8);
    auto wishart = [&](int d) {
        ComplexMatrix G(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) G(i, j) = cd(g(rng), g(rng));
        ComplexMatrix W = G * G.adjoint();
        return W / W.trace().real();
    };
    const double p32 = u(rng);
    Matrix6cd rho_m = Matrix6cd::Zero();
    rho_m.topLeftCorner<4, 4>() = p32 * wishart(4);
    rho_m.bottomRightCorner<2, 2>() = (1.0 - p32) * wishart(2);
    return BlockDensityMatrix::checked(rho_m, wishart(2));
}

BlockDensityMatrix spin_temperature_rho(double M, char axis) {
    if (std::abs(M) >= 1.0)
        throw std::invalid_argument("spin_temperature_rho: need |M| < 1");
    // z-aligned weights e^{beta m}, e^beta = (1+M)/(1-M)
    const double eb = (1.0 + M) / (1.0 - M);
    Matrix2cd rho_f = Matrix2cd::Zero();
    rho_f(0, 0) = 1.0 / (1.0 + eb);      // m_I = -1/2
    rho_f(1, 1) = eb / (1.0 + eb);
    Eigen::Matrix3cd xe = Eigen::Matrix3cd::Zero();
    const double z = 1.0 / eb + 1.0 + eb;
    xe(0, 0) = (1.0 / eb) / z; xe(1, 1) = 1.0 / z; xe(2, 2) = eb / z;

    if (axis == 'x') {
        // rotate z -> x on both factors: R = exp(-i theta F_y)
        auto rot = [](const ComplexMatrix& Fy, double theta) {
            Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(Fy);
            ComplexMatrix ph = ComplexMatrix::Zero(Fy.rows(), Fy.rows());
            for (int i = 0; i < Fy.rows(); ++i)
                ph(i, i) = std::exp(cd(0.0, -theta * es.eigenvalues()[i]));
            return ComplexMatrix(es.eigenvectors() * ph * es.eigenvectors().adjoint());
        };
        const ComplexMatrix rn = rot(0.5 * pauli(1), -M_PI / 2.0);
        ComplexMatrix sy1(3, 3);   // spin-1 F_y, increasing m
        sy1.setZero();
        const cd ihalf(0.0, 1.0 / std::sqrt(2.0));
        sy1(0, 1) = ihalf; sy1(1, 0) = -ihalf;
        sy1(1, 2) = ihalf; sy1(2, 1) = -ihalf;
        const ComplexMatrix re = rot(sy1, -M_PI / 2.0);
        rho_f = (rn * rho_f * rn.adjoint()).eval();
        xe = (re * xe * re.adjoint()).eval();
        // orientation check: <i_x> must equal +M/2
        const double ix = (rho_f * (0.5 * pauli(0))).trace().real();
        if (ix * M < -1e-15) {
            rho_f = rho_f.transpose().eval();   // reverse rotation sense
            xe = xe.transpose().eval();
        }
    } else if (axis != 'z') {
        throw std::invalid_argument("spin_temperature_rho: axis must be 'x' or 'z'");
    }

    Matrix6cd dec = Matrix6cd::Zero();
    for (int e1 = 0; e1 < 3; ++e1)
        for (int e2 = 0; e2 < 3; ++e2)
            for (int n1 = 0; n1 < 2; ++n1)
                for (int n2 = 0; n2 < 2; ++n2)
                    dec(2 * e1 + n1, 2 * e2 + n2) = xe(e1, e2) * rho_f(n1, n2);
    const Matrix6cd& U = coupled_to_decoupled();
    const Matrix6cd rho_m = project_blocks(U.adjoint() * dec * U);
    return BlockDensityMatrix::checked(rho_m, rho_f);
}

StateVec hamiltonian_rhs_oracle(const StateVec& s, const CouplingRates& c,
                                const Eigen::Vector3d& B, const PhysicalConstants& pc) {
    StateVec d = StateVec::Zero();
    const double S0 = s[var::S0], Sx = s[var::Sx], Sy = s[var::Sy], Sz = s[var::Sz];
    const double sqrt12 = std::sqrt(12.0);
    const cd i1(0.0, 1.0);

    // F=3/2 manifold
    {
        const auto& o = ops32();
        const ComplexMatrix h = c.eta * Sz * o.Fz +
                                c.mu * (-2.0 * S0 * o.t.at({2, 0}) +
                                        sqrt12 * (Sx * o.rt.at({2, 2}) + Sy * o.it.at({2, 2}))) -
                                pc.gamma_threehalf() * (B[0] * o.Fx + B[1] * o.Fy + B[2] * o.Fz);
        const ComplexMatrix rho = rho32_from_state(s);
        for (const auto& e : obs32_table()) {
            const ComplexMatrix comm = h * (*e.op) - (*e.op) * h;
            d[e.index] = (i1 * (rho * comm).trace()).real();
        }
    }
    // F=1/2 manifold
    {
        const auto& o = ops12();
        const ComplexMatrix h = c.chi * Sz * o.Fz -
                                pc.gamma_half() * (B[0] * o.Fx + B[1] * o.Fy + B[2] * o.Fz);
        const ComplexMatrix rho =
            2.0 * (s[var::Kx] * o.Fx + s[var::Ky] * o.Fy + s[var::Kz] * o.Fz);
        const ComplexMatrix* kops[3] = {&o.Fx, &o.Fy, &o.Fz};
        for (int a = 0; a < 3; ++a) {
            const ComplexMatrix comm = h * (*kops[a]) - (*kops[a]) * h;
            d[var::Kx + a] = (i1 * (rho * comm).trace()).real();
        }
    }
    // ground nuclear spin
    {
        Eigen::Matrix2cd iop[3] = {0.5 * pauli(0), 0.5 * pauli(1), 0.5 * pauli(2)};
        const Eigen::Matrix2cd h = -pc.gamma_nuc * (B[0] * iop[0] + B[1] * iop[1] + B[2] * iop[2]);
        const Eigen::Matrix2cd rho =
            2.0 * (s[var::Ix] * iop[0] + s[var::Iy] * iop[1] + s[var::Iz] * iop[2]);
        for (int a = 0; a < 3; ++a) {
            const Eigen::Matrix2cd comm = h * iop[a] - iop[a] * h;
            d[var::Ix + a] = (i1 * (rho * comm).trace()).real();
        }
    }
    // Stokes sector: su(2) with atomic expectations as numbers; S0 commutes.
    {
        const Eigen::Matrix2cd sx = 0.5 * pauli(0), sy = 0.5 * pauli(1), sz = 0.5 * pauli(2);
        const Eigen::Matrix2cd H = (c.chi * s[var::Kz] + c.eta * s[var::Jz]) * sz +
                                   sqrt12 * c.mu * (s[var::RT22] * sx + s[var::IT22] * sy);
        const Eigen::Matrix2cd rho = 2.0 * (Sx * sx + Sy * sy + Sz * sz);
        const Eigen::Matrix2cd* sops[3] = {&sx, &sy, &sz};
        for (int a = 0; a < 3; ++a) {
            const Eigen::Matrix2cd comm = H * (*sops[a]) - (*sops[a]) * H;
            d[var::Sx + a] = (i1 * (rho * comm).trace()).real();
        }
        d[var::S0] = 0.0;
    }
    return d;
}

} // namespace he3
