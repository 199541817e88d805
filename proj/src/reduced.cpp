#include "he3/reduced.hpp"

#include "he3/steady.hpp"

#include <cmath>
#include <stdexcept>

namespace he3 {

namespace {
using cd = std::complex<double>;
const cd I1{0.0, 1.0};

void check_config(int config) {
    if (config != 1 && config != 2)
        throw std::invalid_argument("reduced model: config must be 1 or 2");
}
} // namespace

ReducedCoefficients coefficients(int config, double M, double B_x, const CellParams& cell,
                                 const PhysicalConstants& pc) {
    check_config(config);
    if (std::abs(M) > 1.0) throw std::invalid_argument("coefficients: need |M| <= 1");
    const double q = M * M;
    ReducedCoefficients rc;
    rc.config = config;
    rc.a3 = rc.b3 = 0.0;
    if (config == 1) {
        if (std::abs(std::abs(M) - 1.0) < 1e-12)
            throw std::domain_error("coefficients: Config.1 a1 has a pole at M = +-1");
        const double x = B_x * pc.gamma_threehalf() * cell.tau;
        rc.c = (q - 8.0) - 30.0 * I1 * x + 27.0 * x * x;
        rc.a1 = (q - 8.0) *
                (27.0 * x * x * (q + 3.0) - 12.0 * I1 * x * (2.0 * q + 5.0) +
                 (q + 4.0) * (q - 1.0)) /
                ((q - 1.0) * (q + 4.0));
        rc.a2 = (q - 8.0) * (9.0 * x * x + q + 4.0) / (q + 4.0);
        rc.b1 = -(q - 8.0) * (21.0 * x * x - 2.0 * I1 * x * (q + 10.0) - (q + 4.0)) / (q + 4.0);
        rc.b2 = rc.a2;
        rc.gamma_f_eff = (1.0 / cell.T) * (4.0 + q) * (1.0 - q) / ((8.0 - q) * (3.0 + q));
        rc.gamma_m_eff = (1.0 / cell.tau) * (4.0 + q) / (8.0 - q);
    } else {
        const double y = B_x * pc.gamma_half() * cell.tau;
        const double z = B_x * pc.gamma_threehalf() * cell.tau;
        rc.c = 27.0 * y * z - 18.0 * I1 * y - 21.0 * I1 * z - 2.0 * (q + 7.0);
        rc.a1 = (q + 7.0) *
                (27.0 * y * z * (q + 3.0) - 18.0 * I1 * y * (q + 3.0) -
                 12.0 * I1 * z * (2.0 * q + 5.0) - 2.0 * (q + 4.0) * (q + 5.0)) /
                ((q + 4.0) * (q + 5.0));
        rc.a2 = 2.0 * (q + 7.0) * (9.0 * y * z - 6.0 * I1 * (y + z) - (q + 4.0)) / (q + 4.0);
        rc.a3 = -6.0 * q / (q + 5.0);
        rc.b1 = 2.0 * (q + 7.0) *
                (12.0 * y * z + I1 * y * (q - 8.0) - 6.0 * I1 * z - (q + 4.0)) / (q + 4.0);
        rc.b2 = 2.0 * (q + 7.0) *
                (9.0 * y * z * (q + 5.0) - 6.0 * I1 * (y + z) * (2.0 * q + 5.0) -
                 (q + 4.0) * (q + 5.0)) /
                ((q + 4.0) * (q + 5.0));
        rc.b3 = -6.0 * I1 * q * (3.0 * y + I1) / (q + 5.0);
        rc.gamma_f_eff = (1.0 / cell.T) * (4.0 + q) * (5.0 + q) / ((7.0 + q) * (3.0 + q));
        rc.gamma_m_eff = (1.0 / cell.tau) * (4.0 + q) / (2.0 * (7.0 + q));
    }
    return rc;
}

ReducedRatios smallB_ratios(int config, double M, double B_x, const CellParams& cell,
                            const PhysicalConstants& pc) {
    check_config(config);
    const double q = M * M;
    ReducedRatios r{};
    if (config == 1) {
        const double gm = (1.0 / cell.tau) * (4.0 + q) / (8.0 - q);
        const double X = B_x * pc.gamma_threehalf() / gm;
        const double d2 = (q - 8.0) * (q - 8.0);
        r.a1_c = 1.0 - I1 * 6.0 * (q * q + 37.0 * q + 60.0) / (d2 * (q - 1.0)) * X;
        r.a2_c = 1.0 - I1 * 30.0 * (q + 4.0) / d2 * X;
        r.b1_c = 1.0 - I1 * 2.0 * (q * q + 17.0 * q - 20.0) / d2 * X;
        r.b2_c = r.a2_c;
        r.a3_c = r.b3_c = 0.0;
    } else {
        const double gm = (1.0 / cell.tau) * (4.0 + q) / (2.0 * (7.0 + q));
        const double Y = B_x * pc.gamma_half() / gm;
        const double Z = B_x * pc.gamma_threehalf() / gm;
        const double p7 = q + 7.0, p5 = q + 5.0;
        r.a1_c = 1.0 + I1 * 3.0 * (6.0 * (q + 1.0) * Y + (q + 13.0) * q * Z) /
                            (4.0 * p5 * p7 * p7);
        r.a2_c = 1.0 - I1 * 3.0 * (2.0 * (q - 2.0) * Y + 3.0 * q * Z) / (4.0 * p7 * p7);
        r.a3_c = 3.0 * q / (4.0 * p5 * p7 * p7 * p7) *
                 (4.0 * p7 * p7 - I1 * 3.0 * (q + 4.0) * (6.0 * Y + 7.0 * Z));
        r.b1_c = 1.0 - I1 * (2.0 * (q * q + 8.0 * q - 20.0) * Y + 9.0 * q * Z) /
                           (4.0 * p7 * p7);
        r.b2_c = 1.0 + I1 * 3.0 * (2.0 * (q + 1.0) * (q + 10.0) * Y + (q + 13.0) * q * Z) /
                           (4.0 * p5 * p7 * p7);
        r.b3_c = 3.0 * q / (4.0 * p5 * p7 * p7 * p7) *
                 (I1 * 3.0 * (q + 4.0) * (2.0 * (q + 10.0) * Y + 7.0 * Z) - 4.0 * p7 * p7);
    }
    return r;
}

Vec6 ReducedState::pack() const {
    Vec6 v;
    v << dSy, dSz, I_plus.real(), I_plus.imag(), X_plus.real(), X_plus.imag();
    return v;
}

ReducedState ReducedState::unpack(const Vec6& v) {
    ReducedState s;
    s.dSy = v[0];
    s.dSz = v[1];
    s.I_plus = {v[2], v[3]};
    s.X_plus = {v[4], v[5]};
    return s;
}

Vec6 reduced_rhs(int config, const Vec6& state, const ReducedCoefficients& coeff,
                 const CouplingRates& rates, const SemiclassicalState& steady,
                 const CellParams& cell, const PhysicalConstants& pc) {
    check_config(config);
    const double kappa = (config == 1) ? rates.chi : rates.eta;
    const double drive_x = (config == 1) ? steady[var::Kx] : steady[var::Jx];
    const double gyro = (config == 1) ? pc.gamma_half() : pc.gamma_threehalf();
    const cd Ip{state[2], state[3]};
    const cd Xp{state[4], state[5]};
    const double dSz = state[1];

    const cd dIp = -(coeff.gamma_f_eff * coeff.a1_c() + I1 * cell.B_x * pc.gamma_nuc) * Ip +
                   coeff.gamma_m_eff * coeff.a2_c() * Xp +
                   coeff.a3_c() * drive_x * kappa * dSz;
    const cd dXp = -(coeff.gamma_m_eff * coeff.b1_c() + I1 * cell.B_x * gyro) * Xp +
                   coeff.gamma_f_eff * coeff.b2_c() * Ip +
                   (coeff.b3_c() + 1.0) * drive_x * kappa * dSz;

    Vec6 d;
    d[0] = steady[var::Sx] * kappa * Xp.imag();   // dSy' = <Sx> kappa dXz
    d[1] = 0.0;                                    // dSz' = 0
    d[2] = dIp.real();
    d[3] = dIp.imag();
    d[4] = dXp.real();
    d[5] = dXp.imag();
    return d;
}

Eigen::Matrix<double, 6, 6> reduced_generator(int config, const ReducedCoefficients& coeff,
                                              const CouplingRates& rates,
                                              const SemiclassicalState& steady,
                                              const CellParams& cell,
                                              const PhysicalConstants& pc) {
    Eigen::Matrix<double, 6, 6> G;
    for (int j = 0; j < 6; ++j) {
        Vec6 e = Vec6::Zero();
        e[j] = 1.0;
        G.col(j) = reduced_rhs(config, e, coeff, rates, steady, cell, pc);
    }
    return G;
}

double scaling_f(int config, double M) {
    check_config(config);
    const double q = M * M;
    if (config == 1) return (1.0 - q) / (3.0 + q) * std::sqrt(M);
    return 2.0 * (5.0 + q) / (3.0 + q) * std::sqrt(M);
}

double effective_coupling(int config, double M, const CouplingRates& rates,
                          const CellParams& cell) {
    check_config(config);
    if (!(M > 0.0)) throw std::domain_error("effective_coupling: need M > 0");
    const double kappa = (config == 1) ? rates.chi : rates.eta;
    return kappa * (cell.n_cell / cell.N_cell) *
           std::sqrt(cell.n_ph * cell.N_cell) * scaling_f(config, M);
}

Eigen::MatrixXd full_adiabatic_config2(double M, const CouplingRates& rates,
                                       const CellParams& cell, const PhysicalConstants& pc) {
    const LinearizedSystem sys = analytic_linearization(M, rates, cell, pc);
    // fast: dKy, dKz and all six a-sector tensor fluctuations
    const std::vector<int> fast = {4, 5, 8, 9, 10, 11, 12, 13};
    return adiabatic_eliminate(Eigen::MatrixXd(sys.A), fast);
}

} // namespace he3
