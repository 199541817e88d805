#pragma once

#include <complex>

#include <Eigen/Dense>

#include "he3/constants.hpp"
#include "he3/dynamics.hpp"
#include "he3/state.hpp"

namespace he3 {

using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Complex coefficients of the three-spin models. Only the ratios a_i/c,
/// b_i/c enter the equations of motion; c carries the common denominator of
/// the exact adiabatic elimination. a3, b3 are zero for Config.1.
struct ReducedCoefficients {
    int config;
    std::complex<double> c, a1, a2, a3, b1, b2, b3;
    double gamma_f_eff, gamma_m_eff;    // rescaled polarization-dependent MEC rates

    std::complex<double> a1_c() const { return a1 / c; }
    std::complex<double> a2_c() const { return a2 / c; }
    std::complex<double> a3_c() const { return a3 / c; }
    std::complex<double> b1_c() const { return b1 / c; }
    std::complex<double> b2_c() const { return b2 / c; }
    std::complex<double> b3_c() const { return b3 / c; }
};

/// Exact coefficients from the closed-form elimination. Config.1 has a pole
/// at M = +-1 (empty F=1/2 manifold), flagged as a domain error.
ReducedCoefficients coefficients(int config, double M, double B_x, const CellParams& cell,
                                 const PhysicalConstants& pc = {});

/// First-order-in-B_x expansions of the coefficient ratios, in the product
/// B_x gamma / gamma_m^(config).
struct ReducedRatios {
    std::complex<double> a1_c, a2_c, a3_c, b1_c, b2_c, b3_c;
};
ReducedRatios smallB_ratios(int config, double M, double B_x, const CellParams& cell,
                            const PhysicalConstants& pc = {});

/// Reduced fluctuation state packed as (dSy, dSz, Re I+, Im I+, Re X+, Im X+),
/// X = K for Config.1, J for Config.2.
struct ReducedState {
    double dSy = 0.0, dSz = 0.0;
    std::complex<double> I_plus{0.0, 0.0};
    std::complex<double> X_plus{0.0, 0.0};

    Vec6 pack() const;
    static ReducedState unpack(const Vec6& v);
};

/// Right-hand side of the three-spin model about the stationary state.
Vec6 reduced_rhs(int config, const Vec6& state, const ReducedCoefficients& coeff,
                 const CouplingRates& rates, const SemiclassicalState& steady,
                 const CellParams& cell, const PhysicalConstants& pc = {});

/// Polarization scaling functions f^(1/2), f^(3/2).
double scaling_f(int config, double M);

/// Effective light - nuclear-spin coupling rate
/// Omega = kappa (n/N) sqrt(n_ph N) f(M), kappa = chi or eta.
double effective_coupling(int config, double M, const CouplingRates& rates,
                          const CellParams& cell);

/// Numeric Schur elimination of the F=1/2 and tensor rows of the full
/// linearized A matrix, keeping all couplings. Returns the 6x6 generator over
/// (dSy, dSz, dIy, dIz, dJy, dJz).
Eigen::MatrixXd full_adiabatic_config2(double M, const CouplingRates& rates,
                                       const CellParams& cell,
                                       const PhysicalConstants& pc = {});

/// Generator matrix of reduced_rhs over the packed Vec6 components.
Eigen::Matrix<double, 6, 6> reduced_generator(int config, const ReducedCoefficients& coeff,
                                              const CouplingRates& rates,
                                              const SemiclassicalState& steady,
                                              const CellParams& cell,
                                              const PhysicalConstants& pc = {});

} // namespace he3
