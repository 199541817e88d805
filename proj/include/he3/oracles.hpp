#pragma once

#include <complex>
#include <random>

#include <Eigen/Dense>

#include "he3/constants.hpp"
#include "he3/dynamics.hpp"
#include "he3/state.hpp"

namespace he3 {

using Matrix2cd = Eigen::Matrix2cd;
using Matrix4cd = Eigen::Matrix4cd;
using Matrix6cd = Eigen::Matrix<std::complex<double>, 6, 6>;

/// One-body density matrix, block-diagonal: 6x6 metastable (coupled basis
/// |1..6>, F=3/2 in rows 0..3 and F=1/2 in rows 4..5) + 2x2 ground.
/// No metastable-ground or F=3/2 - F=1/2 coherences.
struct BlockDensityMatrix {
    Matrix6cd rho_m = Matrix6cd::Zero();
    Matrix2cd rho_f = Matrix2cd::Zero();

    /// Validates hermiticity, unit traces, positivity and block structure.
    static BlockDensityMatrix checked(const Matrix6cd& rho_m, const Matrix2cd& rho_f);
};

/// Unnormalized derivative of the blocks under metastability exchange,
/// d rho_f = (-rho_f + Tr_e rho_m)/T, d rho_m = (-rho_m + rho_f x Tr_n rho_m)/tau,
/// projected back onto the block structure.
struct BlockDerivative {
    Matrix6cd drho_m;
    Matrix2cd drho_f;
};
BlockDerivative mec_rho_rhs(const BlockDensityMatrix& rho, const CellParams& cell);

/// Partial traces of the metastable block in the decoupled electronic x nuclear
/// basis: Tr_n -> 3x3 electronic, Tr_e -> 2x2 nuclear.
Eigen::Matrix3cd partial_trace_nuclear(const Matrix6cd& rho_m);
Matrix2cd partial_trace_electronic(const Matrix6cd& rho_m);

/// All 22 atomic expectation values with collective scaling <I> = N <i>,
/// <K> = n <k>, <J> = n <j>, <T^l_m> = n <t^l_m>. Stokes entries left zero.
SemiclassicalState expectations_from_rho(const BlockDensityMatrix& rho,
                                         const CellParams& cell);

/// Gaussian G G+ per block, normalized; positive with full support.
BlockDensityMatrix random_block_rho(std::mt19937& rng);

/// MEC-stationary spin-temperature state for polarization M along z of the
/// chosen quantization axis (use axis='x' to match the stationary solution).
BlockDensityMatrix spin_temperature_rho(double M, char axis = 'x');

/// d<O>/dt from i<[H, O]> with single-atom matrices per manifold and Stokes
/// components treated as numbers (light part), plus su(2) structure constants
/// for the Stokes sector; magnetic part included via H_B. Semiclassical
/// factorization throughout. Covers all 25 components.
StateVec hamiltonian_rhs_oracle(const StateVec& s, const CouplingRates& c,
                                const Eigen::Vector3d& B,
                                const PhysicalConstants& pc = {});

} // namespace he3
