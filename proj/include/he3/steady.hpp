#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "he3/constants.hpp"
#include "he3/dynamics.hpp"
#include "he3/state.hpp"

namespace he3 {

/// Spin-temperature stationary solution for nuclear polarization M along x,
/// with the light fully x-polarized (S0 = Sx = n_ph/2).
SemiclassicalState stationary_state(double M, const CellParams& cell);

/// Linearization around the stationary state in the block-diagonal ordering.
/// a-sector: fluctuations in the yz-plane; b-sector: along the polarization.
struct LinearizedSystem {
    Eigen::Matrix<double, 14, 14> A;
    Eigen::Matrix<double, 11, 11> B;

    static const std::array<int, 14>& ordering_a();  // var:: indices
    static const std::array<int, 11>& ordering_b();
};

/// Entry-by-entry analytic A and B.
LinearizedSystem analytic_linearization(double M, const CouplingRates& c,
                                        const CellParams& cell,
                                        const PhysicalConstants& pc = {});

/// Central-difference Jacobian of the full rhs about the stationary state,
/// permuted into the (a, b) ordering. cross_norm measures the a<->b blocks,
/// which must vanish.
struct NumericJacobian {
    LinearizedSystem sys;
    Eigen::Matrix<double, kStateDim, kStateDim> full;
    double cross_norm;
};
NumericJacobian numeric_jacobian(double M, const CouplingRates& c, const CellParams& cell,
                                 double h_rel = 1e-6, const PhysicalConstants& pc = {});

/// Schur complement slow' = A_ss - A_sf A_ff^-1 A_fs over the complement of
/// fast_indices (original relative order). Empty fast set returns gen.
/// Throws on a singular fast block, reporting its condition number.
Eigen::MatrixXd adiabatic_eliminate(const Eigen::MatrixXd& gen,
                                    const std::vector<int>& fast_indices);

} // namespace he3
