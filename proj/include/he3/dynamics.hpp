#pragma once

#include <Eigen/Dense>

#include "he3/constants.hpp"
#include "he3/state.hpp"

namespace he3 {

/// Light-atom coupling rates actually entering the equations of motion.
/// The spectral module produces these in absolute units or desk-scale units.
struct CouplingRates {
    double chi = 0.0;
    double eta = 0.0;
    double mu = 0.0;
};

struct DerivativeBreakdown {
    StateVec light = StateVec::Zero();
    StateVec magnetic = StateVec::Zero();
    StateVec mec = StateVec::Zero();
    StateVec total() const { return light + magnetic + mec; }
};

/// Faraday + tensor light interaction; conserves S0, |S|^2, Kz, |K|^2 and
/// leaves the nuclear spin untouched.
StateVec light_rhs(const StateVec& s, const CouplingRates& c);

/// Precession of all spins and tensors in a static field B [G].
StateVec magnetic_rhs(const StateVec& s, const Eigen::Vector3d& B,
                      const PhysicalConstants& pc = {});

/// Metastability-exchange collisions; conserves I + K + J.
StateVec mec_rhs(const StateVec& s, const CellParams& cell);

/// Sum of the three contributions with B = B_x x_hat from the cell.
DerivativeBreakdown full_rhs(const StateVec& s, const CouplingRates& c,
                             const CellParams& cell, const PhysicalConstants& pc = {});

} // namespace he3
