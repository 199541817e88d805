#pragma once

#include <array>

#include <Eigen/Dense>

namespace he3 {

inline constexpr int kStateDim = 25;
using StateVec = Eigen::Matrix<double, kStateDim, 1>;

/// Flat-state component indices. This ordering is frozen: integrators,
/// Jacobians and CSV columns all rely on it.
namespace var {
enum : int {
    S0 = 0, Sx, Sy, Sz,              // Stokes
    Ix, Iy, Iz,                      // collective nuclear spin
    Kx, Ky, Kz,                      // metastable F=1/2 spin
    Jx, Jy, Jz,                      // metastable F=3/2 spin
    T20, RT21, IT21, RT22, IT22,     // rank-2 collective tensors
    T30, RT31, IT31, RT32, IT32, RT33, IT33   // rank-3
};
}

inline const std::array<const char*, kStateDim>& state_names() {
    static const std::array<const char*, kStateDim> names = {
        "S0", "Sx", "Sy", "Sz", "Ix", "Iy", "Iz", "Kx", "Ky", "Kz",
        "Jx", "Jy", "Jz", "T20", "RT21", "IT21", "RT22", "IT22",
        "T30", "RT31", "IT31", "RT32", "IT32", "RT33", "IT33"};
    return names;
}

/// The 25 semiclassical expectation values as a flat vector with named access.
struct SemiclassicalState {
    StateVec v = StateVec::Zero();

    SemiclassicalState() = default;
    explicit SemiclassicalState(const StateVec& vec) : v(vec) {}

    double& operator[](int i) { return v[i]; }
    double operator[](int i) const { return v[i]; }

    double S0() const { return v[var::S0]; }
    double Sx() const { return v[var::Sx]; }
    double Sy() const { return v[var::Sy]; }
    double Sz() const { return v[var::Sz]; }
    Eigen::Vector3d I() const { return v.segment<3>(var::Ix); }
    Eigen::Vector3d K() const { return v.segment<3>(var::Kx); }
    Eigen::Vector3d J() const { return v.segment<3>(var::Jx); }
    Eigen::Vector3d S() const { return v.segment<3>(var::Sx); }
};

} // namespace he3
