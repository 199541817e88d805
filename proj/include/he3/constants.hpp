#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "he3/halfint.hpp"

namespace he3 {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// Fixed physical constants of the 2^3S - 2^3P system (SI, angular frequencies).
struct PhysicalConstants {
    double gamma_decay = 1.0e7;                  // excited-state decay rate [1/s]
    double lambda = 1083.0e-9;                   // transition wavelength [m]
    double gamma_ms = -two_pi * 2.802e6;         // metastable gyromagnetic ratio [rad/(s G)]
    double gamma_nuc = -two_pi * 3.243e3;        // nuclear gyromagnetic ratio [rad/(s G)]

    double sigma2() const { return 3.0 * lambda * lambda / two_pi; }   // [m^2]
    double gamma_half() const { return 4.0 / 3.0 * gamma_ms; }         // F=1/2
    double gamma_threehalf() const { return 2.0 / 3.0 * gamma_ms; }    // F=3/2
};

/// One 2^3S(F) -> 2^3P(F') line, offset relative to C8.
struct TransitionLine {
    int index;          // 1..9
    double offset;      // omega_FF' - omega_C8 [rad/s]
    HalfInt F, Fp;      // lower / upper total angular momentum
    int J, Jp;          // lower / upper electronic angular momentum
};

/// The nine hyperfine lines C1..C9 with C8 as frequency origin.
struct TransitionTable {
    std::array<TransitionLine, 9> entries;
    double c8_reference;   // omega_C8 [rad/s]

    const TransitionLine& line(int index) const { return entries.at(index - 1); }
};

TransitionTable default_transition_table();

/// Cell and beam parameters. T/tau = N_cell/n_cell is enforced by construction:
/// only (N_cell, n_cell, tau) are free, T is derived.
struct CellParams {
    double N_cell;      // ground-state atom count
    double n_cell;      // metastable atom count
    double n_ph;        // photon number
    double tau;         // metastable MEC time [s]
    double T;           // ground MEC time [s], = tau * N_cell / n_cell
    double beam_area;   // [m^2]
    double B_x;         // static field [G]
    double M;           // nuclear polarization in [-1, 1]

    static CellParams make(double N_cell, double n_cell, double tau,
                           double n_ph, double beam_area, double B_x, double M);

    /// Desk-scale defaults: N=1, n_ph/N = 1e-3, T/tau = 1e6, tau = 1 (time unit),
    /// B_x such that |gamma_3/2| B_x tau = 1e-2.
    static CellParams desk_default(double meta_ratio = 1.0e6);

    double gamma_f() const { return 1.0 / T; }
    double gamma_m() const { return 1.0 / tau; }
};

enum class Species { nuclear, half, threehalf };

/// |gamma_species * B_x| [rad/s]
double larmor_frequency(const CellParams& params, Species which,
                        const PhysicalConstants& pc = {});

} // namespace he3
