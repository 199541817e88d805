#pragma once

#include <stdexcept>
#include <vector>

#include "he3/constants.hpp"
#include "he3/dynamics.hpp"
#include "he3/halfint.hpp"

namespace he3 {

/// Probe detuning sits within Gamma of a transition pole.
struct NearResonanceError : std::domain_error {
    using std::domain_error::domain_error;
};

/// The three light-atom coupling strengths at one detuning. Dimensionless
/// values are in units of sigma2*Gamma/(4A) per 2pi GHz of detuning (the
/// spectrum-plot normalization); absolute values carry the sigma2*Gamma/(4A)
/// prefactor evaluated with SI beam area.
struct CouplingConstants {
    double detuning;        // Delta_p [rad/s]
    double chi_dimless, eta_dimless, mu_dimless;
    double chi_abs, eta_abs, mu_abs;    // [1/s]
};

/// Vector polarizability alpha^V_{F'} for the transition F,J -> F',J'.
double alpha_vector(HalfInt F, int J, HalfInt Fp, int Jp);
/// Tensor polarizability alpha^T_{F'}; vanishes identically for F = 1/2.
double alpha_tensor(HalfInt F, int J, HalfInt Fp, int Jp);

/// Resonant effective cross section in units of sigma2:
/// sigma_{F'}/sigma2 = 2(2J+1)(2F'+1)/3 * {J' 1 J; F I F'}^2 with I = 1/2.
double cross_section(HalfInt F, int J, HalfInt Fp, int Jp);

/// chi, eta, mu from the closed-form single-pole sums.
CouplingConstants coupling_closed_form(double detuning, const PhysicalConstants& pc,
                                       const CellParams& cell,
                                       const TransitionTable& table = default_transition_table());

/// Same constants assembled from the generic cross-section/polarizability
/// pipeline, summing sigma_{F'} alpha^{V,T} Gamma/Delta_{F'} over lines.
CouplingConstants coupling_from_structure(double detuning, const PhysicalConstants& pc,
                                          const CellParams& cell,
                                          const TransitionTable& table = default_transition_table());

/// Detuning scan in GHz (Fig.-2-style table); points within Gamma of a pole
/// are skipped.
std::vector<CouplingConstants> spectrum_scan(double from_ghz, double to_ghz, double step_ghz,
                                             const PhysicalConstants& pc, const CellParams& cell);

/// Desk-scale mapping used by the simulation entry points: the dimensionless
/// spectral values at the chosen detuning, scaled by coupling_scale/tau.
CouplingRates desk_rates(const CouplingConstants& cc, const CellParams& cell,
                         double coupling_scale = 1.0);

inline double ghz_to_rad(double ghz) { return two_pi * 1.0e9 * ghz; }
inline double rad_to_ghz(double rad) { return rad / (two_pi * 1.0e9); }

} // namespace he3
