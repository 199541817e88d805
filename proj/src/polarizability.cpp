#include "he3/polarizability.hpp"

#include "he3/wigner.hpp"

#include <cmath>

namespace he3 {
namespace {

void check_poles(double detuning, const TransitionTable& table, double gamma) {
    for (const auto& line : table.entries)
        if (std::abs(detuning - line.offset) < gamma)
            throw NearResonanceError("detuning within Gamma of line C" +
                                     std::to_string(line.index));
}

struct LineWeights {
    double wv;   // (sigma_{F'}/sigma2) * alpha^V
    double wt;   // (sigma_{F'}/sigma2) * alpha^T / (F+1)
};

LineWeights line_weights(const TransitionLine& line) {
    const double sig = cross_section(line.F, line.J, line.Fp, line.Jp);
    const double fp1 = line.F.value() + 1.0;
    return {sig * alpha_vector(line.F, line.J, line.Fp, line.Jp),
            sig * alpha_tensor(line.F, line.J, line.Fp, line.Jp) / fp1};
}

CouplingConstants finish(double detuning, double chi_d, double eta_d, double mu_d,
                         const PhysicalConstants& pc, const CellParams& cell) {
    CouplingConstants out;
    out.detuning = detuning;
    out.chi_dimless = chi_d;
    out.eta_dimless = eta_d;
    out.mu_dimless = mu_d;
    const double pref = pc.sigma2() * pc.gamma_decay / (4.0 * cell.beam_area) / (two_pi * 1.0e9);
    out.chi_abs = pref * chi_d;
    out.eta_abs = pref * eta_d;
    out.mu_abs = pref * mu_d;
    return out;
}

} // namespace

double alpha_vector(HalfInt F, int J, HalfInt Fp, int Jp) {
    const double f = F.value();
    const double pref = 3.0 * (2.0 * Jp + 1.0) / (2.0 * (Fp.twice + 1.0) * (2.0 * J + 1.0));
    if (Fp.twice == F.twice - 2) return pref * (-(2.0 * f - 1.0) / f);
    if (Fp.twice == F.twice) return pref * (-(2.0 * f + 1.0) / (f * (f + 1.0)));
    if (Fp.twice == F.twice + 2) return pref * ((2.0 * f + 3.0) / (f + 1.0));
    throw std::domain_error("alpha_vector: need |F - F'| <= 1");
}

double alpha_tensor(HalfInt F, int J, HalfInt Fp, int Jp) {
    const double f = F.value();
    if (F.twice == 1) return 0.0;   // no rank-2 moment for spin 1/2
    const double pref = -3.0 * (f + 1.0) * (2.0 * Jp + 1.0) /
                        (2.0 * (Fp.twice + 1.0) * (2.0 * J + 1.0));
    if (Fp.twice == F.twice - 2) return pref * (1.0 / f);
    if (Fp.twice == F.twice) return pref * (-(2.0 * f + 1.0) / (f * (f + 1.0)));
    if (Fp.twice == F.twice + 2) return pref * (1.0 / (f + 1.0));
    throw std::domain_error("alpha_tensor: need |F - F'| <= 1");
}

double cross_section(HalfInt F, int J, HalfInt Fp, int Jp) {
    const double sixj = wigner6j(HalfInt::from_int(Jp), HalfInt::from_int(1), HalfInt::from_int(J),
                                 F, HalfInt::half(), Fp);
    return 2.0 * (2.0 * J + 1.0) * (Fp.twice + 1.0) / 3.0 * sixj * sixj;
}

CouplingConstants coupling_closed_form(double detuning, const PhysicalConstants& pc,
                                       const CellParams& cell, const TransitionTable& table) {
    check_poles(detuning, table, pc.gamma_decay);
    // detunings in 2pi GHz for the dimensionless sums
    auto d = [&](int i) { return rad_to_ghz(detuning - table.line(i).offset); };
    const double chi = 2.0 / (9.0 * d(1)) - 8.0 / (9.0 * d(2)) + 10.0 / (9.0 * d(4)) -
                       4.0 / (9.0 * d(8));
    const double eta = 3.0 / (5.0 * d(3)) - 2.0 / (9.0 * d(5)) - 1.0 / (9.0 * d(6)) -
                       2.0 / (45.0 * d(7)) - 2.0 / (9.0 * d(9));
    const double mu = 0.4 * (-1.0 / (4.0 * d(3)) + 5.0 / (9.0 * d(5)) - 5.0 / (36.0 * d(6)) +
                             1.0 / (9.0 * d(7)) - 5.0 / (18.0 * d(9)));
    return finish(detuning, chi, eta, mu, pc, cell);
}

CouplingConstants coupling_from_structure(double detuning, const PhysicalConstants& pc,
                                          const CellParams& cell, const TransitionTable& table) {
    check_poles(detuning, table, pc.gamma_decay);
    double chi = 0.0, eta = 0.0, mu = 0.0;
    for (const auto& line : table.entries) {
        const LineWeights w = line_weights(line);
        const double inv = 1.0 / rad_to_ghz(detuning - line.offset);
        if (line.F.twice == 1) {
            chi += w.wv * inv;
        } else {
            eta += w.wv * inv;
            mu += w.wt * inv;
        }
    }
    return finish(detuning, chi, eta, mu, pc, cell);
}

std::vector<CouplingConstants> spectrum_scan(double from_ghz, double to_ghz, double step_ghz,
                                             const PhysicalConstants& pc, const CellParams& cell) {
    if (!(step_ghz > 0.0)) throw std::invalid_argument("spectrum_scan: step must be > 0");
    std::vector<CouplingConstants> out;
    const auto table = default_transition_table();
    const long npts = std::lround((to_ghz - from_ghz) / step_ghz);
    for (long k = 0; k <= npts; ++k) {
        const double dp = ghz_to_rad(from_ghz + k * step_ghz);
        try {
            out.push_back(coupling_closed_form(dp, pc, cell, table));
        } catch (const NearResonanceError&) {
            // pole exclusion zone, skip the sample
        }
    }
    return out;
}

CouplingRates desk_rates(const CouplingConstants& cc, const CellParams& cell,
                         double coupling_scale) {
    const double f = coupling_scale / cell.tau;
    return {cc.chi_dimless * f, cc.eta_dimless * f, cc.mu_dimless * f};
}

} // namespace he3
