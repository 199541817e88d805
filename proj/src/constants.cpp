#include "he3/constants.hpp"

namespace he3 {

TransitionTable default_transition_table() {
    const double ghz = two_pi * 1.0e9;
    const HalfInt h1{1}, h3{3}, h5{5};
    TransitionTable t;
    t.c8_reference = two_pi * 276726257.0e6;
    t.entries = {{
        {1, -32.6045 * ghz, h1, h3, 1, 1},
        {2, -28.0929 * ghz, h1, h1, 1, 1},
        {3, -27.6453 * ghz, h3, h5, 1, 2},
        {4, -27.4238 * ghz, h1, h3, 1, 2},
        {5, -25.8648 * ghz, h3, h3, 1, 1},
        {6, -21.3532 * ghz, h3, h1, 1, 1},
        {7, -20.6841 * ghz, h3, h3, 1, 2},
        {8, 0.0, h1, h1, 1, 0},
        {9, +6.7397 * ghz, h3, h1, 1, 0},
    }};
    return t;
}

CellParams CellParams::make(double N_cell, double n_cell, double tau,
                            double n_ph, double beam_area, double B_x, double M) {
    if (!(n_cell > 0.0)) throw std::invalid_argument("CellParams: n_cell must be > 0");
    if (!(N_cell >= n_cell)) throw std::invalid_argument("CellParams: need N_cell >= n_cell");
    if (!(tau > 0.0)) throw std::invalid_argument("CellParams: tau must be > 0");
    if (!(std::abs(M) <= 1.0)) throw std::invalid_argument("CellParams: need |M| <= 1");
    CellParams p;
    p.N_cell = N_cell;
    p.n_cell = n_cell;
    p.tau = tau;
    p.T = tau * N_cell / n_cell;
    p.n_ph = n_ph;
    p.beam_area = beam_area;
    p.B_x = B_x;
    p.M = M;
    return p;
}

CellParams CellParams::desk_default(double meta_ratio) {
    const PhysicalConstants pc;
    const double tau = 1.0;
    const double bx = 1.0e-2 / (std::abs(pc.gamma_threehalf()) * tau);
    return make(1.0, 1.0 / meta_ratio, tau, 1.0e-3, 1.0e-6, bx, 0.0);
}

double larmor_frequency(const CellParams& params, Species which, const PhysicalConstants& pc) {
    double g = 0.0;
    switch (which) {
        case Species::nuclear: g = pc.gamma_nuc; break;
        case Species::half: g = pc.gamma_half(); break;
        case Species::threehalf: g = pc.gamma_threehalf(); break;
    }
    return std::abs(g * params.B_x);
}

} // namespace he3
