#pragma once

namespace qorw {

// All numerical tolerances in one place.
struct Tolerances {
    double hermiticity      = 1e-12;  // max entry deviation of ρ − ρ†
    double trace_one        = 1e-12;  // |Tr ρ − 1|
    double psd_floor        = -1e-10; // smallest admissible eigenvalue of ρ
    double cptp             = 1e-12;  // ‖Σ K†K − 1‖_max
    double unitarity        = 1e-12;  // ‖U†U − 1‖_max
    double kernel_diag      = 1e-12;  // |A(φ,φ) − 1|
    double acf_imag         = 1e-9;   // imaginary residue allowed in h(φ)
    double dual_engine      = 1e-10;  // spectral vs lattice-oracle site deviation
    double moment_agreement = 1e-9;   // Σ m^s P_m vs spectral-derivative form
    double exp_unitary      = 1e-10;  // unitarity of exp(anti-Hermitian)
    double degenerate_pdf   = 1e-12;  // h-range below which the pdf is a delta
};

inline const Tolerances& tol() {
    static const Tolerances t{};
    return t;
}

}  // namespace qorw
