#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "gssp/int_matrix.hpp"

namespace gssp {

/// Exact monic characteristic polynomial, ascending coefficients
/// (c_0, c_1, ..., c_{n-1}, 1), computed by Faddeev-LeVerrier over Z.
std::vector<BigInt> char_poly(const IntMatrix& X);

/// d-th cyclotomic polynomial over Z, ascending coefficients.
std::vector<BigInt> cyclotomic_polynomial(unsigned d);

/// All complex roots of a real polynomial (ascending coefficients) by the
/// Aberth-Ehrlich iteration. achieved_tol receives the final max correction.
std::vector<std::complex<double>> poly_roots_aberth(const std::vector<double>& coeffs,
                                                    double tol, double* achieved_tol = nullptr);

/// Spectral radius alpha with the achieved absolute tolerance. The root-finder
/// result is cross-checked against the exact growth rate of ||X^k e_j||.
std::pair<double, double> spectral_radius(const IntMatrix& X, double tol = 1e-9);

/// True iff every eigenvalue has absolute value 1, decided exactly via
/// Kronecker's criterion: the characteristic polynomial is a product of
/// cyclotomic polynomials. Requires |det X| = 1.
bool is_quasi_unipotent(const IntMatrix& X);

struct SpectralReport {
    std::vector<BigInt> char_poly;
    double alpha = 0.0;
    double alpha_tol = 0.0;
    bool quasi_unipotent = false;
};

SpectralReport spectral_report(const IntMatrix& X, double tol = 1e-9);

/// Per-matrix spectral data computed once: the report plus the constant C_X
/// sizing the norm bound p(k). C_X comes from a conditioning estimate of the
/// numerical eigenbasis, with an exact-norm fallback when the eigenbasis is
/// (near) defective. Float error in C_X never decides instance validity.
struct SpectralAnalysis {
    std::size_t dim = 0;
    SpectralReport report;
    double c_x = 1.0;
};

SpectralAnalysis analyze_spectrum(const IntMatrix& X, double tol = 1e-9);

/// p(k) = C_X * (1 + C(k,1)/alpha + ... + C(k,n)/alpha^n), so that
/// ||X^k e_j|| <= p(k) * alpha^k for all j.
double norm_bound_p(const SpectralAnalysis& a, std::uint64_t k);
double norm_bound_p(const IntMatrix& X, std::uint64_t k);

}  // namespace gssp
