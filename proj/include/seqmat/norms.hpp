#ifndef SEQMAT_NORMS_HPP
#define SEQMAT_NORMS_HPP

#include <utility>

#include "seqmat/kernels.hpp"
#include "seqmat/structmat.hpp"

namespace seqmat {

struct SpectralResult {
    double estimate = 0.0;        // sqrt of the final Rayleigh quotient of A^T A
    double lower_witness = 0.0;   // ||A v|| / ||v|| for the final iterate v
    long iterations = 0;
    bool converged = true;
};

struct NormSummary {
    Rat frobenius_sq;
    double frobenius = 0.0;
    double spectral_estimate = 0.0;
    double spectral_lower_witness = 0.0;
    Rat max_abs;
    Rat op_one;
    Rat op_inf;
    double r1 = 0.0;
    double c1 = 0.0;
};

/// Sum of squared entries, exact.
Rat frobenius_sq(const StructuredMatrix& a);

/// (sum |a_ij|^p)^(1/p); evaluated in max_abs-scaled doubles.
double entrywise_lp(const StructuredMatrix& a, int p);

Rat max_abs(const StructuredMatrix& a);

/// Largest singular value via power iteration on the Gram product of the
/// max_abs-prescaled matrix. Deterministic all-ones start (first basis
/// vector fallback when the all-ones image vanishes); converged when
/// successive Rayleigh quotients differ by less than tol relatively.
/// A zero matrix yields (0, 0, 0). Non-convergence is flagged, never thrown.
SpectralResult spectral(const StructuredMatrix& a, double tol = 1e-12, long max_iters = 100000,
                        ExecMode mode = ExecMode::Parallel);

/// Exact maximum row/column squared Euclidean lengths.
std::pair<Rat, Rat> row_col_length_sq(const StructuredMatrix& a);

/// (r1, c1): max row length, max column length; squared maxima are exact,
/// one final square root in double.
std::pair<double, double> row_col_length(const StructuredMatrix& a);

/// Operator 1-norm (max absolute column sum) and inf-norm (max absolute
/// row sum), exact.
std::pair<Rat, Rat> op_one_inf(const StructuredMatrix& a);

struct HadamardBound {
    double lhs = 0.0;   // spectral lower witness of A∘B — a true lower bound
    double rhs = 0.0;   // r1(A) * c1(B)
    bool holds = false; // lhs <= rhs * (1 + 1e-9)
};

HadamardBound hadamard_bound_check(const StructuredMatrix& a, const StructuredMatrix& b,
                                   ExecMode mode = ExecMode::Parallel);

NormSummary norm_summary(const StructuredMatrix& a, ExecMode mode = ExecMode::Parallel);

/// NormSummary JSON: exact fields as "p/q" strings, floats as doubles.
std::string norm_summary_to_json(const NormSummary& s);

/// Rational -> double that routes through a max_abs-style scale factor, for
/// values whose direct conversion could leave the double range.
double scaled_sqrt_to_double(const Rat& value_sq);

}  // namespace seqmat

#endif
