#ifndef SEQMAT_THEOREMS_HPP
#define SEQMAT_THEOREMS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "seqmat/norms.hpp"
#include "seqmat/recurrence.hpp"
#include "seqmat/structmat.hpp"

namespace seqmat {

enum class TheoremId {
    TribRcircBounds,
    TribCirc,
    TribSemicirc,
    TribHankelFrob,
    TribHankelSpec,
    TribHankelOneInf,
    PpRcircBounds,
    PpCirc,
    PpSemicirc,
    PpHankelFrob,
    PpHankelSpec,
    PpHankelOneInf,
};

std::string_view theorem_id_string(TheoremId id);
TheoremId theorem_id_from_string(std::string_view s);

enum class Verdict { Holds, Violated, ExactMatch, ExactMismatch, NonConverged, OutOfHypothesis };

std::string_view verdict_string(Verdict v);

/// One theorem instance. Equality theorems carry the exact claim in
/// closed_form and the exact measurement in observed_exact; bound theorems
/// carry lower/upper and the spectral estimate in observed. The circulant
/// theorem states both an equality and a spectral bracket, so the bracket
/// lands in the bracket_* fields next to the primary equality verdict.
/// Verdict slack for brackets is 1e-9 * max(1, upper).
struct BoundCheck {
    TheoremId theorem_id{};
    Family family{};
    RecurrenceSpec spec;
    long n = 0;
    std::optional<Rat> scalar_r;
    std::optional<Variant> variant;

    std::optional<double> lower;
    std::optional<double> upper;
    std::optional<Rat> closed_form;
    std::optional<Rat> observed_exact;
    std::optional<Rat> observed_exact_inf;  // hankel row-sum norm
    std::optional<double> observed;

    Verdict verdict = Verdict::Holds;
    double margin = 0.0;

    std::optional<double> bracket_lower;
    std::optional<double> bracket_upper;
    std::optional<Verdict> bracket_verdict;

    // Exact agreement between the direct sums and the lemma-substituted
    // display of the same quantity, per constant variant where one exists.
    std::optional<bool> lemma_agree_printed;
    std::optional<bool> lemma_agree_corrected;

    bool spectral_converged = true;
    long spectral_iterations = 0;

    bool failed() const {
        if (verdict == Verdict::Violated || verdict == Verdict::ExactMismatch ||
            verdict == Verdict::NonConverged)
            return true;
        return bracket_verdict &&
               (*bracket_verdict == Verdict::Violated || *bracket_verdict == Verdict::NonConverged);
    }
};

struct SpectralOptions {
    double tol = 1e-12;
    long max_iters = 100000;
    ExecMode mode = ExecMode::Parallel;
};

/// r-circulant on terms u(0..n-1). |r| >= 1: lower = sqrt(sum u_k^2),
/// upper = sqrt((u0^2 + r^2 * tail)(1 + tail)); |r| < 1: lower scales by |r|
/// and the upper is sqrt(n * sum u_k^2). |r| = 1 follows the first branch.
BoundCheck rcirc_bounds(const RecurrenceSpec& spec, long n, const Rat& scalar_r,
                        const SpectralOptions& opt = {});

/// Euclidean-norm equality ||A||_E^2 = n * sum u_k^2 (exact) plus the
/// spectral bracket [sqrt(sum), sqrt(sum * (1 + tail))].
BoundCheck circulant_report(const RecurrenceSpec& spec, long n, const SpectralOptions& opt = {});

/// ||A||_E^2 of the semi-circulant equals the double-sum closed form.
BoundCheck semicirculant_frobenius(const RecurrenceSpec& spec, long n,
                                   Variant v = Variant::Corrected);

/// ||A||_E^2 of the Hankel matrix equals M(2n-1) - 2M(n-1) (tribonacci,
/// M(0) = 0) or the S-constant expression (Pell-Padovan).
BoundCheck hankel_frobenius(const RecurrenceSpec& spec, long n, Variant v = Variant::Corrected);

/// Hankel spectral bracket. Lower is always frobenius/sqrt(n). The printed
/// upper is sqrt((sum_{1..n} u^2)(1 + sum_{2..n} u^2)); the repaired upper
/// (requested via Variant::Corrected) is r1(M)*c1(N) computed from the
/// actual proof-split factors and is always valid.
BoundCheck hankel_spectral_bounds(const RecurrenceSpec& spec, long n, Variant v,
                                  const SpectralOptions& opt = {});

/// Operator 1- and inf-norms of the Hankel matrix against the telescoped
/// closed form; needs nonnegative entries, otherwise the verdict is
/// withheld as OutOfHypothesis.
BoundCheck hankel_one_inf(const RecurrenceSpec& spec, long n);

// Window-based overloads for grid runners; the window must cover
// [-5, 2n+4] for the spec being evaluated.
BoundCheck rcirc_bounds(const SequenceWindow& w, long n, const Rat& scalar_r,
                        const SpectralOptions& opt);
BoundCheck circulant_report(const SequenceWindow& w, long n, const SpectralOptions& opt);
BoundCheck semicirculant_frobenius(const SequenceWindow& w, long n, Variant v);
BoundCheck hankel_frobenius(const SequenceWindow& w, long n, Variant v);
BoundCheck hankel_spectral_bounds(const SequenceWindow& w, long n, Variant v,
                                  const SpectralOptions& opt);
BoundCheck hankel_one_inf(const SequenceWindow& w, long n);

// Proof-split factor pairs; the Hadamard product of each pair reproduces
// the theorem's matrix entrywise.
std::pair<StructuredMatrix, StructuredMatrix> rcirc_split_large(std::span<const Rat> row,
                                                                const Rat& scalar_r);
std::pair<StructuredMatrix, StructuredMatrix> rcirc_split_small(std::span<const Rat> row,
                                                                const Rat& scalar_r);
std::pair<StructuredMatrix, StructuredMatrix> circulant_split(std::span<const Rat> row);
std::pair<StructuredMatrix, StructuredMatrix> hankel_split(std::span<const Rat> seq, long n);

std::string bound_check_to_json(const BoundCheck& bc);

}  // namespace seqmat

#endif
