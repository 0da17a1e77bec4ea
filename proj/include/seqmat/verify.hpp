#ifndef SEQMAT_VERIFY_HPP
#define SEQMAT_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "seqmat/theorems.hpp"

namespace seqmat {

/// Brute-force oracle: literal term-by-term summation, no closed forms.
Rat oracle_identity(IdentityId id, const RecurrenceSpec& spec, long n);

struct IdentityGridConfig {
    long seed_min = 0;
    long seed_max = 3;
    long n_min = 1;
    long n_max = 64;
    long general_n_max = 40;
    std::vector<RecurrenceSpec> general_sample;  // specs for GEN_SUM

    static IdentityGridConfig preset_default();
    static IdentityGridConfig preset_smoke();
};

struct SeedTuple {
    long a, b, c;
};

struct BoundGridConfig {
    std::vector<SeedTuple> seeds;
    std::vector<long> orders;
    std::vector<Rat> scalars;
    double tol = 1e-12;
    long max_iters = 100000;

    static BoundGridConfig preset_default();
    static BoundGridConfig preset_smoke();
};

struct Counterexample {
    std::string family;   // "generalized-tribonacci", "pell-padovan", "general"
    long a = 0, b = 0, c = 0;
    std::optional<std::array<long, 3>> pqr;  // general family only
    long n = 0;
    std::optional<Rat> scalar_r;
    std::string closed;  // closed-form value or "[lower, upper]" bracket
    std::string oracle;  // oracle value or observed norm
};

/// Grid rollup for one formula variant. Failures are data, not errors; the
/// retained counterexample is the smallest failing point (identity grids
/// order by (n, a, b, c); bound grids by (seed index, n, r index)).
struct VerificationRecord {
    std::string anchor;  // e.g. "TRIB_ADJ_PRODUCT/as-printed", "PP_SUM"
    long points = 0;
    long failures = 0;
    long out_of_hypothesis = 0;
    long nonconverged = 0;
    bool lemma_route_divergence = false;
    std::optional<Counterexample> counterexample;

    bool passed() const { return failures == 0 && nonconverged == 0; }
};

std::vector<VerificationRecord> run_identity_grid(const IdentityGridConfig& cfg,
                                                  ExecMode mode = ExecMode::Parallel);

/// Every theorem on every grid point; non-converged spectral runs are
/// retried once with 10x iterations and then recorded as-is.
std::vector<VerificationRecord> run_bound_grid(const BoundGridConfig& cfg,
                                               ExecMode mode = ExecMode::Parallel);

enum class LedgerStatus { Confirmed, TypoCorrected, Invalid };

std::string_view ledger_status_string(LedgerStatus s);

struct LedgerEntry {
    std::string anchor;
    LedgerStatus status;
    std::optional<Counterexample> counterexample;
    std::string corrected_ref;  // empty when not applicable
};

struct ErrataLedger {
    std::vector<LedgerEntry> entries;
};

/// Per-formula rollup over both grids. A failing as-printed row whose
/// registered correction passes everywhere becomes TypoCorrected; a false
/// claim whose replacement is a different bound (the Hankel spectral upper)
/// becomes Invalid. Throws IncompleteCoverage when a registered formula has
/// no record.
ErrataLedger emit_ledger(const std::vector<VerificationRecord>& identity_records,
                         const std::vector<VerificationRecord>& bound_records);

std::string ledger_to_json(const ErrataLedger& ledger);

/// Markdown table plus the fixed display-defect notes.
std::string ledger_to_markdown(const ErrataLedger& ledger);

/// Anchors of every registered formula, in ledger order.
std::vector<std::string> registered_anchors();

}  // namespace seqmat

#endif
