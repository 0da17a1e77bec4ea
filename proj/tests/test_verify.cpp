#include <map>

#include "doctest.h"
#include "seqmat/verify.hpp"

using namespace seqmat;

namespace {

std::map<std::string, VerificationRecord> by_anchor(const std::vector<VerificationRecord>& recs) {
    std::map<std::string, VerificationRecord> m;
    for (const auto& r : recs) m[r.anchor] = r;
    return m;
}

}  // namespace

TEST_CASE("oracle_identity sums literally") {
    RecurrenceSpec trib = RecurrenceSpec::tribonacci();
    CHECK(oracle_identity(IdentityId::TribSquareSum, trib, 3) == 6);
    CHECK(oracle_identity(IdentityId::TribAdjProduct, trib, 3) == 11);
    CHECK(oracle_identity(IdentityId::PpDoubleSum,
                          RecurrenceSpec::pell_padovan(0, 0, 0), 10) == 0);
}

TEST_CASE("identity grid classifies the printed variants") {
    auto recs = by_anchor(run_identity_grid(IdentityGridConfig::preset_smoke()));

    CHECK(recs.at("GEN_SUM").passed());
    CHECK(recs.at("TRIB_SQUARE_SUM").passed());
    CHECK(recs.at("PP_SUM").passed());
    CHECK(recs.at("TRIB_SUM_CLOSED/corrected").passed());
    CHECK(recs.at("TRIB_ADJ_PRODUCT/corrected").passed());
    CHECK(recs.at("PP_SQUARE_SUM/corrected").passed());

    const VerificationRecord& sum_printed = recs.at("TRIB_SUM_CLOSED/as-printed");
    CHECK_FALSE(sum_printed.passed());
    REQUIRE(sum_printed.counterexample.has_value());
    CHECK(sum_printed.counterexample->n == 1);
    CHECK(sum_printed.counterexample->a == 0);
    CHECK(sum_printed.counterexample->b == 1);
    CHECK(sum_printed.counterexample->c == 0);
    CHECK(sum_printed.counterexample->closed == "1/2");
    CHECK(sum_printed.counterexample->oracle == "1");

    // smallest failing point for the double-sum typo in the smoke grid
    const VerificationRecord& dbl = recs.at("TRIB_DOUBLE_SUM/as-printed");
    REQUIRE(dbl.counterexample.has_value());
    CHECK(dbl.counterexample->n == 2);
    CHECK(dbl.counterexample->closed == "7/2");
    CHECK(dbl.counterexample->oracle == "3");

    const VerificationRecord& ppsq = recs.at("PP_SQUARE_SUM/as-printed");
    REQUIRE(ppsq.counterexample.has_value());
    CHECK(ppsq.counterexample->n == 1);
    CHECK(ppsq.counterexample->a == 0);
    CHECK(ppsq.counterexample->b == 0);
    CHECK(ppsq.counterexample->c == 1);
}

TEST_CASE("bound grid rolls verdicts up per theorem") {
    auto recs = by_anchor(run_bound_grid(BoundGridConfig::preset_smoke()));

    CHECK(recs.at("TRIB_RCIRC_BOUNDS").passed());
    CHECK(recs.at("PP_RCIRC_BOUNDS").passed());
    CHECK(recs.at("TRIB_CIRC").passed());
    CHECK(recs.at("TRIB_HANKEL_ONEINF").passed());
    CHECK(recs.at("TRIB_HANKEL_SPEC/repaired").passed());
    CHECK(recs.at("PP_HANKEL_SPEC/repaired").passed());

    const VerificationRecord& spec_printed = recs.at("TRIB_HANKEL_SPEC/as-printed");
    CHECK_FALSE(spec_printed.passed());
    REQUIRE(spec_printed.counterexample.has_value());
    CHECK(spec_printed.counterexample->n == 2);
    CHECK(spec_printed.counterexample->a == 0);

    // corrected lemma route never diverges from the direct sums
    for (const char* anchor : {"TRIB_RCIRC_BOUNDS", "PP_RCIRC_BOUNDS", "TRIB_CIRC", "PP_CIRC"})
        CHECK_FALSE(recs.at(anchor).lemma_route_divergence);

    // every record carries points
    for (const auto& [anchor, rec] : recs) CHECK(rec.points > 0);
}

TEST_CASE("ledger rollup and statuses") {
    auto idrecs = run_identity_grid(IdentityGridConfig::preset_smoke());
    auto bdrecs = run_bound_grid(BoundGridConfig::preset_smoke());
    ErrataLedger ledger = emit_ledger(idrecs, bdrecs);

    CHECK(ledger.entries.size() == registered_anchors().size());
    std::map<std::string, LedgerStatus> status;
    for (const auto& e : ledger.entries) status[e.anchor] = e.status;

    CHECK(status.at("GEN_SUM") == LedgerStatus::Confirmed);
    CHECK(status.at("TRIB_SUM_CLOSED/as-printed") == LedgerStatus::TypoCorrected);
    CHECK(status.at("TRIB_SUM_CLOSED/corrected") == LedgerStatus::Confirmed);
    CHECK(status.at("TRIB_HANKEL_SPEC/as-printed") == LedgerStatus::Invalid);
    CHECK(status.at("TRIB_HANKEL_SPEC/repaired") == LedgerStatus::Confirmed);
    CHECK(status.at("PP_HANKEL_ONEINF") == LedgerStatus::Confirmed);

    std::string md = ledger_to_markdown(ledger);
    CHECK(md.find("| formula | status |") != std::string::npos);
    CHECK(md.find("Notes:") != std::string::npos);

    std::string json = ledger_to_json(ledger);
    CHECK(json.find("TRIB_ADJ_PRODUCT/as-printed") != std::string::npos);
}

TEST_CASE("ledger demands full coverage") {
    auto idrecs = run_identity_grid(IdentityGridConfig::preset_smoke());
    auto bdrecs = run_bound_grid(BoundGridConfig::preset_smoke());
    auto incomplete = idrecs;
    incomplete.pop_back();
    CHECK_THROWS_AS(emit_ledger(incomplete, bdrecs), Error);

    // an empty grid yields zero-point records, which also count as missing
    IdentityGridConfig empty = IdentityGridConfig::preset_smoke();
    empty.n_max = 0;
    empty.general_n_max = 0;
    auto zero = run_identity_grid(empty);
    CHECK_THROWS_AS(emit_ledger(zero, bdrecs), Error);
}

TEST_CASE("verification runs are deterministic across modes and repeats") {
    auto id1 = run_identity_grid(IdentityGridConfig::preset_smoke(), ExecMode::Parallel);
    auto id2 = run_identity_grid(IdentityGridConfig::preset_smoke(), ExecMode::Parallel);
    auto id3 = run_identity_grid(IdentityGridConfig::preset_smoke(), ExecMode::Serial);
    auto bd1 = run_bound_grid(BoundGridConfig::preset_smoke(), ExecMode::Parallel);
    auto bd2 = run_bound_grid(BoundGridConfig::preset_smoke(), ExecMode::Serial);

    std::string a = ledger_to_json(emit_ledger(id1, bd1));
    std::string b = ledger_to_json(emit_ledger(id2, bd1));
    std::string c = ledger_to_json(emit_ledger(id3, bd2));
    CHECK(a == b);
    CHECK(a == c);
}

TEST_CASE("registered anchors are unique and complete") {
    auto anchors = registered_anchors();
    CHECK(anchors.size() == 33);
    std::map<std::string, int> seen;
    for (const auto& a : anchors) ++seen[a];
    for (const auto& [a, count] : seen) CHECK(count == 1);
}
