#include <cmath>

#include "doctest.h"
#include "seqmat/theorems.hpp"

using namespace seqmat;

namespace {

const RecurrenceSpec kTrib = RecurrenceSpec::tribonacci();
const RecurrenceSpec kPp111 = RecurrenceSpec::pell_padovan(1, 1, 1);

std::vector<Rat> terms_of(const RecurrenceSpec& spec, long from, long to) {
    SequenceWindow w = window(spec, from, to);
    std::vector<Rat> out;
    for (long k = from; k <= to; ++k) out.emplace_back(w.at(k));
    return out;
}

}  // namespace

TEST_CASE("r-circulant bounds") {
    BoundCheck big = rcirc_bounds(kTrib, 2, rat(2));
    CHECK(*big.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(*big.upper == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
    CHECK(*big.observed == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(big.verdict == Verdict::Holds);
    CHECK(*big.lemma_agree_printed);
    CHECK(*big.lemma_agree_corrected);

    BoundCheck small = rcirc_bounds(kTrib, 2, rat(1, 2));
    CHECK(*small.lower == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(*small.upper == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(small.verdict == Verdict::Holds);

    BoundCheck pp = rcirc_bounds(kPp111, 3, rat(1));
    CHECK(*pp.lower == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(*pp.upper == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(*pp.observed == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(pp.verdict == Verdict::Holds);

    CHECK_THROWS_AS(rcirc_bounds(RecurrenceSpec::general(2, 1, 1, 0, 1, 1), 2, rat(1)), Error);
}

TEST_CASE("pell-padovan lemma route diverges only for the printed constant") {
    RecurrenceSpec pp = RecurrenceSpec::pell_padovan(1, 2, 3);
    BoundCheck bc = rcirc_bounds(pp, 4, rat(2));
    CHECK(bc.verdict == Verdict::Holds);
    CHECK_FALSE(*bc.lemma_agree_printed);
    CHECK(*bc.lemma_agree_corrected);
}

TEST_CASE("circulant euclidean equality and spectral bracket") {
    BoundCheck pp = circulant_report(kPp111, 3);
    CHECK(*pp.closed_form == 9);
    CHECK(*pp.observed_exact == 9);
    CHECK(pp.verdict == Verdict::ExactMatch);
    CHECK(*pp.bracket_lower == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK(*pp.bracket_upper == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(*pp.bracket_verdict == Verdict::Holds);

    BoundCheck trib = circulant_report(kTrib, 3);
    CHECK(*trib.closed_form == 6);
    CHECK(trib.verdict == Verdict::ExactMatch);

    BoundCheck zero = circulant_report(RecurrenceSpec::generalized_tribonacci(0, 0, 0), 4);
    CHECK(*zero.closed_form == 0);
    CHECK(zero.verdict == Verdict::ExactMatch);
    CHECK(*zero.bracket_verdict == Verdict::Holds);
}

TEST_CASE("semi-circulant frobenius equality per variant") {
    BoundCheck corrected = semicirculant_frobenius(kTrib, 2, Variant::Corrected);
    CHECK(*corrected.observed_exact == 3);
    CHECK(*corrected.closed_form == 3);
    CHECK(corrected.verdict == Verdict::ExactMatch);

    BoundCheck printed = semicirculant_frobenius(kTrib, 2, Variant::AsPrinted);
    CHECK(*printed.closed_form == rat(7, 2));
    CHECK(printed.verdict == Verdict::ExactMismatch);

    BoundCheck pp = semicirculant_frobenius(kPp111, 2, Variant::Corrected);
    CHECK(*pp.observed_exact == 3);
    CHECK(pp.verdict == Verdict::ExactMatch);

    BoundCheck zero = semicirculant_frobenius(RecurrenceSpec::generalized_tribonacci(0, 0, 0), 5,
                                              Variant::Corrected);
    CHECK(*zero.observed_exact == 0);
    CHECK(zero.verdict == Verdict::ExactMatch);
}

TEST_CASE("hankel frobenius equality") {
    BoundCheck trib = hankel_frobenius(kTrib, 2, Variant::Corrected);
    CHECK(*trib.observed_exact == 7);
    CHECK(*trib.closed_form == 7);
    CHECK(trib.verdict == Verdict::ExactMatch);

    BoundCheck pp = hankel_frobenius(kPp111, 2, Variant::Corrected);
    CHECK(*pp.observed_exact == 7);
    CHECK(pp.verdict == Verdict::ExactMatch);

    BoundCheck n1 = hankel_frobenius(kTrib, 1, Variant::Corrected);
    CHECK(*n1.observed_exact == 1);
    CHECK(n1.verdict == Verdict::ExactMatch);  // M(0) enters as 0
}

TEST_CASE("hankel spectral bounds: printed upper fails, repaired holds") {
    BoundCheck printed = hankel_spectral_bounds(kTrib, 2, Variant::AsPrinted);
    CHECK(*printed.upper == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(*printed.observed == doctest::Approx(2.6180339887).epsilon(1e-9));
    CHECK(printed.verdict == Verdict::Violated);

    BoundCheck repaired = hankel_spectral_bounds(kTrib, 2, Variant::Corrected);
    CHECK(*repaired.upper == doctest::Approx(std::sqrt(10.0)).epsilon(1e-12));
    CHECK(repaired.verdict == Verdict::Holds);

    BoundCheck pp = hankel_spectral_bounds(kPp111, 2, Variant::AsPrinted);
    CHECK(*pp.upper == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(pp.verdict == Verdict::Violated);
}

TEST_CASE("repaired hankel upper holds across a seed grid") {
    for (auto spec : {RecurrenceSpec::generalized_tribonacci(0, 1, 1),
                      RecurrenceSpec::generalized_tribonacci(1, 2, 3),
                      RecurrenceSpec::pell_padovan(1, 1, 1), RecurrenceSpec::pell_padovan(2, 0, 1)})
        for (long n = 1; n <= 16; ++n) {
            BoundCheck bc = hankel_spectral_bounds(spec, n, Variant::Corrected);
            CHECK(bc.verdict == Verdict::Holds);
            CHECK(*bc.lower <= *bc.upper + 1e-9);
        }
}

TEST_CASE("hankel operator norms telescope") {
    BoundCheck trib = hankel_one_inf(kTrib, 2);
    CHECK(*trib.observed_exact == 3);
    CHECK(*trib.observed_exact_inf == 3);
    CHECK(*trib.closed_form == 3);
    CHECK(trib.verdict == Verdict::ExactMatch);

    BoundCheck pp = hankel_one_inf(kPp111, 2);
    CHECK(*pp.closed_form == 3);
    CHECK(pp.verdict == Verdict::ExactMatch);

    BoundCheck n1 = hankel_one_inf(kTrib, 1);
    CHECK(*n1.closed_form == 1);
    CHECK(n1.verdict == Verdict::ExactMatch);

    BoundCheck neg = hankel_one_inf(RecurrenceSpec::generalized_tribonacci(0, -1, 1), 2);
    CHECK(neg.verdict == Verdict::OutOfHypothesis);
}

TEST_CASE("proof splits reconstruct the theorem matrices") {
    for (long n = 1; n <= 16; ++n) {
        std::vector<Rat> row = terms_of(kTrib, 0, n - 1);
        for (Rat r : {rat(2), rat(-2), rat(3)}) {
            auto [c, d] = rcirc_split_large(row, r);
            CHECK(hadamard(c, d) == r_circulant(row, r));
        }
        for (Rat r : {rat(1, 2), rat(-1, 2)}) {
            auto [c, d] = rcirc_split_small(row, r);
            CHECK(hadamard(c, d) == r_circulant(row, r));
        }
        auto [b, c2] = circulant_split(row);
        CHECK(hadamard(b, c2) == circulant(row));

        std::vector<Rat> seq = terms_of(kPp111, 1, 2 * n - 1);
        auto [m, nn] = hankel_split(seq, n);
        CHECK(hadamard(m, nn) == hankel(seq, 1, n));
    }
}

TEST_CASE("split factors reproduce the printed r1/c1 values at n=2, r=2") {
    std::vector<Rat> row = terms_of(kTrib, 0, 1);
    auto [c, d] = rcirc_split_large(row, rat(2));
    auto r1 = row_col_length(c).first;
    auto c1 = row_col_length(d).second;
    CHECK(r1 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(c1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    HadamardBound hb = hadamard_bound_check(c, d);
    CHECK(hb.rhs == doctest::Approx(std::sqrt(8.0)).epsilon(1e-9));
    CHECK(hb.lhs <= 2.0 + 1e-9);
    CHECK(hb.holds);
}

TEST_CASE("printed bracket is internally consistent for nonnegative seeds") {
    for (auto spec : {RecurrenceSpec::generalized_tribonacci(1, 2, 3),
                      RecurrenceSpec::pell_padovan(2, 0, 1)})
        for (long n = 1; n <= 12; ++n)
            for (Rat r : {rat(-2), rat(1, 2), rat(1), rat(3)}) {
                BoundCheck bc = rcirc_bounds(spec, n, r);
                CHECK(*bc.lower <= *bc.upper + 1e-9);
            }
}

TEST_CASE("theorem id strings round-trip") {
    for (TheoremId id : {TheoremId::TribRcircBounds, TheoremId::PpHankelOneInf})
        CHECK(theorem_id_from_string(theorem_id_string(id)) == id);
    CHECK_THROWS_AS(theorem_id_from_string("NOPE"), Error);
}

TEST_CASE("bound check JSON has the full field set") {
    std::string j = bound_check_to_json(hankel_spectral_bounds(kTrib, 2, Variant::AsPrinted));
    for (const char* key : {"theorem_id", "family", "seeds", "n", "variant", "lower", "upper",
                            "observed", "verdict", "margin"})
        CHECK(j.find(std::string("\"") + key + "\"") != std::string::npos);
    CHECK(j.find("Violated") != std::string::npos);
}
