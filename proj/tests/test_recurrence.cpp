#include "doctest.h"
#include "seqmat/recurrence.hpp"
#include "seqmat/verify.hpp"

using namespace seqmat;

namespace {
const RecurrenceSpec kTrib = RecurrenceSpec::tribonacci();
const RecurrenceSpec kPp111 = RecurrenceSpec::pell_padovan(1, 1, 1);
}  // namespace

TEST_CASE("term follows the recurrence forward and backward") {
    CHECK(term(kTrib, 6) == 13);
    CHECK(term(kTrib, -2) == 1);
    CHECK(term(RecurrenceSpec::general(2, 3, 5, 0, 0, 0), 9) == 0);
    CHECK(term(kPp111, 8) == 7);
}

TEST_CASE("window generates contiguous runs in one pass") {
    SequenceWindow w = window(kTrib, 0, 5);
    CHECK(w.terms == std::vector<Int>{0, 1, 1, 2, 4, 7});

    SequenceWindow z = window(kPp111, 0, 6);
    CHECK(z.terms == std::vector<Int>{1, 1, 1, 2, 2, 3, 4});

    SequenceWindow seed = window(RecurrenceSpec::generalized_tribonacci(3, 1, 2), 2, 2);
    CHECK(seed.terms == std::vector<Int>{2});
}

TEST_CASE("recurrence closure holds on a seed grid for n in [-20, 60]") {
    for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b)
            for (long c = 0; c <= 2; ++c)
                for (auto spec : {RecurrenceSpec::generalized_tribonacci(a, b, c),
                                  RecurrenceSpec::pell_padovan(a, b, c)}) {
                    SequenceWindow w = window(spec, -23, 60);
                    for (long n = -20; n <= 60; ++n)
                        CHECK(w.at(n) ==
                              spec.p * w.at(n - 1) + spec.q * w.at(n - 2) + spec.r * w.at(n - 3));
                }
}

TEST_CASE("backward extension reproduces the seeds on the forward pass") {
    for (auto spec : {RecurrenceSpec::generalized_tribonacci(2, 0, 3),
                      RecurrenceSpec::pell_padovan(3, 1, 2)}) {
        SequenceWindow w = window(spec, -20, 2);
        Int x0 = w.at(-20), x1 = w.at(-19), x2 = w.at(-18);
        for (long n = -17; n <= 2; ++n) {
            Int next = spec.p * x2 + spec.q * x1 + spec.r * x0;
            x0 = x1;
            x1 = x2;
            x2 = next;
        }
        CHECK(x0 == spec.a);
        CHECK(x1 == spec.b);
        CHECK(x2 == spec.c);
    }
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(RecurrenceSpec::general(1, 1, 0, 0, 1, 1), Error);
    RecurrenceSpec bad = RecurrenceSpec::tribonacci();
    bad.a = 2;
    CHECK_THROWS_AS(window(bad, 0, 3), Error);
}

TEST_CASE("index cap rejects runaway indices") {
    CHECK_THROWS_AS(term(kTrib, index_cap() + 1), Error);
    CHECK_THROWS_AS(term(kTrib, -(index_cap() + 1)), Error);
}

TEST_CASE("backward extension detects non-divisible steps") {
    RecurrenceSpec spec = RecurrenceSpec::general(1, 1, 2, 0, 1, 2);
    CHECK_THROWS_AS(term(spec, -1), Error);
    // (Q2 - Q1 - Q0) divisible by 2 works fine
    CHECK(term(RecurrenceSpec::general(1, 1, 2, 0, 1, 1), -1) == 0);
}

TEST_CASE("sum_general matches brute force and rejects the degenerate denominator") {
    CHECK(sum_general(RecurrenceSpec::general(2, 1, 1, 1, 1, 1), 2) == 2);
    CHECK(sum_general(kTrib, 3) == 4);
    CHECK(sum_general(RecurrenceSpec::general(1, 1, 2, 0, 0, 0), 7) == 0);
    CHECK_THROWS_AS(sum_general(RecurrenceSpec::general(1, 1, -1, 1, 1, 1), 4), Error);
    // Pell-Padovan has p+q+r = 2, so the formula applies there too.
    CHECK(sum_general(kPp111, 3) == 4);
}

TEST_CASE("closed_sum variants") {
    CHECK(closed_sum(kTrib, 1, Variant::AsPrinted).value == rat(1, 2));
    CHECK(closed_sum(kTrib, 3, Variant::Corrected).value == 4);
    CHECK(closed_sum(kPp111, 3).value == 4);
    CHECK(closed_sum(kPp111, 0).value == 0);
    CHECK_THROWS_AS(closed_sum(RecurrenceSpec::general(2, 1, 1, 1, 1, 1), 3), Error);
}

TEST_CASE("square_sum") {
    CHECK(square_sum(kTrib, 3).value == 6);
    CHECK(square_sum(kPp111, 3).value == 6);
    CHECK(square_sum(kTrib, 1).value == 1);
    // printed vs corrected constant differs exactly when b != c
    RecurrenceSpec pp = RecurrenceSpec::pell_padovan(0, 0, 1);
    CHECK(square_sum(pp, 1, Variant::AsPrinted).value == -2);
    CHECK(square_sum(pp, 1, Variant::Corrected).value == 0);
}

TEST_CASE("lag2_product_sum variants") {
    CHECK(lag2_product_sum(kTrib, 3, Variant::Corrected).value == 2);
    CHECK(lag2_product_sum(kTrib, 3, Variant::AsPrinted).value == 6);
    CHECK(lag2_product_sum(kTrib, 1, Variant::AsPrinted).value == 0);
    CHECK(lag2_product_sum(kTrib, 1, Variant::Corrected).value == 0);
    CHECK_THROWS_AS(lag2_product_sum(kPp111, 3, Variant::Corrected), Error);
}

TEST_CASE("adjacent_product_sum variants") {
    CHECK(adjacent_product_sum(kTrib, 1, Variant::AsPrinted).value == 2);
    CHECK(adjacent_product_sum(kTrib, 3, Variant::Corrected).value == 11);
    CHECK(adjacent_product_sum(kTrib, 2, Variant::Corrected).value == 3);
}

TEST_CASE("prefix_square_double_sum variants") {
    CHECK(prefix_square_double_sum(kTrib, 2, Variant::AsPrinted).value == rat(7, 2));
    CHECK(prefix_square_double_sum(kTrib, 2, Variant::Corrected).value == 3);
    CHECK(prefix_square_double_sum(kPp111, 2, Variant::Corrected).value == 3);
}

TEST_CASE("corrected identities match the brute-force oracle on a seed grid") {
    for (long a = 0; a <= 2; ++a)
        for (long b = 0; b <= 2; ++b)
            for (long c = 0; c <= 2; ++c) {
                RecurrenceSpec trib = RecurrenceSpec::generalized_tribonacci(a, b, c);
                RecurrenceSpec pp = RecurrenceSpec::pell_padovan(a, b, c);
                for (long n = 1; n <= 24; ++n) {
                    CHECK(closed_sum(trib, n).value ==
                          oracle_identity(IdentityId::TribSumClosed, trib, n));
                    CHECK(square_sum(trib, n).value ==
                          oracle_identity(IdentityId::TribSquareSum, trib, n));
                    CHECK(lag2_product_sum(trib, n, Variant::Corrected).value ==
                          oracle_identity(IdentityId::TribLag2Product, trib, n));
                    CHECK(adjacent_product_sum(trib, n, Variant::Corrected).value ==
                          oracle_identity(IdentityId::TribAdjProduct, trib, n));
                    CHECK(prefix_square_double_sum(trib, n, Variant::Corrected).value ==
                          oracle_identity(IdentityId::TribDoubleSum, trib, n));
                    CHECK(closed_sum(pp, n).value == oracle_identity(IdentityId::PpSum, pp, n));
                    CHECK(square_sum(pp, n, Variant::Corrected).value ==
                          oracle_identity(IdentityId::PpSquareSum, pp, n));
                    CHECK(prefix_square_double_sum(pp, n, Variant::Corrected).value ==
                          oracle_identity(IdentityId::PpDoubleSum, pp, n));
                }
            }
}

TEST_CASE("pell-padovan sum telescopes across half ranges") {
    for (long a = 0; a <= 2; ++a)
        for (long c = 0; c <= 2; ++c) {
            RecurrenceSpec pp = RecurrenceSpec::pell_padovan(a, 1, c);
            SequenceWindow w = window(pp, 0, 2 * 20 + 5);
            for (long n = 1; n <= 20; ++n) {
                Rat diff = closed_sum(pp, 2 * n - 1).value - closed_sum(pp, n - 1).value;
                CHECK(diff == rat(Int(w.at(2 * n + 4) - w.at(n + 4))));
            }
        }
}

TEST_CASE("identity id strings round-trip") {
    for (IdentityId id : {IdentityId::GenSum, IdentityId::TribSumClosed, IdentityId::PpDoubleSum})
        CHECK(identity_id_from_string(identity_id_string(id)) == id);
    CHECK_THROWS_AS(identity_id_from_string("NOPE"), Error);
}
