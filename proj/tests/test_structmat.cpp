#include <random>

#include "doctest.h"
#include "seqmat/recurrence.hpp"
#include "seqmat/structmat.hpp"

using namespace seqmat;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.push_back(rat(x));
    return v;
}

StructuredMatrix dense2(std::initializer_list<long> xs) {
    std::vector<Rat> v;
    for (long x : xs) v.push_back(rat(x));
    return StructuredMatrix::dense(2, std::move(v));
}

}  // namespace

TEST_CASE("r_circulant pattern and kind degradation") {
    StructuredMatrix m = r_circulant(rats({0, 1}), rat(2));
    CHECK(m(0, 0) == 0);
    CHECK(m(0, 1) == 1);
    CHECK(m(1, 0) == 2);
    CHECK(m(1, 1) == 0);
    CHECK(m.kind() == MatrixKind::RCirculant);

    StructuredMatrix one = r_circulant(rats({5}), rat(7));
    CHECK(one.order() == 1);
    CHECK(one(0, 0) == 5);

    StructuredMatrix c = r_circulant(rats({0, 1, 1}), rat(1));
    CHECK(c.kind() == MatrixKind::Circulant);
    CHECK(c == circulant(rats({0, 1, 1})));
    CHECK(c(1, 0) == 1);
    CHECK(c(1, 1) == 0);
}

TEST_CASE("left_circulant shifts rows left") {
    StructuredMatrix m = left_circulant(rats({1, 2, 3}));
    CHECK(m(0, 0) == 1);
    CHECK(m(0, 2) == 3);
    CHECK(m(1, 0) == 2);
    CHECK(m(1, 2) == 1);
    CHECK(m(2, 0) == 3);
    CHECK(m(2, 1) == 1);

    CHECK(circulant(rats({4})).order() == 1);
    StructuredMatrix ones = circulant(rats({1, 1, 1}));
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) CHECK(ones(i, j) == 1);
}

TEST_CASE("sequence-pattern constructors on tribonacci terms") {
    SequenceWindow w = window(RecurrenceSpec::tribonacci(), -2, 6);
    std::vector<Rat> seq;
    for (long k = 1; k <= 3; ++k) seq.emplace_back(w.at(k));

    StructuredMatrix semi = semi_circulant(seq, 1, 2);
    CHECK(semi(0, 0) == 1);
    CHECK(semi(0, 1) == 1);
    CHECK(semi(1, 0) == 0);
    CHECK(semi(1, 1) == 1);

    StructuredMatrix h = hankel(seq, 1, 2);
    CHECK(h(0, 0) == 1);
    CHECK(h(0, 1) == 1);
    CHECK(h(1, 0) == 1);
    CHECK(h(1, 1) == 2);

    SequenceWindow z = window(RecurrenceSpec::pell_padovan(1, 1, 1), 1, 3);
    std::vector<Rat> zs;
    for (long k = 1; k <= 3; ++k) zs.emplace_back(z.at(k));
    StructuredMatrix hz = hankel(zs, 1, 2);
    CHECK(hz == h);

    // toeplitz touches negative indices: u(-1)..u(1) of tribonacci is 0,0,1
    std::vector<Rat> t;
    for (long k = -1; k <= 1; ++k) t.emplace_back(w.at(k));
    StructuredMatrix tp = toeplitz(t, -1, 2);
    CHECK(tp(0, 0) == 0);
    CHECK(tp(0, 1) == 0);  // U(-1)
    CHECK(tp(1, 0) == 1);  // U(1)
    CHECK(tp(1, 1) == 0);
}

TEST_CASE("constructor errors") {
    CHECK_THROWS_AS(circulant(std::vector<Rat>{}), Error);
    CHECK_THROWS_AS(left_circulant(std::vector<Rat>{}), Error);
    std::vector<Rat> three = rats({1, 2, 3});
    CHECK_THROWS_AS(hankel(three, 1, 3), Error);  // needs U(1..5)
    try {
        hankel(three, 1, 3);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::MissingIndex);
        CHECK(std::string(e.what()).find("U(4)") != std::string::npos);
    }
    CHECK_THROWS_AS(semi_circulant(three, 1, 4), Error);
}

TEST_CASE("hadamard product") {
    StructuredMatrix a = dense2({0, 1, 2, 0});
    StructuredMatrix threes = dense2({3, 3, 3, 3});
    StructuredMatrix prod = hadamard(a, threes);
    CHECK(prod(0, 1) == 3);
    CHECK(prod(1, 0) == 6);
    CHECK(prod(0, 0) == 0);

    StructuredMatrix ones = dense2({1, 1, 1, 1});
    CHECK(hadamard(a, ones) == a);

    CHECK_THROWS_AS(hadamard(a, circulant(rats({1, 2, 3}))), Error);
}

TEST_CASE("structural invariants") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> dist(-3, 3);
    for (int round = 0; round < 20; ++round) {
        long n = 1 + round % 6;
        std::vector<Rat> row;
        for (long i = 0; i < n; ++i) row.push_back(rat(dist(rng)));
        CHECK(r_circulant(row, rat(1)) == circulant(row));
    }

    SequenceWindow w = window(RecurrenceSpec::generalized_tribonacci(1, 2, 3), 1, 13);
    std::vector<Rat> seq;
    for (long k = 1; k <= 13; ++k) seq.emplace_back(w.at(k));
    StructuredMatrix h = hankel(seq, 1, 7);
    for (long i = 0; i < 7; ++i)
        for (long j = 0; j < 7; ++j) CHECK(h(i, j) == h(j, i));

    StructuredMatrix semi = semi_circulant(seq, 1, 7);
    for (long i = 0; i < 7; ++i) {
        CHECK(semi(i, i) == seq[0]);
        for (long j = 0; j < i; ++j) CHECK(semi(i, j) == 0);
    }
}

TEST_CASE("matrix JSON round-trips bit-exactly") {
    for (const StructuredMatrix& m :
         {r_circulant(rats({0, 1, 1, 2}), rat(-1, 2)), circulant(rats({1, 2, 3})),
          left_circulant(rats({1, 2, 3})), dense2({0, 1, 2, 0})}) {
        std::string text = matrix_to_json(m);
        StructuredMatrix back = matrix_from_json(text);
        CHECK(back == m);
        CHECK(back.kind() == m.kind());
        CHECK(matrix_to_json(back) == text);
        if (m.kind() == MatrixKind::RCirculant) CHECK(back.scalar_r() == m.scalar_r());
    }
    CHECK_THROWS_AS(matrix_from_json("{not json"), Error);
}

TEST_CASE("rational string forms") {
    CHECK(rat_to_string(rat(-1, 2)) == "-1/2");
    CHECK(rat_to_string(rat(6, 3)) == "2");
    CHECK(rat_from_string("-1/2") == rat(-1, 2));
    CHECK(rat_from_string("7") == 7);
    CHECK_THROWS_AS(rat_from_string("x"), Error);
    CHECK_THROWS_AS(rat_from_string("1/0"), Error);
}
