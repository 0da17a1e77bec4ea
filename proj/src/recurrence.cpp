#include "seqmat/recurrence.hpp"

#include <cstdlib>
#include <string>

namespace seqmat {

namespace {

Int sq(const Int& x) { return x * x; }

long checked_index(long n) {
    long cap = index_cap();
    if (n > cap || n < -cap)
        throw Error(Errc::IndexCapExceeded,
                    "index " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    return n;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::GeneralThirdOrder: return "general";
        case Family::GeneralizedTribonacci: return "generalized-tribonacci";
        case Family::Tribonacci: return "tribonacci";
        case Family::GeneralizedPellPadovan: return "pell-padovan";
    }
    return "?";
}

std::string_view variant_name(Variant v) {
    return v == Variant::AsPrinted ? "as-printed" : "corrected";
}

RecurrenceSpec RecurrenceSpec::general(Int p, Int q, Int r, Int a, Int b, Int c) {
    RecurrenceSpec s{Family::GeneralThirdOrder, std::move(p), std::move(q), std::move(r),
                     std::move(a), std::move(b), std::move(c)};
    s.validate();
    return s;
}

RecurrenceSpec RecurrenceSpec::tribonacci() {
    return RecurrenceSpec{Family::Tribonacci, 1, 1, 1, 0, 1, 1};
}

RecurrenceSpec RecurrenceSpec::generalized_tribonacci(Int a, Int b, Int c) {
    return RecurrenceSpec{Family::GeneralizedTribonacci, 1, 1, 1,
                          std::move(a), std::move(b), std::move(c)};
}

RecurrenceSpec RecurrenceSpec::pell_padovan(Int a, Int b, Int c) {
    return RecurrenceSpec{Family::GeneralizedPellPadovan, 0, 1, 1,
                          std::move(a), std::move(b), std::move(c)};
}

void RecurrenceSpec::validate() const {
    if (r == 0)
        throw Error(Errc::Precondition, "r must be nonzero (backward extension needs it)");
    switch (family) {
        case Family::GeneralThirdOrder:
            break;
        case Family::GeneralizedTribonacci:
            if (p != 1 || q != 1 || r != 1)
                throw Error(Errc::Precondition, "generalized tribonacci requires (p,q,r)=(1,1,1)");
            break;
        case Family::Tribonacci:
            if (p != 1 || q != 1 || r != 1 || a != 0 || b != 1 || c != 1)
                throw Error(Errc::Precondition,
                            "tribonacci requires (p,q,r)=(1,1,1) and seeds (0,1,1)");
            break;
        case Family::GeneralizedPellPadovan:
            if (p != 0 || q != 1 || r != 1)
                throw Error(Errc::Precondition, "pell-padovan requires (p,q,r)=(0,1,1)");
            break;
    }
}

long index_cap() {
    static const long cap = [] {
        if (const char* env = std::getenv("SEQMAT_MAX_INDEX")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end && *end == '\0' && v > 0) return v;
        }
        return 10000L;
    }();
    return cap;
}

const Int& SequenceWindow::at(long n) const {
    if (n < lo || n > hi())
        throw Error(Errc::Precondition, "index " + std::to_string(n) + " outside window");
    return terms[static_cast<size_t>(n - lo)];
}

SequenceWindow window(const RecurrenceSpec& spec, long lo, long hi) {
    spec.validate();
    if (lo > hi) throw Error(Errc::Precondition, "window requires lo <= hi");
    checked_index(lo);
    checked_index(hi);

    // Generate over [min(lo,0), max(hi,2)] so the seeds are always anchored,
    // then slice. Single forward pass plus a single backward pass.
    long glo = std::min(lo, 0L);
    long ghi = std::max(hi, 2L);
    std::vector<Int> full(static_cast<size_t>(ghi - glo + 1));
    auto ref = [&](long n) -> Int& { return full[static_cast<size_t>(n - glo)]; };
    ref(0) = spec.a;
    ref(1) = spec.b;
    ref(2) = spec.c;
    for (long n = 3; n <= ghi; ++n)
        ref(n) = spec.p * ref(n - 1) + spec.q * ref(n - 2) + spec.r * ref(n - 3);
    for (long n = -1; n >= glo; --n) {
        Int num = ref(n + 3) - spec.p * ref(n + 2) - spec.q * ref(n + 1);
        if (!mpz_divisible_p(num.get_mpz_t(), spec.r.get_mpz_t()))
            throw Error(Errc::BackwardNotExact,
                        "backward step to index " + std::to_string(n) + " is not divisible by r");
        ref(n) = num / spec.r;
    }

    SequenceWindow w;
    w.spec = spec;
    w.lo = lo;
    w.terms.assign(full.begin() + (lo - glo), full.begin() + (hi - glo + 1));
    return w;
}

Int term(const RecurrenceSpec& spec, long n) {
    return window(spec, n, n).terms.front();
}

std::string_view identity_id_string(IdentityId id) {
    switch (id) {
        case IdentityId::GenSum: return "GEN_SUM";
        case IdentityId::TribSumClosed: return "TRIB_SUM_CLOSED";
        case IdentityId::TribSquareSum: return "TRIB_SQUARE_SUM";
        case IdentityId::TribLag2Product: return "TRIB_LAG2_PRODUCT";
        case IdentityId::TribAdjProduct: return "TRIB_ADJ_PRODUCT";
        case IdentityId::TribDoubleSum: return "TRIB_DOUBLE_SUM";
        case IdentityId::PpSum: return "PP_SUM";
        case IdentityId::PpSquareSum: return "PP_SQUARE_SUM";
        case IdentityId::PpDoubleSum: return "PP_DOUBLE_SUM";
    }
    return "?";
}

IdentityId identity_id_from_string(std::string_view s) {
    std::string valid;
    for (IdentityId id : {IdentityId::GenSum, IdentityId::TribSumClosed, IdentityId::TribSquareSum,
                          IdentityId::TribLag2Product, IdentityId::TribAdjProduct,
                          IdentityId::TribDoubleSum, IdentityId::PpSum, IdentityId::PpSquareSum,
                          IdentityId::PpDoubleSum}) {
        if (identity_id_string(id) == s) return id;
        if (!valid.empty()) valid += ", ";
        valid += identity_id_string(id);
    }
    throw Error(Errc::ParseError,
                "unknown identity id '" + std::string(s) + "'; valid: " + valid);
}

namespace {

void require_nonnegative(long n) {
    if (n < 0) throw Error(Errc::Precondition, "identity index n must be >= 0");
}

}  // namespace

Rat pp_square_constant(const RecurrenceSpec& s, Variant v) {
    if (!s.pell_padovan_family())
        throw Error(Errc::UnsupportedFamily, "T constant is pell-padovan only");
    Int t = 2 * s.a * (s.a - s.c);
    Int d = sq(s.b - s.c);
    return rat(v == Variant::AsPrinted ? Int(t - d) : Int(t + d));
}

Rat sum_general(const SequenceWindow& w, long n) {
    require_nonnegative(n);
    const RecurrenceSpec& s = w.spec;
    Int den = s.p + s.q + s.r - 1;
    if (den == 0)
        throw Error(Errc::DegenerateDenominator, "closed sum needs p+q+r != 1");
    Int num = (1 - s.p) * (w.at(n + 1) + w.at(n + 2) - w.at(2) - w.at(1)) -
              (s.p * w.at(2) + s.r * w.at(0)) + w.at(n + 3) - s.q * w.at(n + 1);
    return rat(num, den);
}

IdentityValue closed_sum(const SequenceWindow& w, long n, Variant v) {
    require_nonnegative(n);
    const RecurrenceSpec& s = w.spec;
    if (s.tribonacci_family()) {
        Int num = w.at(n + 3) - w.at(n + 1) - w.at(2) -
                  (v == Variant::AsPrinted ? w.at(1) : w.at(0));
        return {IdentityId::TribSumClosed, v, rat(num, Int(2))};
    }
    if (s.pell_padovan_family()) {
        return {IdentityId::PpSum, v, rat(Int(w.at(n + 5) - w.at(4) - w.at(0)))};
    }
    throw Error(Errc::UnsupportedFamily, "closed_sum needs a tribonacci or pell-padovan spec");
}

IdentityValue square_sum(const SequenceWindow& w, long n, Variant v) {
    require_nonnegative(n);
    const RecurrenceSpec& s = w.spec;
    if (s.tribonacci_family()) {
        Int num = 4 * w.at(n) * w.at(n + 1) - 4 * w.at(0) * w.at(1) -
                  sq(w.at(n + 1) - w.at(n - 1)) + sq(w.at(-2) + w.at(0));
        return {IdentityId::TribSquareSum, v, rat(num, Int(4))};
    }
    if (s.pell_padovan_family()) {
        Rat value = rat(Int(sq(w.at(n + 2)) - sq(w.at(n - 1)) - sq(w.at(n - 3)) - sq(w.at(0))));
        value += pp_square_constant(s, v);
        return {IdentityId::PpSquareSum, v, value};
    }
    throw Error(Errc::UnsupportedFamily, "square_sum needs a tribonacci or pell-padovan spec");
}

IdentityValue lag2_product_sum(const SequenceWindow& w, long n, Variant v) {
    require_nonnegative(n);
    if (!w.spec.tribonacci_family())
        throw Error(Errc::UnsupportedFamily, "lag2_product_sum is tribonacci-only");
    Int inner = v == Variant::AsPrinted ? Int(w.at(n + 1) + w.at(n - 1))
                                        : Int(w.at(n + 1) - w.at(n - 1));
    Int num = sq(inner) - sq(w.at(-2) + w.at(0));
    return {IdentityId::TribLag2Product, v, rat(num, Int(4))};
}

IdentityValue adjacent_product_sum(const SequenceWindow& w, long n, Variant v) {
    require_nonnegative(n);
    const RecurrenceSpec& s = w.spec;
    if (!s.tribonacci_family())
        throw Error(Errc::UnsupportedFamily, "adjacent_product_sum is tribonacci-only");
    Rat h = square_sum(w, n, Variant::Corrected).value;
    Rat bsum = lag2_product_sum(w, n, Variant::Corrected).value;
    Rat num = bsum - h +
              rat(Int(sq(w.at(n)) + sq(w.at(n - 1)) + sq(w.at(n - 2)) +
                      w.at(n - 2) * (w.at(n - 3) + 2 * w.at(n - 1) - w.at(n))));
    if (v == Variant::AsPrinted) {
        num += rat(Int(2 * w.at(n) * (w.at(n - 1) + 2 * w.at(n + 1)) +
                       s.a * (w.at(-1) + s.c - 2 * s.b)));
    } else {
        num += rat(Int(2 * w.at(n) * (w.at(n - 1) + w.at(n + 1)) + s.b * (s.b - s.c) - s.a * s.c));
    }
    return {IdentityId::TribAdjProduct, v, num / 2};
}

IdentityValue prefix_square_double_sum(const SequenceWindow& w, long n, Variant v) {
    require_nonnegative(n);
    const RecurrenceSpec& s = w.spec;
    if (s.tribonacci_family()) {
        Rat h = square_sum(w, n, Variant::Corrected).value;
        Rat bsum = lag2_product_sum(w, n, Variant::Corrected).value;
        Rat csum = adjacent_product_sum(w, n, Variant::Corrected).value;
        Rat num = 4 * csum - 2 * h + 2 * bsum +
                  rat(Int(-4 * n * s.a * s.b - sq(s.a) + sq(s.b) - 2 * s.b * w.at(-1) +
                          sq(w.at(n)) + n * sq(w.at(-2) + s.a)));
        if (v == Variant::AsPrinted) {
            num += rat(Int(-w.at(n + 1) * (1 - 2 * w.at(n - 1))));
        } else {
            num += rat(Int(-sq(w.at(n + 1)) + 2 * w.at(n + 1) * w.at(n - 1)));
        }
        return {IdentityId::TribDoubleSum, v, num / 4};
    }
    if (s.pell_padovan_family()) {
        Rat value = rat(Int(sq(w.at(n + 1)) + 2 * sq(w.at(n)) + 2 * sq(w.at(n - 1)) +
                            sq(w.at(n - 2)) + sq(w.at(n - 3)) - sq(w.at(-2)) - sq(w.at(-1)) -
                            sq(s.b) - sq(s.c) - 2 * sq(s.a)));
        value += (n - 1) * (pp_square_constant(s, v) - rat(Int(sq(s.a))));
        return {IdentityId::PpDoubleSum, v, value};
    }
    throw Error(Errc::UnsupportedFamily,
                "prefix_square_double_sum needs a tribonacci or pell-padovan spec");
}

namespace {

// Family check happens before the window is built so a general spec gets
// UnsupportedFamily rather than a backward-extension error.
SequenceWindow identity_window(const RecurrenceSpec& spec, long n) {
    if (!spec.tribonacci_family() && !spec.pell_padovan_family())
        throw Error(Errc::UnsupportedFamily, "identity closed forms need a named family");
    require_nonnegative(n);
    return window(spec, -3, n + 5);
}

}  // namespace

Rat sum_general(const RecurrenceSpec& spec, long n) {
    require_nonnegative(n);
    return sum_general(window(spec, 0, n + 3), n);
}

IdentityValue closed_sum(const RecurrenceSpec& spec, long n, Variant v) {
    return closed_sum(identity_window(spec, n), n, v);
}

IdentityValue square_sum(const RecurrenceSpec& spec, long n, Variant v) {
    return square_sum(identity_window(spec, n), n, v);
}

IdentityValue lag2_product_sum(const RecurrenceSpec& spec, long n, Variant v) {
    return lag2_product_sum(identity_window(spec, n), n, v);
}

IdentityValue adjacent_product_sum(const RecurrenceSpec& spec, long n, Variant v) {
    return adjacent_product_sum(identity_window(spec, n), n, v);
}

IdentityValue prefix_square_double_sum(const RecurrenceSpec& spec, long n, Variant v) {
    return prefix_square_double_sum(identity_window(spec, n), n, v);
}

}  // namespace seqmat
