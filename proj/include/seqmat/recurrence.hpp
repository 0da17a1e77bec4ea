#ifndef SEQMAT_RECURRENCE_HPP
#define SEQMAT_RECURRENCE_HPP

#include <string_view>
#include <vector>

#include "seqmat/rational.hpp"

namespace seqmat {

enum class Family {
    GeneralThirdOrder,
    GeneralizedTribonacci,
    Tribonacci,
    GeneralizedPellPadovan,
};

std::string_view family_name(Family f);

/// One instance of the third-order recurrence
///   Q(n) = p*Q(n-1) + q*Q(n-2) + r*Q(n-3),  Q(0)=a, Q(1)=b, Q(2)=c.
/// The named families pin the coefficients: both tribonacci kinds use
/// (p,q,r) = (1,1,1), Pell-Padovan uses (0,1,1), and Tribonacci proper
/// additionally pins the seeds to (0,1,1).
struct RecurrenceSpec {
    Family family = Family::GeneralThirdOrder;
    Int p, q, r;
    Int a, b, c;

    static RecurrenceSpec general(Int p, Int q, Int r, Int a, Int b, Int c);
    static RecurrenceSpec tribonacci();
    static RecurrenceSpec generalized_tribonacci(Int a, Int b, Int c);
    static RecurrenceSpec pell_padovan(Int a, Int b, Int c);

    bool tribonacci_family() const {
        return family == Family::GeneralizedTribonacci || family == Family::Tribonacci;
    }
    bool pell_padovan_family() const { return family == Family::GeneralizedPellPadovan; }

    /// Throws Error on coefficient/seed constraint violations (incl. r == 0).
    void validate() const;
};

/// Contiguous run of exact terms; terms[i] holds Q(lo + i).
struct SequenceWindow {
    RecurrenceSpec spec;
    long lo = 0;
    std::vector<Int> terms;

    long hi() const { return lo + static_cast<long>(terms.size()) - 1; }
    const Int& at(long n) const;
};

/// Index cap for term generation; SEQMAT_MAX_INDEX overrides the default 10^4.
long index_cap();

/// Q(n) for any signed n within the index cap. Negative indices use the
/// inverted recurrence Q(n-3) = (Q(n) - p*Q(n-1) - q*Q(n-2)) / r, which must
/// divide exactly (always true for the named families, where r = 1).
Int term(const RecurrenceSpec& spec, long n);

/// Terms for every index in [lo, hi], generated in a single pass.
SequenceWindow window(const RecurrenceSpec& spec, long lo, long hi);

/// Formula text as printed vs. the oracle-confirmed correction. Formulas
/// without a registered correction evaluate identically under both tags.
enum class Variant { AsPrinted, Corrected };

std::string_view variant_name(Variant v);

enum class IdentityId {
    GenSum,            // sum of Q(1..n), general coefficients
    TribSumClosed,     // sum of R(1..n)
    TribSquareSum,     // H_n = sum of R(k)^2
    TribLag2Product,   // B_n = sum of R(k)*R(k-2)
    TribAdjProduct,    // C_n = sum of R(k)*R(k+1)
    TribDoubleSum,     // M_n = sum_{m<=n} H_m
    PpSum,             // sum of Z(1..n)
    PpSquareSum,       // sum of Z(k)^2
    PpDoubleSum,       // double sum of Z(k)^2
};

std::string_view identity_id_string(IdentityId id);
IdentityId identity_id_from_string(std::string_view s);

struct IdentityValue {
    IdentityId id;
    Variant variant;
    Rat value;
};

/// Pell-Padovan square-sum constant: 2a(a-c) - (b-c)^2 as printed,
/// 2a(a-c) + (b-c)^2 corrected (only the plus sign survives the oracle).
Rat pp_square_constant(const RecurrenceSpec& spec, Variant v);

/// Closed form for sum of Q(1..n); requires p+q+r != 1 (the denominator is
/// p+q+r-1). Throws DegenerateDenominator otherwise.
Rat sum_general(const RecurrenceSpec& spec, long n);

/// Family sum closed forms. Tribonacci as-printed: (R(n+3)-R(n+1)-R2-R1)/2;
/// corrected: (R(n+3)-R(n+1)-R2-R0)/2. Pell-Padovan (single form):
/// Z(n+5)-Z4-Z0. Accepts n >= 0 (empty sum).
IdentityValue closed_sum(const RecurrenceSpec& spec, long n, Variant v = Variant::Corrected);

/// Sum of squared terms. Tribonacci (single form):
///   H_n = (4 R(n)R(n+1) - 4 R0 R1 - (R(n+1)-R(n-1))^2 + (R(-2)+R0)^2) / 4.
/// Pell-Padovan: Z(n+2)^2 - Z(n-1)^2 - Z(n-3)^2 + T - Z0^2 where the printed
/// constant is T = 2a(a-c) - (b-c)^2 and the corrected one flips the sign of
/// the square: T = 2a(a-c) + (b-c)^2.
IdentityValue square_sum(const RecurrenceSpec& spec, long n, Variant v = Variant::Corrected);

/// B_n = sum R(k)R(k-2). As-printed uses (R(n+1)+R(n-1))^2, corrected uses
/// (R(n+1)-R(n-1))^2; both subtract (R(-2)+R0)^2 and divide by 4.
IdentityValue lag2_product_sum(const RecurrenceSpec& spec, long n, Variant v);

/// C_n = sum R(k)R(k+1), tribonacci family only. The printed form reads
///   (B_n - H_n + R(n)^2 + R(n-1)^2 + R(n-2)^2
///    + R(n-2)(R(n-3) + 2R(n-1) - R(n)) + 2R(n)(R(n-1) + 2R(n+1))
///    + a(R(-1) + c - 2b)) / 2,
/// with the undefined symbol A_n read as H_n. The corrected form replaces
/// the product term by 2R(n)(R(n-1)+R(n+1)) and the trailing constant by
/// b(b-c) - ac; the single product-term edit alone is still off by a
/// seed-dependent constant (see the errata notes).
IdentityValue adjacent_product_sum(const RecurrenceSpec& spec, long n, Variant v);

/// M_n = sum_{m=1..n} sum_{k=1..m} (term k)^2.
/// Tribonacci as-printed keeps the displayed -R(n+1)(1 - 2R(n-1)) term;
/// corrected expands it to -R(n+1)^2 + 2R(n+1)R(n-1). Pell-Padovan uses
///   Z(n+1)^2 + 2Z(n)^2 + 2Z(n-1)^2 + Z(n-2)^2 + Z(n-3)^2
///   - Z(-2)^2 - Z(-1)^2 - b^2 - c^2 - 2a^2 + (n-1)(T - a^2)
/// with T per square_sum's variant.
IdentityValue prefix_square_double_sum(const RecurrenceSpec& spec, long n, Variant v);

// Window-based overloads used by grid runners to avoid regenerating terms.
Rat sum_general(const SequenceWindow& w, long n);
IdentityValue closed_sum(const SequenceWindow& w, long n, Variant v);
IdentityValue square_sum(const SequenceWindow& w, long n, Variant v);
IdentityValue lag2_product_sum(const SequenceWindow& w, long n, Variant v);
IdentityValue adjacent_product_sum(const SequenceWindow& w, long n, Variant v);
IdentityValue prefix_square_double_sum(const SequenceWindow& w, long n, Variant v);

}  // namespace seqmat

#endif
