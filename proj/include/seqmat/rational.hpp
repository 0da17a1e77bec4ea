#ifndef SEQMAT_RATIONAL_HPP
#define SEQMAT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace seqmat {

using Int = mpz_class;
using Rat = mpq_class;

enum class Errc {
    BackwardNotExact,
    IndexCapExceeded,
    DegenerateDenominator,
    UnsupportedFamily,
    EmptyRow,
    MissingIndex,
    DimensionMismatch,
    IncompleteCoverage,
    Precondition,
    ParseError,
};

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

inline Rat rat(long num, long den = 1) {
    Rat v{Int(num), Int(den)};
    v.canonicalize();
    return v;
}

inline Rat rat(const Int& num, const Int& den = Int(1)) {
    Rat v(num, den);
    v.canonicalize();
    return v;
}

/// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& v);

/// Accepts "p" or "p/q"; the result is canonicalized.
Rat rat_from_string(const std::string& s);

double to_double(const Rat& v);

bool is_integer(const Rat& v);

}  // namespace seqmat

#endif
