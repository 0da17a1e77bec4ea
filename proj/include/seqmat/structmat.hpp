#ifndef SEQMAT_STRUCTMAT_HPP
#define SEQMAT_STRUCTMAT_HPP

#include <span>
#include <string_view>
#include <vector>

#include "seqmat/rational.hpp"

namespace seqmat {

enum class MatrixKind {
    Circulant,
    RCirculant,
    LeftCirculant,
    SemiCirculant,
    Hankel,
    Toeplitz,
    Dense,
};

std::string_view matrix_kind_string(MatrixKind k);
MatrixKind matrix_kind_from_string(std::string_view s);

/// Dense square matrix of exact rationals tagged with its construction kind.
/// The kind is metadata for validation and serialization; storage is always
/// a row-major n*n array. Indices are 0-based here; the 1-based conventions
/// of the construction patterns are translated at the constructor boundary.
class StructuredMatrix {
  public:
    StructuredMatrix() = default;
    static StructuredMatrix dense(long n, std::vector<Rat> entries);
    static StructuredMatrix tagged(MatrixKind kind, long n, std::vector<Rat> entries,
                                   Rat scalar_r = Rat(1));

    long order() const { return n_; }
    MatrixKind kind() const { return kind_; }
    const Rat& scalar_r() const { return scalar_r_; }

    const Rat& operator()(long i, long j) const {
        return entries_[static_cast<size_t>(i * n_ + j)];
    }
    std::span<const Rat> entries() const { return entries_; }

    bool operator==(const StructuredMatrix& other) const {
        return n_ == other.n_ && entries_ == other.entries_;
    }

  private:
    long n_ = 0;
    MatrixKind kind_ = MatrixKind::Dense;
    Rat scalar_r_ = Rat(1);
    std::vector<Rat> entries_;
};

/// entry(i,j) = row[j-i] for j >= i, scalar_r * row[n+j-i] for j < i.
/// scalar_r = 1 degrades the kind tag to Circulant.
StructuredMatrix r_circulant(std::span<const Rat> row, const Rat& scalar_r);

StructuredMatrix circulant(std::span<const Rat> row);

/// entry(i,j) = row[(i+j) mod n]: each row is the previous one shifted left.
StructuredMatrix left_circulant(std::span<const Rat> row);

/// Sequence-pattern constructors. `seq` lists U(first_index), U(first_index+1), ...
/// and must cover every index the pattern touches (1-based i,j):
///   semi-circulant: a(i,j) = U(j-i+1) for i <= j, 0 below; needs U(1..n).
///   hankel:         h(i,j) = U(i+j-1); needs U(1..2n-1).
///   toeplitz:       a(i,j) = U(i-j);   needs U(-(n-1)..n-1).
/// A missing index throws Error(MissingIndex) naming the first absent one.
StructuredMatrix semi_circulant(std::span<const Rat> seq, long first_index, long n);
StructuredMatrix hankel(std::span<const Rat> seq, long first_index, long n);
StructuredMatrix toeplitz(std::span<const Rat> seq, long first_index, long n);

/// Entrywise product; result kind is Dense.
StructuredMatrix hadamard(const StructuredMatrix& a, const StructuredMatrix& b);

/// JSON object {n, kind, scalar_r, entries} with entries as "p/q" strings.
std::string matrix_to_json(const StructuredMatrix& m);
StructuredMatrix matrix_from_json(const std::string& text);

}  // namespace seqmat

#endif
