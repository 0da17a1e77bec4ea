#include "seqmat/structmat.hpp"

#include <string>

#include "json.hpp"

namespace seqmat {

std::string_view matrix_kind_string(MatrixKind k) {
    switch (k) {
        case MatrixKind::Circulant: return "circulant";
        case MatrixKind::RCirculant: return "r-circulant";
        case MatrixKind::LeftCirculant: return "left-circulant";
        case MatrixKind::SemiCirculant: return "semi-circulant";
        case MatrixKind::Hankel: return "hankel";
        case MatrixKind::Toeplitz: return "toeplitz";
        case MatrixKind::Dense: return "dense";
    }
    return "?";
}

MatrixKind matrix_kind_from_string(std::string_view s) {
    for (MatrixKind k : {MatrixKind::Circulant, MatrixKind::RCirculant, MatrixKind::LeftCirculant,
                         MatrixKind::SemiCirculant, MatrixKind::Hankel, MatrixKind::Toeplitz,
                         MatrixKind::Dense}) {
        if (matrix_kind_string(k) == s) return k;
    }
    throw Error(Errc::ParseError, "unknown matrix kind: '" + std::string(s) + "'");
}

StructuredMatrix StructuredMatrix::dense(long n, std::vector<Rat> entries) {
    return tagged(MatrixKind::Dense, n, std::move(entries));
}

StructuredMatrix StructuredMatrix::tagged(MatrixKind kind, long n, std::vector<Rat> entries,
                                          Rat scalar_r) {
    if (n <= 0 || entries.size() != static_cast<size_t>(n) * static_cast<size_t>(n))
        throw Error(Errc::DimensionMismatch, "entry count does not match order " +
                                                 std::to_string(n));
    StructuredMatrix m;
    m.n_ = n;
    m.kind_ = kind;
    m.scalar_r_ = std::move(scalar_r);
    m.entries_ = std::move(entries);
    return m;
}

StructuredMatrix r_circulant(std::span<const Rat> row, const Rat& scalar_r) {
    if (row.empty()) throw Error(Errc::EmptyRow, "r_circulant needs a nonempty generating row");
    long n = static_cast<long>(row.size());
    std::vector<Rat> e(static_cast<size_t>(n) * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            e[static_cast<size_t>(i * n + j)] =
                j >= i ? row[static_cast<size_t>(j - i)]
                       : Rat(scalar_r * row[static_cast<size_t>(n + j - i)]);
    MatrixKind kind = scalar_r == 1 ? MatrixKind::Circulant : MatrixKind::RCirculant;
    return StructuredMatrix::tagged(kind, n, std::move(e), scalar_r);
}

StructuredMatrix circulant(std::span<const Rat> row) {
    return r_circulant(row, Rat(1));
}

StructuredMatrix left_circulant(std::span<const Rat> row) {
    if (row.empty()) throw Error(Errc::EmptyRow, "left_circulant needs a nonempty row");
    long n = static_cast<long>(row.size());
    std::vector<Rat> e(static_cast<size_t>(n) * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            e[static_cast<size_t>(i * n + j)] = row[static_cast<size_t>((i + j) % n)];
    return StructuredMatrix::tagged(MatrixKind::LeftCirculant, n, std::move(e));
}

namespace {

class SeqView {
  public:
    SeqView(std::span<const Rat> seq, long first_index) : seq_(seq), first_(first_index) {}
    const Rat& at(long k) const {
        long off = k - first_;
        if (off < 0 || off >= static_cast<long>(seq_.size()))
            throw Error(Errc::MissingIndex,
                        "sequence does not supply index U(" + std::to_string(k) + ")");
        return seq_[static_cast<size_t>(off)];
    }

  private:
    std::span<const Rat> seq_;
    long first_;
};

}  // namespace

StructuredMatrix semi_circulant(std::span<const Rat> seq, long first_index, long n) {
    if (n <= 0) throw Error(Errc::Precondition, "order must be positive");
    SeqView u(seq, first_index);
    std::vector<Rat> e(static_cast<size_t>(n) * n, Rat(0));
    for (long i = 1; i <= n; ++i)
        for (long j = i; j <= n; ++j)
            e[static_cast<size_t>((i - 1) * n + (j - 1))] = u.at(j - i + 1);
    return StructuredMatrix::tagged(MatrixKind::SemiCirculant, n, std::move(e));
}

StructuredMatrix hankel(std::span<const Rat> seq, long first_index, long n) {
    if (n <= 0) throw Error(Errc::Precondition, "order must be positive");
    SeqView u(seq, first_index);
    std::vector<Rat> e(static_cast<size_t>(n) * n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j)
            e[static_cast<size_t>((i - 1) * n + (j - 1))] = u.at(i + j - 1);
    return StructuredMatrix::tagged(MatrixKind::Hankel, n, std::move(e));
}

StructuredMatrix toeplitz(std::span<const Rat> seq, long first_index, long n) {
    if (n <= 0) throw Error(Errc::Precondition, "order must be positive");
    SeqView u(seq, first_index);
    std::vector<Rat> e(static_cast<size_t>(n) * n);
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j)
            e[static_cast<size_t>((i - 1) * n + (j - 1))] = u.at(i - j);
    return StructuredMatrix::tagged(MatrixKind::Toeplitz, n, std::move(e));
}

StructuredMatrix hadamard(const StructuredMatrix& a, const StructuredMatrix& b) {
    if (a.order() != b.order())
        throw Error(Errc::DimensionMismatch, "hadamard needs equal dimensions");
    long n = a.order();
    std::vector<Rat> e(static_cast<size_t>(n) * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            e[static_cast<size_t>(i * n + j)] = a(i, j) * b(i, j);
    return StructuredMatrix::dense(n, std::move(e));
}

std::string matrix_to_json(const StructuredMatrix& m) {
    nlohmann::ordered_json j;
    j["n"] = m.order();
    j["kind"] = matrix_kind_string(m.kind());
    if (m.kind() == MatrixKind::RCirculant)
        j["scalar_r"] = rat_to_string(m.scalar_r());
    else
        j["scalar_r"] = nullptr;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (long i = 0; i < m.order(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (long j2 = 0; j2 < m.order(); ++j2) row.push_back(rat_to_string(m(i, j2)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j.dump();
}

StructuredMatrix matrix_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, std::string("bad matrix JSON: ") + e.what());
    }
    long n = j.at("n").get<long>();
    MatrixKind kind = matrix_kind_from_string(j.at("kind").get<std::string>());
    Rat scalar_r(1);
    if (j.contains("scalar_r") && !j.at("scalar_r").is_null())
        scalar_r = rat_from_string(j.at("scalar_r").get<std::string>());
    std::vector<Rat> e;
    e.reserve(static_cast<size_t>(n) * n);
    for (const auto& row : j.at("entries"))
        for (const auto& cell : row) e.push_back(rat_from_string(cell.get<std::string>()));
    return StructuredMatrix::tagged(kind, n, std::move(e), std::move(scalar_r));
}

}  // namespace seqmat
