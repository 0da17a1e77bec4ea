#include "seqmat/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "json.hpp"

namespace seqmat {

namespace {

constexpr double kSlackRel = 1e-9;

Rat sq(const Rat& x) { return x * x; }
Int isq(const Int& x) { return x * x; }

Rat abs_rat(const Rat& v) { return v < 0 ? Rat(-v) : v; }

// Terms u(from..to) of the window as rationals.
std::vector<Rat> term_slice(const SequenceWindow& w, long from, long to) {
    std::vector<Rat> out;
    out.reserve(static_cast<size_t>(to - from + 1));
    for (long k = from; k <= to; ++k) out.emplace_back(w.at(k));
    return out;
}

// Direct sum of u(k)^2 over [from, to]; the independent route next to the
// lemma-substituted displays.
Rat square_sum_direct(const SequenceWindow& w, long from, long to) {
    Int acc(0);
    for (long k = from; k <= to; ++k) acc += isq(w.at(k));
    return rat(acc);
}

TheoremId pick(const RecurrenceSpec& spec, TheoremId trib, TheoremId pp) {
    if (spec.tribonacci_family()) return trib;
    if (spec.pell_padovan_family()) return pp;
    throw Error(Errc::UnsupportedFamily, "theorem needs a tribonacci or pell-padovan spec");
}

// Lemma-substituted display of sum_{k=0..n-1} u(k)^2. The tribonacci route
// has a single reading; the Pell-Padovan route depends on the constant T.
Rat lemma_square_sum_from_zero(const SequenceWindow& w, long n, Variant v) {
    if (w.spec.tribonacci_family()) {
        Int num = 4 * w.at(n - 1) * w.at(n) - 4 * w.at(0) * w.at(1) - isq(w.at(n) - w.at(n - 2)) +
                  isq(w.at(-2) + w.at(0)) + 4 * isq(w.at(0));
        return rat(num, Int(4));
    }
    return rat(Int(isq(w.at(n + 1)) - isq(w.at(n - 2)) - isq(w.at(n - 4)))) +
           pp_square_constant(w.spec, v);
}

Rat double_sum_or_zero(const SequenceWindow& w, long k, Variant v) {
    return k == 0 ? Rat(0) : prefix_square_double_sum(w, k, v).value;
}

struct BracketJudge {
    double lower, upper, observed;
    Verdict verdict;
    double margin;
};

BracketJudge judge_bracket(double lower, double upper, const SpectralResult& sp) {
    double slack = kSlackRel * std::max(1.0, upper);
    Verdict verdict;
    if (!sp.converged)
        verdict = Verdict::NonConverged;
    else if (lower - slack <= sp.estimate && sp.estimate <= upper + slack)
        verdict = Verdict::Holds;
    else
        verdict = Verdict::Violated;
    double margin = std::min(sp.estimate - lower, upper - sp.estimate);
    return {lower, upper, sp.estimate, verdict, margin};
}

SequenceWindow theorem_window(const RecurrenceSpec& spec, long n) {
    pick(spec, TheoremId::TribCirc, TheoremId::PpCirc);  // family gate
    if (n < 1) throw Error(Errc::Precondition, "matrix order must be >= 1");
    return window(spec, -5, 2 * n + 4);
}

}  // namespace

std::string_view theorem_id_string(TheoremId id) {
    switch (id) {
        case TheoremId::TribRcircBounds: return "TRIB_RCIRC_BOUNDS";
        case TheoremId::TribCirc: return "TRIB_CIRC";
        case TheoremId::TribSemicirc: return "TRIB_SEMICIRC";
        case TheoremId::TribHankelFrob: return "TRIB_HANKEL_FROB";
        case TheoremId::TribHankelSpec: return "TRIB_HANKEL_SPEC";
        case TheoremId::TribHankelOneInf: return "TRIB_HANKEL_ONEINF";
        case TheoremId::PpRcircBounds: return "PP_RCIRC_BOUNDS";
        case TheoremId::PpCirc: return "PP_CIRC";
        case TheoremId::PpSemicirc: return "PP_SEMICIRC";
        case TheoremId::PpHankelFrob: return "PP_HANKEL_FROB";
        case TheoremId::PpHankelSpec: return "PP_HANKEL_SPEC";
        case TheoremId::PpHankelOneInf: return "PP_HANKEL_ONEINF";
    }
    return "?";
}

TheoremId theorem_id_from_string(std::string_view s) {
    std::string valid;
    for (TheoremId id :
         {TheoremId::TribRcircBounds, TheoremId::TribCirc, TheoremId::TribSemicirc,
          TheoremId::TribHankelFrob, TheoremId::TribHankelSpec, TheoremId::TribHankelOneInf,
          TheoremId::PpRcircBounds, TheoremId::PpCirc, TheoremId::PpSemicirc,
          TheoremId::PpHankelFrob, TheoremId::PpHankelSpec, TheoremId::PpHankelOneInf}) {
        if (theorem_id_string(id) == s) return id;
        if (!valid.empty()) valid += ", ";
        valid += theorem_id_string(id);
    }
    throw Error(Errc::ParseError, "unknown theorem id '" + std::string(s) + "'; valid: " + valid);
}

std::string_view verdict_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "Holds";
        case Verdict::Violated: return "Violated";
        case Verdict::ExactMatch: return "ExactMatch";
        case Verdict::ExactMismatch: return "ExactMismatch";
        case Verdict::NonConverged: return "NonConverged";
        case Verdict::OutOfHypothesis: return "OutOfHypothesis";
    }
    return "?";
}

BoundCheck rcirc_bounds(const SequenceWindow& w, long n, const Rat& scalar_r,
                        const SpectralOptions& opt) {
    BoundCheck bc;
    bc.theorem_id = pick(w.spec, TheoremId::TribRcircBounds, TheoremId::PpRcircBounds);
    bc.family = w.spec.family;
    bc.spec = w.spec;
    bc.n = n;
    bc.scalar_r = scalar_r;

    std::vector<Rat> row = term_slice(w, 0, n - 1);
    StructuredMatrix a = r_circulant(row, scalar_r);

    Rat s_all = square_sum_direct(w, 0, n - 1);
    Rat s_tail = s_all - sq(row[0]);
    Rat r_abs = abs_rat(scalar_r);

    Rat lower_sq, upper_sq;
    if (r_abs >= 1) {
        lower_sq = s_all;
        upper_sq = (sq(row[0]) + sq(scalar_r) * s_tail) * (1 + s_tail);
    } else {
        lower_sq = sq(scalar_r) * s_all;
        upper_sq = n * s_all;
    }

    SpectralResult sp = spectral(a, opt.tol, opt.max_iters, opt.mode);
    auto judged = judge_bracket(scaled_sqrt_to_double(lower_sq), scaled_sqrt_to_double(upper_sq), sp);
    bc.lower = judged.lower;
    bc.upper = judged.upper;
    bc.observed = judged.observed;
    bc.verdict = judged.verdict;
    bc.margin = judged.margin;
    bc.spectral_converged = sp.converged;
    bc.spectral_iterations = sp.iterations;

    bc.lemma_agree_printed = lemma_square_sum_from_zero(w, n, Variant::AsPrinted) == s_all;
    bc.lemma_agree_corrected = lemma_square_sum_from_zero(w, n, Variant::Corrected) == s_all;
    return bc;
}

BoundCheck circulant_report(const SequenceWindow& w, long n, const SpectralOptions& opt) {
    BoundCheck bc;
    bc.theorem_id = pick(w.spec, TheoremId::TribCirc, TheoremId::PpCirc);
    bc.family = w.spec.family;
    bc.spec = w.spec;
    bc.n = n;

    std::vector<Rat> row = term_slice(w, 0, n - 1);
    StructuredMatrix a = circulant(row);

    Rat s_all = square_sum_direct(w, 0, n - 1);
    Rat s_tail = s_all - sq(row[0]);
    Rat e2 = frobenius_sq(a);
    bc.closed_form = n * s_all;
    bc.observed_exact = e2;
    bc.verdict = e2 == *bc.closed_form ? Verdict::ExactMatch : Verdict::ExactMismatch;

    SpectralResult sp = spectral(a, opt.tol, opt.max_iters, opt.mode);
    auto judged = judge_bracket(scaled_sqrt_to_double(s_all),
                                scaled_sqrt_to_double(s_all * (1 + s_tail)), sp);
    bc.bracket_lower = judged.lower;
    bc.bracket_upper = judged.upper;
    bc.observed = judged.observed;
    bc.bracket_verdict = judged.verdict;
    bc.margin = judged.margin;
    bc.spectral_converged = sp.converged;
    bc.spectral_iterations = sp.iterations;

    bc.lemma_agree_printed = lemma_square_sum_from_zero(w, n, Variant::AsPrinted) == s_all;
    bc.lemma_agree_corrected = lemma_square_sum_from_zero(w, n, Variant::Corrected) == s_all;
    return bc;
}

BoundCheck semicirculant_frobenius(const SequenceWindow& w, long n, Variant v) {
    BoundCheck bc;
    bc.theorem_id = pick(w.spec, TheoremId::TribSemicirc, TheoremId::PpSemicirc);
    bc.family = w.spec.family;
    bc.spec = w.spec;
    bc.n = n;
    bc.variant = v;

    std::vector<Rat> seq = term_slice(w, 1, n);
    StructuredMatrix a = semi_circulant(seq, 1, n);
    Rat e2 = frobenius_sq(a);
    bc.observed_exact = e2;
    bc.closed_form = prefix_square_double_sum(w, n, v).value;
    bc.verdict = e2 == *bc.closed_form ? Verdict::ExactMatch : Verdict::ExactMismatch;
    bc.margin = std::fabs(to_double(Rat(e2 - *bc.closed_form)));
    return bc;
}

BoundCheck hankel_frobenius(const SequenceWindow& w, long n, Variant v) {
    BoundCheck bc;
    bc.theorem_id = pick(w.spec, TheoremId::TribHankelFrob, TheoremId::PpHankelFrob);
    bc.family = w.spec.family;
    bc.spec = w.spec;
    bc.n = n;
    bc.variant = v;

    std::vector<Rat> seq = term_slice(w, 1, 2 * n - 1);
    StructuredMatrix a = hankel(seq, 1, n);
    Rat e2 = frobenius_sq(a);
    bc.observed_exact = e2;

    if (w.spec.tribonacci_family()) {
        bc.closed_form = double_sum_or_zero(w, 2 * n - 1, v) - 2 * double_sum_or_zero(w, n - 1, v);
    } else {
        const RecurrenceSpec& s = w.spec;
        Rat cap_s = rat(Int(isq(w.at(-2)) + isq(w.at(-1)) + isq(s.b) + isq(s.c) + 2 * isq(s.a))) +
                    2 * (pp_square_constant(s, v) - rat(Int(isq(s.a))));
        Int body = isq(w.at(2 * n)) + 2 * isq(w.at(2 * n - 1)) + 2 * isq(w.at(2 * n - 2)) +
                   isq(w.at(2 * n - 3)) + isq(w.at(2 * n - 4)) - 2 * isq(w.at(n)) -
                   4 * isq(w.at(n - 1)) - 4 * isq(w.at(n - 2)) - 2 * isq(w.at(n - 3)) -
                   2 * isq(w.at(n - 4));
        bc.closed_form = rat(body) + cap_s;
    }
    bc.verdict = e2 == *bc.closed_form ? Verdict::ExactMatch : Verdict::ExactMismatch;
    bc.margin = std::fabs(to_double(Rat(e2 - *bc.closed_form)));
    return bc;
}

BoundCheck hankel_spectral_bounds(const SequenceWindow& w, long n, Variant v,
                                  const SpectralOptions& opt) {
    BoundCheck bc;
    bc.theorem_id = pick(w.spec, TheoremId::TribHankelSpec, TheoremId::PpHankelSpec);
    bc.family = w.spec.family;
    bc.spec = w.spec;
    bc.n = n;
    bc.variant = v;

    std::vector<Rat> seq = term_slice(w, 1, 2 * n - 1);
    StructuredMatrix a = hankel(seq, 1, n);
    Rat e2 = frobenius_sq(a);
    double lower = scaled_sqrt_to_double(e2 / n);

    double upper;
    if (v == Variant::AsPrinted) {
        Rat h_n = square_sum_direct(w, 1, n);
        Rat h_tail = h_n - sq(Rat(w.at(1)));
        upper = scaled_sqrt_to_double(h_n * (1 + h_tail));
    } else {
        auto [m, nn] = hankel_split(seq, n);
        Rat r1sq = row_col_length_sq(m).first;
        Rat c1sq = row_col_length_sq(nn).second;
        upper = scaled_sqrt_to_double(r1sq * c1sq);
    }

    SpectralResult sp = spectral(a, opt.tol, opt.max_iters, opt.mode);
    auto judged = judge_bracket(lower, upper, sp);
    bc.lower = judged.lower;
    bc.upper = judged.upper;
    bc.observed = judged.observed;
    bc.verdict = judged.verdict;
    bc.margin = judged.margin;
    bc.spectral_converged = sp.converged;
    bc.spectral_iterations = sp.iterations;

    if (w.spec.pell_padovan_family()) {
        Rat h_n = square_sum_direct(w, 1, n);
        bc.lemma_agree_printed = square_sum(w, n, Variant::AsPrinted).value == h_n;
        bc.lemma_agree_corrected = square_sum(w, n, Variant::Corrected).value == h_n;
    }
    return bc;
}

BoundCheck hankel_one_inf(const SequenceWindow& w, long n) {
    BoundCheck bc;
    bc.theorem_id = pick(w.spec, TheoremId::TribHankelOneInf, TheoremId::PpHankelOneInf);
    bc.family = w.spec.family;
    bc.spec = w.spec;
    bc.n = n;

    bool negative = false;
    for (long k = 1; k <= 2 * n - 1 && !negative; ++k)
        if (w.at(k) < 0) negative = true;

    std::vector<Rat> seq = term_slice(w, 1, 2 * n - 1);
    StructuredMatrix a = hankel(seq, 1, n);
    auto [one, inf] = op_one_inf(a);
    bc.observed_exact = one;
    bc.observed_exact_inf = inf;

    if (w.spec.tribonacci_family())
        bc.closed_form = rat(Int(w.at(2 * n + 2) - w.at(2 * n) - w.at(n + 2) + w.at(n)), Int(2));
    else
        bc.closed_form = rat(Int(w.at(2 * n + 4) - w.at(n + 4)));

    if (negative) {
        bc.verdict = Verdict::OutOfHypothesis;
        return bc;
    }
    bc.verdict = (one == *bc.closed_form && inf == *bc.closed_form) ? Verdict::ExactMatch
                                                                    : Verdict::ExactMismatch;
    bc.margin = std::fabs(to_double(Rat(one - *bc.closed_form)));
    return bc;
}

BoundCheck rcirc_bounds(const RecurrenceSpec& spec, long n, const Rat& scalar_r,
                        const SpectralOptions& opt) {
    return rcirc_bounds(theorem_window(spec, n), n, scalar_r, opt);
}

BoundCheck circulant_report(const RecurrenceSpec& spec, long n, const SpectralOptions& opt) {
    return circulant_report(theorem_window(spec, n), n, opt);
}

BoundCheck semicirculant_frobenius(const RecurrenceSpec& spec, long n, Variant v) {
    return semicirculant_frobenius(theorem_window(spec, n), n, v);
}

BoundCheck hankel_frobenius(const RecurrenceSpec& spec, long n, Variant v) {
    return hankel_frobenius(theorem_window(spec, n), n, v);
}

BoundCheck hankel_spectral_bounds(const RecurrenceSpec& spec, long n, Variant v,
                                  const SpectralOptions& opt) {
    return hankel_spectral_bounds(theorem_window(spec, n), n, v, opt);
}

BoundCheck hankel_one_inf(const RecurrenceSpec& spec, long n) {
    return hankel_one_inf(theorem_window(spec, n), n);
}

std::pair<StructuredMatrix, StructuredMatrix> rcirc_split_large(std::span<const Rat> row,
                                                                const Rat& scalar_r) {
    if (row.empty()) throw Error(Errc::EmptyRow, "split needs a nonempty row");
    long n = static_cast<long>(row.size());
    std::vector<Rat> c(static_cast<size_t>(n) * n, Rat(1));
    std::vector<Rat> d(static_cast<size_t>(n) * n, Rat(1));
    for (long i = 0; i < n; ++i) {
        c[static_cast<size_t>(i * n + i)] = row[0];
        for (long j = 0; j < i; ++j)
            c[static_cast<size_t>(i * n + j)] = scalar_r * row[static_cast<size_t>(n + j - i)];
        for (long j = i + 1; j < n; ++j)
            d[static_cast<size_t>(i * n + j)] = row[static_cast<size_t>(j - i)];
    }
    return {StructuredMatrix::dense(n, std::move(c)), StructuredMatrix::dense(n, std::move(d))};
}

std::pair<StructuredMatrix, StructuredMatrix> rcirc_split_small(std::span<const Rat> row,
                                                                const Rat& scalar_r) {
    if (row.empty()) throw Error(Errc::EmptyRow, "split needs a nonempty row");
    long n = static_cast<long>(row.size());
    std::vector<Rat> c(static_cast<size_t>(n) * n, Rat(1));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < i; ++j) c[static_cast<size_t>(i * n + j)] = scalar_r;
    return {StructuredMatrix::dense(n, std::move(c)), circulant(row)};
}

std::pair<StructuredMatrix, StructuredMatrix> circulant_split(std::span<const Rat> row) {
    if (row.empty()) throw Error(Errc::EmptyRow, "split needs a nonempty row");
    long n = static_cast<long>(row.size());
    std::vector<Rat> b(static_cast<size_t>(n) * n, Rat(1));
    std::vector<Rat> c(static_cast<size_t>(n) * n, Rat(1));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const Rat& value = row[static_cast<size_t>(((j - i) % n + n) % n)];
            if (i >= j)
                b[static_cast<size_t>(i * n + j)] = value;
            else
                c[static_cast<size_t>(i * n + j)] = value;
        }
    return {StructuredMatrix::dense(n, std::move(b)), StructuredMatrix::dense(n, std::move(c))};
}

std::pair<StructuredMatrix, StructuredMatrix> hankel_split(std::span<const Rat> seq, long n) {
    if (n < 1) throw Error(Errc::Precondition, "order must be >= 1");
    if (static_cast<long>(seq.size()) < 2 * n - 1)
        throw Error(Errc::MissingIndex, "hankel split needs 2n-1 sequence values");
    std::vector<Rat> m(static_cast<size_t>(n) * n, Rat(1));
    std::vector<Rat> nn(static_cast<size_t>(n) * n, Rat(1));
    for (long i = 1; i <= n; ++i)
        for (long j = 1; j <= n; ++j) {
            const Rat& value = seq[static_cast<size_t>(i + j - 2)];
            if (i <= j)
                m[static_cast<size_t>((i - 1) * n + (j - 1))] = value;
            else
                nn[static_cast<size_t>((i - 1) * n + (j - 1))] = value;
        }
    return {StructuredMatrix::dense(n, std::move(m)), StructuredMatrix::dense(n, std::move(nn))};
}

std::string bound_check_to_json(const BoundCheck& bc) {
    nlohmann::ordered_json j;
    j["theorem_id"] = std::string(theorem_id_string(bc.theorem_id));
    j["family"] = std::string(family_name(bc.family));
    j["seeds"] = {bc.spec.a.get_str(), bc.spec.b.get_str(), bc.spec.c.get_str()};
    j["n"] = bc.n;
    j["scalar_r"] = bc.scalar_r ? nlohmann::ordered_json(rat_to_string(*bc.scalar_r))
                                : nlohmann::ordered_json(nullptr);
    j["variant"] = bc.variant ? nlohmann::ordered_json(std::string(variant_name(*bc.variant)))
                              : nlohmann::ordered_json(nullptr);
    auto put_double = [&](const char* key, const std::optional<double>& v) {
        j[key] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    auto put_rat = [&](const char* key, const std::optional<Rat>& v) {
        j[key] = v ? nlohmann::ordered_json(rat_to_string(*v)) : nlohmann::ordered_json(nullptr);
    };
    put_double("lower", bc.lower);
    put_double("upper", bc.upper);
    put_rat("closed_form", bc.closed_form);
    put_rat("observed_exact", bc.observed_exact);
    put_rat("observed_exact_inf", bc.observed_exact_inf);
    put_double("observed", bc.observed);
    j["verdict"] = std::string(verdict_string(bc.verdict));
    j["margin"] = bc.margin;
    put_double("bracket_lower", bc.bracket_lower);
    put_double("bracket_upper", bc.bracket_upper);
    j["bracket_verdict"] = bc.bracket_verdict
                               ? nlohmann::ordered_json(std::string(verdict_string(*bc.bracket_verdict)))
                               : nlohmann::ordered_json(nullptr);
    auto put_bool = [&](const char* key, const std::optional<bool>& v) {
        j[key] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    };
    put_bool("lemma_agree_printed", bc.lemma_agree_printed);
    put_bool("lemma_agree_corrected", bc.lemma_agree_corrected);
    j["spectral_converged"] = bc.spectral_converged;
    j["spectral_iterations"] = bc.spectral_iterations;
    return j.dump();
}

}  // namespace seqmat
