#include "seqmat/norms.hpp"

#include <cmath>
#include <vector>

#include "json.hpp"

namespace seqmat {

namespace {

Rat abs_rat(const Rat& v) { return v < 0 ? Rat(-v) : v; }

// Scaled double image of the matrix: entries divided (exactly) by max_abs,
// so every value lands in [-1, 1] before conversion.
std::vector<double> scaled_entries(const StructuredMatrix& a, const Rat& ma) {
    long n = a.order();
    std::vector<double> s(static_cast<size_t>(n) * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            s[static_cast<size_t>(i * n + j)] = to_double(Rat(a(i, j) / ma));
    return s;
}

}  // namespace

double scaled_sqrt_to_double(const Rat& value_sq) {
    if (value_sq < 0) throw Error(Errc::Precondition, "sqrt of a negative rational");
    if (value_sq == 0) return 0.0;
    mpf_class f(0, 256);
    mpf_set_q(f.get_mpf_t(), value_sq.get_mpq_t());
    mpf_class root(0, 256);
    mpf_sqrt(root.get_mpf_t(), f.get_mpf_t());
    return root.get_d();
}

Rat frobenius_sq(const StructuredMatrix& a) {
    Rat acc(0);
    for (const Rat& v : a.entries()) acc += v * v;
    return acc;
}

double entrywise_lp(const StructuredMatrix& a, int p) {
    if (p < 1) throw Error(Errc::Precondition, "entrywise lp norm needs p >= 1");
    Rat ma = max_abs(a);
    if (ma == 0) return 0.0;
    double acc = 0.0;
    for (const Rat& v : a.entries()) acc += std::pow(std::fabs(to_double(Rat(v / ma))), p);
    return to_double(ma) * std::pow(acc, 1.0 / p);
}

Rat max_abs(const StructuredMatrix& a) {
    Rat best(0);
    for (const Rat& v : a.entries()) {
        Rat m = abs_rat(v);
        if (m > best) best = m;
    }
    return best;
}

SpectralResult spectral(const StructuredMatrix& a, double tol, long max_iters, ExecMode mode) {
    if (tol <= 0) throw Error(Errc::Precondition, "spectral tolerance must be positive");
    long n = a.order();
    Rat ma = max_abs(a);
    if (ma == 0) return {0.0, 0.0, 0, true};

    std::vector<double> s = scaled_entries(a, ma);
    double scale = to_double(ma);

    std::vector<double> v(static_cast<size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> u(static_cast<size_t>(n));
    std::vector<double> w(static_cast<size_t>(n));

    kernels::matvec(s, n, v, u, mode);
    double rho = kernels::norm2sq(u);
    if (rho == 0.0) {
        // All-ones start lies in the nullspace; restart from e1.
        std::fill(v.begin(), v.end(), 0.0);
        v[0] = 1.0;
        kernels::matvec(s, n, v, u, mode);
        rho = kernels::norm2sq(u);
        if (rho == 0.0) return {0.0, 0.0, 0, false};
    }

    long iterations = 1;
    bool converged = false;
    while (iterations < max_iters) {
        kernels::matvec_t(s, n, u, w, mode);  // w = Gram * v
        double wn = std::sqrt(kernels::norm2sq(w));
        if (wn == 0.0) break;
        for (size_t i = 0; i < v.size(); ++i) v[i] = w[i] / wn;
        kernels::matvec(s, n, v, u, mode);
        double rho_next = kernels::norm2sq(u);
        ++iterations;
        if (std::fabs(rho_next - rho) <= tol * std::max(rho_next, rho)) {
            rho = rho_next;
            converged = true;
            break;
        }
        rho = rho_next;
    }

    // The Rayleigh quotient of the Gram product at unit v equals
    // ||A~ v||^2, so the estimate and the certified witness coincide.
    double value = std::sqrt(rho) * scale;
    return {value, value, iterations, converged};
}

std::pair<Rat, Rat> row_col_length_sq(const StructuredMatrix& a) {
    long n = a.order();
    Rat best_row(0), best_col(0);
    for (long i = 0; i < n; ++i) {
        Rat acc(0);
        for (long j = 0; j < n; ++j) acc += a(i, j) * a(i, j);
        if (acc > best_row) best_row = acc;
    }
    for (long j = 0; j < n; ++j) {
        Rat acc(0);
        for (long i = 0; i < n; ++i) acc += a(i, j) * a(i, j);
        if (acc > best_col) best_col = acc;
    }
    return {best_row, best_col};
}

std::pair<double, double> row_col_length(const StructuredMatrix& a) {
    auto [rsq, csq] = row_col_length_sq(a);
    return {scaled_sqrt_to_double(rsq), scaled_sqrt_to_double(csq)};
}

std::pair<Rat, Rat> op_one_inf(const StructuredMatrix& a) {
    long n = a.order();
    Rat one(0), inf(0);
    for (long j = 0; j < n; ++j) {
        Rat acc(0);
        for (long i = 0; i < n; ++i) acc += abs_rat(a(i, j));
        if (acc > one) one = acc;
    }
    for (long i = 0; i < n; ++i) {
        Rat acc(0);
        for (long j = 0; j < n; ++j) acc += abs_rat(a(i, j));
        if (acc > inf) inf = acc;
    }
    return {one, inf};
}

HadamardBound hadamard_bound_check(const StructuredMatrix& a, const StructuredMatrix& b,
                                   ExecMode mode) {
    if (a.order() != b.order())
        throw Error(Errc::DimensionMismatch, "hadamard_bound_check needs equal dimensions");
    StructuredMatrix c = hadamard(a, b);
    double lhs = spectral(c, 1e-12, 100000, mode).lower_witness;
    double rhs = row_col_length(a).first * row_col_length(b).second;
    return {lhs, rhs, lhs <= rhs * (1.0 + 1e-9)};
}

NormSummary norm_summary(const StructuredMatrix& a, ExecMode mode) {
    NormSummary s;
    s.frobenius_sq = frobenius_sq(a);
    s.frobenius = scaled_sqrt_to_double(s.frobenius_sq);
    SpectralResult sp = spectral(a, 1e-12, 100000, mode);
    s.spectral_estimate = sp.estimate;
    s.spectral_lower_witness = sp.lower_witness;
    s.max_abs = max_abs(a);
    auto [one, inf] = op_one_inf(a);
    s.op_one = one;
    s.op_inf = inf;
    auto [r1, c1] = row_col_length(a);
    s.r1 = r1;
    s.c1 = c1;
    return s;
}

std::string norm_summary_to_json(const NormSummary& s) {
    nlohmann::ordered_json j;
    j["frobenius_sq"] = rat_to_string(s.frobenius_sq);
    j["frobenius"] = s.frobenius;
    j["spectral_estimate"] = s.spectral_estimate;
    j["spectral_lower_witness"] = s.spectral_lower_witness;
    j["max_abs"] = rat_to_string(s.max_abs);
    j["op_one"] = rat_to_string(s.op_one);
    j["op_inf"] = rat_to_string(s.op_inf);
    j["r1"] = s.r1;
    j["c1"] = s.c1;
    return j.dump();
}

}  // namespace seqmat
