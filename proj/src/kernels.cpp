#include "seqmat/kernels.hpp"

namespace seqmat::kernels {

void matvec_serial(std::span<const double> m, long n, std::span<const double> v,
                   std::span<double> out) {
    for (long i = 0; i < n; ++i) {
        double acc = 0.0;
        const double* row = m.data() + i * n;
        for (long j = 0; j < n; ++j) acc += row[j] * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = acc;
    }
}

void matvec_omp(std::span<const double> m, long n, std::span<const double> v,
                std::span<double> out) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        double acc = 0.0;
        const double* row = m.data() + i * n;
        for (long j = 0; j < n; ++j) acc += row[j] * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = acc;
    }
}

void matvec(std::span<const double> m, long n, std::span<const double> v, std::span<double> out,
            ExecMode mode) {
    if (mode == ExecMode::Parallel)
        matvec_omp(m, n, v, out);
    else
        matvec_serial(m, n, v, out);
}

void matvec_t_serial(std::span<const double> m, long n, std::span<const double> v,
                     std::span<double> out) {
    for (long j = 0; j < n; ++j) {
        double acc = 0.0;
        for (long i = 0; i < n; ++i) acc += m[static_cast<size_t>(i * n + j)] * v[static_cast<size_t>(i)];
        out[static_cast<size_t>(j)] = acc;
    }
}

void matvec_t_omp(std::span<const double> m, long n, std::span<const double> v,
                  std::span<double> out) {
#pragma omp parallel for schedule(static)
    for (long j = 0; j < n; ++j) {
        double acc = 0.0;
        for (long i = 0; i < n; ++i) acc += m[static_cast<size_t>(i * n + j)] * v[static_cast<size_t>(i)];
        out[static_cast<size_t>(j)] = acc;
    }
}

void matvec_t(std::span<const double> m, long n, std::span<const double> v, std::span<double> out,
              ExecMode mode) {
    if (mode == ExecMode::Parallel)
        matvec_t_omp(m, n, v, out);
    else
        matvec_t_serial(m, n, v, out);
}

double norm2sq(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return acc;
}

}  // namespace seqmat::kernels
