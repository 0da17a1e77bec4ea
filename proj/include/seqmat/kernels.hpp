#ifndef SEQMAT_KERNELS_HPP
#define SEQMAT_KERNELS_HPP

#include <span>

namespace seqmat {

enum class ExecMode { Serial, Parallel };

namespace kernels {

// Dense double kernels for the spectral estimator. Parallel variants split
// work across output rows only; each row reduction stays sequential, so
// serial and parallel runs produce bitwise-identical results.

void matvec_serial(std::span<const double> m, long n, std::span<const double> v,
                   std::span<double> out);
void matvec_omp(std::span<const double> m, long n, std::span<const double> v,
                std::span<double> out);
void matvec(std::span<const double> m, long n, std::span<const double> v, std::span<double> out,
            ExecMode mode);

// out = m^T * v.
void matvec_t_serial(std::span<const double> m, long n, std::span<const double> v,
                     std::span<double> out);
void matvec_t_omp(std::span<const double> m, long n, std::span<const double> v,
                  std::span<double> out);
void matvec_t(std::span<const double> m, long n, std::span<const double> v, std::span<double> out,
              ExecMode mode);

double norm2sq(std::span<const double> v);

}  // namespace kernels
}  // namespace seqmat

#endif
