#ifndef MISOID_PARALLEL_HPP
#define MISOID_PARALLEL_HPP

#include <cstddef>
#include <utility>

#include <Eigen/Dense>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace misoid {
namespace kernels {

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Run fn(i) for i in [0, n). Iterations must be independent; each result
/// is written to its own slot, so the outcome is identical for any thread
/// count, including the serial build.
template <typename Fn>
void parallel_for(std::ptrdiff_t n, Fn&& fn) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        fn(i);
    }
#else
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        fn(i);
    }
#endif
}

/// Serial reference for the Gram product Z * Z^T. Plain row-dot-row loops;
/// the parallel kernel must reproduce it bit for bit.
inline Eigen::MatrixXd gram_serial(const Eigen::MatrixXd& Z) {
    const Eigen::Index m = Z.rows();
    Eigen::MatrixXd S(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j <= i; ++j) {
            double acc = 0.0;
            for (Eigen::Index k = 0; k < Z.cols(); ++k) {
                acc += Z(i, k) * Z(j, k);
            }
            S(i, j) = acc;
            S(j, i) = acc;
        }
    }
    return S;
}

/// OpenMP Gram product Z * Z^T. Parallel over output entries; every entry is
/// a single serial dot product, so results are bitwise identical to
/// gram_serial for any thread count.
inline Eigen::MatrixXd gram(const Eigen::MatrixXd& Z) {
    const Eigen::Index m = Z.rows();
    Eigen::MatrixXd S(m, m);
    const std::ptrdiff_t pairs = static_cast<std::ptrdiff_t>(m) * (m + 1) / 2;
    parallel_for(pairs, [&](std::ptrdiff_t p) {
        // unrank p -> (i, j), j <= i, row-wise over the lower triangle
        Eigen::Index i = 0;
        std::ptrdiff_t acc_rows = 0;
        while (acc_rows + i + 1 <= p) {
            acc_rows += i + 1;
            ++i;
        }
        const Eigen::Index j = static_cast<Eigen::Index>(p - acc_rows);
        double acc = 0.0;
        for (Eigen::Index k = 0; k < Z.cols(); ++k) {
            acc += Z(i, k) * Z(j, k);
        }
        S(i, j) = acc;
        S(j, i) = acc;
    });
    return S;
}

}  // namespace kernels
}  // namespace misoid

#endif
