#ifndef MISOID_STACKING_HPP
#define MISOID_STACKING_HPP

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "misoid/dataset.hpp"

namespace misoid {

/// Lag-stacked measurement matrix. Rows are variable blocks in dataset
/// order (output first), each block [var[k], var[k-1], ..., var[k-L]];
/// column j holds time index k = L + j.
struct StackedMatrix {
    Eigen::MatrixXd Z;
    std::size_t L = 0;
    std::vector<std::string> var_layout;  // one name per block

    std::size_t n_vars() const { return var_layout.size(); }
    std::size_t block() const { return L + 1; }
};

struct CovMatrix {
    Eigen::MatrixXd S;
    std::size_t n_samples = 0;
};

StackedMatrix stack_lagged(const Dataset& data, std::size_t L);

/// Stack two bare sequences (pseudo output first) — the per-channel SISO
/// sub-problem of the pipeline.
StackedMatrix stack_lagged_pair(std::span<const double> y_i,
                                std::span<const double> u_i, std::size_t L,
                                const std::string& yname = "y_i",
                                const std::string& uname = "u_i");

/// S = Z Z^T / ncols (divisor is the number of stacked samples N - L).
/// `center` subtracts each row's mean first. Warns to stderr when there are
/// fewer columns than rows.
CovMatrix sample_covariance(const StackedMatrix& Z, bool center = false);

/// Serial reference implementation; must agree bitwise with
/// sample_covariance for any thread count.
CovMatrix sample_covariance_serial(const StackedMatrix& Z, bool center = false);

/// V diag(lambda^-1/2) V^T from the symmetric eigendecomposition. Throws
/// when an eigenvalue falls below eig_floor * max eigenvalue, naming the
/// offending index.
Eigen::MatrixXd inv_sqrt_sym(const Eigen::MatrixXd& S, double eig_floor = 1e-10);

/// Block-diagonal assembly; every block must be square.
Eigen::MatrixXd direct_sum(const std::vector<Eigen::MatrixXd>& blocks);

}  // namespace misoid

#endif
