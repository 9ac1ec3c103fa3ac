#ifndef MISOID_NOISE_MODEL_HPP
#define MISOID_NOISE_MODEL_HPP

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "misoid/transfer_function.hpp"

namespace misoid {

/// Structured covariance of the stacked measurement errors.
///  - PerVariableDiagonal: M unknown variances, each replicated L+1 times
///    per variable block.
///  - PseudoOutput: a known Toeplitz block R for the colored pseudo-output
///    error, direct-summed with sigma2_u * I for the input block.
struct NoiseModel {
    enum class Structure { PerVariableDiagonal, PseudoOutput };

    Structure structure = Structure::PerVariableDiagonal;
    std::size_t block = 1;           // L + 1
    std::vector<double> variances;   // per-variable (diagonal structure)
    Eigen::MatrixXd R;               // pseudo-output Toeplitz block
    double sigma2_u = 0.0;           // pseudo-output input variance
    Eigen::MatrixXd Sigma;           // materialized stacked covariance

    static NoiseModel per_variable(const std::vector<double>& theta, std::size_t L);
    static NoiseModel pseudo_output(const Eigen::MatrixXd& R, double sigma2_u,
                                    std::size_t L);

    Eigen::Index dim() const { return Sigma.rows(); }

    /// Sigma^{-1/2}; same floor semantics as inv_sqrt_sym (diagonal
    /// structures take an exact fast path).
    Eigen::MatrixXd inv_sqrt(double eig_floor = 1e-10) const;
};

/// Eigenvalues of the scaled covariance plus the order bookkeeping.
struct EigenDiagnostics {
    Eigen::VectorXd eigenvalues;  // descending
    std::size_t d = 0;            // unity count; 0 until counted
    std::size_t L = 0;
    std::size_t eta = 0;          // L - d + 1 once d is known
    Eigen::MatrixXd eigvecs;      // columns aligned with eigenvalues (internal)
};

/// y[k] + a1 y[k-1] + ... + a_eta y[k-eta]
///     = sum_i (b_i0 u_i[k] + ... + b_i,eta u_i[k-eta]).
struct DifferenceEquation {
    std::vector<double> a;               // a[0] == 1
    std::vector<std::vector<double>> b;  // one list per input
    std::size_t eta = 0;
    std::vector<std::string> var_layout;

    /// G_i = B_i / A over the common denominator, no cancellation.
    std::vector<TransferFunction> channel_tfs() const;
};

}  // namespace misoid

#endif
