#include "misoid/stacking.hpp"

#include <cmath>
#include <iostream>
#include <string>

#include <Eigen/Eigenvalues>

#include "misoid/errors.hpp"
#include "misoid/parallel.hpp"

namespace misoid {

namespace {

void fill_block(Eigen::MatrixXd& Z, std::size_t block_row, std::span<const double> x,
                std::size_t L) {
    const std::size_t cols = x.size() - L;
    for (std::size_t lag = 0; lag <= L; ++lag) {
        const Eigen::Index r = static_cast<Eigen::Index>(block_row + lag);
        for (std::size_t j = 0; j < cols; ++j) {
            Z(r, static_cast<Eigen::Index>(j)) = x[L + j - lag];
        }
    }
}

}  // namespace

StackedMatrix stack_lagged(const Dataset& data, std::size_t L) {
    const std::size_t n = data.n();
    if (L >= n) {
        throw InputError("stack_lagged: lag order " + std::to_string(L) +
                         " needs more than " + std::to_string(n) + " samples");
    }
    const std::size_t nvars = data.n_vars();
    StackedMatrix out;
    out.L = L;
    out.var_layout.reserve(nvars);
    out.Z.resize(static_cast<Eigen::Index>(nvars * (L + 1)),
                 static_cast<Eigen::Index>(n - L));
    for (std::size_t m = 0; m < nvars; ++m) {
        out.var_layout.push_back(data.label(m));
        fill_block(out.Z, m * (L + 1), data.variable(m), L);
    }
    return out;
}

StackedMatrix stack_lagged_pair(std::span<const double> y_i, std::span<const double> u_i,
                                std::size_t L, const std::string& yname,
                                const std::string& uname) {
    if (y_i.size() != u_i.size()) throw InputError("stack_lagged_pair: length mismatch");
    if (L >= y_i.size()) throw InputError("stack_lagged_pair: lag order too large");
    StackedMatrix out;
    out.L = L;
    out.var_layout = {yname, uname};
    out.Z.resize(static_cast<Eigen::Index>(2 * (L + 1)),
                 static_cast<Eigen::Index>(y_i.size() - L));
    fill_block(out.Z, 0, y_i, L);
    fill_block(out.Z, L + 1, u_i, L);
    return out;
}

namespace {

Eigen::MatrixXd centered_copy(const Eigen::MatrixXd& Z) {
    Eigen::MatrixXd C = Z;
    for (Eigen::Index i = 0; i < C.rows(); ++i) {
        C.row(i).array() -= C.row(i).mean();
    }
    return C;
}

void check_cols(const StackedMatrix& Z) {
    if (Z.Z.cols() == 0) throw InputError("sample_covariance: zero columns");
    if (Z.Z.cols() < Z.Z.rows()) {
        std::cerr << "warning: covariance from " << Z.Z.cols() << " samples of "
                  << Z.Z.rows() << " stacked variables is rank deficient\n";
    }
}

}  // namespace

CovMatrix sample_covariance(const StackedMatrix& Z, bool center) {
    check_cols(Z);
    const Eigen::MatrixXd& M = Z.Z;
    CovMatrix out;
    out.n_samples = static_cast<std::size_t>(M.cols());
    const Eigen::MatrixXd G =
        center ? kernels::gram(centered_copy(M)) : kernels::gram(M);
    out.S = G / static_cast<double>(M.cols());
    return out;
}

CovMatrix sample_covariance_serial(const StackedMatrix& Z, bool center) {
    check_cols(Z);
    const Eigen::MatrixXd& M = Z.Z;
    CovMatrix out;
    out.n_samples = static_cast<std::size_t>(M.cols());
    const Eigen::MatrixXd G =
        center ? kernels::gram_serial(centered_copy(M)) : kernels::gram_serial(M);
    out.S = G / static_cast<double>(M.cols());
    return out;
}

Eigen::MatrixXd inv_sqrt_sym(const Eigen::MatrixXd& S, double eig_floor) {
    if (S.rows() != S.cols()) throw InputError("inv_sqrt_sym: matrix not square");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
    if (es.info() != Eigen::Success) {
        throw IdentificationError("inv_sqrt_sym: eigendecomposition failed");
    }
    const Eigen::VectorXd& lam = es.eigenvalues();  // ascending
    const double lam_max = lam(lam.size() - 1);
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        if (lam(i) <= eig_floor * lam_max || lam(i) <= 0.0) {
            throw IdentificationError("singular scaling matrix: eigenvalue " +
                                      std::to_string(i) + " = " + std::to_string(lam(i)) +
                                      " below floor");
        }
    }
    const Eigen::VectorXd w = lam.array().rsqrt();
    Eigen::MatrixXd R = es.eigenvectors() * w.asDiagonal() * es.eigenvectors().transpose();
    // Symmetrize away round-off.
    return 0.5 * (R + R.transpose());
}

Eigen::MatrixXd direct_sum(const std::vector<Eigen::MatrixXd>& blocks) {
    Eigen::Index n = 0;
    for (const auto& b : blocks) {
        if (b.rows() != b.cols()) throw InputError("direct_sum: non-square block");
        n += b.rows();
    }
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
    Eigen::Index at = 0;
    for (const auto& b : blocks) {
        out.block(at, at, b.rows(), b.cols()) = b;
        at += b.rows();
    }
    return out;
}

}  // namespace misoid
