#include "misoid/transfer_function.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "misoid/errors.hpp"

namespace misoid {

std::vector<std::complex<double>> polynomial_roots(const Polynomial& p) {
    const Polynomial t = p.trimmed();
    const std::size_t n = t.degree();
    if (n == 0 || t.is_zero()) return {};

    // Companion matrix of the monic polynomial; eigenvalues are the roots.
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                                      static_cast<Eigen::Index>(n));
    const double lead = t[n];
    for (std::size_t i = 0; i < n; ++i) {
        companion(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(n - 1)) =
            -t[i] / lead;
        if (i + 1 < n) {
            companion(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
        }
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        roots[i] = es.eigenvalues()(static_cast<Eigen::Index>(i));
    }
    // Deterministic order: by real part, then imaginary part.
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

TransferFunction::TransferFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (num_.empty() || den_.empty()) {
        throw InputError("transfer function: empty coefficient list");
    }
    for (double c : num_.coeffs()) {
        if (!std::isfinite(c)) throw InputError("transfer function: non-finite numerator");
    }
    for (double c : den_.coeffs()) {
        if (!std::isfinite(c)) throw InputError("transfer function: non-finite denominator");
    }
    if (den_.is_zero()) {
        throw InputError("transfer function: denominator identically zero");
    }
    const double a0 = den_[0];
    if (a0 == 0.0) {
        throw InputError("transfer function: denominator constant term must be nonzero");
    }
    if (a0 != 1.0) {
        for (double& c : den_.coeffs()) c /= a0;
        for (double& c : num_.coeffs()) c /= a0;
    }
}

std::size_t TransferFunction::delay() const {
    std::size_t d = 0;
    while (d < num_.size() && num_[d] == 0.0) ++d;
    return d == num_.size() ? 0 : d;  // zero numerator: no meaningful delay
}

bool TransferFunction::is_identity() const {
    const Polynomial n = num_.trimmed();
    const Polynomial d = den_.trimmed();
    return n.degree() == 0 && d.degree() == 0 && n[0] == 1.0;
}

std::vector<double> filter(const TransferFunction& tf, std::span<const double> u) {
    if (u.empty()) throw InputError("filter: empty sequence");
    const auto& b = tf.num().coeffs();
    const auto& a = tf.den().coeffs();
    std::vector<double> y(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        double acc = 0.0;
        for (std::size_t j = 0; j < b.size() && j <= k; ++j) {
            acc += b[j] * u[k - j];
        }
        for (std::size_t i = 1; i < a.size() && i <= k; ++i) {
            acc -= a[i] * y[k - i];
        }
        y[k] = acc;
    }
    return y;
}

std::vector<double> impulse_response(const TransferFunction& tf, std::size_t n) {
    if (n == 0) throw InputError("impulse_response: length must be >= 1");
    std::vector<double> pulse(n, 0.0);
    pulse[0] = 1.0;
    return filter(tf, pulse);
}

std::complex<double> frequency_response(const TransferFunction& tf, double omega) {
    if (!std::isfinite(omega)) throw InputError("frequency_response: non-finite frequency");
    const std::complex<double> x = std::exp(std::complex<double>(0.0, -omega));
    const std::complex<double> den = tf.den().eval(x);
    double den_scale = 0.0;
    for (double c : tf.den().coeffs()) den_scale += std::abs(c);
    if (std::abs(den) < 1e-12 * den_scale) {
        throw IdentificationError("pole on unit circle at omega=" + std::to_string(omega));
    }
    return tf.num().eval(x) / den;
}

PoleZeroSet pole_zero(const TransferFunction& tf) {
    PoleZeroSet out;

    // Poles: roots of q^n * den(q^-1), i.e. the reversed trimmed denominator.
    const Polynomial den = tf.den().trimmed();
    std::vector<double> drev(den.coeffs().rbegin(), den.coeffs().rend());
    out.poles = polynomial_roots(Polynomial(drev));

    // Numerator: strip the delay (leading zeros), trim trailing zeros.
    const auto& nc = tf.num().coeffs();
    std::size_t d = 0;
    while (d < nc.size() && nc[d] == 0.0) ++d;
    if (d == nc.size()) {
        out.gain = 0.0;
        out.delay = 0;
        return out;  // zero numerator: no zeros, no poles worth pairing
    }
    out.delay = d;
    std::vector<double> sig(nc.begin() + static_cast<std::ptrdiff_t>(d), nc.end());
    while (sig.size() > 1 && sig.back() == 0.0) sig.pop_back();
    out.gain = sig.front();
    std::vector<double> nrev(sig.rbegin(), sig.rend());
    out.zeros = polynomial_roots(Polynomial(nrev));

    for (const auto& p : out.poles) {
        for (const auto& z : out.zeros) {
            const double dist = std::abs(p - z);
            if (dist < kPoleZeroTol * (1.0 + std::abs(p))) {
                out.near_cancellations.push_back({p, z, dist});
            }
        }
    }
    return out;
}

std::complex<double> PoleZeroSet::eval(double omega) const {
    const std::complex<double> x = std::exp(std::complex<double>(0.0, -omega));
    std::complex<double> v = gain * std::pow(x, static_cast<double>(delay));
    for (const auto& z : zeros) v *= (1.0 - z * x);
    for (const auto& p : poles) v /= (1.0 - p * x);
    return v;
}

bool is_stable(const TransferFunction& tf) {
    return max_pole_magnitude(tf) < 1.0;
}

double max_pole_magnitude(const TransferFunction& tf) {
    double m = 0.0;
    for (const auto& p : pole_zero(tf).poles) {
        m = std::max(m, std::abs(p));
    }
    return m;
}

}  // namespace misoid
