#ifndef MISOID_TRANSFER_FUNCTION_HPP
#define MISOID_TRANSFER_FUNCTION_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "misoid/polynomial.hpp"

namespace misoid {

/// Rational discrete-time transfer function B(q^-1)/A(q^-1). The
/// denominator is normalized so its constant term is 1 at construction;
/// input-output delay is carried implicitly as leading zero numerator
/// coefficients.
class TransferFunction {
public:
    TransferFunction() : num_({1.0}), den_({1.0}) {}
    TransferFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    /// Number of leading zero numerator coefficients.
    std::size_t delay() const;

    bool is_identity() const;

private:
    Polynomial num_;
    Polynomial den_;
};

/// One flagged near-cancelling pole/zero pair of a non-minimal fit.
struct NearCancellation {
    std::complex<double> pole;
    std::complex<double> zero;
    double distance = 0.0;
};

struct PoleZeroSet {
    std::vector<std::complex<double>> poles;
    std::vector<std::complex<double>> zeros;
    double gain = 0.0;   // leading nonzero numerator coefficient
    std::size_t delay = 0;
    std::vector<NearCancellation> near_cancellations;

    /// gain * q^-delay * prod(1 - z_i q^-1) / prod(1 - p_i q^-1) at
    /// q^-1 = e^{-j omega}; must match the source TF's frequency response.
    std::complex<double> eval(double omega) const;
};

/// Pole-zero pairs with |p - z| < kPoleZeroTol * (1 + |p|) are flagged as
/// near-cancelling.
inline constexpr double kPoleZeroTol = 0.02;

/// y[k] = sum_j num_j u[k-j] - sum_{i>=1} den_i y[k-i], zero initial
/// conditions. Output length equals input length. Unstable filters are not
/// rejected.
std::vector<double> filter(const TransferFunction& tf, std::span<const double> u);

/// filter() applied to a unit impulse of length n.
std::vector<double> impulse_response(const TransferFunction& tf, std::size_t n);

/// num(e^{-j omega}) / den(e^{-j omega}).
std::complex<double> frequency_response(const TransferFunction& tf, double omega);

/// Poles and zeros in the q domain (roots of the reversed trimmed
/// polynomials); delay zeros at the origin are reported as the delay count.
PoleZeroSet pole_zero(const TransferFunction& tf);

/// All poles strictly inside the unit circle.
bool is_stable(const TransferFunction& tf);

/// Largest pole magnitude (0 for FIR).
double max_pole_magnitude(const TransferFunction& tf);

}  // namespace misoid

#endif
