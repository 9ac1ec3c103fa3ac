#ifndef MISOID_POLYNOMIAL_HPP
#define MISOID_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace misoid {

/// Polynomial in the delay operator: c0 + c1*q^-1 + ... + cn*q^-n,
/// coefficients stored in ascending powers of q^-1. Trailing explicit
/// zeros are allowed; trimmed() drops them.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<double> c) : coeffs_(c) {}
    explicit Polynomial(std::vector<double> c) : coeffs_(std::move(c)) {}

    const std::vector<double>& coeffs() const { return coeffs_; }
    std::vector<double>& coeffs() { return coeffs_; }

    bool empty() const { return coeffs_.empty(); }
    std::size_t size() const { return coeffs_.size(); }
    double operator[](std::size_t i) const { return coeffs_[i]; }

    /// Degree of the stored representation (index of last coefficient).
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    bool is_zero() const {
        for (double c : coeffs_) {
            if (c != 0.0) return false;
        }
        return true;
    }

    /// Copy with trailing zeros removed (constant 0 keeps one coefficient).
    Polynomial trimmed() const {
        std::vector<double> c = coeffs_;
        while (c.size() > 1 && c.back() == 0.0) c.pop_back();
        if (c.empty()) c.push_back(0.0);
        return Polynomial(c);
    }

    /// Evaluate with x substituted for q^-1 (Horner). p(0) == c0 exactly.
    std::complex<double> eval(std::complex<double> x) const {
        std::complex<double> v{0.0, 0.0};
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            v = v * x + coeffs_[i];
        }
        return v;
    }

    double eval(double x) const {
        double v = 0.0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            v = v * x + coeffs_[i];
        }
        return v;
    }

    Polynomial operator*(const Polynomial& o) const {
        if (coeffs_.empty() || o.coeffs_.empty()) return Polynomial{};
        std::vector<double> c(coeffs_.size() + o.coeffs_.size() - 1, 0.0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
                c[i + j] += coeffs_[i] * o.coeffs_[j];
            }
        }
        return Polynomial(c);
    }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<double> c(std::max(coeffs_.size(), o.coeffs_.size()), 0.0);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return Polynomial(c);
    }

    Polynomial operator*(double s) const {
        std::vector<double> c = coeffs_;
        for (double& v : c) v *= s;
        return Polynomial(c);
    }

private:
    std::vector<double> coeffs_;
};

/// Roots of c0 + c1*x + ... + cn*x^n via the companion-matrix eigenvalues
/// of the monic normalization. Degree 0 (or the zero polynomial) has none.
std::vector<std::complex<double>> polynomial_roots(const Polynomial& p);

}  // namespace misoid

#endif
