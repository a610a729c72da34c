#pragma once

#include <span>
#include <vector>

namespace hankelflow {

/// Dense real polynomial, coeffs()[k] multiplies x^k. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs);

  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double coeff(std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0.0; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  double operator()(double x) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator*=(double s);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial p, double s) { return p *= s; }
  friend Polynomial operator*(double s, Polynomial p) { return p *= s; }

  bool operator==(const Polynomial&) const = default;

 private:
  void trim();
  std::vector<double> coeffs_;
};

}  // namespace hankelflow
