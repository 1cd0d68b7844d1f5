#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace knotclasp {

/// Integer Laurent polynomial sum_k c_k t^k, kept trimmed (no zero leading
/// or trailing coefficients; the zero polynomial has no coefficients).
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  /// coefficients[k] multiplies t^(low + k).
  LaurentPolynomial(std::vector<mpz_class> coefficients, long low = 0);

  static LaurentPolynomial monomial(const mpz_class& c, long exponent);

  bool is_zero() const { return coeffs_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(coeffs_.size()) - 1; }
  mpz_class coefficient(long exponent) const;
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  mpz_class eval_at_one() const;
  LaurentPolynomial shifted(long by) const;
  /// Symmetric under t -> 1/t.
  bool is_symmetric() const;

  LaurentPolynomial operator-() const;
  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) { return a + (-b); }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Quotient and remainder of ordinary polynomials (low() >= 0 for both).
  /// The divisor's leading coefficient must be +-1.
  std::pair<LaurentPolynomial, LaurentPolynomial> divmod(const LaurentPolynomial& divisor) const;

  /// Descending order, e.g. "t - 1 + t^-1".
  std::string str() const;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
  long low_ = 0;
};

/// n-th cyclotomic polynomial.
LaurentPolynomial cyclotomic(long n);

}  // namespace knotclasp
