#include "knotclasp/laurent.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "knotclasp/errors.hpp"

namespace knotclasp {

LaurentPolynomial::LaurentPolynomial(std::vector<mpz_class> coefficients, long low)
    : coeffs_(std::move(coefficients)), low_(low) {
  trim();
}

LaurentPolynomial LaurentPolynomial::monomial(const mpz_class& c, long exponent) {
  return LaurentPolynomial({c}, exponent);
}

void LaurentPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  const auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; });
  low_ += static_cast<long>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) low_ = 0;
}

mpz_class LaurentPolynomial::coefficient(long exponent) const {
  if (is_zero() || exponent < low_ || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

mpz_class LaurentPolynomial::eval_at_one() const {
  mpz_class sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

LaurentPolynomial LaurentPolynomial::shifted(long by) const {
  if (is_zero()) return {};
  return LaurentPolynomial(coeffs_, low_ + by);
}

bool LaurentPolynomial::is_symmetric() const {
  if (is_zero()) return true;
  if (low_ != -high()) return false;
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long low = std::min(a.low(), b.low());
  const long high = std::max(a.high(), b.high());
  std::vector<mpz_class> c(static_cast<std::size_t>(high - low + 1));
  for (long e = low; e <= high; ++e) c[static_cast<std::size_t>(e - low)] = a.coefficient(e) + b.coefficient(e);
  return LaurentPolynomial(std::move(c), low);
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPolynomial(std::move(c), a.low_ + b.low_);
}

std::pair<LaurentPolynomial, LaurentPolynomial> LaurentPolynomial::divmod(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (low_ < 0 || divisor.low_ < 0) throw DomainError("divmod needs ordinary polynomials");
  const mpz_class& lead = divisor.coeffs_.back();
  if (lead != 1 && lead != -1) throw DomainError("divisor must have leading coefficient +-1");
  // Work with dense coefficient vectors starting at t^0.
  std::vector<mpz_class> rem(static_cast<std::size_t>(std::max(high(), 0L) + 1));
  for (long e = low_; !is_zero() && e <= high(); ++e) rem[static_cast<std::size_t>(e)] = coefficient(e);
  const long dd = divisor.high();
  std::vector<mpz_class> quot(rem.size() > static_cast<std::size_t>(dd) ? rem.size() - static_cast<std::size_t>(dd) : 1);
  for (long e = static_cast<long>(rem.size()) - 1; e >= dd; --e) {
    const mpz_class factor = rem[static_cast<std::size_t>(e)] * lead;  // lead is its own inverse
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(e - dd)] = factor;
    for (long k = 0; k <= dd; ++k) rem[static_cast<std::size_t>(e - dd + k)] -= factor * divisor.coefficient(k);
  }
  return {LaurentPolynomial(std::move(quot)), LaurentPolynomial(std::move(rem))};
}

std::string LaurentPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (long e = high(); e >= low_; --e) {
    const mpz_class c = coefficient(e);
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && e != 0;
    if (!unit) out += mag.get_str();
    if (e != 0) {
      out += "t";
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPolynomial cyclotomic(long n) {
  if (n < 1) throw DomainError("cyclotomic polynomial needs n >= 1");
  static std::mutex mutex;
  static std::map<long, LaurentPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<mpz_class> c(static_cast<std::size_t>(n + 1));
  c.front() = -1;
  c.back() = 1;
  LaurentPolynomial result(std::move(c));  // t^n - 1
  for (long d = 1; d < n; ++d) {
    if (n % d == 0) result = result.divmod(cyclotomic(d)).first;
  }
  std::lock_guard lock(mutex);
  cache.emplace(n, result);
  return result;
}

}  // namespace knotclasp
