#include "knotclasp/seifert.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <set>

#include <Eigen/Dense>

#include "knotclasp/errors.hpp"
#include "knotclasp/torus_signature.hpp"

namespace knotclasp {

namespace {

int sign_of(long v) { return (v > 0) - (v < 0); }

// Fraction-free Gaussian elimination (Bareiss); exact for integer matrices.
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  mpz_class previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

SeifertMatrix seifert_matrix_from_braid(const BraidWord& w) {
  const auto& x = w.letters;
  std::set<int> present;
  for (int g : x) present.insert(std::abs(g));
  for (int g = 1; g < w.strands; ++g) {
    if (!present.contains(g)) {
      throw DisconnectedSurface("generator " + std::to_string(g) + " does not occur; the Seifert surface is disconnected");
    }
  }
  // next[i]: position of the next crossing on the same generator.
  std::vector<std::optional<std::size_t>> next(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (std::abs(x[j]) == std::abs(x[i])) {
        next[i] = j;
        break;
      }
    }
  }
  std::vector<std::size_t> loops;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (next[i]) loops.push_back(i);
  }
  const std::size_t d = loops.size();
  SeifertMatrix m;
  m.entries.assign(d, std::vector<long>(d, 0));
  m.first_betti = static_cast<int>(d);
  m.components = closure_components(w);
  for (std::size_t a = 0; a < d; ++a) {
    const std::size_t i = loops[a];
    const std::size_t hi = *next[i];
    m.entries[a][a] = -sign_of(x[i] + x[hi]);
    for (std::size_t b = a + 1; b < d; ++b) {
      const std::size_t j = loops[b];
      const std::size_t hj = *next[j];
      if (hi > hj || hi < j) continue;  // nested or disjoint
      if (hi == j) {                    // consecutive loops sharing crossing j
        if (x[j] > 0) {
          m.entries[b][a] = 1;
        } else {
          m.entries[a][b] = -1;
        }
        continue;
      }
      const int gi = std::abs(x[i]);
      const int gj = std::abs(x[j]);
      if (gi - gj == 1) {
        m.entries[b][a] = -1;
      } else if (gj - gi == 1) {
        m.entries[a][b] = 1;
      }
    }
  }
  return m;
}

LaurentPolynomial seifert_determinant(const SeifertMatrix& m) {
  const std::size_t d = m.size();
  // det(M - x M^T) has degree <= d: sample x = 0..d and interpolate.
  std::vector<mpq_class> samples(d + 1);
  for (std::size_t s = 0; s <= d; ++s) {
    std::vector<std::vector<mpz_class>> a(d, std::vector<mpz_class>(d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        a[i][j] = mpz_class(m.entries[i][j]) - mpz_class(static_cast<long>(s)) * m.entries[j][i];
      }
    }
    samples[s] = bareiss_determinant(std::move(a));
  }
  // Newton divided differences on nodes 0..d, then expand to monomials.
  std::vector<mpq_class> dd = samples;
  for (std::size_t level = 1; level <= d; ++level) {
    for (std::size_t k = d; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / mpq_class(static_cast<long>(level));
      if (k == level) break;
    }
  }
  std::vector<mpq_class> poly{dd[d]};
  for (std::size_t k = d; k-- > 0;) {
    // poly = poly * (x - k) + dd[k]
    std::vector<mpq_class> next(poly.size() + 1);
    for (std::size_t e = 0; e < poly.size(); ++e) {
      next[e + 1] += poly[e];
      next[e] -= poly[e] * static_cast<long>(k);
    }
    next[0] += dd[k];
    poly = std::move(next);
  }
  std::vector<mpz_class> coeffs;
  coeffs.reserve(poly.size());
  for (auto& c : poly) {
    c.canonicalize();
    if (c.get_den() != 1) throw DomainError("non-integral coefficient in Seifert determinant");
    coeffs.push_back(c.get_num());
  }
  return LaurentPolynomial(std::move(coeffs));
}

LaurentPolynomial alexander_polynomial(const SeifertMatrix& m) {
  const auto det = seifert_determinant(m);
  if (det.is_zero()) throw NotAKnot("Seifert determinant vanishes identically");
  if ((det.low() + det.high()) % 2 != 0) throw NotAKnot("Alexander polynomial has odd span");
  auto centered = det.shifted(-(det.low() + det.high()) / 2);
  const mpz_class at_one = centered.eval_at_one();
  if (at_one == -1) centered = -centered;
  if (at_one != 1 && at_one != -1) throw NotAKnot("Delta(1) = " + at_one.get_str());
  return centered;
}

LaurentPolynomial torus_alexander(long p, long q) {
  const auto knot = TorusKnot::make(p, q);
  auto binomial = [](long n) {  // t^n - 1
    std::vector<mpz_class> c(static_cast<std::size_t>(n + 1));
    c.front() = -1;
    c.back() = 1;
    return LaurentPolynomial(std::move(c));
  };
  const auto numerator = binomial(knot.product()) * binomial(1);
  const auto [quotient, remainder] = numerator.divmod(binomial(p) * binomial(q));
  if (!remainder.is_zero()) throw DomainError("torus Alexander division left a remainder");
  return quotient.shifted(-knot.genus());
}

SignatureNullity tl_signature_nullity(const SeifertMatrix& m, const Rational& t, double tol) {
  if (t <= Rational(0) || t >= Rational(1)) throw DomainError("t=" + t.str() + " outside (0,1)");
  const std::size_t d = m.size();
  if (d == 0) return {0, 0};
  const double angle = 2.0 * std::numbers::pi * t.to_double();
  const std::complex<double> omega(std::cos(angle), std::sin(angle));
  const std::complex<double> a = 1.0 - omega;
  const std::complex<double> b = 1.0 - std::conj(omega);
  Eigen::MatrixXcd h(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          a * static_cast<double>(m.entries[i][j]) + b * static_cast<double>(m.entries[j][i]);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& eigenvalues = solver.eigenvalues();
  const double norm = eigenvalues.cwiseAbs().maxCoeff();
  long positive = 0, negative = 0, zero = 0;
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    const double lambda = eigenvalues(k);
    if (std::abs(lambda) <= tol * norm) {
      ++zero;
    } else if (std::abs(lambda) > 10.0 * tol * norm) {
      lambda > 0 ? ++positive : ++negative;
    } else {
      throw AmbiguousEigenvalue("eigenvalue " + std::to_string(lambda) + " at t=" + t.str() +
                                " is neither certified zero nor nonzero");
    }
  }
  // H(omega) = (1-omega)(M - conj(omega) M^T) is singular iff Phi_n | det(M - x M^T).
  const auto det = seifert_determinant(m);
  const long order = to_long(t.denominator());
  const bool singular = det.is_zero() || det.divmod(cyclotomic(order)).second.is_zero();
  if (singular != (zero > 0)) {
    throw AmbiguousEigenvalue("numerical nullity " + std::to_string(zero) + " disagrees with the exact test at t=" +
                              t.str());
  }
  return {positive - negative, zero};
}

SignatureNullity hopf_sum_transform(long sigma, long eta, long positive_points, long negative_points) {
  return {sigma - negative_points + positive_points, eta};
}

}  // namespace knotclasp
