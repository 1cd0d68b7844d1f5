#pragma once

#include <vector>

#include "knotclasp/braid.hpp"
#include "knotclasp/laurent.hpp"
#include "knotclasp/rational.hpp"

namespace knotclasp {

struct SeifertMatrix {
  std::vector<std::vector<long>> entries;  // square, dimension first_betti
  int components = 1;
  int first_betti = 0;

  std::size_t size() const { return entries.size(); }
};

/// Seifert algorithm on a braid closure: one disk per strand, one twisted band
/// per crossing; H_1 is generated by loops through consecutive crossings on
/// the same generator. Sign convention: the positive trefoil has signature -2
/// at t = 1/2. Throws DisconnectedSurface if some generator never occurs.
SeifertMatrix seifert_matrix_from_braid(const BraidWord& w);

struct SignatureNullity {
  long sigma;
  long eta;
  friend bool operator==(const SignatureNullity&, const SignatureNullity&) = default;
};

/// Signature and nullity of (1-w)M + (1-conj w)M^T at w = exp(2 pi i t),
/// from a double-precision eigen-solve. An eigenvalue counts as zero when
/// |lambda| <= tol * ||H|| and as signed when |lambda| > 10 tol ||H||; the
/// zero count must match the exact singularity test (Phi_n dividing
/// det(M - x M^T) for t = k/n). Otherwise AmbiguousEigenvalue is thrown.
SignatureNullity tl_signature_nullity(const SeifertMatrix& m, const Rational& t, double tol = 1e-9);

/// det(M - x M^T) as an ordinary polynomial in x.
LaurentPolynomial seifert_determinant(const SeifertMatrix& m);

/// Alexander polynomial, shifted to be symmetric and signed so that
/// Delta(1) = 1. Throws NotAKnot when that normalization is impossible.
LaurentPolynomial alexander_polynomial(const SeifertMatrix& m);

/// (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)), symmetrized.
LaurentPolynomial torus_alexander(long p, long q);

/// Effect on (sigma, eta) of summing p negative and n positive Hopf links.
SignatureNullity hopf_sum_transform(long sigma, long eta, long positive_points, long negative_points);

}  // namespace knotclasp
