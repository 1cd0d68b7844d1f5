#pragma once
// Independent reference computations for tests. Nothing here calls the
// library routine it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "knotclasp/laurent.hpp"
#include "knotclasp/rational.hpp"

namespace oracle {

using knotclasp::LaurentPolynomial;
using knotclasp::Rational;

// sigma_t(T(p,q)) at t = num/den by counting k/p + j/q inside [t, 1+t] in
// integer arithmetic. s = (kq + jp)/pq is compared against t via cross
// multiplication; t must not coincide with an element of the set or 1+t.
inline long torus_signature(long p, long q, long num, long den) {
  long inside = 0, outside = 0;
  const long pq = p * q;
  for (long k = 1; k < p; ++k) {
    for (long j = 1; j < q; ++j) {
      const long s = (k * q + j * p) * den;  // s/pq vs num/den  <=>  s*den vs num*pq
      const long lo = num * pq, hi = (num + den) * pq;
      if (s >= lo && s <= hi) {
        ++inside;
      } else {
        ++outside;
      }
    }
  }
  return -(inside - outside);
}

// Value on (l/pq, (l+1)/pq), sampled at the midpoint (2l+1)/(2pq).
inline long torus_signature_on_interval(long p, long q, long l) {
  return torus_signature(p, q, 2 * l + 1, 2 * p * q);
}

// Membership table of <gens> on [0, limit) by dynamic programming.
inline std::vector<bool> semigroup_members(const std::vector<long>& gens, long limit) {
  std::vector<bool> in(static_cast<std::size_t>(limit), false);
  in[0] = true;
  for (long n = 1; n < limit; ++n) {
    for (long g : gens) {
      if (g <= n && in[static_cast<std::size_t>(n - g)]) {
        in[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  return in;
}

inline long gap_count(const std::vector<long>& gens, long limit) {
  const auto in = semigroup_members(gens, limit);
  return static_cast<long>(std::count(in.begin(), in.end(), false));
}

// Upsilon(t) = max_{0<=m<=2g} -2 #(S cap [0,m)) + (m - g) t, straight from the definition.
inline Rational upsilon_at(const std::vector<long>& gens, long g, const Rational& t) {
  const auto in = semigroup_members(gens, 2 * g + 2);
  Rational best;
  long below = 0;
  for (long m = 0; m <= 2 * g; ++m) {
    const Rational v = Rational(-2 * below) + Rational(m - g) * t;
    if (m == 0 || v > best) best = v;
    if (in[static_cast<std::size_t>(m)]) ++below;
  }
  return best;
}

// ---- Braid equality via the Artin action on the free group F_n (faithful).

using FreeWord = std::vector<int>;  // letters +-(j+1) for x_j

inline void push_reduced(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter) {
    w.pop_back();
  } else {
    w.push_back(letter);
  }
}

inline FreeWord free_inverse(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// Images of x_1..x_n under the automorphism of a braid word (letters +-g, 1 <= g < n).
inline std::vector<FreeWord> artin_action(int n, const std::vector<int>& letters) {
  std::vector<FreeWord> images(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) images[static_cast<std::size_t>(j)] = {j + 1};
  for (int g : letters) {
    const int i = std::abs(g);  // x_i, x_{i+1} are generators i and i+1 (1-based)
    // Image of each free generator under this letter's automorphism.
    std::vector<FreeWord> phi(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) phi[static_cast<std::size_t>(j)] = {j + 1};
    if (g > 0) {
      phi[static_cast<std::size_t>(i - 1)] = {i, i + 1, -i};
      phi[static_cast<std::size_t>(i)] = {i};
    } else {
      phi[static_cast<std::size_t>(i - 1)] = {i + 1};
      phi[static_cast<std::size_t>(i)] = {-(i + 1), i, i + 1};
    }
    for (auto& image : images) {
      FreeWord next;
      for (int letter : image) {
        const auto& sub = phi[static_cast<std::size_t>(std::abs(letter) - 1)];
        const FreeWord piece = letter > 0 ? sub : free_inverse(sub);
        for (int x : piece) push_reduced(next, x);
      }
      image = std::move(next);
    }
  }
  return images;
}

// ---- Alexander polynomial of a braid closure via the reduced Burau representation.

using Matrix = std::vector<std::vector<LaurentPolynomial>>;

inline LaurentPolynomial mono(long c, long e) { return LaurentPolynomial::monomial(c, e); }

inline Matrix identity(std::size_t d) {
  Matrix m(d, std::vector<LaurentPolynomial>(d));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = mono(1, 0);
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t d = a.size();
  Matrix c(d, std::vector<LaurentPolynomial>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  return c;
}

// Reduced Burau matrix of sigma_i^{+-1} in B_n, (n-1) x (n-1).
inline Matrix burau_letter(int n, int g) {
  const std::size_t d = static_cast<std::size_t>(n - 1);
  Matrix m = identity(d);
  const int i = std::abs(g) - 1;  // 0-based row of the generator
  const auto at = [&](int r, int c) -> LaurentPolynomial& {
    return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  };
  if (g > 0) {
    at(i, i) = mono(-1, 1);
    if (i > 0) at(i - 1, i) = mono(1, 1);
    if (i + 1 < n - 1) at(i + 1, i) = mono(1, 0);
  } else {
    at(i, i) = mono(-1, -1);
    if (i > 0) at(i - 1, i) = mono(1, 0);
    if (i + 1 < n - 1) at(i + 1, i) = mono(1, -1);
  }
  return m;
}

inline LaurentPolynomial determinant(const Matrix& m) {
  const std::size_t d = m.size();
  if (d == 0) return mono(1, 0);
  if (d == 1) return m[0][0];
  LaurentPolynomial sum;
  for (std::size_t c = 0; c < d; ++c) {
    if (m[0][c].is_zero()) continue;
    Matrix minor;
    for (std::size_t r = 1; r < d; ++r) {
      std::vector<LaurentPolynomial> row;
      for (std::size_t k = 0; k < d; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const auto term = m[0][c] * determinant(minor);
    sum = c % 2 == 0 ? sum + term : sum - term;
  }
  return sum;
}

// Delta(t) ~ det(I - B(beta)) (1 - t) / (1 - t^n), normalized symmetric with Delta(1) = 1.
inline LaurentPolynomial burau_alexander(int n, const std::vector<int>& letters) {
  Matrix b = identity(static_cast<std::size_t>(n - 1));
  for (int g : letters) b = multiply(b, burau_letter(n, g));
  Matrix a = identity(b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) a[i][j] = a[i][j] - b[i][j];
  auto num = determinant(a) * (mono(1, 0) - mono(1, 1));
  num = num.shifted(-num.low());
  std::vector<mpz_class> den(static_cast<std::size_t>(n + 1));
  den.front() = 1;
  den.back() = -1;  // 1 - t^n
  const auto [quot, rem] = num.divmod(LaurentPolynomial(den));
  if (!rem.is_zero()) return {};
  auto centered = quot.shifted(-(quot.low() + quot.high()) / 2);
  if (centered.eval_at_one() < 0) centered = -centered;
  return centered;
}

// ---- Seeded random braid words.

struct RandomBraid {
  int strands;
  std::vector<int> letters;
};

inline std::string to_text(const std::vector<int>& letters) {
  std::string s;
  for (int g : letters) s += static_cast<char>(g > 0 ? 'a' + g - 1 : 'A' - g - 1);
  return s;
}

inline RandomBraid random_braid(std::mt19937_64& rng, int strands, std::size_t length) {
  RandomBraid b{strands, {}};
  while (b.letters.size() < length) {
    const int g = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(strands - 1));
    b.letters.push_back(rng() % 2 ? g : -g);
  }
  return b;
}

}  // namespace oracle
