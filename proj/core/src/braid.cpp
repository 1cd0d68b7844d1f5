#include "knotclasp/braid.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "knotclasp/errors.hpp"

namespace knotclasp {

namespace {

// Generator g acts on 0-based positions g-1 and g.

Permutation identity(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation half_twist(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = n - 1 - j;
  return p;
}

bool is_identity(const Permutation& p) {
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (p[j] != static_cast<int>(j)) return false;
  }
  return true;
}

void multiply_right(Permutation& p, int i) { std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]); }

void multiply_left(Permutation& p, int i) {
  for (auto& v : p) {
    if (v == i) {
      v = i + 1;
    } else if (v == i + 1) {
      v = i;
    }
  }
}

bool right_descent(const Permutation& p, int i) {
  return p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i) + 1];
}

bool left_descent(const Permutation& p, int i) {
  // pi^-1(i) > pi^-1(i+1): value i+1 occurs before value i.
  for (int v : p) {
    if (v == i + 1) return true;
    if (v == i) return false;
  }
  return false;
}

Permutation conjugate_by_half_twist(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  Permutation out(p.size());
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = n - 1 - p[static_cast<std::size_t>(n - 1 - j)];
  return out;
}

// Makes (a, b) left-weighted: moves every starting letter of b that a does
// not finish with across the boundary. Returns whether anything moved.
bool left_weight(Permutation& a, Permutation& b) {
  const int n = static_cast<int>(a.size());
  bool moved = false;
  for (bool again = true; again;) {
    again = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (left_descent(b, i) && !right_descent(a, i)) {
        multiply_right(a, i);
        multiply_left(b, i);
        moved = again = true;
      }
    }
  }
  return moved;
}

std::vector<int> word_of(Permutation p) {
  std::vector<int> reversed;
  const int n = static_cast<int>(p.size());
  while (!is_identity(p)) {
    for (int i = 0; i + 1 < n; ++i) {
      if (right_descent(p, i)) {
        reversed.push_back(i + 1);
        multiply_right(p, i);
        break;
      }
    }
  }
  return {reversed.rbegin(), reversed.rend()};
}

}  // namespace

BraidWord parse_braid(std::string_view text, int strands) {
  if (strands < 2) throw RangeError("a braid needs at least 2 strands");
  BraidWord w{strands, {}};
  for (std::size_t pos = 0; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isalpha(static_cast<unsigned char>(c))) {
      throw SyntaxError("braid letters must be a-z or A-Z, got '" + std::string(1, c) + "'", pos);
    }
    const int g = std::tolower(static_cast<unsigned char>(c)) - 'a' + 1;
    if (g >= strands) {
      throw RangeError("generator '" + std::string(1, c) + "' does not exist in B" + std::to_string(strands));
    }
    w.letters.push_back(std::islower(static_cast<unsigned char>(c)) ? g : -g);
  }
  return w;
}

std::string render_braid(const BraidWord& w) {
  std::string out;
  for (int g : w.letters) {
    const char c = static_cast<char>('a' + std::abs(g) - 1);
    out.push_back(g > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  for (int g : w.letters) {
    if (!out.letters.empty() && out.letters.back() == -g) {
      out.letters.pop_back();
    } else {
      out.letters.push_back(g);
    }
  }
  return out;
}

BraidWord crossing_change(const BraidWord& w, std::size_t index) {
  if (index < 1 || index > w.letters.size()) {
    throw IndexError("crossing index " + std::to_string(index) + " outside 1.." + std::to_string(w.letters.size()));
  }
  BraidWord out = w;
  out.letters[index - 1] = -out.letters[index - 1];
  return free_reduce(out);
}

BraidWord inverse(const BraidWord& w) {
  BraidWord out{w.strands, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw StrandMismatch("cannot concatenate braids on different strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands;
  NormalForm nf{n, 0, {}};
  for (int g : w.letters) {
    if (std::abs(g) < 1 || std::abs(g) >= n) throw RangeError("generator outside B" + std::to_string(n));
    const int i = std::abs(g) - 1;
    if (g > 0) {
      Permutation s = identity(n);
      multiply_right(s, i);
      nf.factors.push_back(std::move(s));
    } else {
      // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); push Delta^-1 to the front.
      for (auto& f : nf.factors) f = conjugate_by_half_twist(f);
      --nf.infimum;
      Permutation y = half_twist(n);
      multiply_right(y, i);
      nf.factors.push_back(std::move(y));
    }
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = 0; k + 1 < nf.factors.size(); ++k) {
      if (left_weight(nf.factors[k], nf.factors[k + 1])) changed = true;
    }
  }
  const Permutation delta = half_twist(n);
  std::size_t leading = 0;
  while (leading < nf.factors.size() && nf.factors[leading] == delta) ++leading;
  nf.infimum += static_cast<long>(leading);
  nf.factors.erase(nf.factors.begin(), nf.factors.begin() + static_cast<std::ptrdiff_t>(leading));
  std::erase_if(nf.factors, [](const Permutation& f) { return is_identity(f); });
  return nf;
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) {
    throw StrandMismatch("B" + std::to_string(a.strands) + " vs B" + std::to_string(b.strands));
  }
  return normal_form(a) == normal_form(b);
}

BraidWord to_word(const NormalForm& nf) {
  BraidWord out{nf.strands, {}};
  const auto delta = word_of(half_twist(nf.strands));
  BraidWord delta_word{nf.strands, delta};
  const auto& power = nf.infimum >= 0 ? delta_word : inverse(delta_word);
  for (long k = 0; k < std::abs(nf.infimum); ++k) {
    out.letters.insert(out.letters.end(), power.letters.begin(), power.letters.end());
  }
  for (const auto& f : nf.factors) {
    const auto letters = word_of(f);
    out.letters.insert(out.letters.end(), letters.begin(), letters.end());
  }
  return out;
}

Permutation closure_permutation(const BraidWord& w) {
  Permutation where(static_cast<std::size_t>(w.strands));
  std::iota(where.begin(), where.end(), 0);
  for (int g : w.letters) {
    const int i = std::abs(g) - 1;
    for (auto& pos : where) {
      if (pos == i) {
        pos = i + 1;
      } else if (pos == i + 1) {
        pos = i;
      }
    }
  }
  return where;
}

int closure_components(const BraidWord& w) {
  const auto perm = closure_permutation(w);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

bool is_knot_closure(const BraidWord& w) { return closure_components(w) == 1; }

long exponent_sum(const BraidWord& w) {
  long sum = 0;
  for (int g : w.letters) sum += g > 0 ? 1 : -1;
  return sum;
}

}  // namespace knotclasp
