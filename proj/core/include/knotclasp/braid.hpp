#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace knotclasp {

/// Word in the braid group B_n. Letter g > 0 is sigma_g, g < 0 its inverse.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

/// Lowercase letters are positive generators (a = sigma_1), uppercase their
/// inverses. Throws SyntaxError for other characters and RangeError for
/// generators outside B_strands.
BraidWord parse_braid(std::string_view text, int strands);
std::string render_braid(const BraidWord& w);

/// Cancels adjacent inverse pairs until none remain.
BraidWord free_reduce(const BraidWord& w);

/// Inverts the letter at the 1-based index, then free-reduces.
BraidWord crossing_change(const BraidWord& w, std::size_t index);

BraidWord inverse(const BraidWord& w);
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// A permutation braid (simple element) stored as the permutation
/// pi = s_{i1} o ... o s_{ik} of {0..n-1}, with s_i the transposition (i-1 i).
using Permutation = std::vector<int>;

/// Left-canonical (Garside) form Delta^infimum A_1 ... A_k: factors are
/// simple, left-weighted, and neither the identity nor Delta.
struct NormalForm {
  int strands = 2;
  long infimum = 0;
  std::vector<Permutation> factors;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const BraidWord& w);

/// Throws StrandMismatch when the strand counts differ.
bool braids_equal(const BraidWord& a, const BraidWord& b);

/// Expands a normal form back into a word (Delta^-1 as the inverse of Delta's word).
BraidWord to_word(const NormalForm& nf);

/// Permutation induced on strand positions: result[i] is where the strand
/// entering at position i leaves.
Permutation closure_permutation(const BraidWord& w);
int closure_components(const BraidWord& w);
bool is_knot_closure(const BraidWord& w);
long exponent_sum(const BraidWord& w);

}  // namespace knotclasp
