#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knotclasp/pl_function.hpp"
#include "knotclasp/step_function.hpp"

namespace knotclasp {

class KnotExpr;

namespace expr {

struct Torus {
  long p;
  long q;
};

struct Cable {
  long r;
  long s;
  std::shared_ptr<const KnotExpr> base;
};

/// Mirror image with reversed orientation (-J).
struct Mirror {
  std::shared_ptr<const KnotExpr> base;
};

/// Connected sum of one or more parts.
struct Sum {
  std::vector<KnotExpr> parts;
};

/// Positive untwisted Whitehead double of the right-handed trefoil.
struct WhiteheadDouble {};

}  // namespace expr

/// Immutable knot expression tree.
///
/// Grammar of the text form:
///   expr := term { "#" term }
///   term := ["-"] atom
///   atom := "T(" int "," int ")" | "D" | "Cable(" int "," int ";" expr ")" | "(" expr ")"
class KnotExpr {
 public:
  using Node = std::variant<expr::Torus, expr::Cable, expr::Mirror, expr::Sum, expr::WhiteheadDouble>;

  static KnotExpr torus(long p, long q);
  static KnotExpr cable(long r, long s, KnotExpr base);
  static KnotExpr mirror(KnotExpr base);
  static KnotExpr sum(std::vector<KnotExpr> parts);
  static KnotExpr whitehead_double();

  const Node& node() const { return *node_; }

  friend bool operator==(const KnotExpr& a, const KnotExpr& b);

 private:
  explicit KnotExpr(Node node) : node_(std::make_shared<const Node>(std::move(node))) {}

  std::shared_ptr<const Node> node_;
};

/// Throws SyntaxError (with position) or ParameterError.
KnotExpr parse(std::string_view text);

/// Inverse of parse.
std::string render(const KnotExpr& e);

/// Tristram-Levine signature function. Cable nodes are not supported
/// (UnsupportedNode); D contributes zero.
StepFunction signature_function(const KnotExpr& e);

/// Upsilon on [0,2]. Supported: torus knots, L-space cables of torus knots,
/// D (as T(2,3)), Cable(2,2i+1; D) with i > 1 (as the same cable of T(2,3)),
/// mirrors and sums. Anything else raises UnsupportedNode.
PLFunction upsilon(const KnotExpr& e);

}  // namespace knotclasp
