#include "knotclasp/knot_expr.hpp"

#include <cctype>
#include <numeric>

#include "knotclasp/errors.hpp"
#include "knotclasp/semigroup.hpp"
#include "knotclasp/torus_signature.hpp"

namespace knotclasp {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

KnotExpr KnotExpr::torus(long p, long q) {
  if (p > q) std::swap(p, q);
  const auto k = TorusKnot::make(p, q);
  return KnotExpr(expr::Torus{k.p, k.q});
}

KnotExpr KnotExpr::cable(long r, long s, KnotExpr base) {
  if (r < 2 || std::gcd(r, s) != 1) {
    throw ParameterError("Cable(" + std::to_string(r) + "," + std::to_string(s) + ") needs r >= 2 and gcd(r,s) = 1");
  }
  return KnotExpr(expr::Cable{r, s, std::make_shared<const KnotExpr>(std::move(base))});
}

KnotExpr KnotExpr::mirror(KnotExpr base) {
  return KnotExpr(expr::Mirror{std::make_shared<const KnotExpr>(std::move(base))});
}

KnotExpr KnotExpr::sum(std::vector<KnotExpr> parts) {
  if (parts.empty()) throw PreconditionError("connected sum needs at least one part");
  return KnotExpr(expr::Sum{std::move(parts)});
}

KnotExpr KnotExpr::whitehead_double() { return KnotExpr(expr::WhiteheadDouble{}); }

bool operator==(const KnotExpr& a, const KnotExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->index() != b.node_->index()) return false;
  return std::visit(
      Overloaded{
          [&](const expr::Torus& x) {
            const auto& y = std::get<expr::Torus>(*b.node_);
            return x.p == y.p && x.q == y.q;
          },
          [&](const expr::Cable& x) {
            const auto& y = std::get<expr::Cable>(*b.node_);
            return x.r == y.r && x.s == y.s && *x.base == *y.base;
          },
          [&](const expr::Mirror& x) { return *x.base == *std::get<expr::Mirror>(*b.node_).base; },
          [&](const expr::Sum& x) { return x.parts == std::get<expr::Sum>(*b.node_).parts; },
          [](const expr::WhiteheadDouble&) { return true; },
      },
      *a.node_);
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  KnotExpr parse_all() {
    KnotExpr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  long parse_int() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    const auto digits = text_.substr(start, pos_ - start);
    if (digits.size() > 12) fail("integer too large");
    return std::stol(std::string(digits));
  }

  KnotExpr parse_expr() {
    std::vector<KnotExpr> parts;
    parts.push_back(parse_term());
    while (accept("#")) parts.push_back(parse_term());
    if (parts.size() == 1) return std::move(parts.front());
    return KnotExpr::sum(std::move(parts));
  }

  KnotExpr parse_term() {
    if (accept("-")) return KnotExpr::mirror(parse_atom());
    return parse_atom();
  }

  KnotExpr parse_atom() {
    if (accept("Cable(")) {
      const long r = parse_int();
      expect(",");
      const long s = parse_int();
      expect(";");
      KnotExpr base = parse_expr();
      expect(")");
      return KnotExpr::cable(r, s, std::move(base));
    }
    if (accept("T(")) {
      const long p = parse_int();
      expect(",");
      const long q = parse_int();
      expect(")");
      return KnotExpr::torus(p, q);
    }
    if (accept("D")) return KnotExpr::whitehead_double();
    if (accept("(")) {
      KnotExpr e = parse_expr();
      expect(")");
      return e;
    }
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_compound(const KnotExpr& e) {
  return std::holds_alternative<expr::Sum>(e.node()) || std::holds_alternative<expr::Mirror>(e.node());
}

// D and Cable(2,2i+1; D) are replaced by nu+-equivalent L-space knots.
PLFunction whitehead_cable_upsilon(const expr::Cable& c) {
  if (c.r == 2 && c.s % 2 == 1 && (c.s - 1) / 2 > 1) {
    const auto s = cable_semigroup({2, 3, c.r, c.s});
    return upsilon_from_semigroup(s, genus_from_gaps(s));
  }
  throw UnsupportedNode("Upsilon of Cable(" + std::to_string(c.r) + "," + std::to_string(c.s) +
                        "; D) is only available for Cable(2,2i+1; D) with i > 1");
}

}  // namespace

KnotExpr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const KnotExpr& e) {
  return std::visit(
      Overloaded{
          [](const expr::Torus& t) { return "T(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")"; },
          [](const expr::Cable& c) {
            return "Cable(" + std::to_string(c.r) + "," + std::to_string(c.s) + "; " + render(*c.base) + ")";
          },
          [](const expr::Mirror& m) {
            return is_compound(*m.base) ? "-(" + render(*m.base) + ")" : "-" + render(*m.base);
          },
          [](const expr::Sum& s) {
            std::string out;
            for (std::size_t i = 0; i < s.parts.size(); ++i) {
              if (i > 0) out += " # ";
              const bool nested = std::holds_alternative<expr::Sum>(s.parts[i].node());
              out += nested ? "(" + render(s.parts[i]) + ")" : render(s.parts[i]);
            }
            return out;
          },
          [](const expr::WhiteheadDouble&) { return std::string("D"); },
      },
      e.node());
}

StepFunction signature_function(const KnotExpr& e) {
  return std::visit(
      Overloaded{
          [](const expr::Torus& t) { return signature_step_function(t.p, t.q); },
          [](const expr::Cable&) -> StepFunction {
            throw UnsupportedNode("signature functions of cables are not implemented");
          },
          [](const expr::Mirror& m) { return -signature_function(*m.base); },
          [](const expr::Sum& s) {
            StepFunction total;
            for (const auto& part : s.parts) total = total + signature_function(part);
            return total;
          },
          // Trivial Alexander polynomial: no jumps, and sigma vanishes near t = 0.
          [](const expr::WhiteheadDouble&) { return StepFunction(); },
      },
      e.node());
}

PLFunction upsilon(const KnotExpr& e) {
  return std::visit(
      Overloaded{
          [](const expr::Torus& t) { return torus_upsilon(t.p, t.q); },
          [](const expr::Cable& c) -> PLFunction {
            if (const auto* inner = std::get_if<expr::Torus>(&c.base->node())) {
              const auto s = cable_semigroup({inner->p, inner->q, c.r, c.s});
              return upsilon_from_semigroup(s, genus_from_gaps(s));
            }
            if (std::holds_alternative<expr::WhiteheadDouble>(c.base->node())) return whitehead_cable_upsilon(c);
            throw UnsupportedNode("Upsilon of a cable is only available for torus knot or D companions");
          },
          [](const expr::Mirror& m) { return -upsilon(*m.base); },
          [](const expr::Sum& s) {
            PLFunction total;
            for (const auto& part : s.parts) total = total + upsilon(part);
            return total;
          },
          [](const expr::WhiteheadDouble&) { return torus_upsilon(2, 3); },
      },
      e.node());
}

}  // namespace knotclasp
