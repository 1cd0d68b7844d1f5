#include "cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "knotclasp/bounds.hpp"
#include "knotclasp/braid.hpp"
#include "knotclasp/errors.hpp"
#include "knotclasp/knot_expr.hpp"
#include "knotclasp/seifert.hpp"
#include "knotclasp/torus_signature.hpp"
#include "svg.hpp"

namespace knotclasp::cli {

namespace {

std::pair<long, long> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParameterError("expected p,q but got '" + text + "'");
  try {
    return {std::stol(text.substr(0, comma)), std::stol(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw ParameterError("expected p,q but got '" + text + "'");
  }
}

void emit_step(std::ostream& out, const StepFunction& f, const std::string& format, const std::string& title) {
  if (format == "svg") {
    out << svg_step_plot(f, title);
  } else if (format == "csv") {
    out << "lo,hi,value\n";
    for (const auto& in : f.intervals()) out << in.lo.str() << ',' << in.hi.str() << ',' << in.value << '\n';
  } else {
    Json intervals = Json::array();
    for (const auto& in : f.intervals()) {
      intervals.push_back({{"lo", in.lo.str()}, {"hi", in.hi.str()}, {"value", in.value}});
    }
    Json j = to_json(f);
    j["expr"] = title;
    j["intervals"] = intervals;
    out << j.dump(2) << '\n';
  }
}

void emit_pl(std::ostream& out, const PLFunction& u, const std::string& format, const std::string& title) {
  if (format == "svg") {
    out << svg_pl_plot(u, title);
  } else if (format == "csv") {
    out << "t,value\n";
    for (std::size_t k = 0; k < u.breakpoints().size(); ++k) {
      out << u.breakpoints()[k].str() << ',' << u.values()[k].str() << '\n';
    }
  } else {
    Json j = to_json(u);
    j["expr"] = title;
    out << j.dump(2) << '\n';
  }
}

void emit_point(std::ostream& out, const std::string& format, const Rational& t, const std::string& value) {
  if (format == "csv") {
    out << "t,value\n" << t.str() << ',' << value << '\n';
  } else {
    out << Json{{"t", t.str()}, {"value", Json::parse(value)}}.dump(2) << '\n';
  }
}

// A sum T(p,q) # -T(p',q') in one of the tabulated families, if e is one.
std::optional<std::array<long, 4>> as_family_pair(const KnotExpr& e) {
  const auto* sum = std::get_if<expr::Sum>(&e.node());
  if (!sum || sum->parts.size() != 2) return std::nullopt;
  const auto* a = std::get_if<expr::Torus>(&sum->parts[0].node());
  const auto* m = std::get_if<expr::Mirror>(&sum->parts[1].node());
  if (!a || !m) return std::nullopt;
  const auto* b = std::get_if<expr::Torus>(&m->base->node());
  if (!b || !classify_pair(a->p, a->q, b->p, b->q)) return std::nullopt;
  return std::array<long, 4>{a->p, a->q, b->p, b->q};
}

ClaspBoundReport bounds_for(const KnotExpr& e) {
  std::optional<ClaspBoundReport> report;
  auto absorb = [&](ClaspBoundReport r) { report = report ? merge(*report, r) : std::move(r); };
  if (const auto pair = as_family_pair(e)) {
    absorb(theorem11_report((*pair)[0], (*pair)[1], (*pair)[2], (*pair)[3], 1));
  } else {
    try {
      absorb(clasp_bounds_from_signature(signature_function(e)));
    } catch (const UnsupportedNode&) {
    }
  }
  try {
    absorb(clasp_bounds_from_upsilon(upsilon(e)));
  } catch (const UnsupportedNode&) {
  }
  if (!report) throw UnsupportedNode("neither signature nor Upsilon is available for " + render(e));
  return *report;
}

struct OracleSample {
  Rational t;
  std::optional<long> oracle;
  std::optional<long> closed_form;
  long nullity = 0;
  std::string status;  // "agree", "disagree", "skipped: ..."
};

Json sample_json(const OracleSample& s) {
  Json j{{"t", s.t.str()}, {"status", s.status}};
  if (s.oracle) j["oracle"] = *s.oracle;
  if (s.closed_form) j["closed_form"] = *s.closed_form;
  if (s.oracle) j["nullity"] = s.nullity;
  return j;
}

int compare_sig(std::ostream& out, const std::vector<std::string>& pairs, std::size_t samples, std::uint64_t seed,
                const std::string& at, double tol) {
  bool all_agree = true;
  Json report = Json::array();
  for (const auto& text : pairs) {
    const auto [p, q] = parse_pair(text);
    const auto knot = TorusKnot::make(p, q);
    const auto f = signature_step_function(p, q);
    const auto m = seifert_matrix_from_braid(parse_braid(torus_braid_word(p, q), static_cast<int>(p)));
    const auto ts = at.empty() ? regular_samples(samples, seed, knot.product()) : std::vector{Rational::parse(at)};
    Json rows = Json::array();
    for (const auto& t : ts) {
      OracleSample s{t, {}, {}, 0, {}};
      if (t <= Rational(0) || t >= Rational(1)) throw DomainError("t=" + t.str() + " outside (0,1)");
      if (f.is_breakpoint(t)) {
        s.status = "skipped: breakpoint";
      } else {
        const auto sn = tl_signature_nullity(m, t, tol);
        s.oracle = sn.sigma;
        s.nullity = sn.eta;
        s.closed_form = f.eval(t);
        const bool ok = sn.sigma == *s.closed_form && sn.eta == 0;
        s.status = ok ? "agree" : "disagree";
        all_agree = all_agree && ok;
      }
      rows.push_back(sample_json(s));
    }
    report.push_back({{"p", p}, {"q", q}, {"samples", rows}});
  }
  out << Json{{"pairs", report}, {"all_agree", all_agree}}.dump(2) << '\n';
  return all_agree ? kExitOk : kExitMismatch;
}

int compare_alex(std::ostream& out, const std::string& pair) {
  const auto [p, q] = parse_pair(pair);
  TorusKnot::make(p, q);
  const auto m = seifert_matrix_from_braid(parse_braid(torus_braid_word(p, q), static_cast<int>(p)));
  const auto oracle = alexander_polynomial(m);
  const auto closed = torus_alexander(p, q);
  const bool equal = oracle == closed;
  out << Json{{"p", p}, {"q", q}, {"oracle", oracle.str()}, {"closed_form", closed.str()}, {"equal", equal}}.dump(2)
      << '\n';
  return equal ? kExitOk : kExitMismatch;
}

Json normal_form_json(const NormalForm& nf) {
  Json factors = Json::array();
  for (const auto& f : nf.factors) factors.push_back(f);
  return {{"strands", nf.strands}, {"infimum", nf.infimum}, {"factors", factors},
          {"word", render_braid(to_word(nf))}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"knotclasp: signatures, Upsilon and clasp-number bounds for knots"};
  app.require_subcommand(1);

  std::string expr_text, format = "json", at;
  const std::vector<std::string> formats{"json", "csv", "svg"};

  auto* sig = app.add_subcommand("sig", "Tristram-Levine signature function of an expression");
  sig->add_option("expr", expr_text, "knot expression, e.g. \"T(3,7) # -T(4,5)\"")->required();
  sig->add_option("--at", at, "evaluate at a rational t in (0,1)");
  sig->add_option("--format", format, "json, csv or svg")->check(CLI::IsMember(formats));

  auto* ups = app.add_subcommand("upsilon", "Upsilon function on [0,2]");
  ups->add_option("expr", expr_text, "knot expression")->required();
  ups->add_option("--at", at, "evaluate at a rational t in [0,2]");
  ups->add_option("--format", format, "json, csv or svg")->check(CLI::IsMember(formats));

  auto* bnd = app.add_subcommand("bounds", "lower bounds on g4, c4+, c4-, c4");
  bnd->add_option("expr", expr_text, "knot expression")->required();

  auto* braid = app.add_subcommand("braid", "braid word operations");
  braid->require_subcommand(1);
  int strands = 0;
  std::string w1, w2;
  std::size_t index = 0;
  auto* eq = braid->add_subcommand("eq", "decide equality in B_n");
  eq->add_option("-n", strands, "number of strands")->required();
  eq->add_option("first", w1)->required();
  eq->add_option("second", w2)->required();
  auto* nf = braid->add_subcommand("nf", "left normal form");
  nf->add_option("-n", strands, "number of strands")->required();
  nf->add_option("word", w1)->required();
  auto* cc = braid->add_subcommand("cc", "crossing change at a 1-based index");
  cc->add_option("-n", strands, "number of strands")->required();
  cc->add_option("word", w1)->required();
  cc->add_option("index", index)->required();

  auto* oracle = app.add_subcommand("oracle", "compare closed forms against Seifert-matrix computations");
  oracle->require_subcommand(1);
  std::vector<std::string> pairs;
  std::string pair;
  std::size_t samples = 20;
  std::uint64_t seed = kDefaultSeed;
  double tol = 1e-9;
  auto* csig = oracle->add_subcommand("compare-sig", "signatures at regular sample points");
  csig->add_option("--pairs", pairs, "torus parameters p,q")->required()->expected(1, -1);
  csig->add_option("--samples", samples, "number of regular samples per pair");
  csig->add_option("--seed", seed, "sampling seed");
  csig->add_option("--t", at, "single sample point instead of random ones");
  csig->add_option("--tol", tol, "relative eigenvalue tolerance");
  auto* calex = oracle->add_subcommand("compare-alex", "Alexander polynomial of a torus braid closure");
  calex->add_option("--pair", pair, "torus parameters p,q")->required();

  auto* repro = app.add_subcommand("reproduce", "re-run the published checks; exit 0 iff all pass");
  std::string suite;
  long n_max = 25;
  repro->add_option("suite", suite, "I, II, III, fig1, upsilon or all")
      ->required()
      ->check(CLI::IsMember({"I", "II", "III", "fig1", "upsilon", "all"}));
  repro->add_option("--n-max", n_max, "largest family index for I and II");
  repro->add_option("--seed", seed, "seed for sampled points");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*sig) {
      const auto e = parse(expr_text);
      const auto f = signature_function(e);
      if (!at.empty()) {
        const auto t = Rational::parse(at);
        emit_point(out, format, t, std::to_string(f.eval(t)));
      } else {
        emit_step(out, f, format, render(e));
      }
    } else if (*ups) {
      const auto e = parse(expr_text);
      const auto u = upsilon(e);
      if (!at.empty()) {
        const auto t = Rational::parse(at);
        emit_point(out, format, t, Json(u.eval(t).str()).dump());
      } else {
        emit_pl(out, u, format, render(e));
      }
    } else if (*bnd) {
      const auto e = parse(expr_text);
      Json j = to_json(bounds_for(e));
      j["expr"] = render(e);
      out << j.dump(2) << '\n';
    } else if (*eq) {
      out << (braids_equal(parse_braid(w1, strands), parse_braid(w2, strands)) ? "true" : "false") << '\n';
    } else if (*nf) {
      out << normal_form_json(normal_form(parse_braid(w1, strands))).dump(2) << '\n';
    } else if (*cc) {
      out << render_braid(crossing_change(parse_braid(w1, strands), index)) << '\n';
    } else if (*csig) {
      return compare_sig(out, pairs, samples, seed, at, tol);
    } else if (*calex) {
      return compare_alex(out, pair);
    } else if (*repro) {
      const auto results = reproduce(suite, n_max, seed);
      Json j = Json::array();
      bool all_pass = true;
      for (const auto& r : results) {
        j.push_back(to_json(r));
        all_pass = all_pass && r.pass;
      }
      out << j.dump(2) << '\n';
      return all_pass ? kExitOk : kExitMismatch;
    }
  } catch (const Error& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

}  // namespace knotclasp::cli
