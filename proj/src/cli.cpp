#include "starhess/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "starhess/appell.hpp"
#include "starhess/bidiag.hpp"
#include "starhess/mop.hpp"
#include "starhess/paths.hpp"
#include "starhess/posspec.hpp"
#include "starhess/prodmat.hpp"
#include "starhess/serialize.hpp"
#include "starhess/verify.hpp"

namespace starhess {
namespace cli {

namespace {

using nlohmann::json;

struct CommonOpts {
  int r = 1;
  int j = 0;
  int n = 0;
  int k = 0;
  int size = 6;
  std::string alpha = "symbolic";
  std::string format = "json";
  std::string out;
  std::string width = "1/1024";
  int max_minor = -1;
};

void emit(const CommonOpts& opts, const std::string& text) {
  if (opts.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(opts.out);
  if (!f) throw UsageError("cannot open output file '" + opts.out + "'");
  f << text;
  if (!text.empty() && text.back() != '\n') f << "\n";
}

bool symbolic_mode(const AlphaSpec& a) { return a.mode() == AlphaSpec::Mode::Symbolic; }

std::string csv_join(const std::vector<std::string>& fields) {
  std::string out;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += fields[i];
  }
  return out;
}

// ---- hess ----------------------------------------------------------------

template <class R>
std::string hess_artifact(const CommonOpts& opts, const AlphaSpec& alpha) {
  auto H = bidiag::hessenberg_product<R>(opts.r, opts.j, alpha, opts.size);
  if (opts.format == "json") {
    json doc = H;
    return doc.dump(2);
  }
  std::ostringstream os;
  std::vector<std::string> header;
  for (int c = 0; c < opts.size; ++c) header.push_back("c" + std::to_string(c));
  os << csv_join(header) << "\n";
  for (int m = 0; m < opts.size; ++m) {
    std::vector<std::string> row;
    for (int c = 0; c < opts.size; ++c) row.push_back(H.entry(m, c).str());
    os << csv_join(row) << "\n";
  }
  return os.str();
}

int cmd_hess(const CommonOpts& opts) {
  auto alpha = AlphaSpec::parse(opts.alpha, opts.r);
  emit(opts, symbolic_mode(alpha) ? hess_artifact<MultiPoly>(opts, alpha)
                                  : hess_artifact<Rational>(opts, alpha));
  return 0;
}

// ---- paths ---------------------------------------------------------------

template <class R>
json paths_value(const CommonOpts& opts, const AlphaSpec& alpha) {
  return json(paths::generalised_sr<R>(opts.r, opts.j, opts.n, opts.k, alpha));
}

int cmd_paths(const CommonOpts& opts, bool list) {
  auto alpha = AlphaSpec::parse(opts.alpha, opts.r);
  json value = symbolic_mode(alpha) ? paths_value<MultiPoly>(opts, alpha)
                                    : paths_value<Rational>(opts, alpha);
  if (opts.format == "json") {
    json doc = {{"r", opts.r}, {"j", opts.j}, {"n", opts.n}, {"k", opts.k}, {"value", value}};
    if (list) {
      long m = opts.r + 1;
      auto listing = paths::list_dyck_paths(
          opts.r, {0, 0}, {m * opts.n + opts.j, m * opts.k + opts.j});
      doc["paths"] = listing;
    }
    emit(opts, doc.dump(2));
    return 0;
  }
  if (list) throw UsageError("path listing is only available as json");
  std::ostringstream os;
  os << "r,j,n,k,value\n";
  std::string v = value.is_string() ? value.get<std::string>() : value.dump();
  os << opts.r << "," << opts.j << "," << opts.n << "," << opts.k << "," << v << "\n";
  emit(opts, os.str());
  return 0;
}

// ---- mop -----------------------------------------------------------------

template <class R>
std::string mop_artifact(const CommonOpts& opts, const AlphaSpec& alpha, bool with_j) {
  std::vector<UniPoly<R>> polys;
  if (with_j) {
    auto S = mop::symmetric_sequence<R>(opts.r, alpha, (opts.r + 1) * opts.n + opts.j);
    polys = mop::decompose(S)[opts.j].polys;
    polys.resize(opts.n + 1);
  } else {
    polys = mop::symmetric_sequence<R>(opts.r, alpha, opts.n).polys;
  }
  if (opts.format == "json") {
    json doc = {{"r", opts.r}, {"alpha", alpha.describe()}, {"polys", polys}};
    if (with_j) doc["j"] = opts.j;
    return doc.dump(2);
  }
  std::ostringstream os;
  os << "n,degree,coeffs\n";
  for (size_t n = 0; n < polys.size(); ++n) {
    std::string coeffs;
    for (int d = 0; d <= polys[n].degree(); ++d) {
      if (d) coeffs += ";";
      coeffs += polys[n].coeff(d).str();
    }
    os << n << "," << polys[n].degree() << "," << coeffs << "\n";
  }
  return os.str();
}

int cmd_mop(const CommonOpts& opts, bool with_j) {
  auto alpha = AlphaSpec::parse(opts.alpha, opts.r);
  emit(opts, symbolic_mode(alpha) ? mop_artifact<MultiPoly>(opts, alpha, with_j)
                                  : mop_artifact<Rational>(opts, alpha, with_j));
  return 0;
}

// ---- zeros ---------------------------------------------------------------

int cmd_zeros(const CommonOpts& opts) {
  auto alpha = AlphaSpec::parse(opts.alpha, opts.r);
  if (symbolic_mode(alpha)) throw UsageError("zeros need a numeric alpha (appell or a list)");
  Rational width = Rational::parse(opts.width);
  auto S = mop::symmetric_sequence<Rational>(opts.r, alpha, (opts.r + 1) * opts.n + opts.j);
  auto comp = mop::decompose(S)[opts.j];
  auto boxes = posspec::isolate_positive_simple_roots(comp.polys[opts.n], width);
  auto star = posspec::star_zero_map(opts.r, opts.j, boxes, width);

  if (opts.format == "json") {
    json doc = {{"r", opts.r},       {"j", opts.j},   {"n", opts.n},
                {"width", opts.width}, {"boxes", boxes}, {"star", star},
                {"origin_multiplicity", opts.j}};
    emit(opts, doc.dump(2));
    return 0;
  }
  std::ostringstream os;
  os << "r,j,n,index,lo,hi,ray\n";
  for (size_t i = 0; i < boxes.size(); ++i)
    os << opts.r << "," << opts.j << "," << opts.n << "," << i << "," << boxes[i].lo.str() << ","
       << boxes[i].hi.str() << ",\n";
  for (size_t i = 0; i < star.size(); ++i)
    os << opts.r << "," << opts.j << "," << opts.n << "," << i / (opts.r + 1) << ","
       << star[i].radius.lo.str() << "," << star[i].radius.hi.str() << "," << star[i].ray << "\n";
  if (opts.j >= 1)
    os << opts.r << "," << opts.j << "," << opts.n << ",-1,0,0,origin\n";
  emit(opts, os.str());
  return 0;
}

// ---- tp ------------------------------------------------------------------

template <class R>
int tp_run(const CommonOpts& opts, const AlphaSpec& alpha, int max_order) {
  auto H = bidiag::hessenberg_product<R>(opts.r, opts.j, alpha, opts.size).dense();
  auto verdict = posspec::tp_check(H, opts.size, max_order, /*keep_reports=*/true);
  auto join_idx = [](const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ";";
      s += std::to_string(v[i]);
    }
    return s;
  };
  if (opts.format == "json") {
    json reports = json::array();
    for (const auto& rep : verdict.reports)
      reports.push_back({{"order", rep.order},
                         {"rows", rep.rows},
                         {"cols", rep.cols},
                         {"nonneg", rep.nonneg},
                         {"value", rep.value}});
    json doc = {{"r", opts.r},
                {"j", opts.j},
                {"size", opts.size},
                {"max_order", max_order},
                {"all_nonnegative", verdict.all_nonnegative},
                {"minors", std::move(reports)}};
    emit(opts, doc.dump(2));
  } else {
    std::ostringstream os;
    os << "order,rows,cols,nonneg,value\n";
    for (const auto& rep : verdict.reports)
      os << rep.order << "," << join_idx(rep.rows) << "," << join_idx(rep.cols) << ","
         << (rep.nonneg ? "true" : "false") << "," << rep.value << "\n";
    emit(opts, os.str());
  }
  if (!verdict.all_nonnegative)
    std::cerr << "negative minor: order " << verdict.first_violation.order << " value "
              << verdict.first_violation.value << "\n";
  return verdict.all_nonnegative ? 0 : 1;
}

int cmd_tp(const CommonOpts& opts) {
  auto alpha = AlphaSpec::parse(opts.alpha, opts.r);
  if (symbolic_mode(alpha)) {
    int max_order = opts.max_minor > 0 ? opts.max_minor : 3;
    if (max_order > posspec::kMaxSymbolicMinorOrder)
      throw UsageError("symbolic minors are capped at order " +
                       std::to_string(posspec::kMaxSymbolicMinorOrder));
    return tp_run<MultiPoly>(opts, alpha, max_order);
  }
  int max_order = opts.max_minor > 0 ? opts.max_minor : opts.size;
  return tp_run<Rational>(opts, alpha, max_order);
}

// ---- appell --------------------------------------------------------------

int cmd_appell(const CommonOpts& opts) {
  auto mom = appell::moments(opts.r, opts.j, opts.n);
  if (opts.format == "json") {
    json params = json::array(), moments = json::array();
    for (const auto& p : mom.params) params.push_back(p.str());
    for (const auto& m : mom.moments) moments.push_back(m.str());
    json doc = {{"r", opts.r},
                {"j", opts.j},
                {"meijer_params", std::move(params)},
                {"moments", std::move(moments)}};
    emit(opts, doc.dump(2));
    return 0;
  }
  std::ostringstream os;
  os << "kind,index,value\n";
  for (size_t i = 0; i < mom.params.size(); ++i)
    os << "param," << i + 1 << "," << mom.params[i].str() << "\n";
  for (size_t n = 0; n < mom.moments.size(); ++n)
    os << "moment," << n << "," << mom.moments[n].str() << "\n";
  emit(opts, os.str());
  return 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const CommonOpts& opts, const std::string& suite, std::optional<int> r_only,
               std::optional<int> max_override) {
  std::vector<int> ids;
  if (suite == "all") {
    for (const auto& [id, name] : verify::catalogue()) ids.push_back(id);
  } else {
    ids.push_back(verify::id_for_name(suite));
  }
  std::ostringstream os;
  bool all_pass = true;
  for (int id : ids) {
    auto res = verify::run_criterion(id, r_only, max_override);
    all_pass = all_pass && res.pass;
    os << (res.pass ? "PASS" : "FAIL") << " " << res.id << " " << res.name << ": " << res.detail
       << "\n";
    std::cerr << res.name << " took " << res.seconds << "s\n";
  }
  emit(opts, os.str());
  return all_pass ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"banded Hessenberg factorisations, symmetric orthogonal polynomials, and"
               " lattice-path generating polynomials, all in exact arithmetic"};
  app.require_subcommand(1);

  CommonOpts opts;
  bool list_paths = false;
  std::string suite;
  std::optional<int> verify_r;
  std::optional<int> verify_max;

  auto add_common = [&](CLI::App* cmd, bool with_width = false) {
    cmd->add_option("--r", opts.r, "family parameter r >= 1");
    cmd->add_option("--j", opts.j, "type index j");
    cmd->add_option("--n", opts.n, "main index n");
    cmd->add_option("--k", opts.k, "secondary index k");
    cmd->add_option("--size", opts.size, "matrix truncation size");
    cmd->add_option("--alpha", opts.alpha, "symbolic | appell | comma-separated rationals");
    cmd->add_option("--format", opts.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opts.out, "output path (stdout when omitted)");
    if (with_width) cmd->add_option("--width", opts.width, "rational box width, e.g. 1/1024");
  };

  auto* hess = app.add_subcommand("hess", "banded Hessenberg section from the factorisation");
  add_common(hess);

  auto* pathsc = app.add_subcommand("paths", "lattice-path generating polynomial");
  add_common(pathsc);
  pathsc->add_flag("--list", list_paths, "also list the paths (json only)");

  auto* mopc = app.add_subcommand("mop", "symmetric sequence or one component");
  add_common(mopc);
  bool with_j = false;
  mopc->callback([&] { with_j = mopc->count("--j") > 0; });

  auto* zeros = app.add_subcommand("zeros", "certified root boxes and star zeros");
  add_common(zeros, /*with_width=*/true);

  auto* tp = app.add_subcommand("tp", "exact minor nonnegativity reports");
  add_common(tp);
  tp->add_option("--max-minor", opts.max_minor, "largest minor order to enumerate");

  auto* appellc = app.add_subcommand("appell", "hypergeometric measure parameters and moments");
  add_common(appellc);

  auto* verifyc = app.add_subcommand("verify", "run a verification suite");
  int verify_r_arg = 0, verify_max_arg = 0;
  verifyc->add_option("suite", suite, "suite name or 'all'")->required();
  verifyc->add_option("--r", verify_r_arg, "restrict to one r");
  verifyc->add_option("--max", verify_max_arg, "override the main size bound");
  verifyc->add_option("--out", opts.out, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (verifyc->count("--r")) verify_r = verify_r_arg;
  if (verifyc->count("--max")) verify_max = verify_max_arg;

  try {
    if (hess->parsed()) return cmd_hess(opts);
    if (pathsc->parsed()) return cmd_paths(opts, list_paths);
    if (mopc->parsed()) return cmd_mop(opts, with_j);
    if (zeros->parsed()) return cmd_zeros(opts);
    if (tp->parsed()) return cmd_tp(opts);
    if (appellc->parsed()) return cmd_appell(opts);
    if (verifyc->parsed()) return cmd_verify(opts, suite, verify_r, verify_max);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand\n";
  return 2;
}

}  // namespace cli
}  // namespace starhess
