#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "abel/moments.hpp"
#include "abel/odeverify.hpp"
#include "abel/pcc.hpp"
#include "abel/planar.hpp"
#include "abel/returnmap.hpp"
#include "abel/serialize.hpp"
#include "abel/signchange.hpp"
#include "abel/system.hpp"

namespace {

using abel::json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitInternal = 2;

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InternalCheckFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input_path;
  std::string format = "json";
  std::string csv_path;
  int order = 12;
  int max_k = 20;
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  std::string grid_spec;
};

json read_input_json(const Options& opt) {
  std::string text;
  if (opt.input_path.empty()) {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(opt.input_path);
    if (!in) throw BadInput("cannot open input file: " + opt.input_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw BadInput(std::string("invalid JSON input: ") + e.what());
  }
}

abel::AbelSystem read_system(const Options& opt) {
  try {
    return abel::system_from_json(read_input_json(opt));
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  } catch (const json::exception& e) {
    throw BadInput(e.what());
  }
}

abel::PlanarSystem read_planar(const Options& opt) {
  try {
    return abel::planar_from_json(read_input_json(opt));
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  } catch (const json::exception& e) {
    throw BadInput(e.what());
  }
}

abel::IntegratorOptions integrator_options(const Options& opt) {
  abel::IntegratorOptions io;
  io.rel_tol = opt.rel_tol;
  io.abs_tol = opt.abs_tol;
  return io;
}

std::vector<double> scan_grid(const Options& opt) {
  if (opt.grid_spec.empty()) return abel::default_rho_grid();
  std::vector<double> grid;
  std::istringstream items(opt.grid_spec);
  std::string item;
  while (std::getline(items, item, ',')) {
    double m = 0;
    size_t used = 0;
    try {
      m = std::stod(item, &used);
    } catch (const std::exception&) {
      throw BadInput("--grid expects comma-separated numbers");
    }
    if (used != item.size()) throw BadInput("--grid expects comma-separated numbers");
    if (!(m > 0)) throw BadInput("--grid expects positive magnitudes");
    grid.push_back(m);
    grid.push_back(-m);
  }
  if (grid.empty()) throw BadInput("--grid expects at least one magnitude");
  return grid;
}

/// g = t^{n-1} with unit coefficient and n even, on the default interval.
std::optional<int> detect_power_g(const abel::PolyAbelSystem& sys) {
  if (sys.a != abel::Rational(-1) || sys.b != abel::Rational(1)) return std::nullopt;
  auto deg = sys.g.degree();
  if (!deg || *deg < 1) return std::nullopt;
  int n = *deg + 1;
  if (n % 2 != 0) return std::nullopt;
  if (sys.g != abel::Poly::monomial(*deg)) return std::nullopt;
  return n;
}

std::string describe_system(const abel::AbelSystem& sys) {
  std::ostringstream os;
  if (sys.is_poly()) {
    const auto& s = sys.poly();
    os << "f = " << s.f.str() << ", g = " << s.g.str() << " on [" << s.a.compact_str() << ", "
       << s.b.compact_str() << "]";
  } else {
    const auto& s = sys.trig();
    os << "f = " << s.f.str() << ", g = " << s.g.str() << " on [0, 2pi]";
  }
  return os.str();
}

void emit(const json& doc, const Options& opt, const std::string& text_rendering) {
  if (opt.format == "text")
    std::cout << text_rendering;
  else
    std::cout << doc.dump(2) << "\n";
}

std::string moment_list_text(const std::vector<abel::MomentValue>& ms) {
  std::ostringstream os;
  for (size_t i = 0; i < ms.size(); ++i) os << (i ? ", " : "") << ms[i].str();
  return os.str();
}

// ---------------------------------------------------------------------------

int cmd_moments(const Options& opt) {
  abel::AbelSystem sys = read_system(opt);
  abel::MomentReport rep;
  try {
    rep = abel::moment_report(sys, opt.max_k);
  } catch (const abel::NonZeroMeanError& e) {
    throw BadInput(std::string(e.what()) +
                   " (moments need a mean-zero trigonometric g)");
  }
  json doc;
  doc["command"] = "moments";
  doc["system"] = abel::system_to_json(sys);
  doc["report"] = abel::moment_report_to_json(rep);

  std::ostringstream text;
  text << "system: " << describe_system(sys) << "\n";
  text << "integral of g: " << rep.g_integral.str() << "\n";
  text << "moments m_0..m_" << opt.max_k << ": " << moment_list_text(rep.moments) << "\n";
  if (rep.first_nonzero_index)
    text << "first nonzero moment: m_" << *rep.first_nonzero_index << "\n";
  else
    text << "all moments vanish up to k = " << opt.max_k << "\n";
  emit(doc, opt, text.str());
  return kExitOk;
}

json series_document(const abel::PolyAbelSystem& s, const abel::ReturnMapSeries& series,
                     std::optional<abel::SeriesIdentityCheck> identities) {
  json doc;
  doc["series"] = abel::series_to_json(series);
  auto k = abel::center_order(series);
  doc["center_order"] = k ? json(*k) : json(nullptr);
  json conds = json::array();
  for (const auto& v : abel::center_condition_integrals(s, series))
    conds.push_back(v.compact_str());
  doc["center_conditions"] = std::move(conds);
  if (identities) {
    json idj;
    idj["first"] = identities->first;
    idj["second"] = identities->second;
    idj["third"] = identities->third;
    doc["identities"] = std::move(idj);
  } else {
    doc["identities"] = nullptr;
  }
  return doc;
}

int cmd_series(const Options& opt) {
  abel::AbelSystem sys = read_system(opt);
  if (!sys.is_poly())
    throw BadInput("the return-map series is defined for polynomial systems only");
  if (opt.order < 2) throw BadInput("--order must be >= 2");
  const auto& s = sys.poly();
  auto series = abel::compute_return_series(sys, opt.order);
  std::optional<abel::SeriesIdentityCheck> identities;
  if (opt.order >= 3) identities = abel::series_integral_identities(s, series);

  json doc;
  doc["command"] = "series";
  doc["system"] = abel::system_to_json(sys);
  json sub = series_document(s, series, identities);
  for (auto& [key, value] : sub.items()) doc[key] = value;

  std::ostringstream text;
  text << "system: " << describe_system(sys) << "\n";
  auto k = abel::center_order(series);
  if (k)
    text << "first obstruction: r_" << *k << "(b) = " << series.endpoint(*k).compact_str()
         << "\n";
  else
    text << "no obstruction up to order " << series.order << "\n";
  text << "h-series coefficients: ";
  for (size_t i = 0; i < series.h_coeffs.size(); ++i)
    text << (i ? ", " : "") << series.h_coeffs[i].compact_str();
  text << "\n";
  emit(doc, opt, text.str());

  if (identities && !identities->all()) {
    std::cerr << "internal check failed: a series integral identity does not hold\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_pcc(const Options& opt) {
  abel::AbelSystem sys = read_system(opt);
  if (!sys.is_poly())
    throw BadInput("the composition condition is defined for polynomial systems only");
  const auto& s = sys.poly();
  if (s.f.is_zero() && s.g.is_zero()) throw BadInput("f and g must not both be zero");

  auto wit = abel::check_pcc(s);
  json doc;
  doc["command"] = "pcc";
  doc["system"] = abel::system_to_json(sys);
  doc["witness"] = wit ? abel::witness_to_json(*wit, s) : json(nullptr);

  std::ostringstream text;
  text << "system: " << describe_system(sys) << "\n";
  if (wit) {
    text << "composition witness found:\n";
    text << "  W = " << wit->w.str() << "\n";
    text << "  Ftilde = " << wit->f_tilde.str("w") << "\n";
    text << "  Gtilde = " << wit->g_tilde.str("w") << "\n";
    text << "  W(a) = W(b) = " << wit->w(s.a).compact_str() << "\n";
    if (wit->f_tilde.is_constant())
      text << "  note: Ftilde is constant (f = 0); the witness constrains g only\n";
  } else {
    text << "no composition witness under the divisor search\n";
  }
  emit(doc, opt, text.str());

  if (wit && !abel::verify_witness(s, *wit)) {
    std::cerr << "internal check failed: returned witness does not verify\n";
    return kExitInternal;
  }
  return kExitOk;
}

int cmd_signs(const Options& opt) {
  abel::AbelSystem sys = read_system(opt);
  if (!sys.is_poly())
    throw BadInput("the sign-change criterion is defined for polynomial systems only");
  const auto& s = sys.poly();
  auto n = detect_power_g(s);
  if (!n)
    throw BadInput("the sign-change criterion needs g = t^(n-1) with n even on [-1, 1]");

  json doc;
  doc["command"] = "signs";
  doc["system"] = abel::system_to_json(sys);
  doc["n"] = *n;

  std::ostringstream text;
  text << "system: " << describe_system(sys) << "\n";
  text << "detected g = t^" << (*n - 1) << " (n = " << *n << ")\n";

  try {
    auto rep = abel::moment_propagation_check(s.f, *n, opt.max_k);
    json split;
    split["p"] = abel::poly_to_json(rep.split.p);
    split["q"] = abel::poly_to_json(rep.split.q);
    doc["split"] = std::move(split);
    doc["sign_changes"] = abel::sign_report_to_json(rep.sign_changes);
    json moments = json::array();
    for (const auto& m : rep.moments) moments.push_back(m.compact_str());
    doc["moments"] = std::move(moments);
    doc["hypotheses_hold"] = true;
    doc["failed_hypothesis"] = nullptr;

    text << "even part p: " << rep.split.p.str("s") << "\n";
    text << "sign changes of p on (0,1): " << rep.sign_changes.count << "\n";
    text << "m_0..m_2 vanish; all moments vanish up to k = " << opt.max_k << "\n";
    emit(doc, opt, text.str());
    return kExitOk;
  } catch (const abel::HypothesisFailedError& e) {
    auto split = abel::even_odd_split(s.f);
    json splitj;
    splitj["p"] = abel::poly_to_json(split.p);
    splitj["q"] = abel::poly_to_json(split.q);
    doc["split"] = std::move(splitj);
    if (!split.p.is_zero()) {
      auto sc = abel::sturm_sign_changes(split.p, abel::Rational(0), abel::Rational(1));
      sc.ratio_params = abel::LevelRatioParams{*n, s.f};
      doc["sign_changes"] = abel::sign_report_to_json(sc);
    } else {
      doc["sign_changes"] = nullptr;
    }
    auto mrep = abel::moment_report(sys, opt.max_k);
    json moments = json::array();
    for (const auto& m : mrep.moments) moments.push_back(m.str());
    doc["moments"] = std::move(moments);
    doc["hypotheses_hold"] = false;
    doc["failed_hypothesis"] = e.hypothesis();
    doc["detail"] = e.what();

    text << "hypothesis failed: " << e.what() << "\n";
    emit(doc, opt, text.str());
    return kExitOk;
  }
}

int cmd_reduce(const Options& opt) {
  abel::PlanarSystem planar = read_planar(opt);
  abel::AbelSystem reduced = abel::cherkas_reduce(planar);
  const auto& s = reduced.trig();

  json doc;
  doc["command"] = "reduce";
  doc["planar"] = abel::planar_to_json(planar);
  doc["system"] = abel::system_to_json(reduced);
  json degs;
  degs["f"] = s.f.degree();
  degs["g"] = s.g.degree();
  doc["trig_degrees"] = std::move(degs);

  bool mean_zero = s.g.constant_term().is_zero();
  if (mean_zero && !(s.f.is_zero() && s.g.is_zero())) {
    doc["moments"] = abel::moment_report_to_json(abel::moment_report(reduced, opt.max_k));
  } else {
    doc["moments"] = nullptr;
  }
  doc["caveat"] =
      "the reduction is a diffeomorphism only where the transformed radius stays positive; "
      "small periodic orbits of the planar system lie in that region";

  std::ostringstream text;
  text << "planar system of degree " << planar.n << " reduced to:\n";
  text << "  " << describe_system(reduced) << "\n";
  text << "  trig degrees: f up to " << s.f.degree() << ", g up to " << s.g.degree() << "\n";
  if (!mean_zero)
    text << "  g has nonzero mean; exact moment analysis does not apply\n";
  emit(doc, opt, text.str());
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  abel::AbelSystem sys = read_system(opt);
  auto scan = abel::displacement_scan(sys, scan_grid(opt), integrator_options(opt));

  json doc;
  doc["command"] = "verify";
  doc["system"] = abel::system_to_json(sys);
  doc["scan"] = abel::scan_to_json(scan);

  if (!opt.csv_path.empty()) {
    std::ofstream csv(opt.csv_path);
    if (!csv) throw BadInput("cannot open CSV output file: " + opt.csv_path);
    csv << "rho,displacement,steps,status\n";
    for (const auto& p : scan.points)
      csv << p.rho << "," << p.displacement << "," << p.steps << "," << p.status << "\n";
  }

  std::ostringstream text;
  text << "system: " << describe_system(sys) << "\n";
  for (const auto& p : scan.points) {
    text << "  rho = " << p.rho << ": ";
    if (p.status == "ok")
      text << "d = " << p.displacement << " (" << p.steps << " steps)\n";
    else
      text << p.status << "\n";
  }
  if (scan.estimated_order)
    text << "estimated leading order: " << *scan.estimated_order
         << " (fit residual " << scan.fit_quality << ")\n";
  else
    text << "displacements are numerically zero on the grid\n";
  emit(doc, opt, text.str());
  return kExitOk;
}

int cmd_matrix(const Options& opt, int n, std::vector<int> degrees, std::vector<int> indices) {
  if (degrees.empty()) degrees = {0, 2, 4};
  if (indices.empty()) indices = {0, 1, 2};
  abel::MomentLinearSystem mls;
  try {
    mls = abel::moment_linear_system(n, degrees, indices);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }

  json doc;
  doc["command"] = "matrix";
  doc["n"] = n;
  doc["report"] = abel::moment_linear_system_to_json(mls);

  std::ostringstream text;
  text << "moment matrix for g = t^" << (n - 1) << " (n = " << n << ")\n";
  for (const auto& row : mls.matrix) {
    text << "  [";
    for (size_t i = 0; i < row.size(); ++i) text << (i ? ", " : "") << row[i].compact_str();
    text << "]\n";
  }
  if (mls.det) text << "det = " << mls.det->compact_str() << "\n";
  text << "kernel dimension: " << mls.kernel.size() << "\n";
  emit(doc, opt, text.str());
  return kExitOk;
}

int cmd_full(const Options& opt) {
  abel::AbelSystem sys = read_system(opt);
  json doc;
  doc["command"] = "full";
  doc["system"] = abel::system_to_json(sys);

  std::ostringstream text;
  text << "system: " << describe_system(sys) << "\n";

  json verdict;
  std::string conclusion;

  if (sys.is_poly()) {
    const auto& s = sys.poly();
    if (opt.order < 3) throw BadInput("--order must be >= 3 for the full pipeline");

    abel::MomentReport moments = abel::moment_report(sys, opt.max_k);
    doc["moments"] = abel::moment_report_to_json(moments);

    auto series = abel::compute_return_series(sys, opt.order);
    auto identities = abel::series_integral_identities(s, series);
    json sub = series_document(s, series, identities);
    for (auto& [key, value] : sub.items()) doc[key] = value;
    if (!identities.all()) {
      std::cerr << "internal check failed: a series integral identity does not hold\n";
      return kExitInternal;
    }

    std::optional<abel::PCCWitness> wit;
    if (!(s.f.is_zero() && s.g.is_zero())) wit = abel::check_pcc(s);
    doc["pcc"] = wit ? abel::witness_to_json(*wit, s) : json(nullptr);
    if (wit && !abel::verify_witness(s, *wit)) {
      std::cerr << "internal check failed: returned witness does not verify\n";
      return kExitInternal;
    }

    auto n = detect_power_g(s);
    if (n) {
      try {
        auto prop = abel::moment_propagation_check(s.f, *n, opt.max_k);
        json signs;
        signs["n"] = *n;
        signs["sign_changes"] = abel::sign_report_to_json(prop.sign_changes);
        signs["hypotheses_hold"] = true;
        doc["signs"] = std::move(signs);
      } catch (const abel::HypothesisFailedError& e) {
        json signs;
        signs["n"] = *n;
        signs["hypotheses_hold"] = false;
        signs["failed_hypothesis"] = e.hypothesis();
        doc["signs"] = std::move(signs);
      }
    } else {
      doc["signs"] = nullptr;
    }

    auto scan = abel::displacement_scan(sys, scan_grid(opt), integrator_options(opt));
    doc["scan"] = abel::scan_to_json(scan);
    abel::CrossValidationReport cross;
    try {
      cross = abel::cross_validate(sys, series, scan);
    } catch (const abel::MismatchError& e) {
      std::cerr << "internal check failed: " << e.what() << "\n";
      return kExitInternal;
    }
    doc["cross_validation"] = abel::cross_report_to_json(cross);

    auto k = abel::center_order(series);
    verdict["symbolic"] =
        k ? "first obstruction at order " + std::to_string(*k)
          : "no obstruction up to order " + std::to_string(series.order);
    verdict["moments"] = moments.first_nonzero_index
                             ? "first nonzero moment at k = " +
                                   std::to_string(*moments.first_nonzero_index)
                             : "all moments vanish up to k = " + std::to_string(opt.max_k);
    verdict["pcc"] = wit ? "witness present" : "no witness found";
    verdict["numeric"] = cross.summary;

    bool early_moment_obstruction =
        moments.first_nonzero_index && *moments.first_nonzero_index <= 2;
    if (wit)
      conclusion = "center: certified by the composition witness";
    else if (k)
      conclusion = "not a center: the return map has a nonzero coefficient at order " +
                   std::to_string(*k);
    else if (early_moment_obstruction)
      conclusion = "not a center: a necessary moment condition fails (m_" +
                   std::to_string(*moments.first_nonzero_index) + " is nonzero)";
    else
      conclusion = "undecided: no obstruction found up to the configured orders";
  } else {
    const auto& s = sys.trig();
    abel::Rational g_mean_twice = s.g.integral_over_period();

    std::optional<abel::MomentReport> moments;
    if (g_mean_twice.is_zero()) {
      moments = abel::moment_report(sys, opt.max_k);
      doc["moments"] = abel::moment_report_to_json(*moments);
    } else {
      doc["moments"] = nullptr;
    }
    doc["center_order"] = nullptr;
    doc["pcc"] = nullptr;
    doc["signs"] = nullptr;

    auto scan = abel::displacement_scan(sys, scan_grid(opt), integrator_options(opt));
    doc["scan"] = abel::scan_to_json(scan);

    if (moments) {
      verdict["moments"] = moments->first_nonzero_index
                               ? "first nonzero moment at k = " +
                                     std::to_string(*moments->first_nonzero_index)
                               : "all moments vanish up to k = " + std::to_string(opt.max_k);
    } else {
      verdict["moments"] = "unavailable: g has nonzero mean";
    }
    verdict["numeric"] = scan.estimated_order
                             ? "estimated leading order " + std::to_string(*scan.estimated_order)
                             : "displacements are numerically zero on the grid";

    if (!g_mean_twice.is_zero())
      conclusion = "not a center: the integral of g over the period is nonzero";
    else if (moments && moments->first_nonzero_index && *moments->first_nonzero_index <= 2)
      conclusion = "not a center: a necessary moment condition fails (m_" +
                   std::to_string(*moments->first_nonzero_index) + " is nonzero)";
    else
      conclusion = "undecided: necessary conditions hold; numeric evidence only";
  }

  verdict["conclusion"] = conclusion;
  doc["verdict"] = std::move(verdict);

  text << "conclusion: " << conclusion << "\n";
  emit(doc, opt, text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Center-condition analysis for Abel differential equations "
               "x' = f(t) x^3 + g(t) x^2"};
  app.require_subcommand(1);

  Options opt;
  int matrix_n = 2;
  std::vector<int> matrix_degrees, matrix_indices;

  auto add_io = [&](CLI::App* cmd, bool with_input = true) {
    if (with_input)
      cmd->add_option("input", opt.input_path, "input JSON file (standard input when omitted)");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* moments = app.add_subcommand("moments", "exact moment sequence of the system");
  add_io(moments);
  moments->add_option("--max-k", opt.max_k, "highest moment index")->check(CLI::Range(2, 1000));

  auto* series = app.add_subcommand("series", "return-map series and center obstructions");
  add_io(series);
  series->add_option("--order", opt.order, "series truncation order")->check(CLI::Range(2, 64));

  auto* pcc = app.add_subcommand("pcc", "polynomial composition-condition witness search");
  add_io(pcc);

  auto* signs = app.add_subcommand("signs", "sign-change criterion for g = t^(n-1)");
  add_io(signs);
  signs->add_option("--max-k", opt.max_k, "highest moment index")->check(CLI::Range(2, 1000));

  auto* reduce = app.add_subcommand("reduce", "reduce a planar system to an Abel equation");
  add_io(reduce);
  reduce->add_option("--max-k", opt.max_k, "highest moment index")->check(CLI::Range(2, 1000));

  auto* verify = app.add_subcommand("verify", "numeric displacement scan");
  add_io(verify);
  verify->add_option("--rel-tol", opt.rel_tol, "relative integration tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--abs-tol", opt.abs_tol, "absolute integration tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--grid", opt.grid_spec,
                     "comma-separated positive rho magnitudes (expanded to +-)");
  verify->add_option("--csv", opt.csv_path, "write per-point results to a CSV file");

  auto* matrix = app.add_subcommand("matrix", "moment linear system for g = t^(n-1)");
  add_io(matrix, false);
  matrix->add_option("--n", matrix_n, "even power in g = t^(n-1)")->required();
  matrix->add_option("--degrees", matrix_degrees, "even degrees (columns)")->delimiter(',');
  matrix->add_option("--indices", matrix_indices, "moment indices (rows)")->delimiter(',');

  auto* full = app.add_subcommand("full", "complete analysis pipeline with verdict");
  add_io(full);
  full->add_option("--order", opt.order, "series truncation order")->check(CLI::Range(3, 64));
  full->add_option("--max-k", opt.max_k, "highest moment index")->check(CLI::Range(2, 1000));
  full->add_option("--rel-tol", opt.rel_tol, "relative integration tolerance")
      ->check(CLI::PositiveNumber);
  full->add_option("--abs-tol", opt.abs_tol, "absolute integration tolerance")
      ->check(CLI::PositiveNumber);
  full->add_option("--grid", opt.grid_spec,
                   "comma-separated positive rho magnitudes (expanded to +-)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (moments->parsed()) return cmd_moments(opt);
    if (series->parsed()) return cmd_series(opt);
    if (pcc->parsed()) return cmd_pcc(opt);
    if (signs->parsed()) return cmd_signs(opt);
    if (reduce->parsed()) return cmd_reduce(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (matrix->parsed()) return cmd_matrix(opt, matrix_n, matrix_degrees, matrix_indices);
    if (full->parsed()) return cmd_full(opt);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const abel::MismatchError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::logic_error& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return kExitInternal;
  } catch (const abel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitOk;
}
