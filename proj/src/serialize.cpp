#include "abel/serialize.hpp"

#include <stdexcept>

namespace abel {

namespace {

json rationals_to_json(const std::vector<Rational>& v, bool compact = false) {
  json arr = json::array();
  for (const auto& r : v) arr.push_back(compact ? r.compact_str() : r.str());
  return arr;
}

std::vector<Rational> rationals_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rational strings");
  std::vector<Rational> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("expected a rational string");
    out.push_back(Rational::parse(e.get<std::string>()));
  }
  return out;
}

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("expected a rational string");
  return Rational::parse(j.get<std::string>());
}

std::vector<Rational> trim_trailing_zeros(std::vector<Rational> v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
  return v;
}

}  // namespace

json poly_to_json(const Poly& p) { return rationals_to_json(p.coeffs()); }

Poly poly_from_json(const json& j) { return Poly(rationals_from_json(j)); }

json trig_to_json(const TrigPoly& p) {
  json j;
  j["constant"] = p.constant_term().str();
  j["cos"] = rationals_to_json(trim_trailing_zeros(p.cos_coeffs()));
  j["sin"] = rationals_to_json(trim_trailing_zeros(p.sin_coeffs()));
  return j;
}

TrigPoly trig_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected a trigonometric polynomial object");
  Rational c = j.contains("constant") ? rational_from_json(j.at("constant")) : Rational(0);
  std::vector<Rational> cos_c, sin_c;
  if (j.contains("cos")) cos_c = rationals_from_json(j.at("cos"));
  if (j.contains("sin")) sin_c = rationals_from_json(j.at("sin"));
  size_t n = std::max(cos_c.size(), sin_c.size());
  cos_c.resize(n, Rational(0));
  sin_c.resize(n, Rational(0));
  return TrigPoly(c, std::move(cos_c), std::move(sin_c));
}

json system_to_json(const AbelSystem& sys) {
  json j;
  if (sys.is_poly()) {
    const auto& s = sys.poly();
    j["kind"] = "poly";
    j["f"] = poly_to_json(s.f);
    j["g"] = poly_to_json(s.g);
    j["a"] = s.a.str();
    j["b"] = s.b.str();
  } else {
    const auto& s = sys.trig();
    j["kind"] = "trig";
    j["f"] = trig_to_json(s.f);
    j["g"] = trig_to_json(s.g);
  }
  return j;
}

AbelSystem system_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("system document needs a \"kind\" field");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "poly") {
    Poly f = j.contains("f") ? poly_from_json(j.at("f")) : Poly();
    Poly g = j.contains("g") ? poly_from_json(j.at("g")) : Poly();
    Rational a = j.contains("a") ? rational_from_json(j.at("a")) : Rational(-1);
    Rational b = j.contains("b") ? rational_from_json(j.at("b")) : Rational(1);
    return AbelSystem(PolyAbelSystem(std::move(f), std::move(g), std::move(a), std::move(b)));
  }
  if (kind == "trig") {
    TrigAbelSystem s;
    if (j.contains("f")) s.f = trig_from_json(j.at("f"));
    if (j.contains("g")) s.g = trig_from_json(j.at("g"));
    return AbelSystem(std::move(s));
  }
  throw std::invalid_argument("unknown system kind \"" + kind + "\"");
}

json planar_to_json(const PlanarSystem& sys) {
  json j;
  j["n"] = sys.n;
  j["P"] = rationals_to_json(sys.P);
  j["Q"] = rationals_to_json(sys.Q);
  return j;
}

PlanarSystem planar_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("P") || !j.contains("Q"))
    throw std::invalid_argument("planar system document needs \"n\", \"P\", \"Q\"");
  if (!j.at("n").is_number_integer())
    throw std::invalid_argument("planar system: \"n\" must be an integer");
  PlanarSystem sys;
  sys.n = j.at("n").get<int>();
  sys.P = rationals_from_json(j.at("P"));
  sys.Q = rationals_from_json(j.at("Q"));
  if (sys.n < 2 || sys.P.size() != static_cast<size_t>(sys.n) + 1 ||
      sys.Q.size() != static_cast<size_t>(sys.n) + 1)
    throw std::invalid_argument("planar system: coefficient lists must have length n+1");
  return sys;
}

json moment_report_to_json(const MomentReport& rep) {
  json j;
  json moments = json::array();
  for (const auto& m : rep.moments) moments.push_back(m.str());
  j["moments"] = std::move(moments);
  j["g_integral"] = rep.g_integral.str();
  if (rep.first_nonzero_index)
    j["first_nonzero_index"] = *rep.first_nonzero_index;
  else
    j["first_nonzero_index"] = nullptr;
  return j;
}

json moment_linear_system_to_json(const MomentLinearSystem& mls) {
  json j;
  j["moment_indices"] = mls.moment_indices;
  j["even_degrees"] = mls.even_degrees;
  json rows = json::array();
  for (const auto& row : mls.matrix) rows.push_back(rationals_to_json(row, true));
  j["matrix"] = std::move(rows);
  if (mls.det)
    j["det"] = mls.det->compact_str();
  else
    j["det"] = nullptr;
  json kernel = json::array();
  for (const auto& v : mls.kernel) kernel.push_back(rationals_to_json(v, true));
  j["kernel"] = std::move(kernel);
  return j;
}

json series_to_json(const ReturnMapSeries& series) {
  json j;
  j["order"] = series.order;
  json rs = json::array();
  for (const auto& rk : series.r) rs.push_back(poly_to_json(rk));
  j["r"] = std::move(rs);
  j["endpoint_values"] = rationals_to_json(series.endpoint_values, true);
  j["h_coeffs"] = rationals_to_json(series.h_coeffs, true);
  return j;
}

json witness_to_json(const PCCWitness& w, const PolyAbelSystem& sys) {
  json j;
  j["W"] = poly_to_json(w.w);
  j["Ftilde"] = poly_to_json(w.f_tilde);
  j["Gtilde"] = poly_to_json(w.g_tilde);
  j["endpoint_value"] = w.w(sys.a).compact_str();
  j["constant_Ftilde"] = w.f_tilde.is_constant();
  return j;
}

json sign_report_to_json(const SignChangeReport& rep) {
  json j;
  j["count"] = rep.count;
  json locs = json::array();
  for (const auto& [lo, hi] : rep.locations)
    locs.push_back(json::array({lo.compact_str(), hi.compact_str()}));
  j["locations"] = std::move(locs);
  if (rep.ratio_params) {
    json rp;
    rp["n"] = rep.ratio_params->n;
    rp["f"] = poly_to_json(rep.ratio_params->f);
    j["ratio_params"] = std::move(rp);
  } else {
    j["ratio_params"] = nullptr;
  }
  return j;
}

json scan_to_json(const DisplacementScan& scan) {
  json j;
  json pts = json::array();
  for (const auto& p : scan.points) {
    json pj;
    pj["rho"] = p.rho;
    if (p.status == "ok")
      pj["displacement"] = p.displacement;
    else
      pj["displacement"] = nullptr;
    pj["steps"] = p.steps;
    pj["status"] = p.status;
    pts.push_back(std::move(pj));
  }
  j["points"] = std::move(pts);
  if (scan.estimated_order)
    j["estimated_order"] = *scan.estimated_order;
  else
    j["estimated_order"] = nullptr;
  j["fit_quality"] = scan.fit_quality;
  j["rel_tol"] = scan.options.rel_tol;
  j["abs_tol"] = scan.options.abs_tol;
  return j;
}

json cross_report_to_json(const CrossValidationReport& rep) {
  json j;
  if (rep.symbolic_order)
    j["symbolic_order"] = *rep.symbolic_order;
  else
    j["symbolic_order"] = nullptr;
  if (rep.numeric_order)
    j["numeric_order"] = *rep.numeric_order;
  else
    j["numeric_order"] = nullptr;
  if (rep.symbolic_order) {
    j["ratio_mean"] = rep.ratio_mean;
    j["expected"] = rep.expected;
  }
  j["summary"] = rep.summary;
  return j;
}

}  // namespace abel
