#pragma once

#include <json.hpp>

#include "abel/moments.hpp"
#include "abel/odeverify.hpp"
#include "abel/pcc.hpp"
#include "abel/planar.hpp"
#include "abel/returnmap.hpp"
#include "abel/signchange.hpp"
#include "abel/system.hpp"

namespace abel {

// Key order is fixed everywhere (ordered_json) and rationals serialize as
// exact strings, so identical inputs produce byte-identical reports.
// Polynomial coefficient arrays use the full "num/den" form; scalar report
// values use the compact form (denominator 1 omitted).
using json = nlohmann::ordered_json;

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

json trig_to_json(const TrigPoly& p);
TrigPoly trig_from_json(const json& j);

json system_to_json(const AbelSystem& sys);
AbelSystem system_from_json(const json& j);

json planar_to_json(const PlanarSystem& sys);
PlanarSystem planar_from_json(const json& j);

json moment_report_to_json(const MomentReport& rep);
json moment_linear_system_to_json(const MomentLinearSystem& mls);
json series_to_json(const ReturnMapSeries& series);
json witness_to_json(const PCCWitness& w, const PolyAbelSystem& sys);
json sign_report_to_json(const SignChangeReport& rep);
json scan_to_json(const DisplacementScan& scan);
json cross_report_to_json(const CrossValidationReport& rep);

}  // namespace abel
