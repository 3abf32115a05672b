#pragma once

#include <string>

#include <json.hpp>

#include "nrange/oracle.hpp"
#include "nrange/range_engine.hpp"

namespace nrange::io {

using nlohmann::json;

// StepFunction <-> {"breakpoints":[0,...,1],"values":[...]}
json to_json(const StepFunction& f);
StepFunction step_from_json(const json& j);

// operator spec:
//   {"kind":"matrix","entries":[[[re,im],...],...]}
//   {"kind":"atomic","atoms":[{"re":..,"im":..,"w":..}]}
//   {"kind":"named","name":"haar_unitary","params":{...}}
json to_json(const SpectralModel& m);
SpectralModel model_from_json(const json& j);

json to_json(const MajorizationVerdict& v);
json weight_to_json(const WeightSpec& w);

json report_to_json(const RangeReport& r);
/// region (vertices, and support when present) read back from a report
ConvexRegion region_from_report_json(const json& j);

// CSV emitters; all numbers with 17 significant digits
std::string csv_polygon(const ConvexRegion& region);      // header "x,y"
std::string csv_support(const SupportSample& sample);     // header "theta,g"
std::string csv_cloud(const oracle::OracleCloud& cloud);  // header "x,y"

/// fixed 800x800 viewbox, axes plus the region path; pure rendering
std::string svg_region(const ConvexRegion& region);

std::string format_double(double v);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
json load_json(const std::string& path);

}  // namespace nrange::io
