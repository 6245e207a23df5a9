#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "chernlat/classify.hpp"
#include "chernlat/curves.hpp"
#include "chernlat/oracle.hpp"

namespace chernlat::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { Ok = 0, Mismatch = 1, InputError = 2 };

/// args excludes the program name. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

Json to_json(const Divisor& d);
Json to_json(const BundleDescriptor& b);
Json to_json(const ClassificationEntry& e);
Json to_json(const CurveClass& c);
Json to_json(const CrossCheckReport& r);

/// The bundle column of a table row: machine syntax, accepted by parse_bundle.
/// Families render their t_min member, open cases render "open".
std::string render_bundle(const ClassificationEntry& e);

}  // namespace chernlat::cli
