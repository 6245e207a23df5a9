#pragma once

// Shared helpers for the three classifiers. Internal to the library.

#include <string>

#include "chernlat/classify.hpp"

namespace chernlat::detail {

std::string roman(int n);

ClassificationEntry make_entry(const std::string& label, const BundleDescriptor& b, Provenance p);
ClassificationEntry make_family_entry(const std::string& label, const FamilyDescriptor& f, Provenance p);
ClassificationEntry make_open_entry(const std::string& label, const OpenCase& o);

[[noreturn]] void unsupported(const Surface& s, Constraint c, const std::string& limit);

}  // namespace chernlat::detail
