#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chernlat/bundle.hpp"

namespace chernlat {

/// How firmly an entry's existence (and ampleness) is established.
enum class Existence {
  Exact,          // direct sum of ample line bundles: ampleness is decided exactly
  Proved,         // proved directly (e.g. Nakai on P(E)), not a lattice criterion
  Cited,          // delegated to the literature; see the citation
  NecessaryOnly,  // passes the numeric necessary conditions only
  Open,           // unresolved; listed so the gap is visible
};

std::string to_string(Existence e);

struct Provenance {
  Existence kind = Existence::Exact;
  std::string citation;  // empty unless there is something to cite or explain
};

enum class Stability { Stable, SemistableNotStable, NotSemistable };

std::string to_string(Stability s);

/// Which curve classes the offset of a family runs over.
enum class CurveChoice {
  None,
  MinusOne,          // any (-1)-curve
  Zero,              // any 0-curve
  DisjointMinusOne,  // C + C' for disjoint (-1)-curves C, C'
};

std::string describe(CurveChoice c);
/// Every class the choice runs over on DelPezzo(d), sorted.
std::vector<Divisor> curve_choices(CurveChoice c, const Surface& surface);

/// fixed (+) (t * slope + offset), t_min <= t (<= t_max when bounded),
/// offset ranging over `choice` (representative stored in `offset`).
struct FamilyDescriptor {
  Divisor fixed;
  Divisor slope;
  Divisor offset;
  Int t_min = 1;
  std::optional<Int> t_max;
  CurveChoice choice = CurveChoice::None;
  std::size_t choice_count = 1;

  BundleDescriptor at(Int t) const;
  BundleDescriptor at(Int t, const Divisor& offset_choice) const;
  bool operator==(const FamilyDescriptor&) const = default;
};

/// A case the classification leaves unresolved. Only Chern data is known.
struct OpenCase {
  Divisor c1;
  Int c2 = 0;
  std::string note;
  bool operator==(const OpenCase&) const = default;
};

using EntryBundle = std::variant<BundleDescriptor, FamilyDescriptor, OpenCase>;

struct ClassificationEntry {
  Surface surface;
  std::string case_label;     // unique within one result
  std::string theorem_label;  // the case of the underlying theorem
  EntryBundle bundle;
  ChernData chern;            // for families: at t_min with the representative
  Provenance existence;
  std::optional<Stability> stability;  // P^2 only
};

struct Constraint {
  enum class Kind { MaxC2, MaxC1Sq, MaxDelta, MaxC1, MaxC2MinusC1 };
  Kind kind;
  Int value;

  static Constraint max_c2(Int v) { return {Kind::MaxC2, v}; }
  static Constraint max_c1sq(Int v) { return {Kind::MaxC1Sq, v}; }
  static Constraint max_delta(Int v) { return {Kind::MaxDelta, v}; }
  static Constraint max_c1(Int v) { return {Kind::MaxC1, v}; }
  static Constraint max_c2_minus_c1(Int v) { return {Kind::MaxC2MinusC1, v}; }
};

std::string to_string(Constraint::Kind k);

/// Supported: max_c2 <= e+6, max_c1sq <= max(16, 8e+12), max_delta <= 16.
std::vector<ClassificationEntry> classify_hirzebruch(Int e, Constraint c);
/// Supported: max_c2 <= d+2, max_delta <= 6.
std::vector<ClassificationEntry> classify_delpezzo(Int d, Constraint c);
/// Supported: max_c1 <= 3, max_c2 <= 6, max_c2_minus_c1 <= 2, max_delta <= 24.
std::vector<ClassificationEntry> classify_p2(Constraint c);
std::vector<ClassificationEntry> classify(const Surface& s, Constraint c);

/// One descriptor per t in [lo, hi] with the representative offset. Throws
/// InvalidInput when the range leaves the family's constraint.
std::vector<BundleDescriptor> expand_family(const FamilyDescriptor& f, Int lo, Int hi);

/// Stability of a P^2 bundle where it follows from the shape alone.
std::optional<Stability> p2_stability(const BundleDescriptor& b);

/// The lists of the corollaries, numbered as published. Ids: "2.6", "2.11",
/// "2.12", "3.14", "3.15", "4.7", "4.8".
std::vector<ClassificationEntry> corollary(const std::string& id);
const std::vector<std::string>& corollary_ids();

}  // namespace chernlat
