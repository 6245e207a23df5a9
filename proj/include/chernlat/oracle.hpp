#pragma once

// Brute-force searches that check the classifiers from the outside. Nothing
// here consults a classifier except cross_check, which compares against one.

#include <optional>
#include <string>
#include <vector>

#include "chernlat/classify.hpp"

namespace chernlat {

struct SearchBounds {
  Int coeff_cap = 12;  // |coefficient| per basis element
  Int degz_cap = 8;
};

void validate(const SearchBounds& b);

struct Candidate {
  ChernData chern;  // c1 in symmetric-canonical form
  /// A presentation found by the search: a direct sum, or an extension
  /// 0 -> L -> E -> I_Z (x) M -> 0 with split status unknown. Empty when the
  /// Chern data passes every numeric test but no presentation was enumerated
  /// (extensions are not enumerated on Del Pezzo surfaces).
  std::optional<BundleDescriptor> bundle;
  /// Direct sum of ample line bundles, hence certainly ample.
  bool exact = false;
};

std::string describe(const Candidate& c);

/// Every candidate on `surface` meeting the target (max_c2, max_c1sq,
/// max_delta, and on p2 also max_c1 / max_c2_minus_c1) with
///   c1.C >= 2 on every cone generator, c1 ample, 0 < c2 < c1^2,
///   c1^2 <= (c2+1)^2,
/// coefficients within the cap. Deduplicated under canonical(); sorted.
std::vector<Candidate> search_candidates(const Surface& surface, Constraint target, const SearchBounds& bounds);

struct BogomolovPair {
  Divisor L, M;
  Int degZ = 0;
};

/// Smallest degZ first, then the lexicographically smallest M. M is required
/// to be ample (the quotient of an ample bundle); L - M must be non-zero in
/// the closed Mori cone, i.e. positive on every ample class.
std::optional<BogomolovPair> find_bogomolov_pair(const Surface& surface, const ChernData& c,
                                                 const SearchBounds& bounds);

struct OracleOnly {
  Candidate candidate;
  std::string reason;  // empty: unexplained
};

struct CrossCheckReport {
  std::string corollary_id;
  SearchBounds bounds;
  std::vector<Surface> surfaces;
  Constraint target;
  std::vector<ClassificationEntry> agreed;
  std::vector<ClassificationEntry> classifier_only;
  std::vector<OracleOnly> oracle_only;
  std::size_t candidate_count = 0;

  std::size_t unexplained() const;
  bool success() const { return classifier_only.empty() && unexplained() == 0; }
  /// One-line statement of what was searched; the search says nothing
  /// outside these bounds.
  std::string scope() const;
};

CrossCheckReport cross_check(const std::string& corollary_id, const SearchBounds& bounds = {});
/// Same search, compared against an arbitrary list in place of the corollary.
CrossCheckReport cross_check(const std::string& corollary_id, const std::vector<ClassificationEntry>& entries,
                             const SearchBounds& bounds = {});

}  // namespace chernlat
