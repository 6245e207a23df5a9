#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chernlat/lattice.hpp"

namespace chernlat {

enum class SplitStatus { Split, NonSplit, Unknown };

std::string to_string(SplitStatus s);

struct DirectSum {
  Divisor L, M;
  bool operator==(const DirectSum&) const = default;
};

/// 0 -> [sub] -> E -> I_Z (x) [quot] -> 0 with Z zero-dimensional of length degZ.
struct Extension {
  Divisor sub, quot;
  Int degZ = 0;
  SplitStatus split = SplitStatus::Unknown;
  bool operator==(const Extension&) const = default;
};

/// Tangent bundle of P^2. Its Euler sequence is not lattice data, so it is a
/// primitive shape.
struct Tangent {
  bool operator==(const Tangent&) const = default;
};

struct TangentTwist {
  Int k = 0;
  bool operator==(const TangentTwist&) const = default;
};

/// A bundle known only through a blow-up construction (elementary transform
/// along points); only its Chern data is lattice-level.
struct BlowUpExtension {
  Divisor c1;
  Int c2 = 0;
  Int points = 0;
  bool operator==(const BlowUpExtension&) const = default;
};

using Shape = std::variant<DirectSum, Extension, Tangent, TangentTwist, BlowUpExtension>;

struct BundleDescriptor {
  Surface surface;
  Shape shape;

  bool operator==(const BundleDescriptor&) const = default;
};

BundleDescriptor direct_sum(const Divisor& L, const Divisor& M);
BundleDescriptor extension(const Divisor& sub, const Divisor& quot, Int degZ, SplitStatus split);
BundleDescriptor tangent(const Surface& surface);
BundleDescriptor tangent_twist(const Surface& surface, Int k);
BundleDescriptor blowup_extension(const Divisor& c1, Int c2, Int points);

/// Throws on mismatched surfaces, negative degZ or Tangent off P^2.
void validate(const BundleDescriptor& b);

/// Canonical representative: split degZ = 0 extensions become sums, T(0)
/// becomes T, and the lattice symmetries (ruling swap on Hirzebruch(0),
/// permutations of the E_i on Del Pezzo surfaces) are quotiented out. Two
/// descriptors of the same bundle compare equal after this pass.
BundleDescriptor canonical(const BundleDescriptor& b);

struct ChernData {
  Divisor c1;
  Int c2 = 0;
  Int c1_sq = 0;
  Int delta = 0;

  bool operator==(const ChernData&) const = default;
};

ChernData make_chern(const Divisor& c1, Int c2);
ChernData chern(const BundleDescriptor& b);

BundleDescriptor twist(const BundleDescriptor& b, const Divisor& D);
/// c1 -> c1 + 2D, c2 -> c2 + c1.D + D^2
ChernData twist_chern(const ChernData& c, const Divisor& D);

/// chi(E) = 2 + (c1^2 - 2 c2 - c1.K) / 2 on a rational surface.
Int rank2_chi(const ChernData& c);

bool kleiman_ok(const ChernData& c);
bool ballico_ok(const ChernData& c);
bool bogomolov_unstable(const ChernData& c);

struct AmpleReport {
  /// c1.C >= 2 on every cone-generator curve.
  bool curve_degree = false;
  /// Both summands ample; only meaningful for direct sums.
  std::optional<bool> summands_ample;
  bool kleiman = false;
  bool ballico = false;
  /// True when passing is also sufficient (direct sums). Otherwise the
  /// report is necessary-only.
  bool exact = false;

  bool passes() const {
    return curve_degree && summands_ample.value_or(true) && kleiman && ballico;
  }
};

AmpleReport numeric_ample_necessary(const BundleDescriptor& b);

/// Machine syntax, parseable by parse_bundle: "sum(H+2F, H+3F)",
/// "ext(2H, H+3F; degZ=0; nonsplit)", "tangent", "tangent(1)",
/// "blowup(-2K; c2=3; points=1)".
std::string format_bundle(const BundleDescriptor& b);
/// Human bracket notation: "[H+2F]⊕[H+3F]", "O(1)⊕O(2)", "T(1)", ...
std::string bracket_notation(const BundleDescriptor& b);
BundleDescriptor parse_bundle(std::string_view text, const Surface& surface);

}  // namespace chernlat
