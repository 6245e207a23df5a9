#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chernlat/checked.hpp"
#include "chernlat/errors.hpp"

namespace chernlat {

enum class SurfaceKind { Hirzebruch, DelPezzo, ProjectivePlane };

/// One of the supported rational surfaces. Fixes the Picard basis:
///   Hirzebruch(e):  (H, F), H the tautological class with H^2 = -e, F a fiber
///   DelPezzo(d):    (H, E_1, ..., E_{9-d}), the blow-up basis of P^2
///   ProjectivePlane: (H), the class of a line
class Surface {
 public:
  static Surface hirzebruch(Int e);
  static Surface del_pezzo(Int d);
  static Surface projective_plane();

  /// Accepts "hirzebruch:<e>", "dp:<d>" and "p2".
  static Surface parse(std::string_view selector);

  SurfaceKind kind() const noexcept { return kind_; }
  /// e for Hirzebruch, d for DelPezzo, 0 for the plane.
  Int parameter() const noexcept { return parameter_; }
  std::size_t rank() const noexcept;
  std::string selector() const;
  std::vector<std::string> basis_names() const;

  bool is_hirzebruch() const noexcept { return kind_ == SurfaceKind::Hirzebruch; }
  bool is_del_pezzo() const noexcept { return kind_ == SurfaceKind::DelPezzo; }
  bool is_plane() const noexcept { return kind_ == SurfaceKind::ProjectivePlane; }

  auto operator<=>(const Surface&) const = default;

 private:
  Surface(SurfaceKind kind, Int parameter) : kind_(kind), parameter_(parameter) {}

  SurfaceKind kind_;
  Int parameter_;
};

/// An integer class in the Picard lattice of a surface, in the basis above.
class Divisor {
 public:
  Divisor(Surface surface, std::vector<Int> coeffs);
  Divisor(Surface surface, std::initializer_list<Int> coeffs)
      : Divisor(surface, std::vector<Int>(coeffs)) {}

  static Divisor zero(const Surface& surface);
  static Divisor basis(const Surface& surface, std::size_t index);

  const Surface& surface() const noexcept { return surface_; }
  std::span<const Int> coeffs() const noexcept { return coeffs_; }
  Int operator[](std::size_t i) const { return coeffs_.at(i); }
  bool is_zero() const noexcept;

  Divisor operator+(const Divisor& other) const;
  Divisor operator-(const Divisor& other) const;
  Divisor operator-() const;
  Divisor& operator+=(const Divisor& other);
  Divisor& operator-=(const Divisor& other);
  friend Divisor operator*(Int k, const Divisor& d);

  bool operator==(const Divisor&) const = default;
  /// Lexicographic on coefficients; surfaces must agree.
  std::strong_ordering operator<=>(const Divisor& other) const;

 private:
  Surface surface_;
  std::vector<Int> coeffs_;
};

using Gram = std::vector<std::vector<Int>>;

Gram gram_matrix(const Surface& surface);
Int intersect(const Divisor& a, const Divisor& b);
inline Int self_intersection(const Divisor& d) { return intersect(d, d); }
Divisor canonical_class(const Surface& surface);

/// g with 2g - 2 = (K + A).A
Int sectional_genus(const Divisor& a);
/// Riemann-Roch on a rational surface: 1 + (D^2 - D.K) / 2
Int chi_line(const Divisor& d);

/// Curves whose classes generate the cone of curves: H and F on a Hirzebruch
/// surface, every (-1)-curve on a Del Pezzo surface, the line on P^2.
std::vector<Divisor> cone_generators(const Surface& surface);

bool is_nef(const Divisor& d);
bool is_ample(const Divisor& d);

/// Membership in the closed cone of curves.
bool in_mori_cone(const Divisor& d);
/// x.A > 0 for every ample A, i.e. x lies in the closed cone of curves and is
/// not zero.
bool positive_on_ample_cone(const Divisor& x);

/// Representative of the class under the lattice symmetries the surface
/// carries: swapping the two rulings of Hirzebruch(0), permuting the E_i on a
/// Del Pezzo surface. Identity on the other surfaces.
Divisor symmetric_canonical(const Divisor& d);

/// Text syntax: "2H+3F", "3H-E1-E2-E3", "-2K". Symbols H, F, E1..E8 and K.
Divisor parse_divisor(std::string_view text, const Surface& surface);
/// Inverse of parse_divisor. On Del Pezzo surfaces a class is written as
/// -tK + R when that is shorter than the basis form.
std::string format_divisor(const Divisor& d);
/// Basis form only: "4H-2E1-E2".
std::string format_divisor_plain(const Divisor& d);

}  // namespace chernlat
