#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chernlat/lattice.hpp"

namespace chernlat {

enum class CurveType { MinusOne, Zero };

std::string to_string(CurveType t);

/// A lattice class whose numerics are those of a (-1)-curve or of a conic
/// fiber. Irreducibility is a lattice-level notion here (numerics + nef filter).
struct CurveClass {
  Divisor cls;
  CurveType type;
  /// "(a0; a1^n1, ...)" with C = a0 H - sum a_i E_i, nonzero a_i descending.
  std::string signature;
};

std::string curve_signature(const Divisor& c);

/// All classes x on DelPezzo(d) with -K.x = k and x^2 = square, sorted
/// lexicographically on coefficients. Always finite: K-orthogonal classes form
/// a negative definite lattice.
std::vector<Divisor> classes_with_degree(const Surface& surface, Int k, Int square);

std::vector<CurveClass> enumerate_minus_one_curves(Int d);
std::vector<CurveClass> enumerate_zero_curves(Int d);

/// Plain class lists. The cached form is built once and read-only afterwards.
std::vector<Divisor> minus_one_curves(const Surface& surface);
const std::vector<Divisor>& minus_one_curves_cached(Int d);
const std::vector<Divisor>& zero_curves_cached(Int d);

/// Signature -> count, ordered by a0 then by first appearance.
std::vector<std::pair<std::string, std::size_t>> signature_histogram(Int d);

struct UnionClass {
  Divisor sum;
  /// sum = -m_d K for d <= 6; absent for d = 7 where the sum is H.
  std::optional<Int> m_d;
};

UnionClass union_class(Int d);

}  // namespace chernlat
