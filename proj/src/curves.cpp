#include "chernlat/curves.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>

namespace chernlat {

std::string to_string(CurveType t) { return t == CurveType::MinusOne ? "minus-one" : "zero"; }

std::string curve_signature(const Divisor& c) {
  std::vector<Int> a;
  for (std::size_t i = 1; i < c.coeffs().size(); ++i)
    if (c[i] != 0) a.push_back(-c[i]);
  std::sort(a.begin(), a.end(), std::greater<>());
  std::ostringstream out;
  out << '(' << c[0] << ';';
  if (a.empty()) out << ')';
  for (std::size_t i = 0; i < a.size();) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    out << (i == 0 ? " " : ", ") << a[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  if (!a.empty()) out << ')';
  return out.str();
}

namespace {

// Fill a[pos..] with integers of total `sum` and total square `sq`.
void fill(std::vector<Int>& a, std::size_t pos, Int sum, Int sq, std::vector<std::vector<Int>>& out) {
  const Int m = static_cast<Int>(a.size() - pos);
  if (m == 0) {
    if (sum == 0 && sq == 0) out.push_back(a);
    return;
  }
  // Cauchy-Schwarz on the remaining m entries.
  if (sq < 0 || checked::mul(sum, sum) > checked::mul(m, sq)) return;
  const Int r = static_cast<Int>(std::sqrt(static_cast<double>(sq))) + 1;
  for (Int v = -r; v <= r; ++v) {
    Int v2 = v * v;
    if (v2 > sq) continue;
    a[pos] = v;
    fill(a, pos + 1, sum - v, sq - v2, out);
  }
}

}  // namespace

std::vector<Divisor> classes_with_degree(const Surface& s, Int k, Int square) {
  if (!s.is_del_pezzo()) throw InvalidInput("curve enumeration needs a del pezzo surface");
  const Int n = static_cast<Int>(s.rank()) - 1;
  std::vector<Divisor> result;
  // x = a0 H - sum a_i E_i:  sum a_i = 3 a0 - k,  sum a_i^2 = a0^2 - square.
  // (3a0 - k)^2 <= n (a0^2 - square) confines a0 to a short interval.
  const Int bound = 6 * (std::abs(k) + 1) + static_cast<Int>(std::sqrt(8.0 * std::abs(square))) + 8;
  for (Int a0 = -bound; a0 <= bound; ++a0) {
    Int sum = 3 * a0 - k;
    Int sq = a0 * a0 - square;
    if (sq < 0 || sum * sum > n * sq) continue;
    std::vector<Int> a(static_cast<std::size_t>(n));
    std::vector<std::vector<Int>> sols;
    fill(a, 0, sum, sq, sols);
    for (const auto& sol : sols) {
      std::vector<Int> c{a0};
      for (Int ai : sol) c.push_back(-ai);
      result.emplace_back(s, std::move(c));
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Divisor> minus_one_curves(const Surface& s) { return classes_with_degree(s, 1, -1); }

const std::vector<Divisor>& minus_one_curves_cached(Int d) {
  static const std::array<std::vector<Divisor>, 7> table = [] {
    std::array<std::vector<Divisor>, 7> t;
    for (Int dd = 1; dd <= 7; ++dd) t[dd - 1] = minus_one_curves(Surface::del_pezzo(dd));
    return t;
  }();
  Surface::del_pezzo(d);  // validates the range
  return table[static_cast<std::size_t>(d - 1)];
}

const std::vector<Divisor>& zero_curves_cached(Int d) {
  static const std::array<std::vector<Divisor>, 7> table = [] {
    std::array<std::vector<Divisor>, 7> t;
    for (Int dd = 1; dd <= 7; ++dd) {
      for (auto& c : classes_with_degree(Surface::del_pezzo(dd), 2, 0))
        if (is_nef(c)) t[dd - 1].push_back(c);
    }
    return t;
  }();
  Surface::del_pezzo(d);
  return table[static_cast<std::size_t>(d - 1)];
}

std::vector<CurveClass> enumerate_minus_one_curves(Int d) {
  std::vector<CurveClass> out;
  for (const auto& c : minus_one_curves_cached(d))
    out.push_back({c, CurveType::MinusOne, curve_signature(c)});
  return out;
}

std::vector<CurveClass> enumerate_zero_curves(Int d) {
  std::vector<CurveClass> out;
  for (const auto& c : zero_curves_cached(d)) out.push_back({c, CurveType::Zero, curve_signature(c)});
  return out;
}

std::vector<std::pair<std::string, std::size_t>> signature_histogram(Int d) {
  std::map<std::pair<Int, std::size_t>, std::pair<std::string, std::size_t>> groups;
  std::map<std::string, std::size_t> first_seen;
  const auto& curves = minus_one_curves_cached(d);
  for (std::size_t i = 0; i < curves.size(); ++i) {
    auto sig = curve_signature(curves[i]);
    auto [it, fresh] = first_seen.emplace(sig, i);
    auto& g = groups[{curves[i][0], it->second}];
    g.first = sig;
    ++g.second;
  }
  std::vector<std::pair<std::string, std::size_t>> out;
  for (auto& [key, g] : groups) out.push_back(g);
  return out;
}

UnionClass union_class(Int d) {
  const Surface s = Surface::del_pezzo(d);
  Divisor sum = Divisor::zero(s);
  for (const auto& c : minus_one_curves_cached(d)) sum += c;
  if (d == 7) {
    if (sum != Divisor::basis(s, 0)) throw Error("sum of (-1)-curves on dp:7 is not H");
    return {sum, std::nullopt};
  }
  const Divisor minus_k = -canonical_class(s);
  const Int m = sum[0] / 3;
  if (sum != m * minus_k) throw Error("sum of (-1)-curves is not a multiple of -K on dp:" + std::to_string(d));
  return {sum, m};
}

}  // namespace chernlat
