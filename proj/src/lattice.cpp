#include "chernlat/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "chernlat/curves.hpp"

namespace chernlat {

namespace {

void require_same(const Surface& a, const Surface& b) {
  if (a != b) throw SurfaceMismatch("classes live on " + a.selector() + " and " + b.selector());
}

bool parse_int(std::string_view s, Int& out) {
  if (s.empty()) return false;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

}  // namespace

Surface Surface::hirzebruch(Int e) {
  if (e < 0) throw InvalidInput("hirzebruch surface needs e >= 0, got " + std::to_string(e));
  return Surface(SurfaceKind::Hirzebruch, e);
}

Surface Surface::del_pezzo(Int d) {
  if (d < 1 || d > 7)
    throw InvalidInput("del pezzo surface needs 1 <= d <= 7, got " + std::to_string(d));
  return Surface(SurfaceKind::DelPezzo, d);
}

Surface Surface::projective_plane() { return Surface(SurfaceKind::ProjectivePlane, 0); }

Surface Surface::parse(std::string_view sel) {
  Int v = 0;
  if (sel == "p2") return projective_plane();
  if (sel.starts_with("hirzebruch:") && parse_int(sel.substr(11), v)) return hirzebruch(v);
  if (sel.starts_with("dp:") && parse_int(sel.substr(3), v)) return del_pezzo(v);
  throw InvalidInput("unknown surface selector '" + std::string(sel) +
                     "' (expected hirzebruch:<e>, dp:<d> or p2)");
}

std::size_t Surface::rank() const noexcept {
  switch (kind_) {
    case SurfaceKind::Hirzebruch: return 2;
    case SurfaceKind::DelPezzo: return static_cast<std::size_t>(10 - parameter_);
    case SurfaceKind::ProjectivePlane: return 1;
  }
  return 0;
}

std::string Surface::selector() const {
  switch (kind_) {
    case SurfaceKind::Hirzebruch: return "hirzebruch:" + std::to_string(parameter_);
    case SurfaceKind::DelPezzo: return "dp:" + std::to_string(parameter_);
    case SurfaceKind::ProjectivePlane: return "p2";
  }
  return {};
}

std::vector<std::string> Surface::basis_names() const {
  if (is_hirzebruch()) return {"H", "F"};
  std::vector<std::string> names{"H"};
  for (std::size_t i = 1; i < rank(); ++i) names.push_back("E" + std::to_string(i));
  return names;
}

Divisor::Divisor(Surface surface, std::vector<Int> coeffs)
    : surface_(surface), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != surface_.rank())
    throw InvalidInput("expected " + std::to_string(surface_.rank()) + " coefficients on " +
                       surface_.selector() + ", got " + std::to_string(coeffs_.size()));
}

Divisor Divisor::zero(const Surface& s) { return Divisor(s, std::vector<Int>(s.rank(), 0)); }

Divisor Divisor::basis(const Surface& s, std::size_t i) {
  std::vector<Int> c(s.rank(), 0);
  c.at(i) = 1;
  return Divisor(s, std::move(c));
}

bool Divisor::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Int c) { return c == 0; });
}

Divisor& Divisor::operator+=(const Divisor& o) {
  require_same(surface_, o.surface_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked::add(coeffs_[i], o.coeffs_[i]);
  return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
  require_same(surface_, o.surface_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = checked::sub(coeffs_[i], o.coeffs_[i]);
  return *this;
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor r = *this;
  r += o;
  return r;
}

Divisor Divisor::operator-(const Divisor& o) const {
  Divisor r = *this;
  r -= o;
  return r;
}

Divisor Divisor::operator-() const { return Int{-1} * *this; }

Divisor operator*(Int k, const Divisor& d) {
  Divisor r = d;
  for (auto& c : r.coeffs_) c = checked::mul(k, c);
  return r;
}

std::strong_ordering Divisor::operator<=>(const Divisor& o) const {
  require_same(surface_, o.surface_);
  return coeffs_ <=> o.coeffs_;
}

Gram gram_matrix(const Surface& s) {
  const std::size_t n = s.rank();
  Gram g(n, std::vector<Int>(n, 0));
  if (s.is_hirzebruch()) {
    g[0][0] = -s.parameter();
    g[0][1] = g[1][0] = 1;
    return g;
  }
  g[0][0] = 1;
  for (std::size_t i = 1; i < n; ++i) g[i][i] = -1;
  return g;
}

Int intersect(const Divisor& a, const Divisor& b) {
  require_same(a.surface(), b.surface());
  using namespace checked;
  if (a.surface().is_hirzebruch()) {
    // (a0 H + a1 F)(b0 H + b1 F) = -e a0 b0 + a0 b1 + a1 b0
    Int e = a.surface().parameter();
    return add(add(mul(neg(e), mul(a[0], b[0])), mul(a[0], b[1])), mul(a[1], b[0]));
  }
  Int r = mul(a[0], b[0]);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) r = sub(r, mul(a[i], b[i]));
  return r;
}

Divisor canonical_class(const Surface& s) {
  switch (s.kind()) {
    case SurfaceKind::Hirzebruch:
      return Divisor(s, {-2, checked::sub(-2, s.parameter())});
    case SurfaceKind::DelPezzo: {
      std::vector<Int> c(s.rank(), 1);
      c[0] = -3;
      return Divisor(s, std::move(c));
    }
    case SurfaceKind::ProjectivePlane:
      return Divisor(s, {-3});
  }
  throw Error("unreachable");
}

Int sectional_genus(const Divisor& a) {
  Int t = intersect(canonical_class(a.surface()) + a, a);
  if (t % 2 != 0)
    throw ParityViolation("(K+A).A = " + std::to_string(t) + " is odd for " + format_divisor(a));
  return t / 2 + 1;
}

Int chi_line(const Divisor& d) {
  Int t = checked::sub(self_intersection(d), intersect(d, canonical_class(d.surface())));
  if (t % 2 != 0)
    throw ParityViolation("D^2 - D.K = " + std::to_string(t) + " is odd for " + format_divisor(d));
  return 1 + t / 2;
}

std::vector<Divisor> cone_generators(const Surface& s) {
  switch (s.kind()) {
    case SurfaceKind::Hirzebruch: return {Divisor::basis(s, 0), Divisor::basis(s, 1)};
    case SurfaceKind::DelPezzo: return minus_one_curves(s);
    case SurfaceKind::ProjectivePlane: return {Divisor::basis(s, 0)};
  }
  return {};
}

namespace {

Int min_pairing_with_generators(const Divisor& d) {
  const auto& s = d.surface();
  if (s.is_del_pezzo()) {
    const auto& gens = minus_one_curves_cached(s.parameter());
    Int m = intersect(d, gens.front());
    for (const auto& c : gens) m = std::min(m, intersect(d, c));
    return m;
  }
  Int m = intersect(d, Divisor::basis(s, 0));
  if (s.is_hirzebruch()) m = std::min(m, intersect(d, Divisor::basis(s, 1)));
  return m;
}

}  // namespace

bool is_nef(const Divisor& d) { return min_pairing_with_generators(d) >= 0; }

// The cone of curves is rational polyhedral in every supported case, so
// positivity on its generators is Kleiman's criterion.
bool is_ample(const Divisor& d) { return min_pairing_with_generators(d) > 0; }

bool in_mori_cone(const Divisor& d) {
  const auto& s = d.surface();
  if (s.is_hirzebruch()) return d[0] >= 0 && d[1] >= 0;
  if (s.is_plane()) return d[0] >= 0;
  // Del Pezzo: if x.C = -k < 0 for a (-1)-curve C, then C is a fixed part of
  // any effective expression and x lies in the cone iff x - kC does. Each
  // step lowers -K.x, which is non-negative on the cone, so this terminates.
  const Divisor minus_k = -canonical_class(s);
  const auto& curves = minus_one_curves_cached(s.parameter());
  Divisor x = d;
  for (;;) {
    if (intersect(minus_k, x) < 0) return false;
    bool moved = false;
    for (const auto& c : curves) {
      Int k = intersect(x, c);
      if (k < 0) {
        x = x + (k * c);
        moved = true;
        break;
      }
    }
    if (!moved) return true;  // x is nef, hence in the cone
  }
}

bool positive_on_ample_cone(const Divisor& x) { return !x.is_zero() && in_mori_cone(x); }

Divisor symmetric_canonical(const Divisor& d) {
  const auto& s = d.surface();
  if (s.is_hirzebruch() && s.parameter() == 0) {
    Divisor swapped(s, {d[1], d[0]});
    return std::min(d, swapped);
  }
  if (s.is_del_pezzo()) {
    std::vector<Int> c(d.coeffs().begin(), d.coeffs().end());
    std::sort(c.begin() + 1, c.end());
    return Divisor(s, std::move(c));
  }
  return d;
}

Divisor parse_divisor(std::string_view text, const Surface& s) {
  Divisor acc = Divisor::zero(s);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty divisor", i);
  // format_divisor writes the zero class as "0".
  if (text.substr(i, text.find_last_not_of(" \t\n") + 1 - i) == "0") return acc;
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    Int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    first = false;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    Int mult = 1;
    bool has_number = i > start;
    if (has_number && !parse_int(text.substr(start, i - start), mult))
      throw ParseError("coefficient out of range", start);
    skip_ws();
    Divisor term = Divisor::zero(s);
    std::size_t sym_pos = i;
    if (i < text.size() && (text[i] == 'H' || text[i] == 'F' || text[i] == 'K')) {
      char sym = text[i++];
      if (sym == 'H') {
        term = Divisor::basis(s, 0);
      } else if (sym == 'F') {
        if (!s.is_hirzebruch()) throw ParseError("F is only defined on hirzebruch surfaces", sym_pos);
        term = Divisor::basis(s, 1);
      } else {
        term = canonical_class(s);
      }
    } else if (i < text.size() && text[i] == 'E') {
      ++i;
      std::size_t ns = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      Int idx = 0;
      if (!s.is_del_pezzo()) throw ParseError("E_i is only defined on del pezzo surfaces", sym_pos);
      if (!parse_int(text.substr(ns, i - ns), idx) || idx < 1 ||
          static_cast<std::size_t>(idx) >= s.rank())
        throw ParseError("exceptional index out of range", ns);
      term = Divisor::basis(s, static_cast<std::size_t>(idx));
    } else if (has_number && s.is_plane()) {
      term = Divisor::basis(s, 0);  // bare integer on P^2 is a multiple of the line
    } else {
      throw ParseError("expected a basis symbol", sym_pos);
    }
    acc += checked::mul(sign, mult) * term;
  }
  return acc;
}

std::string format_divisor(const Divisor& d) {
  const auto& s = d.surface();
  if (d.is_zero()) return "0";
  if (s.is_del_pezzo()) {
    // Write D as -tK + R when that is shorter, e.g. "-K+H-E1" or "-3K".
    auto weight = [](const Divisor& x) {
      Int w = 0;
      for (Int c : x.coeffs()) w += c < 0 ? -c : c;
      return w;
    };
    const Divisor k = canonical_class(s);
    Int best_t = 0;
    Int best_w = weight(d);
    for (Int t = -(std::abs(d[0]) / 3 + 1); t <= std::abs(d[0]) / 3 + 1; ++t) {
      if (t == 0) continue;
      Int w = weight(d + t * k) + 1;  // +1 for the K term itself
      if (w < best_w) best_w = w, best_t = t;
    }
    if (best_t != 0) {
      Divisor rest = d + best_t * k;
      Int m = -best_t;  // d = m K + rest
      std::string out = m == 1 ? "K" : m == -1 ? "-K" : std::to_string(m) + "K";
      if (!rest.is_zero()) {
        std::string r = format_divisor_plain(rest);
        out += (r.front() == '-' ? "" : "+") + r;
      }
      return out;
    }
  }
  return format_divisor_plain(d);
}

std::string format_divisor_plain(const Divisor& d) {
  const auto& s = d.surface();
  if (d.is_zero()) return "0";
  auto names = s.basis_names();
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < d.coeffs().size(); ++i) {
    Int c = d[i];
    if (c == 0) continue;
    if (c < 0) out << '-';
    else if (!first) out << '+';
    Int a = c < 0 ? -c : c;
    if (a != 1) out << a;
    out << names[i];
    first = false;
  }
  return out.str();
}

}  // namespace chernlat
