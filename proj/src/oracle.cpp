#include "chernlat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <tuple>

#include "chernlat/curves.hpp"

namespace chernlat {

void validate(const SearchBounds& b) {
  if (b.coeff_cap < 1) throw InvalidInput("coefficient cap must be positive");
  if (b.degz_cap < 0) throw InvalidInput("degZ cap must be non-negative");
}

std::string describe(const Candidate& c) {
  if (c.bundle) return format_bundle(*c.bundle);
  return "chern(" + format_divisor(c.chern.c1) + "; c2=" + std::to_string(c.chern.c2) + ")";
}

namespace {

using Coeffs = std::vector<Int>;
constexpr Int kNoLimit = std::numeric_limits<Int>::max();

bool within_cap(const Divisor& d, Int cap) {
  for (Int x : d.coeffs())
    if (x > cap || x < -cap) return false;
  return true;
}

bool curve_degree_ok(const Divisor& c1) {
  for (const auto& g : cone_generators(c1.surface()))
    if (intersect(c1, g) < 2) return false;
  return true;
}

// All x with lo[j] <= x[j] <= hi[j] and sum_j g[j] x[j] (c[j] - x[j]) in
// [qlo, qhi]. This is L.M for L = x, M = c - x on a diagonal lattice.
void diagonal_search(const Coeffs& g, const Coeffs& c, const Coeffs& lo, const Coeffs& hi, Int qlo, Int qhi,
                     const std::function<void(const Coeffs&)>& emit) {
  const std::size_t n = c.size();
  Coeffs tmin(n), tmax(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (lo[j] > hi[j]) return;
    tmin[j] = kNoLimit, tmax[j] = -kNoLimit;
    for (Int x = lo[j]; x <= hi[j]; ++x) {
      Int t = g[j] * x * (c[j] - x);
      tmin[j] = std::min(tmin[j], t), tmax[j] = std::max(tmax[j], t);
    }
  }
  Coeffs smin(n + 1, 0), smax(n + 1, 0);
  for (std::size_t j = n; j-- > 0;) smin[j] = smin[j + 1] + tmin[j], smax[j] = smax[j + 1] + tmax[j];
  Coeffs x(n);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t j, Int acc) {
    if (acc + smin[j] > qhi || acc + smax[j] < qlo) return;
    if (j == n) {
      emit(x);
      return;
    }
    for (Int v = lo[j]; v <= hi[j]; ++v) {
      x[j] = v;
      rec(j + 1, acc + g[j] * v * (c[j] - v));
    }
  };
  rec(0, 0);
}

Coeffs diagonal_form(const Surface& s) {
  Coeffs g(s.rank(), -1);
  g[0] = 1;
  return g;
}

// Classes c1 with c1.C >= 2 on every cone generator and coefficients within
// the cap. Del Pezzo classes come with sorted E-multiplicities only (the
// problem is symmetric under permuting the E_i).
std::vector<Divisor> c1_classes(const Surface& s, Int cap, Int sq_hi) {
  std::vector<Divisor> out;
  if (s.is_plane()) {
    for (Int a = 2; a <= cap; ++a) out.push_back(Divisor(s, {a}));
  } else if (s.is_hirzebruch()) {
    const Int e = s.parameter();
    for (Int a = 2; a <= cap; ++a)
      for (Int b = a * e + 2; b <= cap; ++b) out.push_back(Divisor(s, {a, b}));
  } else {
    const std::size_t n = s.rank() - 1;
    Coeffs m(n);
    for (Int a0 = 1; a0 <= cap; ++a0) {
      const Int top = a0 * a0;
      std::function<void(std::size_t, Int, Int)> rec = [&](std::size_t pos, Int prev, Int used) {
        if (pos == n) {
          Coeffs c{a0};
          for (Int v : m) c.push_back(-v);
          Divisor d(s, std::move(c));
          if (curve_degree_ok(d)) out.push_back(std::move(d));
          return;
        }
        const Int r = static_cast<Int>(n - pos - 1);
        for (Int v = std::min(prev, a0 - 1); v >= 1; --v) {
          if (pos == 1 && m[0] + v > a0 - 2) continue;  // c1.(H - E1 - E2) >= 2
          Int u = used + v * v;
          if (sq_hi != kNoLimit && top - u - r * v * v > sq_hi) break;
          if (top - u - r < 2) continue;
          m[pos] = v;
          rec(pos + 1, v, u);
        }
      };
      rec(0, a0, 0);
    }
  }
  return out;
}

Int c1_sq_limit(const Surface& s, Constraint t) {
  if (!s.is_del_pezzo()) return kNoLimit;
  switch (t.kind) {
    case Constraint::Kind::MaxC2: return (t.value + 1) * (t.value + 1);
    case Constraint::Kind::MaxC1Sq: return t.value;
    default: return kNoLimit;
  }
}

std::vector<Int> c2_values(const Divisor& c1, Constraint t) {
  std::vector<Int> out;
  const Int sq = self_intersection(c1);
  if (t.kind == Constraint::Kind::MaxC1Sq && sq > t.value) return out;
  if (t.kind == Constraint::Kind::MaxC1 && c1[0] > t.value) return out;
  // Ballico: c2 + 1 >= sqrt(c1^2).
  Int lo = std::max<Int>(1, static_cast<Int>(std::floor(std::sqrt(static_cast<double>(sq)))) - 2);
  for (Int c2 = lo; c2 < sq; ++c2) {
    const ChernData c = make_chern(c1, c2);
    if (!ballico_ok(c)) continue;
    if (t.kind == Constraint::Kind::MaxC2 && c2 > t.value) break;
    if (t.kind == Constraint::Kind::MaxDelta && c.delta > t.value) break;
    if (t.kind == Constraint::Kind::MaxC2MinusC1 && c2 - c1[0] > t.value) break;
    out.push_back(c2);
  }
  return out;
}

std::vector<BundleDescriptor> direct_sums(const Divisor& c1, Int c2, Int cap) {
  const Surface& s = c1.surface();
  std::vector<BundleDescriptor> out;
  auto consider = [&](const Divisor& L) {
    Divisor M = c1 - L;
    if (!within_cap(L, cap) || !within_cap(M, cap)) return;
    if (intersect(L, M) == c2 && is_ample(L) && is_ample(M)) out.push_back(canonical(direct_sum(L, M)));
  };
  if (s.is_plane()) {
    for (Int l = 1; l < c1[0]; ++l) consider(Divisor(s, {l}));
  } else if (s.is_hirzebruch()) {
    const Int e = s.parameter();
    for (Int x = 1; x < c1[0]; ++x)
      for (Int y = x * e + 1; y <= c1[1] - (c1[0] - x) * e - 1; ++y) consider(Divisor(s, {x, y}));
  } else {
    const std::size_t n = s.rank();
    Coeffs c(c1.coeffs().begin(), c1.coeffs().end()), lo(n), hi(n);
    lo[0] = 1, hi[0] = c[0] - 1;
    for (std::size_t j = 1; j < n; ++j) lo[j] = c[j] + 1, hi[j] = -1;
    diagonal_search(diagonal_form(s), c, lo, hi, c2, c2, [&](const Coeffs& x) { consider(Divisor(s, x)); });
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return format_bundle(a) < format_bundle(b); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Ample classes M inside the cap box (Hirzebruch and p2 only).
std::vector<Divisor> ample_box(const Surface& s, Int cap) {
  std::vector<Divisor> out;
  if (s.is_plane()) {
    for (Int m = 1; m <= cap; ++m) out.push_back(Divisor(s, {m}));
  } else {
    const Int e = s.parameter();
    for (Int x = 1; x <= cap; ++x)
      for (Int y = x * e + 1; y <= cap; ++y) out.push_back(Divisor(s, {x, y}));
  }
  return out;
}

// h^1 of a line bundle: zero on p2; on Hirzebruch(e) push forward to P^1,
// where aH + bF gives (+)_{i<=a} O(b - ie), and use Serre duality for a <= -2.
Int h1_line(const Divisor& D) {
  const Surface& s = D.surface();
  if (!s.is_hirzebruch()) throw InvalidInput("h1_line: only p2 and hirzebruch surfaces");
  const Int e = s.parameter();
  Int a = D[0], b = D[1];
  if (a == -1) return 0;
  if (a < -1) a = -2 - a, b = -e - 2 - b;
  Int h = 0;
  for (Int i = 0; i <= a; ++i) h += std::max<Int>(0, -(b - i * e) - 1);
  return h;
}

// Extensions 0 -> L -> E -> I_Z (x) M -> 0 with M ample. When degZ = 0 and
// H^1(L - M) = 0 the sequence splits, so E is the direct sum (already a
// candidate when ample, and not ample otherwise); those are skipped.
std::vector<BundleDescriptor> extensions(const Divisor& c1, Int c2, const SearchBounds& bounds) {
  std::vector<BundleDescriptor> out;
  for (const auto& M : ample_box(c1.surface(), bounds.coeff_cap)) {
    Divisor L = c1 - M;
    if (!within_cap(L, bounds.coeff_cap)) continue;
    Int z = c2 - intersect(L, M);
    if (z < 0 || z > bounds.degz_cap) continue;
    if (z == 0 && (c1.surface().is_plane() || h1_line(L - M) == 0)) continue;
    out.push_back(canonical(extension(L, M, z, SplitStatus::Unknown)));
  }
  return out;
}

int shape_rank(const Candidate& c) { return c.exact ? 0 : c.bundle ? 1 : 2; }

Divisor interior_ample(const Surface& s) {
  if (s.is_del_pezzo()) return -canonical_class(s);
  if (s.is_hirzebruch()) return Divisor(s, {1, s.parameter() + 1});
  return Divisor(s, {1});
}

}  // namespace

std::vector<Candidate> search_candidates(const Surface& s, Constraint target, const SearchBounds& bounds) {
  validate(bounds);
  if (!s.is_plane() &&
      (target.kind == Constraint::Kind::MaxC1 || target.kind == Constraint::Kind::MaxC2MinusC1))
    throw InvalidInput("constraint " + to_string(target.kind) + " only applies to p2");
  std::vector<std::pair<std::string, Candidate>> found;
  // The cap bounds L and M, so c1 = L + M runs up to twice the cap. Chern
  // data without a presentation has no L, M; it is kept within the cap itself.
  // A delta target puts no bound on c1^2, and on Del Pezzo surfaces the
  // doubled box is out of reach, so there c1 itself stays within the cap.
  const Int sq_hi = c1_sq_limit(s, target);
  const Int c1_cap = s.is_del_pezzo() && sq_hi == kNoLimit ? bounds.coeff_cap : 2 * bounds.coeff_cap;
  for (const auto& c1 : c1_classes(s, c1_cap, sq_hi)) {
    if (!is_ample(c1)) continue;
    const bool chern_level = within_cap(c1, bounds.coeff_cap);
    for (Int c2 : c2_values(c1, target)) {
      const ChernData key = make_chern(symmetric_canonical(c1), c2);
      if (!kleiman_ok(key) || !ballico_ok(key)) continue;
      auto presentations = direct_sums(c1, c2, bounds.coeff_cap);
      const std::size_t n_sums = presentations.size();
      if (!s.is_del_pezzo())
        for (auto& b : extensions(c1, c2, bounds)) presentations.push_back(std::move(b));
      bool any = false;
      for (std::size_t i = 0; i < presentations.size(); ++i) {
        if (!numeric_ample_necessary(presentations[i]).passes()) continue;
        any = true;
        Candidate cand{key, presentations[i], i < n_sums};
        found.push_back({describe(cand), std::move(cand)});
      }
      if (!any && chern_level) {
        Candidate cand{key, std::nullopt, false};
        found.push_back({describe(cand), std::move(cand)});
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    const auto& a = x.second.chern;
    const auto& b = y.second.chern;
    const int ra = shape_rank(x.second), rb = shape_rank(y.second);
    return std::tie(a.c2, a.c1, ra, x.first) < std::tie(b.c2, b.c1, rb, y.first);
  });
  auto same = [](const auto& x, const auto& y) { return x.first == y.first && x.second.chern == y.second.chern; };
  found.erase(std::unique(found.begin(), found.end(), same), found.end());
  std::vector<Candidate> out;
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

std::optional<BogomolovPair> find_bogomolov_pair(const Surface& s, const ChernData& c, const SearchBounds& bounds) {
  validate(bounds);
  if (c.c1.surface() != s) throw SurfaceMismatch("chern data lives on " + c.c1.surface().selector());
  if (!bogomolov_unstable(c)) return std::nullopt;
  const Divisor A = interior_ample(s);
  std::optional<BogomolovPair> best;
  auto consider = [&](const Divisor& M) {
    Divisor L = c.c1 - M;
    if (!within_cap(L, bounds.coeff_cap) || !within_cap(M, bounds.coeff_cap)) return;
    Int z = c.c2 - intersect(L, M);
    if (z < 0 || z > bounds.degz_cap) return;
    Divisor diff = L - M;
    if (self_intersection(diff) <= 4 * z || intersect(diff, A) <= 0) return;
    if (!is_ample(M) || !positive_on_ample_cone(diff)) return;
    if (!best || std::make_pair(z, M) < std::make_pair(best->degZ, best->M)) best = BogomolovPair{L, M, z};
  };
  if (!s.is_del_pezzo()) {
    for (const auto& M : ample_box(s, bounds.coeff_cap)) consider(M);
    return best;
  }
  // H is nef, so H.(c1 - 2M) >= 0; M ample gives 1 <= m_i <= M_0 - 1.
  const std::size_t n = s.rank();
  Coeffs cc(c.c1.coeffs().begin(), c.c1.coeffs().end());
  for (Int m0 = 1; 2 * m0 <= cc[0] && m0 <= bounds.coeff_cap; ++m0) {
    Coeffs lo(n), hi(n);
    lo[0] = hi[0] = m0;
    for (std::size_t j = 1; j < n; ++j) lo[j] = -(m0 - 1), hi[j] = -1;
    diagonal_search(diagonal_form(s), cc, lo, hi, c.c2 - bounds.degz_cap, c.c2,
                    [&](const Coeffs& x) { consider(Divisor(s, x)); });
  }
  return best;
}

// ---- cross-check ------------------------------------------------------------

std::size_t CrossCheckReport::unexplained() const {
  return static_cast<std::size_t>(
      std::count_if(oracle_only.begin(), oracle_only.end(), [](const OracleOnly& o) { return o.reason.empty(); }));
}

std::string CrossCheckReport::scope() const {
  std::string names;
  for (const auto& s : surfaces) names += (names.empty() ? "" : ",") + s.selector();
  const bool dp = !surfaces.empty() && surfaces.front().is_del_pezzo();
  const std::string cap = std::to_string(bounds.coeff_cap);
  std::string out = "corollary " + corollary_id + ": searched " + names + " for " + to_string(target.kind) +
                    " <= " + std::to_string(target.value) + " with |coefficient| <= " + cap + " on L and M";
  if (dp && target.kind == Constraint::Kind::MaxDelta) out += " and on c1";
  out += ", c1 alone <= " + cap + " for Chern data without a presentation, degZ <= " +
         std::to_string(bounds.degz_cap);
  if (dp) out += "; extensions are not enumerated on del pezzo surfaces";
  return out + "; nothing is claimed outside these bounds";
}

namespace {

const std::vector<Divisor>& choices_cached(CurveChoice c, const Surface& s) {
  static std::map<std::pair<int, Surface>, std::vector<Divisor>> cache;
  auto key = std::make_pair(static_cast<int>(c), s);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, curve_choices(c, s)).first;
  return it->second;
}

bool in_choices(CurveChoice c, const Divisor& off) {
  if (c == CurveChoice::None) return off.is_zero();
  const auto& v = choices_cached(c, off.surface());
  return std::find(v.begin(), v.end(), off) != v.end();
}

// Does rest = t * slope + (a class the family allows) for an admissible t?
bool family_rest(const FamilyDescriptor& f, const Divisor& rest) {
  const Int s2 = self_intersection(f.slope);
  const Int num = intersect(f.slope, rest - f.offset);
  if (s2 <= 0 || num % s2 != 0) return false;
  const Int t = num / s2;
  if (t < f.t_min || (f.t_max && t > *f.t_max)) return false;
  return in_choices(f.choice, rest - t * f.slope);
}

bool family_contains(const FamilyDescriptor& f, const BundleDescriptor& b) {
  const auto* s = std::get_if<DirectSum>(&b.shape);
  if (!s || b.surface != f.fixed.surface()) return false;
  return (s->L == f.fixed && family_rest(f, s->M)) || (s->M == f.fixed && family_rest(f, s->L));
}

bool family_has_chern(const FamilyDescriptor& f, const ChernData& c) {
  if (c.c1.surface() != f.fixed.surface()) return false;
  const Divisor rest = c.c1 - f.fixed;
  return intersect(f.fixed, rest) == c.c2 && family_rest(f, rest);
}

bool same_chern(const ChernData& a, const ChernData& b) {
  return a.c1.surface() == b.c1.surface() && a.c2 == b.c2 && symmetric_canonical(a.c1) == symmetric_canonical(b.c1);
}

BundleDescriptor erase_split(BundleDescriptor b) {
  if (auto* e = std::get_if<Extension>(&b.shape)) e->split = SplitStatus::Unknown;
  return b;
}

bool presents(const BundleDescriptor& entry, const Candidate& cand) {
  if (std::holds_alternative<BlowUpExtension>(entry.shape)) return !cand.bundle && same_chern(chern(entry), cand.chern);
  if (!cand.bundle) return false;
  // T(k) is presented by 0 -> O(k+1) -> T(k) -> I_p(k+2) -> 0.
  if (std::holds_alternative<Tangent>(entry.shape) || std::holds_alternative<TangentTwist>(entry.shape)) {
    const auto* t = std::get_if<TangentTwist>(&entry.shape);
    const Int k = t ? t->k : 0;
    const Surface& s = entry.surface;
    return *cand.bundle == canonical(extension(Divisor(s, {k + 1}), Divisor(s, {k + 2}), 1, SplitStatus::Unknown));
  }
  return erase_split(canonical(entry)) == erase_split(*cand.bundle);
}

bool matches(const ClassificationEntry& e, const Candidate& cand) {
  if (e.surface != cand.chern.c1.surface()) return false;
  return std::visit(
      [&](const auto& b) -> bool {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BundleDescriptor>) return presents(b, cand);
        else if constexpr (std::is_same_v<T, FamilyDescriptor>) return cand.bundle && family_contains(b, *cand.bundle);
        else return !cand.bundle && same_chern(make_chern(b.c1, b.c2), cand.chern);
      },
      e.bundle);
}

const ClassificationEntry* listed_invariants(const std::vector<ClassificationEntry>& entries, const ChernData& c) {
  for (const auto& e : entries) {
    if (e.surface != c.c1.surface()) continue;
    if (const auto* f = std::get_if<FamilyDescriptor>(&e.bundle)) {
      if (family_has_chern(*f, c)) return &e;
    } else if (same_chern(e.chern, c)) {
      return &e;
    }
  }
  return nullptr;
}

std::string hirzebruch_reason(const ChernData& c) {
  const Surface& s = c.c1.surface();
  const Int e = s.parameter();
  Int a = c.c1[0], b = c.c1[1];
  if (e == 0 && b < a) std::swap(a, b);  // either ruling will do on Hirzebruch(0)
  const Divisor c1(s, {a, b});
  const Divisor K = canonical_class(s);
  if (c.c2 < e + 2) return "c2 >= e+2 for every ample bundle (Thm 2.8)";
  if (!is_nef(2 * K + c1)) {
    if (a == 2 && c.c2 != b - e)
      return "c1.F = 2: E = [H+t1F]+[H+t2F] (proof of Prop 2.4), which forces c2 = c1.H + e";
    if (a == 3 && c.c2 <= b - e)
      return "c1.F = 3: E is an extension of [H+(b-t)F] by [2H+tF] with b-t > e (proof of Prop 2.4), "
             "which forces c2 > b - e";
    if (a >= 4) return "2K+c1 not nef forces c1.F <= 3 (Prop 1.2)";
    return "";
  }
  if (c.c1_sq < -2 * intersect(K, c1)) return "2K+c1 nef forces c1^2 >= -2K.c1 (Prop 2.3)";
  if (c.c2 <= e + 6 && c.c1_sq <= 4 * c.c2) return "2K+c1 nef and c2 <= e+6 force c1^2 > 4c2 (proof of Thm 2.9)";
  return "";
}

std::string delpezzo_reason(const ChernData& c, Constraint target) {
  const Surface& s = c.c1.surface();
  const Int d = s.parameter();
  const Divisor mk = -canonical_class(s);
  const Divisor c1 = c.c1;
  auto is_minus_one = [&](const Divisor& x) { return self_intersection(x) == -1 && intersect(mk, x) == 1; };
  auto is_zero_curve = [&](const Divisor& x) { return in_choices(CurveChoice::Zero, x); };
  if (c.c2 < d) return "c2 >= d for every ample bundle (Thm 3.9)";
  if (c.c2 == d && c1 != 2 * mk) return "c2 = d only for [-K]+[-K] (Thm 3.9)";
  if (c.c2 == d + 1 && c1 != (d == 1 ? 3 * mk : 2 * mk)) return "c2 = d+1 forces c1 = -2K, or -3K when d = 1 (Thm 3.11)";
  if (c.c2 == d + 2) {
    bool allowed = c1 == 2 * mk || is_zero_curve(c1 - 2 * mk) ||
                   (d == 1 && (is_minus_one(c1 - 3 * mk) || c1 == 4 * mk)) || (d == 2 && c1 == 3 * mk);
    if (!allowed) return "c2 = d+2 leaves only the c1 of Prop 3.13 (i)-(v)";
  }
  if (target.kind == Constraint::Kind::MaxDelta && c.delta <= 6) return "not among the delta <= 6 bundles (Thm 3.15)";
  return "";
}

std::string p2_reason(const ChernData& c) {
  const Int a = c.c1[0], c2 = c.c2;
  if (a <= 3) return "c1 <= 3 leaves only O(1)+O(1), O(1)+O(2) and T (Thm 4.1)";
  if (c2 == a - 1) return "c2 = c1-1 only for O(1)+O(t) (Thm 4.3)";
  if (a - 1 < c2 && c2 < 2 * a - 4) return "c1-1 < c2 < 2c1-4 is impossible (Prop 4.4)";
  if (c2 == 2 * a - 4) return "c2 = 2c1-4 only for O(2)+O(t) (Prop 4.4)";
  if (a <= c2 && c2 <= a + 2) return "c2 - c1 in {0, 1, 2} leaves only the bundles of Thm 4.5";
  return "";
}

std::string exclusion_reason(const Candidate& cand, const std::vector<ClassificationEntry>& entries,
                             Constraint target, const SearchBounds& bounds) {
  if (cand.exact) return "";  // a certainly-ample bundle the list lacks
  const ChernData& c = cand.chern;
  if (const auto* e = listed_invariants(entries, c))
    return "invariants of listed " + e->case_label +
           ", for which the list is complete: this presentation is that bundle or not ample";
  const Surface& s = c.c1.surface();
  // The destabilizing sequence has M ample and L-M effective, so L.M >= 1
  // and degZ <= c2 - 1: a cap of c2 makes this search exhaustive.
  SearchBounds wide{bounds.coeff_cap, std::max(bounds.degz_cap, c.c2)};
  if (bogomolov_unstable(c) && !find_bogomolov_pair(s, c, wide))
    return "c1^2 > 4c2 but no destabilizing 0->L->E->I_Z(M)->0 with M ample (Thm 1.7, Remark 1.8)";
  if (s.is_hirzebruch()) return hirzebruch_reason(c);
  if (s.is_del_pezzo()) return delpezzo_reason(c, target);
  return p2_reason(c);
}

struct Plan {
  std::vector<Surface> surfaces;
  Constraint target;
};

Plan plan_for(const std::string& id, const SearchBounds& bounds) {
  auto hirzebruch = [&](Constraint t) {
    // An ample c1 needs c1.H >= 2 with c1.F >= 2, i.e. b >= 2e+2.
    std::vector<Surface> v;
    for (Int e = 0; 2 * e + 2 <= bounds.coeff_cap; ++e) v.push_back(Surface::hirzebruch(e));
    return Plan{v, t};
  };
  auto delpezzo = [&](Constraint t) {
    std::vector<Surface> v;
    for (Int d = 1; d <= 7; ++d) v.push_back(Surface::del_pezzo(d));
    return Plan{v, t};
  };
  if (id == "2.6") return hirzebruch(Constraint::max_c1sq(16));
  if (id == "2.11") return hirzebruch(Constraint::max_c2(6));
  if (id == "2.12") return hirzebruch(Constraint::max_delta(16));
  if (id == "3.14") return delpezzo(Constraint::max_c2(3));
  if (id == "3.15") return delpezzo(Constraint::max_delta(6));
  if (id == "4.7") return Plan{{Surface::projective_plane()}, Constraint::max_c2(6)};
  if (id == "4.8") return Plan{{Surface::projective_plane()}, Constraint::max_delta(24)};
  throw InvalidInput("unknown corollary '" + id + "' (known: 2.6, 2.11, 2.12, 3.14, 3.15, 4.7, 4.8)");
}

}  // namespace

CrossCheckReport cross_check(const std::string& id, const SearchBounds& bounds) {
  return cross_check(id, corollary(id), bounds);
}

CrossCheckReport cross_check(const std::string& id, const std::vector<ClassificationEntry>& entries,
                             const SearchBounds& bounds) {
  validate(bounds);
  const Plan plan = plan_for(id, bounds);
  CrossCheckReport r{id, bounds, plan.surfaces, plan.target, {}, {}, {}, 0};
  std::vector<bool> hit(entries.size(), false);
  for (const auto& s : plan.surfaces) {
    for (auto& cand : search_candidates(s, plan.target, bounds)) {
      ++r.candidate_count;
      bool matched = false;
      for (std::size_t i = 0; i < entries.size(); ++i)
        if (matches(entries[i], cand)) hit[i] = matched = true;
      if (!matched) {
        std::string why = exclusion_reason(cand, entries, plan.target, bounds);
        r.oracle_only.push_back({std::move(cand), std::move(why)});
      }
    }
  }
  for (std::size_t i = 0; i < entries.size(); ++i) (hit[i] ? r.agreed : r.classifier_only).push_back(entries[i]);
  return r;
}

}  // namespace chernlat
