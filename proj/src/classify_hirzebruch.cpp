// Rank-2 ample bundles on Hirzebruch surfaces by the size of c2 (and, via
// that, c1^2 and delta). The case analysis runs on c1.F:
//   c1.F = 2  ->  [H+t1F] + [H+t2F]
//   c1.F = 3  ->  0 -> [2H+tF] -> E -> [H+(b-t)F] -> 0
//   otherwise 2K+c1 is nef and a destabilizing sequence pins E down.

#include <algorithm>
#include <map>
#include <tuple>

#include "classify_common.hpp"

namespace chernlat {

namespace {

enum class Branch { Fiber2, Fiber3Split, Adjoint, Fiber3NonSplit };

struct HzCase {
  Int e;
  Int c2;
  Branch branch;
  Int t1 = 0, t2 = 0;  // Fiber2
  Int b = 0, t = 0;    // Fiber3*
  BundleDescriptor bundle;
  Provenance existence;
};

Provenance nonsplit_provenance(Int e, Int b, Int t) {
  if ((e == 1 && b == 5 && t == 2) || (e == 2 && b == 8 && t == 4))
    return {Existence::Cited, "Fujisawa, Example 3.7"};
  if (e == 0 && b == 3 && t == 0)
    return {Existence::Cited, "Fujisawa, Example 3.7 (same construction)"};
  if (e == 1 && b == 5 && t == 1)
    return {Existence::Proved, "non-trivial extension restricting to O(1)+O(1) on the minimal section; "
                               "ample by the Nakai criterion on P(E)"};
  return {Existence::NecessaryOnly, ""};
}

// Every case with c2 <= c2_max on Hirzebruch(e). Requires c2_max <= e+6 for
// the last two branches to be complete.
std::vector<HzCase> hz_cases(Int e, Int c2_max, bool fiber2_only_by_c1sq = false, Int c1sq_max = 0) {
  const Surface s = Surface::hirzebruch(e);
  const Divisor H = Divisor::basis(s, 0), F = Divisor::basis(s, 1);
  std::vector<HzCase> out;

  // c1.F = 2: sums of two sections.
  for (Int t1 = e + 1;; ++t1) {
    bool any = false;
    for (Int t2 = t1;; ++t2) {
      Int c2 = t1 + t2 - e;
      Int c1sq = 4 * (t1 + t2) - 4 * e;
      bool keep = fiber2_only_by_c1sq ? c1sq <= c1sq_max : c2 <= c2_max;
      if (!keep) break;
      any = true;
      out.push_back({e, c2, Branch::Fiber2, t1, t2, 0, 0,
                     canonical(direct_sum(H + t1 * F, H + t2 * F)), {Existence::Exact, ""}});
    }
    if (!any) break;
  }
  if (fiber2_only_by_c1sq) return out;

  // c1.F = 3: c1 = 3H + bF with b - 3e >= 2 and quotient H + (b-t)F, b - t > e.
  // On Hirzebruch(0) b = 2 is the c1.F = 2 case for the other ruling.
  for (Int b = 3 * e + 2;; ++b) {
    if (e == 0 && b == 2) continue;
    // c2 = 2b - t - 2e > b - e, so b - e < c2_max bounds b.
    if (b - e >= c2_max) break;
    for (Int t = 2 * b - 2 * e - c2_max; b - t > e; ++t) {
      Int c2 = 2 * b - t - 2 * e;
      Divisor sub = 2 * H + t * F, quot = H + (b - t) * F;
      if (is_ample(sub)) {
        out.push_back({e, c2, Branch::Fiber3Split, 0, 0, b, t, canonical(direct_sum(sub, quot)),
                       {Existence::Exact, ""}});
      } else {
        out.push_back({e, c2, Branch::Fiber3NonSplit, 0, 0, b, t,
                       canonical(extension(sub, quot, 0, SplitStatus::NonSplit)),
                       nonsplit_provenance(e, b, t)});
      }
    }
  }

  // 2K + c1 nef: E sits in 0 -> L -> E -> I_Z (x) M -> 0 with M = H + tF,
  // t > e, and L.M >= 3e + 3 forces e <= 1 and a <= 7 below.
  const Divisor K = canonical_class(s);
  for (Int a = 4; a <= 7; ++a) {
    for (Int b = a * e + 1; b <= a * e + e + 6; ++b) {
      Divisor c1 = a * H + b * F;
      if (!is_ample(c1) || !is_nef(2 * K + c1)) continue;
      Int c1sq = self_intersection(c1);
      if (c1sq < -2 * intersect(K, c1)) continue;
      for (Int t = e + 1; t <= e + 6; ++t) {
        Divisor M = H + t * F, L = c1 - M;
        Int lm = intersect(L, M);
        Divisor diff = L - M;
        for (Int z = 0; lm + z <= c2_max; ++z) {
          Int c2 = lm + z;
          if (c1sq <= 4 * c2) continue;
          if (!positive_on_ample_cone(diff) || self_intersection(diff) <= 4 * z) continue;
          if (z != 0) throw Error("unexpected length-" + std::to_string(z) + " destabilizing sequence");
          // Ext^1(M, L) = H^1(L - M) vanishes in the cases reached here.
          out.push_back({e, c2, Branch::Adjoint, 0, 0, b, t, canonical(direct_sum(M, L)),
                         {Existence::Exact, ""}});
        }
      }
    }
  }
  return out;
}

// Position inside one (e, c2) block, following the theorem's listing.
std::tuple<int, Int, Int> case_order(const HzCase& c) {
  switch (c.branch) {
    case Branch::Fiber2: return {0, c.t1, 0};
    case Branch::Fiber3Split: return {1, -c.b, -c.t};
    case Branch::Adjoint: return {2, c.b, c.t};
    case Branch::Fiber3NonSplit: return {3, -c.b, -c.t};
  }
  return {};
}

const char* part_name(Int k) { return k == 4 ? "I" : k == 5 ? "II" : "III"; }

std::string theorem_label(const HzCase& c) {
  const Int k = c.c2 - c.e;
  if (k == 2) return "2.8-min";
  if (k == 3) return "2.8-next";
  if (k > 6) return "2.5-(" + std::to_string(c.t1) + "," + std::to_string(c.t2) + ")";
  if (c.branch == Branch::Fiber2) {
    const char suffix = static_cast<char>('a' + (c.t1 - (c.e + 1)));
    return std::string("2.9-") + part_name(k) + "-i." + suffix;
  }
  // The other cases are numbered ii, iii, ... across all e, e ascending.
  std::vector<HzCase> all;
  for (Int e = 0; e <= 4; ++e)
    for (auto& x : hz_cases(e, e + k))
      if (x.c2 == e + k && x.branch != Branch::Fiber2) all.push_back(x);
  std::stable_sort(all.begin(), all.end(), [](const HzCase& x, const HzCase& y) {
    return std::make_tuple(x.e, case_order(x)) < std::make_tuple(y.e, case_order(y));
  });
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i].e == c.e && all[i].bundle == c.bundle)
      return std::string("2.9-") + part_name(k) + "-" + detail::roman(static_cast<int>(i) + 2);
  throw Error("case missing from its own listing");
}

std::vector<ClassificationEntry> to_entries(std::vector<HzCase> cases) {
  std::stable_sort(cases.begin(), cases.end(), [](const HzCase& x, const HzCase& y) {
    return std::make_tuple(x.c2, case_order(x)) < std::make_tuple(y.c2, case_order(y));
  });
  std::vector<ClassificationEntry> out;
  for (const auto& c : cases) out.push_back(detail::make_entry(theorem_label(c), c.bundle, c.existence));
  return out;
}

}  // namespace

std::vector<ClassificationEntry> classify_hirzebruch(Int e, Constraint c) {
  const Surface s = Surface::hirzebruch(e);
  switch (c.kind) {
    case Constraint::Kind::MaxC2:
      if (c.value > e + 6) detail::unsupported(s, c, "c2 <= e+6 = " + std::to_string(e + 6));
      return to_entries(hz_cases(e, c.value));
    case Constraint::Kind::MaxC1Sq: {
      const Int limit = e == 0 ? 16 : 8 * e + 12;
      if (c.value > limit) detail::unsupported(s, c, "c1^2 <= " + std::to_string(limit));
      // Below this bound 2K + c1 is not nef and c1.F = 3 forces c1^2 >= 9e + 12
      // (18 on Hirzebruch(0)), so only sums of sections remain.
      return to_entries(hz_cases(e, 0, true, c.value));
    }
    case Constraint::Kind::MaxDelta: {
      if (c.value > 16) detail::unsupported(s, c, "delta <= 16");
      // delta <= 16 forces c2 <= 5.
      std::vector<HzCase> keep;
      for (auto& x : hz_cases(e, 5))
        if (chern(x.bundle).delta <= c.value) keep.push_back(x);
      return to_entries(keep);
    }
    default:
      throw InvalidInput("constraint " + to_string(c.kind) + " does not apply to hirzebruch surfaces");
  }
}

}  // namespace chernlat
