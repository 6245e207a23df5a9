#include <algorithm>
#include <map>
#include <tuple>

#include "chernlat/curves.hpp"
#include "classify_common.hpp"

namespace chernlat {

std::string to_string(Existence e) {
  switch (e) {
    case Existence::Exact: return "exact";
    case Existence::Proved: return "proved";
    case Existence::Cited: return "cited";
    case Existence::NecessaryOnly: return "necessary-only";
    case Existence::Open: return "open";
  }
  return {};
}

std::string to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::SemistableNotStable: return "semistable-not-stable";
    case Stability::NotSemistable: return "not-semistable";
  }
  return {};
}

std::string to_string(Constraint::Kind k) {
  switch (k) {
    case Constraint::Kind::MaxC2: return "max_c2";
    case Constraint::Kind::MaxC1Sq: return "max_c1sq";
    case Constraint::Kind::MaxDelta: return "max_delta";
    case Constraint::Kind::MaxC1: return "max_c1";
    case Constraint::Kind::MaxC2MinusC1: return "max_c2_minus_c1";
  }
  return {};
}

std::string describe(CurveChoice c) {
  switch (c) {
    case CurveChoice::None: return "";
    case CurveChoice::MinusOne: return "C any (-1)-curve";
    case CurveChoice::Zero: return "C any 0-curve";
    case CurveChoice::DisjointMinusOne: return "C+C' with C, C' disjoint (-1)-curves";
  }
  return {};
}

std::vector<Divisor> curve_choices(CurveChoice c, const Surface& s) {
  if (c == CurveChoice::None) return {Divisor::zero(s)};
  if (!s.is_del_pezzo()) throw InvalidInput("curve choices live on del pezzo surfaces");
  switch (c) {
    case CurveChoice::MinusOne: return minus_one_curves_cached(s.parameter());
    case CurveChoice::Zero: return zero_curves_cached(s.parameter());
    // -K.D = 2, D^2 = -2 forces chi(D) = 1 and h^2(D) = 0, so D is effective
    // and splits as a sum of two disjoint (-1)-curves.
    case CurveChoice::DisjointMinusOne: return classes_with_degree(s, 2, -2);
    default: return {};
  }
}

BundleDescriptor FamilyDescriptor::at(Int t) const { return at(t, offset); }

BundleDescriptor FamilyDescriptor::at(Int t, const Divisor& off) const {
  if (t < t_min || (t_max && t > *t_max))
    throw InvalidInput("parameter t = " + std::to_string(t) + " outside the family's range");
  return direct_sum(fixed, t * slope + off);
}

std::vector<BundleDescriptor> expand_family(const FamilyDescriptor& f, Int lo, Int hi) {
  std::vector<BundleDescriptor> out;
  if (lo > hi) return out;
  if (lo < f.t_min || (f.t_max && hi > *f.t_max))
    throw InvalidInput("range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                       "] leaves the family's constraint");
  for (Int t = lo; t <= hi; ++t) out.push_back(f.at(t));
  return out;
}

namespace detail {

std::string roman(int n) {
  static const std::pair<int, const char*> table[] = {{10, "x"}, {9, "ix"}, {5, "v"}, {4, "iv"}, {1, "i"}};
  std::string out;
  for (auto [v, s] : table)
    while (n >= v) out += s, n -= v;
  return out;
}

ClassificationEntry make_entry(const std::string& label, const BundleDescriptor& b, Provenance p) {
  BundleDescriptor c = canonical(b);
  return ClassificationEntry{c.surface, label, label, c, chern(c), std::move(p), std::nullopt};
}

ClassificationEntry make_family_entry(const std::string& label, const FamilyDescriptor& f, Provenance p) {
  return ClassificationEntry{f.fixed.surface(), label, label, f, chern(f.at(f.t_min)), std::move(p),
                             std::nullopt};
}

ClassificationEntry make_open_entry(const std::string& label, const OpenCase& o) {
  return ClassificationEntry{o.c1.surface(), label, label, o, make_chern(o.c1, o.c2),
                             {Existence::Open, o.note}, std::nullopt};
}

void unsupported(const Surface& s, Constraint c, const std::string& limit) {
  throw UnsupportedRange(s.selector() + ": " + to_string(c.kind) + " = " + std::to_string(c.value) +
                         " is beyond the classified range (" + limit + ")");
}

}  // namespace detail

std::vector<ClassificationEntry> classify(const Surface& s, Constraint c) {
  switch (s.kind()) {
    case SurfaceKind::Hirzebruch: return classify_hirzebruch(s.parameter(), c);
    case SurfaceKind::DelPezzo: return classify_delpezzo(s.parameter(), c);
    case SurfaceKind::ProjectivePlane: return classify_p2(c);
  }
  return {};
}

const std::vector<std::string>& corollary_ids() {
  static const std::vector<std::string> ids{"2.6", "2.11", "2.12", "3.14", "3.15", "4.7", "4.8"};
  return ids;
}

namespace {

using Key = std::tuple<Int, Int, std::size_t>;

// Gather per-surface results, order them by (primary, surface parameter,
// position in the per-surface result) and number them.
std::vector<ClassificationEntry> gather(const std::string& id, const std::vector<Surface>& surfaces,
                                        Constraint c, Int (*primary)(const ClassificationEntry&),
                                        bool roman_numbering) {
  std::vector<std::pair<Key, ClassificationEntry>> all;
  for (const auto& s : surfaces) {
    auto v = classify(s, c);
    for (std::size_t i = 0; i < v.size(); ++i) all.push_back({{primary(v[i]), s.parameter(), i}, v[i]});
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<ClassificationEntry> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    auto e = all[i].second;
    int n = static_cast<int>(i) + 1;
    e.case_label = id + "-(" + (roman_numbering ? detail::roman(n) : std::to_string(n)) + ")";
    out.push_back(std::move(e));
  }
  return out;
}

Int by_c2(const ClassificationEntry& e) { return e.chern.c2; }
Int by_c1sq(const ClassificationEntry& e) { return e.chern.c1_sq; }
Int by_delta(const ClassificationEntry& e) { return e.chern.delta; }
Int by_nothing(const ClassificationEntry&) { return 0; }

std::vector<Surface> hirzebruch_range(Int hi) {
  std::vector<Surface> v;
  for (Int e = 0; e <= hi; ++e) v.push_back(Surface::hirzebruch(e));
  return v;
}

}  // namespace

std::vector<ClassificationEntry> corollary(const std::string& id) {
  // c2 >= e+2 and c1^2 >= 4e+8 bound e in each Hirzebruch list.
  if (id == "2.6") return gather(id, hirzebruch_range(2), Constraint::max_c1sq(16), by_c1sq, true);
  if (id == "2.11") return gather(id, hirzebruch_range(4), Constraint::max_c2(6), by_c2, false);
  if (id == "2.12") return gather(id, hirzebruch_range(3), Constraint::max_delta(16), by_delta, true);
  std::vector<Surface> dps;
  for (Int d = 1; d <= 7; ++d) dps.push_back(Surface::del_pezzo(d));
  if (id == "3.14") return gather(id, dps, Constraint::max_c2(3), by_c2, false);
  if (id == "3.15") return gather(id, dps, Constraint::max_delta(6), by_delta, true);
  if (id == "4.7") return gather(id, {Surface::projective_plane()}, Constraint::max_c2(6), by_nothing, false);
  if (id == "4.8") return gather(id, {Surface::projective_plane()}, Constraint::max_delta(24), by_delta, true);
  throw InvalidInput("unknown corollary '" + id + "' (known: 2.6, 2.11, 2.12, 3.14, 3.15, 4.7, 4.8)");
}

}  // namespace chernlat
