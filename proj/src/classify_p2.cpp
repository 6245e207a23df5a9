// Rank-2 ample bundles on P^2, indexed by (c1, c2). Known strata:
//   c1 <= 3                  : uniform bundles
//   c2 = c1 - 1              : O(1) + O(c1 - 1)
//   c1 - 1 < c2 < 2c1 - 4    : empty
//   c2 = 2c1 - 4             : O(2) + O(c1 - 2)
//   c1 <= c2 <= c1 + 2       : the finite list below
// Anything else is outside what is classified.

#include <algorithm>

#include "classify_common.hpp"

namespace chernlat {

namespace {

const Surface P2 = Surface::projective_plane();

Divisor O(Int a) { return Divisor(P2, {a}); }

ClassificationEntry split(const std::string& label, Int a, Int b) {
  return detail::make_entry(label, direct_sum(O(a), O(b)), {Existence::Exact, ""});
}

bool classified(Int c1, Int c2) {
  if (c1 < 2) return true;  // nothing: c1.line >= 2
  if (c1 <= 3) return true;
  if (c2 <= 2 * c1 - 4) return true;
  return c2 <= c1 + 2;
}

// All entries with exactly these Chern numbers.
std::vector<ClassificationEntry> at(Int c1, Int c2) {
  if (!classified(c1, c2))
    throw UnsupportedRange("p2: (c1, c2) = (" + std::to_string(c1) + ", " + std::to_string(c2) +
                           ") is outside the classified range");
  std::vector<ClassificationEntry> out;
  if (c1 < 2) return out;
  if (c1 == 2) {
    if (c2 == 1) out.push_back(split("4.1-i", 1, 1));
    return out;
  }
  if (c1 == 3) {
    if (c2 == 2) out.push_back(split("4.1-ii", 1, 2));
    if (c2 == 3) out.push_back(detail::make_entry("4.1-iii", tangent(P2), {Existence::Exact, ""}));
    return out;
  }
  if (c2 == c1 - 1) {
    out.push_back(split("4.3", 1, c1 - 1));
    return out;
  }
  if (c2 < 2 * c1 - 4) return out;
  if (c2 == 2 * c1 - 4) {
    // Inside the c1 <= c2 <= c1+2 window these carry the finer labels.
    const Int k = c2 - c1;
    std::string label = k == 0 ? "4.5-I-i" : k == 1 ? "4.5-II-i" : k == 2 ? "4.5-III-i" : "4.4";
    out.push_back(split(label, 2, c1 - 2));
    return out;
  }
  // c1 <= c2 <= c1 + 2 and c2 > 2c1 - 4, so c1 in {4, 5}.
  const Provenance fjs39{Existence::Cited, "Fujisawa, Example (3.9)"};
  if (c1 == 4 && c2 == 5)
    out.push_back(detail::make_entry("4.5-II-ii", extension(O(2), O(2), 1, SplitStatus::NonSplit), fjs39));
  if (c1 == 5 && c2 == 7) {
    out.push_back(detail::make_entry("4.5-III-ii", extension(O(3), O(2), 1, SplitStatus::NonSplit), fjs39));
    out.push_back(detail::make_entry("4.5-III-iii", tangent_twist(P2, 1), {Existence::Exact, ""}));
  }
  if (c1 == 4 && c2 == 6)
    out.push_back(detail::make_entry("4.5-III-iv", extension(O(1), O(3), 3, SplitStatus::NonSplit),
                                     {Existence::Cited, "Fujisawa, Example (3.11)"}));
  return out;
}

// Semistable but not stable / not semistable: these are read off the
// destabilizing sub-line-bundle in the defining sequence.
void attach_stability(ClassificationEntry& e) {
  const auto* b = std::get_if<BundleDescriptor>(&e.bundle);
  if (!b) return;
  if (e.theorem_label == "4.5-II-ii") e.stability = Stability::SemistableNotStable;
  else if (e.theorem_label == "4.5-III-ii") e.stability = Stability::NotSemistable;
  else if (e.theorem_label == "4.5-III-iv") e.stability = Stability::Stable;
  else e.stability = p2_stability(*b);
}

std::vector<ClassificationEntry> finish(std::vector<ClassificationEntry> v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    return std::make_pair(x.chern.c2, x.chern.c1[0]) < std::make_pair(y.chern.c2, y.chern.c1[0]);
  });
  for (auto& e : v) attach_stability(e);
  return v;
}

ClassificationEntry line_family() {
  FamilyDescriptor f{O(1), O(1), O(0), 1, std::nullopt, CurveChoice::None, 1};
  return detail::make_family_entry("4.3", f, {Existence::Exact, ""});
}

}  // namespace

std::optional<Stability> p2_stability(const BundleDescriptor& b) {
  if (!b.surface.is_plane()) return std::nullopt;
  const BundleDescriptor c = canonical(b);
  if (std::holds_alternative<Tangent>(c.shape) || std::holds_alternative<TangentTwist>(c.shape))
    return Stability::Stable;
  if (const auto* s = std::get_if<DirectSum>(&c.shape))
    return s->L == s->M ? Stability::SemistableNotStable : Stability::NotSemistable;
  if (const auto* x = std::get_if<Extension>(&c.shape)) {
    // O(l) is a subsheaf; 2l > c1 destabilizes, 2l = c1 is borderline.
    Int l = x->sub[0], c1 = x->sub[0] + x->quot[0];
    if (2 * l > c1) return Stability::NotSemistable;
  }
  return std::nullopt;
}

std::vector<ClassificationEntry> classify_p2(Constraint c) {
  std::vector<ClassificationEntry> out;
  auto append = [&](Int c1, Int c2) {
    for (auto& e : at(c1, c2)) out.push_back(std::move(e));
  };
  switch (c.kind) {
    case Constraint::Kind::MaxC1:
      if (c.value > 3) detail::unsupported(P2, c, "c1 <= 3");
      for (Int c1 = 2; c1 <= c.value; ++c1)
        for (Int c2 = 1; c2 <= 3; ++c2) append(c1, c2);
      return finish(out);
    case Constraint::Kind::MaxC2:
      if (c.value > 6) detail::unsupported(P2, c, "c2 <= 6");
      // c2 >= c1 - 1 bounds c1.
      for (Int c1 = 2; c1 <= c.value + 1; ++c1)
        for (Int c2 = 1; c2 <= c.value; ++c2) append(c1, c2);
      return finish(out);
    case Constraint::Kind::MaxC2MinusC1: {
      if (c.value > 2) detail::unsupported(P2, c, "c2 - c1 <= 2");
      if (c.value >= -1) out.push_back(line_family());
      // c1 <= c2 <= c1 + 2 with c2 >= 2c1 - 4 leaves c1 <= 6.
      for (Int c1 = 2; c1 <= 6; ++c1)
        for (Int c2 = c1; c2 <= c1 + c.value; ++c2) append(c1, c2);
      return finish(out);
    }
    case Constraint::Kind::MaxDelta: {
      if (c.value > 24) detail::unsupported(P2, c, "delta <= 24");
      if (c.value >= 0) out.push_back(line_family());
      // delta > 0 and delta <= 24 leave c1 <= 5, c2 <= 6; delta = 0 is the family.
      for (Int c1 = 2; c1 <= 5; ++c1)
        for (Int c2 = 1; c2 <= 6; ++c2)
          for (auto& e : at(c1, c2))
            if (e.chern.delta > 0 && e.chern.delta <= c.value) out.push_back(std::move(e));
      return finish(out);
    }
    default:
      throw InvalidInput("constraint " + to_string(c.kind) + " does not apply to p2");
  }
}

}  // namespace chernlat
