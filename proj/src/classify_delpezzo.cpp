// Rank-2 ample bundles on Del Pezzo surfaces of degree d <= 7: small c2
// (d <= c2 <= d+2) and small delta (<= 6).

#include "chernlat/curves.hpp"
#include "classify_common.hpp"

namespace chernlat {

namespace {

// Smallest t >= 1 with -tK + offset ample.
Int first_ample_t(const Divisor& offset) {
  const Divisor minus_k = -canonical_class(offset.surface());
  for (Int t = 1; t <= 16; ++t)
    if (is_ample(t * minus_k + offset)) return t;
  throw Error("no ample member found for family offset " + format_divisor(offset));
}

// [-K] (+) [-tK + C], C running over `choice`.
FamilyDescriptor anticanonical_family(const Surface& s, CurveChoice choice, std::optional<Int> fixed_t) {
  const Divisor minus_k = -canonical_class(s);
  auto choices = curve_choices(choice, s);
  const Divisor rep = choices.front();
  Int t_min = first_ample_t(rep);
  if (fixed_t) {
    if (*fixed_t < t_min) throw Error("fixed parameter below the ample range");
    t_min = *fixed_t;
  }
  return FamilyDescriptor{minus_k, minus_k, rep, t_min, fixed_t, choice, choices.size()};
}

std::vector<ClassificationEntry> by_c2(Int d, Int max_c2) {
  const Surface s = Surface::del_pezzo(d);
  const Divisor minus_k = -canonical_class(s);
  const Provenance exact{Existence::Exact, ""};
  std::vector<ClassificationEntry> out;

  if (max_c2 >= d) out.push_back(detail::make_entry("3.9", direct_sum(minus_k, minus_k), exact));

  if (max_c2 >= d + 1) {
    if (d == 1)
      out.push_back(detail::make_entry("3.11-i", direct_sum(minus_k, 2 * minus_k), exact));
    else
      out.push_back(detail::make_entry("3.11-ii", blowup_extension(2 * minus_k, d + 1, 1),
                                       {Existence::Cited, "Fujisawa, Example (3.11)"}));
  }

  if (max_c2 >= d + 2) {
    if (d == 1)
      out.push_back(detail::make_entry(
          "3.13-i", blowup_extension(2 * minus_k, d + 2, 3),
          {Existence::Cited, "Fujita (2.8); exists for three points in general position"}));
    else
      out.push_back(detail::make_open_entry(
          "3.13-i", OpenCase{2 * minus_k, d + 2, "c1 = -2K with d >= 2 is not yet classified"}));
    out.push_back(detail::make_family_entry("3.13-ii", anticanonical_family(s, CurveChoice::Zero, 1), exact));
    if (d == 1) {
      out.push_back(
          detail::make_family_entry("3.13-iii", anticanonical_family(s, CurveChoice::MinusOne, 2), exact));
      out.push_back(detail::make_entry("3.13-iv", direct_sum(minus_k, 3 * minus_k), exact));
    }
    if (d == 2) out.push_back(detail::make_entry("3.13-v", direct_sum(minus_k, 2 * minus_k), exact));
  }
  return out;
}

std::vector<ClassificationEntry> by_delta(Int d, Int max_delta) {
  const Surface s = Surface::del_pezzo(d);
  const Divisor minus_k = -canonical_class(s);
  const Provenance exact{Existence::Exact, ""};
  std::vector<ClassificationEntry> all;
  if (d == 1) {
    all.push_back(detail::make_family_entry("3.15-i", anticanonical_family(s, CurveChoice::None, {}), exact));
    all.push_back(
        detail::make_family_entry("3.15-iii", anticanonical_family(s, CurveChoice::MinusOne, {}), exact));
    all.push_back(detail::make_family_entry("3.15-iv", anticanonical_family(s, CurveChoice::Zero, {}), exact));
    all.push_back(
        detail::make_family_entry("3.15-vi", anticanonical_family(s, CurveChoice::DisjointMinusOne, {}), exact));
  }
  if (d == 2) all.push_back(detail::make_entry("3.15-ii", direct_sum(minus_k, minus_k), exact));
  if (d == 3) all.push_back(detail::make_entry("3.15-v", direct_sum(minus_k, minus_k), exact));

  std::vector<ClassificationEntry> out;
  for (auto& e : all)
    if (e.chern.delta <= max_delta) out.push_back(std::move(e));
  return out;
}

}  // namespace

std::vector<ClassificationEntry> classify_delpezzo(Int d, Constraint c) {
  const Surface s = Surface::del_pezzo(d);
  switch (c.kind) {
    case Constraint::Kind::MaxC2:
      if (c.value > d + 2) detail::unsupported(s, c, "c2 <= d+2 = " + std::to_string(d + 2));
      return by_c2(d, c.value);
    case Constraint::Kind::MaxDelta:
      if (c.value > 6) detail::unsupported(s, c, "delta <= 6");
      return by_delta(d, c.value);
    default:
      throw InvalidInput("constraint " + to_string(c.kind) + " does not apply to del pezzo surfaces");
  }
}

}  // namespace chernlat
