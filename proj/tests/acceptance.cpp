// One PASS/FAIL line per acceptance criterion. Exit status is non-zero when
// any criterion fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "chernlat/curves.hpp"
#include "chernlat/oracle.hpp"

using namespace chernlat;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome minus_one_totals() {
  const auto t0 = Clock::now();
  const std::size_t want[] = {240, 56, 27, 16, 10, 6, 3};
  std::ostringstream got;
  bool ok = true;
  for (Int d = 1; d <= 7; ++d) {
    const std::size_t n = enumerate_minus_one_curves(d).size();
    ok = ok && n == want[d - 1];
    got << (d > 1 ? "," : "") << n;
  }
  const double s = seconds_since(t0);
  std::ostringstream out;
  out << "counts " << got.str() << " in " << s << " s";
  return {ok && s < 5.0, out.str()};
}

Outcome histograms() {
  const std::map<std::string, std::vector<std::size_t>> table{
      {"(0; -1)", {8, 7, 6, 5, 4, 3, 2}},        {"(1; 1^2)", {28, 21, 15, 10, 6, 3, 1}},
      {"(2; 1^5)", {56, 21, 6, 1, 0, 0, 0}},     {"(3; 2, 1^6)", {56, 7, 0, 0, 0, 0, 0}},
      {"(4; 2^3, 1^5)", {56, 0, 0, 0, 0, 0, 0}}, {"(5; 2^6, 1^2)", {28, 0, 0, 0, 0, 0, 0}},
      {"(6; 3, 2^7)", {8, 0, 0, 0, 0, 0, 0}}};
  for (Int d = 1; d <= 7; ++d) {
    std::map<std::string, std::size_t> got;
    for (const auto& [sig, n] : signature_histogram(d)) got[sig] = n;
    for (const auto& [sig, counts] : table) {
      const std::size_t want = counts[static_cast<std::size_t>(d - 1)];
      const std::size_t have = got.count(sig) ? got[sig] : 0;
      if (want != have)
        return {false, "d=" + std::to_string(d) + " " + sig + ": " + std::to_string(have) + " != " +
                           std::to_string(want)};
      got.erase(sig);
    }
    for (const auto& [sig, n] : got)
      if (n != 0) return {false, "d=" + std::to_string(d) + " unexpected signature " + sig};
  }
  return {true, "7 rows x 7 degrees"};
}

Outcome union_classes() {
  const Int m[] = {240, 28, 9, 4, 2, 1};
  for (Int d = 1; d <= 6; ++d) {
    const UnionClass u = union_class(d);
    if (u.sum != -m[d - 1] * canonical_class(Surface::del_pezzo(d)) || u.m_d != m[d - 1])
      return {false, "d=" + std::to_string(d) + ": " + format_divisor(u.sum)};
  }
  const UnionClass u7 = union_class(7);
  if (u7.sum != Divisor::basis(Surface::del_pezzo(7), 0)) return {false, "d=7: " + format_divisor(u7.sum)};
  return {true, "m_d = 240,28,9,4,2,1; H for d=7"};
}

// Published lists, transcribed as (e, L, M) on Hirzebruch(e).
struct Sum {
  Int e;
  std::vector<Int> L, M;
};

bool same_list(const std::vector<ClassificationEntry>& got, const std::vector<Sum>& want,
               const std::vector<std::size_t>& ext_positions, std::string& why) {
  if (got.size() != want.size() + ext_positions.size()) {
    why = std::to_string(got.size()) + " entries";
    return false;
  }
  std::size_t w = 0;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const auto* b = std::get_if<BundleDescriptor>(&got[i].bundle);
    if (!b) return why = got[i].case_label + " not a bundle", false;
    if (std::find(ext_positions.begin(), ext_positions.end(), i) != ext_positions.end()) {
      if (!std::holds_alternative<Extension>(b->shape)) return why = got[i].case_label + " not an extension", false;
      continue;
    }
    const Sum& s = want[w++];
    const Surface surf = Surface::hirzebruch(s.e);
    if (*b != canonical(direct_sum(Divisor(surf, s.L), Divisor(surf, s.M))))
      return why = got[i].case_label + " differs", false;
  }
  return true;
}

Outcome hirzebruch_lists() {
  const std::vector<Sum> c26{{0, {1, 1}, {1, 1}}, {0, {1, 1}, {1, 2}}, {1, {1, 2}, {1, 2}}, {0, {1, 1}, {1, 3}},
                             {0, {1, 2}, {1, 2}}, {1, {1, 2}, {1, 3}}, {2, {1, 3}, {1, 3}}};
  const std::vector<Sum> c211{
      {0, {1, 1}, {1, 1}}, {0, {1, 1}, {1, 2}}, {1, {1, 2}, {1, 2}}, {0, {1, 1}, {1, 3}}, {0, {1, 2}, {1, 2}},
      {0, {1, 1}, {2, 2}}, {1, {1, 2}, {1, 3}}, {2, {1, 3}, {1, 3}}, {0, {1, 1}, {1, 4}}, {0, {1, 2}, {1, 3}},
      {0, {1, 1}, {2, 3}}, {0, {1, 2}, {2, 1}}, {1, {1, 2}, {1, 4}}, {1, {1, 3}, {1, 3}}, {1, {1, 2}, {2, 3}},
      {2, {1, 3}, {1, 4}}, {3, {1, 4}, {1, 4}}, {0, {1, 1}, {1, 5}}, {0, {1, 2}, {1, 4}}, {0, {1, 3}, {1, 3}},
      {0, {1, 1}, {2, 4}}, {0, {1, 2}, {2, 2}}, {0, {1, 1}, {3, 3}}, {1, {1, 2}, {1, 5}}, {1, {1, 3}, {1, 4}},
      {1, {1, 2}, {2, 4}}, {2, {1, 3}, {1, 5}}, {2, {1, 4}, {1, 4}}, {3, {1, 4}, {1, 5}}, {4, {1, 5}, {1, 5}}};
  const std::vector<Sum> c212{
      {0, {1, 1}, {1, 1}}, {0, {1, 1}, {1, 2}}, {1, {1, 2}, {1, 2}}, {0, {1, 1}, {2, 2}},
      {0, {1, 1}, {1, 3}}, {0, {1, 2}, {1, 2}}, {1, {1, 2}, {1, 3}}, {2, {1, 3}, {1, 3}},
      {0, {1, 1}, {2, 3}}, {1, {1, 2}, {2, 3}}, {0, {1, 1}, {1, 4}}, {0, {1, 2}, {1, 3}},
      {1, {1, 2}, {1, 4}}, {1, {1, 3}, {1, 3}}, {2, {1, 3}, {1, 4}}, {3, {1, 4}, {1, 4}}};
  std::string why;
  if (!same_list(corollary("2.6"), c26, {}, why)) return {false, "2.6: " + why};
  if (!same_list(corollary("2.11"), c211, {23, 27}, why)) return {false, "2.11: " + why};
  if (!same_list(corollary("2.12"), c212, {}, why)) return {false, "2.12: " + why};
  return {true, "7 + 32 + 16 entries"};
}

Outcome minimum_bounds() {
  for (Int e = 0; e <= 6; ++e) {
    if (!classify_hirzebruch(e, Constraint::max_c2(e + 1)).empty()) return {false, "e=" + std::to_string(e)};
    const auto v = classify_hirzebruch(e, Constraint::max_c2(e + 2));
    const Divisor A(Surface::hirzebruch(e), {1, e + 1});
    if (v.size() != 1 || std::get<BundleDescriptor>(v[0].bundle) != canonical(direct_sum(A, A)))
      return {false, "minimizer on e=" + std::to_string(e)};
  }
  for (Int d = 1; d <= 7; ++d) {
    if (!classify_delpezzo(d, Constraint::max_c2(d - 1)).empty()) return {false, "d=" + std::to_string(d)};
    const auto v = classify_delpezzo(d, Constraint::max_c2(d));
    const Divisor mk = -canonical_class(Surface::del_pezzo(d));
    if (v.size() != 1 || std::get<BundleDescriptor>(v[0].bundle) != canonical(direct_sum(mk, mk)))
      return {false, "minimizer on d=" + std::to_string(d)};
  }
  return {true, "e = 0..6, d = 1..7"};
}

Outcome delpezzo_lists() {
  if (corollary("3.14").size() != 9) return {false, "3.14 size"};
  const auto v = corollary("3.15");
  std::size_t families = 0, instances = 0;
  for (const auto& e : v)
    if (const auto* f = std::get_if<FamilyDescriptor>(&e.bundle)) {
      ++families;
      for (const auto& c : curve_choices(f->choice, e.surface))
        for (Int t = f->t_min; t <= 5; ++t, ++instances)
          if (!numeric_ample_necessary(f->at(t, c)).passes())
            return {false, e.case_label + " fails at t=" + std::to_string(t)};
    }
  if (v.size() != 6) return {false, "3.15 size"};
  for (Int d = 2; d <= 7; ++d) {
    bool open = false;
    for (const auto& e : classify_delpezzo(d, Constraint::max_c2(d + 2)))
      if (e.theorem_label == "3.13-i")
        open = std::holds_alternative<OpenCase>(e.bundle) && e.existence.kind == Existence::Open;
    if (!open) return {false, "open case missing on d=" + std::to_string(d)};
  }
  return {true, "9 + 6 entries (" + std::to_string(families) + " families, " + std::to_string(instances) +
                    " instances checked), open case on d=2..7"};
}

Outcome p2_lists() {
  const auto a = corollary("4.7");
  const auto b = corollary("4.8");
  if (a.size() != 11 || b.size() != 5) return {false, "sizes"};
  using S = Stability;
  const std::vector<S> stab{S::SemistableNotStable, S::NotSemistable, S::Stable,        S::NotSemistable,
                            S::SemistableNotStable, S::NotSemistable, S::SemistableNotStable,
                            S::NotSemistable,       S::Stable,        S::NotSemistable, S::NotSemistable};
  const std::vector<Int> c2{1, 2, 3, 3, 4, 4, 5, 5, 6, 6, 6};
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].stability != stab[i] || a[i].chern.c2 != c2[i]) return {false, a[i].case_label};
  const std::vector<Int> deltas{0, 7, 9, 20, 24};
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i].chern.delta != deltas[i]) return {false, b[i].case_label};
  for (const auto& e : classify_p2(Constraint::max_c2(6)))
    if (e.theorem_label.rfind("4.5", 0) == 0 && !e.stability) return {false, e.case_label + " lacks stability"};
  return {true, "11 + 5 entries with stability"};
}

Outcome oracle_agreement() {
  const auto t0 = Clock::now();
  std::ostringstream out;
  bool ok = true;
  for (const char* id : {"2.6", "2.11", "2.12", "3.14", "4.7", "4.8"}) {
    const auto r = cross_check(id);
    ok = ok && r.success();
    out << id << ":" << r.agreed.size() << "/" << r.classifier_only.size() << "/" << r.unexplained() << " ";
  }
  const double s = seconds_since(t0);
  out << "(agreed/classifier-only/unexplained) in " << s << " s";
  return {ok && s < 60.0, out.str()};
}

Outcome inequality_suites() {
  std::size_t entries = 0, equality = 0;
  for (const auto& id : corollary_ids())
    for (const auto& e : corollary(id)) {
      ++entries;
      const ChernData& c = e.chern;
      if (!(0 < c.c2 && c.c2 < c.c1_sq)) return {false, e.case_label + " violates 0 < c2 < c1^2"};
      if (!(c.c1_sq <= (c.c2 + 1) * (c.c2 + 1))) return {false, e.case_label + " violates c1^2 <= (c2+1)^2"};
      if (c.delta != 0 || !bogomolov_unstable(c)) continue;
      const auto p = find_bogomolov_pair(e.surface, c, SearchBounds{12, std::max<Int>(8, c.c2)});
      if (!p) return {false, e.case_label + ": no destabilizing pair"};
      const Int LM = intersect(p->L, p->M);
      if (LM * LM != self_intersection(p->L) * self_intersection(p->M) ||
          self_intersection(p->M) != p->degZ + 1 || p->degZ != 0)
        return {false, e.case_label + ": equalities fail"};
      ++equality;
    }
  return {true, std::to_string(entries) + " entries, " + std::to_string(equality) + " delta-0 equality checks"};
}

Outcome spot_values() {
  for (Int d = 1; d <= 7; ++d) {
    const Divisor K = canonical_class(Surface::del_pezzo(d));
    if (rank2_chi(twist_chern(make_chern(-2 * K, d), K)) != 2) return {false, "chi at (-2K, d)"};
    if (rank2_chi(twist_chern(make_chern(-2 * K, d + 1), K)) != 1) return {false, "chi at (-2K, d+1)"};
  }
  const Divisor K = canonical_class(Surface::del_pezzo(1));
  for (const auto& C : zero_curves_cached(1))
    if (rank2_chi(twist_chern(make_chern(-2 * K + C, 3), K)) != 3) return {false, "chi at (-2K+C, 3)"};
  const Surface p2 = Surface::projective_plane();
  const ChernData t1 = chern(tangent_twist(p2, 1));
  if (t1.c1 != Divisor(p2, {5}) || t1.c2 != 7) return {false, "T(1)"};
  return {true, "chi = 2, 1, 3; T(1) = (5, 7)"};
}

Outcome lattice_properties() {
  std::vector<Surface> surfaces;
  for (Int e = 0; e <= 6; ++e) surfaces.push_back(Surface::hirzebruch(e));
  for (Int d = 1; d <= 7; ++d) surfaces.push_back(Surface::del_pezzo(d));
  surfaces.push_back(Surface::projective_plane());
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<std::size_t> pick(0, surfaces.size() - 1);
  std::uniform_int_distribution<Int> coeff(-20, 20);
  auto random_divisor = [&](const Surface& s) {
    std::vector<Int> c(s.rank());
    for (auto& x : c) x = coeff(rng);
    return Divisor(s, c);
  };
  const int trials = 10000;
  int failures = 0;
  for (int i = 0; i < trials; ++i) {
    const Surface& s = surfaces[pick(rng)];
    const Divisor a = random_divisor(s), b = random_divisor(s), c = random_divisor(s);
    const Int k = coeff(rng);
    const Divisor K = canonical_class(s);
    const Divisor A = s.is_hirzebruch() ? Divisor(s, {1, s.parameter() + 1}) : -K;
    bool ok = intersect(a + b, c) == intersect(a, c) + intersect(b, c) && intersect(k * a, b) == k * intersect(a, b) &&
              intersect(a, b) == intersect(b, a);
    ok = ok && (self_intersection(a) + intersect(a, K)) % 2 == 0;
    ok = ok && intersect(A, a) * intersect(A, a) >= self_intersection(A) * self_intersection(a);
    const ChernData E = make_chern(a + b, intersect(a, b));
    ok = ok && twist_chern(twist_chern(E, c), a) == twist_chern(E, c + a);
    ok = ok && twist_chern(E, c) == chern(direct_sum(a + c, b + c));
    if (!ok) ++failures;
  }
  return {failures == 0, std::to_string(trials) + " trials, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"(-1)-curve totals and runtime", minus_one_totals},
      {"signature histograms", histograms},
      {"union classes", union_classes},
      {"Hirzebruch classifications", hirzebruch_lists},
      {"minimum c2 bounds", minimum_bounds},
      {"Del Pezzo classifications", delpezzo_lists},
      {"P^2 classifications", p2_lists},
      {"oracle agreement", oracle_agreement},
      {"inequality suites", inequality_suites},
      {"calculus spot values", spot_values},
      {"lattice property suite", lattice_properties}};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail << '\n';
  }
  return all ? 0 : 1;
}
