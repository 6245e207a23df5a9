#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "chernlat/cli.hpp"
#include "chernlat/oracle.hpp"

using namespace chernlat;

namespace {

Divisor p2(Int a) { return Divisor(Surface::projective_plane(), {a}); }

std::size_t exact_count(const std::vector<Candidate>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](const auto& c) { return c.exact; }));
}

}  // namespace

TEST_CASE("destabilizing pairs") {
  const SearchBounds b;
  const auto p = find_bogomolov_pair(Surface::projective_plane(), make_chern(p2(4), 3), b);
  REQUIRE(p.has_value());
  CHECK(p->L == p2(3));
  CHECK(p->M == p2(1));
  CHECK(p->degZ == 0);

  const Surface s0 = Surface::hirzebruch(0);
  CHECK_FALSE(find_bogomolov_pair(s0, make_chern(Divisor(s0, {2, 2}), 2), b).has_value());

  const Surface dp1 = Surface::del_pezzo(1);
  const Divisor K = canonical_class(dp1);
  const auto q = find_bogomolov_pair(dp1, make_chern(-3 * K, 2), b);
  REQUIRE(q.has_value());
  CHECK(q->L == -2 * K);
  CHECK(q->M == -K);
  CHECK(q->degZ == 0);
}

TEST_CASE("a returned pair satisfies every condition exactly") {
  const SearchBounds b{8, 8};
  for (Int e = 0; e <= 3; ++e) {
    const Surface s = Surface::hirzebruch(e);
    const Divisor A(s, {1, e + 1});
    for (Int x = 2; x <= 4; ++x)
      for (Int y = x * e + 2; y <= x * e + 8; ++y)
        for (Int c2 = 1; c2 <= 10; ++c2) {
          const ChernData c = make_chern(Divisor(s, {x, y}), c2);
          const auto p = find_bogomolov_pair(s, c, b);
          if (!bogomolov_unstable(c)) {
            CHECK_FALSE(p.has_value());
            continue;
          }
          if (!p) continue;
          CHECK(p->L + p->M == c.c1);
          CHECK(intersect(p->L, p->M) + p->degZ == c2);
          CHECK(self_intersection(p->L - p->M) > 4 * p->degZ);
          CHECK(intersect(p->L - p->M, A) > 0);
          CHECK(is_ample(p->M));
        }
  }
}

TEST_CASE("candidate search examples") {
  const Surface dp2 = Surface::del_pezzo(2);
  const auto a = search_candidates(dp2, Constraint::max_c2(2), SearchBounds{4, 8});
  REQUIRE(a.size() == 1);
  CHECK(a[0].exact);
  CHECK(*a[0].bundle == canonical(direct_sum(-canonical_class(dp2), -canonical_class(dp2))));

  const auto b = search_candidates(Surface::projective_plane(), Constraint::max_c2(1), SearchBounds{});
  REQUIRE_FALSE(b.empty());
  CHECK(exact_count(b) == 1);
  for (const auto& c : b) CHECK(c.chern == make_chern(p2(2), 1));

  const Surface s0 = Surface::hirzebruch(0);
  const auto c = search_candidates(s0, Constraint::max_c2(2), SearchBounds{5, 2});
  REQUIRE(exact_count(c) == 1);
  for (const auto& x : c) CHECK(x.chern == make_chern(Divisor(s0, {2, 2}), 2));

  CHECK_THROWS_AS(validate(SearchBounds{-1, 3}), InvalidInput);
  CHECK_THROWS_AS(validate(SearchBounds{3, -1}), InvalidInput);
}

TEST_CASE("direct sums found by the search match an independent enumeration") {
  // Ample pairs on Hirzebruch(e) with c2 <= 6, up to order and the ruling swap
  // on Hirzebruch(0): a > 0, b > a e.
  for (Int e = 0; e <= 4; ++e) {
    const Surface s = Surface::hirzebruch(e);
    using Key = std::pair<std::vector<Int>, std::vector<Int>>;
    const auto key = [e](std::vector<Int> x, std::vector<Int> y) {
      Key k{std::min(x, y), std::max(x, y)};
      if (e == 0) {
        std::swap(x[0], x[1]);
        std::swap(y[0], y[1]);
        k = std::max(k, Key{std::min(x, y), std::max(x, y)});
      }
      return k;
    };
    std::set<Key> want;
    for (Int a1 = 1; a1 <= 12; ++a1)
      for (Int b1 = a1 * e + 1; b1 <= 12; ++b1)
        for (Int a2 = 1; a2 <= 12; ++a2)
          for (Int b2 = a2 * e + 1; b2 <= 12; ++b2)
            if (-e * a1 * a2 + a1 * b2 + a2 * b1 <= 6) want.insert(key({a1, b1}, {a2, b2}));
    std::set<Key> got;
    for (const auto& c : search_candidates(s, Constraint::max_c2(6), SearchBounds{}))
      if (c.exact) {
        const auto& d = std::get<DirectSum>(c.bundle->shape);
        got.insert(key({d.L.coeffs().begin(), d.L.coeffs().end()}, {d.M.coeffs().begin(), d.M.coeffs().end()}));
      }
    CAPTURE(e);
    CHECK(got == want);
  }
}

TEST_CASE("cross-checks agree with the published lists") {
  const auto r211 = cross_check("2.11");
  CHECK(r211.agreed.size() == 32);
  CHECK(r211.classifier_only.empty());
  CHECK(r211.unexplained() == 0);
  CHECK(r211.success());

  const auto r314 = cross_check("3.14");
  CHECK(r314.agreed.size() == 9);
  CHECK(r314.success());

  const auto r47 = cross_check("4.7");
  CHECK(r47.agreed.size() == 11);
  CHECK(r47.success());

  for (const char* id : {"2.6", "2.12", "4.8", "3.15"}) {
    CAPTURE(id);
    const auto r = cross_check(id);
    CHECK(r.success());
    CHECK(r.agreed.size() == corollary(id).size());
    for (const auto& o : r.oracle_only) CHECK_FALSE(o.reason.empty());
  }
  CHECK_THROWS_AS(cross_check("9.9"), InvalidInput);
}

TEST_CASE("a tampered list is caught") {
  auto entries = corollary("2.11");
  const ClassificationEntry removed = entries[9];  // [H+2F]+[H+3F] on Hirzebruch(0)
  entries.erase(entries.begin() + 9);
  const auto r = cross_check("2.11", entries);
  CHECK_FALSE(r.success());
  CHECK(r.unexplained() >= 1);
  bool found = false;
  for (const auto& o : r.oracle_only)
    if (o.reason.empty() && o.candidate.chern == removed.chern) found = true;
  CHECK(found);

  // An entry that is not ample at all shows up as classifier-only.
  auto extra = corollary("4.7");
  const Surface p = Surface::projective_plane();
  extra.push_back(ClassificationEntry{p, "bogus", "bogus", direct_sum(p2(0), p2(3)), make_chern(p2(3), 0), {},
                                      std::nullopt});
  const auto r2 = cross_check("4.7", extra);
  CHECK_FALSE(r2.success());
  CHECK(r2.classifier_only.size() == 1);
}

TEST_CASE("delta-zero unstable entries satisfy the equality analysis") {
  for (const auto& id : corollary_ids())
    for (const auto& e : corollary(id)) {
      if (e.chern.delta != 0 || !bogomolov_unstable(e.chern)) continue;
      CAPTURE(e.case_label);
      const auto p = find_bogomolov_pair(e.surface, e.chern, SearchBounds{12, std::max<Int>(8, e.chern.c2)});
      REQUIRE(p.has_value());
      const Int LM = intersect(p->L, p->M);
      CHECK(LM * LM == self_intersection(p->L) * self_intersection(p->M));
      CHECK(self_intersection(p->M) == p->degZ + 1);
      CHECK(p->degZ == 0);
    }
}

TEST_CASE("reports are deterministic") {
  const std::string a = cli::to_json(cross_check("2.12")).dump();
  const std::string b = cli::to_json(cross_check("2.12")).dump();
  CHECK(a == b);
}

TEST_CASE("the scope names the bounds") {
  const auto r = cross_check("4.8", SearchBounds{10, 5});
  CHECK(r.scope().find("10") != std::string::npos);
  CHECK(r.scope().find("degZ <= 5") != std::string::npos);
}
