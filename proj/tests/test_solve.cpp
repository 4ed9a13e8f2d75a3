#include <doctest.h>

#include "support.hpp"
#include "turan/errors.hpp"
#include "turan/json_io.hpp"
#include "turan/palette.hpp"

using namespace turan;
using namespace testsupport;

namespace {

SolveStatus status_of(const ThreeGraph& g, PropertyKind kind, int threads = 1) {
  SolveOptions opt;
  opt.threads = threads;
  return solve(g, kind, opt).status;
}

}  // namespace

TEST_CASE("statuses pinned by the classification theorems") {
  CHECK(status_of(catalog("wheel", 4), PropertyKind::Clubs) == SolveStatus::Unsat);
  CHECK(status_of(catalog("wheel", 5), PropertyKind::Vanishing) == SolveStatus::Sat);
  CHECK(status_of(catalog("k4minus"), PropertyKind::Vanishing) == SolveStatus::Unsat);
  CHECK(status_of(catalog("f7star_hat"), PropertyKind::SpadesStar) == SolveStatus::Sat);
  CHECK(status_of(catalog("wheel", 5), PropertyKind::Clubs) == SolveStatus::Sat);
}

TEST_CASE("every sat result verifies") {
  for (const char* name : {"single_edge", "k4minus", "f5star", "f6star",
                           "f7star", "f7star_hat"}) {
    auto g = catalog(name);
    for (auto kind : kAllKinds) {
      auto r = solve(g, kind);
      if (r.status == SolveStatus::Sat) {
        REQUIRE(r.certificate.has_value());
        auto v = verify(g, *r.certificate);
        CHECK_MESSAGE(v.accepted, name, " ", to_string(kind), ": ", v.reason);
      }
    }
  }
  for (int t = 3; t <= 8; ++t) {
    auto g = catalog("wheel", t);
    for (auto kind : kAllKinds) {
      auto r = solve(g, kind);
      if (r.status == SolveStatus::Sat)
        CHECK(verify(g, *r.certificate).accepted);
    }
  }
}

TEST_CASE("edgeless graphs") {
  for (int n : {0, 1, 4}) {
    auto g = catalog("edgeless", n);
    for (auto kind : kAllKinds) {
      auto r = solve(g, kind);
      if (kind == PropertyKind::SpadesStar) {
        CHECK(r.status == SolveStatus::Unsat);
      } else {
        REQUIRE(r.status == SolveStatus::Sat);
        CHECK(verify(g, *r.certificate).accepted);
      }
    }
  }
}

TEST_CASE("isolated vertices are appended to the ordering") {
  ThreeGraph g(6, {{0, 2, 4}});
  auto r = solve(g, PropertyKind::Vanishing);
  REQUIRE(r.status == SolveStatus::Sat);
  const auto& ord = r.certificate->ordering;
  REQUIRE(ord.size() == 6);
  CHECK(ord[3] == 1);
  CHECK(ord[4] == 3);
  CHECK(ord[5] == 5);
  CHECK(verify(g, *r.certificate).accepted);
}

TEST_CASE("vertex guard") {
  CHECK_THROWS_AS(solve(catalog("edgeless", 11), PropertyKind::Clubs),
                  GuardExceeded);
  SolveOptions opt;
  opt.max_vertices = 12;
  CHECK(solve(catalog("edgeless", 11), PropertyKind::Clubs, opt).status ==
        SolveStatus::Sat);
}

TEST_CASE("timeout is reported, never unsat") {
  SolveOptions opt;
  opt.max_vertices = 10;
  opt.timeout = std::chrono::milliseconds(0);  // expired before the search
  auto g = catalog("wheel", 8);
  auto r = solve(g, PropertyKind::FiveColor, opt);  // unsat needs a full scan
  CHECK(r.status == SolveStatus::Timeout);
  CHECK_FALSE(r.certificate.has_value());
}

TEST_CASE("spades tries istar = f first") {
  // Odd wheels are vanishing, which a spades certificate with istar = f
  // subsumes, so the solver must come back with istar = f.
  auto w5 = catalog("wheel", 5);
  auto r = solve(w5, PropertyKind::Spades);
  REQUIRE(r.status == SolveStatus::Sat);
  CHECK(r.certificate->istar == 5);
}

TEST_CASE("solver is deterministic and thread count does not change results") {
  for (const char* name : {"f7star_hat", "wheel:6", "f5star"}) {
    auto g = catalog_spec(name);
    for (auto kind : {PropertyKind::Spades, PropertyKind::Vanishing,
                      PropertyKind::Clubs}) {
      auto a = solve(g, kind);
      auto b = solve(g, kind);
      SolveOptions par;
      par.threads = 4;
      auto c = solve(g, kind, par);
      CHECK(a.status == b.status);
      CHECK(a.status == c.status);
      if (a.status == SolveStatus::Sat) {
        CHECK(certificate_to_json(*a.certificate) ==
              certificate_to_json(*b.certificate));
        CHECK(certificate_to_json(*a.certificate) ==
              certificate_to_json(*c.certificate));
      }
    }
  }
}

TEST_CASE("clubs certificates pin the first shadow pair to red") {
  for (const char* name : {"single_edge", "wheel:5", "wheel:7"}) {
    auto g = catalog_spec(name);
    auto r = solve(g, PropertyKind::Clubs);
    REQUIRE(r.status == SolveStatus::Sat);
    CHECK(r.certificate->coloring.front().second == Color::Red);
  }
}

TEST_CASE("clubs color swap closure") {
  for (const char* name : {"single_edge", "wheel:5", "wheel:7"}) {
    auto g = catalog_spec(name);
    auto r = solve(g, PropertyKind::Clubs);
    REQUIRE(r.status == SolveStatus::Sat);
    auto swapped = *r.certificate;
    for (auto& [pair, color] : swapped.coloring)
      color = color == Color::Red ? Color::Blue : Color::Red;
    CHECK(verify(g, swapped).accepted);
  }
}

TEST_CASE("vanishing implies spades on small graphs") {
  // All 16 edge subsets of the 4 triples on 4 vertices.
  std::vector<Triple> all{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (int mask = 0; mask < 16; ++mask) {
    std::vector<Triple> edges;
    for (int b = 0; b < 4; ++b)
      if (mask & (1 << b)) edges.push_back(all[b]);
    ThreeGraph g(4, edges);
    if (status_of(g, PropertyKind::Vanishing) == SolveStatus::Sat)
      CHECK(status_of(g, PropertyKind::Spades) == SolveStatus::Sat);
  }
}

TEST_CASE("relabeling invariance, spot check") {
  for (const char* name : {"k4minus", "f5star", "wheel:6"}) {
    auto g = catalog_spec(name);
    for (uint64_t seed : {41u, 42u}) {
      auto perm = random_permutation(g.vertex_count(), seed);
      auto h = relabel(g, perm);
      for (auto kind : kAllKinds)
        CHECK(status_of(g, kind) == status_of(h, kind));
    }
  }
}

TEST_CASE("blow-up certificate lifting, spot check") {
  auto base = catalog("single_edge");
  for (auto kind : {PropertyKind::Vanishing, PropertyKind::Clubs,
                    PropertyKind::Spades, PropertyKind::FiveColor}) {
    auto r = solve(base, kind);
    REQUIRE(r.status == SolveStatus::Sat);
    auto lifted = lift_certificate(base, *r.certificate, 2);
    CHECK(verify(base.blow_up(2), lifted).accepted);
  }
}
