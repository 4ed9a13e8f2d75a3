// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Exit code is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "support.hpp"
#include "turan/classify.hpp"
#include "turan/construction.hpp"
#include "turan/graph.hpp"
#include "turan/json_io.hpp"
#include "turan/palette.hpp"
#include "turan/reduced.hpp"

using namespace turan;
using namespace testsupport;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

double run_criterion(int number, const char* title,
                     const std::function<bool()>& body) {
  notes.clear();
  auto t0 = Clock::now();
  bool ok = false;
  std::string aborted;
  try {
    ok = body();
  } catch (const std::exception& e) {
    aborted = e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!ok) ++failures;
  std::printf("criterion %d: %s  (%.2fs)  %s\n", number, ok ? "PASS" : "FAIL",
              secs, title);
  if (!aborted.empty()) std::printf("    aborted: %s\n", aborted.c_str());
  for (const auto& s : notes) std::printf("    %s\n", s.c_str());
  std::fflush(stdout);
  return secs;
}

bool expect(bool cond, const std::string& what) {
  if (!cond) note("failed: " + what);
  return cond;
}

PaletteCertificate load_cert(const std::string& rel) {
  return certificate_from_json(parse_json(read_file(data_path(rel))));
}

std::vector<ThreeGraph> five_vertex_graphs() {
  std::vector<Triple> all;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int k = j + 1; k < 5; ++k) all.push_back({i, j, k});
  std::vector<ThreeGraph> out;
  out.reserve(1024);
  for (int mask = 0; mask < 1024; ++mask) {
    std::vector<Triple> edges;
    for (int b = 0; b < 10; ++b)
      if (mask & (1 << b)) edges.push_back(all[b]);
    out.emplace_back(5, edges);
  }
  return out;
}

bool criterion1() {
  bool ok = true;
  auto hat = catalog("f7star_hat");
  auto spades = load_cert("certs/f7star_hat_spades.json");
  auto star = load_cert("certs/f7star_hat_spades_star.json");

  ok &= expect(certificate_to_json(spades) ==
                   certificate_to_json(golden_f7star_hat(PropertyKind::Spades)),
               "shipped spades certificate matches the explicit table");
  ok &= expect(spades.istar == 6, "istar is 6");

  verify(hat, spades);  // warm up
  auto t0 = Clock::now();
  auto r1 = verify(hat, spades);
  auto r2 = verify(hat, star);
  double us =
      std::chrono::duration<double, std::micro>(Clock::now() - t0).count();
  ok &= expect(r1.accepted, "spades certificate accepted");
  ok &= expect(r2.accepted, "spades-star certificate accepted");
  ok &= expect(us < 1000.0, "runtime under 1 ms (" + std::to_string(us) + "us)");
  return ok;
}

bool criterion2() {
  bool ok = true;
  auto t0 = Clock::now();
  for (int t : {5, 7, 9}) {
    auto cert = load_cert("certs/wheel" + std::to_string(t) + "_vanishing.json");
    ok &= expect(certificate_to_json(cert) ==
                     certificate_to_json(golden_wheel_vanishing(t)),
                 "wheel " + std::to_string(t) + " file matches the formula");
    ok &= expect(verify(catalog("wheel", t), cert).accepted,
                 "vanishing certificate accepted for wheel " + std::to_string(t));
  }
  for (int t : {4, 6, 8}) {
    auto cert = load_cert("certs/wheel" + std::to_string(t) + "_spades.json");
    ok &= expect(certificate_to_json(cert) ==
                     certificate_to_json(golden_wheel_spades(t)),
                 "wheel " + std::to_string(t) + " file matches the formula");
    ok &= expect(cert.istar == t - 1, "istar is t-1");
    ok &= expect(verify(catalog("wheel", t), cert).accepted,
                 "spades certificate accepted for wheel " + std::to_string(t));
  }
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  ok &= expect(ms < 10.0, "runtime under 10 ms (" + std::to_string(ms) + "ms)");
  return ok;
}

bool criterion3() {
  bool ok = true;
  const std::pair<const char*, const char*> table[] = {
      {"k4minus", "1/4"}, {"f5star", "1/4"},  {"f6star", "1/4"},
      {"f7star", "1/4"},  {"f7star_hat", "1/4"}, {"wheel:4", "1/4"},
      {"wheel:6", "1/4"}, {"wheel:8", "1/4"}, {"wheel:3", "0"},
      {"wheel:5", "0"},   {"wheel:7", "0"},
  };
  for (const auto& [name, want] : table) {
    auto t0 = Clock::now();
    auto report = classify(catalog_spec(name));
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::string got = report.exact.value_or("none");
    ok &= expect(got == want, std::string(name) + ": exact " + got +
                                  ", wanted " + want);
    ok &= expect(secs < 60.0, std::string(name) + " within 60 s");
  }
  return ok;
}

bool criterion4() {
  bool ok = true;
  for (int t : {4, 6}) {
    auto t0 = Clock::now();
    auto r = solve(catalog("wheel", t), PropertyKind::Clubs);
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    ok &= expect(r.status == SolveStatus::Unsat,
                 "wheel " + std::to_string(t) + " clubs unsat by exhaustion");
    ok &= expect(secs < 60.0, "within 60 s");
  }
  return ok;
}

bool criterion5() {
  bool ok = true;
  const auto graphs = five_vertex_graphs();

  int checked = 0;
  for (const auto& g : graphs) {
    for (auto kind : {PropertyKind::Vanishing, PropertyKind::Clubs}) {
      auto r = solve(g, kind);
      if (r.status != oracle_solve(g, kind)) {
        ok = expect(false, "mismatch on a 5-vertex instance, kind " +
                               std::string(to_string(kind)));
        break;
      }
      if (r.status == SolveStatus::Sat &&
          !verify(g, *r.certificate).accepted) {
        ok = expect(false, "a sat certificate failed verification");
        break;
      }
      ++checked;
    }
  }
  note("vanishing+clubs: " + std::to_string(checked) +
       " statuses compared, sat certificates verified");

  int sat = 0;
  for (int t = 0; t < 200; ++t) {
    int mask = static_cast<int>(splitmix64_at(2024, t) % 1024);
    const auto& g = graphs[mask];
    auto fast = solve(g, PropertyKind::Spades);
    auto slow = oracle_solve(g, PropertyKind::Spades);
    if (fast.status != slow) {
      ok = expect(false, "spades mismatch on sampled mask " +
                             std::to_string(mask));
      break;
    }
    if (fast.status == SolveStatus::Sat) {
      ++sat;
      if (!verify(g, *fast.certificate).accepted) {
        ok = expect(false, "a sat spades certificate failed verification");
        break;
      }
    }
  }
  note("spades: 200 sampled instances compared, " + std::to_string(sat) +
       " sat, certificates verified");
  return ok;
}

bool criterion6() {
  bool ok = true;
  auto d = d_star();
  ok &= expect(d.value > 0.211 && d.value < 0.212, "value in (0.211, 0.212)");
  ok &= expect(d.residual < 1e-12, "cubic residual below 1e-12");
  double identity = std::abs(3.0 * std::cbrt(d.value) + d.value - 2.0);
  ok &= expect(identity < 1e-10, "3*cbrt(d*) + d* = 2 within 1e-10");
  return ok;
}

bool criterion7() {
  bool ok = true;
  const uint64_t seeds[] = {101, 202, 303, 404, 505};
  int certs_checked = 0, subs_checked = 0;
  for (uint64_t seed : seeds) {
    PairColoringSource source(200, seed);
    auto h = construction_from(source);

    DensityAuditOptions opt;
    opt.d = 0.25;
    opt.mu = 0.05;
    opt.sizes = {50, 100, 150};
    opt.samples = 200;
    opt.seed = seed + 7;
    auto audit = density_audit(h, opt);
    ok &= expect(audit.pass, "density audit passes for seed " +
                                 std::to_string(seed));

    // 20 inherited clubs certificates per seed, subset sizes 3..7
    for (int t = 0; t < 20; ++t) {
      int size = 3 + t % 5;
      std::set<int> subset;
      uint64_t sub_seed = splitmix64_at(seed, 1000 + t);
      int i = 0;
      while (static_cast<int>(subset.size()) < size)
        subset.insert(static_cast<int>(splitmix64_at(sub_seed, i++) % 200));
      std::vector<int> s(subset.begin(), subset.end());
      auto cert = inherited_certificate(source, s);
      if (!verify(h.induced(s), cert).accepted) {
        ok = expect(false, "inherited certificate rejected");
        break;
      }
      ++certs_checked;
    }

    // 10 ten-vertex induced subgraphs per seed: no k4minus inside
    auto k4m = catalog("k4minus");
    for (int t = 0; t < 10; ++t) {
      std::set<int> subset;
      uint64_t sub_seed = splitmix64_at(seed, 2000 + t);
      int i = 0;
      while (static_cast<int>(subset.size()) < 10)
        subset.insert(static_cast<int>(splitmix64_at(sub_seed, i++) % 200));
      std::vector<int> s(subset.begin(), subset.end());
      if (contains_sub(h.induced(s), k4m)) {
        ok = expect(false, "a quarter-density sample contains k4minus");
        break;
      }
      ++subs_checked;
    }
  }
  note(std::to_string(certs_checked) + " inherited certificates verified, " +
       std::to_string(subs_checked) + " induced samples k4minus-free");
  return ok;
}

bool criterion8() {
  bool ok = true;

  // relabeling invariance: 50 permutations spread over the catalog
  const char* names[] = {"single_edge", "k4minus", "f5star", "f6star",
                         "wheel:5",     "wheel:6", "f7star_hat"};
  int perms_done = 0;
  for (int t = 0; t < 50; ++t) {
    auto g = catalog_spec(names[t % 7]);
    auto perm = random_permutation(g.vertex_count(), 5000 + t);
    auto h = relabel(g, perm);
    for (auto kind : kAllKinds) {
      if (solve(g, kind).status != solve(h, kind).status) {
        ok = expect(false, std::string("relabeling changed the status of ") +
                               names[t % 7]);
        break;
      }
    }
    ++perms_done;
  }
  note(std::to_string(perms_done) + " relabelings checked over all kinds");

  // clubs color-swap closure
  for (const char* name : {"single_edge", "wheel:5", "wheel:7"}) {
    auto g = catalog_spec(name);
    auto r = solve(g, PropertyKind::Clubs);
    if (!expect(r.status == SolveStatus::Sat, "clubs sat expected")) {
      ok = false;
      continue;
    }
    auto swapped = *r.certificate;
    for (auto& [pair, color] : swapped.coloring)
      color = color == Color::Red ? Color::Blue : Color::Red;
    ok &= expect(verify(g, swapped).accepted, "swapped clubs certificate");
  }

  // heredity of accepted certificates under induced subgraphs; for spades
  // the subset keeps the vertex at position istar (dropping it can leave a
  // class-3 edge with no integral split, e.g. k4minus on {a,b,d}).
  int restrictions = 0;
  for (const char* name : {"single_edge", "wheel:5", "wheel:6", "f7star_hat"}) {
    auto g = catalog_spec(name);
    for (auto kind : {PropertyKind::Vanishing, PropertyKind::Clubs,
                      PropertyKind::FiveColor, PropertyKind::Spades}) {
      auto r = solve(g, kind);
      if (r.status != SolveStatus::Sat) continue;
      for (uint64_t s = 0; s < 6; ++s) {
        auto perm = random_permutation(g.vertex_count(), 7000 + s);
        size_t size = 1 + splitmix64_at(42, s) % g.vertex_count();
        std::vector<int> subset(perm.begin(), perm.begin() + size);
        if (kind == PropertyKind::Spades) {
          int at_istar = r.certificate->ordering[*r.certificate->istar - 1];
          if (std::find(subset.begin(), subset.end(), at_istar) ==
              subset.end())
            subset.push_back(at_istar);
        }
        auto sub = g.induced(subset);
        auto rc = restrict_certificate(g, *r.certificate, subset);
        if (!verify(sub, rc).accepted) {
          ok = expect(false, std::string("restriction rejected for ") + name +
                                 " kind " + to_string(kind));
          break;
        }
        ++restrictions;
      }
    }
  }
  note(std::to_string(restrictions) + " certificate restrictions verified");

  // vanishing implies spades on every vanishing-sat 5-vertex instance
  int implications = 0;
  for (const auto& g : five_vertex_graphs()) {
    if (solve(g, PropertyKind::Vanishing).status == SolveStatus::Sat) {
      if (solve(g, PropertyKind::Spades).status != SolveStatus::Sat) {
        ok = expect(false, "a vanishing-sat instance is spades-unsat");
        break;
      }
      ++implications;
    }
  }
  note(std::to_string(implications) + " vanishing=>spades implications hold");

  // blow-up certificate lifting at t = 2
  for (const char* name : {"single_edge", "wheel:5", "f5star"}) {
    auto base = catalog_spec(name);
    auto doubled = base.blow_up(2);
    for (auto kind : {PropertyKind::Vanishing, PropertyKind::Clubs,
                      PropertyKind::Spades, PropertyKind::FiveColor}) {
      auto r = solve(base, kind);
      if (r.status != SolveStatus::Sat) continue;
      auto lifted = lift_certificate(base, *r.certificate, 2);
      ok &= expect(verify(doubled, lifted).accepted,
                   std::string("lifted certificate verifies: ") + name + " " +
                       to_string(kind));
      ok &= expect(solve(doubled, kind).status == SolveStatus::Sat,
                   std::string("blow-up stays sat: ") + name + " " +
                       to_string(kind));
    }
  }
  return ok;
}

bool criterion9() {
  bool ok = true;

  // planted-embedding recovery on 50 seeded instances
  int recovered = 0;
  for (uint64_t seed = 1; seed <= 25 && ok; ++seed) {
    for (const char* name : {"single_edge", "k4minus"}) {
      auto f = catalog_spec(name);
      // plant: increasing phi out of the seed, arbitrary psi
      std::vector<int> indices{1, 2, 3, 4, 5, 6};
      std::vector<int> chosen;
      int need = f.vertex_count();
      for (int i = 0; i < 6 && need > 0; ++i)
        if (splitmix64_at(seed, i) % (6 - i) < static_cast<uint64_t>(need)) {
          chosen.push_back(i + 1);
          --need;
        }
      std::map<Pair, int> psi;
      uint64_t counter = 50;
      for (const auto& p : f.shadow())
        psi[p] = static_cast<int>(splitmix64_at(seed, counter++) % 4);
      std::map<Pair, int> sizes;
      for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) sizes[{i, j}] = 4;
      std::map<Triple, std::vector<std::array<int, 3>>> cons;
      for (const auto& e : f.edges())
        cons[{chosen[e[0]], chosen[e[1]], chosen[e[2]]}].push_back(
            {psi.at({e[0], e[1]}), psi.at({e[1], e[2]}), psi.at({e[0], e[2]})});
      ReducedThreeGraph a(indices, sizes, cons);

      auto witness = embeds(a, f);
      if (!witness || !check_embedding(a, f, *witness)) {
        ok = expect(false, std::string("planted instance not recovered: ") +
                               name + " seed " + std::to_string(seed));
        break;
      }
      ++recovered;
    }
  }
  note(std::to_string(recovered) + " planted embeddings recovered");

  // projection statistics against a brute recount on 50 instances
  int instances = 0;
  for (uint64_t seed = 1; seed <= 50 && ok; ++seed) {
    int class_size = 3 + static_cast<int>(seed % 4);  // 3..6
    auto a = random_reduced(4, class_size, 0.3, seed);
    const double eps = 0.4;
    for (int i = 1; i <= 4 && ok; ++i)
      for (int j = i + 1; j <= 4 && ok; ++j)
        for (int k = j + 1; k <= 4 && ok; ++k) {
          auto q = project_Q(a, i, j, k, eps);
          std::vector<int> degree(q.top_size, 0);
          for (int u = 0; u < q.left_size && ok; ++u)
            for (int v = 0; v < q.top_size && ok; ++v) {
              int witnesses = 0;
              for (const auto& e : a.constituent(i, j, k))
                if (e[0] == u && e[2] == v) ++witnesses;
              bool expect_edge =
                  witnesses >= eps * eps * a.class_size(j, k);
              if (static_cast<bool>(q.adj[u][v]) != expect_edge)
                ok = expect(false, "projection adjacency mismatch");
              degree[v] += expect_edge ? 1 : 0;
            }
          long long sum = 0;
          for (int v = 0; v < q.top_size; ++v)
            sum += 1LL * degree[v] * degree[v];
          auto stat = degree_square_stat(q, eps);
          if (stat.sum != sum) ok = expect(false, "degree square mismatch");
          for (int r = 1; r <= 3 && ok; ++r) {
            std::vector<int> expect_set;
            for (int v = 0; v < q.top_size; ++v)
              if (degree[v] >= (0.5 + r * eps * eps) * q.left_size)
                expect_set.push_back(v);
            if (s_set(a, i, j, k, eps, r) != expect_set)
              ok = expect(false, "s-set mismatch");
          }
        }
    ++instances;
  }
  note(std::to_string(instances) + " random instances recounted");
  return ok;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  double total = 0.0;
  total += run_criterion(1, "golden certificate for f7star_hat", criterion1);
  total += run_criterion(2, "golden certificates for wheels", criterion2);
  total += run_criterion(3, "classification table", criterion3);
  total += run_criterion(4, "clubs unsat for even wheels", criterion4);
  double c5 = run_criterion(5, "oracle equivalence", criterion5);
  total += c5;
  if (c5 >= 600.0) {
    ++failures;
    std::printf("criterion 5: FAIL  exceeded its 10 minute budget\n");
  }
  total += run_criterion(6, "d* root of (2-x)^3 = 27x", criterion6);
  double c7 = run_criterion(7, "construction audit", criterion7);
  total += c7;
  if (c7 >= 120.0) {
    ++failures;
    std::printf("criterion 7: FAIL  exceeded its 2 minute budget\n");
  }
  total += run_criterion(8, "invariant suite", criterion8);
  double c9 = run_criterion(9, "reduced model", criterion9);
  total += c9;
  if (c9 >= 60.0) {
    ++failures;
    std::printf("criterion 9: FAIL  exceeded its 1 minute budget\n");
  }
  std::printf("%d of 9 criteria failed, %.1fs total\n", failures, total);
  return failures;
}
