#include "turan/classify.hpp"

#include <stdexcept>

namespace turan {

namespace {

const char* kQuarter = "1/4";

}  // namespace

ClassificationReport classify(const ThreeGraph& g, const SolveOptions& options) {
  ClassificationReport report;

  auto run = [&](PropertyKind kind) -> const KindReport& {
    KindReport kr;
    SolveResult r = solve(g, kind, options);
    switch (r.status) {
      case SolveStatus::Sat:
        kr.membership = Membership::Sat;
        kr.certificate = std::move(r.certificate);
        break;
      case SolveStatus::Unsat:
        kr.membership = Membership::Unsat;
        break;
      case SolveStatus::Timeout:
        kr.membership = Membership::Skipped;
        kr.note = "solver timeout; no bound drawn from this family";
        break;
    }
    report.memberships[kind] = std::move(kr);
    return report.memberships[kind];
  };

  const auto& vanishing = run(PropertyKind::Vanishing);
  const auto& clubs = run(PropertyKind::Clubs);
  const auto& spades = run(PropertyKind::Spades);
  const auto& star = run(PropertyKind::SpadesStar);
  const auto& five = run(PropertyKind::FiveColor);

  const double dstar = d_star().value;

  // Lower bound.
  if (clubs.membership == Membership::Unsat) {
    report.lower_bound = 0.25;
    report.lower_bound_expr = kQuarter;
    report.rationale.push_back(
        "clubs unsat: the quarter-density pair-coloring construction avoids "
        "the graph, so the uniform Turan density is at least 1/4");
  } else {
    report.lower_bound = 0.0;
    report.lower_bound_expr = "0";
    if (clubs.membership == Membership::Sat)
      report.rationale.push_back(
          "clubs sat: no lower bound from the pair-coloring construction");
  }

  // Upper bound: the tightest implied by a satisfied family.
  bool spades_sat = spades.membership == Membership::Sat;
  if (!spades_sat && star.membership == Membership::Sat) {
    spades_sat = true;  // a spades-star certificate is a spades certificate
    report.rationale.push_back(
        "spades-star sat implies spades sat (same certificate)");
  }
  if (vanishing.membership == Membership::Sat) {
    report.upper_bound = 0.0;
    report.upper_bound_expr = "0";
    report.exact = "0";
    report.rationale.push_back(
        "vanishing sat: the uniform Turan density is exactly 0");
  } else if (five.membership == Membership::Sat) {
    report.upper_bound = dstar;
    report.upper_bound_expr = "d*";
    report.rationale.push_back(
        "five-color sat: upper bound d*, the root of (2-x)^3 = 27x");
  } else if (spades_sat) {
    report.upper_bound = 0.25;
    report.upper_bound_expr = kQuarter;
    report.rationale.push_back("spades sat: upper bound 1/4");
  } else {
    report.upper_bound = 1.0;
    report.upper_bound_expr = "1";
    report.rationale.push_back(
        "no satisfied family gives an upper bound below 1");
  }

  if (report.lower_bound_expr == kQuarter && report.upper_bound_expr == kQuarter) {
    report.exact = kQuarter;
    report.rationale.push_back(
        "clubs unsat and spades sat: the uniform Turan density is exactly 1/4");
  }

  if (report.lower_bound > report.upper_bound + 1e-12)
    throw std::logic_error(
        "classification produced contradictory bounds; solver defect");

  return report;
}

}  // namespace turan
