#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "turan/palette.hpp"

namespace turan {

enum class Membership { Sat, Unsat, Skipped };

struct KindReport {
  Membership membership = Membership::Skipped;
  std::optional<PaletteCertificate> certificate;
  std::string note;  // e.g. why a kind was skipped
};

// Memberships in every certificate family plus the bounds they imply on the
// uniform Turan density:
//   vanishing sat            -> density exactly 0
//   clubs unsat              -> lower bound 1/4
//   spades sat               -> upper bound 1/4
//   five-color sat           -> upper bound d*
// A solver timeout downgrades the kind to Skipped and contributes nothing.
struct ClassificationReport {
  std::map<PropertyKind, KindReport> memberships;
  double lower_bound = 0.0;
  double upper_bound = 1.0;
  std::string lower_bound_expr = "0";
  std::string upper_bound_expr = "1";
  std::optional<std::string> exact;  // "0" or "1/4" when pinned down
  std::vector<std::string> rationale;
};

ClassificationReport classify(const ThreeGraph& g,
                              const SolveOptions& options = {});

}  // namespace turan
