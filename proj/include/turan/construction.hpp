#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "turan/palette.hpp"

namespace turan {

// Element `index` of the splitmix64 stream seeded with `seed`:
// mix(seed + (index+1) * 0x9e3779b97f4a7c15). Fully pinned so constructions
// are bit-identical across platforms.
uint64_t splitmix64_at(uint64_t seed, uint64_t index);

// Red/blue coloring of the pairs of {0..n-1}. The seeded form colors pair
// {i,j} (i<j) red iff the lowest bit of stream element rank(i,j) = C(j,2)+i
// is zero; the fixed form wraps an arbitrary function (test hook).
class PairColoringSource {
public:
  PairColoringSource(int n, uint64_t seed);
  static PairColoringSource fixed(int n, std::function<Color(int, int)> fn);

  Color color(int i, int j) const;  // order-insensitive, i != j
  int size() const { return n_; }
  bool seeded() const { return seeded_; }
  uint64_t seed() const { return seed_; }

private:
  PairColoringSource() = default;
  int n_ = 0;
  bool seeded_ = false;
  uint64_t seed_ = 0;
  std::function<Color(int, int)> fn_;
};

// Quarter-density construction: edge ijk (i<j<k) present iff the pair colors
// (chi(i,j), chi(j,k), chi(i,k)) form (red,red,blue) or (blue,blue,red) --
// the clubs patterns, so every subhypergraph inherits a clubs certificate.
ThreeGraph construction_from(const PairColoringSource& source);
ThreeGraph random_construction(int n, uint64_t seed);

// Clubs certificate for construction_from(source).induced(subset): natural
// order of the subset, pair colors restricted from the source.
PaletteCertificate inherited_certificate(const PairColoringSource& source,
                                         const std::vector<int>& subset);

struct DensityAuditOptions {
  double d = 0.25;
  double mu = 0.05;
  std::vector<int> sizes;
  int samples = 100;
  uint64_t seed = 0;
  // Below this many subsets of a given size the audit enumerates all of them
  // instead of sampling.
  long long exact_threshold = 100000;
};

struct SizeAudit {
  int size = 0;
  bool exact = false;
  long long tested = 0;
  double worst_deficit = 0.0;
};

// Worst deficit d*C(|U|,3) - e(U) - mu*n^3 over the tested subsets U; the
// graph passes when no tested subset falls short of the density bound.
struct DensityAudit {
  double d = 0.0;
  double mu = 0.0;
  int samples = 0;
  double worst_deficit = 0.0;
  bool pass = false;
  std::vector<SizeAudit> per_size;
};

DensityAudit density_audit(const ThreeGraph& g, const DensityAuditOptions& opt);

}  // namespace turan
