#pragma once

#include <cstdint>

#include "radial/point_set.hpp"

namespace radial {

enum class ColorMode { None, Balanced };

/// Random strong-general-position set with integer coordinates, point by
/// point with rejection. Deterministic given the seed.
/// Balanced coloring needs n divisible by 4 (equal colors, both even).
ColoredPointSet gen_random_sgp(int n, ColorMode colors, uint64_t seed, int grid = 0);

/// Points in convex position on a rational circle; cr(S) = C(n,4).
ColoredPointSet gen_convex(int n, ColorMode colors, uint64_t seed);

struct FourPatternParams {
  int m = 0;          // rays per wedge
  int r = 0;          // leftover points per color, n = 10m + r
  Rational epsilon;   // inner carrier circle radius
  Rational alpha_t;   // wedge half-width in tangent parameter
  Rational delta;     // pattern spacing in tangent parameter
  int retry_budget = 64;
};

struct FourPatternResult {
  ColoredPointSet set;                  // 2n points, n red and n blue
  std::vector<RationalPoint> q_points;  // one probe point per cell of the
                                        // carrier lines restricted to the
                                        // third disk
  FourPatternParams params;
  // Index bookkeeping for the verification steps.
  std::vector<std::vector<int>> pattern_groups;
  std::vector<int> cluster_one, cluster_two, leftover;
};

/// Two-cluster four-pattern construction: carrier circles around two disk
/// centers, patterns of sizes 2/4/6/8, and a far block of r red then r blue
/// points. All stated conditions are verified exactly on the emitted
/// coordinates; parameters are halved and the build retried on failure.
FourPatternResult gen_four_pattern(int n, uint64_t seed);

struct CirclePatternParams {
  int half_n = 0;
  Rational delta;         // final pattern spacing in tangent parameter
  Rational perturbation;  // jitter scale applied to base positions
};

struct CirclePatternResult {
  ColoredPointSet set;  // 2n points: n/2 patterns of R,B,B,R on their own
                        // origin-centered circles
  CirclePatternParams params;
};

/// Near-even circle construction with R,B,B,R patterns; delta is halved until
/// two successive censuses agree on the colored ordering count.
CirclePatternResult gen_circle_pattern(int n, uint64_t seed, long long face_budget = 2000000);

}  // namespace radial
