#include "radial/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "radial/circular.hpp"
#include "radial/enumeration.hpp"
#include "radial/error.hpp"
#include "radial/rng.hpp"

namespace radial {

namespace {

void assign_balanced_colors(ColoredPointSet& s, SeededRng& rng) {
  const int n = s.size();
  if (n % 4 != 0)
    throw Error(ErrorCode::InvalidArgument, "balanced coloring needs a point count divisible by 4");
  std::vector<PointColor> colors(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) colors[static_cast<size_t>(i)] = i < n / 2 ? PointColor::Red : PointColor::Blue;
  for (int i = n - 1; i > 0; --i)
    std::swap(colors[static_cast<size_t>(i)], colors[static_cast<size_t>(rng.in_range(0, i))]);
  s.colors = std::move(colors);
}

// Snap a double to a rational with the given power-of-two denominator.
Rational snap(double value, int denom_pow) {
  double scaled = std::ldexp(value, denom_pow);
  mpz_class num(static_cast<long>(std::llround(scaled)));
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), denom_pow);
  return Rational(num, den);
}

}  // namespace

ColoredPointSet gen_random_sgp(int n, ColorMode colors, uint64_t seed, int grid) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 points");
  if (grid <= 0) grid = std::max(64, 4 * n * n);
  SeededRng rng(subseed(seed, "random-sgp"));

  ColoredPointSet s;
  int rejections = 0;
  const int budget = 2000 + 500 * n;
  while (s.size() < n) {
    RationalPoint cand{Rational(rng.in_range(-grid, grid)), Rational(rng.in_range(-grid, grid))};
    ColoredPointSet trial = s;
    trial.points.push_back(cand);
    bool ok = true;
    for (const RationalPoint& p : s.points)
      if (p == cand) ok = false;
    if (ok && trial.size() >= 3) ok = validate_strong_general_position(trial).valid();
    if (!ok) {
      if (++rejections > budget) throw Error(ErrorCode::RetryExhausted, "random set generation stalled");
      continue;
    }
    s = std::move(trial);
  }
  if (colors == ColorMode::Balanced) assign_balanced_colors(s, rng);
  return s;
}

ColoredPointSet gen_convex(int n, ColorMode colors, uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "need at least 3 points");
  SeededRng rng(subseed(seed, "convex"));
  const double pi = 3.14159265358979323846;
  for (int attempt = 0; attempt < 64; ++attempt) {
    ColoredPointSet s;
    std::vector<Rational> params;
    for (int i = 0; i < n; ++i) {
      double theta = -pi + 2 * pi * (i + 0.5) / n;
      Rational t = snap(std::tan(theta / 2), 10) + rng.jitter(18, 63);
      params.push_back(t);
    }
    std::vector<Rational> sorted = params;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    for (const Rational& t : params) s.points.push_back(circle_point(t, Rational(1)));
    if (!validate_strong_general_position(s).valid()) continue;
    if (colors == ColorMode::Balanced) assign_balanced_colors(s, rng);
    return s;
  }
  throw Error(ErrorCode::RetryExhausted, "convex set generation stalled");
}

// ---- Four-pattern construction ---------------------------------------------

namespace {

struct FourPatternFrame {
  // Cluster centers at rational mutual distances close to 1, asymmetric on
  // purpose; the third disk center sits at rational unit-vector directions
  // from the first cluster.
  RationalPoint p1{Rational(0), Rational(0)};
  RationalPoint p2{Rational(1), Rational(0)};
  RationalPoint p3{Rational(33, 64), Rational(7, 8)};
  Rational disk_radius{1, 4};
  Rational t1_center{4, 7};     // exact: dir(4/7) = (33/65, 56/65) points at p3
  Rational t2_center{17, 10};   // snapped direction from p2 toward p3
  Rational far_radius{4096};
  Rational far_t0{-1, 3};
  Rational far_step{1, 8192};
};

Rational disk_radius_sq(const FourPatternFrame& fr) { return fr.disk_radius * fr.disk_radius; }

bool line_hits_disk_interior(const Line& l, const FourPatternFrame& fr) {
  return distance_squared(l, fr.p3) < disk_radius_sq(fr);
}

bool point_in_disk_interior(const RationalPoint& p, const FourPatternFrame& fr) {
  return distance_squared(p, fr.p3) < disk_radius_sq(fr);
}

struct AnchorSet {
  std::vector<RationalPoint> blue, red, yellow, green;  // m points each
  std::vector<Line> carrier;                            // L then L', 2m^2 lines
  int m = 0;
};

// Exact checks of the three carrier-line conditions against the third disk.
bool carrier_conditions_hold(const AnchorSet& a, const ColoredPointSet& anchors, const FourPatternFrame& fr) {
  const int m2 = a.m * a.m;
  // (1) carrier lines all meet the disk interior and are the only spanned
  // lines of the anchor set that do.
  for (const Line& l : a.carrier)
    if (!line_hits_disk_interior(l, fr)) return false;
  std::set<std::pair<int, int>> carrier_pairs;
  // anchors are ordered blue(0..m-1), red(m..2m-1), yellow(2m..3m-1), green(3m..4m-1)
  for (int i = 0; i < a.m; ++i)
    for (int j = 0; j < a.m; ++j) {
      carrier_pairs.insert({std::min(a.m + i, j), std::max(a.m + i, j)});          // red x blue
      carrier_pairs.insert({std::min(2 * a.m + i, 3 * a.m + j), std::max(2 * a.m + i, 3 * a.m + j)});  // yellow x green
    }
  for (int i = 0; i < anchors.size(); ++i)
    for (int j = i + 1; j < anchors.size(); ++j) {
      if (carrier_pairs.count({i, j})) continue;
      if (line_hits_disk_interior(line_through(anchors.points[i], anchors.points[j]), fr)) return false;
    }
  // (2) no two same-family carrier lines meet inside the disk.
  auto family_clear = [&](int begin, int end) {
    for (int i = begin; i < end; ++i)
      for (int j = i + 1; j < end; ++j) {
        LineIntersection res = line_intersection(a.carrier[i], a.carrier[j]);
        if (const RationalPoint* z = std::get_if<RationalPoint>(&res))
          if (point_in_disk_interior(*z, fr)) return false;
      }
    return true;
  };
  if (!family_clear(0, m2) || !family_clear(m2, 2 * m2)) return false;
  // (3) every cross-family pair meets strictly inside the disk.
  for (int i = 0; i < m2; ++i)
    for (int j = m2; j < 2 * m2; ++j) {
      LineIntersection res = line_intersection(a.carrier[i], a.carrier[j]);
      const RationalPoint* z = std::get_if<RationalPoint>(&res);
      if (!z || !point_in_disk_interior(*z, fr)) return false;
    }
  return true;
}

// One sampled interior point per cell of the carrier lines restricted to the
// disk. Cells of a line arrangement inside a convex region are convex, so
// sign vectors identify them; the expected count is
// (lines+1 per family) x (lines+1 per family) = (m^2+1)^2.
std::vector<RationalPoint> sample_cell_points(const AnchorSet& a, const FourPatternFrame& fr) {
  const long long expected = (static_cast<long long>(a.m) * a.m + 1) * (static_cast<long long>(a.m) * a.m + 1);
  for (int resolution = 256; resolution <= 2048; resolution *= 2) {
    std::map<std::vector<int>, RationalPoint> cells;
    Rational step = fr.disk_radius / resolution;
    for (int gx = -resolution; gx <= resolution; ++gx) {
      for (int gy = -resolution; gy <= resolution; ++gy) {
        RationalPoint p{fr.p3.x + step * gx, fr.p3.y + step * gy};
        if (!point_in_disk_interior(p, fr)) continue;
        std::vector<int> sig;
        sig.reserve(a.carrier.size());
        bool on_line = false;
        for (const Line& l : a.carrier) {
          int sgn_side = l.side(p);
          if (sgn_side == 0) {
            on_line = true;
            break;
          }
          sig.push_back(sgn_side);
        }
        if (on_line) continue;
        cells.emplace(std::move(sig), p);
      }
    }
    if (static_cast<long long>(cells.size()) == expected) {
      std::vector<RationalPoint> out;
      out.reserve(cells.size());
      for (auto& [sig, p] : cells) out.push_back(p);
      return out;
    }
  }
  return {};
}

// Whether the given index group appears circularly consecutive in seq.
bool group_consecutive(const std::vector<int>& seq, const std::vector<char>& in_group, int group_size) {
  const int k = static_cast<int>(seq.size());
  if (group_size == 0) return true;
  int start = -1;
  for (int i = 0; i < k; ++i)
    if (in_group[static_cast<size_t>(seq[i])] && !in_group[static_cast<size_t>(seq[(i + k - 1) % k])]) {
      start = i;
      break;
    }
  if (start < 0) return group_size == k;  // the whole sequence
  for (int j = 0; j < group_size; ++j)
    if (!in_group[static_cast<size_t>(seq[(start + j) % k])]) return false;
  return true;
}

std::vector<char> membership(int n, const std::vector<int>& indices) {
  std::vector<char> mask(static_cast<size_t>(n), 0);
  for (int i : indices) mask[static_cast<size_t>(i)] = 1;
  return mask;
}

}  // namespace

FourPatternResult gen_four_pattern(int n, uint64_t seed) {
  if (n % 2 != 0 || n < 20) throw Error(ErrorCode::InvalidArgument, "n must be even and at least 20");
  const int m = (n - 10) / 10;
  const int r = n - 10 * m;
  if (m > 3) throw Error(ErrorCode::BudgetExceeded, "m > 3 is beyond desk scale");

  FourPatternFrame fr;
  FourPatternParams params;
  params.m = m;
  params.r = r;
  params.alpha_t = Rational(1, 32);
  params.epsilon = Rational(1, 4096);
  params.delta = Rational(1, 1 << 16);

  for (int attempt = 0; attempt < params.retry_budget; ++attempt, params.alpha_t = params.alpha_t / 2,
           params.epsilon = params.epsilon / 2, params.delta = params.delta / 2) {
    SeededRng rng(subseed(seed, "four-pattern", static_cast<uint64_t>(attempt)));

    // Ray parameters, jittered off exact symmetry.
    std::vector<Rational> t1(static_cast<size_t>(m)), t2(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      Rational spread = params.alpha_t * Rational(2 * i - (m - 1)) / Rational(m + 1);
      t1[static_cast<size_t>(i)] = fr.t1_center + spread + params.alpha_t * rng.jitter(20, 255);
      t2[static_cast<size_t>(i)] = fr.t2_center + spread + params.alpha_t * rng.jitter(20, 255);
    }

    AnchorSet anchors;
    anchors.m = m;
    ColoredPointSet anchor_set;  // colors unused; ordering blue, red, yellow, green
    for (int i = 0; i < m; ++i) {
      RationalPoint d1 = circle_point(t1[static_cast<size_t>(i)], Rational(1));
      anchors.blue.push_back({fr.p1.x + fr.disk_radius * d1.x, fr.p1.y + fr.disk_radius * d1.y});
      anchors.red.push_back({fr.p1.x + params.epsilon * d1.x, fr.p1.y + params.epsilon * d1.y});
      RationalPoint d2 = circle_point(t2[static_cast<size_t>(i)], Rational(1));
      anchors.yellow.push_back({fr.p2.x + fr.disk_radius * d2.x, fr.p2.y + fr.disk_radius * d2.y});
      anchors.green.push_back({fr.p2.x + params.epsilon * d2.x, fr.p2.y + params.epsilon * d2.y});
    }
    for (const auto& v : {anchors.blue, anchors.red, anchors.yellow, anchors.green})
      for (const RationalPoint& p : v) anchor_set.points.push_back(p);

    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        anchors.carrier.push_back(line_through(anchors.red[static_cast<size_t>(i)], anchors.blue[static_cast<size_t>(j)]));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        anchors.carrier.push_back(line_through(anchors.yellow[static_cast<size_t>(i)], anchors.green[static_cast<size_t>(j)]));

    if (!carrier_conditions_hold(anchors, anchor_set, fr)) continue;
    std::vector<RationalPoint> q_points = sample_cell_points(anchors, fr);
    if (q_points.empty()) continue;

    // Patterns replacing each anchor: sizes 2/4/6/8, half red then half blue
    // clockwise (decreasing tangent parameter) along the carrier circle.
    FourPatternResult result;
    result.params = params;
    ColoredPointSet& s = result.set;
    std::vector<PointColor> colors;
    auto emit_pattern = [&](const RationalPoint& center, const Rational& radius, const Rational& t0, int half) {
      std::vector<int> group;
      for (int k = 0; k < 2 * half; ++k) {
        Rational shift = params.delta * Rational(k) + params.delta * rng.jitter(24, 255);
        RationalPoint d = circle_point(t0 - shift, Rational(1));
        group.push_back(s.size());
        s.points.push_back({center.x + radius * d.x, center.y + radius * d.y});
        colors.push_back(k < half ? PointColor::Red : PointColor::Blue);
      }
      result.pattern_groups.push_back(group);
      return group;
    };
    for (int i = 0; i < m; ++i) {
      auto g1 = emit_pattern(fr.p1, fr.disk_radius, t1[static_cast<size_t>(i)], 1);   // blue anchor -> 1R+1B
      auto g2 = emit_pattern(fr.p1, params.epsilon, t1[static_cast<size_t>(i)], 2);   // red anchor  -> 2R+2B
      result.cluster_one.insert(result.cluster_one.end(), g1.begin(), g1.end());
      result.cluster_one.insert(result.cluster_one.end(), g2.begin(), g2.end());
      auto g3 = emit_pattern(fr.p2, fr.disk_radius, t2[static_cast<size_t>(i)], 3);   // yellow -> 3R+3B
      auto g4 = emit_pattern(fr.p2, params.epsilon, t2[static_cast<size_t>(i)], 4);   // green  -> 4R+4B
      result.cluster_two.insert(result.cluster_two.end(), g3.begin(), g3.end());
      result.cluster_two.insert(result.cluster_two.end(), g4.begin(), g4.end());
    }
    // Far block: r red then r blue on an arc concentric with the probe disk,
    // spaced so the block order is the same from every probe point.
    for (int j = 0; j < 2 * r; ++j) {
      Rational tau = fr.far_t0 + fr.far_step * Rational(j) + fr.far_step * rng.jitter(16, 200) / 1000;
      RationalPoint d = circle_point(tau, fr.far_radius);
      result.leftover.push_back(s.size());
      s.points.push_back({fr.p3.x + d.x, fr.p3.y + d.y});
      colors.push_back(j < r ? PointColor::Red : PointColor::Blue);
    }
    s.colors = std::move(colors);

    if (s.size() != 2 * n) throw Error(ErrorCode::InvalidArgument, "internal: wrong construction size");
    if (!validate_strong_general_position(s).valid()) continue;

    // Probe points must be observation points of the full set.
    bool probes_ok = true;
    std::vector<Line> spanned;
    for (int i = 0; i < s.size() && probes_ok; ++i)
      for (int j = i + 1; j < s.size(); ++j) spanned.push_back(line_through(s.points[i], s.points[j]));
    for (const RationalPoint& q : q_points) {
      for (const Line& l : spanned)
        if (l.side(q) == 0) {
          probes_ok = false;
          break;
        }
      if (!probes_ok) break;
    }
    if (!probes_ok) continue;

    // Exact structural checks at every probe point.
    std::vector<std::vector<char>> group_masks;
    for (const auto& g : result.pattern_groups) group_masks.push_back(membership(s.size(), g));
    std::vector<char> mask_one = membership(s.size(), result.cluster_one);
    std::vector<char> mask_two = membership(s.size(), result.cluster_two);
    std::vector<char> mask_left = membership(s.size(), result.leftover);
    std::vector<int> left_red(result.leftover.begin(), result.leftover.begin() + r);
    std::vector<char> mask_left_red = membership(s.size(), left_red);

    bool checks_ok = true;
    std::set<ColorWord> words;
    for (const RationalPoint& q : q_points) {
      std::vector<int> seq = radial_sequence(s, q);
      for (size_t g = 0; g < group_masks.size() && checks_ok; ++g)
        checks_ok = group_consecutive(seq, group_masks[g], static_cast<int>(result.pattern_groups[g].size()));
      if (!checks_ok) break;
      if (!group_consecutive(seq, mask_one, static_cast<int>(result.cluster_one.size())) ||
          !group_consecutive(seq, mask_two, static_cast<int>(result.cluster_two.size())) ||
          !group_consecutive(seq, mask_left, static_cast<int>(result.leftover.size())) ||
          !group_consecutive(seq, mask_left_red, r)) {
        checks_ok = false;
        break;
      }
      words.insert(color_word_of_sequence(seq, s));
    }
    if (!checks_ok) continue;
    if (words.size() != q_points.size()) continue;  // colored orderings must be pairwise distinct

    result.q_points = std::move(q_points);
    return result;
  }
  throw Error(ErrorCode::RetryExhausted, "four-pattern construction did not converge");
}

// ---- Circle-pattern construction -------------------------------------------

CirclePatternResult gen_circle_pattern(int n, uint64_t seed, long long face_budget) {
  if (n % 2 != 0 || n < 8) throw Error(ErrorCode::InvalidArgument, "n must be even and at least 8");
  const int half = n / 2;
  if (projected_faces(2 * n) > face_budget)
    throw Error(ErrorCode::BudgetExceeded, "projected face count exceeds budget");

  const double pi = 3.14159265358979323846;
  std::vector<Rational> base(static_cast<size_t>(half));
  {
    SeededRng rng(subseed(seed, "circle-pattern-base"));
    for (int i = 0; i < half; ++i) {
      double theta = -pi + 2 * pi * (i + 0.5) / half;
      base[static_cast<size_t>(i)] = snap(std::tan(theta / 2), 10) + rng.jitter(18, 63);
    }
  }
  Rational min_gap;
  {
    std::vector<Rational> sorted = base;
    std::sort(sorted.begin(), sorted.end());
    min_gap = sorted[1] - sorted[0];
    for (size_t i = 2; i < sorted.size(); ++i) min_gap = std::min(min_gap, sorted[i] - sorted[i - 1]);
    if (min_gap.sign() <= 0) throw Error(ErrorCode::RetryExhausted, "coincident base positions");
  }

  auto build = [&](const Rational& delta, uint64_t jitter_seed) {
    SeededRng rng(subseed(seed, "circle-pattern-jitter", jitter_seed));
    CirclePatternResult out;
    out.params.half_n = half;
    out.params.delta = delta;
    out.params.perturbation = Rational(1, 1 << 18);
    ColoredPointSet& s = out.set;
    std::vector<PointColor> colors;
    static const PointColor kPattern[4] = {PointColor::Red, PointColor::Blue, PointColor::Blue, PointColor::Red};
    for (int i = 0; i < half; ++i) {
      Rational radius = Rational(1) + Rational(i + 1, 1 << 12) + rng.jitter(20, 63);
      for (int k = 0; k < 4; ++k) {
        Rational shift = delta * Rational(k) + delta * rng.jitter(16, 100) / 1000;
        s.points.push_back(circle_point(base[static_cast<size_t>(i)] - shift, radius));
        colors.push_back(kPattern[k]);
      }
    }
    s.colors = std::move(colors);
    return out;
  };

  auto valid_build = [&](const Rational& delta) {
    for (uint64_t tries = 0; tries < 16; ++tries) {
      CirclePatternResult out = build(delta, tries);
      if (validate_strong_general_position(out.set).valid()) return out;
    }
    throw Error(ErrorCode::RetryExhausted, "circle pattern could not reach strong general position");
  };

  // Shrink delta until the colored census stabilizes across one halving.
  Rational delta = min_gap / 64;
  CirclePatternResult current = valid_build(delta);
  CensusOptions opts;
  opts.assume_validated = true;
  opts.threads = 2;
  long long rho_col = census(current.set, opts).rho_colored;
  for (int step = 0; step < 12; ++step) {
    Rational next_delta = delta / 2;
    CirclePatternResult next = valid_build(next_delta);
    long long next_rho = census(next.set, opts).rho_colored;
    if (next_rho == rho_col) return next;
    delta = next_delta;
    current = std::move(next);
    rho_col = next_rho;
  }
  throw Error(ErrorCode::RetryExhausted, "colored census did not stabilize under delta halving");
}

}  // namespace radial
