#include "radial/enumeration.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

#include "radial/constructions.hpp"
#include "radial/error.hpp"
#include "radial/rng.hpp"

namespace radial {

CensusComputation run_census(const ColoredPointSet& s, const CensusOptions& opts) {
  CensusComputation out;
  out.arr = build_arrangement(s, opts.assume_validated);
  out.partition = build_order_partition(out.arr);

  const Arrangement& arr = out.arr;
  const int F = static_cast<int>(arr.faces.size());
  out.face_orders.assign(F, CircularOrder{});

  int threads = std::max(1, opts.threads);
  auto worker = [&](int begin, int end) {
    for (int f = begin; f < end; ++f) {
      if (arr.faces[f].outer) continue;
      out.face_orders[f] = radial_order(s, arr.faces[f].rep);
    }
  };
  if (threads == 1 || F < 64) {
    worker(0, F);
  } else {
    std::vector<std::thread> pool;
    int chunk = (F + threads - 1) / threads;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(worker, t * chunk, std::min(F, (t + 1) * chunk));
    for (auto& th : pool) th.join();
  }

  OrderingCensus& c = out.census;
  c.faces = F;
  c.order_cells = out.partition.cell_count;
  const bool colored = s.is_colored();
  c.rho_colored = colored ? 0 : -1;
  for (int f = 0; f < F; ++f) {
    if (arr.faces[f].outer) continue;
    const CircularOrder& o = out.face_orders[f];
    int cell = out.partition.face_to_cell[f];
    auto [it, inserted] = c.per_cell.emplace(cell, o);
    // Faces merged into one cell must agree: crossing a segment interior
    // keeps the radial order.
    if (!inserted && !(it->second == o))
      throw Error(ErrorCode::NotValidated, "order-partition soundness violated");
    c.orders.insert(o);
    if (colored) c.words.insert(color_word(o, s));
  }
  for (const auto& [cell, o] : c.per_cell) ++c.class_sizes[o.str()];
  c.rho = static_cast<long long>(c.orders.size());
  if (colored) c.rho_colored = static_cast<long long>(c.words.size());
  return out;
}

OrderingCensus census(const ColoredPointSet& s, const CensusOptions& opts) {
  return run_census(s, opts).census;
}

DistinctnessReport interior_distinctness_check(const ColoredPointSet& s) {
  ValidationResult vr = validate_strong_general_position(s);
  if (!vr.valid())
    return {DistinctnessReport::Status::ValidationRequired, -1, -1, vr.violation->describe()};

  Arrangement arr = build_arrangement(s, true);
  OrderPartition op = build_order_partition(arr);
  auto reps = interior_face_representatives(s, arr);

  std::unordered_map<int, CircularOrder> cell_order;   // cell -> order at an interior point
  std::unordered_map<std::string, int> order_to_cell;  // canonical order -> cell
  for (const auto& [face, rep] : reps) {
    int cell = op.face_to_cell[face];
    CircularOrder o = radial_order(s, rep);
    auto [it, inserted] = cell_order.emplace(cell, o);
    if (!inserted) {
      if (!(it->second == o))
        return {DistinctnessReport::Status::Counterexample, cell, cell,
                "one cell produced two different orders"};
      continue;
    }
    auto [jt, fresh] = order_to_cell.emplace(o.str(), cell);
    if (!fresh)
      return {DistinctnessReport::Status::Counterexample, jt->second, cell,
              "cells " + std::to_string(jt->second) + " and " + std::to_string(cell) +
                  " share the interior order " + o.str()};
  }
  return {DistinctnessReport::Status::Pass, -1, -1, ""};
}

namespace {

// Face of the line arrangement containing an observation point, identified by
// its sign vector over all spanned lines (faces of a line arrangement are
// exactly the sign-vector classes).
int locate_face(const Arrangement& arr, const RationalPoint& p) {
  const int L = static_cast<int>(arr.lines.size());
  std::vector<int> sig(L);
  for (int l = 0; l < L; ++l) {
    sig[l] = arr.lines[l].line.side(p);
    if (sig[l] == 0)
      throw Error(ErrorCode::NotObservationPoint, "point lies on a spanned line");
  }
  for (size_t f = 0; f < arr.faces.size(); ++f) {
    if (arr.faces[f].outer) continue;
    bool match = true;
    for (int l = 0; l < L && match; ++l)
      match = arr.lines[l].line.side(arr.faces[f].rep) == sig[l];
    if (match) return static_cast<int>(f);
  }
  throw Error(ErrorCode::InvalidArgument, "no face matches the point's sign vector");
}

}  // namespace

PartitionLemmaResult partition_lemma_check(const ColoredPointSet& s, const std::vector<int>& part_r,
                                           const RationalPoint& p, const RationalPoint& q) {
  Arrangement arr = build_arrangement(s);
  OrderPartition op = build_order_partition(arr);
  int fp = locate_face(arr, p);
  int fq = locate_face(arr, q);
  if (op.face_to_cell[fp] == op.face_to_cell[fq]) return {false, false};

  std::vector<char> in_r(s.size(), 0);
  for (int i : part_r) in_r[static_cast<size_t>(i)] = 1;

  // Hypothesis: no half-line spanned by a point of R and a point of B meets
  // segment pq.
  for (const ArrLine& al : arr.lines) {
    if (in_r[al.def_a] == in_r[al.def_b]) continue;  // monochromatic line
    const Line& l = al.line;
    int sp = l.side(p), sq = l.side(q);
    if (sp == 0 || sq == 0) throw Error(ErrorCode::NotObservationPoint, "endpoint on a spanned line");
    if (sp == sq) continue;
    Rational vp = Rational(l.a) * p.x + Rational(l.b) * p.y - Rational(l.c);
    Rational vq = Rational(l.a) * q.x + Rational(l.b) * q.y - Rational(l.c);
    Rational t = vp / (vp - vq);
    RationalPoint z{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
    Rational tz = l.param(z);
    if (!(al.seg_lo < tz && tz < al.seg_hi)) return {false, false};  // crossing on a half-line
  }

  bool distinct = !(radial_order(s, p) == radial_order(s, q));
  return {true, distinct};
}

long long WalkTrace::distinct_words() const {
  std::set<ColorWord> ws(words_seen.begin(), words_seen.end());
  return static_cast<long long>(ws.size());
}

namespace {

struct FanDir {
  Rational x, y;
  bool is_event;
  int partner;
};

// Clockwise sweep starting at direction (0,1); same comparator family as the
// radial order.
int fan_rank(const FanDir& d) {
  int sx = d.x.sign();
  int sy = d.y.sign();
  if (sx == 0 && sy > 0) return 0;
  if (sx > 0) return 1;
  if (sx == 0 && sy < 0) return 2;
  return 3;
}

bool fan_less(const FanDir& a, const FanDir& b) {
  int ra = fan_rank(a), rb = fan_rank(b);
  if (ra != rb) return ra < rb;
  return (a.x * b.y - a.y * b.x).sign() < 0;
}

}  // namespace

WalkTrace walk_around(const ColoredPointSet& s, int center) {
  if (!s.is_colored()) throw Error(ErrorCode::UncoloredSet, "walk needs a colored set");
  if (center < 0 || center >= s.size()) throw Error(ErrorCode::InvalidArgument, "center out of range");
  ValidationResult vr = validate_strong_general_position(s);
  if (!vr.valid()) throw Error(ErrorCode::NotValidated, vr.violation->describe());
  const int n = s.size();
  if (n < 3) throw Error(ErrorCode::TooFewPoints, "walk needs at least 3 points");
  const RationalPoint& p = s.points[static_cast<size_t>(center)];

  // Radius bound: below half the distance to every other point and below the
  // distance to every spanned line missing the center.
  Rational bound;
  bool first = true;
  auto lower = [&](const Rational& candidate) {
    if (first || candidate < bound) {
      bound = candidate;
      first = false;
    }
  };
  for (int i = 0; i < n; ++i)
    if (i != center) lower(distance_squared(p, s.points[static_cast<size_t>(i)]) / 4);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (i == center || j == center) continue;
      lower(distance_squared(line_through(s.points[static_cast<size_t>(i)], s.points[static_cast<size_t>(j)]), p));
    }
  }
  Rational radius(1);
  while (radius * radius * 4 >= bound) radius = radius / 2;

  WalkTrace trace;
  trace.center = center;
  trace.radius = radius;

  // Fan of all directions in which lines through the center leave it: the
  // half-line directions p - q (events) and the segment directions q - p.
  std::vector<FanDir> fan;
  for (int i = 0; i < n; ++i) {
    if (i == center) continue;
    Rational dx = p.x - s.points[static_cast<size_t>(i)].x;
    Rational dy = p.y - s.points[static_cast<size_t>(i)].y;
    fan.push_back({dx, dy, true, i});
    fan.push_back({-dx, -dy, false, i});
  }
  std::sort(fan.begin(), fan.end(), fan_less);
  for (size_t i = 0; i + 1 < fan.size(); ++i)
    if (!fan_less(fan[i], fan[i + 1]) && !fan_less(fan[i + 1], fan[i]))
      throw Error(ErrorCode::NotValidated, "two walk directions coincide");

  const size_t fn = fan.size();
  int interval = 0;
  for (size_t i = 0; i < fn; ++i) {
    if (!fan[i].is_event) continue;
    trace.events.push_back({interval, fan[i].partner});
    // Probe the open arc just clockwise of this event: a positive combination
    // of the event direction and the next fan direction (gap < pi since the
    // fan contains opposite pairs).
    const FanDir& a = fan[i];
    const FanDir& b = fan[(i + 1) % fn];
    Rational vx = a.x + b.x, vy = a.y + b.y;
    Rational norm2 = vx * vx + vy * vy;
    Rational scale(1);
    while (scale * scale * norm2 >= radius * radius) scale = scale / 2;
    RationalPoint obs{p.x + scale * vx, p.y + scale * vy};
    trace.orders_seen.push_back(radial_order(s, obs));
    trace.words_seen.push_back(color_word(trace.orders_seen.back(), s));
    ++interval;
  }
  return trace;
}

long long projected_faces(int point_count) {
  long long pairs = static_cast<long long>(point_count) * (point_count - 1) / 2;
  return pairs * (pairs - 1) / 2;
}

ExperimentResult growth_experiment(ConstructionKind kind, const std::vector<int>& sizes, uint64_t seed,
                                   long long face_budget, int threads) {
  ExperimentResult result;
  for (size_t i = 0; i < sizes.size(); ++i) {
    int size = sizes[i];
    int point_count = (kind == ConstructionKind::Lower4 || kind == ConstructionKind::Upper2) ? 2 * size : size;
    if (projected_faces(point_count) > face_budget)
      throw Error(ErrorCode::BudgetExceeded,
                  "projected face count " + std::to_string(projected_faces(point_count)) + " exceeds budget " +
                      std::to_string(face_budget));
    uint64_t sub = subseed(seed, "experiment", i);
    ColoredPointSet set;
    switch (kind) {
      case ConstructionKind::Random:
        set = gen_random_sgp(size, ColorMode::None, sub);
        break;
      case ConstructionKind::Convex:
        set = gen_convex(size, ColorMode::None, sub);
        break;
      case ConstructionKind::Upper2: {
        auto gen = gen_circle_pattern(size, sub, face_budget);
        set = std::move(gen.set);
        break;
      }
      case ConstructionKind::Lower4: {
        auto gen = gen_four_pattern(size, sub);
        set = std::move(gen.set);
        std::set<ColorWord> qwords;
        for (const RationalPoint& q : gen.q_points) qwords.insert(color_word(radial_order(set, q), set));
        result.notes.push_back("lower4 n=" + std::to_string(size) + " q_points=" +
                               std::to_string(gen.q_points.size()) + " distinct_q_words=" +
                               std::to_string(qwords.size()));
        break;
      }
    }
    CensusOptions opts;
    opts.threads = threads;
    opts.assume_validated = true;  // generators validate their output
    OrderingCensus c = census(set, opts);
    result.rows.push_back({size, c.rho, c.rho_colored, c.order_cells, c.faces});
  }
  return result;
}

std::vector<RationalPoint> sample_observation_points(const ColoredPointSet& s, int count, uint64_t seed) {
  const int n = s.size();
  std::vector<Line> lines;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) lines.push_back(line_through(s.points[static_cast<size_t>(i)], s.points[static_cast<size_t>(j)]));

  Rational xmin = s.points[0].x, xmax = xmin, ymin = s.points[0].y, ymax = ymin;
  for (const RationalPoint& p : s.points) {
    if (p.x < xmin) xmin = p.x;
    if (xmax < p.x) xmax = p.x;
    if (p.y < ymin) ymin = p.y;
    if (ymax < p.y) ymax = p.y;
  }
  Rational spanx = xmax - xmin + 1, spany = ymax - ymin + 1;
  Rational cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;

  SeededRng rng(subseed(seed, "observation-points"));
  std::vector<RationalPoint> out;
  out.reserve(static_cast<size_t>(count));
  const int64_t grid = 1 << 14;
  int guard = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++guard > 100 * count) throw Error(ErrorCode::RetryExhausted, "observation point sampling stalled");
    Rational fx(static_cast<long>(rng.in_range(-grid, grid)), static_cast<long>(2 * grid));
    Rational fy(static_cast<long>(rng.in_range(-grid, grid)), static_cast<long>(2 * grid));
    RationalPoint cand{cx + fx * spanx * 4, cy + fy * spany * 4};
    bool ok = true;
    for (const Line& l : lines)
      if (l.side(cand) == 0) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(cand));
  }
  return out;
}

}  // namespace radial
