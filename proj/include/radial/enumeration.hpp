#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>
#include <vector>

#include "radial/arrangement.hpp"
#include "radial/circular.hpp"

namespace radial {

struct CensusOptions {
  int threads = 1;
  bool assume_validated = false;
};

/// Exact count of distinct radial orderings (and colored orderings) over all
/// observation points of the plane, together with the cell bookkeeping.
struct OrderingCensus {
  long long rho = 0;
  long long rho_colored = 0;  // -1 for uncolored sets
  std::unordered_set<CircularOrder, CircularOrderHash> orders;
  std::set<ColorWord> words;
  std::map<int, CircularOrder> per_cell;
  std::map<std::string, long long> class_sizes;  // canonical order -> cells realizing it
  long long order_cells = 0;
  long long faces = 0;

  bool contains(const CircularOrder& o) const { return orders.count(o) != 0; }
};

struct CensusComputation {
  Arrangement arr;
  OrderPartition partition;
  std::vector<CircularOrder> face_orders;  // empty entry for the outer face
  OrderingCensus census;
};

CensusComputation run_census(const ColoredPointSet& s, const CensusOptions& opts = {});
OrderingCensus census(const ColoredPointSet& s, const CensusOptions& opts = {});

struct DistinctnessReport {
  enum class Status { Pass, Counterexample, ValidationRequired } status;
  int cell_a = -1, cell_b = -1;
  std::string detail;
};

/// Lemma check: order cells meeting the hull interior have pairwise distinct
/// radial orderings. Returns ValidationRequired (skips the check) when the
/// input is not in strong general position.
DistinctnessReport interior_distinctness_check(const ColoredPointSet& s);

struct PartitionLemmaResult {
  bool applicable = false;  // p,q in different cells and no bichromatic
                            // half-line crosses segment pq
  bool distinct = false;    // meaningful when applicable
};

/// Partition-lemma instance check for the partition (R = part_r indices,
/// B = the rest) and observation points p, q.
PartitionLemmaResult partition_lemma_check(const ColoredPointSet& s, const std::vector<int>& part_r,
                                           const RationalPoint& p, const RationalPoint& q);

struct WalkEvent {
  int interval_id;
  int partner;  // the point transposed with the center at this crossing
};

struct WalkTrace {
  int center = -1;
  Rational radius;
  std::vector<WalkEvent> events;           // one full clockwise revolution
  std::vector<CircularOrder> orders_seen;  // orders_seen[k]: arc right after events[k]
  std::vector<ColorWord> words_seen;

  long long distinct_words() const;
};

/// One clockwise walk around a circle centered at the given point, small
/// enough that only half-lines involving the center are crossed. Exact: the
/// radius and all probe points are rational.
WalkTrace walk_around(const ColoredPointSet& s, int center);

enum class ConstructionKind { Random, Lower4, Upper2, Convex };

struct ExperimentRow {
  int size = 0;
  long long rho = 0;
  long long rho_colored = -1;
  long long order_cells = 0;
  long long faces = 0;
};

struct ExperimentResult {
  std::vector<ExperimentRow> rows;
  std::vector<std::string> notes;  // extra '#' comment lines for the CSV
};

ExperimentResult growth_experiment(ConstructionKind kind, const std::vector<int>& sizes, uint64_t seed,
                                   long long face_budget, int threads = 1);

/// Estimated face count C(C(pts,2), 2) used for budget gating.
long long projected_faces(int point_count);

/// Random valid observation points (rational coordinates; points on any
/// spanned line are rejected and resampled). Deterministic given the seed.
std::vector<RationalPoint> sample_observation_points(const ColoredPointSet& s, int count, uint64_t seed);

}  // namespace radial
