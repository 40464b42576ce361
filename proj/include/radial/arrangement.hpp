#pragma once

#include <array>
#include <map>
#include <vector>

#include "radial/point_set.hpp"

namespace radial {

enum class EdgeKind : uint8_t { SegmentInterior, HalfLine, BoxBoundary };

struct ArrLine {
  Line line;
  int def_a, def_b;        // indices of the two defining points
  Rational seg_lo, seg_hi; // params of the defining points along the line, sorted
};

struct ArrVertex {
  RationalPoint p;
  std::vector<int> lines;  // incident spanned line ids
  int s_index = -1;        // index in S when the vertex is an input point
  uint8_t box_sides = 0;   // bitmask of box sides the vertex lies on
};

struct ArrEdge {
  int v0, v1;          // endpoints; for line edges, v0 -> v1 follows (b,-a)
  int line = -1;       // spanned line id, or -1 for box edges
  int box_side = -1;   // 0 bottom, 1 right, 2 top, 3 left
  EdgeKind kind;
  std::array<int, 2> face{-1, -1};  // face left of v0->v1, face left of v1->v0
};

struct ArrFace {
  std::vector<int> vertices;  // boundary cycle, counterclockwise (outer: clockwise)
  std::vector<int> edges;     // edge ids along the cycle
  RationalPoint rep;          // interior representative; meaningless for the outer face
  bool outer = false;
};

struct Box {
  Rational xmin, xmax, ymin, ymax;
  std::vector<RationalPoint> corners() const;
  Line side_line(int side) const;  // 0 bottom, 1 right, 2 top, 3 left
};

/// Clipped planar subdivision induced by all lines through point pairs.
struct Arrangement {
  ColoredPointSet source;
  std::vector<ArrLine> lines;
  std::vector<ArrVertex> vertices;
  std::vector<ArrEdge> edges;
  std::vector<ArrFace> faces;
  Box box;
  int outer_face = -1;

  long long V() const { return static_cast<long long>(vertices.size()); }
  long long E() const { return static_cast<long long>(edges.size()); }
  long long F() const { return static_cast<long long>(faces.size()); }
};

/// Requires |s| >= 3 (TooFewPoints) and strong general position (NotValidated;
/// validation runs here unless the caller did it already).
Arrangement build_arrangement(const ColoredPointSet& s, bool assume_validated = false);

/// Recomputes every edge's kind from its exact midpoint parameter.
std::vector<EdgeKind> classify_edges(const Arrangement& arr);

/// Faces grouped into order-partition cells: union-find across
/// segment-interior edges. Cells are numbered 0..cell_count-1; the outer face
/// maps to -1.
struct OrderPartition {
  std::vector<int> face_to_cell;
  int cell_count = 0;
};

OrderPartition build_order_partition(const Arrangement& arr);

struct ArrangementStats {
  int n = 0;
  long long line_count = 0, V = 0, E = 0, F = 0;
  std::map<long long, long long> degree_histogram;  // graph degree -> vertex count
  long long M = 0;   // vertices strictly interior to some spanned segment
  long long cr = 0;  // 4-subsets in convex position
  long long order_cells = 0;
  long long interior_order_cells = 0;
  std::string csv_header() const;
  std::string csv_row() const;
};

ArrangementStats compute_stats(const ColoredPointSet& s, const Arrangement& arr, const OrderPartition& op);

/// Number of 4-subsets of s in convex position (brute force).
long long rectilinear_crossing_number(const ColoredPointSet& s);

/// One strictly-hull-interior representative per face meeting the hull
/// interior; faces straddling the hull boundary get a recomputed point from
/// the face-within-hull polygon.
std::vector<std::pair<int, RationalPoint>> interior_face_representatives(const ColoredPointSet& s,
                                                                         const Arrangement& arr);

/// Interior point of a convex region given by bounding lines with required
/// side signs, derived from `center` (which must satisfy them strictly):
/// the simplest rational point in a verified box around it.
RationalPoint simplify_interior_point(const RationalPoint& center,
                                      const std::vector<std::pair<Line, int>>& bounds);

}  // namespace radial
