#include "radial/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "radial/error.hpp"

namespace radial {

std::vector<RationalPoint> Box::corners() const {
  return {{xmin, ymin}, {xmax, ymin}, {xmax, ymax}, {xmin, ymax}};
}

namespace {

Line axis_line(bool vertical, const Rational& value) {
  Line l;
  if (vertical) {
    l.a = value.den();
    l.b = 0;
    l.c = value.num();
  } else {
    l.a = 0;
    l.b = value.den();
    l.c = value.num();
  }
  l.normalize();
  return l;
}

}  // namespace

Line Box::side_line(int side) const {
  switch (side) {
    case 0: return axis_line(false, ymin);
    case 1: return axis_line(true, xmax);
    case 2: return axis_line(false, ymax);
    case 3: return axis_line(true, xmin);
  }
  throw Error(ErrorCode::InvalidArgument, "box side out of range");
}

RationalPoint simplify_interior_point(const RationalPoint& center,
                                      const std::vector<std::pair<Line, int>>& bounds) {
  Rational h;
  bool first = true;
  for (const auto& [l, want] : bounds) {
    Rational val = Rational(l.a) * center.x + Rational(l.b) * center.y - Rational(l.c);
    int sg = val.sign();
    if (sg == 0 || (want != 0 && sg != want))
      throw Error(ErrorCode::InvalidArgument, "center is not strictly interior to its bounds");
    Rational slack = val.abs() / Rational(mpz_class(abs(l.a) + abs(l.b)));
    if (first || slack < h) {
      h = slack;
      first = false;
    }
  }
  if (first) return center;
  h = h / 2;
  RationalPoint out{simplest_in_open_interval(center.x - h, center.x + h),
                    simplest_in_open_interval(center.y - h, center.y + h)};
  for (const auto& [l, want] : bounds) {
    int sg = l.side(out);
    int ref = want != 0 ? want : l.side(center);
    if (sg != ref) throw Error(ErrorCode::InvalidArgument, "simplified point left its region");
  }
  return out;
}

namespace {

struct DirRef {
  const mpz_class* dx;
  const mpz_class* dy;
  int sign;
};

// Counterclockwise circular order of directions starting at +x.
bool less_ccw(const DirRef& u, const DirRef& v) {
  auto rank = [](const DirRef& d) {
    int sy = d.sign * sgn(*d.dy);
    int sx = d.sign * sgn(*d.dx);
    return (sy > 0 || (sy == 0 && sx > 0)) ? 0 : 1;
  };
  int ru = rank(u), rv = rank(v);
  if (ru != rv) return ru < rv;
  mpz_class cr = (*u.dx) * (*v.dy) - (*u.dy) * (*v.dx);
  return u.sign * v.sign * sgn(cr) > 0;
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Arrangement build_arrangement(const ColoredPointSet& s, bool assume_validated) {
  const int n = s.size();
  if (n < 3) throw Error(ErrorCode::TooFewPoints, "arrangement needs at least 3 points");
  if (!assume_validated) {
    ValidationResult vr = validate_strong_general_position(s);
    if (!vr.valid()) throw Error(ErrorCode::NotValidated, vr.violation->describe());
  } else {
    s.check_basic();
  }

  Arrangement arr;
  arr.source = s;

  // All spanned lines; distinct under strong general position.
  std::unordered_map<Line, int, LineHash> line_ids;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Line l = line_through(s.points[i], s.points[j]);
      auto [it, inserted] = line_ids.emplace(l, static_cast<int>(arr.lines.size()));
      if (!inserted) throw Error(ErrorCode::NotValidated, "two point pairs span one line");
      ArrLine al;
      al.line = it->first;
      al.def_a = i;
      al.def_b = j;
      Rational ta = al.line.param(s.points[i]);
      Rational tb = al.line.param(s.points[j]);
      if (tb < ta) std::swap(ta, tb);
      al.seg_lo = std::move(ta);
      al.seg_hi = std::move(tb);
      arr.lines.push_back(std::move(al));
    }
  }
  const int L = static_cast<int>(arr.lines.size());

  std::unordered_map<RationalPoint, int, PointHash> vid;
  auto add_vertex = [&](const RationalPoint& p) {
    auto [it, inserted] = vid.emplace(p, static_cast<int>(arr.vertices.size()));
    if (inserted) arr.vertices.push_back({p, {}, -1, 0});
    return it->second;
  };
  for (int i = 0; i < n; ++i) arr.vertices[add_vertex(s.points[i])].s_index = i;

  std::vector<std::vector<int>> line_verts(L);
  auto add_incidence = [&](int v, int l) {
    auto& lv = arr.vertices[v].lines;
    if (std::find(lv.begin(), lv.end(), l) == lv.end()) {
      lv.push_back(l);
      line_verts[l].push_back(v);
    }
  };

  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      LineIntersection res = line_intersection(arr.lines[i].line, arr.lines[j].line);
      if (const RationalPoint* pt = std::get_if<RationalPoint>(&res)) {
        int v = add_vertex(*pt);
        add_incidence(v, i);
        add_incidence(v, j);
      }
    }
  }

  for (const ArrVertex& v : arr.vertices) {
    if (v.s_index < 0 && v.lines.size() != 2)
      throw Error(ErrorCode::NotValidated, "crossing outside the set lies on more than two lines");
    if (v.s_index >= 0 && static_cast<int>(v.lines.size()) != n - 1)
      throw Error(ErrorCode::NotValidated, "input point is not on exactly n-1 spanned lines");
  }

  // Clipping box: strictly contains every vertex with a full-span margin.
  Rational xmin = arr.vertices[0].p.x, xmax = xmin, ymin = arr.vertices[0].p.y, ymax = ymin;
  for (const ArrVertex& v : arr.vertices) {
    if (v.p.x < xmin) xmin = v.p.x;
    if (xmax < v.p.x) xmax = v.p.x;
    if (v.p.y < ymin) ymin = v.p.y;
    if (ymax < v.p.y) ymax = v.p.y;
  }
  Rational spanx = xmax - xmin, spany = ymax - ymin;
  Box box{xmin - spanx - 1, xmax + spanx + 1, ymin - spany - 1, ymax + spany + 1};
  const Rational third(1, 3);
  for (int guard = 0;; ++guard) {
    bool generic = true;
    for (const RationalPoint& c : box.corners())
      for (const ArrLine& al : arr.lines)
        if (al.line.side(c) == 0) generic = false;
    if (generic) break;
    if (guard > 64) throw Error(ErrorCode::ParameterDegenerate, "cannot find a generic clipping box");
    box.xmin -= third;
    box.xmax += third;
    box.ymin -= third;
    box.ymax += third;
  }
  arr.box = box;

  // Box corners and line/box crossings.
  std::array<std::vector<int>, 4> side_verts;
  {
    auto cs = box.corners();
    for (int c = 0; c < 4; ++c) {
      int v = add_vertex(cs[c]);
      // corner c lies on sides c and (c+3)%4 with sides 0 bottom,1 right,2 top,3 left
      arr.vertices[v].box_sides = static_cast<uint8_t>((1 << c) | (1 << ((c + 3) % 4)));
      side_verts[c].push_back(v);
      side_verts[(c + 3) % 4].push_back(v);
    }
  }
  std::array<Line, 4> side_lines{box.side_line(0), box.side_line(1), box.side_line(2), box.side_line(3)};
  for (int l = 0; l < L; ++l) {
    int crossings = 0;
    for (int side = 0; side < 4; ++side) {
      LineIntersection res = line_intersection(arr.lines[l].line, side_lines[side]);
      const RationalPoint* pt = std::get_if<RationalPoint>(&res);
      if (!pt) continue;
      bool horizontal = side == 0 || side == 2;
      bool inside = horizontal ? (box.xmin < pt->x && pt->x < box.xmax)
                               : (box.ymin < pt->y && pt->y < box.ymax);
      if (!inside) continue;
      int v = add_vertex(*pt);
      arr.vertices[v].box_sides |= static_cast<uint8_t>(1 << side);
      add_incidence(v, l);
      side_verts[side].push_back(v);
      ++crossings;
    }
    if (crossings != 2) throw Error(ErrorCode::ParameterDegenerate, "line does not cross the box twice");
  }

  // Edges along each line, in increasing param (direction (b, -a)).
  for (int l = 0; l < L; ++l) {
    std::vector<std::pair<Rational, int>> order;
    order.reserve(line_verts[l].size());
    for (int v : line_verts[l]) order.emplace_back(arr.lines[l].line.param(arr.vertices[v].p), v);
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    const Rational& lo = arr.lines[l].seg_lo;
    const Rational& hi = arr.lines[l].seg_hi;
    for (size_t k = 0; k + 1 < order.size(); ++k) {
      Rational mid = (order[k].first + order[k + 1].first) / 2;
      if (mid == lo || mid == hi)
        throw Error(ErrorCode::ParameterDegenerate, "edge midpoint at a defining point");
      ArrEdge e;
      e.v0 = order[k].second;
      e.v1 = order[k + 1].second;
      e.line = l;
      e.kind = (lo < mid && mid < hi) ? EdgeKind::SegmentInterior : EdgeKind::HalfLine;
      arr.edges.push_back(std::move(e));
    }
  }
  // Box boundary edges, in increasing x (bottom/top) or y (left/right).
  for (int side = 0; side < 4; ++side) {
    bool horizontal = side == 0 || side == 2;
    auto& verts = side_verts[side];
    std::sort(verts.begin(), verts.end(), [&](int a, int b) {
      return horizontal ? arr.vertices[a].p.x < arr.vertices[b].p.x
                        : arr.vertices[a].p.y < arr.vertices[b].p.y;
    });
    for (size_t k = 0; k + 1 < verts.size(); ++k) {
      ArrEdge e;
      e.v0 = verts[k];
      e.v1 = verts[k + 1];
      e.box_side = side;
      e.kind = EdgeKind::BoxBoundary;
      arr.edges.push_back(std::move(e));
    }
  }

  // Rotation system: outgoing half-edges per vertex in counterclockwise order.
  const int E = static_cast<int>(arr.edges.size());
  const int V = static_cast<int>(arr.vertices.size());
  std::vector<mpz_class> line_dx(L), line_dy(L);
  for (int l = 0; l < L; ++l) {
    line_dx[l] = arr.lines[l].line.b;
    line_dy[l] = -arr.lines[l].line.a;
  }
  static const mpz_class kZero(0), kOne(1);
  auto dir_of = [&](int h) -> DirRef {
    const ArrEdge& e = arr.edges[h >> 1];
    int sign = (h & 1) ? -1 : 1;
    if (e.line >= 0) return {&line_dx[e.line], &line_dy[e.line], sign};
    bool horizontal = e.box_side == 0 || e.box_side == 2;
    return horizontal ? DirRef{&kOne, &kZero, sign} : DirRef{&kZero, &kOne, sign};
  };
  std::vector<std::vector<int>> out(V);
  for (int e = 0; e < E; ++e) {
    out[arr.edges[e].v0].push_back(2 * e);
    out[arr.edges[e].v1].push_back(2 * e + 1);
  }
  std::vector<int> pos_in_out(2 * E, -1);
  for (int v = 0; v < V; ++v) {
    std::sort(out[v].begin(), out[v].end(),
              [&](int h1, int h2) { return less_ccw(dir_of(h1), dir_of(h2)); });
    for (size_t i = 0; i < out[v].size(); ++i) pos_in_out[out[v][i]] = static_cast<int>(i);
  }

  // Face walk: next half-edge is the clockwise predecessor of the twin around
  // the head vertex; interior faces come out counterclockwise.
  auto he_target = [&](int h) { return (h & 1) ? arr.edges[h >> 1].v0 : arr.edges[h >> 1].v1; };
  auto he_source = [&](int h) { return (h & 1) ? arr.edges[h >> 1].v1 : arr.edges[h >> 1].v0; };
  std::vector<int> face_of(2 * E, -1);
  for (int h0 = 0; h0 < 2 * E; ++h0) {
    if (face_of[h0] != -1) continue;
    int f = static_cast<int>(arr.faces.size());
    arr.faces.emplace_back();
    ArrFace& face = arr.faces.back();
    int h = h0;
    do {
      face_of[h] = f;
      face.vertices.push_back(he_source(h));
      face.edges.push_back(h >> 1);
      arr.edges[h >> 1].face[h & 1] = f;
      int v = he_target(h);
      int t = h ^ 1;
      const auto& ring = out[v];
      int idx = pos_in_out[t];
      h = ring[(idx + ring.size() - 1) % ring.size()];
    } while (h != h0);
  }

  // The outer face lies left of a bottom-side half-edge running in -x.
  for (int e = 0; e < E && arr.outer_face < 0; ++e)
    if (arr.edges[e].box_side == 0) arr.outer_face = face_of[2 * e + 1];
  if (arr.outer_face < 0) throw Error(ErrorCode::ParameterDegenerate, "no outer face found");
  arr.faces[arr.outer_face].outer = true;

  if (arr.V() - arr.E() + arr.F() != 2)
    throw Error(ErrorCode::ParameterDegenerate, "Euler relation failed on the clipped subdivision");

  // Interior representatives: centroid of three consecutive boundary
  // vertices, snapped to the simplest rational point that verifiably stays
  // inside the face.
  for (ArrFace& face : arr.faces) {
    if (face.outer) continue;
    if (face.vertices.size() < 3)
      throw Error(ErrorCode::ParameterDegenerate, "face with fewer than three vertices");
    const RationalPoint& p0 = arr.vertices[face.vertices[0]].p;
    const RationalPoint& p1 = arr.vertices[face.vertices[1]].p;
    const RationalPoint& p2 = arr.vertices[face.vertices[2]].p;
    if (orientation(p0, p1, p2) == Orientation::Collinear)
      throw Error(ErrorCode::ParameterDegenerate, "collinear consecutive face vertices");
    Rational three(3);
    RationalPoint centroid{(p0.x + p1.x + p2.x) / three, (p0.y + p1.y + p2.y) / three};
    std::vector<std::pair<Line, int>> bounds;
    std::vector<int> seen_lines;
    uint8_t seen_sides = 0;
    for (int e : face.edges) {
      const ArrEdge& edge = arr.edges[e];
      if (edge.line >= 0) {
        if (std::find(seen_lines.begin(), seen_lines.end(), edge.line) != seen_lines.end()) continue;
        seen_lines.push_back(edge.line);
        bounds.emplace_back(arr.lines[edge.line].line, 0);
      } else if (!(seen_sides & (1 << edge.box_side))) {
        seen_sides |= static_cast<uint8_t>(1 << edge.box_side);
        bounds.emplace_back(side_lines[edge.box_side], 0);
      }
    }
    face.rep = simplify_interior_point(centroid, bounds);
  }

  return arr;
}

std::vector<EdgeKind> classify_edges(const Arrangement& arr) {
  std::vector<EdgeKind> kinds;
  kinds.reserve(arr.edges.size());
  for (const ArrEdge& e : arr.edges) {
    if (e.line < 0) {
      kinds.push_back(EdgeKind::BoxBoundary);
      continue;
    }
    const ArrLine& al = arr.lines[e.line];
    Rational mid = (al.line.param(arr.vertices[e.v0].p) + al.line.param(arr.vertices[e.v1].p)) / 2;
    if (mid == al.seg_lo || mid == al.seg_hi)
      throw Error(ErrorCode::ParameterDegenerate, "edge midpoint at a defining point");
    kinds.push_back((al.seg_lo < mid && mid < al.seg_hi) ? EdgeKind::SegmentInterior : EdgeKind::HalfLine);
  }
  return kinds;
}

OrderPartition build_order_partition(const Arrangement& arr) {
  const int F = static_cast<int>(arr.faces.size());
  DisjointSet dsu(F);
  for (const ArrEdge& e : arr.edges)
    if (e.kind == EdgeKind::SegmentInterior) dsu.unite(e.face[0], e.face[1]);

  OrderPartition op;
  op.face_to_cell.assign(F, -1);
  std::unordered_map<int, int> cell_id;
  for (int f = 0; f < F; ++f) {
    if (arr.faces[f].outer) continue;
    int root = dsu.find(f);
    auto [it, inserted] = cell_id.emplace(root, static_cast<int>(cell_id.size()));
    op.face_to_cell[f] = it->second;
  }
  op.cell_count = static_cast<int>(cell_id.size());
  return op;
}

long long rectilinear_crossing_number(const ColoredPointSet& s) {
  const int n = s.size();
  auto inside = [&](int a, int b, int c, int d) {
    Orientation o1 = orientation(s.points[a], s.points[b], s.points[d]);
    Orientation o2 = orientation(s.points[b], s.points[c], s.points[d]);
    Orientation o3 = orientation(s.points[c], s.points[a], s.points[d]);
    return o1 == o2 && o2 == o3;
  };
  long long cr = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          bool convex = !inside(a, b, c, d) && !inside(a, b, d, c) && !inside(a, c, d, b) && !inside(b, c, d, a);
          if (convex) ++cr;
        }
  return cr;
}

std::string ArrangementStats::csv_header() const {
  return "n,lines,V,E,F,M,cr,order_cells,interior_order_cells";
}

std::string ArrangementStats::csv_row() const {
  std::ostringstream os;
  os << n << ',' << line_count << ',' << V << ',' << E << ',' << F << ',' << M << ',' << cr << ','
     << order_cells << ',' << interior_order_cells;
  return os.str();
}

ArrangementStats compute_stats(const ColoredPointSet& s, const Arrangement& arr, const OrderPartition& op) {
  ArrangementStats st;
  st.n = s.size();
  st.line_count = static_cast<long long>(arr.lines.size());
  st.V = arr.V();
  st.E = arr.E();
  st.F = arr.F();

  std::vector<long long> degree(arr.vertices.size(), 0);
  for (const ArrEdge& e : arr.edges) {
    ++degree[e.v0];
    ++degree[e.v1];
  }
  for (long long d : degree) ++st.degree_histogram[d];

  for (size_t v = 0; v < arr.vertices.size(); ++v) {
    const ArrVertex& vert = arr.vertices[v];
    if (vert.s_index >= 0) continue;
    for (int l : vert.lines) {
      Rational t = arr.lines[l].line.param(vert.p);
      if (arr.lines[l].seg_lo < t && t < arr.lines[l].seg_hi) {
        ++st.M;
        break;
      }
    }
  }

  st.cr = rectilinear_crossing_number(s);
  st.order_cells = op.cell_count;

  std::vector<int> hull = convex_hull(s);
  std::vector<char> cell_interior(op.cell_count, 0);
  for (size_t f = 0; f < arr.faces.size(); ++f) {
    if (arr.faces[f].outer) continue;
    if (strictly_inside_hull(s, hull, arr.faces[f].rep)) cell_interior[op.face_to_cell[f]] = 1;
  }
  st.interior_order_cells = std::count(cell_interior.begin(), cell_interior.end(), 1);
  return st;
}

namespace {

std::vector<RationalPoint> clip_by_halfplane(const std::vector<RationalPoint>& poly, const Line& l, int keep) {
  std::vector<RationalPoint> out;
  const size_t k = poly.size();
  for (size_t i = 0; i < k; ++i) {
    const RationalPoint& a = poly[i];
    const RationalPoint& b = poly[(i + 1) % k];
    int sa = l.side(a), sb = l.side(b);
    if (sa == keep || sa == 0) out.push_back(a);
    if (sa != 0 && sb != 0 && sa != sb) {
      Rational va = Rational(l.a) * a.x + Rational(l.b) * a.y - Rational(l.c);
      Rational vb = Rational(l.a) * b.x + Rational(l.b) * b.y - Rational(l.c);
      Rational t = va / (va - vb);
      out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  // Drop consecutive duplicates.
  std::vector<RationalPoint> dedup;
  for (const RationalPoint& p : out)
    if (dedup.empty() || !(dedup.back() == p)) dedup.push_back(p);
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

}  // namespace

std::vector<std::pair<int, RationalPoint>> interior_face_representatives(const ColoredPointSet& s,
                                                                         const Arrangement& arr) {
  std::vector<int> hull = convex_hull(s);
  const size_t hk = hull.size();
  // Hull edge lines plus the interior side sign of each.
  Rational hx(0), hy(0);
  for (int i : hull) {
    hx += s.points[i].x;
    hy += s.points[i].y;
  }
  RationalPoint hull_centroid{hx / Rational(static_cast<long>(hk)), hy / Rational(static_cast<long>(hk))};
  std::vector<std::pair<Line, int>> hull_bounds;
  for (size_t i = 0; i < hk; ++i) {
    Line l = line_through(s.points[hull[i]], s.points[hull[(i + 1) % hk]]);
    hull_bounds.emplace_back(l, l.side(hull_centroid));
  }

  std::vector<std::pair<int, RationalPoint>> reps;
  for (size_t f = 0; f < arr.faces.size(); ++f) {
    const ArrFace& face = arr.faces[f];
    if (face.outer) continue;
    if (strictly_inside_hull(s, hull, face.rep)) {
      reps.emplace_back(static_cast<int>(f), face.rep);
      continue;
    }
    // Clip the face polygon by the hull; a nonempty interior yields a point.
    std::vector<RationalPoint> poly;
    poly.reserve(face.vertices.size());
    for (int v : face.vertices) poly.push_back(arr.vertices[v].p);
    for (const auto& [l, keep] : hull_bounds) {
      poly = clip_by_halfplane(poly, l, keep);
      if (poly.size() < 3) break;
    }
    if (poly.size() < 3) continue;
    bool has_area = false;
    for (size_t i = 2; i < poly.size() && !has_area; ++i)
      has_area = orientation(poly[0], poly[i - 1], poly[i]) != Orientation::Collinear;
    if (!has_area) continue;
    Rational cx(0), cy(0);
    for (const RationalPoint& p : poly) {
      cx += p.x;
      cy += p.y;
    }
    Rational count(static_cast<long>(poly.size()));
    RationalPoint centroid{cx / count, cy / count};
    std::vector<std::pair<Line, int>> bounds = hull_bounds;
    std::vector<int> seen_lines;
    for (int e : face.edges) {
      const ArrEdge& edge = arr.edges[e];
      if (edge.line < 0) continue;
      if (std::find(seen_lines.begin(), seen_lines.end(), edge.line) != seen_lines.end()) continue;
      seen_lines.push_back(edge.line);
      bounds.emplace_back(arr.lines[edge.line].line, 0);
    }
    reps.emplace_back(static_cast<int>(f), simplify_interior_point(centroid, bounds));
  }
  return reps;
}

}  // namespace radial
