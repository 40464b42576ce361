#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "radial/geometry.hpp"

namespace radial {

enum class PointColor : uint8_t { Red, Blue };

inline char color_char(PointColor c) { return c == PointColor::Red ? 'R' : 'B'; }

/// Indexed point list with an optional two-coloring.
struct ColoredPointSet {
  std::vector<RationalPoint> points;
  std::optional<std::vector<PointColor>> colors;

  int size() const { return static_cast<int>(points.size()); }
  bool is_colored() const { return colors.has_value(); }

  // Equal red and blue counts, both even.
  bool is_balanced() const;

  // Pairwise-distinct points; color list (if any) aligned with points.
  // Throws Error(InvalidArgument) on violation.
  void check_basic() const;
};

struct ValidationViolation {
  enum class Kind { CollinearTriple, ConcurrentLines } kind;
  // CollinearTriple: the three point indices.
  // ConcurrentLines: three spanned lines given by their defining index pairs,
  // meeting at `where`, a point outside the set.
  std::array<int, 3> triple{};
  std::array<std::pair<int, int>, 3> line_pairs{};
  RationalPoint where;
  std::string describe() const;
};

struct ValidationResult {
  std::optional<ValidationViolation> violation;
  bool valid() const { return !violation.has_value(); }
};

/// Strong general position: no three points collinear, and no point outside
/// the set lies on three or more spanned lines. Exact; O(n^4) pairs of lines.
ValidationResult validate_strong_general_position(const ColoredPointSet& s);

/// Hull vertex indices in clockwise order, starting from the lexicographically
/// smallest point. Requires |s| >= 3 and no three collinear points.
std::vector<int> convex_hull(const ColoredPointSet& s);

bool strictly_inside_hull(const ColoredPointSet& s, const std::vector<int>& hull, const RationalPoint& p);

// ---- Point-set file format ------------------------------------------------
// {"meta": {...}, "points": [{"x": "num/den", "y": "num/den",
//  "color": "R"|"B"|null}, ...]}; rationals round-trip bit-exactly.

struct SetDocument {
  ColoredPointSet set;
  std::map<std::string, std::string> meta;
};

std::string serialize_set(const ColoredPointSet& s, const std::map<std::string, std::string>& meta);
SetDocument parse_set(const std::string& text);
SetDocument load_set(const std::string& path);
// Atomic: writes a temp file then renames.
void save_set(const std::string& path, const ColoredPointSet& s, const std::map<std::string, std::string>& meta);

}  // namespace radial
