#include "radial/point_set.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "radial/error.hpp"

namespace radial {

bool ColoredPointSet::is_balanced() const {
  if (!colors) return false;
  long red = std::count(colors->begin(), colors->end(), PointColor::Red);
  long blue = static_cast<long>(colors->size()) - red;
  return red == blue && red % 2 == 0;
}

void ColoredPointSet::check_basic() const {
  if (colors && colors->size() != points.size())
    throw Error(ErrorCode::InvalidArgument, "color list length differs from point count");
  std::unordered_map<RationalPoint, int, PointHash> seen;
  for (int i = 0; i < size(); ++i) {
    auto [it, inserted] = seen.emplace(points[i], i);
    if (!inserted)
      throw Error(ErrorCode::InvalidArgument,
                  "duplicate point at indices " + std::to_string(it->second) + " and " + std::to_string(i));
  }
}

std::string ValidationViolation::describe() const {
  std::ostringstream os;
  if (kind == Kind::CollinearTriple) {
    os << "collinear triple (" << triple[0] << ", " << triple[1] << ", " << triple[2] << ")";
  } else {
    os << "lines (" << line_pairs[0].first << "," << line_pairs[0].second << ") ("
       << line_pairs[1].first << "," << line_pairs[1].second << ") ("
       << line_pairs[2].first << "," << line_pairs[2].second << ") concur at ("
       << where.x.str() << ", " << where.y.str() << ") outside the set";
  }
  return os.str();
}

ValidationResult validate_strong_general_position(const ColoredPointSet& s) {
  s.check_basic();
  const int n = s.size();
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "empty point set");

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orientation(s.points[i], s.points[j], s.points[k]) == Orientation::Collinear) {
          ValidationViolation v;
          v.kind = ValidationViolation::Kind::CollinearTriple;
          v.triple = {i, j, k};
          return {v};
        }

  struct SpannedLine {
    Line line;
    std::pair<int, int> def;
  };
  std::vector<SpannedLine> lines;
  lines.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      lines.push_back({line_through(s.points[i], s.points[j]), {i, j}});

  std::unordered_map<RationalPoint, int, PointHash> set_points;
  for (int i = 0; i < n; ++i) set_points.emplace(s.points[i], i);

  // Group pairwise intersections; a non-member point on >= 3 distinct spanned
  // lines violates strong general position.
  struct Meet {
    std::vector<int> line_ids;
  };
  std::unordered_map<RationalPoint, Meet, PointHash> meets;
  const int L = static_cast<int>(lines.size());
  for (int i = 0; i < L; ++i) {
    for (int j = i + 1; j < L; ++j) {
      LineIntersection res = line_intersection(lines[i].line, lines[j].line);
      const RationalPoint* pt = std::get_if<RationalPoint>(&res);
      if (!pt) continue;
      if (set_points.count(*pt)) continue;
      Meet& m = meets[*pt];
      for (int id : {i, j})
        if (std::find(m.line_ids.begin(), m.line_ids.end(), id) == m.line_ids.end())
          m.line_ids.push_back(id);
      if (m.line_ids.size() >= 3) {
        ValidationViolation v;
        v.kind = ValidationViolation::Kind::ConcurrentLines;
        v.line_pairs = {lines[m.line_ids[0]].def, lines[m.line_ids[1]].def, lines[m.line_ids[2]].def};
        v.where = *pt;
        return {v};
      }
    }
  }
  return {};
}

std::vector<int> convex_hull(const ColoredPointSet& s) {
  const int n = s.size();
  if (n < 3) throw Error(ErrorCode::DegenerateInput, "convex hull needs at least 3 points");
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (s.points[i].x != s.points[j].x) return s.points[i].x < s.points[j].x;
    return s.points[i].y < s.points[j].y;
  });

  // Monotone chain, counterclockwise; strict turns only (no three collinear).
  auto build = [&](auto begin, auto end) {
    std::vector<int> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             orientation(s.points[chain[chain.size() - 2]], s.points[chain.back()], s.points[*it]) !=
                 Orientation::Counterclockwise)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<int> lower = build(order.begin(), order.end());
  std::vector<int> upper = build(order.rbegin(), order.rend());
  lower.pop_back();
  upper.pop_back();
  std::vector<int> hull = lower;
  hull.insert(hull.end(), upper.begin(), upper.end());
  // Clockwise order, starting at the lexicographically smallest point.
  std::reverse(hull.begin() + 1, hull.end());
  return hull;
}

bool strictly_inside_hull(const ColoredPointSet& s, const std::vector<int>& hull, const RationalPoint& p) {
  const size_t k = hull.size();
  for (size_t i = 0; i < k; ++i) {
    if (orientation(s.points[hull[i]], s.points[hull[(i + 1) % k]], p) != Orientation::Clockwise)
      return false;
  }
  return true;
}

std::string serialize_set(const ColoredPointSet& s, const std::map<std::string, std::string>& meta) {
  nlohmann::ordered_json doc;
  if (!meta.empty()) {
    nlohmann::ordered_json m;
    for (const auto& [k, v] : meta) m[k] = v;
    doc["meta"] = m;
  }
  nlohmann::ordered_json pts = nlohmann::ordered_json::array();
  for (int i = 0; i < s.size(); ++i) {
    nlohmann::ordered_json p;
    p["x"] = s.points[i].x.str();
    p["y"] = s.points[i].y.str();
    if (s.colors)
      p["color"] = std::string(1, color_char((*s.colors)[i]));
    else
      p["color"] = nullptr;
    pts.push_back(p);
  }
  doc["points"] = pts;
  return doc.dump(2) + "\n";
}

SetDocument parse_set(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw Error(ErrorCode::ParseError, "expected an object with a \"points\" array");

  SetDocument out;
  if (doc.contains("meta") && doc["meta"].is_object())
    for (const auto& [k, v] : doc["meta"].items())
      out.meta[k] = v.is_string() ? v.get<std::string>() : v.dump();

  bool any_color = false, all_color = true;
  std::vector<PointColor> colors;
  for (const auto& p : doc["points"]) {
    if (!p.is_object() || !p.contains("x") || !p.contains("y"))
      throw Error(ErrorCode::ParseError, "point entries need \"x\" and \"y\"");
    auto x = Rational::parse(p["x"].get<std::string>());
    auto y = Rational::parse(p["y"].get<std::string>());
    if (!x || !y) throw Error(ErrorCode::ParseError, "bad rational literal");
    out.set.points.push_back({*x, *y});
    if (p.contains("color") && !p["color"].is_null()) {
      std::string c = p["color"].get<std::string>();
      if (c != "R" && c != "B") throw Error(ErrorCode::ParseError, "color must be \"R\", \"B\" or null");
      colors.push_back(c == "R" ? PointColor::Red : PointColor::Blue);
      any_color = true;
    } else {
      all_color = false;
    }
  }
  if (any_color) {
    if (!all_color) throw Error(ErrorCode::ParseError, "either every point or no point carries a color");
    out.set.colors = std::move(colors);
  }
  out.set.check_basic();
  return out;
}

SetDocument load_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_set(ss.str());
}

void save_set(const std::string& path, const ColoredPointSet& s, const std::map<std::string, std::string>& meta) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + tmp);
    out << serialize_set(s, meta);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error(ErrorCode::InvalidArgument, "cannot rename " + tmp + " to " + path);
}

}  // namespace radial
