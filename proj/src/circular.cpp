#include "radial/circular.hpp"

#include <algorithm>
#include <sstream>

#include "radial/error.hpp"

namespace radial {

template <typename T>
size_t least_rotation_offset(const std::vector<T>& seq) {
  const size_t n = seq.size();
  if (n == 0) throw Error(ErrorCode::EmptySequence, "least rotation of an empty sequence");
  // Booth's algorithm on the doubled sequence.
  auto at = [&](size_t i) -> const T& { return seq[i % n]; };
  std::vector<ptrdiff_t> f(2 * n, -1);
  size_t k = 0;
  for (size_t j = 1; j < 2 * n; ++j) {
    const T& sj = at(j);
    ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != at(k + i + 1)) {
      if (sj < at(k + i + 1)) k = j - i - 1;
      i = f[i];
    }
    if (i == -1 && sj != at(k)) {
      if (sj < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

template <typename T>
std::pair<std::vector<T>, size_t> canonical_rotation(const std::vector<T>& seq) {
  size_t off = least_rotation_offset(seq);
  const size_t n = seq.size();
  std::vector<T> rot(n);
  for (size_t i = 0; i < n; ++i) rot[i] = seq[(i + off) % n];
  return {std::move(rot), off};
}

template size_t least_rotation_offset<int>(const std::vector<int>&);
template size_t least_rotation_offset<char>(const std::vector<char>&);
template std::pair<std::vector<int>, size_t> canonical_rotation<int>(const std::vector<int>&);
template std::pair<std::vector<char>, size_t> canonical_rotation<char>(const std::vector<char>&);

CircularOrder::CircularOrder(std::vector<int> clockwise_sequence) {
  auto [rot, off] = canonical_rotation(clockwise_sequence);
  seq_ = std::move(rot);
  offset_ = off;
}

std::string CircularOrder::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < seq_.size(); ++i) {
    if (i) os << ',';
    os << seq_[i];
  }
  os << ']';
  return os.str();
}

size_t CircularOrderHash::operator()(const CircularOrder& o) const {
  size_t h = o.size();
  for (int v : o.sequence()) h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

ColorWord::ColorWord(std::string clockwise_word) {
  std::vector<char> seq(clockwise_word.begin(), clockwise_word.end());
  auto [rot, off] = canonical_rotation(seq);
  (void)off;
  canon_.assign(rot.begin(), rot.end());
}

namespace {

// Clockwise sweep rank of vector u starting at the reference direction:
// 0 on the reference ray, 1 strictly clockwise of it (first half-turn),
// 2 on the opposite ray, 3 in the remaining half-plane.
int sweep_rank(const mpq_class& cross_ref_u, const mpq_class& dot_ref_u) {
  int cs = sgn(cross_ref_u);
  if (cs < 0) return 1;
  if (cs > 0) return 3;
  return sgn(dot_ref_u) > 0 ? 0 : 2;
}

}  // namespace

std::vector<int> radial_sequence_with_reference(const ColoredPointSet& s, const RationalPoint& obs,
                                                const RationalPoint& ref) {
  const int n = s.size();
  struct Entry {
    mpq_class ux, uy;
    int rank;
    int idx;
  };
  std::vector<Entry> entries;
  entries.reserve(n);
  const mpq_class rx = ref.x.raw(), ry = ref.y.raw();
  for (int i = 0; i < n; ++i) {
    mpq_class ux = s.points[i].x.raw() - obs.x.raw();
    mpq_class uy = s.points[i].y.raw() - obs.y.raw();
    if (sgn(ux) == 0 && sgn(uy) == 0)
      throw Error(ErrorCode::NotObservationPoint, "observation point coincides with point " + std::to_string(i));
    mpq_class cross = rx * uy - ry * ux;
    mpq_class dot = rx * ux + ry * uy;
    entries.push_back({std::move(ux), std::move(uy), sweep_rank(cross, dot), i});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.rank == 0 || a.rank == 2) return false;  // ties; checked below
    // Within an open half-plane: a before b in the clockwise sweep iff b is
    // strictly clockwise of a.
    return sgn(a.ux * b.uy - a.uy * b.ux) < 0;
  });
  for (size_t i = 0; i + 1 < entries.size(); ++i) {
    const Entry& a = entries[i];
    const Entry& b = entries[i + 1];
    if (a.rank == b.rank && sgn(a.ux * b.uy - a.uy * b.ux) == 0)
      throw Error(ErrorCode::NotObservationPoint,
                  "points " + std::to_string(a.idx) + " and " + std::to_string(b.idx) +
                      " are collinear with the observation point");
  }
  std::vector<int> seq;
  seq.reserve(n);
  for (const Entry& e : entries) seq.push_back(e.idx);
  return seq;
}

std::vector<int> radial_sequence(const ColoredPointSet& s, const RationalPoint& obs) {
  return radial_sequence_with_reference(s, obs, RationalPoint{Rational(0), Rational(1)});
}

CircularOrder radial_order_with_reference(const ColoredPointSet& s, const RationalPoint& obs,
                                          const RationalPoint& ref) {
  return CircularOrder(radial_sequence_with_reference(s, obs, ref));
}

CircularOrder radial_order(const ColoredPointSet& s, const RationalPoint& obs) {
  return CircularOrder(radial_sequence(s, obs));
}

ColorWord color_word_of_sequence(const std::vector<int>& seq, const ColoredPointSet& s) {
  if (!s.colors) throw Error(ErrorCode::UncoloredSet, "color word of an uncolored set");
  std::string w;
  w.reserve(seq.size());
  for (int i : seq) w.push_back(color_char((*s.colors)[static_cast<size_t>(i)]));
  return ColorWord(std::move(w));
}

ColorWord color_word(const CircularOrder& order, const ColoredPointSet& s) {
  return color_word_of_sequence(order.sequence(), s);
}

TranspositionDiff adjacent_transposition_diff(const CircularOrder& a, const CircularOrder& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::MismatchedIndexSets, "orders have different lengths");
  std::vector<int> sa = a.sequence(), sb = b.sequence();
  std::vector<int> ca = sa, cb = sb;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  if (ca != cb) throw Error(ErrorCode::MismatchedIndexSets, "orders are over different index sets");
  if (a == b) return {TranspositionDiff::Kind::Same, -1, -1};
  const size_t k = sa.size();
  for (size_t i = 0; i < k; ++i) {
    std::vector<int> swapped = sa;
    std::swap(swapped[i], swapped[(i + 1) % k]);
    if (CircularOrder(std::move(swapped)) == b) {
      int x = sa[i], y = sa[(i + 1) % k];
      if (x > y) std::swap(x, y);
      return {TranspositionDiff::Kind::Swap, x, y};
    }
  }
  return {TranspositionDiff::Kind::Other, -1, -1};
}

bool is_adjacent_swap(const CircularOrder& a, const CircularOrder& b, int x, int y) {
  const std::vector<int>& sa = a.sequence();
  const size_t k = sa.size();
  for (size_t i = 0; i < k; ++i) {
    int u = sa[i], v = sa[(i + 1) % k];
    if ((u == x && v == y) || (u == y && v == x)) {
      std::vector<int> swapped = sa;
      std::swap(swapped[i], swapped[(i + 1) % k]);
      return CircularOrder(std::move(swapped)) == b;
    }
  }
  return false;
}

std::vector<int> star_polygonization(const ColoredPointSet& s, const RationalPoint& obs) {
  std::vector<int> hull = convex_hull(s);
  if (!strictly_inside_hull(s, hull, obs))
    throw Error(ErrorCode::NotInteriorPoint, "observation point is not strictly inside the convex hull");
  return radial_order(s, obs).sequence();
}

}  // namespace radial
