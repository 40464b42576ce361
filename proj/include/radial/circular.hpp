#pragma once

#include <string>
#include <vector>

#include "radial/point_set.hpp"

namespace radial {

/// Index of the lexicographically least rotation (Booth's algorithm, O(n)).
/// Requires a nonempty sequence.
template <typename T>
size_t least_rotation_offset(const std::vector<T>& seq);

/// Least rotation of `seq` plus the left-rotation amount that produces it:
/// result[i] == seq[(i + offset) % n].
template <typename T>
std::pair<std::vector<T>, size_t> canonical_rotation(const std::vector<T>& seq);

/// Clockwise circular sequence of point indices around an observation point,
/// stored as its lexicographically least rotation.
class CircularOrder {
 public:
  CircularOrder() = default;
  // Canonicalizes the given clockwise sequence.
  explicit CircularOrder(std::vector<int> clockwise_sequence);

  const std::vector<int>& sequence() const { return seq_; }
  size_t canonical_rotation_offset() const { return offset_; }
  size_t size() const { return seq_.size(); }

  std::string str() const;  // "[0,2,1]"

  friend bool operator==(const CircularOrder& a, const CircularOrder& b) { return a.seq_ == b.seq_; }

 private:
  std::vector<int> seq_;
  size_t offset_ = 0;
};

struct CircularOrderHash {
  size_t operator()(const CircularOrder& o) const;
};

/// Circular word over {R, B}, stored as its least rotation.
class ColorWord {
 public:
  ColorWord() = default;
  explicit ColorWord(std::string clockwise_word);

  const std::string& word() const { return canon_; }
  size_t size() const { return canon_.size(); }

  friend bool operator==(const ColorWord& a, const ColorWord& b) { return a.canon_ == b.canon_; }
  friend bool operator<(const ColorWord& a, const ColorWord& b) { return a.canon_ < b.canon_; }

 private:
  std::string canon_;
};

struct ColorWordHash {
  size_t operator()(const ColorWord& w) const { return std::hash<std::string>{}(w.word()); }
};

/// Clockwise radial order of s around obs, starting sweep at the reference
/// direction. Exact: half-plane bucketing plus orientation signs, no
/// trigonometry. Throws Error(NotObservationPoint) when obs is a point of s
/// or sees two points of s at the same angle.
CircularOrder radial_order(const ColoredPointSet& s, const RationalPoint& obs);
CircularOrder radial_order_with_reference(const ColoredPointSet& s, const RationalPoint& obs,
                                          const RationalPoint& reference_direction);

/// Raw clockwise index sequence (not canonicalized) around obs.
std::vector<int> radial_sequence(const ColoredPointSet& s, const RationalPoint& obs);

/// Projects a circular order to the colors of its points.
/// Throws Error(UncoloredSet) when s has no colors.
ColorWord color_word(const CircularOrder& order, const ColoredPointSet& s);
ColorWord color_word_of_sequence(const std::vector<int>& seq, const ColoredPointSet& s);

struct TranspositionDiff {
  enum class Kind { Same, Swap, Other } kind;
  int i = -1, j = -1;  // swapped elements, i < j, when kind == Swap
};

/// Same / Swap(i,j) / Other: whether b equals a, equals a with one circularly
/// adjacent pair exchanged, or neither. Throws Error(MismatchedIndexSets)
/// when a and b are not over the same index set.
TranspositionDiff adjacent_transposition_diff(const CircularOrder& a, const CircularOrder& b);

/// True when x,y are circularly adjacent in a and exchanging them yields b.
bool is_adjacent_swap(const CircularOrder& a, const CircularOrder& b, int x, int y);

/// The radial order around an interior observation point read as a closed
/// polygon: simple and star-shaped with obs in its kernel.
/// Throws Error(NotInteriorPoint) when obs is not strictly inside the hull.
std::vector<int> star_polygonization(const ColoredPointSet& s, const RationalPoint& obs);

}  // namespace radial
