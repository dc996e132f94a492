#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fuglede/rational.hpp"

namespace fuglede {

/// Half-open interval [lo, hi).
struct Interval {
  Rational lo;
  Rational hi;

  Rational length() const { return hi - lo; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed interval [lo, hi]; lo == hi is allowed.
struct ClosedInterval {
  Rational lo;
  Rational hi;

  friend bool operator==(const ClosedInterval&, const ClosedInterval&) =
      default;
};

enum class SetOp { unite, intersect, subtract };

/// A finite union of half-open rational intervals in canonical form: sorted,
/// pairwise separated (b_i < a_{i+1}), no empty pieces. Two step sets compare
/// equal iff their indicators agree almost everywhere.
class StepSet {
 public:
  StepSet() = default;

  /// Canonicalizes an arbitrary list of [a, b) pieces, merging overlaps and
  /// adjacencies. Throws Error(empty_interval, index) when some a >= b.
  static StepSet from_pieces(const std::vector<std::pair<Rational, Rational>>&
                                 pieces);
  static StepSet interval(const Rational& lo, const Rational& hi);

  const std::vector<Interval>& intervals() const noexcept { return pieces_; }
  std::size_t size() const noexcept { return pieces_.size(); }
  bool empty() const noexcept { return pieces_.empty(); }

  Rational measure() const;
  /// (inf, sup); throws Error(empty_set) for the empty set.
  std::pair<Rational, Rational> extremes() const;
  Rational width() const;
  bool contains(const Rational& x) const;

  /// {sign * x + shift : x in S}, re-canonicalized to half-open pieces.
  StepSet affine_image(int sign, const Rational& shift) const;
  StepSet translate(const Rational& shift) const {
    return affine_image(+1, shift);
  }

  /// True when the set is mirror symmetric about the midpoint of its hull.
  bool is_symmetric() const;

  std::string to_string() const;

  friend bool operator==(const StepSet&, const StepSet&) = default;

 private:
  explicit StepSet(std::vector<Interval> canonical)
      : pieces_(std::move(canonical)) {}
  std::vector<Interval> pieces_;

  friend StepSet combine(const StepSet&, const StepSet&, SetOp);
};

StepSet combine(const StepSet& a, const StepSet& b, SetOp op);
inline StepSet unite(const StepSet& a, const StepSet& b) {
  return combine(a, b, SetOp::unite);
}
inline StepSet intersect(const StepSet& a, const StepSet& b) {
  return combine(a, b, SetOp::intersect);
}
inline StepSet subtract(const StepSet& a, const StepSet& b) {
  return combine(a, b, SetOp::subtract);
}

/// Closure of D - D as a sorted union of disjoint closed intervals.
class DiffSet {
 public:
  DiffSet() = default;
  /// Merges overlapping or touching closed pieces.
  static DiffSet from_pieces(std::vector<ClosedInterval> pieces);

  const std::vector<ClosedInterval>& intervals() const noexcept {
    return pieces_;
  }
  bool contains(const Rational& x) const;
  bool origin_included() const { return contains(Rational(0)); }
  bool is_symmetric() const;
  std::string to_string() const;

  friend bool operator==(const DiffSet&, const DiffSet&) = default;

 private:
  std::vector<ClosedInterval> pieces_;
};

/// Closed difference set of D; throws Error(empty_set) when D is empty.
DiffSet difference_set(const StepSet& d);

/// Parses "[a, b) u [c, d) ..." ("∪" and "U" also accepted as the union
/// symbol, and a closing ']' is read as ')' since the sets are only defined
/// up to measure zero). "{}" or "empty" is the empty set.
StepSet parse_step_set(std::string_view text,
                       std::vector<std::string>* warnings = nullptr);

}  // namespace fuglede
