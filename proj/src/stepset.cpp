#include "fuglede/stepset.hpp"

#include <algorithm>
#include <sstream>

#include "fuglede/error.hpp"
#include "text.hpp"

namespace fuglede {

namespace {

// Sorts and merges pieces that overlap or touch. Assumes lo < hi for all.
std::vector<Interval> canonicalize(std::vector<Interval> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  std::vector<Interval> out;
  for (auto& p : pieces) {
    if (!out.empty() && p.lo <= out.back().hi) {
      if (p.hi > out.back().hi) out.back().hi = p.hi;
    } else {
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

StepSet StepSet::from_pieces(
    const std::vector<std::pair<Rational, Rational>>& pieces) {
  std::vector<Interval> raw;
  raw.reserve(pieces.size());
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& [lo, hi] = pieces[i];
    if (!(lo < hi)) {
      throw Error(ErrorCode::empty_interval,
                  "empty interval [" + fuglede::to_string(lo) + ", " +
                      fuglede::to_string(hi) + ") at index " +
                      std::to_string(i),
                  i);
    }
    raw.push_back({lo, hi});
  }
  return StepSet(canonicalize(std::move(raw)));
}

StepSet StepSet::interval(const Rational& lo, const Rational& hi) {
  return from_pieces({{lo, hi}});
}

Rational StepSet::measure() const {
  Rational total = 0;
  for (const auto& p : pieces_) total += p.length();
  return total;
}

std::pair<Rational, Rational> StepSet::extremes() const {
  if (pieces_.empty()) {
    throw Error(ErrorCode::empty_set, "extremes of the empty set");
  }
  return {pieces_.front().lo, pieces_.back().hi};
}

Rational StepSet::width() const {
  const auto [lo, hi] = extremes();
  return hi - lo;
}

bool StepSet::contains(const Rational& x) const {
  // First piece with hi > x.
  auto it = std::upper_bound(
      pieces_.begin(), pieces_.end(), x,
      [](const Rational& v, const Interval& p) { return v < p.hi; });
  return it != pieces_.end() && it->lo <= x;
}

StepSet StepSet::affine_image(int sign, const Rational& shift) const {
  if (sign != 1 && sign != -1) {
    throw Error(ErrorCode::invalid_argument, "affine_image sign must be +-1");
  }
  std::vector<Interval> out;
  out.reserve(pieces_.size());
  for (const auto& p : pieces_) {
    if (sign > 0) {
      out.push_back({p.lo + shift, p.hi + shift});
    } else {
      // (shift - hi, shift - lo] is stored as [shift - hi, shift - lo).
      out.push_back({shift - p.hi, shift - p.lo});
    }
  }
  if (sign < 0) std::reverse(out.begin(), out.end());
  return StepSet(std::move(out));
}

bool StepSet::is_symmetric() const {
  if (pieces_.empty()) return true;
  const auto [lo, hi] = extremes();
  return affine_image(-1, lo + hi) == *this;
}

std::string StepSet::to_string() const {
  if (pieces_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i > 0) out += " u ";
    out += "[" + fuglede::to_string(pieces_[i].lo) + ", " +
           fuglede::to_string(pieces_[i].hi) + ")";
  }
  return out;
}

StepSet combine(const StepSet& a, const StepSet& b, SetOp op) {
  std::vector<Rational> cuts;
  cuts.reserve(2 * (a.size() + b.size()));
  for (const auto* s : {&a, &b}) {
    for (const auto& p : s->intervals()) {
      cuts.push_back(p.lo);
      cuts.push_back(p.hi);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<Interval> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    // Membership is constant on [cuts[i], cuts[i+1]); probe at the left end.
    const bool in_a = a.contains(cuts[i]);
    const bool in_b = b.contains(cuts[i]);
    bool keep = false;
    switch (op) {
      case SetOp::unite: keep = in_a || in_b; break;
      case SetOp::intersect: keep = in_a && in_b; break;
      case SetOp::subtract: keep = in_a && !in_b; break;
    }
    if (!keep) continue;
    if (!out.empty() && out.back().hi == cuts[i]) {
      out.back().hi = cuts[i + 1];
    } else {
      out.push_back({cuts[i], cuts[i + 1]});
    }
  }
  return StepSet(std::move(out));
}

DiffSet DiffSet::from_pieces(std::vector<ClosedInterval> pieces) {
  std::sort(pieces.begin(), pieces.end(),
            [](const ClosedInterval& x, const ClosedInterval& y) {
              return x.lo < y.lo;
            });
  DiffSet out;
  for (auto& p : pieces) {
    if (p.hi < p.lo) {
      throw Error(ErrorCode::empty_interval, "inverted closed interval");
    }
    if (!out.pieces_.empty() && p.lo <= out.pieces_.back().hi) {
      if (p.hi > out.pieces_.back().hi) out.pieces_.back().hi = p.hi;
    } else {
      out.pieces_.push_back(std::move(p));
    }
  }
  return out;
}

bool DiffSet::contains(const Rational& x) const {
  for (const auto& p : pieces_) {
    if (p.lo <= x && x <= p.hi) return true;
  }
  return false;
}

bool DiffSet::is_symmetric() const {
  std::vector<ClosedInterval> mirrored;
  for (auto it = pieces_.rbegin(); it != pieces_.rend(); ++it) {
    mirrored.push_back({-it->hi, -it->lo});
  }
  return mirrored == pieces_;
}

std::string DiffSet::to_string() const {
  if (pieces_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (i > 0) out += " u ";
    out += "[" + fuglede::to_string(pieces_[i].lo) + ", " +
           fuglede::to_string(pieces_[i].hi) + "]";
  }
  return out;
}

DiffSet difference_set(const StepSet& d) {
  if (d.empty()) {
    throw Error(ErrorCode::empty_set, "difference set of the empty set");
  }
  std::vector<ClosedInterval> pieces;
  for (const auto& x : d.intervals()) {
    for (const auto& y : d.intervals()) {
      pieces.push_back({x.lo - y.hi, x.hi - y.lo});
    }
  }
  return DiffSet::from_pieces(std::move(pieces));
}

namespace detail {

StepSet parse_step_set_from(Cursor& cur, std::vector<std::string>* warnings) {
  cur.skip_space();
  if (cur.consume_word("empty") || cur.consume("{}")) return {};
  std::vector<std::pair<Rational, Rational>> pieces;
  std::vector<std::size_t> columns;
  do {
    cur.skip_space();
    columns.push_back(cur.column());
    cur.expect("[");
    Rational lo = cur.rational(warnings);
    cur.expect(",");
    Rational hi = cur.rational(warnings);
    cur.skip_space();
    if (!cur.consume(")") && !cur.consume("]")) {
      cur.fail("expected ')' or ']'");
    }
    pieces.emplace_back(std::move(lo), std::move(hi));
  } while (cur.consume_word("u") || cur.consume_word("U") ||
           cur.consume("∪"));
  try {
    return StepSet::from_pieces(pieces);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::empty_interval && e.index()) {
      throw Error(ErrorCode::empty_interval,
                  "column " + std::to_string(columns[*e.index()]) + ": " +
                      e.what(),
                  e.index());
    }
    throw;
  }
}

}  // namespace detail

StepSet parse_step_set(std::string_view text,
                       std::vector<std::string>* warnings) {
  detail::Cursor cur(text);
  StepSet s = detail::parse_step_set_from(cur, warnings);
  if (!cur.at_end()) cur.fail("expected union symbol 'u' or end of input");
  return s;
}

}  // namespace fuglede
