#include "fuglede/analysis.hpp"

#include <algorithm>
#include <map>

#include "fuglede/error.hpp"

namespace fuglede {

namespace {

void sort_unique(std::vector<Rational>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

Rational overlap(const Rational& a0, const Rational& a1, const Rational& b0,
                 const Rational& b1) {
  const Rational lo = std::max(a0, b0);
  const Rational hi = std::min(a1, b1);
  return hi > lo ? Rational(hi - lo) : Rational(0);
}

void write_rational_pair(std::ostream& out, const Rational& x,
                         const Rational& y) {
  out << to_string(x) << ',' << to_string(y) << ',' << to_double(x) << ','
      << to_double(y) << '\n';
}

}  // namespace

// ---------------------------------------------------------------- ContPL

ContPL::ContPL(std::vector<Rational> breakpoints, std::vector<Rational> values)
    : xs_(std::move(breakpoints)), ys_(std::move(values)) {
  if (xs_.size() != ys_.size()) {
    throw Error(ErrorCode::invalid_argument,
                "ContPL needs one value per breakpoint");
  }
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i - 1] < xs_[i])) {
      throw Error(ErrorCode::invalid_argument,
                  "ContPL breakpoints must be strictly increasing", i);
    }
  }
}

Rational ContPL::operator()(const Rational& x) const {
  if (xs_.empty() || x < xs_.front() || x > xs_.back()) return 0;
  auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
  const auto i = static_cast<std::size_t>(it - xs_.begin());
  if (*it == x) return ys_[i];
  const Rational& x0 = xs_[i - 1];
  const Rational& x1 = xs_[i];
  return ys_[i - 1] + (ys_[i] - ys_[i - 1]) * (x - x0) / (x1 - x0);
}

bool ContPL::vanishes_at_ends() const {
  return xs_.empty() || (ys_.front() == 0 && ys_.back() == 0);
}

Rational ContPL::min_over(const Rational& lo, const Rational& hi) const {
  if (hi < lo) {
    throw Error(ErrorCode::invalid_argument, "min_over: empty range");
  }
  Rational best = (*this)(lo);
  best = std::min(best, (*this)(hi));
  for (const auto& x : xs_) {
    if (lo < x && x < hi) best = std::min(best, (*this)(x));
  }
  // Just outside a window restriction the function drops to zero.
  if (!xs_.empty() && ((lo < xs_.front() && xs_.front() <= hi) ||
                       (lo <= xs_.back() && xs_.back() < hi))) {
    best = std::min(best, Rational(0));
  }
  return best;
}

Rational ContPL::max_abs() const {
  Rational best = 0;
  for (const auto& y : ys_) best = std::max(best, abs(y));
  return best;
}

ContPL operator+(const ContPL& f, const ContPL& g) {
  std::vector<Rational> xs = f.xs_;
  xs.insert(xs.end(), g.xs_.begin(), g.xs_.end());
  sort_unique(xs);
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) ys.push_back(f(x) + g(x));
  return ContPL(std::move(xs), std::move(ys));
}

ContPL operator*(const Rational& c, const ContPL& f) {
  std::vector<Rational> ys = f.ys_;
  for (auto& y : ys) y *= c;
  return ContPL(f.xs_, std::move(ys));
}

void ContPL::write_csv(std::ostream& out) const {
  out << "# fuglede-csv v1 contpl\n"
      << "x,value,x_float,value_float\n";
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    write_rational_pair(out, xs_[i], ys_[i]);
  }
}

// ---------------------------------------------------------------- StepFn

StepFn::StepFn(std::vector<Rational> breakpoints, std::vector<Rational> values,
               Rational outside)
    : xs_(std::move(breakpoints)),
      vs_(std::move(values)),
      outside_(std::move(outside)) {
  if (xs_.empty() ? !vs_.empty() : vs_.size() + 1 != xs_.size()) {
    throw Error(ErrorCode::invalid_argument,
                "StepFn needs one value per piece");
  }
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    if (!(xs_[i - 1] < xs_[i])) {
      throw Error(ErrorCode::invalid_argument,
                  "StepFn breakpoints must be strictly increasing", i);
    }
  }
  merge_equal_neighbours();
}

void StepFn::merge_equal_neighbours() {
  if (vs_.size() < 2) return;
  std::vector<Rational> xs{xs_.front()};
  std::vector<Rational> vs{vs_.front()};
  for (std::size_t i = 1; i < vs_.size(); ++i) {
    if (vs_[i] == vs.back()) continue;
    xs.push_back(xs_[i]);
    vs.push_back(vs_[i]);
  }
  xs.push_back(xs_.back());
  xs_ = std::move(xs);
  vs_ = std::move(vs);
}

Rational StepFn::operator()(const Rational& x) const {
  if (xs_.empty() || x < xs_.front() || x >= xs_.back()) return outside_;
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  return vs_[static_cast<std::size_t>(it - xs_.begin()) - 1];
}

Rational StepFn::min_value() const {
  if (vs_.empty()) return outside_;
  return *std::min_element(vs_.begin(), vs_.end());
}

Rational StepFn::max_value() const {
  if (vs_.empty()) return outside_;
  return *std::max_element(vs_.begin(), vs_.end());
}

Rational StepFn::integral() const {
  Rational total = 0;
  for (std::size_t i = 0; i < vs_.size(); ++i) {
    total += vs_[i] * (xs_[i + 1] - xs_[i]);
  }
  return total;
}

bool StepFn::is_identically(const Rational& c) const {
  return std::all_of(vs_.begin(), vs_.end(),
                     [&](const Rational& v) { return v == c; });
}

StepFn operator-(const StepFn& f, const StepFn& g) {
  if (f.xs_.empty() || g.xs_.empty() || f.xs_.front() != g.xs_.front() ||
      f.xs_.back() != g.xs_.back()) {
    throw Error(ErrorCode::invalid_argument,
                "StepFn difference needs identical spans");
  }
  std::vector<Rational> xs = f.xs_;
  xs.insert(xs.end(), g.xs_.begin(), g.xs_.end());
  sort_unique(xs);
  std::vector<Rational> vs;
  vs.reserve(xs.size() - 1);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    vs.push_back(f(xs[i]) - g(xs[i]));
  }
  return StepFn(std::move(xs), std::move(vs), f.outside_ - g.outside_);
}

void StepFn::write_csv(std::ostream& out) const {
  out << "# fuglede-csv v1 stepfn\n"
      << "x_lo,x_hi,value,x_lo_float,x_hi_float,value_float\n";
  for (std::size_t i = 0; i < vs_.size(); ++i) {
    out << to_string(xs_[i]) << ',' << to_string(xs_[i + 1]) << ','
        << to_string(vs_[i]) << ',' << to_double(xs_[i]) << ','
        << to_double(xs_[i + 1]) << ',' << to_double(vs_[i]) << '\n';
  }
}

StepFn indicator_on(const StepSet& s, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) {
    throw Error(ErrorCode::window, "window must have lo < hi");
  }
  std::vector<Rational> xs{lo, hi};
  for (const auto& p : s.intervals()) {
    if (lo < p.lo && p.lo < hi) xs.push_back(p.lo);
    if (lo < p.hi && p.hi < hi) xs.push_back(p.hi);
  }
  sort_unique(xs);
  std::vector<Rational> vs;
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    vs.push_back(s.contains(xs[i]) ? 1 : 0);
  }
  return StepFn(std::move(xs), std::move(vs), 0);
}

// ------------------------------------------------------------- DiracComb

DiracComb::DiracComb(std::vector<Atom> atoms, std::optional<Periodic> periodic)
    : atoms_(std::move(atoms)), periodic_(std::move(periodic)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (atoms_[i].weight <= 0) {
      throw Error(ErrorCode::invalid_argument, "atom weights must be positive",
                  i);
    }
  }
  if (!periodic_) return;
  auto& p = *periodic_;
  if (p.period <= 0) {
    throw Error(ErrorCode::invalid_argument, "period must be positive");
  }
  if (p.weight <= 0) {
    throw Error(ErrorCode::invalid_argument,
                "periodic weight must be positive");
  }
  if (p.representatives.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "periodic part needs at least one representative");
  }
  std::vector<Rational> residues;
  for (const auto& r : p.representatives) {
    residues.push_back(r - Rational(floor_div(r / p.period)) * p.period);
  }
  sort_unique(residues);
  if (residues.size() != p.representatives.size()) {
    throw Error(ErrorCode::invalid_argument,
                "representatives must be distinct modulo the period");
  }
  for (const auto& x : p.excluded) {
    const bool on_lattice = std::any_of(
        p.representatives.begin(), p.representatives.end(),
        [&](const Rational& r) {
          const Rational k = (x - r) / p.period;
          return denominator(k) == 1;
        });
    if (!on_lattice) {
      throw Error(ErrorCode::invalid_argument,
                  "excluded point " + fuglede::to_string(x) +
                      " is not in the periodic support");
    }
  }
}

DiracComb DiracComb::single(const Rational& location, const Rational& weight) {
  return DiracComb({{location, weight}}, std::nullopt);
}

DiracComb DiracComb::lattice(std::vector<Rational> representatives,
                             const Rational& period,
                             std::vector<Rational> excluded) {
  return DiracComb({}, Periodic{std::move(representatives), period, 1,
                                std::move(excluded)});
}

std::vector<Atom> DiracComb::atoms_in(const Rational& lo,
                                      const Rational& hi) const {
  std::map<Rational, Rational> merged;
  for (const auto& a : atoms_) {
    if (lo <= a.location && a.location <= hi) merged[a.location] += a.weight;
  }
  if (periodic_) {
    const auto& p = *periodic_;
    for (const auto& r : p.representatives) {
      const BigInt k0 = ceil_div((lo - r) / p.period);
      const BigInt k1 = floor_div((hi - r) / p.period);
      for (BigInt k = k0; k <= k1; ++k) {
        Rational x = r + Rational(k) * p.period;
        if (std::find(p.excluded.begin(), p.excluded.end(), x) !=
            p.excluded.end()) {
          continue;
        }
        merged[x] += p.weight;
      }
    }
  }
  std::vector<Atom> out;
  out.reserve(merged.size());
  for (auto& [x, w] : merged) out.push_back({x, w});
  return out;
}

std::string DiracComb::to_string() const {
  std::string out;
  auto list = [](const std::vector<Rational>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i > 0) s += ", ";
      s += fuglede::to_string(xs[i]);
    }
    return s + "}";
  };
  if (periodic_) {
    out += "periodic " + list(periodic_->representatives) + " + " +
           fuglede::to_string(periodic_->period) + " Z";
    if (periodic_->weight != 1) {
      out += " weight " + fuglede::to_string(periodic_->weight);
    }
    if (!periodic_->excluded.empty()) {
      out += " minus " + list(periodic_->excluded);
    }
  }
  if (!atoms_.empty() || !periodic_) {
    if (!out.empty()) out += " ";
    out += "atoms {";
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (i > 0) out += ", ";
      out += fuglede::to_string(atoms_[i].location) + ":" +
             fuglede::to_string(atoms_[i].weight);
    }
    out += "}";
  }
  return out;
}

// ------------------------------------------------------------ operations

ContPL autocorrelation(const StepSet& e) {
  return cross_correlation(e, e.affine_image(-1, 0));
}

ContPL cross_correlation(const StepSet& e, const StepSet& i) {
  if (e.empty() || i.empty()) return {};
  // Piece pair ([a,b), [c,d)) contributes m([a,b) ∩ (x-d, x-c]), whose kinks
  // sit at a+c, a+d, b+c, b+d.
  std::vector<Rational> xs;
  for (const auto& p : e.intervals()) {
    for (const auto& q : i.intervals()) {
      xs.push_back(p.lo + q.lo);
      xs.push_back(p.lo + q.hi);
      xs.push_back(p.hi + q.lo);
      xs.push_back(p.hi + q.hi);
    }
  }
  sort_unique(xs);
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) {
    Rational total = 0;
    for (const auto& p : e.intervals()) {
      for (const auto& q : i.intervals()) {
        total += overlap(p.lo, p.hi, x - q.hi, x - q.lo);
      }
    }
    ys.push_back(std::move(total));
  }
  return ContPL(std::move(xs), std::move(ys));
}

ContPL comb_convolve(const ContPL& f, const DiracComb& mu, const Rational& lo,
                     const Rational& hi) {
  if (!(lo < hi)) {
    throw Error(ErrorCode::window, "window must have lo < hi");
  }
  if (!f.vanishes_at_ends()) {
    throw Error(ErrorCode::invalid_argument,
                "comb_convolve needs a function continuous on the line");
  }
  std::vector<Rational> xs{lo, hi};
  if (f.empty()) return ContPL(std::move(xs), {0, 0});
  const Rational& s0 = f.breakpoints().front();
  const Rational& s1 = f.breakpoints().back();
  const auto atoms = mu.atoms_in(lo - s1, hi - s0);
  for (const auto& a : atoms) {
    for (const auto& x : f.breakpoints()) {
      const Rational y = x + a.location;
      if (lo < y && y < hi) xs.push_back(y);
    }
  }
  sort_unique(xs);
  std::vector<Rational> ys;
  ys.reserve(xs.size());
  for (const auto& x : xs) {
    // Atoms with x - loc inside [s0, s1].
    auto first = std::lower_bound(
        atoms.begin(), atoms.end(), x - s1,
        [](const Atom& a, const Rational& v) { return a.location < v; });
    Rational total = 0;
    for (auto it = first; it != atoms.end() && it->location <= x - s0; ++it) {
      total += it->weight * f(x - it->location);
    }
    ys.push_back(std::move(total));
  }
  return ContPL(std::move(xs), std::move(ys));
}

StepFn covering_function(const StepSet& e, const DiracComb& mu,
                         const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) {
    throw Error(ErrorCode::window, "window must have lo < hi");
  }
  if (e.empty()) return StepFn({lo, hi}, {0}, 0);
  const auto [inf, sup] = e.extremes();
  // [loc + inf, loc + sup) meets [lo, hi) iff loc ∈ (lo - sup, hi - inf).
  const auto atoms = mu.atoms_in(lo - sup, hi - inf);

  std::vector<std::pair<Rational, Rational>> events;
  events.reserve(2 * atoms.size() * e.size());
  for (const auto& a : atoms) {
    for (const auto& p : e.intervals()) {
      events.emplace_back(a.location + p.lo, a.weight);
      events.emplace_back(a.location + p.hi, -a.weight);
    }
  }
  std::sort(events.begin(), events.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  Rational level = 0;
  std::size_t k = 0;
  for (; k < events.size() && events[k].first <= lo; ++k) {
    level += events[k].second;
  }
  std::vector<Rational> xs{lo};
  std::vector<Rational> vs{level};
  while (k < events.size() && events[k].first < hi) {
    const Rational x = events[k].first;
    while (k < events.size() && events[k].first == x) {
      level += events[k].second;
      ++k;
    }
    xs.push_back(x);
    vs.push_back(level);
  }
  xs.push_back(hi);
  return StepFn(std::move(xs), std::move(vs), 0);
}

}  // namespace fuglede
