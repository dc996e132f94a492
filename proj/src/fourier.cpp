#include "fuglede/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "cyclotomic.hpp"

namespace fuglede {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kSeriesTerms = 28;
constexpr std::int64_t kMaxCyclotomicOrder = 4096;
constexpr std::int64_t kMaxRecognizedDenominator = 10000;

Complex sinc(Complex w) {
  if (w == Complex(0.0, 0.0)) return {1.0, 0.0};
  return std::sin(w) / w;
}

}  // namespace

const char* to_string(ZeroKind kind) {
  return kind == ZeroKind::real ? "real" : "complex-pair";
}

const char* to_string(CertStatus status) {
  switch (status) {
    case CertStatus::zero_free: return "zero-free";
    case CertStatus::zero_found: return "zero-found";
    case CertStatus::inconclusive: return "inconclusive";
  }
  return "unknown";
}

// ------------------------------------------------------------ evaluation

IndicatorTransform::IndicatorTransform(StepSet e) : set_(std::move(e)) {
  double reach = 0.0;
  for (const auto& p : set_.intervals()) {
    lo_.push_back(to_double(p.lo));
    hi_.push_back(to_double(p.hi));
    center_.push_back(to_double((p.lo + p.hi) / 2));
    length_.push_back(to_double(p.hi - p.lo));
    reach = std::max({reach, std::abs(lo_.back()), std::abs(hi_.back())});
  }
  measure_ = to_double(set_.measure());
  // M_n = Σ (b^{n+1} - a^{n+1}) / (n+1), computed exactly.
  for (int n = 0; n < kSeriesTerms; ++n) {
    Rational m = 0;
    for (const auto& p : set_.intervals()) {
      Rational a = 1, b = 1;
      for (int k = 0; k <= n; ++k) {
        a *= p.lo;
        b *= p.hi;
      }
      m += (b - a) / (n + 1);
    }
    moments_.push_back(to_double(m));
  }
  series_threshold_ = reach > 0 ? 0.05 / (2 * kPi * reach) : 0.0;
  if (!set_.empty()) {
    const double j = static_cast<double>(set_.size());
    const double shortest_end = std::min(length_.front(), length_.back());
    zero_free_height_ = std::log(2 * j - 1) / (2 * kPi * shortest_end);
    symmetric_ = set_.is_symmetric();
  }
}

TransformValue IndicatorTransform::eval_series(Complex z) const {
  // Σ_n (-2πiz)^n M_n / n!
  const Complex step = Complex(0.0, -2 * kPi) * z;
  Complex power = 1.0;
  Complex sum = 0.0;
  double magnitude = 0.0;
  for (int n = 0; n < kSeriesTerms; ++n) {
    const Complex term = power * moments_[n];
    sum += term;
    magnitude += std::abs(term);
    if (n > 2 && std::abs(term) < kEps * kEps * (1 + std::abs(sum))) break;
    power *= step / static_cast<double>(n + 1);
  }
  return {sum, 4 * kEps * (magnitude + std::abs(sum)), false};
}

TransformValue IndicatorTransform::eval_closed(Complex z) const {
  // Σ_j e^{-2πi c_j z} L_j sinc(π L_j z)
  Complex sum = 0.0;
  double err = 0.0;
  const double zabs = std::abs(z);
  for (std::size_t j = 0; j < lo_.size(); ++j) {
    const Complex phase = std::exp(Complex(0.0, -2 * kPi * center_[j]) * z);
    const Complex term = phase * length_[j] * sinc(kPi * length_[j] * z);
    sum += term;
    // Absolute scale of the term: sinc may vanish while its rounding error
    // does not.
    const double scale = length_[j] * std::abs(phase) *
                         std::cosh(kPi * length_[j] * z.imag());
    err += scale *
           (8.0 + 2 * kPi * zabs * (std::abs(center_[j]) + length_[j]));
  }
  err += static_cast<double>(lo_.size()) * std::abs(sum);
  return {sum, kEps * err, false};
}

TransformValue IndicatorTransform::operator()(Complex z) const {
  if (set_.empty()) return {0.0, 0.0, true};
  if (z == Complex(0.0, 0.0)) return {measure_, kEps * measure_, false};
  if (std::abs(z) < series_threshold_) return eval_series(z);
  return eval_closed(z);
}

TransformValue IndicatorTransform::at(const Rational& xi) const {
  if (xi == 0) {
    return {measure_, measure_ == 0 ? 0.0 : kEps * measure_,
            set_.measure() == 0};
  }
  if (is_exact_zero(set_, xi)) return {0.0, 0.0, true};
  const double x = to_double(xi);
  TransformValue v = (*this)(Complex(x, 0.0));
  v.error_bound += derivative_bound(0.0, 0.0) * std::abs(x) * kEps;
  return v;
}

TransformValue IndicatorTransform::derivative(Complex z) const {
  if (set_.empty()) return {0.0, 0.0, true};
  const Complex two_pi_i(0.0, 2 * kPi);
  if (std::abs(z) < series_threshold_) {
    // Σ_n (-2πi)^{n+1} M_{n+1} z^n / n!
    const Complex step = -two_pi_i * z;
    Complex power = -two_pi_i;
    Complex sum = 0.0;
    double magnitude = 0.0;
    for (int n = 0; n + 1 < kSeriesTerms; ++n) {
      const Complex term = power * moments_[n + 1];
      sum += term;
      magnitude += std::abs(term);
      power *= step / static_cast<double>(n + 1);
    }
    return {sum, 4 * kEps * (magnitude + std::abs(sum)), false};
  }
  // f = N / (2πiz) with N = Σ (e^{-2πiaz} - e^{-2πibz}), so
  // f' = (N' - 2πi f) / (2πiz).
  const TransformValue f = eval_closed(z);
  Complex dn = 0.0;
  double magnitude = 0.0;
  for (std::size_t j = 0; j < lo_.size(); ++j) {
    const Complex ea = std::exp(-two_pi_i * lo_[j] * z);
    const Complex eb = std::exp(-two_pi_i * hi_[j] * z);
    const Complex term = lo_[j] * ea - hi_[j] * eb;
    dn += term;
    magnitude += (std::abs(lo_[j] * ea) + std::abs(hi_[j] * eb)) *
                 (4.0 + 2 * kPi * std::abs(z) *
                            std::max(std::abs(lo_[j]), std::abs(hi_[j])));
  }
  dn *= -two_pi_i;
  const Complex value = (dn - two_pi_i * f.value) / (two_pi_i * z);
  const double zabs = std::abs(z);
  const double err = (kEps * 2 * kPi * magnitude) / (2 * kPi * zabs) +
                     f.error_bound / zabs + 4 * kEps * std::abs(value);
  return {value, err, false};
}

double IndicatorTransform::derivative_bound(double y_lo, double y_hi) const {
  double total = 0.0;
  for (std::size_t j = 0; j < lo_.size(); ++j) {
    const double reach = std::max(std::abs(lo_[j]), std::abs(hi_[j]));
    const double growth = std::max({lo_[j] * y_lo, lo_[j] * y_hi,
                                    hi_[j] * y_lo, hi_[j] * y_hi});
    total += length_[j] * reach * std::exp(2 * kPi * growth);
  }
  return 2 * kPi * total * (1 + 1e-9);
}

double IndicatorTransform::second_derivative_bound(double y_lo,
                                                   double y_hi) const {
  double total = 0.0;
  for (std::size_t j = 0; j < lo_.size(); ++j) {
    const double reach = std::max(std::abs(lo_[j]), std::abs(hi_[j]));
    const double growth = std::max({lo_[j] * y_lo, lo_[j] * y_hi,
                                    hi_[j] * y_lo, hi_[j] * y_hi});
    total += length_[j] * reach * reach * std::exp(2 * kPi * growth);
  }
  return 4 * kPi * kPi * total * (1 + 1e-9);
}

TransformValue xhat_eval(const StepSet& e, Complex z) {
  return IndicatorTransform(e)(z);
}

TransformValue xhat_eval(const StepSet& e, const Rational& xi) {
  return IndicatorTransform(e).at(xi);
}

bool is_exact_zero(const StepSet& e, const Rational& xi) {
  if (e.empty()) return true;
  if (xi == 0) return false;
  // 2πiξ χ̂_E(ξ) = Σ_j (ζ^{a_j ξ} - ζ^{b_j ξ}) with ζ = e^{-2πi}; reduce
  // the exponents mod 1 and test the root-of-unity sum exactly.
  std::vector<std::pair<Rational, std::int64_t>> terms;
  BigInt order = 1;
  for (const auto& p : e.intervals()) {
    for (const auto& [x, sign] :
         {std::pair{p.lo, std::int64_t{1}}, std::pair{p.hi, std::int64_t{-1}}}) {
      Rational r = x * xi;
      r -= Rational(floor_div(r));
      order = boost::multiprecision::lcm(order, denominator(r));
      if (order > kMaxCyclotomicOrder) return false;
      terms.emplace_back(std::move(r), sign);
    }
  }
  const auto n = order.convert_to<std::int64_t>();
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(n), 0);
  for (const auto& [r, sign] : terms) {
    const auto k = (r * n).convert_to<std::int64_t>();
    coeffs[static_cast<std::size_t>(k)] += sign;
  }
  return detail::vanishes_at_primitive_root(coeffs);
}

// ----------------------------------------------------- argument principle

namespace {

struct Sample {
  Complex z;
  Complex v;
  double err;
};

Sample sample(const IndicatorTransform& f, Complex z) {
  const auto t = f(z);
  return {z, t.value, t.error_bound};
}

// Distance from 0 to the segment [p, q].
double origin_distance(Complex p, Complex q) {
  const Complex d = q - p;
  const double len2 = std::norm(d);
  if (len2 == 0.0) return std::abs(p);
  const double t = std::clamp(-(p.real() * d.real() + p.imag() * d.imag()) /
                                  len2, 0.0, 1.0);
  return std::abs(p + t * d);
}

// Linear model g(z) = f(m) + f'(m)(z - m) of f on the segment [a, b] with
// midpoint m. `slack` bounds |f - g| on the segment.
struct LinearModel {
  Complex ga, gb;
  double slack;
};

LinearModel linear_model(const IndicatorTransform& f, Complex a, Complex b,
                         double y_lo, double y_hi) {
  const Complex m = 0.5 * (a + b);
  const double r = 0.5 * std::abs(b - a);
  const auto fm = f(m);
  const auto dm = f.derivative(m);
  LinearModel g;
  g.ga = fm.value + dm.value * (a - m);
  g.gb = fm.value + dm.value * (b - m);
  g.slack = 0.5 * f.second_derivative_bound(y_lo, y_hi) * r * r +
            fm.error_bound + r * dm.error_bound;
  return g;
}

// Adds the continuous change of arg f along [a.z, b.z] to `arg_sum`. On an
// accepted piece |f - g| < |g| for the linear model g, so f/g keeps a
// positive real part and arg f changes by arg(g(b)/g(a)) plus the endpoint
// corrections arg(f/g).
bool trace_edge(const IndicatorTransform& f, const Sample& a, const Sample& b,
                double& arg_sum) {
  struct Item {
    Sample a, b;
    int depth;
  };
  std::vector<Item> stack{{a, b, 0}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    const double length = std::abs(it.b.z - it.a.z);
    const double y_lo = std::min(it.a.z.imag(), it.b.z.imag());
    const double y_hi = std::max(it.a.z.imag(), it.b.z.imag());
    const double radius =
        f.derivative_bound(y_lo, y_hi) * length + it.a.err + it.b.err;
    const double larger = std::max(std::abs(it.a.v), std::abs(it.b.v));
    if (radius < 0.98 * larger) {
      arg_sum += std::arg(it.b.v / it.a.v);
      continue;
    }
    const auto g = linear_model(f, it.a.z, it.b.z, y_lo, y_hi);
    const double gap = origin_distance(g.ga, g.gb);
    if (g.slack + std::max(it.a.err, it.b.err) < 0.9 * gap) {
      arg_sum += std::arg(g.gb / g.ga) + std::arg(it.b.v / g.gb) -
                 std::arg(it.a.v / g.ga);
      continue;
    }
    if (it.depth >= 64 || length < 4 * kEps * (1 + std::abs(it.a.z))) {
      return false;
    }
    const Sample mid = sample(f, 0.5 * (it.a.z + it.b.z));
    stack.push_back({mid, it.b, it.depth + 1});
    stack.push_back({it.a, mid, it.depth + 1});
  }
  return true;
}

ZeroCertificate make_certificate(const IndicatorTransform& f, const Box& b,
                                 int winding) {
  ZeroCertificate c;
  c.enclosure = b;
  c.winding = winding;
  c.kind = (b.im_lo <= 0.0 && 0.0 <= b.im_hi) ? ZeroKind::real
                                               : ZeroKind::complex_pair;
  c.real_by_symmetry = f.symmetric() && b.im_lo == -b.im_hi &&
                       winding % 2 == 1;
  return c;
}

}  // namespace

std::optional<int> winding_number(const IndicatorTransform& f, const Box& box) {
  const Sample c0 = sample(f, {box.re_lo, box.im_lo});
  const Sample c1 = sample(f, {box.re_hi, box.im_lo});
  const Sample c2 = sample(f, {box.re_hi, box.im_hi});
  const Sample c3 = sample(f, {box.re_lo, box.im_hi});
  double total = 0.0;
  if (!trace_edge(f, c0, c1, total) || !trace_edge(f, c1, c2, total) ||
      !trace_edge(f, c2, c3, total) || !trace_edge(f, c3, c0, total)) {
    return std::nullopt;
  }
  const double turns = total / (2 * kPi);
  const double n = std::round(turns);
  if (std::abs(turns - n) > 0.25) return std::nullopt;
  return static_cast<int>(n);
}

ZeroSearch find_zeros_in_box(const IndicatorTransform& f, const Box& box,
                             double tol) {
  static constexpr double kSplitOffsets[] = {0.0,     0.0173, -0.0173, 0.0419,
                                             -0.0419, 0.0887, -0.0887, 0.1531};
  ZeroSearch out;
  const auto w0 = winding_number(f, box);
  if (!w0 || *w0 < 0) {
    out.unresolved.push_back(box);
    return out;
  }
  std::deque<std::pair<Box, int>> queue{{box, *w0}};
  while (!queue.empty()) {
    const auto [b, w] = queue.front();
    queue.pop_front();
    if (w == 0) continue;
    if (b.width() <= tol && b.height() <= tol) {
      out.zeros.push_back(make_certificate(f, b, w));
      continue;
    }
    const bool split_re = b.width() >= b.height();
    bool split = false;
    for (double offset : kSplitOffsets) {
      Box first = b, second = b;
      if (split_re) {
        const double cut = b.re_lo + (0.5 + offset) * b.width();
        first.re_hi = cut;
        second.re_lo = cut;
      } else {
        const double cut = b.im_lo + (0.5 + offset) * b.height();
        first.im_hi = cut;
        second.im_lo = cut;
      }
      const auto w1 = winding_number(f, first);
      if (!w1 || *w1 < 0) continue;
      const auto w2 = winding_number(f, second);
      if (!w2 || *w2 < 0 || *w1 + *w2 != w) continue;
      queue.emplace_back(first, *w1);
      queue.emplace_back(second, *w2);
      split = true;
      break;
    }
    // A multiple zero cannot be separated below about sqrt(eps); the box
    // still carries a valid winding number.
    if (!split) out.zeros.push_back(make_certificate(f, b, w));
  }
  std::sort(out.zeros.begin(), out.zeros.end(),
            [](const ZeroCertificate& x, const ZeroCertificate& y) {
              const Complex cx = x.center(), cy = y.center();
              return cx.real() != cy.real() ? cx.real() < cy.real()
                                            : cx.imag() < cy.imag();
            });
  return out;
}

// -------------------------------------------------------- real-axis scan

namespace {

struct AxisAnalysis {
  std::vector<CertifiedPiece> pieces;
  std::vector<ZeroCertificate> zeros;
  std::vector<std::pair<double, double>> unresolved;
};

// Bisects [lo, hi] until each piece has a positive lower bound
// (|f(x0)| + |f(x1)| - M L) / 2 - errors, or is shorter than min_len.
void scan_axis(const IndicatorTransform& f, double lo, double hi,
               double min_len, std::vector<CertifiedPiece>& pieces,
               std::vector<std::pair<double, double>>& suspicious) {
  const double slope = f.derivative_bound(0.0, 0.0);
  struct Item {
    double x0, x1;
    TransformValue f0, f1;
  };
  std::vector<Item> stack{{lo, hi, f({lo, 0.0}), f({hi, 0.0})}};
  while (!stack.empty()) {
    const Item it = stack.back();
    stack.pop_back();
    const double length = it.x1 - it.x0;
    double lower = 0.5 * (it.f0.abs() - it.f0.error_bound + it.f1.abs() -
                          it.f1.error_bound - slope * length);
    if (lower <= 0.0) {
      const auto g = linear_model(f, {it.x0, 0.0}, {it.x1, 0.0}, 0.0, 0.0);
      lower = origin_distance(g.ga, g.gb) - g.slack;
    }
    if (lower > 0.0) {
      // |f(x+iy)| >= lower - M_strip |y|; keep half of the margin.
      double h = std::min(1.0, lower / (2 * slope));
      h = std::min(h, lower / (2 * f.derivative_bound(-h, h)));
      pieces.push_back({it.x0, it.x1, lower, h});
      continue;
    }
    if (length <= min_len) {
      if (!suspicious.empty() && suspicious.back().second == it.x0) {
        suspicious.back().second = it.x1;
      } else {
        suspicious.emplace_back(it.x0, it.x1);
      }
      continue;
    }
    const double mid = 0.5 * (it.x0 + it.x1);
    const auto fm = f({mid, 0.0});
    stack.push_back({mid, it.x1, fm, it.f1});
    stack.push_back({it.x0, mid, it.f0, fm});
  }
}

AxisAnalysis analyze_axis(const IndicatorTransform& f, double lo, double hi,
                          double resolution, int refinements = 3) {
  AxisAnalysis out;
  std::vector<std::pair<double, double>> suspicious;
  scan_axis(f, lo, hi, resolution, out.pieces, suspicious);

  // Clusters closer than the largest padding would share a zero.
  static constexpr double kPads[] = {1.0, 2.7, 7.3, 19.1};
  const double merge_gap = 2 * kPads[3] * resolution;
  std::vector<std::pair<double, double>> clusters;
  for (const auto& s : suspicious) {
    if (!clusters.empty() && s.first - clusters.back().second <= merge_gap) {
      clusters.back().second = s.second;
    } else {
      clusters.push_back(s);
    }
  }

  for (const auto& [c0, c1] : clusters) {
    bool resolved = false;
    // Thin boxes first; a multiple zero makes |f| too small along the long
    // edges, so square boxes follow.
    std::vector<std::pair<double, double>> shapes;
    for (double pad_scale : kPads) {
      shapes.emplace_back(pad_scale * resolution, 2 * resolution);
    }
    const double span = std::max(c1 - c0, resolution);
    for (double pad_scale : kPads) {
      shapes.emplace_back(pad_scale * span, pad_scale * span);
    }
    for (const auto& [pad, h] : shapes) {
      const Box box{c0 - pad, c1 + pad, -h, h};
      const auto search = find_zeros_in_box(f, box, 4 * resolution);
      if (!search.complete()) continue;
      resolved = true;
      if (!search.zeros.empty()) {
        for (auto z : search.zeros) {
          z.at_boundary = z.enclosure.re_lo < lo || z.enclosure.re_hi > hi;
          out.zeros.push_back(z);
        }
      } else if (refinements > 0) {
        // |f| is small here but no zero is nearby: refine the scan.
        auto inner = analyze_axis(f, c0, c1, resolution / 64, refinements - 1);
        out.pieces.insert(out.pieces.end(), inner.pieces.begin(),
                          inner.pieces.end());
        out.zeros.insert(out.zeros.end(), inner.zeros.begin(),
                         inner.zeros.end());
        out.unresolved.insert(out.unresolved.end(), inner.unresolved.begin(),
                              inner.unresolved.end());
      } else {
        out.unresolved.emplace_back(c0, c1);
      }
      break;
    }
    if (!resolved) out.unresolved.emplace_back(c0, c1);
  }
  std::sort(out.pieces.begin(), out.pieces.end(),
            [](const CertifiedPiece& x, const CertifiedPiece& y) {
              return x.lo < y.lo;
            });
  std::sort(out.zeros.begin(), out.zeros.end(),
            [](const ZeroCertificate& x, const ZeroCertificate& y) {
              return x.center().real() < y.center().real();
            });
  return out;
}

void recognize_exact(const IndicatorTransform& f, ZeroCertificate& z) {
  if (z.kind != ZeroKind::real) return;
  Rational candidate;
  if (simplest_rational_in(z.enclosure.re_lo, z.enclosure.re_hi,
                           kMaxRecognizedDenominator, candidate) &&
      candidate != 0 && is_exact_zero(f.set(), candidate)) {
    z.exact = candidate;
  }
}

}  // namespace

ZeroFreeCertificate certify_zero_free(const StepSet& e, const Rational& lo,
                                      const Rational& hi, double resolution) {
  if (hi < lo) {
    throw Error(ErrorCode::invalid_argument, "certify_zero_free: hi < lo");
  }
  const IndicatorTransform f(e);
  ZeroFreeCertificate out;
  out.lo = lo;
  out.hi = hi;
  const double a = to_double(lo), b = to_double(hi);
  auto axis = analyze_axis(f, a, b == a ? a + resolution : b, resolution);
  out.pieces = std::move(axis.pieces);
  out.unresolved = std::move(axis.unresolved);
  out.min_lower_bound = std::numeric_limits<double>::infinity();
  for (const auto& p : out.pieces) {
    out.min_lower_bound = std::min(out.min_lower_bound, p.lower_bound);
  }
  for (auto& z : axis.zeros) {
    recognize_exact(f, z);
    if (z.at_boundary) {
      out.boundary_zeros.push_back(z);
    } else if (!out.zero) {
      out.zero = z;
    }
  }
  if (out.zero) {
    out.status = CertStatus::zero_found;
  } else if (!out.boundary_zeros.empty() || !out.unresolved.empty()) {
    out.status = CertStatus::inconclusive;
  } else {
    out.status = CertStatus::zero_free;
  }
  return out;
}

RealZeroList locate_real_zeros(const StepSet& e, const Rational& lo,
                               const Rational& hi, double tol) {
  if (!(tol > 0)) {
    throw Error(ErrorCode::invalid_argument, "tolerance must be positive");
  }
  if (!(lo < hi)) {
    throw Error(ErrorCode::invalid_argument, "locate_real_zeros: lo >= hi");
  }
  const IndicatorTransform f(e);
  auto axis = analyze_axis(f, to_double(lo), to_double(hi), tol / 4);
  RealZeroList out;
  for (auto& z : axis.zeros) {
    recognize_exact(f, z);
    out.zeros.push_back(std::move(z));
  }
  out.inconclusive = std::move(axis.unresolved);
  return out;
}

std::optional<ZeroCertificate> first_positive_zero(const StepSet& e,
                                                   double tol) {
  const auto found = locate_real_zeros(e, 0, 1, tol);
  for (const auto& z : found.zeros) {
    if (!z.at_boundary) return z;
  }
  return std::nullopt;
}

// --------------------------------------------------------- factorization

std::vector<double> default_factorization_frequencies() {
  std::vector<double> xs{1.0 / 7, 3.0 / 5, 11.0 / 3};
  for (int k = 1; xs.size() < 32; ++k) xs.push_back(0.29 * k + 1.0 / 11);
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) xs.push_back(-xs[i]);
  return xs;
}

Factorization tiling_factorization(const StepSet& e,
                                   std::span<const double> frequencies) {
  if (e.empty() || e.measure() != 1) {
    throw Error(ErrorCode::hypothesis, "tiling_factorization needs m(E) = 1");
  }
  const auto [inf, sup] = e.extremes();
  if (inf < 0 || sup > Rational(3, 2)) {
    throw Error(ErrorCode::hypothesis,
                "tiling_factorization needs E inside [0, 3/2)");
  }
  const StepFn covering =
      covering_function(e, DiracComb::lattice({0}, 1), 0, 1);
  if (!covering.is_identically(1)) {
    throw NotZTilingError("E + Z is not a tiling: covering multiplicity "
                          "ranges over [" +
                              to_string(covering.min_value()) + ", " +
                              to_string(covering.max_value()) + "]",
                          covering);
  }
  Factorization out;
  out.f = subtract(StepSet::interval(0, 1), e);
  const StepSet upper =
      intersect(e, StepSet::interval(1, 2)).translate(Rational(-1));
  if (upper != out.f) {
    throw Error(ErrorCode::hypothesis,
                "E differs from ([0,1) \\ F) u (F + 1) with F = [0,1) \\ E");
  }
  if (!out.f.empty() && out.f.extremes().second > Rational(1, 2)) {
    throw Error(ErrorCode::hypothesis,
                "F = [0,1) \\ E is not inside [0, 1/2): E is not inside "
                "[0, 3/2 - eps]");
  }
  out.frequencies = frequencies.empty()
                        ? default_factorization_frequencies()
                        : std::vector<double>(frequencies.begin(),
                                              frequencies.end());
  const IndicatorTransform fe(e), ff(out.f);
  for (double xi : out.frequencies) {
    if (xi == 0.0) {
      throw Error(ErrorCode::invalid_argument,
                  "factorization frequencies must be nonzero");
    }
    const Complex lhs = fe(Complex(xi, 0.0)).value;
    const Complex rhs =
        (std::exp(Complex(0.0, -2 * kPi * xi)) - 1.0) *
        (ff(Complex(xi, 0.0)).value - 1.0 / Complex(0.0, 2 * kPi * xi));
    out.max_residual = std::max(out.max_residual, std::abs(lhs - rhs));
  }
  return out;
}

// ---------------------------------------------------------------- Jensen

namespace {

// (1/2π) ∫ log|f(ρe^{iθ}) / Π (z - a_k)| dθ by adaptive Gauss-Kronrod on
// fixed panels. Returns (value, error estimate).
std::pair<double, double> deflated_circle_mean(
    const IndicatorTransform& f, double rho,
    const std::vector<Complex>& deflate, double tol) {
  using boost::math::quadrature::gauss_kronrod;
  auto integrand = [&](double theta) {
    const Complex z = std::polar(rho, theta);
    double value = std::log(std::max(f(z).abs(), 1e-300));
    for (const auto& a : deflate) {
      value -= std::log(std::max(std::abs(z - a), 1e-300));
    }
    return value;
  };
  constexpr int kPanels = 32;
  const double width = 2 * kPi / kPanels;
  double total = 0.0, error = 0.0;
  for (int k = 0; k < kPanels; ++k) {
    double panel_error = 0.0;
    total += gauss_kronrod<double, 31>::integrate(
        integrand, k * width, (k + 1) * width, 20, tol, &panel_error);
    error += panel_error;
  }
  // Rounding in log|f|: relative evaluation error, averaged over the circle.
  constexpr int kProbe = 1024;
  double rounding = 0.0;
  for (int k = 0; k < kProbe; ++k) {
    const auto v = f(std::polar(rho, (k + 0.5) * 2 * kPi / kProbe));
    rounding += std::min(1.0, v.error_bound / std::max(v.abs(), 1e-300));
  }
  return {total / (2 * kPi), error / (2 * kPi) + rounding / kProbe};
}

}  // namespace

std::pair<double, double> boundary_log_mean(const StepSet& e, double rho,
                                            double tol) {
  if (!(rho > 0)) {
    throw Error(ErrorCode::invalid_argument, "rho must be positive");
  }
  return deflated_circle_mean(IndicatorTransform(e), rho, {}, tol);
}

JensenReport jensen_audit(const StepSet& e, double rho,
                          const JensenOptions& options) {
  if (!(rho > 0)) {
    throw Error(ErrorCode::invalid_argument, "rho must be positive");
  }
  if (e.empty() || e.measure() != 1) {
    throw Error(ErrorCode::hypothesis,
                "jensen_audit needs m(E) = 1 so that the transform is 1 at 0");
  }
  const IndicatorTransform f(e);
  JensenReport report;
  report.rho = rho;
  const auto [inf, sup] = e.extremes();
  if (inf >= 0 && sup <= Rational(3, 2)) report.paper_bound = 3 * rho;

  // Every zero with |a| < ρ + margin lies in this box.
  ZeroSearch search;
  double margin = options.margin;
  for (double scale : {1.0, 1.13, 0.87, 1.31}) {
    margin = options.margin * scale;
    const double reach = rho + margin;
    const double height = std::min(reach, f.zero_free_height() + margin);
    search = find_zeros_in_box(f, {-reach, reach, -height, height},
                               options.zero_tol);
    if (search.complete()) break;
  }
  if (!search.complete()) {
    throw Error(ErrorCode::inconclusive,
                "zero search in the disc did not resolve every region");
  }

  std::vector<Complex> deflate;
  double deflated_mean = 0.0;
  for (auto z : search.zeros) {
    recognize_exact(f, z);
    const double modulus =
        z.exact ? std::abs(to_double(*z.exact)) : std::abs(z.center());
    const double r = z.exact ? 0.0 : z.enclosure.half_diagonal();
    const bool near_circle = std::abs(modulus - rho) < 0.5 * margin;
    const bool straddles = std::abs(modulus - rho) <= r;
    if (near_circle) {
      if (z.winding != 1) {
        throw Error(ErrorCode::circle_too_close,
                    "a multiple zero lies within " +
                        std::to_string(0.5 * margin) +
                        " of the circle; choose a different rho");
      }
      deflate.push_back(z.exact ? Complex(to_double(*z.exact)) : z.center());
      deflated_mean += std::log(std::max(rho, modulus));
    }
    if (z.exact ? modulus > rho : modulus - r >= rho) continue;  // outside
    report.zeros_used.push_back(z);
    if (straddles) ++report.zeros_on_circle;
    if (modulus <= r) {
      throw Error(ErrorCode::inconclusive, "zero enclosure contains 0");
    }
    report.lhs += z.winding * std::log(rho / modulus);
    report.lhs_error += z.winding * r / (modulus - r);
  }
  const auto [mean, err] =
      deflated_circle_mean(f, rho, deflate, options.quadrature_tol);
  report.rhs = mean + deflated_mean;
  report.rhs_error = err;
  return report;
}

// ------------------------------------------------------------ growth bound

GrowthResult growth_contradiction(int n,
                                  std::optional<std::span<const double>>
                                      moduli) {
  if (n < 1) throw Error(ErrorCode::invalid_argument, "N must be >= 1");
  GrowthResult out;
  out.n = n;
  out.upper = 3.0 * n;
  const long double big_n = n;
  long double log_factorial = 0.0L;
  for (int k = 2; k <= n; ++k) log_factorial += std::log(static_cast<long double>(k));
  if (!moduli) {
    out.lower = static_cast<double>(
        4.0L * (big_n * std::log(big_n) - log_factorial));
  } else {
    if (moduli->size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorCode::invalid_argument,
                  "need exactly N zero moduli b_1..b_N");
    }
    long double sum = 0.0L;
    for (int k = 1; k <= n; ++k) {
      const double b = (*moduli)[static_cast<std::size_t>(k - 1)];
      if (!(k - 1 < b && b < k)) {
        throw Error(ErrorCode::invalid_argument,
                    "b_" + std::to_string(k) + " = " + std::to_string(b) +
                        " is outside (" + std::to_string(k - 1) + ", " +
                        std::to_string(k) + ")",
                    static_cast<std::size_t>(k - 1));
      }
      sum += std::log(big_n / k) + std::log(big_n / b);
    }
    out.lower = static_cast<double>(2.0L * sum);
  }
  out.violated = out.lower > out.upper;
  return out;
}

int smallest_violating_n(int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    if (growth_contradiction(n).violated) return n;
  }
  return 0;
}

void write_zero_csv(std::ostream& out,
                    const std::vector<ZeroCertificate>& zeros) {
  out << "# fuglede-csv v1 zeros\n"
      << "index,re_lo,re_hi,im_lo,im_hi,winding,kind,exact,at_boundary\n";
  out.precision(17);
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    const auto& z = zeros[i];
    out << i << ',' << z.enclosure.re_lo << ',' << z.enclosure.re_hi << ','
        << z.enclosure.im_lo << ',' << z.enclosure.im_hi << ',' << z.winding
        << ',' << to_string(z.kind) << ','
        << (z.exact ? to_string(*z.exact) : std::string()) << ','
        << (z.at_boundary ? 1 : 0) << '\n';
  }
}

}  // namespace fuglede
