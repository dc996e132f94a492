#include "fuglede/rational.hpp"

#include <cctype>
#include <cmath>

#include "fuglede/error.hpp"

namespace fuglede {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::empty_interval: return "empty-interval";
    case ErrorCode::empty_set: return "empty-set";
    case ErrorCode::hypothesis: return "hypothesis";
    case ErrorCode::not_z_tiling: return "not-z-tiling";
    case ErrorCode::window: return "window";
    case ErrorCode::circle_too_close: return "circle-too-close";
    case ErrorCode::inconclusive: return "inconclusive";
    case ErrorCode::parse: return "parse";
    case ErrorCode::unknown_name: return "unknown-name";
  }
  return "unknown";
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw Error(ErrorCode::parse,
                "malformed rational '" + std::string(whole) + "'");
  }
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::parse,
                  "malformed rational '" + std::string(whole) + "'");
    }
  }
  return BigInt(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text, bool* was_reduced) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  BigInt num = parse_integer(body.substr(0, slash), text);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) {
      throw Error(ErrorCode::parse,
                  "zero denominator in '" + std::string(text) + "'");
    }
  }
  if (was_reduced != nullptr) {
    *was_reduced = boost::multiprecision::gcd(num, den) != 1 && num != 0;
  }
  Rational r(num, den);
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

BigInt floor_div(const Rational& r) {
  BigInt q = numerator(r) / denominator(r);  // truncates toward zero
  if (q * denominator(r) > numerator(r)) --q;
  return q;
}

BigInt ceil_div(const Rational& r) {
  BigInt q = floor_div(r);
  if (Rational(q) < r) ++q;
  return q;
}

bool simplest_rational_in(double lo, double hi, std::int64_t max_den,
                          Rational& out) {
  if (!(lo <= hi)) return false;
  // Integers first.
  const double fl = std::floor(lo);
  if (fl + 1 <= hi || fl == lo) {
    out = Rational(static_cast<std::int64_t>(fl == lo ? fl : fl + 1));
    return true;
  }
  // lo and hi share the integer part `fl`; walk the Stern-Brocot tree of
  // the fractional part.
  std::int64_t pl = 0, ql = 1, pr = 1, qr = 1;  // (0/1, 1/1)
  const double a = lo - fl;
  const double b = hi - fl;
  while (true) {
    const std::int64_t pm = pl + pr;
    const std::int64_t qm = ql + qr;
    if (qm > max_den) return false;
    const double m = static_cast<double>(pm) / static_cast<double>(qm);
    if (m < a) {
      pl = pm;
      ql = qm;
    } else if (m > b) {
      pr = pm;
      qr = qm;
    } else {
      out = Rational(static_cast<std::int64_t>(fl)) + Rational(pm, qm);
      return true;
    }
  }
}

}  // namespace fuglede
