#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "fuglede/error.hpp"
#include "fuglede/rational.hpp"
#include "fuglede/stepset.hpp"

namespace fuglede::detail {

/// Minimal hand-written scanner shared by the set, lattice and scene
/// grammars. Columns are 1-based byte offsets.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  std::size_t column() const { return pos_ + 1; }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::string_view rest() const { return text_.substr(pos_); }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  /// Like consume, but the token must not be followed by an identifier
  /// character.
  bool consume_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && is_ident_char(text_[end])) return false;
    pos_ = end;
    return true;
  }

  void expect(std::string_view token) {
    if (!consume(token)) fail("expected '" + std::string(token) + "'");
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing text");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
         text_[pos_] == '_')) {
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    }
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  /// Integer or p/q fraction. Unreduced fractions are reduced, with a
  /// warning appended when `warnings` is non-null.
  Rational rational(std::vector<std::string>* warnings) {
    skip_space();
    const std::size_t start = pos_;
    const std::size_t col = column();
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '/')) {
      ++pos_;
    }
    const std::string_view token = text_.substr(start, pos_ - start);
    if (token.empty()) fail("expected a rational number");
    bool reduced = false;
    try {
      Rational r = parse_rational(token, &reduced);
      if (reduced && warnings != nullptr) {
        warnings->push_back("column " + std::to_string(col) +
                            ": fraction '" + std::string(token) +
                            "' reduced to " + to_string(r));
      }
      return r;
    } catch (const Error& e) {
      pos_ = start;
      fail(e.what());
    }
  }

  /// A rational or a decimal/scientific literal (e.g. 2.5, 1e-9).
  std::string number_token() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(
                                      text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw Error(ErrorCode::parse,
                "column " + std::to_string(column()) + ": " + message,
                column());
  }

 private:
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

/// Parses a step set starting at the cursor and stops after the last piece.
StepSet parse_step_set_from(Cursor& cur, std::vector<std::string>* warnings);

}  // namespace fuglede::detail
