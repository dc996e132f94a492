#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fuglede/analysis.hpp"
#include "fuglede/stepset.hpp"
#include "fuglede/tiling.hpp"

namespace fuglede {

/// Numeric parameter: exact when written as an integer or p/q.
struct Param {
  std::optional<Rational> exact;
  double value = 0.0;
  friend bool operator==(const Param&, const Param&) = default;
};

Param parse_param(std::string_view text);
std::string to_string(const Param& p);

/// "{0, 1/2} + 2 Z", "lattice {0} + 1 Z", "finite {0, 1/3}", "Z" or "2 Z".
TranslationSet parse_translation_set(
    std::string_view text, std::vector<std::string>* warnings = nullptr);

/// "periodic {0} + 1 Z [weight w] [minus {0}] [atoms {x:w, ...}]" or
/// "atoms {x:w, ...}"; the format written by DiracComb::to_string.
DiracComb parse_comb(std::string_view text,
                     std::vector<std::string>* warnings = nullptr);

/// Named objects from a scene file. One statement per line:
///
///   set E = [0, 1/2) u [1, 3/2)
///   lattice L = {0, 1/2} + 2 Z
///   finite P = {0, 1/3}
///   comb M = periodic {0} + 1 Z minus {0}
///   param rho = 5/2
///
/// '#' starts a comment. Names are unique across all kinds.
struct Scene {
  std::map<std::string, StepSet> sets;
  std::map<std::string, TranslationSet> lattices;
  std::map<std::string, DiracComb> combs;
  std::map<std::string, Param> params;
  std::vector<std::string> order;  // declaration order
  std::vector<std::string> warnings;

  bool has(const std::string& name) const;
  /// Canonical text; parse_scene(print()) reproduces the scene.
  std::string print() const;

  friend bool operator==(const Scene& a, const Scene& b) {
    return a.sets == b.sets && a.lattices == b.lattices &&
           a.combs == b.combs && a.params == b.params && a.order == b.order;
  }
};

/// Throws Error(parse) with "line L, column C: ..." on syntax errors and
/// duplicate names; Error::index() holds the line number.
Scene parse_scene(std::string_view text);
Scene load_scene(const std::string& path);

}  // namespace fuglede
