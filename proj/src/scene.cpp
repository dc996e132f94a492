#include "fuglede/scene.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "fuglede/error.hpp"
#include "text.hpp"

namespace fuglede {

namespace {

using detail::Cursor;

std::vector<Rational> rational_list(Cursor& cur,
                                    std::vector<std::string>* warnings) {
  cur.expect("{");
  std::vector<Rational> out;
  if (cur.consume("}")) return out;
  do {
    out.push_back(cur.rational(warnings));
  } while (cur.consume(","));
  cur.expect("}");
  return out;
}

// "Z", "p Z" or "{..} + p Z" / "finite {..}" with an optional keyword.
TranslationSet translation_set_from(Cursor& cur,
                                    std::vector<std::string>* warnings) {
  bool finite = false;
  if (cur.consume_word("finite")) {
    finite = true;
  } else {
    cur.consume_word("lattice");
  }
  cur.skip_space();
  if (cur.consume_word("Z")) return TranslationSet::lattice({0}, 1);
  if (!finite && !cur.rest().starts_with("{")) {
    Rational p = cur.rational(warnings);
    if (!cur.consume_word("Z")) cur.fail("expected 'Z'");
    return TranslationSet::lattice({0}, p);
  }
  const std::size_t col = cur.column();
  auto reps = rational_list(cur, warnings);
  std::optional<Rational> period;
  if (!finite) {
    cur.expect("+");
    period = cur.rational(warnings);
    if (!cur.consume_word("Z")) cur.fail("expected 'Z'");
  }
  try {
    return TranslationSet(std::move(reps), std::move(period));
  } catch (const Error& e) {
    throw Error(ErrorCode::parse,
                "column " + std::to_string(col) + ": " + e.what(), col);
  }
}

DiracComb comb_from(Cursor& cur, std::vector<std::string>* warnings) {
  std::optional<DiracComb::Periodic> periodic;
  std::vector<Atom> atoms;
  const std::size_t col = cur.column();
  if (cur.consume_word("periodic")) {
    DiracComb::Periodic p;
    p.representatives = rational_list(cur, warnings);
    cur.expect("+");
    p.period = cur.rational(warnings);
    if (!cur.consume_word("Z")) cur.fail("expected 'Z'");
    if (cur.consume_word("weight")) p.weight = cur.rational(warnings);
    if (cur.consume_word("minus")) p.excluded = rational_list(cur, warnings);
    periodic = std::move(p);
  }
  if (cur.consume_word("atoms")) {
    cur.expect("{");
    if (!cur.consume("}")) {
      do {
        Rational x = cur.rational(warnings);
        cur.expect(":");
        Rational w = cur.rational(warnings);
        atoms.push_back({std::move(x), std::move(w)});
      } while (cur.consume(","));
      cur.expect("}");
    }
  } else if (!periodic) {
    cur.fail("expected 'periodic' or 'atoms'");
  }
  try {
    return DiracComb(std::move(atoms), std::move(periodic));
  } catch (const Error& e) {
    throw Error(ErrorCode::parse,
                "column " + std::to_string(col) + ": " + e.what(), col);
  }
}

template <class F>
auto parse_whole(std::string_view text, std::vector<std::string>* warnings,
                 F&& f) {
  Cursor cur(text);
  auto out = f(cur, warnings);
  cur.expect_end();
  return out;
}

}  // namespace

Param parse_param(std::string_view text) {
  Param p;
  const std::string s(text);
  try {
    p.exact = parse_rational(s, nullptr);
    p.value = to_double(*p.exact);
    return p;
  } catch (const Error&) {
  }
  std::size_t used = 0;
  try {
    p.value = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(p.value)) {
    throw Error(ErrorCode::parse, "invalid number '" + s + "'");
  }
  return p;
}

std::string to_string(const Param& p) {
  if (p.exact) return to_string(*p.exact);
  std::ostringstream out;
  out.precision(17);
  out << p.value;
  std::string s = out.str();
  // Keep decimals recognizable as decimals on re-reading.
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

TranslationSet parse_translation_set(std::string_view text,
                                     std::vector<std::string>* warnings) {
  return parse_whole(text, warnings, translation_set_from);
}

DiracComb parse_comb(std::string_view text,
                     std::vector<std::string>* warnings) {
  return parse_whole(text, warnings, comb_from);
}

bool Scene::has(const std::string& name) const {
  return sets.count(name) || lattices.count(name) || combs.count(name) ||
         params.count(name);
}

std::string Scene::print() const {
  std::string out;
  for (const auto& name : order) {
    if (auto it = sets.find(name); it != sets.end()) {
      out += "set " + name + " = " + it->second.to_string() + "\n";
    } else if (auto lt = lattices.find(name); lt != lattices.end()) {
      const auto& l = lt->second;
      std::string reps = "{";
      for (std::size_t i = 0; i < l.representatives().size(); ++i) {
        if (i) reps += ", ";
        reps += to_string(l.representatives()[i]);
      }
      reps += "}";
      if (l.period()) {
        out += "lattice " + name + " = " + reps + " + " +
               to_string(*l.period()) + " Z\n";
      } else {
        out += "finite " + name + " = " + reps + "\n";
      }
    } else if (auto ct = combs.find(name); ct != combs.end()) {
      out += "comb " + name + " = " + ct->second.to_string() + "\n";
    } else if (auto pt = params.find(name); pt != params.end()) {
      out += "param " + name + " = " + to_string(pt->second) + "\n";
    }
  }
  return out;
}

Scene parse_scene(std::string_view text) {
  Scene scene;
  std::map<std::string, std::size_t> defined_on;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::vector<std::string> warnings;
    try {
      Cursor cur(line);
      if (cur.at_end()) continue;
      std::string keyword = cur.identifier();
      cur.skip_space();
      const std::size_t name_col = cur.column();
      std::string name = cur.identifier();
      if (auto it = defined_on.find(name); it != defined_on.end()) {
        throw Error(ErrorCode::parse,
                    "column " + std::to_string(name_col) +
                        ": duplicate name '" + name +
                        "' (first defined on line " +
                        std::to_string(it->second) + ")");
      }
      cur.expect("=");
      if (keyword == "set") {
        scene.sets.emplace(name, detail::parse_step_set_from(cur, &warnings));
      } else if (keyword == "lattice" || keyword == "finite") {
        const bool finite = keyword == "finite";
        cur.skip_space();
        if (finite && !cur.rest().starts_with("{")) {
          cur.fail("expected '{'");
        }
        TranslationSet l = finite ? TranslationSet::finite(
                                        rational_list(cur, &warnings))
                                  : translation_set_from(cur, &warnings);
        scene.lattices.emplace(name, std::move(l));
      } else if (keyword == "comb") {
        scene.combs.emplace(name, comb_from(cur, &warnings));
      } else if (keyword == "param") {
        cur.skip_space();
        const std::size_t col = cur.column();
        const std::string token = cur.number_token();
        try {
          Param p = parse_param(token);
          if (p.exact) {
            bool reduced = false;
            parse_rational(token, &reduced);
            if (reduced) {
              warnings.push_back("column " + std::to_string(col) +
                                 ": fraction '" + token + "' reduced to " +
                                 to_string(*p.exact));
            }
          }
          scene.params.emplace(name, p);
        } catch (const Error& e) {
          throw Error(ErrorCode::parse,
                      "column " + std::to_string(col) + ": " + e.what());
        }
      } else {
        throw Error(ErrorCode::parse,
                    "column 1: unknown statement '" + keyword +
                        "' (expected set, lattice, finite, comb or param)");
      }
      cur.expect_end();
      defined_on.emplace(name, line_no);
      scene.order.push_back(name);
    } catch (const Error& e) {
      const ErrorCode code = e.code() == ErrorCode::empty_interval
                                 ? ErrorCode::empty_interval
                                 : ErrorCode::parse;
      throw Error(code, "line " + std::to_string(line_no) + ", " + e.what(),
                  line_no);
    }
    for (auto& w : warnings) {
      scene.warnings.push_back("line " + std::to_string(line_no) + ", " + w);
    }
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::invalid_argument, "cannot open scene file '" +
                                                 path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

}  // namespace fuglede
