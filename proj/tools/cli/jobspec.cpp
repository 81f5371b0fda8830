#include "cli/jobspec.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <variant>

namespace tcl::cli {

namespace {

struct Value {
  std::variant<std::uint64_t, std::string, std::vector<std::string>> data;
  SourcePos pos;
  std::vector<SourcePos> item_pos;
};

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  JobSpec run() {
    JobSpec spec;
    std::string section;
    std::set<std::string> seen_sections;
    std::set<std::string> seen_keys;
    bool have_ring = false;

    for (;;) {
      skip_blank();
      if (at_end()) break;
      const SourcePos here = pos();
      if (peek() == '[') {
        advance();
        std::string name;
        while (!at_end() && peek() != ']' && peek() != '\n') name += advance();
        if (peek() != ']') throw SpecError("unterminated section header", here);
        advance();
        end_of_line();
        if (name == "ring") {
          have_ring = true;
        } else if (name.rfind("ideal.", 0) == 0 && valid_ident(name.substr(6))) {
          spec.ideals.push_back({name.substr(6), {}, {}});
        } else {
          throw SpecError("unknown section [" + name + "]", here);
        }
        if (!seen_sections.insert(name).second) throw SpecError("duplicate section [" + name + "]", here);
        section = name;
        seen_keys.clear();
        continue;
      }
      if (section.empty()) throw SpecError("key outside of a section", here);
      std::string key = identifier();
      skip_inline();
      if (peek() != '=') throw SpecError("expected '=' after key '" + key + "'", pos());
      advance();
      skip_inline();
      Value v = value();
      end_of_line();
      if (!seen_keys.insert(key).second) throw SpecError("duplicate key '" + key + "'", here);
      if (section == "ring") {
        assign_ring(spec.ring, key, v, here);
      } else {
        if (key != "generators") throw SpecError("unknown key '" + key + "' in [" + section + "]", here);
        auto* list = std::get_if<std::vector<std::string>>(&v.data);
        if (list == nullptr) throw SpecError("generators must be a list of strings", v.pos);
        spec.ideals.back().generators = *list;
        spec.ideals.back().positions = v.item_pos;
      }
    }

    if (!have_ring) throw SpecError("missing [ring] section", pos());
    validate_ring(spec.ring);
    for (const auto& ideal : spec.ideals)
      if (ideal.generators.empty())
        throw SpecError("ideal '" + ideal.name + "' has no generators", SourcePos{1, 1});
    return spec;
  }

 private:
  static bool valid_ident(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
  }

  bool at_end() const { return i_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[i_]; }
  SourcePos pos() const { return {line_, col_}; }
  char advance() {
    char c = text_[i_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_comment() {
    if (peek() == '#')
      while (!at_end() && peek() != '\n') advance();
  }
  void skip_inline() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    skip_comment();
  }
  void skip_blank() {
    for (;;) {
      skip_inline();
      if (peek() == '\n') {
        advance();
        continue;
      }
      return;
    }
  }
  void end_of_line() {
    skip_inline();
    if (!at_end() && peek() != '\n') throw SpecError(std::string("unexpected '") + peek() + "'", pos());
  }

  std::string identifier() {
    const SourcePos here = pos();
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) out += advance();
    if (!valid_ident(out)) throw SpecError("expected a key", here);
    return out;
  }

  std::string quoted() {
    const SourcePos here = pos();
    advance();
    std::string out;
    for (;;) {
      if (at_end() || peek() == '\n') throw SpecError("unterminated string", here);
      char c = advance();
      if (c == '"') return out;
      if (c == '\\') {
        if (at_end()) throw SpecError("unterminated string", here);
        c = advance();
      }
      out += c;
    }
  }

  Value value() {
    Value v;
    v.pos = pos();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t n = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        n = n * 10 + static_cast<std::uint64_t>(advance() - '0');
        if (n > std::numeric_limits<std::uint32_t>::max()) throw SpecError("integer too large", v.pos);
      }
      v.data = n;
      return v;
    }
    if (c == '"') {
      v.data = quoted();
      return v;
    }
    if (c == '[') {
      advance();
      std::vector<std::string> items;
      skip_blank();
      if (peek() == ']') {
        advance();
        v.data = items;
        return v;
      }
      for (;;) {
        skip_blank();
        if (peek() != '"') throw SpecError("expected a quoted string", pos());
        v.item_pos.push_back(pos());
        items.push_back(quoted());
        skip_blank();
        if (peek() == ',') {
          advance();
          continue;
        }
        if (peek() == ']') {
          advance();
          break;
        }
        throw SpecError("expected ',' or ']'", pos());
      }
      v.data = std::move(items);
      return v;
    }
    throw SpecError("expected an integer, a quoted string or a list", v.pos);
  }

  static unsigned as_uint(const Value& v, const std::string& key) {
    auto* n = std::get_if<std::uint64_t>(&v.data);
    if (n == nullptr) throw SpecError("'" + key + "' must be an integer", v.pos);
    return static_cast<unsigned>(*n);
  }

  void assign_ring(RingBlock& ring, const std::string& key, const Value& v, SourcePos here) {
    if (key == "p") {
      ring.p = as_uint(v, key);
    } else if (key == "r") {
      ring.r = as_uint(v, key);
    } else if (key == "d") {
      ring.d = as_uint(v, key);
    } else if (key == "vars") {
      auto* list = std::get_if<std::vector<std::string>>(&v.data);
      if (list == nullptr) throw SpecError("'vars' must be a list of strings", v.pos);
      ring.vars = *list;
    } else if (key == "relation") {
      auto* s = std::get_if<std::string>(&v.data);
      if (s == nullptr) throw SpecError("'relation' must be a quoted string", v.pos);
      ring.relation = *s;
      ring.relation_pos = v.pos;
    } else {
      throw SpecError("unknown key '" + key + "' in [ring]", here);
    }
  }

  void validate_ring(const RingBlock& ring) const {
    const SourcePos top{1, 1};
    if (ring.p == 0) throw SpecError("[ring] needs 'p'", top);
    const bool fermat = ring.r || ring.d;
    const bool general = !ring.vars.empty() || ring.relation;
    if (fermat && general) throw SpecError("[ring] mixes Fermat keys (r, d) with vars/relation", top);
    if (fermat && !(ring.r && ring.d)) throw SpecError("Fermat [ring] needs both 'r' and 'd'", top);
    if (!fermat && ring.vars.empty()) throw SpecError("[ring] needs either r and d, or vars", top);
  }

  std::string_view text_;
  std::size_t i_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

}  // namespace

const IdealBlock* JobSpec::find_ideal(std::string_view name) const {
  for (const auto& i : ideals)
    if (i.name == name) return &i;
  return nullptr;
}

JobSpec parse_job_spec(std::string_view text) { return Scanner(text).run(); }

HypersurfaceRing build_ring(const RingBlock& block) {
  if (block.is_fermat()) return HypersurfaceRing::fermat(block.p, *block.r, *block.d);
  if (!block.relation) return HypersurfaceRing::polynomial_ring(block.p, block.vars);
  try {
    return HypersurfaceRing::general(block.p, block.vars, *block.relation);
  } catch (const ParseError& e) {
    SourcePos at{block.relation_pos.line, block.relation_pos.column + 1 + e.offset()};
    throw SpecError(std::string("relation: ") + e.what(), at);
  }
}

RIdeal build_ideal(const HypersurfaceRing& ring, const IdealBlock& block) {
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < block.generators.size(); ++i) {
    try {
      gens.push_back(ring.parse(block.generators[i]));
    } catch (const ParseError& e) {
      SourcePos at = i < block.positions.size() ? block.positions[i] : SourcePos{1, 1};
      at.column += 1 + e.offset();
      throw SpecError("ideal '" + block.name + "': " + e.what(), at);
    }
  }
  return RIdeal(ring, std::move(gens));
}

}  // namespace tcl::cli
