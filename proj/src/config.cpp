#include "tracediv/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tracediv {
namespace {

class Cursor {
 public:
  explicit Cursor(const std::string& text) : text_(text) {}

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  int line() const { return line_; }
  int col() const { return col_; }

  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space_and_comments(bool cross_lines) {
    while (!eof()) {
      const char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || (cross_lines && c == '\n')) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError,
         msg + " at line " + std::to_string(line_) + ", column " + std::to_string(col_));
  }

 private:
  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

bool is_bare_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

ConfigValue parse_value(Cursor& cur);

ConfigValue parse_array(Cursor& cur) {
  ConfigValue v;
  v.type = ConfigValue::Type::Array;
  v.line = cur.line();
  v.col = cur.col();
  cur.advance();  // '['
  while (true) {
    cur.skip_space_and_comments(true);
    if (cur.eof()) cur.error("unterminated array");
    if (cur.peek() == ']') {
      cur.advance();
      return v;
    }
    v.array.push_back(parse_value(cur));
    cur.skip_space_and_comments(true);
    if (cur.eof()) cur.error("unterminated array");
    if (cur.peek() == ',') {
      cur.advance();
    } else if (cur.peek() != ']') {
      cur.error("expected ',' or ']' in array");
    }
  }
}

ConfigValue parse_value(Cursor& cur) {
  cur.skip_space_and_comments(true);
  if (cur.eof()) cur.error("expected a value");
  const char c = cur.peek();
  if (c == '[') return parse_array(cur);

  ConfigValue v;
  v.line = cur.line();
  v.col = cur.col();
  if (c == '"') {
    cur.advance();
    v.type = ConfigValue::Type::String;
    while (!cur.eof() && cur.peek() != '"' && cur.peek() != '\n') v.string += cur.advance();
    if (cur.eof() || cur.peek() != '"') cur.error("unterminated string");
    cur.advance();
    return v;
  }
  if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
    std::string digits;
    digits += cur.advance();
    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek()))) digits += cur.advance();
    if (digits == "-") cur.error("malformed integer");
    v.type = ConfigValue::Type::Integer;
    v.integer = std::stoll(digits);
    return v;
  }
  cur.error("unexpected character in value");
}

}  // namespace

const ConfigValue* ConfigDoc::find(const std::string& section, const std::string& key) const {
  auto s = sections.find(section);
  if (s == sections.end()) return nullptr;
  auto k = s->second.find(key);
  return k == s->second.end() ? nullptr : &k->second;
}

const ConfigValue& ConfigDoc::require(const std::string& section, const std::string& key) const {
  const ConfigValue* v = find(section, key);
  if (!v) fail(ErrorCode::ConfigError, "missing key [" + section + "] " + key);
  return *v;
}

ConfigDoc parse_config(const std::string& text) {
  ConfigDoc doc;
  Cursor cur(text);
  std::string section;
  while (true) {
    cur.skip_space_and_comments(true);
    if (cur.eof()) break;
    if (cur.peek() == '[') {
      cur.advance();
      section.clear();
      while (!cur.eof() && cur.peek() != ']' && cur.peek() != '\n') section += cur.advance();
      if (cur.eof() || cur.peek() != ']') cur.error("unterminated section header");
      cur.advance();
      doc.sections[section];
      continue;
    }
    if (!is_bare_char(cur.peek())) cur.error("expected a key");
    std::string key;
    while (!cur.eof() && is_bare_char(cur.peek())) key += cur.advance();
    cur.skip_space_and_comments(false);
    if (cur.eof() || cur.peek() != '=') cur.error("expected '=' after key '" + key + "'");
    cur.advance();
    cur.skip_space_and_comments(false);
    doc.sections[section][key] = parse_value(cur);
  }
  return doc;
}

ConfigDoc parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ConfigError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

namespace {

long long require_int(const ConfigValue& v, const std::string& what) {
  if (v.type != ConfigValue::Type::Integer)
    fail(ErrorCode::ParseError, what + " must be an integer (line " + std::to_string(v.line) + ")");
  return v.integer;
}

std::vector<int> int_list(const ConfigValue& v, const std::string& what) {
  if (v.type != ConfigValue::Type::Array)
    fail(ErrorCode::ParseError, what + " must be an array (line " + std::to_string(v.line) + ")");
  std::vector<int> out;
  for (const ConfigValue& x : v.array) out.push_back(static_cast<int>(require_int(x, what)));
  return out;
}

}  // namespace

FieldSpec field_from_config(const ConfigDoc& doc) {
  FieldSpec spec;
  spec.p = static_cast<int>(require_int(doc.require("field", "p"), "field.p"));
  if (const ConfigValue* e = doc.find("field", "e")) spec.e = static_cast<int>(require_int(*e, "field.e"));
  if (const ConfigValue* m = doc.find("field", "m")) spec.m = static_cast<int>(require_int(*m, "field.m"));
  if (const ConfigValue* poly = doc.find("field", "poly")) spec.poly = int_list(*poly, "field.poly");
  return spec;
}

std::shared_ptr<FieldTower> tower_from_config(const ConfigDoc& doc, uint64_t table_limit) {
  const FieldSpec spec = field_from_config(doc);
  return std::make_shared<FieldTower>(
      FieldTower::build(spec.p, spec.e, spec.m, spec.poly, table_limit));
}

FieldElement parse_element(const FieldTower& tower, const ConfigValue& v) {
  const std::string where = " (line " + std::to_string(v.line) + ", column " + std::to_string(v.col) + ")";
  switch (v.type) {
    case ConfigValue::Type::Integer:
      return tower.from_prime_value(v.integer);
    case ConfigValue::Type::Array: {
      std::vector<int> coeffs;
      for (const ConfigValue& c : v.array) {
        if (c.type != ConfigValue::Type::Integer)
          fail(ErrorCode::ParseError, "coefficient list entries must be integers" + where);
        coeffs.push_back(static_cast<int>(c.integer));
      }
      return tower.from_coeffs(coeffs);
    }
    case ConfigValue::Type::String: {
      const std::string& s = v.string;
      if (s == "0") return tower.zero();
      if (s.size() >= 3 && s[0] == 'a' && s[1] == '^') {
        for (size_t i = 2; i < s.size(); ++i)
          if (!std::isdigit(static_cast<unsigned char>(s[i])))
            fail(ErrorCode::ParseError, "malformed element literal '" + s + "'" + where);
        return tower.pow(tower.generator(), std::stoll(s.substr(2)));
      }
      fail(ErrorCode::ParseError, "malformed element literal '" + s + "'" + where);
    }
  }
  fail(ErrorCode::ParseError, "unsupported element literal" + where);
}

LoadedMatrix matrix_from_config(const ConfigDoc& doc, uint64_t table_limit) {
  LoadedMatrix out;
  out.tower = tower_from_config(doc, table_limit);
  const ConfigValue& rows = doc.require("matrix", "rows");
  if (rows.type != ConfigValue::Type::Array || rows.array.empty())
    fail(ErrorCode::ParseError, "matrix.rows must be a non-empty array of rows");
  const size_t n = rows.array.front().type == ConfigValue::Type::Array
                       ? rows.array.front().array.size()
                       : 0;
  std::vector<FieldElement> entries;
  for (const ConfigValue& row : rows.array) {
    if (row.type != ConfigValue::Type::Array || row.array.size() != n || n == 0) {
      // A row of coefficient lists is still an array; distinguish by shape.
      if (row.type != ConfigValue::Type::Array)
        fail(ErrorCode::ParseError, "each matrix row must be an array (line " +
                                        std::to_string(row.line) + ")");
      if (row.array.size() != n)
        fail(ErrorCode::DimensionMismatch, "ragged matrix rows (line " + std::to_string(row.line) + ")");
    }
    for (const ConfigValue& cell : row.array) entries.push_back(parse_element(*out.tower, cell));
  }
  out.matrix = GeneratorMatrix::make(*out.tower, static_cast<int>(rows.array.size()),
                                     static_cast<int>(n), std::move(entries));
  return out;
}

AbelianCodeSpec abelian_from_config(const ConfigDoc& doc) {
  AbelianCodeSpec spec;
  spec.p = static_cast<int>(require_int(doc.require("field", "p"), "field.p"));
  spec.e = 1;
  if (const ConfigValue* e = doc.find("field", "e")) spec.e = static_cast<int>(require_int(*e, "field.e"));
  for (int n : int_list(doc.require("group", "orders"), "group.orders"))
    spec.group.push_back(static_cast<uint64_t>(n));
  const ConfigValue& nz = doc.require("code", "nonzeros");
  if (nz.type != ConfigValue::Type::Array)
    fail(ErrorCode::ParseError, "code.nonzeros must be an array of tuples");
  for (const ConfigValue& tuple : nz.array) {
    std::vector<uint64_t> s;
    if (tuple.type == ConfigValue::Type::Integer) {
      s.push_back(static_cast<uint64_t>(tuple.integer));
    } else {
      for (int x : int_list(tuple, "code.nonzeros entry")) s.push_back(static_cast<uint64_t>(x));
    }
    spec.nonzeros.push_back(std::move(s));
  }
  return spec;
}

LoadedPolynomial polynomial_from_config(const ConfigDoc& doc, uint64_t table_limit) {
  std::shared_ptr<FieldTower> tower = tower_from_config(doc, table_limit);
  const int k = static_cast<int>(require_int(doc.require("poly", "k"), "poly.k"));
  const ConfigValue& terms = doc.require("poly", "terms");
  if (terms.type != ConfigValue::Type::Array)
    fail(ErrorCode::ParseError, "poly.terms must be an array of [coefficient, exponents] pairs");
  std::vector<std::pair<std::vector<uint64_t>, FieldElement>> parsed;
  for (const ConfigValue& term : terms.array) {
    if (term.type != ConfigValue::Type::Array || term.array.size() != 2)
      fail(ErrorCode::ParseError,
           "each term must be [coefficient, exponents] (line " + std::to_string(term.line) + ")");
    const FieldElement coeff = parse_element(*tower, term.array[0]);
    std::vector<uint64_t> exps;
    if (term.array[1].type != ConfigValue::Type::Array)
      fail(ErrorCode::ParseError, "term exponents must be an array (line " +
                                      std::to_string(term.array[1].line) + ")");
    for (const ConfigValue& x : term.array[1].array)
      exps.push_back(static_cast<uint64_t>(require_int(x, "exponent")));
    parsed.emplace_back(std::move(exps), coeff);
  }
  LoadedPolynomial out{tower, Polynomial::make(*tower, k, std::move(parsed))};
  return out;
}

}  // namespace tracediv
