#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tracediv/abelian.hpp"
#include "tracediv/artin_schreier.hpp"
#include "tracediv/field_tower.hpp"
#include "tracediv/trace_code.hpp"

namespace tracediv {

// Minimal TOML-style document: [section] headers and key = value lines where
// value is an integer, a "string", or an array (possibly nested, possibly
// spanning lines). Enough for hand-written field/matrix/code configs.
struct ConfigValue {
  enum class Type { Integer, String, Array };
  Type type = Type::Integer;
  long long integer = 0;
  std::string string;
  std::vector<ConfigValue> array;
  int line = 0, col = 0;
};

using ConfigSection = std::map<std::string, ConfigValue>;

struct ConfigDoc {
  std::map<std::string, ConfigSection> sections;

  const ConfigValue* find(const std::string& section, const std::string& key) const;
  const ConfigValue& require(const std::string& section, const std::string& key) const;
};

ConfigDoc parse_config(const std::string& text);
ConfigDoc parse_config_file(const std::string& path);

struct FieldSpec {
  int p = 0, e = 1, m = 1;
  std::optional<std::vector<int>> poly;  // constant first
};

FieldSpec field_from_config(const ConfigDoc& doc);

// Element literal: `0`, `a^t` (power of the primitive element), a bare
// integer (prime-subfield label), or a coefficient list [c0, c1, ...].
FieldElement parse_element(const FieldTower& tower, const ConfigValue& v);

struct LoadedMatrix {
  std::shared_ptr<FieldTower> tower;
  GeneratorMatrix matrix;
};

LoadedMatrix matrix_from_config(const ConfigDoc& doc, uint64_t table_limit);

AbelianCodeSpec abelian_from_config(const ConfigDoc& doc);

struct LoadedPolynomial {
  std::shared_ptr<FieldTower> tower;
  Polynomial poly;
};

LoadedPolynomial polynomial_from_config(const ConfigDoc& doc, uint64_t table_limit);

std::shared_ptr<FieldTower> tower_from_config(const ConfigDoc& doc, uint64_t table_limit);

}  // namespace tracediv
