#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "orlicz/measure.hpp"
#include "orlicz/multipliers.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/young.hpp"

namespace orlicz::io {

using nlohmann::json;

/// Malformed input. The message starts with the offending field path.
class InputError : public std::invalid_argument {
 public:
  InputError(const std::string& field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// A JSON number, or the string "inf".
json to_json(ExtReal x);
ExtReal ext_from_json(const json& j, const std::string& field);

json to_json(const YoungFunction& phi);
YoungFunction young_from_json(const json& j, const std::string& field = "young");

/// {"atoms":[{"weight":w,"value":v}, ...]}
json to_json(const SimpleFunction& f);
SimpleFunction simple_from_json(const json& j, const std::string& field = "data");

/// One "weight,value" row per atom; blank lines, '#' comments, and a
/// non-numeric header row are skipped.
SimpleFunction simple_from_csv(const std::string& text, const std::string& field = "data");

json to_json(const NormResult& r);
json to_json(const LogGrid& g);
LogGrid grid_from_json(const json& j, const std::string& field = "grid");

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
json load_json_arg(const std::string& arg, const std::string& field);
/// Inline JSON, a .csv file, or a JSON file.
SimpleFunction load_data_arg(const std::string& arg, const std::string& field = "data");

std::string read_file(const std::string& path, const std::string& field);

}  // namespace orlicz::io
