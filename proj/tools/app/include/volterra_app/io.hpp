#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <volterra/volterra.hpp>

namespace volterra::app {

using json = nlohmann::ordered_json;

/// Unreadable or malformed user input (exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a JSON operator file: {name, dim, g: [{i, j, freq, re, im}], b: [{j, freq, re, im}], V: [{freq, re, im}]}.
OperatorSpec load_operator_spec(const std::filesystem::path& path);
OperatorSpec parse_operator_spec(const json& doc, const std::string& origin);

/// Every *.json operator in `dir`, sorted by file name.
std::vector<OperatorSpec> load_corpus(const std::filesystem::path& dir);

json to_json(const TrigPolynomial& p);
json to_json(const OperatorSpec& op);
json to_json(const ParabolicSymbol& q);

/// Compact text such as "0.5e^{i(1)x} + 0.5e^{i(-1)x}".
std::string format_trig(const TrigPolynomial& p);

}  // namespace volterra::app
