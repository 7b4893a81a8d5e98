#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "omlprob/lattice.hpp"

namespace omlprob {

using Json = nlohmann::ordered_json;

/// Malformed input file: bad JSON, unknown or missing keys, wrong value types.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lattice file schema:
///   {"elements": [...], "leq" | "covers": [[x, y], ...],
///    "comp": {"a": "a'", ...}, "bot": "0", "top": "1"}
/// Unknown keys are rejected.
RawLattice lattice_from_json(const Json& j);
Json lattice_to_json(const Oml& l);

RawLattice parse_lattice(std::string_view text);
Oml load_lattice(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace omlprob
