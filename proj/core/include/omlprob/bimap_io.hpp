#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "omlprob/bimap.hpp"
#include "omlprob/lattice_io.hpp"

namespace omlprob {

/// Map file schema:
///   {"lattice": "<lattice file>", "values": {"x|y": "p/q", ...}}
/// Every ordered pair must be present. Unknown keys are rejected.
BiMap bimap_from_json(std::shared_ptr<const Oml> lattice, const Json& j);
Json bimap_to_json(const BiMap& m, const std::string& lattice_ref);

/// The "lattice" entry of a map file, if any.
std::optional<std::string> map_lattice_ref(const Json& j);

Json parse_json(std::string_view text);

struct LoadedMap {
  std::shared_ptr<const Oml> lattice;
  BiMap map;
};

/// Reads a map file. Without `lattice`, the file's "lattice" entry is loaded,
/// resolved relative to the map file's directory.
LoadedMap load_bimap(const std::filesystem::path& path,
                     std::shared_ptr<const Oml> lattice = nullptr);

}  // namespace omlprob
