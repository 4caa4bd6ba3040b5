#pragma once

#include <filesystem>

#include <json.hpp>

#include "fvqsd/chain.hpp"

namespace fvqsd {

/// Reads {"states": [...], "rates": [[...]], "absorption": [...]}. Unknown
/// fields and wrong types raise ConfigParseError naming the field.
RawChain raw_chain_from_json(const nlohmann::json& doc);

/// Parses a chain file. Syntax errors carry the line and column.
RawChain read_chain_file(const std::filesystem::path& path);

/// Canonical JSON form of a validated chain (diagonal written as zero).
nlohmann::json chain_to_json(const AbsorbingChain& chain);

}  // namespace fvqsd
