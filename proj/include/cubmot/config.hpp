#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cubmot/suites.hpp"

namespace cubmot {

/// Reads a Gram matrix from JSON text: either [["p/q", ...], ...] or
/// {"gram": [[...]], "generators": [...]}. Throws Error{config}.
Matrix parse_gram_json(const std::string& text);

/// Resolves "default", "random" (seeded) or a path to a JSON Gram file.
Matrix resolve_gram(const std::string& spec, std::uint64_t seed);

/// Suite options from an optional JSON config file, then command-line
/// overrides. Every problem is reported as Error{config}.
SuiteOptions load_options(const std::optional<std::string>& config_path, const std::optional<std::string>& gram,
                          const std::optional<std::uint64_t>& seed);

}  // namespace cubmot
