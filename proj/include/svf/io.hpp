#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "svf/reconstruct.hpp"
#include "svf/svf_model.hpp"

namespace svf {

/// {"a", "b", "nodes": [...], "values": [[[lo, hi], ...], ...]}
[[nodiscard]] std::string sample_set_to_json(const SampleSet& samples);
/// Throws DomainError on malformed or inconsistent input.
[[nodiscard]] SampleSet sample_set_from_json(std::string_view text);

[[nodiscard]] std::string approximant_to_json(const Approximant& approx);
[[nodiscard]] Approximant approximant_from_json(std::string_view text);

/// Writes to a temporary file next to `path`, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
[[nodiscard]] std::string read_file(const std::filesystem::path& path);

}  // namespace svf
