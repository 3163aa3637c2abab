// Copyright 2026 The rankdiv Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace rankdiv {

// Shortest round-trip decimal form (std::to_chars); deterministic.
std::string format_double(double v);

// Write via temp file + rename so readers never observe partial files.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

// Minimal CSV: no quoting (the schemas here never embed commas except token
// surfaces, which are emitted last on their row).
std::vector<std::string> split_csv_line(std::string_view line);
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path,
                                               bool skip_header = true);

// FNV-1a over bytes; used for cell checksums in run manifests.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace rankdiv
