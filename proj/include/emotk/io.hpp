#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace emotk::io {

/// Reads a whole file; throws IoError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Splits file contents into lines with CRLF/CR normalized to LF. A single
/// trailing newline does not produce an empty final line.
std::vector<std::string> split_lines(std::string_view contents);

std::vector<std::string> read_lines(const std::filesystem::path& path);

std::vector<std::string_view> split_tabs(std::string_view line);

/// Writes via a sibling temporary file and rename, so a failed write never
/// leaves a partial file at `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace emotk::io
