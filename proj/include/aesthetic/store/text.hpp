#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

// Small text helpers shared by the CSV and log readers.
namespace aesthetic::store {

/// Splits on '\n', dropping a trailing '\r' from each line and a final empty line.
std::vector<std::string_view> splitLines(std::string_view text);
/// Plain comma split; quoting is not supported.
std::vector<std::string_view> splitCsvLine(std::string_view line);

double parseDouble(std::string_view cell, std::size_t line, std::string_view column);
std::uint64_t parseUnsigned(std::string_view cell, std::size_t line, std::string_view column);

std::string readTextFile(const std::filesystem::path& path);
/// Writes through a temporary sibling and renames it into place.
void writeTextFile(const std::filesystem::path& path, std::string_view contents);

}  // namespace aesthetic::store
