#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace oracle_forge::text {

std::string_view trim(std::string_view s);

/// Splits on every occurrence of `sep`; keeps empty pieces.
std::vector<std::string_view> split(std::string_view s, char sep);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Collapses every whitespace run (including newlines) to one space and trims.
std::string collapseSpaces(std::string_view s);

bool startsWith(std::string_view s, std::string_view prefix);
bool endsWith(std::string_view s, std::string_view suffix);

/// Number of non-overlapping occurrences of `needle` in `hay`.
std::size_t countOccurrences(std::string_view hay, std::string_view needle);

std::string readFile(const std::string& path);

/// Writes through a temporary file and rename, so readers never observe a
/// partially written artifact.
void writeFileAtomic(const std::string& path, std::string_view content);

}  // namespace oracle_forge::text
