#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace springer {

// Data files compiled into the library from data/. Names are paths relative
// to that directory, e.g. "e8_classes.txt" or "golden/table1.json".
std::vector<std::string> embedded_file_names();
bool has_embedded_file(std::string_view name);
// Raw contents; throws DataError if absent.
std::string_view embedded_file(std::string_view name);

// Contents with the checksum header verified and stripped. Throws DataError
// if the header is missing or the hash does not match.
std::string verified_file(std::string_view name);
// Non-empty, non-comment lines of a verified file, whitespace-trimmed.
std::vector<std::string> data_records(std::string_view name);

std::uint64_t fnv1a64(std::string_view bytes);

// Splits a record on sep, keeping empty fields.
std::vector<std::string> split_fields(std::string_view record, char sep = '|');

}  // namespace springer
