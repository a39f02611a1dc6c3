#include "springer/data.hpp"

#include <algorithm>
#include <cstdio>

#include "springer/error.hpp"

namespace springer {

namespace detail {
struct EmbeddedFile {
  const char* name;
  const char* contents;
  std::size_t size;
};
extern const EmbeddedFile embedded_files[];
extern const std::size_t embedded_file_count;
}  // namespace detail

namespace {

constexpr std::string_view kHeader = "# springer-data v1 fnv1a64=";

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) ++a;
  while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<std::string> embedded_file_names() {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < detail::embedded_file_count; ++i)
    out.emplace_back(detail::embedded_files[i].name);
  std::sort(out.begin(), out.end());
  return out;
}

bool has_embedded_file(std::string_view name) {
  for (std::size_t i = 0; i < detail::embedded_file_count; ++i)
    if (name == detail::embedded_files[i].name) return true;
  return false;
}

std::string_view embedded_file(std::string_view name) {
  for (std::size_t i = 0; i < detail::embedded_file_count; ++i)
    if (name == detail::embedded_files[i].name)
      return {detail::embedded_files[i].contents, detail::embedded_files[i].size};
  throw DataError("no embedded data file named " + std::string(name));
}

std::string verified_file(std::string_view name) {
  const std::string_view text = embedded_file(name);
  const std::size_t eol = text.find('\n');
  const std::string_view first = text.substr(0, eol);
  if (first.substr(0, kHeader.size()) != kHeader)
    throw DataError(std::string(name) + ": missing checksum header");
  const std::string_view body = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(body)));
  if (trim(first.substr(kHeader.size())) != buf)
    throw DataError(std::string(name) + ": checksum mismatch");
  return std::string(body);
}

std::vector<std::string> data_records(std::string_view name) {
  const std::string body = verified_file(name);
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t eol = body.find('\n', pos);
    if (eol == std::string::npos) eol = body.size();
    std::string line = trim(std::string_view(body).substr(pos, eol - pos));
    if (!line.empty() && line[0] != '#') out.push_back(std::move(line));
    pos = eol + 1;
  }
  return out;
}

std::vector<std::string> split_fields(std::string_view record, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = record.find(sep, start);
    out.emplace_back(record.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

}  // namespace springer
