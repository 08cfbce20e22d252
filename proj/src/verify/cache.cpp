#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fibcube/errors.hpp"
#include "fibcube/verify.hpp"

namespace fibcube::verify {

Cache::Cache(std::filesystem::path path, std::string code_version)
    : path_(std::move(path)), code_version_(std::move(code_version)) {
  std::ifstream in(path_);
  if (!in) return;  // cold cache
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json record = Json::parse(line, nullptr, /*allow_exceptions=*/false);
    const bool well_formed = record.is_object() &&
                             record.contains("schema_version") &&
                             record.contains("key") && record.contains("value") &&
                             record.contains("code_version") &&
                             record["key"].is_string();
    if (!well_formed) {
      std::cerr << "fibcube: ignoring unreadable cache record at "
                << path_.string() << ':' << line_no << '\n';
      ++ignored_;
      continue;
    }
    if (record["schema_version"] != kSchemaVersion ||
        record["code_version"] != code_version_) {
      ++ignored_;
      continue;
    }
    entries_[record["key"].get<std::string>()] = std::move(record["value"]);
  }
}

std::optional<std::filesystem::path> Cache::path_from_env() {
  const char* env = std::getenv("FIBCUBE_CACHE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

std::string Cache::key(const ClaimPoint& pt, std::string_view name) {
  std::ostringstream os;
  os << (pt.family ? to_string(*pt.family) : "-") << '/' << pt.p << '/'
     << pt.r << '/' << pt.n << '/' << name;
  return os.str();
}

std::optional<Json> Cache::get(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void Cache::put(const std::string& key, Json value) {
  std::unique_lock lock(mutex_);
  entries_[key] = std::move(value);
  dirty_ = true;
}

std::size_t Cache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void Cache::flush() {
  std::unique_lock lock(mutex_);
  if (!dirty_) return;
  std::filesystem::path tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot write cache file " + tmp.string());
    for (const auto& [key, value] : entries_) {
      Json record = {{"schema_version", kSchemaVersion},
                     {"key", key},
                     {"value", value},
                     {"code_version", code_version_}};
      out << record.dump() << '\n';
    }
    if (!out) throw IoError("cannot write cache file " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path_, ec);
  if (ec) {
    throw IoError("cannot replace cache file " + path_.string() + ": " +
                  ec.message());
  }
  dirty_ = false;
}

}  // namespace fibcube::verify
