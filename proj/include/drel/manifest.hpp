// Run manifests: every command writes one manifest.json into its output
// directory recording the resolved config, input/output digests, version
// and timestamp, so any run can be reproduced from its manifest alone.
// Digests are FNV-1a 64 (integrity bookkeeping, not cryptography).
#pragma once

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "drel/errors.hpp"

namespace drel {

inline std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string fnv1a64_hex(std::string_view data) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(data)));
  return std::string(buf);
}

inline std::string file_digest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file for digest: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return fnv1a64_hex(ss.str());
}

// UTC ISO-8601; honors SOURCE_DATE_EPOCH for reproducible outputs.
inline std::string manifest_timestamp() {
  std::time_t t;
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  } else {
    t = std::time(nullptr);
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return std::string(buf);
}

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kManifestName = "manifest.json";

struct RunManifest {
  std::string command;
  nlohmann::json config;  // all defaults materialized
  std::map<std::string, nlohmann::json> inputs;  // role -> {path, digest}
  std::map<std::string, std::string> outputs;    // file name -> digest

  void add_input(const std::string& role, const std::filesystem::path& path) {
    inputs[role] = {{"path", path.string()}, {"digest", file_digest(path)}};
  }

  void add_output(const std::filesystem::path& dir, const std::string& name) {
    outputs[name] = file_digest(dir / name);
  }

  nlohmann::json to_json() const {
    return {{"command", command},
            {"version", std::string(kToolVersion)},
            {"timestamp", manifest_timestamp()},
            {"config", config},
            {"inputs", inputs},
            {"outputs", outputs}};
  }

  void write(const std::filesystem::path& dir) const {
    std::ofstream out(dir / kManifestName, std::ios::binary);
    if (!out) throw IoError("cannot write manifest in " + dir.string());
    out << to_json().dump(2) << '\n';
  }
};

// Recomputes the digest of every output named in a directory's manifest.
inline bool verify_manifest(const std::filesystem::path& dir) {
  std::ifstream in(dir / kManifestName, std::ios::binary);
  if (!in) throw IoError("no manifest in " + dir.string());
  nlohmann::json j = nlohmann::json::parse(in);
  for (const auto& [name, digest] : j.at("outputs").items()) {
    if (file_digest(dir / name) != digest.get<std::string>()) return false;
  }
  return true;
}

// Guard against concurrent runs writing into one output directory. The lock
// is a directory created atomically and removed on destruction.
class DirLock {
 public:
  explicit DirLock(const std::filesystem::path& out_dir)
      : lock_path_(out_dir / ".drel.lock") {
    std::error_code ec;
    if (!std::filesystem::create_directory(lock_path_, ec) || ec) {
      throw ValidationError("output directory is locked by another run: " + out_dir.string());
    }
  }
  ~DirLock() {
    std::error_code ec;
    std::filesystem::remove(lock_path_, ec);
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  std::filesystem::path lock_path_;
};

}  // namespace drel
