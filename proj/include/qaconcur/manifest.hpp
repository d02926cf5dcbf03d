// Copyright 2026 The qaconcur Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "qaconcur/io.hpp"

namespace qaconcur {

inline constexpr char kToolName[] = "qaconcur";
inline constexpr char kToolVersion[] = "0.1.0";

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int digest_len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw std::runtime_error("sha256: EVP_MD_CTX_new failed");
  const bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
                  EVP_DigestUpdate(ctx, bytes.data(), bytes.size()) == 1 &&
                  EVP_DigestFinal_ex(ctx, digest, &digest_len) == 1;
  EVP_MD_CTX_free(ctx);
  if (!ok) throw std::runtime_error("sha256: digest computation failed");
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * digest_len);
  for (unsigned int i = 0; i < digest_len; ++i) {
    hex += kHex[digest[i] >> 4];
    hex += kHex[digest[i] & 0x0F];
  }
  return hex;
}

struct FileDigest {
  std::string path;
  std::string sha256;
};

inline FileDigest file_digest(const std::string& path) {
  return FileDigest{path, sha256_hex(read_file(path))};
}

// A reproducibility record written next to generated artifacts. Content is
// fully determined by the invocation (no timestamps, no host details), so
// re-running a command must reproduce the manifest byte for byte.
struct RunManifest {
  std::string command;                                     // e.g. "generate fuzzypm"
  std::vector<std::pair<std::string, std::string>> params; // flag -> value
  std::vector<FileDigest> inputs;
  std::vector<FileDigest> outputs;

  void add_input(const std::string& path) { inputs.push_back(file_digest(path)); }
  void add_output(const std::string& path) { outputs.push_back(file_digest(path)); }

  std::string to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["command"] = command;
    j["params"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params) j["params"][key] = value;
    j["inputs"] = nlohmann::ordered_json::array();
    for (const FileDigest& f : inputs) {
      j["inputs"].push_back({{"path", f.path}, {"sha256", f.sha256}});
    }
    j["outputs"] = nlohmann::ordered_json::array();
    for (const FileDigest& f : outputs) {
      j["outputs"].push_back({{"path", f.path}, {"sha256", f.sha256}});
    }
    return j.dump(2) + "\n";
  }
};

inline void write_manifest(const RunManifest& manifest,
                           const std::string& path) {
  write_file(path, manifest.to_json());
}

}  // namespace qaconcur
