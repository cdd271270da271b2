#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricfano/errors.hpp"
#include "toricfano/flagbase.hpp"
#include "toricfano/linalg.hpp"
#include "toricfano/rootsys.hpp"
#include "toricfano/toricfiber.hpp"

namespace toricfano::cli {

/// Input error tied to a location in the config document, e.g.
/// "base.crossed[0]: node 7 out of range 1..2".
class ConfigError : public InputError {
 public:
  ConfigError(const std::string& path, const std::string& message)
      : InputError(path.empty() ? message : path + ": " + message), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct FiberConfig {
  Fan fan;
  /// Set when the fiber was declared as projective_space (numerical oracle).
  std::optional<std::size_t> projective_dim;
  std::string description;
};

struct ScanConfig {
  enum class Mode { scalar, box };
  Mode mode = Mode::scalar;
  long long from = 0;  // scalar mode: k in [from, to], tau = k * base tau
  long long to = 0;
  long long bound = 0;  // box mode: entries in [-bound, bound]
};

struct BundleConfig {
  nlohmann::json raw;
  std::vector<SimpleType> components;
  std::vector<std::size_t> crossed;  // 0-based, as written
  std::optional<std::vector<RationalVector>> zk_basis;
  std::optional<FiberConfig> fiber;
  std::optional<RationalMatrix> tau;
  std::optional<std::vector<RationalVector>> cocharacter_basis;
  std::optional<ScanConfig> scan;
};

BundleConfig parse_config(const nlohmann::json& doc);
BundleConfig parse_config_text(const std::string& text);
BundleConfig load_config(const std::filesystem::path& file);

FlagManifold build_flag(const BundleConfig& config);

/// A basis vector given either in full evaluation coordinates (length =
/// rank) or in crossed-node coordinates (length = number of crossed nodes).
VectorH resolve_zk_vector(const FlagManifold& flag, const RationalVector& coords, const std::string& path);

std::optional<std::vector<VectorH>> resolve_zk_basis(const FlagManifold& flag,
                                                     const std::optional<std::vector<RationalVector>>& vectors,
                                                     const std::string& path);

}  // namespace toricfano::cli
