#include "config.hpp"

#include <fstream>
#include <sstream>

namespace toricfano::cli {

using nlohmann::json;

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& require(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(at(path, key), "missing field");
  return *it;
}

const json& require_array(const json& v, const std::string& path) {
  if (!v.is_array()) throw ConfigError(path, "expected an array");
  return v;
}

long long as_integer(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw ConfigError(path, "expected an integer");
  return v.get<long long>();
}

Rational as_rational(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const InputError& e) {
      throw ConfigError(path, e.what());
    }
  }
  throw ConfigError(path, "expected an integer or a \"p/q\" string");
}

RationalVector as_rational_vector(const json& v, const std::string& path) {
  RationalVector out;
  for (std::size_t i = 0; i < require_array(v, path).size(); ++i) out.push_back(as_rational(v[i], at(path, i)));
  return out;
}

std::vector<RationalVector> as_rational_rows(const json& v, const std::string& path) {
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < require_array(v, path).size(); ++i) rows.push_back(as_rational_vector(v[i], at(path, i)));
  return rows;
}

FiberConfig parse_fiber(const json& v, const std::string& path) {
  const auto& kind_v = require(v, "kind", path);
  if (!kind_v.is_string()) throw ConfigError(at(path, "kind"), "expected a string");
  const auto kind = kind_v.get<std::string>();
  FiberConfig fiber;
  if (kind == "projective_space") {
    const auto m = as_integer(require(v, "dim", path), at(path, "dim"));
    if (m < 1) throw ConfigError(at(path, "dim"), "must be at least 1");
    fiber.fan = projective_space(static_cast<std::size_t>(m));
    fiber.projective_dim = static_cast<std::size_t>(m);
    fiber.description = "CP^" + std::to_string(m);
  } else if (kind == "fan") {
    const auto& rays = require_array(require(v, "rays", path), at(path, "rays"));
    const auto& cones = require_array(require(v, "max_cones", path), at(path, "max_cones"));
    if (v.contains("dim"))
      fiber.fan.dim = static_cast<std::size_t>(as_integer(v["dim"], at(path, "dim")));
    else if (!rays.empty())
      fiber.fan.dim = require_array(rays[0], at(at(path, "rays"), 0)).size();
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const auto rp = at(at(path, "rays"), i);
      LatticeVector ray;
      for (std::size_t j = 0; j < require_array(rays[i], rp).size(); ++j)
        ray.push_back(as_integer(rays[i][j], at(rp, j)));
      fiber.fan.rays.push_back(std::move(ray));
    }
    for (std::size_t i = 0; i < cones.size(); ++i) {
      const auto cp = at(at(path, "max_cones"), i);
      std::vector<std::size_t> cone;
      for (std::size_t j = 0; j < require_array(cones[i], cp).size(); ++j) {
        const auto idx = as_integer(cones[i][j], at(cp, j));
        if (idx < 0 || static_cast<std::size_t>(idx) >= rays.size())
          throw ConfigError(at(cp, j), "ray index " + std::to_string(idx) + " out of range 0.." +
                                           std::to_string(static_cast<long long>(rays.size()) - 1));
        cone.push_back(static_cast<std::size_t>(idx));
      }
      fiber.fan.max_cones.push_back(std::move(cone));
    }
    try {
      validate_fan(fiber.fan);
    } catch (const InputError& e) {
      throw ConfigError(path, e.what());
    }
    fiber.description = "fan with " + std::to_string(fiber.fan.rays.size()) + " rays";
  } else if (kind == "product") {
    const auto& parts = require_array(require(v, "parts", path), at(path, "parts"));
    fiber.fan = point_fan();
    fiber.description = parts.empty() ? "point" : "";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto part = parse_fiber(parts[i], at(at(path, "parts"), i));
      fiber.fan = product(fiber.fan, part.fan);
      fiber.description += (i ? " x " : "") + part.description;
      if (parts.size() == 1) fiber.projective_dim = part.projective_dim;
    }
  } else {
    throw ConfigError(at(path, "kind"), "unknown fiber kind \"" + kind + "\" (projective_space, fan, product)");
  }
  return fiber;
}

ScanConfig parse_scan(const json& v, const std::string& path) {
  const auto& mode = require(v, "mode", path);
  ScanConfig scan;
  if (mode == "scalar") {
    scan.mode = ScanConfig::Mode::scalar;
    scan.from = as_integer(require(v, "from", path), at(path, "from"));
    scan.to = as_integer(require(v, "to", path), at(path, "to"));
  } else if (mode == "box") {
    scan.mode = ScanConfig::Mode::box;
    scan.bound = as_integer(require(v, "bound", path), at(path, "bound"));
    if (scan.bound < 0) throw ConfigError(at(path, "bound"), "must be nonnegative");
  } else {
    throw ConfigError(at(path, "mode"), "expected \"scalar\" or \"box\"");
  }
  return scan;
}

}  // namespace

BundleConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");
  BundleConfig config;
  config.raw = doc;
  const auto& base = require(doc, "base", "");
  const auto& comps = require_array(require(base, "components", "base"), "base.components");
  if (comps.empty()) throw ConfigError("base.components", "needs at least one component");
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto p = at("base.components", i);
    const auto& letter = require(comps[i], "letter", p);
    if (!letter.is_string()) throw ConfigError(at(p, "letter"), "expected a string");
    const auto rank = as_integer(require(comps[i], "rank", p), at(p, "rank"));
    try {
      config.components.push_back(SimpleType::parse(letter.get<std::string>() + std::to_string(rank)));
    } catch (const InputError& e) {
      throw ConfigError(p, e.what());
    }
  }
  std::size_t total_rank = 0;
  for (const auto& t : config.components) total_rank += static_cast<std::size_t>(t.rank);
  const auto& crossed = require_array(require(base, "crossed", "base"), "base.crossed");
  for (std::size_t i = 0; i < crossed.size(); ++i) {
    const auto node = as_integer(crossed[i], at("base.crossed", i));
    if (node < 1 || static_cast<std::size_t>(node) > total_rank)
      throw ConfigError(at("base.crossed", i),
                        "node " + std::to_string(node) + " out of range 1.." + std::to_string(total_rank));
    config.crossed.push_back(static_cast<std::size_t>(node - 1));
  }
  if (doc.contains("zk_basis")) config.zk_basis = as_rational_rows(doc["zk_basis"], "zk_basis");
  if (doc.contains("fiber")) config.fiber = parse_fiber(doc["fiber"], "fiber");
  if (doc.contains("tau")) {
    const auto rows = as_rational_rows(doc["tau"], "tau");
    try {
      config.tau = RationalMatrix::from_rows(rows);
    } catch (const InputError& e) {
      throw ConfigError("tau", e.what());
    }
    const std::size_t k = config.zk_basis ? config.zk_basis->size() : config.crossed.size();
    if (!rows.empty() && config.tau->cols() != k)
      throw ConfigError("tau", "has " + std::to_string(config.tau->cols()) + " columns, expected " +
                                   std::to_string(k) + " (one per z(k) basis vector)");
    if (config.fiber && config.tau->rows() != config.fiber->fan.dim)
      throw ConfigError("tau", "has " + std::to_string(config.tau->rows()) + " rows, expected fiber rank " +
                                   std::to_string(config.fiber->fan.dim));
  }
  if (doc.contains("cocharacter_basis"))
    config.cocharacter_basis = as_rational_rows(doc["cocharacter_basis"], "cocharacter_basis");
  if (doc.contains("scan")) config.scan = parse_scan(doc["scan"], "scan");
  return config;
}

BundleConfig parse_config_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("JSON parse error: ") + e.what());
  }
  return parse_config(doc);
}

BundleConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InputError("cannot open config file " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_config_text(buf.str());
  } catch (const ConfigError& e) {
    throw ConfigError(file.string() + (e.path().empty() ? "" : ": " + e.path()),
                      std::string(e.what()).substr(e.path().empty() ? 0 : e.path().size() + 2));
  }
}

FlagManifold build_flag(const BundleConfig& config) {
  return FlagManifold::build(RootSystem::build(config.components), Painting{config.crossed});
}

VectorH resolve_zk_vector(const FlagManifold& flag, const RationalVector& coords, const std::string& path) {
  const std::size_t rank = flag.root_system().rank();
  VectorH h;
  if (coords.size() == rank)
    h = VectorH{coords};
  else if (coords.size() == flag.zk_dim())
    h = flag.from_crossed_coords(coords);
  else
    throw ConfigError(path, "vector has length " + std::to_string(coords.size()) + ", expected " +
                                std::to_string(rank) + " (evaluation coordinates) or " +
                                std::to_string(flag.zk_dim()) + " (crossed-node coordinates)");
  if (!flag.in_zk(h)) throw ConfigError(path, "vector is not in z(k): uncrossed evaluations must vanish");
  return h;
}

std::optional<std::vector<VectorH>> resolve_zk_basis(const FlagManifold& flag,
                                                     const std::optional<std::vector<RationalVector>>& vectors,
                                                     const std::string& path) {
  if (!vectors) return std::nullopt;
  std::vector<VectorH> out;
  for (std::size_t i = 0; i < vectors->size(); ++i)
    out.push_back(resolve_zk_vector(flag, (*vectors)[i], at(path, i)));
  return out;
}

}  // namespace toricfano::cli
