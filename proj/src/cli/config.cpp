#include <fstream>

#include "fvqsd/chain_io.hpp"
#include "fvqsd/cli.hpp"
#include "fvqsd/error.hpp"

namespace fvqsd::cli {
namespace {

[[noreturn]] void parse_error(const std::string& message) { throw Error(ErrorCode::ConfigParseError, message); }

nlohmann::json parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

}  // namespace

ExperimentConfig load_config(const std::filesystem::path& path) {
  const nlohmann::json doc = parse_file(path);
  if (!doc.is_object()) parse_error("config: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "kind" && key != "chain" && key != "params" && key != "seed" && key != "output_dir") {
      parse_error("config: unknown field '" + key + "'");
    }
  }

  ExperimentConfig config;
  if (!doc.contains("kind") || !doc.at("kind").is_string()) parse_error("kind: expected a string");
  config.kind = doc.at("kind").get<std::string>();
  if (std::find(kExperimentKinds.begin(), kExperimentKinds.end(), config.kind) == kExperimentKinds.end()) {
    parse_error("kind: unknown experiment kind '" + config.kind + "'");
  }

  if (!doc.contains("chain")) parse_error("chain: missing field");
  const auto& chain = doc.at("chain");
  if (chain.is_string()) {
    std::filesystem::path chain_path = chain.get<std::string>();
    if (chain_path.is_relative()) chain_path = path.parent_path() / chain_path;
    config.chain = parse_file(chain_path);
  } else if (chain.is_object()) {
    config.chain = chain;
  } else {
    parse_error("chain: expected a file path or an inline chain object");
  }

  if (doc.contains("params")) {
    if (!doc.at("params").is_object()) parse_error("params: expected an object");
    config.params = doc.at("params");
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) parse_error("seed: expected a nonnegative integer");
    config.seed = doc.at("seed").get<std::uint64_t>();
  }
  if (doc.contains("output_dir")) {
    if (!doc.at("output_dir").is_string()) parse_error("output_dir: expected a string");
    std::filesystem::path out = doc.at("output_dir").get<std::string>();
    config.output_dir = out.is_relative() ? path.parent_path() / out : out;
  }
  return config;
}

Params::Params(const nlohmann::json& block, const AbsorbingChain& chain) : block_(block), chain_(chain) {}

const nlohmann::json* Params::lookup(const std::string& key) {
  seen_.insert(key);
  return block_.contains(key) ? &block_.at(key) : nullptr;
}

double Params::number(const std::string& key, double fallback) {
  const auto* v = lookup(key);
  double value = fallback;
  if (v) {
    if (!v->is_number()) parse_error("params." + key + ": expected a number");
    value = v->get<double>();
  }
  resolved_[key] = value;
  return value;
}

std::optional<double> Params::optional_number(const std::string& key) {
  const auto* v = lookup(key);
  if (!v) return std::nullopt;
  if (!v->is_number()) parse_error("params." + key + ": expected a number");
  resolved_[key] = v->get<double>();
  return v->get<double>();
}

std::size_t Params::count(const std::string& key, std::size_t fallback) {
  const auto* v = lookup(key);
  std::size_t value = fallback;
  if (v) {
    if (!v->is_number_unsigned()) parse_error("params." + key + ": expected a nonnegative integer");
    value = v->get<std::size_t>();
  }
  resolved_[key] = value;
  return value;
}

std::vector<double> Params::numbers(const std::string& key, std::vector<double> fallback) {
  const auto* v = lookup(key);
  std::vector<double> value = std::move(fallback);
  if (v) {
    if (!v->is_array() || v->empty()) parse_error("params." + key + ": expected a nonempty array of numbers");
    value.clear();
    for (const auto& e : *v) {
      if (!e.is_number()) parse_error("params." + key + ": expected a nonempty array of numbers");
      value.push_back(e.get<double>());
    }
  }
  resolved_[key] = value;
  return value;
}

std::vector<std::size_t> Params::counts(const std::string& key, std::vector<std::size_t> fallback) {
  const auto* v = lookup(key);
  std::vector<std::size_t> value = std::move(fallback);
  if (v) {
    if (!v->is_array() || v->empty()) parse_error("params." + key + ": expected a nonempty array of integers");
    value.clear();
    for (const auto& e : *v) {
      if (!e.is_number_unsigned()) parse_error("params." + key + ": expected a nonempty array of integers");
      value.push_back(e.get<std::size_t>());
    }
  }
  resolved_[key] = value;
  return value;
}

std::size_t Params::site_from_json(const nlohmann::json& v, const std::string& where) const {
  std::string name;
  if (v.is_string()) {
    name = v.get<std::string>();
  } else if (v.is_number_integer()) {
    name = std::to_string(v.get<long long>());
  } else {
    parse_error(where + ": expected a state name");
  }
  const std::size_t x = chain_.index_of(name);
  if (x >= chain_.size()) parse_error(where + ": unknown state '" + name + "'");
  return x;
}

std::size_t Params::site(const std::string& key, std::size_t fallback) {
  const auto* v = lookup(key);
  const std::size_t x = v ? site_from_json(*v, "params." + key) : fallback;
  resolved_[key] = chain_.states()[x];
  return x;
}

std::vector<std::size_t> Params::sites(const std::string& key, std::vector<std::size_t> fallback) {
  const auto* v = lookup(key);
  std::vector<std::size_t> value = std::move(fallback);
  if (v) {
    if (!v->is_array() || v->empty()) parse_error("params." + key + ": expected a nonempty array of states");
    value.clear();
    for (const auto& e : *v) value.push_back(site_from_json(e, "params." + key));
  }
  nlohmann::json names = nlohmann::json::array();
  for (std::size_t x : value) names.push_back(chain_.states()[x]);
  resolved_[key] = names;
  return value;
}

ProbabilityVector Params::profile_from_json(const nlohmann::json& v, const std::string& where) const {
  const std::size_t n = chain_.size();
  try {
    if (v.is_string() && v.get<std::string>() == "uniform") return ProbabilityVector::uniform(n);
    if (v.is_string()) return ProbabilityVector::delta(n, site_from_json(v, where));
    std::vector<double> w(n, 0.0);
    if (v.is_array()) {
      if (v.size() != n) parse_error(where + ": expected " + std::to_string(n) + " weights");
      for (std::size_t x = 0; x < n; ++x) {
        if (!v[x].is_number()) parse_error(where + ": weights must be numbers");
        w[x] = v[x].get<double>();
      }
    } else if (v.is_object()) {
      for (const auto& [name, weight] : v.items()) {
        if (!weight.is_number()) parse_error(where + "." + name + ": expected a number");
        w[site_from_json(nlohmann::json(name), where)] = weight.get<double>();
      }
    } else {
      parse_error(where + ": expected \"uniform\", a state name, an array or an object of weights");
    }
    return ProbabilityVector::normalized(std::move(w));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ConfigParseError) throw;
    parse_error(where + ": " + e.what());
  }
}

ProbabilityVector Params::profile(const std::string& key, const ProbabilityVector& fallback) {
  const auto* v = lookup(key);
  ProbabilityVector value = v ? profile_from_json(*v, "params." + key) : fallback;
  resolved_[key] = std::vector<double>(value.weights().begin(), value.weights().end());
  return value;
}

std::vector<ProbabilityVector> Params::profiles(const std::string& key, std::vector<ProbabilityVector> fallback) {
  const auto* v = lookup(key);
  std::vector<ProbabilityVector> value = std::move(fallback);
  if (v) {
    if (!v->is_array() || v->empty()) parse_error("params." + key + ": expected a nonempty array of profiles");
    value.clear();
    for (std::size_t k = 0; k < v->size(); ++k) {
      value.push_back(profile_from_json((*v)[k], "params." + key + "[" + std::to_string(k) + "]"));
    }
  }
  nlohmann::json out = nlohmann::json::array();
  for (const auto& p : value) out.push_back(std::vector<double>(p.weights().begin(), p.weights().end()));
  resolved_[key] = out;
  return value;
}

std::vector<std::pair<std::size_t, std::size_t>> Params::site_pairs(
    const std::string& key, std::vector<std::pair<std::size_t, std::size_t>> fallback) {
  const auto* v = lookup(key);
  auto value = std::move(fallback);
  if (v) {
    if (!v->is_array() || v->empty()) parse_error("params." + key + ": expected a nonempty array of [x, y] pairs");
    value.clear();
    for (const auto& e : *v) {
      if (!e.is_array() || e.size() != 2) parse_error("params." + key + ": expected [x, y] pairs");
      value.emplace_back(site_from_json(e[0], "params." + key), site_from_json(e[1], "params." + key));
    }
  }
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [x, y] : value) out.push_back({chain_.states()[x], chain_.states()[y]});
  resolved_[key] = out;
  return value;
}

void Params::finish() const {
  for (const auto& [key, value] : block_.items()) {
    if (!seen_.contains(key)) parse_error("params." + key + ": unknown field");
  }
}

}  // namespace fvqsd::cli
