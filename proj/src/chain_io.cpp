#include "fvqsd/chain_io.hpp"

#include <fstream>
#include <sstream>

#include "fvqsd/error.hpp"

namespace fvqsd {
namespace {

double as_number(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number()) throw Error(ErrorCode::ConfigParseError, field + ": expected a number");
  return v.get<double>();
}

}  // namespace

RawChain raw_chain_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ConfigParseError, "chain: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "states" && key != "rates" && key != "absorption") {
      throw Error(ErrorCode::ConfigParseError, "chain: unknown field '" + key + "'");
    }
  }
  for (const char* required : {"states", "rates", "absorption"}) {
    if (!doc.contains(required)) {
      throw Error(ErrorCode::ConfigParseError, std::string("chain: missing field '") + required + "'");
    }
  }

  RawChain raw;
  const auto& states = doc.at("states");
  if (!states.is_array()) throw Error(ErrorCode::ConfigParseError, "states: expected an array");
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto& s = states[i];
    if (s.is_string()) {
      raw.states.push_back(s.get<std::string>());
    } else if (s.is_number_integer()) {
      raw.states.push_back(std::to_string(s.get<long long>()));
    } else {
      throw Error(ErrorCode::ConfigParseError,
                  "states[" + std::to_string(i) + "]: expected a string or integer");
    }
  }

  const auto& rates = doc.at("rates");
  if (!rates.is_array()) throw Error(ErrorCode::ConfigParseError, "rates: expected an array of rows");
  for (std::size_t x = 0; x < rates.size(); ++x) {
    const std::string where = "rates[" + std::to_string(x) + "]";
    if (!rates[x].is_array()) throw Error(ErrorCode::ConfigParseError, where + ": expected an array");
    std::vector<double> row;
    for (std::size_t y = 0; y < rates[x].size(); ++y) {
      row.push_back(as_number(rates[x][y], where + "[" + std::to_string(y) + "]"));
    }
    raw.rates.push_back(std::move(row));
  }

  const auto& absorption = doc.at("absorption");
  if (!absorption.is_array()) throw Error(ErrorCode::ConfigParseError, "absorption: expected an array");
  for (std::size_t x = 0; x < absorption.size(); ++x) {
    raw.absorption.push_back(as_number(absorption[x], "absorption[" + std::to_string(x) + "]"));
  }
  return raw;
}

RawChain read_chain_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open chain file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ConfigParseError, path.string() + ": " + e.what());
  }
  return raw_chain_from_json(doc);
}

nlohmann::json chain_to_json(const AbsorbingChain& chain) {
  const std::size_t n = chain.size();
  nlohmann::json rates = nlohmann::json::array();
  for (std::size_t x = 0; x < n; ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t y = 0; y < n; ++y) row.push_back(x == y ? 0.0 : chain.rate(x, y));
    rates.push_back(std::move(row));
  }
  return {{"states", chain.states()},
          {"rates", std::move(rates)},
          {"absorption", std::vector<double>(chain.absorption().begin(), chain.absorption().end())}};
}

}  // namespace fvqsd
