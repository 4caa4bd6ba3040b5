#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "fvqsd/chain.hpp"
#include "fvqsd/probability.hpp"

namespace fvqsd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitCheckFailed = 2;

inline const std::vector<std::string> kExperimentKinds = {
    "qsd", "semigroup", "simulate", "correlation", "convergence", "qsd_profile", "overlap", "product_moment"};

/// Parsed experiment configuration file.
struct ExperimentConfig {
  std::string kind;
  nlohmann::json chain;  ///< chain document, inline or loaded from the referenced file
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 1;
  std::optional<std::filesystem::path> output_dir;  ///< resolved against the config's directory
};

/// Throws Error(ConfigParseError) naming the offending field, or with line and
/// column for malformed JSON.
ExperimentConfig load_config(const std::filesystem::path& path);

/// Typed access to a kind's parameter block. Every lookup records the value
/// it resolved (default included); `finish()` rejects keys never looked up.
class Params {
 public:
  Params(const nlohmann::json& block, const AbsorbingChain& chain);

  double number(const std::string& key, double fallback);
  std::optional<double> optional_number(const std::string& key);
  std::size_t count(const std::string& key, std::size_t fallback);
  std::vector<double> numbers(const std::string& key, std::vector<double> fallback);
  std::vector<std::size_t> counts(const std::string& key, std::vector<std::size_t> fallback);
  std::size_t site(const std::string& key, std::size_t fallback);
  std::vector<std::size_t> sites(const std::string& key, std::vector<std::size_t> fallback);
  ProbabilityVector profile(const std::string& key, const ProbabilityVector& fallback);
  std::vector<ProbabilityVector> profiles(const std::string& key, std::vector<ProbabilityVector> fallback);
  std::vector<std::pair<std::size_t, std::size_t>> site_pairs(
      const std::string& key, std::vector<std::pair<std::size_t, std::size_t>> fallback);

  void finish() const;
  const nlohmann::json& resolved() const noexcept { return resolved_; }

 private:
  const nlohmann::json* lookup(const std::string& key);
  std::size_t site_from_json(const nlohmann::json& v, const std::string& where) const;
  ProbabilityVector profile_from_json(const nlohmann::json& v, const std::string& where) const;

  const nlohmann::json& block_;
  const AbsorbingChain& chain_;
  std::set<std::string> seen_;
  nlohmann::json resolved_ = nlohmann::json::object();
};

struct RunOptions {
  std::optional<std::filesystem::path> out;
  int threads = 0;  ///< 0 = all cores
  std::optional<std::uint64_t> seed;
  std::optional<std::string> expected_kind;  ///< set when invoked as `fvqsd <kind>`
};

/// Runs one experiment config and writes results.csv, summary.json and
/// plot.svg. Returns kExitOk, kExitCheckFailed when a bound check fails, or
/// kExitInputError.
int run(const std::filesystem::path& config_path, const RunOptions& options, std::ostream& log,
        std::ostream& err);

/// Prints derived constants, the irreducibility verdict and the uniqueness-condition diagnostic.
int validate_command(const std::filesystem::path& chain_path, std::ostream& out, std::ostream& err);

/// Command-line entry point.
int main(int argc, char** argv);

// Output helpers -------------------------------------------------------------

/// printf("%.17g").
std::string format_number(double value);

/// One results.csv row; empty optionals are written as empty cells.
struct ResultRow {
  std::string experiment;
  std::optional<std::size_t> particles;
  std::optional<double> t;
  std::string x;
  std::string y;
  double estimate = 0.0;
  std::optional<double> se;
  std::optional<double> bound;
  std::optional<std::size_t> replicas;
  std::uint64_t seed = 0;
};

inline constexpr const char* kCsvHeader = "experiment,N,t,x,y,estimate,se,bound,replicas,seed";

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

struct PlotSeries {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

struct Plot {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
  std::vector<PlotSeries> series;
};

/// Self-contained SVG line plot. Log axes fall back to linear when some
/// value is not positive.
void write_svg(std::ostream& out, const Plot& plot);

}  // namespace fvqsd::cli
