#include "oracles.hpp"

#include <algorithm>
#include <cmath>

namespace oracle {

Eigen::MatrixXd sub_generator(const fvqsd::RawChain& raw) {
  const auto n = static_cast<Eigen::Index>(raw.states.size());
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    double out = raw.absorption[x];
    for (Eigen::Index y = 0; y < n; ++y) {
      if (x == y) continue;
      q(x, y) = raw.rates[x][y];
      out += raw.rates[x][y];
    }
    q(x, x) = -out;
  }
  return q;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& a) {
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int s = 0;
  while (std::ldexp(norm, -s) > 0.5) ++s;
  const Eigen::MatrixXd scaled = a * std::ldexp(1.0, -s);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::MatrixXd sum = term;
  for (int k = 1; k <= 200; ++k) {
    term = term * scaled / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-30) break;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

std::vector<double> transient(const fvqsd::RawChain& raw, const std::vector<double>& mu, double t) {
  const Eigen::MatrixXd e = expm(t * sub_generator(raw));
  const Eigen::RowVectorXd m = Eigen::Map<const Eigen::RowVectorXd>(mu.data(), static_cast<Eigen::Index>(mu.size()));
  const Eigen::RowVectorXd w = m * e;
  return {w.data(), w.data() + w.size()};
}

Spectrum dense_qsd(const fvqsd::RawChain& raw) {
  const Eigen::MatrixXd q = sub_generator(raw);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(q.transpose());
  const auto values = solver.eigenvalues();
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < values.size(); ++k) {
    if (values[k].real() > values[best].real()) best = k;
  }
  Spectrum s;
  s.alpha = values[best].real();
  Eigen::VectorXd v = solver.eigenvectors().col(best).real();
  v /= v.sum();
  s.nu.assign(v.data(), v.data() + v.size());
  for (Eigen::Index k = 0; k < values.size(); ++k) s.eigenvalues.push_back(values[k]);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(),
            [](auto a, auto b) { return a.real() > b.real(); });
  return s;
}

std::vector<double> two_site_occupancy_law(const fvqsd::RawChain& raw, std::size_t particles,
                                           std::size_t initial_at_first, double t) {
  const double q01 = raw.rates[0][1];
  const double q10 = raw.rates[1][0];
  const double a0 = raw.absorption[0];
  const double a1 = raw.absorption[1];
  const auto n = static_cast<double>(particles);
  const auto size = static_cast<Eigen::Index>(particles + 1);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(size, size);
  for (Eigen::Index k = 0; k < size; ++k) {
    const auto kd = static_cast<double>(k);
    // A particle at the second site moves to the first by jumping or by
    // being absorbed and copying one of the k particles there.
    const double up = (n - kd) * (q10 + a1 * kd / (n - 1.0));
    const double down = kd * (q01 + a0 * (n - kd) / (n - 1.0));
    if (k + 1 < size) g(k, k + 1) = up;
    if (k > 0) g(k, k - 1) = down;
    g(k, k) = -(k + 1 < size ? up : 0.0) - (k > 0 ? down : 0.0);
  }
  const Eigen::MatrixXd e = expm(t * g);
  const Eigen::RowVectorXd row = e.row(static_cast<Eigen::Index>(initial_at_first));
  return {row.data(), row.data() + row.size()};
}

fvqsd::RawChain random_chain(std::mt19937_64& rng, std::size_t sites, double max_rate, bool sparse_absorption) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto rate = [&] { return max_rate * (1.0 - u(rng)); };  // (0, max_rate]
  fvqsd::RawChain raw;
  for (std::size_t x = 0; x < sites; ++x) raw.states.push_back("s" + std::to_string(x));
  raw.rates.assign(sites, std::vector<double>(sites, 0.0));
  for (std::size_t x = 0; x < sites; ++x) {
    for (std::size_t y = 0; y < sites; ++y) {
      if (x != y) raw.rates[x][y] = rate();
    }
    raw.absorption.push_back(sparse_absorption && u(rng) < 0.5 ? 0.0 : rate());
  }
  if (sparse_absorption) raw.absorption[0] = rate();
  return raw;
}

fvqsd::RawChain golden_chain() { return {{"1", "2"}, {{0, 1}, {1, 0}}, {1, 0}}; }

fvqsd::RawChain symmetric_chain(double absorption) {
  return {{"1", "2"}, {{0, 1}, {1, 0}}, {absorption, absorption}};
}

fvqsd::RawChain single_site_chain(double absorption) { return {{"1"}, {{0}}, {absorption}}; }

fvqsd::RawChain three_site_chain() {
  return {{"a", "b", "c"}, {{0, 1.0, 0.5}, {0.5, 0, 1.0}, {1.0, 0.5, 0}}, {0.5, 0.25, 0.0}};
}

}  // namespace oracle
