#include "helmfd/spectral.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "fft.hpp"
#include "helmfd/numerics.hpp"

namespace helmfd {

SineSeries::SineSeries(std::map<int, double> coeffs) {
  for (const auto& [mode, c] : coeffs) {
    if (mode < 1) throw std::invalid_argument("SineSeries: mode index must be >= 1");
    if (std::abs(c) > 0.0) coeffs_[mode] = c;
  }
}

SineSeries SineSeries::parse(std::string_view spec) {
  SineSeries out;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t comma = spec.find(',', pos);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view item = spec.substr(pos, comma - pos);
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("source spec: expected n:coeff, got '" +
                                  std::string(item) + "'");
    std::size_t used = 0;
    int mode = std::stoi(std::string(item.substr(0, colon)), &used);
    if (used != colon || mode < 1)
      throw std::invalid_argument("source spec: bad mode index in '" +
                                  std::string(item) + "'");
    std::string tail(item.substr(colon + 1));
    double coeff = std::stod(tail, &used);
    if (used != tail.size())
      throw std::invalid_argument("source spec: bad coefficient in '" +
                                  std::string(item) + "'");
    out.add(mode, coeff);
    pos = comma + 1;
  }
  return out;
}

void SineSeries::set(int mode, double coeff) {
  if (mode < 1) throw std::invalid_argument("SineSeries: mode index must be >= 1");
  if (coeff == 0.0)
    coeffs_.erase(mode);
  else
    coeffs_[mode] = coeff;
}

void SineSeries::add(int mode, double coeff) {
  if (mode < 1) throw std::invalid_argument("SineSeries: mode index must be >= 1");
  double next = at(mode) + coeff;
  set(mode, next);
}

double SineSeries::at(int mode) const {
  auto it = coeffs_.find(mode);
  return it == coeffs_.end() ? 0.0 : it->second;
}

int SineSeries::max_mode() const {
  return coeffs_.empty() ? 0 : coeffs_.rbegin()->first;
}

SineSeries& SineSeries::operator+=(const SineSeries& other) {
  for (const auto& [mode, c] : other.coeffs_) add(mode, c);
  return *this;
}

SineSeries& SineSeries::operator-=(const SineSeries& other) {
  for (const auto& [mode, c] : other.coeffs_) add(mode, -c);
  return *this;
}

SineSeries& SineSeries::operator*=(double scale) {
  if (scale == 0.0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [mode, c] : coeffs_) c *= scale;
  return *this;
}

double SineSeries::evaluate(double x) const {
  double acc = 0.0;
  for (const auto& [mode, c] : coeffs_) acc += c * std::sin(mode * M_PI * x);
  return acc;
}

double SineSeries::evaluate_derivative(double x) const {
  double acc = 0.0;
  for (const auto& [mode, c] : coeffs_) {
    const double xi = mode * M_PI;
    acc += c * xi * std::cos(xi * x);
  }
  return acc;
}

GridFunction sample(const SineSeries& series, int n_intervals) {
  if (n_intervals < 2) throw std::invalid_argument("sample: N must be >= 2");
  GridFunction g;
  g.n_intervals = n_intervals;
  g.values.assign(n_intervals + 1, 0.0);
  for (const auto& [mode, c] : series.coeffs()) {
    for (int j = 1; j < n_intervals; ++j) {
      g.values[j] += c * num::grid_sine(static_cast<std::int64_t>(mode) * j,
                                        n_intervals);
    }
  }
  return g;
}

namespace {

SineSeries prune_to_series(const std::vector<double>& raw) {
  SineSeries out;
  for (std::size_t n = 1; n < raw.size(); ++n)
    if (std::abs(raw[n]) >= kPruneTol) out.set(static_cast<int>(n), raw[n]);
  return out;
}

}  // namespace

SineSeries dst_forward(const GridFunction& g) {
  const int n = g.n_intervals;
  if (n < 2) throw std::invalid_argument("dst_forward: N must be >= 2");
  // Odd extension of length 2N: Y_k = -2i sum_j g_j sin(pi j k / N).
  std::vector<std::complex<double>> y(2 * static_cast<std::size_t>(n), 0.0);
  for (int j = 1; j < n; ++j) {
    y[j] = g.values[j];
    y[2 * n - j] = -g.values[j];
  }
  auto transformed = detail::dft(std::move(y));
  const double h = 1.0 / n;
  std::vector<double> raw(n, 0.0);
  for (int m = 1; m < n; ++m) raw[m] = -h * transformed[m].imag();
  return prune_to_series(raw);
}

SineSeries dst_forward_direct(const GridFunction& g) {
  const int n = g.n_intervals;
  if (n < 2) throw std::invalid_argument("dst_forward_direct: N must be >= 2");
  const double h = 1.0 / n;
  std::vector<double> raw(n, 0.0);
  for (int m = 1; m < n; ++m) {
    double acc = 0.0;
    for (int j = 1; j < n; ++j)
      acc += num::grid_sine(static_cast<std::int64_t>(m) * j, n) * g.values[j];
    raw[m] = 2.0 * h * acc;
  }
  return prune_to_series(raw);
}

SineSeries alias_coefficients(const SineSeries& series, int n_intervals) {
  if (n_intervals < 2)
    throw std::invalid_argument("alias_coefficients: N must be >= 2");
  const int two_n = 2 * n_intervals;
  SineSeries out;
  for (const auto& [mode, c] : series.coeffs()) {
    int m = mode % two_n;
    if (m == 0 || m == n_intervals) continue;  // these modes vanish on the grid
    if (m < n_intervals)
      out.add(m, c);
    else
      out.add(two_n - m, -c);
  }
  return out;
}

std::pair<SineSeries, SineSeries> split_low_high(const SineSeries& series,
                                                 int n_intervals) {
  if (n_intervals < 2)
    throw std::invalid_argument("split_low_high: N must be >= 2");
  SineSeries low, high;
  for (const auto& [mode, c] : series.coeffs()) {
    if (mode <= n_intervals - 1)
      low.set(mode, c);
    else
      high.set(mode, c);
  }
  return {low, high};
}

double seminorm(const SineSeries& series, int order) {
  if (order < 0) throw std::invalid_argument("seminorm: order must be >= 0");
  double acc = 0.0;
  for (const auto& [mode, c] : series.coeffs()) {
    double w = c;
    const double xi = mode * M_PI;
    for (int q = 0; q < order; ++q) w *= xi;
    acc += w * w;
  }
  return std::sqrt(0.5 * acc);
}

}  // namespace helmfd
