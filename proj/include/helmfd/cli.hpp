#ifndef HELMFD_CLI_HPP
#define HELMFD_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "helmfd/bounds.hpp"

namespace helmfd::cli {

enum class Command { Solve, Symbols, Bounds, Converge, Wellposed, ZeroSource };
enum class Format { Csv, Json, Svg };
enum class Refine { None, H, KH, KHFix };

struct RunConfig {
  Command command = Command::Solve;
  std::vector<SchemeKind> schemes;  // defaults to {Classical}
  std::vector<double> ks;
  std::vector<int> ns;
  std::string source_spec;
  double g0 = 0.0;
  double g1 = 0.0;
  int p = 2;
  double c = 0.5;
  Refine refine = Refine::None;
  int refine_steps = 4;
  std::string preset;  // fig1, fig2, fig4, fig5, fig6
  std::string out_path;  // empty writes to stdout
  Format format = Format::Csv;
  bool strict = false;
  int n_max = 4096;  // wellposed: h_k* scan limit, reported with results
};

/// Applies a named preset onto the config (fills schemes/k/N/source/refine).
/// Returns false for an unknown preset name.
bool apply_preset(RunConfig& config);

/// Executes the command and writes the output (CSV/JSON/SVG).  Returns
/// 0 on success, 1 when strict mode saw a bounds failure or hypothesis
/// violation, 2 on invalid configuration.  Identical configs produce
/// byte-identical output.
int run(const RunConfig& config, std::ostream& info);

/// Least-squares slope of log(v) against log(x).
double fit_slope_loglog(const std::vector<double>& xs, const std::vector<double>& vs);

struct PowerFit {
  double h_exponent = 0.0;
  double k_exponent = 0.0;
};

/// Fits value ~ C k^a h^b on log-log data.  With independently varying k
/// and h this is a two-regressor least squares; on refinement paths where
/// log k and log h are collinear the h-exponent is pinned to 2 (the order
/// every scheme here attains in h) and the k-exponent fitted on the
/// residual.  Requires at least 3 points.
PowerFit fit_orders(const std::vector<double>& ks, const std::vector<double>& hs,
                    const std::vector<double>& values);

/// Rows of the converge command.
struct ConvergenceRow {
  SchemeKind scheme;
  double k;
  int n;
  TotalError err;
};

struct SlopeFit {
  SchemeKind scheme;
  double k;
  double slope;
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;
  /// Per-(scheme, k) slope of abs_h1 against h over the finest half of the
  /// meshes (at least 3 points).
  std::vector<SlopeFit> slopes_h;
};

ConvergenceReport converge(const std::vector<SchemeKind>& schemes,
                           const std::vector<double>& ks,
                           const std::vector<std::vector<int>>& ns_per_k,
                           const SineSeries& source);

/// Mesh ladder for the convergence presets: first power of two at or above
/// k, then `doublings` doublings.
std::vector<int> mesh_ladder(double k, int doublings);

}  // namespace helmfd::cli

#endif  // HELMFD_CLI_HPP
