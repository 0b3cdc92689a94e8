#include "helmfd/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "helmfd/io.hpp"

namespace helmfd::cli {

namespace {

using nlohmann::json;

struct Cell {
  SchemeKind scheme;
  double k;
  int n;
};

std::vector<Cell> expand_cells(const RunConfig& cfg) {
  std::vector<Cell> cells;
  std::vector<SchemeKind> schemes =
      cfg.schemes.empty() ? std::vector<SchemeKind>{SchemeKind::Classical}
                          : cfg.schemes;
  std::vector<std::pair<double, int>> kn;
  if (cfg.refine != Refine::None && cfg.ks.size() == 1 && cfg.ns.size() == 1) {
    // Generate the refinement path from the single seed.
    double k = cfg.ks.front();
    double n = cfg.ns.front();
    for (int j = 0; j < cfg.refine_steps; ++j) {
      kn.emplace_back(k, static_cast<int>(std::lround(n)));
      switch (cfg.refine) {
        case Refine::H: n *= 2.0; break;
        case Refine::KH: k *= 4.0; n *= 8.0; break;
        case Refine::KHFix: k *= 2.0; n *= 2.0; break;
        case Refine::None: break;
      }
    }
  } else if (cfg.ks.size() == cfg.ns.size() && cfg.ks.size() > 1) {
    // Explicit zipped path.
    for (std::size_t i = 0; i < cfg.ks.size(); ++i)
      kn.emplace_back(cfg.ks[i], cfg.ns[i]);
  } else {
    for (double k : cfg.ks)
      for (int n : cfg.ns) kn.emplace_back(k, n);
  }
  for (SchemeKind s : schemes)
    for (const auto& [k, n] : kn) cells.push_back({s, k, n});
  return cells;
}

// --- SVG ------------------------------------------------------------------

struct Series {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

std::string svg_plot(const std::vector<Series>& series, bool log_x, bool log_y) {
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
  const int w = 800, hgt = 600, margin = 60;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  auto tx = [&](double x) { return log_x ? std::log10(std::max(x, 1e-300)) : x; };
  auto ty = [&](double y) { return log_y ? std::log10(std::max(y, 1e-300)) : y; };
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(tx(x)) || !std::isfinite(ty(y))) continue;
      xmin = std::min(xmin, tx(x));
      xmax = std::max(xmax, tx(x));
      ymin = std::min(ymin, ty(y));
      ymax = std::max(ymax, ty(y));
    }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;
  auto px = [&](double x) {
    return margin + (tx(x) - xmin) / (xmax - xmin) * (w - 2 * margin);
  };
  auto py = [&](double y) {
    return hgt - margin - (ty(y) - ymin) / (ymax - ymin) * (hgt - 2 * margin);
  };
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
         "viewBox=\"0 0 800 600\">\n";
  out += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out += "<line x1=\"60\" y1=\"540\" x2=\"740\" y2=\"540\" stroke=\"black\"/>\n";
  out += "<line x1=\"60\" y1=\"60\" x2=\"60\" y2=\"540\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double fx = xmin + (xmax - xmin) * t / 4.0;
    const double fy = ymin + (ymax - ymin) * t / 4.0;
    const double vx = log_x ? std::pow(10.0, fx) : fx;
    const double vy = log_y ? std::pow(10.0, fy) : fy;
    out += "<text x=\"" + format_double(margin + t * (w - 2 * margin) / 4.0) +
           "\" y=\"560\" font-size=\"11\">" + format_double(vx) + "</text>\n";
    out += "<text x=\"4\" y=\"" +
           format_double(hgt - margin - t * (hgt - 2 * margin) / 4.0) +
           "\" font-size=\"11\">" + format_double(vy) + "</text>\n";
  }
  int color = 0;
  for (const auto& s : series) {
    std::string pts;
    for (const auto& [x, y] : s.points) {
      if (!std::isfinite(tx(x)) || !std::isfinite(ty(y))) continue;
      pts += format_double(px(x)) + "," + format_double(py(y)) + " ";
    }
    const char* c = kPalette[color % 8];
    out += "<polyline fill=\"none\" stroke=\"" + std::string(c) +
           "\" stroke-width=\"1.5\" points=\"" + pts + "\"/>\n";
    out += "<text x=\"620\" y=\"" + format_double(80 + 16 * color) +
           "\" font-size=\"12\" fill=\"" + c + "\">" + s.label + "</text>\n";
    ++color;
  }
  out += "</svg>\n";
  return out;
}

void write_output(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output path " + cfg.out_path);
  f << payload;
}

// --- commands ---------------------------------------------------------------

int cmd_solve(const RunConfig& cfg, std::ostream& info) {
  (void)info;
  const SineSeries src = SineSeries::parse(cfg.source_spec);
  std::string csv = "scheme,k,N,j,x,u_h,u_exact\n";
  json rows = json::array();
  for (const Cell& cell : expand_cells(cfg)) {
    HelmholtzProblem p{cell.k, src, cfg.g0, cfg.g1};
    const DiscreteSolution sol = solve_tridiagonal(cell.scheme, p, cell.n);
    SineSeries u_hat;
    if (p.homogeneous_bc()) u_hat = solve_exact(p);
    for (int j = 0; j <= cell.n; ++j) {
      const double x = static_cast<double>(j) / cell.n;
      const double exact = p.homogeneous_bc()
                               ? u_hat.evaluate(x)
                               : zero_source_exact(cell.k, cfg.g0, cfg.g1, x);
      csv += std::string(scheme_name(cell.scheme)) + "," + format_double(cell.k) +
             "," + std::to_string(cell.n) + "," + std::to_string(j) + "," +
             format_double(x) + "," + format_double(sol.nodal.values[j]) + "," +
             format_double(exact) + "\n";
      if (cfg.format == Format::Json)
        rows.push_back({{"scheme", scheme_name(cell.scheme)},
                        {"k", cell.k},
                        {"N", cell.n},
                        {"j", j},
                        {"x", x},
                        {"u_h", sol.nodal.values[j]},
                        {"u_exact", exact}});
    }
  }
  write_output(cfg, cfg.format == Format::Json ? rows.dump(2) + "\n" : csv);
  return 0;
}

int cmd_symbols(const RunConfig& cfg, std::ostream& info) {
  std::string csv = "scheme,k,h,xi,lambda,lambda_h,psi,psi_e,psi_rel\n";
  json rows = json::array();
  std::vector<Series> plots;
  int violations = 0;
  for (const Cell& cell : expand_cells(cfg)) {
    const double h = 1.0 / cell.n;
    const auto table = symbol_table(cell.scheme, cell.k, h);
    Series plot;
    plot.label = std::string(scheme_name(cell.scheme)) + " k=" +
                 format_double(cell.k) + " N=" + std::to_string(cell.n);
    for (const SymbolRow& r : table) {
      csv += std::string(scheme_name(cell.scheme)) + "," + format_double(cell.k) +
             "," + format_double(h) + "," + format_double(r.xi) + "," +
             format_double(r.lambda) + "," + format_double(r.lambda_h) + "," +
             format_double(r.psi) + "," + format_double(r.psi_e) + "," +
             format_double(r.psi_rel) + "\n";
      if (cfg.format == Format::Json)
        rows.push_back({{"scheme", scheme_name(cell.scheme)},
                        {"k", cell.k},
                        {"h", h},
                        {"xi", r.xi},
                        {"lambda", r.lambda},
                        {"lambda_h", r.lambda_h},
                        {"psi", r.psi},
                        {"psi_e", r.psi_e},
                        {"psi_rel", r.psi_rel}});
      if (r.resonant) ++violations;
      double y = r.psi_e;
      if (cfg.refine == Refine::KH) y = r.psi;
      if (cfg.refine == Refine::KHFix) y = r.psi_rel;
      if (std::isfinite(y)) plot.points.emplace_back(r.xi, y);
    }
    plots.push_back(std::move(plot));
  }
  if (cfg.format == Format::Svg)
    write_output(cfg, svg_plot(plots, false, true));
  else
    write_output(cfg, cfg.format == Format::Json ? rows.dump(2) + "\n" : csv);
  if (violations > 0) {
    info << "symbols: " << violations << " resonant rows flagged\n";
    if (cfg.strict) return 1;
  }
  return 0;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& info) {
  BoundSweepConfig sweep;
  if (cfg.ks.empty() || cfg.ns.empty()) {
    sweep = BoundSweepConfig::default_sweep();
  } else {
    const SineSeries src = SineSeries::parse(cfg.source_spec);
    for (double k : cfg.ks)
      for (int n : cfg.ns) sweep.entries.push_back({k, n, cfg.c, cfg.p, src, -1.0});
  }
  const BoundReport report = run_all(sweep);
  if (cfg.format == Format::Json) {
    json rows = json::array();
    for (const auto& r : report.results) {
      json e = {{"lemma_id", r.lemma_id}, {"lower", r.lower},
                {"value", r.value},      {"upper", r.upper},
                {"status", status_name(r.status())}};
      for (const auto& [name, v] : r.params) e[name] = v;
      if (!r.note.empty()) e["note"] = r.note;
      rows.push_back(std::move(e));
    }
    write_output(cfg, rows.dump(2) + "\n");
  } else {
    write_output(cfg, to_lines(report));
  }
  info << "bounds: " << report.n_pass << " pass, " << report.n_fail << " fail, "
       << report.n_skipped << " skipped\n";
  if (report.n_fail > 0) return cfg.strict ? 1 : 0;
  if (cfg.strict && report.n_skipped > 0) return 1;
  return 0;
}

int cmd_converge(const RunConfig& cfg, std::ostream& info) {
  const SineSeries src = SineSeries::parse(cfg.source_spec);
  std::vector<SchemeKind> schemes =
      cfg.schemes.empty() ? std::vector<SchemeKind>{SchemeKind::Classical}
                          : cfg.schemes;
  std::vector<std::vector<int>> ns_per_k;
  for (double k : cfg.ks)
    ns_per_k.push_back(cfg.ns.empty() ? mesh_ladder(k, 5) : cfg.ns);
  const ConvergenceReport rep = converge(schemes, cfg.ks, ns_per_k, src);

  std::string csv = "scheme,k,N,h,abs_l2,abs_h1,rel_l2,rel_h1\n";
  json rows = json::array();
  std::vector<Series> plots;
  for (const auto& r : rep.rows) {
    const double h = 1.0 / r.n;
    csv += std::string(scheme_name(r.scheme)) + "," + format_double(r.k) + "," +
           std::to_string(r.n) + "," + format_double(h) + "," +
           format_double(r.err.abs_l2) + "," + format_double(r.err.abs_h1) + "," +
           format_double(r.err.rel_l2) + "," + format_double(r.err.rel_h1) + "\n";
    if (cfg.format == Format::Json)
      rows.push_back({{"scheme", scheme_name(r.scheme)},
                      {"k", r.k},
                      {"N", r.n},
                      {"h", h},
                      {"abs_l2", r.err.abs_l2},
                      {"abs_h1", r.err.abs_h1},
                      {"rel_l2", r.err.rel_l2},
                      {"rel_h1", r.err.rel_h1}});
  }
  if (cfg.format == Format::Svg) {
    for (SchemeKind s : schemes)
      for (double k : cfg.ks) {
        Series plot;
        plot.label =
            std::string(scheme_name(s)) + " k=" + format_double(k);
        for (const auto& r : rep.rows)
          if (r.scheme == s && r.k == k)
            plot.points.emplace_back(1.0 / r.n, r.err.abs_h1);
        plots.push_back(std::move(plot));
      }
    write_output(cfg, svg_plot(plots, true, true));
  } else {
    write_output(cfg, cfg.format == Format::Json ? rows.dump(2) + "\n" : csv);
  }
  for (const auto& s : rep.slopes_h)
    info << "slope[" << scheme_name(s.scheme) << ", k=" << format_double(s.k)
         << "] = " << format_double(s.slope) << "\n";
  return 0;
}

int cmd_wellposed(const RunConfig& cfg, std::ostream& info) {
  std::string csv = "k,sigma_k,h_k,h_k_star,n_star,n_half,margin_half\n";
  json rows = json::array();
  int violations = 0;
  for (double k : cfg.ks) {
    const double sig = sigma_k(k);
    const double hk = h_k_bound(k);
    double h_star = std::numeric_limits<double>::quiet_NaN();
    int n_star = 0;
    try {
      h_star = h_k_star_search(k, cfg.n_max);
      n_star = static_cast<int>(std::lround(1.0 / h_star));
    } catch (const SearchExhausted&) {
      ++violations;
    }
    // Existence of an admissible mesh with N ~ k/2.
    int n_half = 0;
    double margin_half = 0.0;
    const int center = std::max(2, static_cast<int>(std::lround(k / 2.0)));
    const int w = std::max(2, center / 4);
    for (int n = std::max(2, center - w); n <= center + w; ++n) {
      const double m = wellposedness_margin(k, 1.0 / n);
      if (m >= sig / 2.0) {
        n_half = n;
        margin_half = m;
        break;
      }
    }
    if (n_half == 0) ++violations;
    csv += format_double(k) + "," + format_double(sig) + "," + format_double(hk) +
           "," + format_double(h_star) + "," + std::to_string(n_star) + "," +
           std::to_string(n_half) + "," + format_double(margin_half) + "\n";
    if (cfg.format == Format::Json)
      rows.push_back({{"k", k},
                      {"sigma_k", sig},
                      {"h_k", hk},
                      {"h_k_star", h_star},
                      {"n_star", n_star},
                      {"n_half", n_half},
                      {"margin_half", margin_half},
                      {"n_max", cfg.n_max}});
  }
  write_output(cfg, cfg.format == Format::Json ? rows.dump(2) + "\n" : csv);
  info << "wellposed: N_max = " << cfg.n_max << ", violations = " << violations
       << "\n";
  if (cfg.strict && violations > 0) return 1;
  return 0;
}

int cmd_zerosource(const RunConfig& cfg, std::ostream& info) {
  (void)info;
  std::string csv = "scheme,k,h,g0,g1,err_l2,err_h1\n";
  json rows = json::array();
  for (const Cell& cell : expand_cells(cfg)) {
    const double h = 1.0 / cell.n;
    const ErrorNorms e =
        zero_source_error_norms(cell.scheme, cell.k, h, cfg.g0, cfg.g1);
    csv += std::string(scheme_name(cell.scheme)) + "," + format_double(cell.k) +
           "," + format_double(h) + "," + format_double(cfg.g0) + "," +
           format_double(cfg.g1) + "," + format_double(e.l2) + "," +
           format_double(e.h1) + "\n";
    if (cfg.format == Format::Json)
      rows.push_back({{"scheme", scheme_name(cell.scheme)},
                      {"k", cell.k},
                      {"h", h},
                      {"g0", cfg.g0},
                      {"g1", cfg.g1},
                      {"err_l2", e.l2},
                      {"err_h1", e.h1}});
  }
  write_output(cfg, cfg.format == Format::Json ? rows.dump(2) + "\n" : csv);
  return 0;
}

}  // namespace

bool apply_preset(RunConfig& cfg) {
  if (cfg.preset.empty()) return true;
  const std::string four_mode_source = "10:0.7071067811865475,20:0.7071067811865475,"
                                   "40:0.7071067811865475,80:0.7071067811865475";
  if (cfg.preset == "fig1") {
    cfg.command = Command::Wellposed;
    cfg.ks.clear();
    for (int n = 2; n <= 20; ++n) cfg.ks.push_back(n * M_PI - 1.0);
    if (cfg.n_max == 4096) cfg.n_max = 2048;
    return true;
  }
  if (cfg.preset == "fig2") {
    cfg.command = Command::Converge;
    cfg.schemes = {SchemeKind::Classical};
    cfg.ks = {10.0 * M_PI + 1.0, 20.0 * M_PI + 1.0, 40.0 * M_PI + 1.0,
              80.0 * M_PI + 1.0};
    cfg.ns.clear();
    cfg.source_spec = four_mode_source;
    return true;
  }
  if (cfg.preset == "fig4") {
    cfg.command = Command::Symbols;
    cfg.schemes = {SchemeKind::Classical, SchemeKind::KMod, SchemeKind::LMod,
                   SchemeKind::LFMod};
    cfg.ks = {10.0 * M_PI + 1.0};
    cfg.ns = {64};
    cfg.refine = Refine::H;
    cfg.refine_steps = 4;
    return true;
  }
  if (cfg.preset == "fig5") {
    cfg.command = Command::Symbols;
    cfg.schemes = {SchemeKind::Classical, SchemeKind::KMod, SchemeKind::LMod,
                   SchemeKind::LFMod};
    // k quadrupled with kh halved from kh/2 = 1/4; sigma_k pinned to 1 by
    // k = n pi + 1, which also keeps k^h - k constant along the path.
    cfg.ks = {10.0 * M_PI + 1.0, 40.0 * M_PI + 1.0, 160.0 * M_PI + 1.0};
    cfg.ns = {65, 507, 4029};
    cfg.refine = Refine::KH;
    return true;
  }
  if (cfg.preset == "fig6") {
    cfg.command = Command::Symbols;
    cfg.schemes = {SchemeKind::Classical, SchemeKind::KMod, SchemeKind::LMod,
                   SchemeKind::LFMod};
    // kh fixed at 1/2 while k doubles exactly from 10 pi + 1.
    const double k0 = 10.0 * M_PI + 1.0;
    cfg.ks.clear();
    cfg.ns.clear();
    for (int j = 0; j < 4; ++j) {
      const double k = k0 * (1 << j);
      cfg.ks.push_back(k);
      cfg.ns.push_back(static_cast<int>(std::lround(2.0 * k)));
    }
    cfg.refine = Refine::KHFix;
    return true;
  }
  return false;
}

int run(const RunConfig& cfg, std::ostream& info) {
  for (double k : cfg.ks)
    if (!(k > 0.0)) {
      info << "invalid config: k must be positive\n";
      return 2;
    }
  for (int n : cfg.ns)
    if (n < 2) {
      info << "invalid config: N must be >= 2\n";
      return 2;
    }
  if (cfg.format == Format::Svg && cfg.command != Command::Symbols &&
      cfg.command != Command::Converge) {
    info << "invalid config: svg output is only available for symbols/converge\n";
    return 2;
  }
  try {
    switch (cfg.command) {
      case Command::Solve: return cmd_solve(cfg, info);
      case Command::Symbols: return cmd_symbols(cfg, info);
      case Command::Bounds: return cmd_bounds(cfg, info);
      case Command::Converge: return cmd_converge(cfg, info);
      case Command::Wellposed: return cmd_wellposed(cfg, info);
      case Command::ZeroSource: return cmd_zerosource(cfg, info);
    }
  } catch (const std::invalid_argument& e) {
    info << "invalid config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    info << "error: " << e.what() << "\n";
    return cfg.strict ? 1 : 2;
  }
  return 2;
}

double fit_slope_loglog(const std::vector<double>& xs,
                        const std::vector<double>& vs) {
  if (xs.size() != vs.size() || xs.size() < 2)
    throw InsufficientData("fit_slope_loglog: need >= 2 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(vs[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double det = n * sxx - sx * sx;
  if (std::abs(det) < 1e-14 * std::max(1.0, n * sxx))
    throw InsufficientData("fit_slope_loglog: degenerate abscissae");
  return (n * sxy - sx * sy) / det;
}

PowerFit fit_orders(const std::vector<double>& ks, const std::vector<double>& hs,
                    const std::vector<double>& values) {
  const std::size_t m = ks.size();
  if (hs.size() != m || values.size() != m || m < 3)
    throw InsufficientData("fit_orders: need >= 3 matching points");
  std::vector<double> lk(m), lh(m), lv(m);
  double mk = 0, mh = 0, mv = 0;
  for (std::size_t i = 0; i < m; ++i) {
    lk[i] = std::log(ks[i]);
    lh[i] = std::log(hs[i]);
    lv[i] = std::log(values[i]);
    mk += lk[i];
    mh += lh[i];
    mv += lv[i];
  }
  mk /= m;
  mh /= m;
  mv /= m;
  double skk = 0, shh = 0, skh = 0, svk = 0, svh = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const double dk = lk[i] - mk, dh = lh[i] - mh, dv = lv[i] - mv;
    skk += dk * dk;
    shh += dh * dh;
    skh += dk * dh;
    svk += dv * dk;
    svh += dv * dh;
  }
  PowerFit fit;
  const double scale = std::max(skk * shh, 1e-300);
  if (skk < 1e-12 * std::max(1.0, shh)) {  // k fixed
    fit.h_exponent = svh / shh;
    fit.k_exponent = 0.0;
    return fit;
  }
  if (shh < 1e-12 * std::max(1.0, skk)) {  // h fixed
    fit.k_exponent = svk / skk;
    fit.h_exponent = 0.0;
    return fit;
  }
  const double det = skk * shh - skh * skh;
  // det = (1 - corr^2) skk shh; refinement paths have |corr| ~ 1.
  if (det < 0.05 * scale) {
    // Refinement path: log k and log h collinear.  Every scheme here is
    // second order in h, so pin that and fit the k-exponent on the residual.
    fit.h_exponent = 2.0;
    double svk2 = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      svk2 += (lv[i] - mv - 2.0 * (lh[i] - mh)) * (lk[i] - mk);
    fit.k_exponent = svk2 / skk;
    return fit;
  }
  fit.k_exponent = (svk * shh - svh * skh) / det;
  fit.h_exponent = (svh * skk - svk * skh) / det;
  return fit;
}

ConvergenceReport converge(const std::vector<SchemeKind>& schemes,
                           const std::vector<double>& ks,
                           const std::vector<std::vector<int>>& ns_per_k,
                           const SineSeries& source) {
  if (ks.size() != ns_per_k.size())
    throw std::invalid_argument("converge: one mesh list per k required");
  ConvergenceReport rep;
  for (SchemeKind s : schemes) {
    for (std::size_t i = 0; i < ks.size(); ++i) {
      std::vector<double> hs, errs;
      for (int n : ns_per_k[i]) {
        HelmholtzProblem p{ks[i], source, 0.0, 0.0};
        const TotalError err = total_error(s, p, n);
        rep.rows.push_back({s, ks[i], n, err});
        hs.push_back(1.0 / n);
        errs.push_back(err.abs_h1);
      }
      // Slope over the finest half of the meshes, at least 3 points.
      const std::size_t take = std::max<std::size_t>(3, hs.size() / 2);
      if (hs.size() >= take) {
        std::vector<double> hs2(hs.end() - take, hs.end());
        std::vector<double> er2(errs.end() - take, errs.end());
        rep.slopes_h.push_back({s, ks[i], fit_slope_loglog(hs2, er2)});
      }
    }
  }
  return rep;
}

std::vector<int> mesh_ladder(double k, int doublings) {
  int n0 = 2;
  while (n0 < k) n0 *= 2;
  std::vector<int> out;
  for (int j = 0; j <= doublings; ++j) out.push_back(n0 << j);
  return out;
}

}  // namespace helmfd::cli
