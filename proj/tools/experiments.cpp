#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "lptrans/corpus.hpp"
#include "lptrans/family.hpp"
#include "lptrans/gfunction.hpp"
#include "lptrans/measure.hpp"
#include "lptrans/spectral.hpp"
#include "lptrans/transference.hpp"

namespace lptrans::cli {
namespace {

std::string tag(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double tol(const ExperimentConfig& c, double fallback) { return c.tolerance.value_or(fallback); }

void guarded(RunReport& r, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    r.fail(name, e.what());
  }
}

std::vector<NamedFunction> corpus_for(const ExperimentConfig& c, const FamilySpec& fam) {
  if (c.corpus.empty()) return standard_corpus(fam);
  std::vector<NamedFunction> out;
  for (const std::string& n : c.corpus) out.push_back(corpus_member(fam, n));
  return out;
}

std::pair<double, double> plot_range(const FamilySpec& fam) {
  if (fam.is_jacobi_type()) return {-0.99, 0.99};
  if (fam.kind() == FamilyKind::Hermite) return {-5.0, 5.0};
  return {0.01, 20.0};
}

void orthocheck(const ExperimentConfig& c, RunReport& r) {
  const FamilySpec fam = c.family_spec();
  const int n_max = c.n_max;
  const int order = c.order > 0 ? c.order : default_order(n_max);

  guarded(r, "orthonormality", [&] {
    const QuadratureRule rule = gauss_rule(MeasureSpec::for_family(fam), order);
    double mass = 0.0;
    for (double w : rule.weights) mass += w;
    r.check("quadrature_mass", mass, 1.0, std::abs(mass - 1.0), 1e-12);
    const BasisTable t = basis_table(fam, n_max, rule.nodes);
    Table tab{"orthonormality", {"n", "m", "value", "reference", "error"}, {}};
    double worst = 0.0;
    for (int n = 0; n <= n_max; ++n) {
      for (int m = 0; m <= n_max; ++m) {
        std::vector<double> prod(rule.nodes.size());
        for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = t.row(n)[i] * t.row(m)[i];
        const double v = integrate_values(prod, rule);
        const double ref = n == m ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(v - ref));
        tab.rows.push_back({long{n}, long{m}, v, ref, std::abs(v - ref)});
      }
    }
    r.tables.push_back(std::move(tab));
    r.check("orthonormality_max_error", worst, 0.0, worst, tol(c, 1e-10));
  });

  guarded(r, "eigenfunction_identity", [&] {
    const QuadratureRule rule = gauss_rule(MeasureSpec::for_family(fam), 50);
    Table tab{"eigenfunction", {"n", "max_relative_error"}, {}};
    double worst = 0.0;
    for (int n = 0; n <= std::min(15, n_max); ++n) {
      const double lam = eigenvalue(fam, n);
      const double norm = std::sqrt(squared_norm(fam, n));
      double e = 0.0;
      for (double x : rule.nodes) {
        const double v = eval_poly(fam, n, x);
        const double scale = std::max(1.0, lam) * std::max(std::abs(v), norm);
        e = std::max(e, std::abs(apply_operator(fam, n, x) - lam * v) / scale);
      }
      worst = std::max(worst, e);
      tab.rows.push_back({long{n}, e});
    }
    r.tables.push_back(std::move(tab));
    r.check("eigenfunction_max_relative_error", worst, 0.0, worst, tol(c, 1e-9));
  });

  if (fam.kind() != FamilyKind::Hermite) {
    guarded(r, "weighted_norm_identity", [&] {
      const FamilySpec base = fam.orthonormal_equivalent();
      const QuadratureRule rule = gauss_rule(MeasureSpec::for_family(base), order);
      const FamilySpec shifted = derivative_shift(base, 1).target;
      Table tab{"weighted_norm", {"k", "value", "reference", "relative_error"}, {}};
      double worst = 0.0;
      for (int k = 1; k <= n_max; ++k) {
        const double v = integrate(
            [&](double x) {
              const double p = eval_poly(shifted, k - 1, x);
              return natural_derivative_weight(base, x) * p * p;
            },
            rule);
        const double coef = base.kind() == FamilyKind::Laguerre
                                ? static_cast<double>(k)
                                : 4.0 * k / (k + base.alpha() + base.beta() + 1.0);
        const double ref = coef * squared_norm(base, k);
        const double e = std::abs(v - ref) / ref;
        worst = std::max(worst, e);
        tab.rows.push_back({long{k}, v, ref, e});
      }
      r.tables.push_back(std::move(tab));
      r.check("weighted_norm_max_relative_error", worst, 0.0, worst, tol(c, 1e-10));
    });
  }

  const auto [lo, hi] = plot_range(fam);
  PlotSeries plot{"basis_n" + std::to_string(n_max), {}, {}};
  for (int i = 0; i <= 200; ++i) {
    const double x = lo + (hi - lo) * i / 200.0;
    plot.x.push_back(x);
    plot.y.push_back(eval_orthonormal(fam, n_max, x, std::max(n_max, kDefaultDegreeCap)));
  }
  r.plots.push_back(std::move(plot));
}

void gnorm(const ExperimentConfig& c, RunReport& r) {
  const FamilySpec fam = c.family_spec();
  const int order = c.order > 0 ? c.order : default_order(c.truncation);
  const QuadratureRule rule = gauss_rule(MeasureSpec::for_family(fam), order);
  Table parts{"gnorm_parts",
              {"function", "closed_l2", "quadrature_l2", "time_closed", "time_quadrature",
               "space_closed", "space_quadrature"},
              {}};
  Table lp{"gnorm_lp", {"function", "p", "g_norm", "f_norm", "ratio"}, {}};
  for (const NamedFunction& m : corpus_for(c, fam)) {
    guarded(r, "gnorm_" + m.name, [&] {
      const std::vector<double> samples = sample(m.f, rule);
      const SpectralCoefficients coef = expand_values(samples, fam, c.truncation, rule);
      const GFunctionDecomposition d = g_decompose(coef, rule.nodes);
      const std::vector<double> g = d.g();
      const double t_quad = integrate_values(d.time_part, rule);
      const double s_quad = integrate_values(d.space_part, rule);
      const double l2_quad = lp_norm_values(g, 2.0, rule);
      const double t_closed = g_time_energy(coef);
      const double s_closed = g_space_energy(coef);
      const double l2_closed = g_l2_norm(coef);
      parts.rows.push_back({m.name, l2_closed, l2_quad, t_closed, t_quad, s_closed, s_quad});
      const double t = tol(c, 1e-8);
      r.check("time_energy_" + m.name, t_quad, t_closed, std::abs(t_quad - t_closed), t);
      r.check("space_energy_" + m.name, s_quad, s_closed, std::abs(s_quad - s_closed), t);
      r.check("l2_norm_" + m.name, l2_quad, l2_closed, std::abs(l2_quad - l2_closed), t);
      for (double p : c.exponents) {
        const double gn = lp_norm_values(g, p, rule);
        const double fn = lp_norm_values(samples, p, rule);
        lp.rows.push_back({m.name, p, gn, fn, fn > 0.0 ? gn / fn : 0.0});
      }
      r.plots.push_back({"g_" + m.name, rule.nodes, g});
    });
  }
  r.tables.push_back(std::move(parts));
  r.tables.push_back(std::move(lp));
}

Table sweep_table(const std::string& name, const ConvergenceReport& rep) {
  Table t{name, {"parameter", "value", "reference", "error"}, {}};
  for (const SweepPoint& p : rep.points) t.rows.push_back({p.parameter, p.target, p.limit, p.error});
  return t;
}

void shape_check(RunReport& r, const std::string& name, const ConvergenceReport& rep) {
  if (rep.points.empty()) return;
  double worst = 0.0;
  for (const SweepPoint& p : rep.points) {
    worst = std::max(worst, p.error / std::max(1.0, std::abs(p.limit)));
  }
  if (worst <= 1e-9) {
    r.check(name + "_exact", worst, 0.0, worst, 1e-9);
    return;
  }
  const bool ok = rep.strictly_decreasing() && rep.fit.valid && rep.fit.exponent <= -0.8;
  r.check_flag(name + "_decay", ok, rep.fit.exponent, -0.8);
}

void transfer(const ExperimentConfig& c, RunReport& r) {
  TransferOptions opts;
  opts.direction = c.direction_kind();
  opts.alpha = c.alpha;
  opts.truncation = c.truncation;
  opts.order = c.order;
  const FamilySpec limit =
      opts.direction == Direction::ToGaussian ? FamilySpec::hermite() : FamilySpec::laguerre(c.alpha);
  for (const NamedFunction& m : corpus_for(c, limit)) {
    guarded(r, "norm_" + m.name, [&] {
      const ConvergenceReport rep = norm_limit_experiment(m.f, c.sweep, opts);
      r.tables.push_back(sweep_table("transfer_norm_" + m.name, rep));
      PlotSeries plot{"transfer_norm_error_" + m.name, {}, {}};
      for (const SweepPoint& p : rep.points) {
        plot.x.push_back(p.parameter);
        plot.y.push_back(p.error);
      }
      r.plots.push_back(std::move(plot));
      shape_check(r, "norm_" + m.name, rep);
    });
    for (int k = 1; k <= c.k_max; ++k) {
      const std::string name = "inner_k" + std::to_string(k) + "_" + m.name;
      guarded(r, name, [&] {
        const ConvergenceReport rep = inner_product_limit_experiment(m.f, k, c.sweep, opts);
        r.tables.push_back(sweep_table("transfer_" + name, rep));
        shape_check(r, name, rep);
      });
    }
    guarded(r, "g_" + m.name, [&] {
      const ConvergenceReport rep = g_norm_transfer_experiment(m.f, c.sweep, opts);
      r.tables.push_back(sweep_table("transfer_g_" + m.name, rep));
      if (!rep.points.empty()) {
        const SweepPoint& last = rep.points.back();
        r.check("g_transfer_" + m.name, last.target, last.limit, last.error, tol(c, 5e-3));
      }
    });
  }
}

void linearize(const ExperimentConfig& c, RunReport& r) {
  Table tab{"linearization", {"m", "n", "i", "nu"}, {}};
  double sum_err = 0.0, sym_err = 0.0, min_nu = std::numeric_limits<double>::infinity();
  guarded(r, "linearization", [&] {
    for (int m = 0; m <= c.m_max; ++m) {
      for (int n = 0; n <= c.m_max; ++n) {
        const LinearizationRow row = linearization_coeffs(c.alpha, c.beta, m, n, c.order);
        const LinearizationRow mirror = linearization_coeffs(c.alpha, c.beta, n, m, c.order);
        sum_err = std::max(sum_err, std::abs(row.sum() - 1.0));
        for (int i = row.i_min; i <= row.i_max(); ++i) {
          sym_err = std::max(sym_err, std::abs(row.at(i) - mirror.at(i)));
          min_nu = std::min(min_nu, row.at(i));
          tab.rows.push_back({long{m}, long{n}, long{i}, row.at(i)});
        }
      }
    }
    r.check("sum_to_one", sum_err, 0.0, sum_err, tol(c, 1e-10));
    r.check("symmetry", sym_err, 0.0, sym_err, tol(c, 1e-10));
    if (c.alpha >= c.beta) r.check_flag("nonnegative", min_nu >= -1e-12, min_nu, 0.0);
    if (c.alpha == 0.0 && c.beta == 0.0 && c.m_max >= 1) {
      const LinearizationRow row = linearization_coeffs(0.0, 0.0, 1, 1, c.order);
      const double e = std::max({std::abs(row.at(0) - 1.0 / 3.0), std::abs(row.at(1)),
                                 std::abs(row.at(2) - 2.0 / 3.0)});
      r.check("legendre_row_1_1", row.at(2), 2.0 / 3.0, e, tol(c, 1e-10));
    }
  });
  r.tables.push_back(std::move(tab));
}

void kernel_experiment(const ExperimentConfig& c, RunReport& r) {
  const FamilySpec fam = FamilySpec::jacobi(c.alpha, c.beta);
  std::vector<double> grid;
  for (int i = 0; i < c.grid; ++i) grid.push_back(-1.0 + 2.0 * (i + 0.5) / c.grid);
  for (double t : c.times) {
    guarded(r, "kernel_t" + tag(t), [&] {
      const int n = kernel_truncation(fam, t);
      Table tab{"kernel_t" + tag(t), {"x", "y", "value"}, {}};
      double lowest = std::numeric_limits<double>::infinity();
      for (double x : grid) {
        for (double y : grid) {
          const double v = kernel(fam, t, x, y, n);
          lowest = std::min(lowest, v);
          tab.rows.push_back({x, y, v});
        }
      }
      r.tables.push_back(std::move(tab));
      r.check_flag("kernel_positive_t" + tag(t), lowest >= -1e-10, lowest, 0.0);
      const QuadratureRule rule =
          gauss_rule(MeasureSpec::for_family(fam), c.order > 0 ? c.order : default_order(n));
      double mass_err = 0.0;
      for (double x : grid) {
        std::vector<double> v(rule.nodes.size());
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = kernel(fam, t, x, rule.nodes[j], n);
        mass_err = std::max(mass_err, std::abs(integrate_values(v, rule) - 1.0));
      }
      r.check("kernel_mass_t" + tag(t), 1.0 + mass_err, 1.0, mass_err, tol(c, 1e-10));
      PlotSeries plot{"kernel_slice_t" + tag(t), {}, {}};
      for (int i = 0; i <= 200; ++i) {
        const double y = -0.995 + 1.99 * i / 200.0;
        plot.x.push_back(y);
        plot.y.push_back(kernel(fam, t, 0.0, y, n));
      }
      r.plots.push_back(std::move(plot));
    });
  }
  Table boch{"bochner", {"lambda", "t", "value", "reference", "error"}, {}};
  for (double l : c.bochner_lambdas) {
    for (double t : c.bochner_times) {
      guarded(r, "bochner_" + tag(l) + "_" + tag(t), [&] {
        const double v = bochner_integral(l, t);
        const double ref = std::exp(-std::sqrt(l) * t);
        boch.rows.push_back({l, t, v, ref, std::abs(v - ref)});
        r.check("bochner_l" + tag(l) + "_t" + tag(t), v, ref, std::abs(v - ref), tol(c, 1e-8));
      });
    }
  }
  r.tables.push_back(std::move(boch));
}

void ratios(const ExperimentConfig& c, RunReport& r) {
  const FamilySpec fam = c.family_spec();
  const int order = c.order > 0 ? c.order : default_order(c.truncation);
  guarded(r, "ratios", [&] {
    const auto corpus = corpus_for(c, fam);
    const RatioReport base = g_ratio_report(corpus, fam, c.exponents, c.truncation, order);
    const RatioReport fine = g_ratio_report(corpus, fam, c.exponents, 2 * c.truncation,
                                            std::min(2 * order, kMaxQuadratureOrder));
    for (const auto& [rep, name] : {std::pair{&base, "ratios"}, std::pair{&fine, "ratios_refined"}}) {
      Table tab{name, {"function", "p", "g_norm", "f_norm", "ratio"}, {}};
      for (const RatioRow& row : rep->rows) {
        tab.rows.push_back({row.function, row.p, row.g_norm, row.f_norm, row.ratio});
      }
      r.tables.push_back(std::move(tab));
    }
    for (double p : c.exponents) {
      const double a = base.max_ratio.at(p);
      const double b = fine.max_ratio.at(p);
      const double change = b > 0.0 ? std::abs(a / b - 1.0) : std::abs(a - b);
      r.check("max_ratio_stable_p" + tag(p), a, b, change, tol(c, 1e-2));
    }
  });
}

}  // namespace

RunReport run(const ExperimentConfig& config) {
  RunReport r;
  r.config = config;
  const auto start = std::chrono::steady_clock::now();
  if (config.kind == "orthocheck") {
    orthocheck(config, r);
  } else if (config.kind == "gnorm") {
    gnorm(config, r);
  } else if (config.kind == "transfer") {
    transfer(config, r);
  } else if (config.kind == "linearize") {
    linearize(config, r);
  } else if (config.kind == "kernel") {
    kernel_experiment(config, r);
  } else if (config.kind == "ratios") {
    ratios(config, r);
  } else {
    r.fail("experiment", "unknown experiment '" + config.kind + "'");
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace lptrans::cli
