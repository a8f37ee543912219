#include "unc/mc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "unc/error.hpp"

namespace unc {
namespace {

class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t chunk) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(chunk), static_cast<std::uint32_t>(chunk >> 32)};
    engine_.seed(seq);
  }

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    double v = 0.0;
    double s = 0.0;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

 private:
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

struct SamplingPlan {
  BoundExpr program;
  std::vector<UncertainScalar> inputs;
};

SamplingPlan plan(const Expr& expr, const UncertainEnv& env, const McConfig& cfg) {
  validate(cfg);
  const auto names = free_variables(expr);
  std::vector<UncertainScalar> inputs;
  inputs.reserve(names.size());
  for (const auto& n : names) {
    const auto it = env.find(n);
    if (it == env.end()) throw UnboundVariable(n);
    inputs.push_back(it->second);
  }
  return {BoundExpr(expr, names), std::move(inputs)};
}

void run_chunk(const SamplingPlan& p, const McConfig& cfg, std::size_t chunk,
               std::span<double> out) {
  const std::size_t begin = chunk * cfg.samples / kMcChunks;
  const std::size_t end = (chunk + 1) * cfg.samples / kMcChunks;
  NormalStream stream(cfg.seed, chunk);
  std::vector<double> draw(p.inputs.size());
  for (std::size_t i = begin; i < end; ++i) {
    for (std::size_t k = 0; k < p.inputs.size(); ++k) {
      draw[k] = p.inputs[k].value + p.inputs[k].error * stream.next();
    }
    out[i] = p.program.eval(draw);
  }
}

// Type-7 quantile of sorted data.
double quantile_sorted(std::span<const double> sorted, double prob) {
  const double h = static_cast<double>(sorted.size() - 1) * prob;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted.back();
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

void validate(const McConfig& cfg) {
  if (cfg.samples < 2) throw InvalidArgument("need at least 2 Monte Carlo samples");
  for (double q : cfg.quantiles) {
    if (!(q >= 0.0 && q <= 1.0)) {
      throw InvalidArgument("quantile probability " + std::to_string(q) + " not in [0, 1]");
    }
  }
}

std::vector<double> mc_sample(const Expr& expr, const UncertainEnv& env, const McConfig& cfg) {
  const SamplingPlan p = plan(expr, env, cfg);
  std::vector<double> out(cfg.samples);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(kMcChunks); ++c) {
    run_chunk(p, cfg, static_cast<std::size_t>(c), out);
  }
  return out;
}

namespace serial {

std::vector<double> mc_sample(const Expr& expr, const UncertainEnv& env, const McConfig& cfg) {
  const SamplingPlan p = plan(expr, env, cfg);
  std::vector<double> out(cfg.samples);
  for (std::size_t c = 0; c < kMcChunks; ++c) run_chunk(p, cfg, c, out);
  return out;
}

McResult mc_propagate(const Expr& expr, const UncertainEnv& env, const McConfig& cfg) {
  return summarize_samples(serial::mc_sample(expr, env, cfg), cfg);
}

}  // namespace serial

McResult summarize_samples(std::span<const double> outputs, const McConfig& cfg) {
  validate(cfg);
  std::vector<double> finite;
  finite.reserve(outputs.size());
  for (double y : outputs) {
    if (std::isfinite(y)) finite.push_back(y);
  }
  McResult r;
  r.used = finite.size();
  r.non_finite = outputs.size() - finite.size();
  if (static_cast<double>(r.non_finite) >
          kMaxNonFiniteFraction * static_cast<double>(outputs.size()) ||
      r.used < 2) {
    throw NonFiniteSamples(r.non_finite, outputs.size());
  }

  const auto n = static_cast<double>(r.used);
  double total = 0.0;
  for (double y : finite) total += y;
  r.mean = total / n;
  double squares = 0.0;
  for (double y : finite) squares += (y - r.mean) * (y - r.mean);
  r.sd = std::sqrt(squares / (n - 1.0));

  std::sort(finite.begin(), finite.end());
  r.median = quantile_sorted(finite, 0.5);
  for (double q : cfg.quantiles) r.quantile_values.push_back(quantile_sorted(finite, q));

  for (double& y : finite) y = std::fabs(y - r.median);
  std::sort(finite.begin(), finite.end());
  r.mad = kMadNormalConsistency * quantile_sorted(finite, 0.5);
  return r;
}

McResult mc_propagate(const Expr& expr, const UncertainEnv& env, const McConfig& cfg) {
  return summarize_samples(mc_sample(expr, env, cfg), cfg);
}

TsmMcmReport compare_tsm_mcm(const Expr& expr, const UncertainEnv& env, const McConfig& cfg) {
  TsmMcmReport report;
  report.tsm = eval_uncertain(expr, env);
  report.mcm = mc_propagate(expr, env, cfg);
  report.relative_gap = std::fabs(report.tsm.error - report.mcm.sd) / report.mcm.sd;
  return report;
}

}  // namespace unc
