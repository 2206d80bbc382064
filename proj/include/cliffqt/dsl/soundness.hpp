#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "cliffqt/dsl/eval.hpp"
#include "cliffqt/dsl/infer.hpp"
#include "cliffqt/random.hpp"

namespace cliffqt::dsl {

struct CheckOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  double rel_tol = kDefaultRelTol;
  std::optional<double> density;  // default_density(n) when unset
  const ClosureTables* tables = nullptr;  // checked_tables() when null
};

struct Counterexample {
  std::size_t trial = 0;
  std::uint64_t seed = 0;  // pass to instantiate() to rebuild the bindings
  std::map<std::string, std::string> bindings;
  std::string value;
  TypeSet classified;
};

struct SoundnessReport {
  std::string expr;
  TypeSet inferred;
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::optional<Counterexample> first_counterexample;
  bool passed() const { return failures == 0; }
};

/// Random bindings for every free symbol, each inside its declared type.
/// Symbol j (in name order) is drawn with seed mix_seed(trial_seed, j).
template <Scalar S>
Bindings<S> instantiate(const Program& program, const Signature& sig, std::uint64_t trial_seed,
                        double density) {
  Bindings<S> out;
  std::uint64_t stream = 0;
  for (const auto& name : free_symbols(*program.expr))
    out.emplace(name, random_instance<S>(program.env.lookup(name), sig, program.env.field(),
                                         mix_seed(trial_seed, stream++), density));
  return out;
}

inline std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  return mix_seed(seed, 0x5EED0000ULL + trial);
}

/// Evaluates the program on `trials` random instantiations and checks each
/// value lies in the inferred type. Failures are reported, not thrown.
template <Scalar S>
SoundnessReport check_soundness(const Program& program, const Signature& sig,
                                const CheckOptions& options = {}) {
  if (options.trials < 1) throw UsageError("trials must be >= 1");
  const ClosureTables& tables = options.tables ? *options.tables : checked_tables();
  const double density = options.density.value_or(default_density(sig.n()));

  SoundnessReport report;
  report.expr = format_expr(*program.expr);
  report.inferred = infer_type(*program.expr, program.env, tables);
  report.trials = options.trials;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t seed = trial_seed(options.seed, trial);
    const auto bindings = instantiate<S>(program, sig, seed, density);
    const auto value = eval_expr(*program.expr, program.env, bindings, options.rel_tol);
    if (member(value, report.inferred, options.rel_tol)) continue;
    ++report.failures;
    if (report.first_counterexample) continue;
    Counterexample cx;
    cx.trial = trial;
    cx.seed = seed;
    for (const auto& [name, mv] : bindings) cx.bindings.emplace(name, format_mv(mv));
    cx.value = format_mv(value);
    cx.classified = classify_by_rank(value, options.rel_tol);
    report.first_counterexample = std::move(cx);
  }
  return report;
}

inline nlohmann::json to_json(const SoundnessReport& r) {
  nlohmann::json cx = nullptr;
  if (r.first_counterexample) {
    const auto& c = *r.first_counterexample;
    cx = {{"trial", c.trial},
          {"seed", c.seed},
          {"bindings", c.bindings},
          {"value", c.value},
          {"classified", c.classified.to_string()}};
  }
  return {{"expr", r.expr},
          {"inferred", r.inferred.to_string()},
          {"trials", r.trials},
          {"failures", r.failures},
          {"first_counterexample", cx}};
}

inline std::string to_text(const SoundnessReport& r) {
  std::string out = r.expr + " : " + r.inferred.to_string() + "  " +
                    std::to_string(r.trials - r.failures) + "/" + std::to_string(r.trials) +
                    " trials passed";
  if (r.first_counterexample) {
    const auto& c = *r.first_counterexample;
    out += "\n  counterexample at trial " + std::to_string(c.trial) +
           " (seed " + std::to_string(c.seed) + "): value type " + c.classified.to_string();
    for (const auto& [name, v] : c.bindings) out += "\n    " + name + " = " + v;
    out += "\n    result = " + c.value;
  }
  return out;
}

}  // namespace cliffqt::dsl
