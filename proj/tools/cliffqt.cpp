// cliffqt: command-line front end for the quaternion-type toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cliffqt/cliffqt.hpp"

namespace {

using cliffqt::Backend;
using cliffqt::Field;
using cliffqt::Signature;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct CliConfig {
  std::string sig = "3,0";
  std::string field = "real";
  std::string backend = "exact";
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string density = "auto";
  bool json = false;
  std::string fault;
};

Signature parse_signature(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw cliffqt::UsageError("--sig expects P,Q");
  try {
    std::size_t used_p = 0, used_q = 0;
    const int p = std::stoi(text.substr(0, comma), &used_p);
    const int q = std::stoi(text.substr(comma + 1), &used_q);
    if (used_p != comma || used_q != text.size() - comma - 1)
      throw cliffqt::UsageError("--sig expects P,Q");
    return Signature(p, q);
  } catch (const std::logic_error&) {
    throw cliffqt::UsageError("--sig expects two integers P,Q, got '" + text + "'");
  }
}

Field parse_field(const std::string& s) { return s == "complex" ? Field::Complex : Field::Real; }

std::optional<double> parse_density(const std::string& s) {
  if (s == "auto") return std::nullopt;
  double d = 0.0;
  try {
    d = std::stod(s);
  } catch (const std::logic_error&) {
    throw cliffqt::UsageError("--density expects a number in (0,1] or 'auto'");
  }
  if (!(d > 0.0 && d <= 1.0)) throw cliffqt::UsageError("--density must lie in (0, 1]");
  return d;
}

// "comm:K,L=M" or "anti:K,L=M": overwrite one table entry.
cliffqt::ClosureTables tables_with_fault(const std::string& fault) {
  cliffqt::ClosureTables tables = cliffqt::checked_tables();
  if (fault.empty()) return tables;
  int k = -1, l = -1, m = -1;
  char op[8] = {};
  if (std::sscanf(fault.c_str(), "%4[a-z]:%d,%d=%d", op, &k, &l, &m) != 4 || k < 0 || k > 3 ||
      l < 0 || l > 3 || m < 0 || m > 3)
    throw cliffqt::UsageError("--inject-fault expects comm:K,L=M or anti:K,L=M");
  const std::string name(op);
  if (name != "comm" && name != "anti")
    throw cliffqt::UsageError("--inject-fault expects comm:K,L=M or anti:K,L=M");
  auto& table = tables.table(name == "comm" ? cliffqt::Bracket::Commutator
                                            : cliffqt::Bracket::Anticommutator);
  table[k][l] = cliffqt::main_type(m);
  return tables;
}

template <cliffqt::Scalar S>
int cmd_mul(const CliConfig& cfg, const std::string& lhs, const std::string& rhs) {
  const auto sig = parse_signature(cfg.sig);
  const auto field = parse_field(cfg.field);
  const auto u = cliffqt::parse_mv<S>(lhs, sig, field);
  const auto v = cliffqt::parse_mv<S>(rhs, sig, field);
  const auto uv = u * v;
  if (cfg.json) std::cout << cliffqt::to_json(uv).dump() << "\n";
  else std::cout << cliffqt::format_mv(uv) << "\n";
  return kExitOk;
}

template <cliffqt::Scalar S>
int cmd_classify(const CliConfig& cfg, const std::string& text) {
  const auto u = cliffqt::parse_mv<S>(text, parse_signature(cfg.sig), parse_field(cfg.field));
  const auto t = cliffqt::classify_by_rank(u);
  json components = json::object();
  std::string lines;
  for (const auto k : cliffqt::kMainTypes) {
    const auto part = cliffqt::qtype_project(u, k);
    if (part.is_zero()) continue;
    components[std::to_string(cliffqt::index(k))] = cliffqt::to_json(part);
    lines += "  " + std::to_string(cliffqt::index(k)) + ": " + cliffqt::format_mv(part) + "\n";
  }
  if (cfg.json)
    std::cout << json{{"type", t.to_string()}, {"components", components}}.dump() << "\n";
  else
    std::cout << t.to_string() << "\n" << lines;
  return kExitOk;
}

template <cliffqt::Scalar S>
int cmd_project(const CliConfig& cfg, int k, const std::string& text) {
  const auto u = cliffqt::parse_mv<S>(text, parse_signature(cfg.sig), parse_field(cfg.field));
  const auto part = cliffqt::qtype_project(u, cliffqt::main_type(k));
  if (cfg.json) std::cout << cliffqt::to_json(part).dump() << "\n";
  else std::cout << cliffqt::format_mv(part) << "\n";
  return kExitOk;
}

json table_json(const cliffqt::AtomTable& t) {
  json rows = json::array();
  for (const auto& row : t) {
    json cells = json::array();
    for (auto cell : row) cells.push_back(cliffqt::index(cell));
    rows.push_back(cells);
  }
  return rows;
}

std::string table_text(cliffqt::Bracket op, const cliffqt::AtomTable& t) {
  std::string out = op == cliffqt::Bracket::Commutator ? "[ , ]" : "{ , }";
  out += " | 0 1 2 3\n------+--------\n";
  for (int k = 0; k < 4; ++k) {
    out += "    " + std::to_string(k) + " |";
    for (int l = 0; l < 4; ++l) out += " " + std::to_string(cliffqt::index(t[k][l]));
    out += "\n";
  }
  return out;
}

int cmd_tables(const CliConfig& cfg, const std::string& which) {
  if (which != "comm" && which != "anti" && which != "both")
    throw cliffqt::UsageError("tables expects comm, anti or both");
  const auto tables = tables_with_fault(cfg.fault);
  const bool comm = which != "anti";
  const bool anti = which != "comm";
  if (cfg.json) {
    json out = json::object();
    if (comm) out["commutator"] = table_json(tables.commutator);
    if (anti) out["anticommutator"] = table_json(tables.anticommutator);
    std::cout << out.dump() << "\n";
  } else {
    if (comm) std::cout << table_text(cliffqt::Bracket::Commutator, tables.commutator);
    if (comm && anti) std::cout << "\n";
    if (anti) std::cout << table_text(cliffqt::Bracket::Anticommutator, tables.anticommutator);
  }
  return kExitOk;
}

int cmd_infer(const CliConfig& cfg, const std::string& source) {
  const auto program = cliffqt::dsl::parse_program(source, parse_field(cfg.field));
  const auto tables = tables_with_fault(cfg.fault);
  const auto t = cliffqt::dsl::infer_type(*program.expr, program.env, tables);
  if (cfg.json)
    std::cout << json{{"program", cliffqt::dsl::format_program(program)},
                      {"inferred", t.to_string()}}
                     .dump()
              << "\n";
  else
    std::cout << t.to_string() << "\n";
  return kExitOk;
}

template <cliffqt::Scalar S>
int cmd_check(const CliConfig& cfg, const std::string& source, bool corpus) {
  if (cfg.trials < 1) throw cliffqt::UsageError("--trials must be >= 1");
  const auto sig = parse_signature(cfg.sig);
  const auto tables = tables_with_fault(cfg.fault);
  cliffqt::dsl::CheckOptions options;
  options.trials = cfg.trials;
  options.seed = cfg.seed;
  options.density = parse_density(cfg.density);
  options.tables = &tables;

  std::vector<cliffqt::dsl::SoundnessReport> reports;
  std::vector<std::string> names;
  if (corpus) {
    for (const auto& entry : cliffqt::kCorpus) {
      const auto program = cliffqt::dsl::parse_program(entry.source, entry.field);
      reports.push_back(cliffqt::dsl::check_soundness<S>(program, sig, options));
      names.emplace_back(entry.name);
    }
  } else {
    if (source.empty()) throw cliffqt::UsageError("check needs a PROGRAM or --corpus");
    const auto program = cliffqt::dsl::parse_program(source, parse_field(cfg.field));
    reports.push_back(cliffqt::dsl::check_soundness<S>(program, sig, options));
    names.emplace_back("program");
  }

  bool ok = true;
  json out = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    ok = ok && reports[i].passed();
    if (cfg.json) {
      json r = cliffqt::dsl::to_json(reports[i]);
      if (corpus) r["name"] = names[i];
      out.push_back(r);
    } else {
      std::cout << (reports[i].passed() ? "PASS " : "FAIL ");
      if (corpus) std::cout << names[i] << ": ";
      std::cout << cliffqt::dsl::to_text(reports[i]) << "\n";
    }
  }
  if (cfg.json) std::cout << (corpus ? out : out.at(0)).dump() << "\n";
  return ok ? kExitOk : kExitFailed;
}

int cmd_selftest(const CliConfig& cfg, int max_n) {
  namespace v = cliffqt::verify;
  if (max_n < 1 || max_n > v::kMaxExhaustiveN)
    throw cliffqt::UsageError("--max-n must lie in 1.." + std::to_string(v::kMaxExhaustiveN));
  const auto tables = tables_with_fault(cfg.fault);
  const auto start = std::chrono::steady_clock::now();

  const auto table_reports = v::derive_tables(max_n, tables);
  const auto oracle = v::oracle_sweep(max_n);
  std::vector<v::DimensionReport> dims;
  for (const auto& sig : v::signatures_up_to(max_n)) dims.push_back(v::dimension_audit(sig));
  using cliffqt::MainType;
  const auto anti_conditions = v::check_quaternion_conditions(
      cliffqt::Bracket::Anticommutator, {MainType::T0, MainType::T1, MainType::T2, MainType::T3},
      max_n);
  const auto comm_conditions = v::check_quaternion_conditions(
      cliffqt::Bracket::Commutator, {MainType::T2, MainType::T3, MainType::T0, MainType::T1},
      max_n);
  std::uint64_t condition_pairs = 0, condition_violations = 0;
  for (const auto* list : {&anti_conditions, &comm_conditions})
    for (const auto& c : *list) {
      condition_pairs += c.pairs_checked;
      condition_violations += c.violations;
    }

  bool ok = oracle.passed();
  json tables_json = json::array();
  json dims_json = json::array();
  for (const auto& r : table_reports) {
    ok = ok && r.passed();
    tables_json.push_back(v::to_json(r));
  }
  std::size_t dims_failed = 0;
  for (const auto& d : dims) {
    dims_failed += d.passed() ? 0 : 1;
    dims_json.push_back(v::to_json(d));
  }
  ok = ok && dims_failed == 0 && condition_violations == 0;
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (cfg.json) {
    // Timing is left out so repeated runs print identical bytes.
    std::cout << json{{"max_n", max_n},
                      {"tables", tables_json},
                      {"oracle", {{"pairs_checked", oracle.pairs_checked},
                                  {"discrepancies", oracle.discrepancies},
                                  {"examples", oracle.examples}}},
                      {"dimensions", dims_json},
                      {"quaternion_conditions", {{"conditions", anti_conditions.size() +
                                                                    comm_conditions.size()},
                                                 {"pairs_checked", condition_pairs},
                                                 {"violations", condition_violations}}},
                      {"passed", ok}}
                     .dump()
              << "\n";
  } else {
    for (const auto& r : table_reports) {
      std::cout << (r.passed() ? "PASS " : "FAIL ") << to_string(r.op) << " table over "
                << r.signatures.size() << " signatures, " << r.mismatches.size()
                << " mismatches";
      if (r.unwitnessed > 0) std::cout << ", " << r.unwitnessed << " cells unwitnessed";
      std::cout << "\n";
      for (const auto& m : r.mismatches) {
        std::cout << "  entry (" << cliffqt::index(m.lhs) << "," << cliffqt::index(m.rhs)
                  << "): table says " << m.expected.to_string() << ", blades give "
                  << m.derived.to_string() << "\n";
        for (const auto& w : m.witnesses)
          std::cout << "    witness (" << w.sig.to_string() << ") "
                    << cliffqt::detail::format_blade(w.lhs, w.sig.n()) << ", "
                    << cliffqt::detail::format_blade(w.rhs, w.sig.n()) << " -> "
                    << w.result.to_string() << "\n";
      }
    }
    std::cout << (oracle.passed() ? "PASS " : "FAIL ") << "blade product oracle: "
              << oracle.pairs_checked << " pairs, " << oracle.discrepancies
              << " discrepancies\n";
    std::cout << (dims_failed == 0 ? "PASS " : "FAIL ") << "dimension audit: " << dims.size()
              << " signatures, " << dims_failed << " failed\n";
    std::cout << (condition_violations == 0 ? "PASS " : "FAIL ")
              << "quaternion-type conditions: " << anti_conditions.size() + comm_conditions.size()
              << " conditions, " << condition_pairs << " pairs, " << condition_violations
              << " violations\n";
    std::cout << (ok ? "selftest passed" : "selftest FAILED") << " in " << seconds << " s\n";
  }
  return ok ? kExitOk : kExitFailed;
}

template <class Fn>
int dispatch_backend(const CliConfig& cfg, Fn&& fn) {
  if (cfg.backend == "float") return fn(double{});
  return fn(cliffqt::Rational{});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quaternion-type toolkit for real and complex Clifford algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--sig", cfg.sig, "Signature P,Q")->capture_default_str();
  app.add_option("--field", cfg.field, "Coefficient field")
      ->check(CLI::IsMember({"real", "complex"}))
      ->capture_default_str();
  app.add_option("--backend", cfg.backend, "Arithmetic backend")
      ->check(CLI::IsMember({"exact", "float"}))
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Base seed")->envname("CLIFFQT_SEED")->capture_default_str();
  app.add_option("--trials", cfg.trials, "Random trials per program")->capture_default_str();
  app.add_option("--density", cfg.density, "Fraction of nonzero coefficients, or 'auto'")
      ->capture_default_str();
  app.add_flag("--json", cfg.json, "Structured output");
  app.add_option("--inject-fault", cfg.fault,
                 "Corrupt one closure table entry, e.g. comm:0,1=1 (self-test aid)");

  std::string lhs, rhs, mv, program, which = "both";
  int type_k = 0, max_n = 5;
  bool corpus = false;

  auto* mul = app.add_subcommand("mul", "Geometric product of two multivectors");
  mul->add_option("lhs", lhs)->required();
  mul->add_option("rhs", rhs)->required();

  auto* classify = app.add_subcommand("classify", "Quaternion type of a multivector");
  classify->add_option("mv", mv)->required();

  auto* project = app.add_subcommand("project", "Projection onto a main quaternion type");
  project->add_option("--type", type_k, "Main type 0..3")->check(CLI::Range(0, 3))->required();
  project->add_option("mv", mv)->required();

  auto* tables = app.add_subcommand("tables", "Print the commutator/anticommutator tables");
  tables->add_option("op", which, "comm, anti or both")->capture_default_str();

  auto* infer = app.add_subcommand("infer", "Infer the quaternion type of a DSL program");
  infer->add_option("program", program)->required();

  auto* check = app.add_subcommand("check", "Check inferred types against random evaluation");
  check->add_option("program", program);
  check->add_flag("--corpus", corpus, "Run the bundled program corpus");

  auto* selftest = app.add_subcommand("selftest", "Exhaustive table, oracle and dimension checks");
  selftest->add_option("--max-n", max_n, "Largest n = p + q to enumerate (1..8)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (mul->parsed())
      return dispatch_backend(cfg, [&]<class S>(S) { return cmd_mul<S>(cfg, lhs, rhs); });
    if (classify->parsed())
      return dispatch_backend(cfg, [&]<class S>(S) { return cmd_classify<S>(cfg, mv); });
    if (project->parsed())
      return dispatch_backend(cfg, [&]<class S>(S) { return cmd_project<S>(cfg, type_k, mv); });
    if (tables->parsed()) return cmd_tables(cfg, which);
    if (infer->parsed()) return cmd_infer(cfg, program);
    if (check->parsed())
      return dispatch_backend(cfg,
                              [&]<class S>(S) { return cmd_check<S>(cfg, program, corpus); });
    if (selftest->parsed()) return cmd_selftest(cfg, max_n);
  } catch (const cliffqt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cliffqt::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cliffqt::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
