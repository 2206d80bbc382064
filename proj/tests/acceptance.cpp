// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cliffqt/cliffqt.hpp"

using namespace cliffqt;

namespace {

// Wall-clock limits in seconds.
constexpr double kLimitTables = 60.0;
constexpr double kLimitConditions = 60.0;
constexpr double kLimitEigenspaces = 30.0;
constexpr double kLimitFixedForms = 60.0;
constexpr double kLimitVanishing = 60.0;
constexpr double kLimitTwenty = 120.0;
constexpr double kLimitTypeRank = 60.0;
constexpr double kLimitSoundness = 300.0;
constexpr double kLimitOracle = 60.0;

// Every check below runs on the exact backend, where membership is strict:
// a component is outside a type only if its rational coefficient is nonzero.

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;
};

TypeSet ts(std::string_view s) { return TypeSet::parse(s); }

ExactMultivector random_in(TypeSet t, const Signature& sig, Field f, std::uint64_t seed,
                           double density = 1.0) {
  return random_instance<Rational>(t, sig, f, seed, density);
}

std::uint64_t choose(int n, int k) {
  std::uint64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * static_cast<std::uint64_t>(n - k + j) / j;
  return r;
}

// Dimension of an atom subspace at n, as a binomial sum over r ≡ k (mod 4).
std::uint64_t atom_dim(int n, int k) {
  std::uint64_t d = 0;
  for (int r = k; r <= n; r += 4) d += choose(n, r);
  return d;
}

Outcome ac1_tables() {
  const auto reports = verify::derive_tables(5);
  Outcome o;
  std::size_t mismatches = 0;
  for (const auto& r : reports) {
    mismatches += r.mismatches.size();
    o.ok = o.ok && r.passed() && r.unwitnessed == 0 && r.signatures.size() == 20;
  }
  o.detail = "both 4x4 tables re-derived over 20 signatures (n <= 5), " +
             std::to_string(mismatches) + " mismatches";
  return o;
}

Outcome ac2_conditions() {
  using MT = MainType;
  const auto anti = verify::check_quaternion_conditions(Bracket::Anticommutator,
                                                        {MT::T0, MT::T1, MT::T2, MT::T3}, 5);
  const auto comm = verify::check_quaternion_conditions(Bracket::Commutator,
                                                        {MT::T2, MT::T3, MT::T0, MT::T1}, 5);
  Outcome o;
  std::uint64_t pairs = 0, violations = 0;
  for (const auto* list : {&anti, &comm}) {
    o.ok = o.ok && list->size() == 16;
    for (const auto& c : *list) {
      pairs += c.pairs_checked;
      violations += c.violations;
      o.ok = o.ok && c.pairs_checked > 0;
    }
  }
  o.ok = o.ok && violations == 0;
  o.detail = "32 membership conditions, " + std::to_string(pairs) + " blade pairs, " +
             std::to_string(violations) + " failures";
  return o;
}

Outcome ac3_eigenspaces() {
  Outcome o;
  std::size_t samples = 0;
  for (Field field : {Field::Real, Field::Complex})
    for (const auto& c : conjugations(field))
      for (int sign : {+1, -1}) {
        const TypeSet space = eigenspace(c, sign, field);
        for (const auto& sig : {Signature(2, 2), Signature(3, 1)})
          for (std::uint64_t i = 0; i < 500; ++i) {
            const auto u = random_in(space, sig, field, mix_seed(c.flags() * 4 + sign + 2, i));
            const auto image = apply_conjugation(u, c);
            if (image != (sign > 0 ? u : -u)) o.ok = false;
            ++samples;
          }
        // Real dimension at n = 4 by applying c to each real basis vector b
        // (and i*b over ℂ) and counting those with c(v) = sign*v.
        const Signature sig(2, 2);
        std::uint64_t counted = 0, expected = 0;
        for (std::uint64_t m = 0; m < 16; ++m) {
          std::vector<Coefficient<Rational>> scalars = {Coefficient<Rational>(Rational(1))};
          if (field == Field::Complex) scalars.push_back(Coefficient<Rational>::imaginary_unit());
          for (const auto& s : scalars) {
            const auto v = ExactMultivector::blade(sig, field, Blade{m}, s);
            if (apply_conjugation(v, c) == (sign > 0 ? v : -v)) ++counted;
          }
        }
        for (const auto& atom : space.atoms()) expected += atom_dim(4, index(atom.main));
        if (counted != expected) {
          o.ok = false;
          o.notes.push_back(c.name() + " sign " + std::to_string(sign) + ": dimension " +
                            std::to_string(counted) + " vs " + std::to_string(expected));
        }
      }
  const bool dims = atom_dim(4, 0) == 2 && atom_dim(4, 1) == 4 && atom_dim(4, 2) == 6 &&
                    atom_dim(4, 3) == 4;
  o.ok = o.ok && dims;
  o.detail = "3 real + 7 complex conjugations, both signs, " + std::to_string(samples) +
             " samples exactly +-U; n=4 dims (2,4,6,4) and all eigenspace dimensions match";
  return o;
}

Outcome ac4_fixed_forms() {
  Outcome o;
  const Signature sig(2, 2);
  std::size_t checks = 0;
  auto in = [&](const ExactMultivector& x, const char* t) {
    ++checks;
    if (!classify_by_rank(x).subset_of(ts(t))) o.ok = false;
  };
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto u = random_in(TypeSet::full(Field::Real), sig, Field::Real, mix_seed(401, i));
    const auto ur = reversion(u), ug = grade_involution(u), urg = grade_involution(ur);
    in(u * ur, "01"), in(ur * u, "01"), in(commutator(u, ur), "01"), in(anticommutator(u, ur), "01");
    in(commutator(u, ug), "13"), in(anticommutator(u, ug), "02");
    in(u * urg, "03"), in(urg * u, "03"), in(commutator(u, urg), "03");
    in(anticommutator(u, urg), "03");
  }
  std::optional<std::string> literal_counterexample;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto u =
        random_in(TypeSet::full(Field::Complex), sig, Field::Complex, mix_seed(402, i));
    const auto ur = reversion(u), ug = grade_involution(u), urg = grade_involution(ur);
    const auto uc = complex_conjugate(u), uh = pseudo_hermitian(u);
    const auto ugc = grade_involution(uc), ugh = grade_involution(uh);
    in(u * ur, "01+i01"), in(ur * u, "01+i01"), in(commutator(u, ur), "01+i01");
    in(anticommutator(u, ur), "01+i01");
    in(commutator(u, ug), "13+i13"), in(anticommutator(u, ug), "02+i02");
    in(commutator(u, uc), "i0123"), in(anticommutator(u, uc), "0123");
    in(u * uh, "01+i23"), in(uh * u, "01+i23"), in(commutator(u, uh), "01+i23");
    in(anticommutator(u, uh), "01+i23");
    in(u * urg, "03+i03"), in(urg * u, "03+i03"), in(commutator(u, urg), "03+i03");
    in(anticommutator(u, urg), "03+i03");
    in(commutator(u, ugc), "13+i02"), in(anticommutator(u, ugc), "02+i13");
    in(u * ugh, "03+i12"), in(ugh * u, "03+i12"), in(commutator(u, ugh), "03+i12");
    in(anticommutator(u, ugh), "03+i12");
    if (!literal_counterexample && !classify_by_rank(anticommutator(u, urg)).subset_of(ts("0123")))
      literal_counterexample = "trial " + std::to_string(i);
  }
  // A minimal witness for the unconjugated reading.
  const auto w = parse_mv("1 + i*e123", Signature(3, 0), Field::Complex);
  const auto wx = anticommutator(w, grade_involution(reversion(w)));
  o.notes.push_back("the real-valued anticommutator is {U, conj(U)}; {U, U^~} is not in 0123 "
                    "over C in general: U = " + format_mv(w) + " in Cl(3,0) gives " +
                    format_mv(wx) + " of type " + classify_by_rank(wx).to_string() +
                    (literal_counterexample ? ", random " + *literal_counterexample : ""));
  o.detail = "10 real and 22 complex forms, 1000 samples each at (2,2), " +
             std::to_string(checks) + " strict memberships";
  return o;
}

Outcome ac5_vanishing() {
  struct Hypothesis {
    Field field;
    const char* type;
    Conjugation c;
  };
  const Hypothesis cases[] = {
      {Field::Real, "01", Conjugation::reversion()},
      {Field::Real, "02", Conjugation::grade_involution()},
      {Field::Real, "03", Conjugation::gri_rev()},
      {Field::Complex, "01+i01", Conjugation::reversion()},
      {Field::Complex, "02+i02", Conjugation::grade_involution()},
      {Field::Complex, "0123", Conjugation::complex_conj()},
      {Field::Complex, "01+i23", Conjugation::pseudo_hermitian()},
      {Field::Complex, "03+i03", Conjugation::gri_rev()},
      {Field::Complex, "02+i13", Conjugation::gri_conj()},
      {Field::Complex, "03+i12", Conjugation::gri_pseudo_hermitian()},
  };
  Outcome o;
  const Signature sig(3, 1);
  std::size_t nonzero = 0;
  for (const auto& h : cases) {
    if (eigenspace(h.c, +1, h.field) != ts(h.type)) o.ok = false;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const auto u = random_in(ts(h.type), sig, h.field, mix_seed(500 + h.c.flags(), i));
      if (!commutator(u, apply_conjugation(u, h.c)).is_zero()) ++nonzero;
    }
  }
  // For n <= 3, [U, U^~] = 0 for every U: U ↦ [U, U^~] is quadratic, so it
  // vanishes identically iff [a, b^~] + [b, a^~] = 0 on every basis pair.
  std::size_t pairs = 0, small_failures = 0;
  for (const auto& s : verify::signatures_up_to(3)) {
    const std::uint64_t count = std::uint64_t{1} << s.n();
    for (std::uint64_t x = 0; x < count; ++x)
      for (std::uint64_t y = x; y < count; ++y) {
        const auto a = ExactMultivector::blade(s, Field::Real, Blade{x});
        const auto b = ExactMultivector::blade(s, Field::Real, Blade{y});
        const auto rg = Conjugation::gri_rev();
        ++pairs;
        if (!(commutator(a, apply_conjugation(b, rg)) + commutator(b, apply_conjugation(a, rg)))
                 .is_zero())
          ++small_failures;
      }
  }
  o.ok = o.ok && nonzero == 0 && small_failures == 0;
  o.detail = "10 hypotheses x 1000 samples at (3,1), " + std::to_string(nonzero) +
             " nonzero commutators; n <= 3 [U,U^~] = 0 on " + std::to_string(pairs) +
             " polarized basis pairs, " + std::to_string(small_failures) + " failures";
  return o;
}

Outcome ac6_twenty() {
  const Signature sig(20, 0);
  const double density = default_density(sig.n());
  const auto u = random_in(ts("2"), sig, Field::Real, mix_seed(20, 1), density);
  const auto v = random_in(ts("2"), sig, Field::Real, mix_seed(20, 2), density);
  Outcome o;
  const std::set<int> ranks = {2, 6, 10, 14, 18};
  for (const auto* x : {&u, &v})
    for (const auto& [blade, c] : x->terms())
      if (!ranks.contains(blade.rank())) o.ok = false;
  const auto uv = commutator(u, v);
  const TypeSet t = classify_by_rank(uv);
  o.ok = o.ok && t.subset_of(ts("2")) && !uv.is_zero();
  o.detail = "Cl(20,0), density " + std::to_string(density).substr(0, 5) + ": " +
             std::to_string(u.size()) + " and " + std::to_string(v.size()) +
             " terms, [U,V] has " + std::to_string(uv.size()) + " terms of type " + t.to_string();
  return o;
}

Outcome ac7_type_rank() {
  Outcome o;
  std::size_t blades = 0;
  for (const auto& sig : verify::signatures_up_to(4)) {
    const int n = sig.n();
    const auto audit = verify::dimension_audit(sig);
    o.ok = o.ok && audit.passed();
    for (int k = 0; k < 4; ++k) {
      // n < 4: atom k̄ is exactly rank k. n = 4: 0̄ = rank 0 ⊕ rank 4.
      std::uint64_t want = k <= n ? choose(n, k) : 0;
      if (n == 4 && k == 0) want = choose(4, 0) + choose(4, 4);
      if (audit.type_dims[static_cast<std::size_t>(k)] != want) o.ok = false;
    }
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      ++blades;
      const int r = Blade{m}.rank();
      const auto b = ExactMultivector::blade(sig, Field::Real, Blade{m});
      const MainType k = main_type(r);
      if (!member(b, TypeSet::of({index(k)}))) o.ok = false;
      for (MainType l : kMainTypes)
        if (member(b, TypeSet::of({index(l)})) != (l == k)) o.ok = false;
      if (qtype_project(b, k) != b) o.ok = false;
    }
  }
  o.detail = "dimension audits n <= 4 and " + std::to_string(blades) +
             " blade memberships: k = rank for n < 4, 0 = rank 0 + rank 4 at n = 4";
  return o;
}

Outcome ac8_soundness() {
  Outcome o;
  std::set<std::string> covered;
  for (const auto& entry : kCorpus) covered.insert(std::string(entry.name));
  const bool enough = kCorpus.size() >= 20;
  std::size_t programs = 0, trials = 0, failures = 0;
  dsl::CheckOptions options;
  options.trials = 100;
  options.seed = 8;
  for (const auto& sig : {Signature(2, 2), Signature(4, 1)})
    for (const auto& entry : kCorpus) {
      const auto program = dsl::parse_program(entry.source, entry.field);
      const auto report = dsl::check_soundness<Rational>(program, sig, options);
      ++programs;
      trials += report.trials;
      failures += report.failures;
      if (!report.inferred.subset_of(ts(entry.claim))) {
        o.ok = false;
        o.notes.push_back(std::string(entry.name) + " inferred " + report.inferred.to_string());
      }
      if (!report.passed()) o.notes.push_back(dsl::to_text(report));
    }

  // Fault injection: a wrong commutator entry must surface a counterexample
  // whose seed rebuilds the failing bindings.
  auto broken = ClosureTables::hard_coded();
  broken.commutator[1][3] = MainType::T2;
  options.tables = &broken;
  const auto program = dsl::parse_program("let x:1; let y:3; [x, y]", Field::Real);
  const Signature sig(2, 2);
  const auto report = dsl::check_soundness<Rational>(program, sig, options);
  bool detected = false;
  if (!report.passed() && report.first_counterexample) {
    const auto& cx = *report.first_counterexample;
    const auto bindings =
        dsl::instantiate<Rational>(program, sig, cx.seed, default_density(sig.n()));
    const auto value = dsl::eval_expr(*program.expr, program.env, bindings);
    detected = format_mv(value) == cx.value && !member(value, report.inferred);
    o.notes.push_back("injected fault caught at trial " + std::to_string(cx.trial) + ", seed " +
                      std::to_string(cx.seed) + ", value type " + cx.classified.to_string());
  }
  o.ok = o.ok && enough && failures == 0 && detected;
  o.detail = std::to_string(kCorpus.size()) + " corpus programs at (2,2) and (4,1), " +
             std::to_string(trials) + " trials, " + std::to_string(failures) +
             " failures; fault injection " + (detected ? "detected" : "MISSED");
  (void)programs;
  return o;
}

Outcome ac9_oracle() {
  const auto sweep = verify::oracle_sweep(8);
  Outcome o;
  o.ok = sweep.passed();
  o.detail = std::to_string(sweep.pairs_checked) + " blade pairs over all signatures n <= 8, " +
             std::to_string(sweep.discrepancies) + " discrepancies";
  for (const auto& e : sweep.examples) o.notes.push_back(e);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* title;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "closure tables", kLimitTables, ac1_tables},
      {"AC2", "quaternion-type algebra conditions", kLimitConditions, ac2_conditions},
      {"AC3", "conjugation eigenspaces", kLimitEigenspaces, ac3_eigenspaces},
      {"AC4", "conjugation-fixed forms", kLimitFixedForms, ac4_fixed_forms},
      {"AC5", "vanishing commutators", kLimitVanishing, ac5_vanishing},
      {"AC6", "sparse n = 20 commutator", kLimitTwenty, ac6_twenty},
      {"AC7", "type and rank for n <= 4", kLimitTypeRank, ac7_type_rank},
      {"AC8", "inference soundness", kLimitSoundness, ac8_soundness},
      {"AC9", "blade product oracle", kLimitOracle, ac9_oracle},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit;
    const bool pass = o.ok && in_time;
    failed += pass ? 0 : 1;
    std::printf("%s %s: %s: %s [%.2f s, limit %.0f s%s]\n", c.id, pass ? "PASS" : "FAIL",
                c.title, o.detail.c_str(), secs, c.limit, in_time ? "" : ", EXCEEDED");
    for (const auto& n : o.notes) std::printf("    note: %s\n", n.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
