#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cliffqt/mv_io.hpp"
#include "cliffqt/qtype.hpp"

namespace cliffqt::verify {

inline constexpr int kMaxExhaustiveN = 8;

/// Product of two blades by literal symbol manipulation: concatenate the
/// generator lists, then bubble adjacent pairs into order, flipping the sign
/// on each swap of distinct generators and contracting e^a e^a = η^{aa}.
/// Deliberately shares nothing with the bitmask kernel.
inline SignedBlade naive_blade_product(Blade a, Blade b, const Signature& sig) {
  std::vector<int> word = a.indices();
  const auto rhs = b.indices();
  word.insert(word.end(), rhs.begin(), rhs.end());
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] == word[i + 1]) {
        sign *= sig.eta(word[i]);
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(i),
                   word.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        sign = -sign;
        changed = true;
      }
    }
  }
  return {sign, Blade::from_indices(word)};
}

inline std::vector<Signature> signatures_up_to(int max_n) {
  std::vector<Signature> out;
  for (int n = 1; n <= max_n; ++n)
    for (int p = n; p >= 0; --p) out.emplace_back(p, n - p);
  return out;
}

struct OracleSweep {
  std::uint64_t pairs_checked = 0;
  std::uint64_t discrepancies = 0;
  std::vector<std::string> examples;  // first few disagreements
  bool passed() const { return discrepancies == 0; }
};

/// naive_blade_product against blade_mul on every blade pair of every
/// signature with n <= max_n.
inline OracleSweep oracle_sweep(int max_n) {
  if (max_n < 1 || max_n > kMaxExhaustiveN)
    throw UsageError("oracle sweep bound must lie in 1.." + std::to_string(kMaxExhaustiveN));
  OracleSweep out;
  for (const auto& sig : signatures_up_to(max_n)) {
    const std::uint64_t count = std::uint64_t{1} << sig.n();
    for (std::uint64_t x = 0; x < count; ++x)
      for (std::uint64_t y = 0; y < count; ++y) {
        ++out.pairs_checked;
        if (naive_blade_product(Blade{x}, Blade{y}, sig) == blade_mul(Blade{x}, Blade{y}, sig))
          continue;
        ++out.discrepancies;
        if (out.examples.size() < 5)
          out.examples.push_back("(" + sig.to_string() + ") " +
                                 detail::format_blade(Blade{x}, sig.n()) + " * " +
                                 detail::format_blade(Blade{y}, sig.n()));
      }
  }
  return out;
}

struct Witness {
  Signature sig{1, 0};
  Blade lhs;
  Blade rhs;
  TypeSet result;
};

struct TableMismatch {
  MainType lhs;
  MainType rhs;
  TypeSet expected;
  TypeSet derived;
  std::vector<Witness> witnesses;  // blade pairs whose bracket leaves `expected`
};

struct TableReport {
  Bracket op = Bracket::Commutator;
  DerivedAtomTable derived{};
  std::vector<TableMismatch> mismatches;
  std::vector<Signature> signatures;
  int unwitnessed = 0;  // cells no blade pair reaches (small n)
  bool passed() const { return mismatches.empty(); }
};

/// Re-derives both atom tables from exact multivector brackets of every basis
/// blade pair over all signatures with n <= max_n, and compares each entry
/// with `tables`. A cell with no nonzero bracket (possible for n < 4) is
/// counted as unwitnessed rather than as a mismatch.
inline std::array<TableReport, 2> derive_tables(int max_n,
                                                const ClosureTables& tables = checked_tables()) {
  if (max_n < 1 || max_n > kMaxExhaustiveN)
    throw UsageError("table derivation bound must lie in 1.." + std::to_string(kMaxExhaustiveN));
  std::array<TableReport, 2> reports;
  reports[0].op = Bracket::Commutator;
  reports[1].op = Bracket::Anticommutator;
  // Up to three witnesses per cell for entries that disagree with `tables`.
  std::array<std::array<std::array<std::vector<Witness>, 4>, 4>, 2> witnesses;

  for (const auto& sig : signatures_up_to(max_n)) {
    for (auto& r : reports) r.signatures.push_back(sig);
    const std::uint64_t count = std::uint64_t{1} << sig.n();
    std::vector<ExactMultivector> blades;
    blades.reserve(count);
    for (std::uint64_t m = 0; m < count; ++m)
      blades.push_back(ExactMultivector::blade(sig, Field::Real, Blade{m}));
    for (std::uint64_t x = 0; x < count; ++x)
      for (std::uint64_t y = 0; y < count; ++y) {
        const int kx = index(main_type_of_rank(Blade{x}.rank()));
        const int ky = index(main_type_of_rank(Blade{y}.rank()));
        const auto uv = blades[x] * blades[y];
        const auto vu = blades[y] * blades[x];
        const std::array<ExactMultivector, 2> results = {uv - vu, uv + vu};
        for (int op = 0; op < 2; ++op) {
          const TypeSet t = classify_by_rank(results[op]);
          reports[op].derived[kx][ky] |= t;
          const TypeSet expected =
              TypeSet::of({index(tables.table(reports[op].op)[kx][ky])});
          auto& w = witnesses[op][kx][ky];
          if (!t.subset_of(expected) && w.size() < 3)
            w.push_back({sig, Blade{x}, Blade{y}, t});
        }
      }
  }

  for (int op = 0; op < 2; ++op) {
    auto& report = reports[op];
    for (int k = 0; k < 4; ++k)
      for (int l = 0; l < 4; ++l) {
        const TypeSet expected = TypeSet::of({index(tables.table(report.op)[k][l])});
        if (report.derived[k][l].count() == 0) {
          ++report.unwitnessed;
          continue;
        }
        if (report.derived[k][l] != expected)
          report.mismatches.push_back(
              {main_type(k), main_type(l), expected, report.derived[k][l], witnesses[op][k][l]});
      }
  }
  return reports;
}

/// One membership condition of a quaternion-type algebra: lhs ∘ rhs ∈ target.
struct QuaternionCondition {
  MainType lhs;
  MainType rhs;
  MainType target;
  std::uint64_t pairs_checked = 0;
  std::uint64_t violations = 0;
};

/// The 16 conditions E∘E, I∘I, J∘J, K∘K ∈ E; E∘I, I∘E, K∘J, J∘K ∈ I; ...
/// for the decomposition (E,I,J,K) = `roles`, checked on every basis blade
/// pair over all signatures with n <= max_n. Writing E,I,J,K as 0,1,2,3 the
/// target of (x, y) is x XOR y.
inline std::vector<QuaternionCondition> check_quaternion_conditions(
    Bracket op, std::array<MainType, 4> roles, int max_n) {
  if (max_n < 1 || max_n > kMaxExhaustiveN)
    throw UsageError("condition check bound must lie in 1.." + std::to_string(kMaxExhaustiveN));
  std::vector<QuaternionCondition> out;
  std::array<int, 4> role_of{};
  for (int r = 0; r < 4; ++r) role_of[index(roles[r])] = r;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) out.push_back({roles[x], roles[y], roles[x ^ y]});

  for (const auto& sig : signatures_up_to(max_n)) {
    const std::uint64_t count = std::uint64_t{1} << sig.n();
    for (std::uint64_t a = 0; a < count; ++a)
      for (std::uint64_t b = 0; b < count; ++b) {
        const auto u = ExactMultivector::blade(sig, Field::Real, Blade{a});
        const auto v = ExactMultivector::blade(sig, Field::Real, Blade{b});
        const auto result = op == Bracket::Commutator ? commutator(u, v) : anticommutator(u, v);
        const int x = role_of[index(main_type_of_rank(Blade{a}.rank()))];
        const int y = role_of[index(main_type_of_rank(Blade{b}.rank()))];
        auto& cond = out[static_cast<std::size_t>(x * 4 + y)];
        ++cond.pairs_checked;
        if (!member(result, TypeSet::of({index(cond.target)}))) ++cond.violations;
      }
  }
  return out;
}

struct DimensionReport {
  Signature sig{1, 0};
  std::vector<std::uint64_t> rank_dims;      // counted blades per rank
  std::array<std::uint64_t, 4> type_dims{};  // counted blades per main type
  std::uint64_t even = 0;
  std::uint64_t odd = 0;
  std::uint64_t total = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Counts basis blades by rank, main type and parity and checks them against
/// C(n,k), the rank-mod-4 binomial sums, 2^{n-1} and 2^n.
inline DimensionReport dimension_audit(const Signature& sig) {
  const int n = sig.n();
  if (n > 24) throw UsageError("dimension audit enumerates blades; n must be <= 24");
  DimensionReport out;
  out.sig = sig;
  out.rank_dims.assign(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < count; ++m) {
    const int r = std::popcount(m);
    ++out.rank_dims[static_cast<std::size_t>(r)];
    ++out.type_dims[static_cast<std::size_t>(r % 4)];
    ++(r % 2 == 0 ? out.even : out.odd);
    ++out.total;
  }
  auto expect = [&](std::uint64_t got, std::uint64_t want, const std::string& what) {
    if (got != want)
      out.failures.push_back(what + ": counted " + std::to_string(got) + ", expected " +
                             std::to_string(want));
  };
  for (int k = 0; k <= n; ++k)
    expect(out.rank_dims[static_cast<std::size_t>(k)], binomial(n, k),
           "rank " + std::to_string(k));
  for (MainType k : kMainTypes)
    expect(out.type_dims[static_cast<std::size_t>(index(k))], type_dimension(n, k),
           "type " + std::to_string(index(k)));
  expect(out.even, count / 2, "even");
  expect(out.odd, count / 2, "odd");
  expect(out.total, count, "total");
  return out;
}

// Structured output -----------------------------------------------------------

inline nlohmann::json to_json(const TableReport& r) {
  nlohmann::json derived = nlohmann::json::array();
  for (const auto& row : r.derived) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : row) cells.push_back(cell.to_string());
    derived.push_back(cells);
  }
  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : r.mismatches) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : m.witnesses)
      w.push_back({{"signature", {{"p", x.sig.p()}, {"q", x.sig.q()}}},
                   {"lhs", detail::format_blade(x.lhs, x.sig.n())},
                   {"rhs", detail::format_blade(x.rhs, x.sig.n())},
                   {"result_type", x.result.to_string()}});
    mismatches.push_back({{"lhs", index(m.lhs)},
                          {"rhs", index(m.rhs)},
                          {"expected", m.expected.to_string()},
                          {"derived", m.derived.to_string()},
                          {"witnesses", w}});
  }
  nlohmann::json sigs = nlohmann::json::array();
  for (const auto& s : r.signatures) sigs.push_back({{"p", s.p()}, {"q", s.q()}});
  return {{"op", std::string(to_string(r.op))},
          {"derived", derived},
          {"mismatches", mismatches},
          {"signatures", sigs},
          {"unwitnessed", r.unwitnessed},
          {"passed", r.passed()}};
}

inline nlohmann::json to_json(const DimensionReport& r) {
  return {{"signature", {{"p", r.sig.p()}, {"q", r.sig.q()}}},
          {"rank_dims", r.rank_dims},
          {"type_dims", r.type_dims},
          {"even", r.even},
          {"odd", r.odd},
          {"total", r.total},
          {"failures", r.failures},
          {"passed", r.passed()}};
}

}  // namespace cliffqt::verify
