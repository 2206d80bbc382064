#pragma once

#include <array>
#include <string_view>

#include "cliffqt/scalar.hpp"

namespace cliffqt {

/// A DSL program with the type set its value is known to lie in. Inference
/// must return a subset of `claim`.
struct CorpusProgram {
  std::string_view name;
  Field field;
  std::string_view source;
  std::string_view claim;
};

// clang-format off
inline constexpr std::array kCorpus = {
    // Commutator table, one program per distinct entry.
    CorpusProgram{"comm-00", Field::Real, "let x:0; let y:0; [x, y]", "2"},
    CorpusProgram{"comm-11", Field::Real, "let x:1; let y:1; [x, y]", "2"},
    CorpusProgram{"comm-22", Field::Real, "let x:2; let y:2; [x, y]", "2"},
    CorpusProgram{"comm-33", Field::Real, "let x:3; let y:3; [x, y]", "2"},
    CorpusProgram{"comm-02", Field::Real, "let x:0; let y:2; [x, y]", "0"},
    CorpusProgram{"comm-12", Field::Real, "let x:1; let y:2; [x, y]", "1"},
    CorpusProgram{"comm-32", Field::Real, "let x:3; let y:2; [x, y]", "3"},
    CorpusProgram{"comm-01", Field::Real, "let x:0; let y:1; [x, y]", "3"},
    CorpusProgram{"comm-03", Field::Real, "let x:0; let y:3; [x, y]", "1"},
    CorpusProgram{"comm-13", Field::Real, "let x:1; let y:3; [x, y]", "0"},
    // Anticommutator table.
    CorpusProgram{"anti-11", Field::Real, "let x:1; let y:1; {x, y}", "0"},
    CorpusProgram{"anti-22", Field::Real, "let x:2; let y:2; {x, y}", "0"},
    CorpusProgram{"anti-33", Field::Real, "let x:3; let y:3; {x, y}", "0"},
    CorpusProgram{"anti-10", Field::Real, "let x:1; let y:0; {x, y}", "1"},
    CorpusProgram{"anti-20", Field::Real, "let x:2; let y:0; {x, y}", "2"},
    CorpusProgram{"anti-30", Field::Real, "let x:3; let y:0; {x, y}", "3"},
    CorpusProgram{"anti-12", Field::Real, "let x:1; let y:2; {x, y}", "3"},
    CorpusProgram{"anti-13", Field::Real, "let x:1; let y:3; {x, y}", "2"},
    CorpusProgram{"anti-23", Field::Real, "let x:2; let y:3; {x, y}", "1"},
    // Mixed type sets and linear structure.
    CorpusProgram{"union-comm", Field::Real, "let x:01; let y:2; [x, y]", "01"},
    CorpusProgram{"union-anti", Field::Real, "let x:03; let y:0; {x, y}", "03"},
    CorpusProgram{"sum", Field::Real, "let x:0; let y:1; x + y", "01"},
    CorpusProgram{"product-11", Field::Real, "let x:1; let y:1; x*y", "02"},
    CorpusProgram{"mixed", Field::Real, "let x:01; let y:23; 2*{x, y} - [x, 1/2*y]", "0123"},
    // Real forms known to be fixed or negated by a conjugation.
    CorpusProgram{"t3-u-urev", Field::Real, "x*rev(x)", "01"},
    CorpusProgram{"t3-urev-u", Field::Real, "rev(x)*x", "01"},
    CorpusProgram{"t3-comm-rev", Field::Real, "[x, rev(x)]", "01"},
    CorpusProgram{"t3-anti-rev", Field::Real, "{x, rev(x)}", "01"},
    CorpusProgram{"t3-comm-gri", Field::Real, "[x, gri(x)]", "13"},
    CorpusProgram{"t3-anti-gri", Field::Real, "{x, gri(x)}", "02"},
    CorpusProgram{"t3-u-urg", Field::Real, "x*gri(rev(x))", "03"},
    CorpusProgram{"t3-urg-u", Field::Real, "gri(rev(x))*x", "03"},
    CorpusProgram{"t3-comm-rg", Field::Real, "[x, gri(rev(x))]", "03"},
    CorpusProgram{"t3-anti-rg", Field::Real, "{x, gri(rev(x))}", "03"},
    CorpusProgram{"t3-uu~uu~", Field::Real, "x*rev(x)*x*rev(x)", "01"},
    // Vanishing commutators inside conjugation eigenspaces (real).
    CorpusProgram{"t4-01-rev", Field::Real, "let u:01; [u, rev(u)]", "∅"},
    CorpusProgram{"t4-23-rev", Field::Real, "let u:23; [u, rev(u)]", "∅"},
    CorpusProgram{"t4-02-gri", Field::Real, "let u:02; [u, gri(u)]", "∅"},
    CorpusProgram{"t4-13-gri", Field::Real, "let u:13; [u, gri(u)]", "∅"},
    CorpusProgram{"t4-03-rg", Field::Real, "let u:03; [u, gri(rev(u))]", "∅"},
    CorpusProgram{"t4-12-rg", Field::Real, "let u:12; [u, gri(rev(u))]", "∅"},
    // Complex: imaginary flags under the tables.
    CorpusProgram{"c-comm-i1-3", Field::Complex, "let x:i1; let y:3; [x, y]", "i0"},
    CorpusProgram{"c-anti-i2-i3", Field::Complex, "let x:i2; let y:i3; {x, y}", "1"},
    CorpusProgram{"c-imul", Field::Complex, "let x:1; let y:23; i*x + [x, i*y]", "i01"},
    // Complex forms.
    CorpusProgram{"c3-u-urev", Field::Complex, "x*rev(x)", "01+i01"},
    CorpusProgram{"c3-urev-u", Field::Complex, "rev(x)*x", "01+i01"},
    CorpusProgram{"c3-comm-rev", Field::Complex, "[x, rev(x)]", "01+i01"},
    CorpusProgram{"c3-anti-rev", Field::Complex, "{x, rev(x)}", "01+i01"},
    CorpusProgram{"c3-comm-gri", Field::Complex, "[x, gri(x)]", "13+i13"},
    CorpusProgram{"c3-anti-gri", Field::Complex, "{x, gri(x)}", "02+i02"},
    CorpusProgram{"c3-comm-conj", Field::Complex, "[x, conj(x)]", "i0123"},
    CorpusProgram{"c3-anti-conj", Field::Complex, "{x, conj(x)}", "0123"},
    CorpusProgram{"c3-u-uphc", Field::Complex, "x*phc(x)", "01+i23"},
    CorpusProgram{"c3-uphc-u", Field::Complex, "phc(x)*x", "01+i23"},
    CorpusProgram{"c3-comm-phc", Field::Complex, "[x, phc(x)]", "01+i23"},
    CorpusProgram{"c3-anti-phc", Field::Complex, "{x, phc(x)}", "01+i23"},
    CorpusProgram{"c3-u-urg", Field::Complex, "x*gri(rev(x))", "03+i03"},
    CorpusProgram{"c3-urg-u", Field::Complex, "gri(rev(x))*x", "03+i03"},
    CorpusProgram{"c3-comm-rg", Field::Complex, "[x, gri(rev(x))]", "03+i03"},
    CorpusProgram{"c3-anti-rg", Field::Complex, "{x, gri(rev(x))}", "03+i03"},
    CorpusProgram{"c3-comm-gc", Field::Complex, "[x, gri(conj(x))]", "13+i02"},
    CorpusProgram{"c3-anti-gc", Field::Complex, "{x, gri(conj(x))}", "02+i13"},
    CorpusProgram{"c3-u-ugp", Field::Complex, "x*gri(phc(x))", "03+i12"},
    CorpusProgram{"c3-ugp-u", Field::Complex, "gri(phc(x))*x", "03+i12"},
    CorpusProgram{"c3-comm-gp", Field::Complex, "[x, gri(phc(x))]", "03+i12"},
    CorpusProgram{"c3-anti-gp", Field::Complex, "{x, gri(phc(x))}", "03+i12"},
    CorpusProgram{"c3-uu+uu+", Field::Complex, "x*phc(x)*x*phc(x)", "01+i23"},
    // Vanishing commutators inside conjugation eigenspaces (complex).
    CorpusProgram{"c4-01-rev", Field::Complex, "let u:01+i01; [u, rev(u)]", "∅"},
    CorpusProgram{"c4-23-rev", Field::Complex, "let u:23+i23; [u, rev(u)]", "∅"},
    CorpusProgram{"c4-02-gri", Field::Complex, "let u:02+i02; [u, gri(u)]", "∅"},
    CorpusProgram{"c4-13-gri", Field::Complex, "let u:13+i13; [u, gri(u)]", "∅"},
    CorpusProgram{"c4-re-conj", Field::Complex, "let u:0123; [u, conj(u)]", "∅"},
    CorpusProgram{"c4-im-conj", Field::Complex, "let u:i0123; [u, conj(u)]", "∅"},
    CorpusProgram{"c4-01-phc", Field::Complex, "let u:01+i23; [u, phc(u)]", "∅"},
    CorpusProgram{"c4-23-phc", Field::Complex, "let u:23+i01; [u, phc(u)]", "∅"},
    CorpusProgram{"c4-03-rg", Field::Complex, "let u:03+i03; [u, gri(rev(u))]", "∅"},
    CorpusProgram{"c4-12-rg", Field::Complex, "let u:12+i12; [u, gri(rev(u))]", "∅"},
    CorpusProgram{"c4-02-gc", Field::Complex, "let u:02+i13; [u, gri(conj(u))]", "∅"},
    CorpusProgram{"c4-13-gc", Field::Complex, "let u:13+i02; [u, gri(conj(u))]", "∅"},
    CorpusProgram{"c4-03-gp", Field::Complex, "let u:03+i12; [u, gri(phc(u))]", "∅"},
    CorpusProgram{"c4-12-gp", Field::Complex, "let u:12+i03; [u, gri(phc(u))]", "∅"},
};
// clang-format on

}  // namespace cliffqt
