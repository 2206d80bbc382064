#pragma once

#include "cliffqt/algebra.hpp"
#include "cliffqt/corpus.hpp"
#include "cliffqt/dsl/ast.hpp"
#include "cliffqt/dsl/eval.hpp"
#include "cliffqt/dsl/infer.hpp"
#include "cliffqt/dsl/normal_form.hpp"
#include "cliffqt/dsl/parser.hpp"
#include "cliffqt/dsl/soundness.hpp"
#include "cliffqt/errors.hpp"
#include "cliffqt/mv_io.hpp"
#include "cliffqt/qtype.hpp"
#include "cliffqt/random.hpp"
#include "cliffqt/scalar.hpp"
#include "cliffqt/verify.hpp"
