#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "domval/interval.hpp"
#include "domval/monad.hpp"
#include "domval/poset.hpp"
#include "domval/rational.hpp"
#include "domval/valuation.hpp"

namespace domval::lang {

// Abstract syntax of the probabilistic expression language. Expressions are
// immutable and shared; evaluation never mutates the tree.
//
// Surface forms:
//   const P.e                 point mass at element e of poset P
//   var x                     a let- or parameter-bound element
//   fail P                    the zero valuation on P (lost mass)
//   choice p/q e1 e2          convex combination, bias p/q on e1
//   sample <cdf> <stepmap>    push-forward of an interval valuation
//   let x = e1 in e2          sequencing by Kleisli extension
//   case e { a -> e1 ; ... }  element dispatch, total on the scrutinee poset
//   f(e, ...)                 first-order function application
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ConstNode {
  PosetPtr poset;
  std::size_t element;
};
struct VarNode {
  std::string name;
};
struct FailNode {
  PosetPtr poset;
};
struct ChoiceNode {
  Rational bias;
  ExprPtr left;
  ExprPtr right;
};
struct SampleNode {
  std::string cdf;
  std::string step;
};
struct LetNode {
  std::string var;
  ExprPtr bound;
  ExprPtr body;
};
struct CallNode {
  std::string fn;
  std::vector<ExprPtr> args;
};
struct CaseNode {
  ExprPtr scrutinee;
  std::vector<std::pair<std::string, ExprPtr>> arms;
};

struct Expr {
  std::variant<ConstNode, VarNode, FailNode, ChoiceNode, SampleNode, LetNode, CallNode, CaseNode>
      node;
  int line = 0;
  int col = 0;
};

struct FunctionDef {
  std::string name;
  std::vector<std::pair<std::string, PosetPtr>> params;
  ExprPtr body;
  int line = 0;
  int col = 0;
};

struct Program {
  std::map<std::string, PosetPtr> posets;
  std::vector<FunctionDef> defs;
  ExprPtr main;

  const FunctionDef* find_def(std::string_view name) const;
};

// Named interval-valuation sources for `sample` expressions. Programs are
// otherwise self-contained; CDFs and step maps come from outside.
class SampleEnv {
 public:
  void add(const Cdf& cdf);
  void add(const StepMap& step);
  const Cdf& cdf(const std::string& name) const;
  const StepMap& step(const std::string& name) const;

 private:
  std::map<std::string, Cdf> cdfs_;
  std::map<std::string, StepMap> steps_;
};

// Parses a whole program. Raises Errc::syntax_error with line/column on
// malformed input, Errc::resolution_error for unknown posets/elements,
// unbound variables and undefined functions, and Errc::recursion_error when
// the call graph has a cycle (the language is total by construction).
Program parse(std::string_view source);

// The poset of values an expression denotes a valuation on, computed
// statically. Needs the sample environment because `sample` types are the
// step map's target.
PosetPtr result_poset(const Program& program, const SampleEnv& env);

// Denotation of the program: a simple subprobability valuation over the
// result poset. Every variable binding (let, case, call) materializes its
// environment map as a KleisliMap, so the flow-based continuity check runs
// on each one and non-monotone dispatch over an ordered poset raises
// Errc::continuity_violation. Mass lost to `fail` (and to sub-one CDFs)
// shows up as the deficit of the result.
SimpleValuation eval(const Program& program, const SampleEnv& env);

// Exact denotational equivalence: equal result posets (else
// Errc::poset_mismatch) and equal atom tables.
bool check_equiv(const Program& p1, const Program& p2, const SampleEnv& env);

}  // namespace domval::lang
