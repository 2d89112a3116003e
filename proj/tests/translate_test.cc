// Copyright 2026 The hammerkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <functional>
#include <set>

#include <gtest/gtest.h>

#include "hammerkit/names.h"
#include "hammerkit/thf.h"
#include "hammerkit/translate.h"
#include "term_gen.h"
#include "test_util.h"
#include "tptp_check.h"

namespace hammerkit::tptp {
namespace {

using hammerkit::testing::Fixture;
using hammerkit::testing::read_file;
using hammerkit::testing::data_path;
using hammerkit::testing::split_lines;
using hol::Term;
using hol::Type;

FoProblem real_eq_inv(Format format) {
  Fixture fx("real_eq_inv");
  return translate(format, fx.stmt.at("REAL_EQ_INV"),
                   {{"REAL_INV_INV", fx.stmt.at("REAL_INV_INV")}}, fx.sig);
}

TEST(Names, Mangling) {
  EXPECT_EQ(mangle("REAL_INV_INV"), "REALu_INVu_INV");
  EXPECT_EQ(mangle("a'b"), "au27_b");
  EXPECT_EQ(axiom_label("TRUTH"), "aTRUTH");
}

TEST(Golden, RealEqInvTff1) {
  EXPECT_EQ(real_eq_inv(Format::kTff1).serialize(),
            read_file(data_path("real_eq_inv/expected.tff1.p")));
}

TEST(Golden, RealEqInvFof) {
  EXPECT_EQ(real_eq_inv(Format::kFof).serialize(),
            read_file(data_path("real_eq_inv/expected.fof.p")));
}

TEST(Golden, IdentityInstancesThf) {
  Fixture fx("i_o_id");
  FoProblem p = translate(Format::kThf, fx.stmt.at("I_O_ID"), {{"I_THM", fx.stmt.at("I_THM")}},
                          fx.sig);
  std::vector<std::string> lines = split_lines(p.serialize());
  std::vector<std::string> expected =
      split_lines(read_file(data_path("i_o_id/expected_instances.thf.p")));
  // Every listed line is present, in the listed relative order.
  auto pos = lines.begin();
  for (const auto& e : expected) {
    pos = std::find(pos, lines.end(), e);
    ASSERT_NE(pos, lines.end()) << "missing: " << e << "\n" << p.serialize();
  }
  int monomorphized = 0;
  for (const auto& l : lines) monomorphized += l.find("_monomorphized") != std::string::npos;
  EXPECT_EQ(monomorphized, 2);
}

TEST(Monomorphise, DisjointConstantsGiveNoInstance) {
  hol::Signature sig;
  Term goal = hol::parse_term("(app (c P (fun real bool)) (c k real))", sig);
  Term prem = hol::parse_term(
      "(! (x A) (app (c eq (fun A (fun A bool))) (app (c J (fun A A)) (v x A)) (v x A)))", sig);
  EXPECT_TRUE(monomorphise(ground_goal(goal), {{"J_THM", prem}}).empty());
}

TEST(Monomorphise, MonomorphicPremiseIsItself) {
  hol::Signature sig;
  Term goal = hol::parse_term("(app (c P (fun real bool)) (c k real))", sig);
  Term prem = hol::parse_term("(app (c P (fun real bool)) (c k2 real))", sig);
  auto inst = monomorphise(goal, {{"K", prem}});
  ASSERT_EQ(inst.size(), 1u);
  EXPECT_TRUE(inst[0].term == prem);
  FoProblem p = export_thf(goal, {{"K", prem}}, sig);
  ASSERT_EQ(p.axioms.size(), 1u);
  EXPECT_EQ(p.axioms[0].first, "aKu_monomorphized0");
}

TEST(Thf, FunctionConstantDeclaration) {
  hol::Signature sig;
  sig.declare_tycon("a", 0);
  sig.declare_tycon("b", 0);
  Term goal = hol::parse_term(
      "(app (c eq (fun b (fun b bool))) (app (c h (fun a b)) (c u a)) (c w b))", sig);
  FoProblem p = export_thf(goal, {}, sig);
  auto has = [&](const std::string& line) {
    return std::find(p.type_decls.begin(), p.type_decls.end(), line) != p.type_decls.end();
  };
  EXPECT_TRUE(has("thf(ch, type, h : (a > b)).")) << p.serialize();
  EXPECT_TRUE(has("thf(ta, type, a : $tType)."));
}

TEST(Monomorphise, InstanceTypesMatchOriginals) {
  Fixture fx("i_o_id");
  Term goal = ground_goal(fx.stmt.at("I_O_ID"));
  for (const auto& inst : monomorphise(goal, {{"I_THM", fx.stmt.at("I_THM")}})) {
    for (const auto& [id, ty] : hol::constant_occurrences(inst.term)) {
      if (id != "I") continue;
      hol::TypeSubst s;
      EXPECT_TRUE(hol::match_type(Type::fun(Type::var("A"), Type::var("A")), ty, s));
      EXPECT_TRUE(ty.is_ground());
    }
  }
}

TEST(LambdaLift, AbstractionFreeUnchanged) {
  Fixture fx("real_eq_inv");
  LiftResult r = lambda_lift(fx.stmt.at("REAL_EQ_INV"),
                             {{"REAL_INV_INV", fx.stmt.at("REAL_INV_INV")}}, fx.sig);
  EXPECT_TRUE(r.defs.empty());
  EXPECT_TRUE(r.goal == fx.stmt.at("REAL_EQ_INV"));
}

// Rebuilds the abstraction from a lifted definition `!vs. c vs = body`.
Term definition_as_lambda(const LiftedDef& d) {
  auto [vars, eq] = hol::strip_forall(d.equation);
  Term lhs = eq, rhs = eq;
  EXPECT_TRUE(hol::is_binary_app(eq, hol::logic::kEq, &lhs, &rhs));
  Term out = rhs;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = Term::abs(*it, out);
  return out;
}

TEST(LambdaLift, MapSuccessor) {
  hol::Signature sig;
  Term t = hol::parse_term(
      "(app (c P (fun (list num) bool)) (app (c MAP (fun (fun num num) (fun (list num) (list "
      "num)))) (lam (x num) (app (c plus (fun num (fun num num))) (v x num) (c one num))) (v l "
      "(list num))))",
      sig);
  LiftResult r = lambda_lift(t, {}, sig);
  ASSERT_EQ(r.defs.size(), 1u);
  const LiftedDef& d = r.defs[0];
  EXPECT_EQ(d.id, "lift0");
  // Beta-expanding the definition back restores the original problem.
  Term lam = definition_as_lambda(d);
  std::function<Term(const Term&)> unfold = [&](const Term& u) -> Term {
    if (u.is_const() && u.id() == d.id) return lam;
    if (u.is_app()) return Term::app(unfold(u.fn()), unfold(u.arg()));
    if (u.is_abs()) return Term::abs(u.bound(), unfold(u.body()));
    return u;
  };
  EXPECT_TRUE(hol::alpha_equal(hol::beta_normalize(unfold(r.goal)), t));
}

TEST(LambdaLift, NestedLambdaTwoArguments) {
  hol::Signature sig;
  Term t = hol::parse_term(
      "(app (c Q (fun (fun num (fun num num)) bool)) (lam (x num) (lam (y num) (v x num))))",
      sig);
  LiftResult r = lambda_lift(t, {}, sig);
  ASSERT_EQ(r.defs.size(), 1u);
  auto [vars, eq] = hol::strip_forall(r.defs[0].equation);
  EXPECT_EQ(vars.size(), 2u);
  Term lhs = eq, rhs = eq;
  ASSERT_TRUE(hol::is_binary_app(eq, hol::logic::kEq, &lhs, &rhs));
  EXPECT_TRUE(rhs == vars[0]);
}

TEST(LambdaLift, FreeVariablesBecomeArguments) {
  hol::Signature sig;
  Term t = hol::parse_term(
      "(! (k num) (app (c Q (fun (fun num num) bool)) (lam (x num) (app (c plus (fun num (fun "
      "num num))) (v x num) (v k num)))))",
      sig);
  LiftResult r = lambda_lift(t, {}, sig);
  ASSERT_EQ(r.defs.size(), 1u);
  auto [vars, eq] = hol::strip_forall(r.defs[0].equation);
  ASSERT_EQ(vars.size(), 2u);
  EXPECT_EQ(vars[0].name(), "k");
  EXPECT_EQ(vars[1].name(), "x");
}

TEST(LambdaLift, FreshNamesAvoidSignature) {
  hol::Signature sig;
  sig.declare_const("lift0", Type::boolean(), "lift0");
  Term t = hol::parse_term(
      "(app (c Q (fun (fun num num) bool)) (lam (x num) (v x num)))", sig);
  LiftResult r = lambda_lift(t, {}, sig);
  ASSERT_EQ(r.defs.size(), 1u);
  EXPECT_EQ(r.defs[0].id, "lift1");
}

TEST(LambdaLift, IdenticalAbstractionsShareCombinator) {
  hol::Signature sig;
  Term t = hol::parse_term(
      "(app (c conj (fun bool (fun bool bool))) (app (c Q (fun (fun num num) bool)) (lam (x num) "
      "(v x num))) (app (c Q (fun (fun num num) bool)) (lam (y num) (v y num))))",
      sig);
  EXPECT_EQ(lambda_lift(t, {}, sig).defs.size(), 1u);
}

// Counts direct arguments of every occurrence of `id` in `t`.
void occurrence_arities(const Term& t, const std::string& id, std::vector<std::size_t>& out) {
  auto [head, args] = hol::strip_comb(t);
  if (head.is_const() && head.id() == id) out.push_back(args.size());
  if (head.is_abs()) occurrence_arities(head.body(), id, out);
  for (const auto& a : args) occurrence_arities(a, id, out);
}

TEST(IntroduceApply, MinimumArity) {
  hol::Signature sig;
  Term a = hol::parse_term(
      "(app (c eq (fun num (fun num bool))) (app (c g (fun num (fun num num))) (c u num) (c v "
      "num)) (c u num))",
      sig);
  Term b = hol::parse_term(
      "(app (c R (fun (fun num num) bool)) (app (c g (fun num (fun num num))) (c u num)))", sig);
  std::vector<std::size_t> arities;
  occurrence_arities(a, "g", arities);
  occurrence_arities(b, "g", arities);
  const std::size_t oracle = *std::min_element(arities.begin(), arities.end());
  ApplyResult r = introduce_apply({a, b});
  EXPECT_EQ(r.arity.at("g"), oracle);
  EXPECT_EQ(oracle, 1u);
  std::vector<std::size_t> after;
  for (const auto& t : r.terms) occurrence_arities(t, "g", after);
  for (auto n : after) EXPECT_EQ(n, 1u);
  std::vector<std::size_t> happ;
  occurrence_arities(r.terms[0], kApplyId, happ);
  EXPECT_EQ(happ, std::vector<std::size_t>{2});
}

TEST(IntroduceApply, InverseNeverWrapped) {
  std::string text = real_eq_inv(Format::kFof).serialize();
  EXPECT_EQ(text.find("i(s(fun(real,real),realu_inv"), std::string::npos);
}

TEST(IntroduceApply, FunctionVariablesUseApply) {
  std::string text = real_eq_inv(Format::kTff1).serialize();
  EXPECT_NE(text.find("i(A,B,F,X) = i(A,B,G,X)"), std::string::npos);
}

TEST(ExportFof, ReflexivityGoalAlone) {
  hol::Signature sig;
  Term goal = hol::parse_term(
      "(! (x real) (app (c eq (fun real (fun real bool))) (v x real) (v x real)))", sig);
  FoProblem p = translate(Format::kFof, goal, {}, sig);
  EXPECT_EQ(p.conjecture.second, "![X]: s(real,X) = s(real,X)");
  ASSERT_EQ(p.axioms.size(), helper_axioms().size());
  EXPECT_EQ(p.axioms.back().second, "p(s(bool,t))");
}

TEST(ExportTff1, MonomorphicGoalDeclarationCounts) {
  hol::Signature sig;
  Term goal = hol::parse_term("(app (c P (fun real bool)) (c k real))", sig);
  FoProblem p = translate(Format::kTff1, goal, {}, sig);
  std::multiset<std::string> labels;
  for (const auto& d : p.type_decls) labels.insert(d.substr(4, d.find(',') - 4));
  for (const char* l : {"tbool", "tfun", "treal", "cP", "ck"}) EXPECT_EQ(labels.count(l), 1u) << l;
}

TEST(Properties, FormulaCountBound) {
  testing::TermGen gen(7);
  for (int i = 0; i < 100; ++i) {
    Term goal = hol::beta_normalize(gen.boolean(4));
    std::vector<NamedFormula> premises;
    for (int k = 0; k < 3; ++k) {
      premises.push_back({"P" + std::to_string(k), hol::beta_normalize(gen.boolean(4))});
    }
    LiftResult lifted = lambda_lift(goal, premises, gen.sig());
    FoProblem fof = export_fof(lifted.goal, lifted.premises, lifted.defs, gen.sig());
    ASSERT_EQ(fof.formula_count(),
              premises.size() + lifted.defs.size() + helper_axioms().size() + 1);
  }
}

TEST(Properties, OutputsParseAndEqualitiesAreTagged) {
  testing::TermGen gen(11);
  for (int i = 0; i < 150; ++i) {
    Term goal = gen.boolean(4);
    std::vector<NamedFormula> premises{{"A", gen.boolean(3)}, {"B", gen.boolean(3)}};
    for (Format f : {Format::kFof, Format::kTff1, Format::kThf}) {
      FoProblem p = translate(f, goal, premises, gen.sig());
      std::string error;
      ASSERT_TRUE(tptp_check::well_formed(p.serialize(), &error))
          << format_name(f) << ": " << error << "\n" << p.serialize();
      if (f == Format::kFof) {
        ASSERT_TRUE(tptp_check::equalities_tagged_alike(p.serialize(), &error)) << error;
      }
    }
  }
}

TEST(Properties, SameConstantsAcrossFormats) {
  Fixture fx("real_eq_inv");
  for (Format f : {Format::kFof, Format::kTff1, Format::kThf}) {
    std::string text = translate(f, fx.stmt.at("REAL_EQ_INV"),
                                 {{"REAL_INV_INV", fx.stmt.at("REAL_INV_INV")}}, fx.sig)
                           .serialize();
    EXPECT_NE(text.find("realu_inv"), std::string::npos) << format_name(f);
  }
}

TEST(Tff1, DeclarationLabelsAreUnique) {
  hol::Signature sig;
  sig.set_mode(hol::Signature::Mode::kOpen);
  Term goal = hol::parse_term("(c q bool)", sig);
  std::vector<NamedFormula> premises{
      {"A1", hol::parse_term("(app (c imp (fun bool (fun bool bool))) (c p bool) (c q bool))", sig)}};
  FoProblem fo = translate(Format::kTff1, goal, premises, sig);
  std::set<std::string> labels;
  for (const auto& line : fo.type_decls) {
    const std::size_t open = line.find('(') + 1;
    EXPECT_TRUE(labels.insert(line.substr(open, line.find(',') - open)).second) << line;
  }
  EXPECT_TRUE(labels.count("cpc"));
}

}  // namespace
}  // namespace hammerkit::tptp
