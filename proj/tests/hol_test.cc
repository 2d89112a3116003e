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

#include <sstream>

#include <gtest/gtest.h>

#include "hammerkit/hol.h"
#include "hammerkit/hol_parser.h"
#include "term_gen.h"

namespace hammerkit::hol {
namespace {

TEST(ParseType, NullaryConstructor) {
  Signature sig;
  Type t = parse_type("bool", sig);
  EXPECT_TRUE(t.is_bool());
  EXPECT_TRUE(t.args().empty());
}

TEST(ParseType, FunctionWithTypeVariable) {
  Signature sig;
  Type t = parse_type("(fun A bool)", sig);
  ASSERT_TRUE(t.is_fun());
  EXPECT_TRUE(t.domain().is_var());
  EXPECT_EQ(t.domain().name(), "A");
  EXPECT_TRUE(t.codomain().is_bool());
}

TEST(ParseType, CartesianPredicateRegistersConstructors) {
  Signature sig;
  Type t = parse_type("(fun (cart real N) bool)", sig);
  EXPECT_EQ(t.domain().name(), "cart");
  EXPECT_EQ(sig.tycon_arity("cart"), 2);
  EXPECT_EQ(sig.tycon_arity("real"), 0);
}

TEST(ParseType, ArityClashRejected) {
  Signature sig;
  parse_type("(list real)", sig);
  EXPECT_THROW(parse_type("(list real real)", sig), TypeError);
}

TEST(ParseType, SyntaxErrorCarriesOffset) {
  Signature sig;
  try {
    parse_type("(fun bool", sig);
    FAIL() << "no exception";
  } catch (const SyntaxError& e) {
    EXPECT_GE(e.offset(), 0u);
  }
}

TEST(ParseTerm, TrueConstant) {
  Signature sig;
  Term t = parse_term("(c true bool)", sig);
  EXPECT_TRUE(t.is_const());
  EXPECT_TRUE(t.type().is_bool());
}

TEST(ParseTerm, Reflexivity) {
  Signature sig;
  Term t = parse_term(
      "(! (x real) (app (app (c eq (fun real (fun real bool))) (v x real)) (v x real)))", sig);
  EXPECT_TRUE(t.type().is_bool());
  Term var = t, body = t;
  ASSERT_TRUE(is_binder_app(t, logic::kForall, &var, &body));
  EXPECT_EQ(var.name(), "x");
}

TEST(ParseTerm, IdentityTheoremHasPolymorphicI) {
  Signature sig;
  Term t = parse_term(
      "(! (x A) (app (c eq (fun A (fun A bool))) (app (c I (fun A A)) (v x A)) (v x A)))", sig);
  std::vector<std::string> nonlogical;
  for (const auto& [id, ty] : constant_occurrences(t)) {
    if (!logic::is_logical(id)) {
      nonlogical.push_back(id);
      EXPECT_EQ(ty.to_string(), "(fun A A)");
    }
  }
  EXPECT_EQ(nonlogical, std::vector<std::string>{"I"});
}

TEST(ParseTerm, TypeErrorOnBadApplication) {
  Signature sig;
  EXPECT_THROW(parse_term("(app (c P (fun real bool)) (c true bool))", sig), TypeError);
}

TEST(ParseTerm, SealedSignatureRejectsUnknownConstant) {
  Signature sig;
  sig.set_mode(Signature::Mode::kSealed);
  EXPECT_THROW(parse_term("(c mystery bool)", sig), UnknownConstantError);
}

TEST(ParseTerm, OverloadResolvesByType) {
  Signature sig;
  std::istringstream in(
      "tycon real 0\ntycon num 0\n"
      "const inv (fun real real) real_inv\nconst inv (fun num num) num_inv\n");
  sig.load(in);
  Term t = parse_term("(app (c inv (fun num num)) (v n num))", sig);
  EXPECT_EQ(t.fn().id(), "num_inv");
  EXPECT_EQ(t.fn().name(), "inv");
}

TEST(BetaNormalize, IdentityRedex) {
  Signature sig;
  Term t = parse_term("(app (lam (x real) (v x real)) (c k real))", sig);
  EXPECT_EQ(print_term(beta_normalize(t)), "(c k real)");
}

TEST(BetaNormalize, NoRedexUnchanged) {
  Signature sig;
  Term t = parse_term("(app (c f (fun real real)) (v y real))", sig);
  EXPECT_TRUE(beta_normalize(t) == t);
}

TEST(BetaNormalize, NestedRedexes) {
  Signature sig;
  Term t = parse_term(
      "(app (lam (x real) (app (lam (y real) (v y real)) (v x real))) (c k real))", sig);
  EXPECT_EQ(print_term(beta_normalize(t)), "(c k real)");
}

TEST(BetaNormalize, AvoidsCapture) {
  Signature sig;
  // (\x. \y. x) y  must not become  \y. y
  Term t = parse_term("(app (lam (x real) (lam (y real) (v x real))) (v y real))", sig);
  Term n = beta_normalize(t);
  ASSERT_TRUE(n.is_abs());
  EXPECT_FALSE(n.body() == n.bound());
  EXPECT_EQ(n.body(), Term::var("y", Type::app("real")));
}

TEST(TypeOf, Examples) {
  Signature sig;
  EXPECT_TRUE(type_of(parse_term("(c true bool)", sig)).is_bool());
  EXPECT_EQ(type_of(parse_term("(lam (x real) (v x real))", sig)).to_string(),
            "(fun real real)");
  EXPECT_TRUE(type_of(parse_term("(! (x A) (c true bool))", sig)).is_bool());
}

TEST(Printer, CanonicalRenamesBound) {
  Signature sig;
  Term t = parse_term("(! (foo real) (app (c P (fun real bool)) (v foo real)))", sig);
  EXPECT_EQ(print_term(t), "(! (b0 real) (app (c P (fun real bool)) (v b0 real)))");
}

TEST(Printer, BoundNamesSkipFreeNames) {
  Signature sig;
  Term t = parse_term(
      "(! (x real) (app (c eq (fun real (fun real bool))) (v x real) (v b0 real)))", sig);
  EXPECT_EQ(print_term(t),
            "(! (b1 real) (app (app (c eq (fun real (fun real bool))) (v b1 real)) (v b0 real)))");
}

class RandomTerms : public ::testing::TestWithParam<unsigned> {};

TEST_P(RandomTerms, RoundTripAndBetaProperties) {
  testing::TermGen gen(GetParam());
  for (int i = 0; i < 300; ++i) {
    Term t = gen.boolean(5);
    Signature& sig = gen.sig();
    Term back = parse_term(print_term(t), sig);
    ASSERT_TRUE(alpha_equal(back, t)) << print_term(t);
    Term n = beta_normalize(t);
    ASSERT_FALSE(has_beta_redex(n));
    ASSERT_TRUE(beta_normalize(n) == n);
    ASSERT_EQ(n.type(), t.type());
    ASSERT_EQ(free_vars(n).size() <= free_vars(t).size(), true);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomTerms, ::testing::Values(1u, 2u, 3u));

}  // namespace
}  // namespace hammerkit::hol
