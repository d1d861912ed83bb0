#include "qdissect/verify.hpp"

#include <gtest/gtest.h>

using namespace qdissect;

namespace {

Context& shared() {
  static Context ctx(350);
  return ctx;
}

std::vector<std::string> ids(const std::vector<const CheckSpec*>& v) {
  std::vector<std::string> out;
  for (const auto* c : v) out.push_back(c->id);
  return out;
}

}  // namespace

TEST(Registry, IdsAreUniqueAndLabelled) {
  std::set<std::string> seen;
  for (const auto& c : registry()) {
    EXPECT_TRUE(seen.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.label.empty()) << c.id;
    EXPECT_FALSE(c.suites.empty()) << c.id;
    EXPECT_GE(c.default_order, 0) << c.id;
  }
  EXPECT_GT(registry().size(), 100u);
}

TEST(Registry, Selection) {
  EXPECT_EQ(select_checks({"wr-all"}).size(), 10u);
  EXPECT_EQ(select_checks({"q-0-*"}).size(), 11u);
  EXPECT_EQ(ids(select_checks({"wr7"})), std::vector<std::string>{"wr7"});
  EXPECT_EQ(select_checks({"all"}).size(), registry().size());
  // overlapping names select each check once
  EXPECT_EQ(select_checks({"wr-all", "wr1", "structural"}).size(), select_checks({"structural"}).size());
  EXPECT_THROW(select_checks({"nope"}), UnknownCheckError);
  EXPECT_THROW(run_check("empty-window", shared()), UnknownCheckError);
}

TEST(Registry, SuiteCounts) {
  EXPECT_EQ(select_checks({"thm-1.2-*"}).size(), 6u);
  EXPECT_EQ(select_checks({"q-tables"}).size(), 66u);
  EXPECT_EQ(select_checks({"qc-*"}).size(), 66u);
  EXPECT_EQ(select_checks({"theta-forms"}).size(), 60u);
  EXPECT_EQ(select_checks({"cor-2.5-*"}).size(), 2u);
}

TEST(Runner, InsufficientOracleRangeNamesTheCeiling) {
  Context small(100);
  try {
    run_check("thm-1.2-a0", small);
    FAIL() << "expected an oracle range error";
  } catch (const OracleRangeError& e) {
    EXPECT_EQ(e.needed(), 329);
    EXPECT_NE(std::string(e.what()).find("329"), std::string::npos);
  }
  // pure theta identities need no oracle at all
  EXPECT_EQ(run_check("wr1", small).status, Status::Pass);
}

TEST(Runner, FailureCarriesFirstFailure) {
  CheckSpec bogus{"bogus", Kind::Identity, 40, "J1 = J11", {"none"}, detail::no_oracle, [](Context& ctx, long order) {
                    auto B = ctx.basis(order);
                    return detail::compare(B->eval(Monomial::atom(Atom::J1)), B->eval(Monomial::atom(Atom::J11)), order);
                  }};
  VerifyReport r = run_check(bogus, shared());
  EXPECT_EQ(r.status, Status::Fail);
  ASSERT_TRUE(r.first_failure);
  EXPECT_EQ(r.first_failure->n, 1);
  EXPECT_EQ(r.first_failure->lhs, "-1");
  EXPECT_EQ(r.first_failure->rhs, "0");
}

TEST(Runner, NonnegativityFailureIsReported) {
  CheckSpec bogus{"bogus-neg", Kind::Nonnegativity, 40, "J1 >= 0", {"none"}, detail::no_oracle, [](Context& ctx, long order) {
                    return detail::nonneg(ctx.basis(order)->eval(Monomial::atom(Atom::J1)), order);
                  }};
  VerifyReport r = run_check(bogus, shared());
  EXPECT_EQ(r.status, Status::Fail);
  EXPECT_EQ(r.first_failure->n, 1);
}

TEST(Runner, CongruenceFailureIsReported) {
  // J1^13 and J1^2 J11 agree mod 11 but not mod 13
  auto B = shared().basis(60);
  Series a = B->eval(parse_monomial("J1^13")), b = B->eval(parse_monomial("J1^2 J11"));
  EXPECT_TRUE(detail::compare_mod(a, b, 60, 11).ok());
  EXPECT_FALSE(detail::compare_mod(a, b, 60, 13).ok());
}

TEST(Runner, DeterministicAndOrderMonotone) {
  for (const char* id : {"q-2-5", "thm-1.2-a3", "lemma-6.3-a2", "cor-2.3-m7-3"}) {
    VerifyReport lo = run_check(id, shared(), 200), hi = run_check(id, shared(), 330), again = run_check(id, shared(), 330);
    EXPECT_NE(hi.status, Status::Fail) << id;
    if (lo.status != Status::Fail) {
      EXPECT_NE(hi.status, Status::Fail) << id;
    }
    EXPECT_EQ(hi.status, again.status);
    EXPECT_EQ(hi.first_failure, again.first_failure);
    EXPECT_EQ(hi.paper_label, again.paper_label);
  }
}

TEST(Runner, ParallelRunMatchesSerialRun) {
  auto checks = select_checks({"structural", "thm-5.1-*", "qtheta-3*"});
  auto serial = run_checks(checks, shared(), std::nullopt, 1);
  auto parallel = run_checks(checks, shared(), std::nullopt, 6);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].id, parallel[i].id);
    EXPECT_EQ(serial[i].status, parallel[i].status);
    EXPECT_EQ(serial[i].paper_label, parallel[i].paper_label);
    if (i) {
      EXPECT_TRUE(natural_less(serial[i - 1].id, serial[i].id));
    }
  }
  EXPECT_THROW(run_checks(checks, shared(), std::nullopt, 0), std::invalid_argument);
}

TEST(Runner, NaturalOrder) {
  EXPECT_TRUE(natural_less("q-2-9", "q-2-10"));
  EXPECT_TRUE(natural_less("wr2", "wr10"));
  EXPECT_FALSE(natural_less("wr10", "wr10"));
  EXPECT_TRUE(natural_less("thm-1.2-a0", "thm-1.3-a0"));
}

TEST(Runner, ExitCodes) {
  VerifyReport p{"a", Status::Pass, 1, std::nullopt, 0, ""}, e{"b", Status::EmendedPass, 1, std::nullopt, 0, ""},
      f{"c", Status::Fail, 1, FailurePoint{0, "1", "0"}, 0, ""};
  EXPECT_EQ(exit_code({p}), 0);
  EXPECT_EQ(exit_code({p, e}), 2);
  EXPECT_EQ(exit_code({p, e, f}), 1);
}

TEST(Certificates, Parsing) {
  auto c = parse_certificate("(1,2,-2,0,-1,0;-1,1)_0=[0,11,0,0,0;0]_0");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->m, 0);
  EXPECT_EQ(c->form.N, (std::array<long, 6>{1, 2, -2, 0, -1, 0}));
  EXPECT_EQ(c->form.M[0], -1);
  EXPECT_EQ(c->form.M[1], 1);
  EXPECT_FALSE(c->theta);
  auto t = parse_certificate("(0,2,1,-2,2,-3)_6=Theta(0,0,0,0,11)");
  ASSERT_TRUE(t);
  EXPECT_TRUE(t->theta);
  EXPECT_EQ(t->rhs[4], 11);
  EXPECT_FALSE(parse_certificate("(-1,0,0,0,0,-2v1,2)_7=[0,-2,-2,0,4;0]_7"));
}

TEST(Certificates, LinearForms) {
  LinearForm f = parse_linear("2N1+N5") - parse_linear("3M0");
  EXPECT_EQ(f.N[1], 2);
  EXPECT_EQ(f.M[0], -3);
  EXPECT_EQ(f.weight(), 0);
  EXPECT_EQ(parse_linear("P").P, 1);
  EXPECT_THROW(parse_linear("N7"), std::invalid_argument);
  EXPECT_THROW(parse_linear(""), std::invalid_argument);
  auto links = parse_chain("N0 >=3 N1 >= N2");
  ASSERT_EQ(links.size(), 2u);
  EXPECT_EQ(links[0].from, 3);
  EXPECT_EQ(links[1].from, 0);
}

TEST(Certificates, SymbolicCombination) {
  // the first residue-0 certificate
  auto c = parse_certificate("(1,2,-2,0,-1,0;-1,1)_0=[0,11,0,0,0;0]_0");
  ASSERT_TRUE(c);
  auto v = symbolic_combination(c->form, 0);
  ASSERT_TRUE(v);
  std::array<mpq_class, 6> want{0, 11, 0, 0, 0, 0};
  EXPECT_EQ(*v, want);
  // a single rank class at residue 0 keeps its mock part
  LinearForm lone;
  lone.N[0] = 1;
  EXPECT_FALSE(symbolic_combination(lone, 0));
  // and the combination agrees with the series
  auto B = shared().basis(60);
  EXPECT_TRUE(eq_to_order(combination_series(*B, c->form, 0), residue_bracket(*B, 0, {0, 11, 0, 0, 0, 0}), 60));
}

TEST(Certificates, EveryRowCoveredAndConsistent) {
  EXPECT_GE(inequality_rows().size(), 190u);
  std::size_t malformed = 0;
  for (const auto& row : inequality_rows()) {
    if (!row.certificate) {
      ++malformed;
      continue;
    }
    EXPECT_EQ(row.certificate->m, row.m) << row.id();
  }
  EXPECT_EQ(malformed, 1u);
}

TEST(Certificates, Emendations) {
  auto garbled = run_check("cor-2.3-m7-3", shared());
  EXPECT_EQ(garbled.status, Status::EmendedPass);
  EXPECT_NE(garbled.paper_label.find("rebuilt"), std::string::npos);
  auto swapped = run_check("cor-2.2-m1-2", shared());
  EXPECT_EQ(swapped.status, Status::EmendedPass);
  EXPECT_NE(swapped.paper_label.find("N5"), std::string::npos);
  auto theta = run_check("cor-2.5-m6-1", shared());
  EXPECT_EQ(theta.status, Status::EmendedPass);
  EXPECT_NE(theta.paper_label.find("Theta(0,0,2,2,-2)"), std::string::npos);
  EXPECT_EQ(run_check("thm-2.1-m0-1", shared()).status, Status::Pass);
}

TEST(Scans, ResidueEightException) {
  auto r = run_check("conj-6.2", shared());
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_NE(r.paper_label.find("violations {2}"), std::string::npos);
  Context wide(11 * 31 + 10);
  wide.set_scan_limit(31);
  EXPECT_EQ(run_check("conj-6.2", wide).order, 32);
}

TEST(Scans, ChainsAreInformational) {
  for (const auto* c : select_checks({"conj-6.5-*"})) {
    auto r = run_check(*c, shared());
    EXPECT_NE(r.status, Status::Fail) << c->id;
    EXPECT_NE(r.paper_label.find("threshold"), std::string::npos) << c->id;
  }
}
