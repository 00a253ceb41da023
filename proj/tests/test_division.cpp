#include "doctest.h"
#include "ringstd/errors.hpp"
#include "support.hpp"

using namespace ringstd;
using rtest::P;

namespace {

const ConditionSet kDeterminate{Condition::DD1, Condition::DD2, Condition::DDH};
const ConditionSet kWeak{Condition::ID1, Condition::ID2};

SpacePtr paper_space() {
  return rtest::space(Ring::integers(), make_weighted({-1, 1}, make_lex(2, 1)), {"t", "x"});
}

}  // namespace

TEST_CASE("hddwr on the power series example") {
  auto s = paper_space();
  const Poly f = P(s, "2*x");
  const std::vector<Poly> G{P(s, "2*x + 2*t*x + t^2*x + 3*t^3*x")};
  auto d = hddwr(f, G);
  CHECK(d.u == P(s, "1"));
  CHECK(d.q[0] == P(s, "1 - t - t^3"));
  CHECK(d.r == P(s, "t^2*x + 5*t^4*x + t^5*x + 3*t^6*x"));
  CHECK(check_conditions(f, G, d).contains(kDeterminate));
}

TEST_CASE("hddwr small cases") {
  auto s = rtest::space(Ring::rationals(), make_deglex(2, 0), {"x", "y"});
  std::vector<Poly> G{P(s, "x*y")};
  auto d = hddwr(P(s, "x^2*y"), G);
  CHECK(d.q[0] == P(s, "x"));
  CHECK(d.r.is_zero());
  auto z = hddwr(Poly(s), G);
  CHECK(z.q[0].is_zero());
  CHECK(z.r.is_zero());
  CHECK_THROWS_AS(hddwr(P(s, "x^2 + y"), G), UsageError);
}

TEST_CASE("hddwr budget on a genuine power series") {
  auto s = paper_space();
  std::vector<Poly> G{P(s, "x - t*x")};
  DivisionBudget b;
  b.max_iterations = 50;
  CHECK_THROWS_AS(hddwr(P(s, "x"), G, b), BudgetExhausted);
  DivisionBudget tb;
  tb.max_t_degree = 20;
  CHECK_THROWS_AS(hddwr(P(s, "x"), G, tb), BudgetExhausted);
}

TEST_CASE("hddwr keeps weighted homogeneity") {
  rtest::Rng rng(23);
  auto s = rtest::space(Ring::integers(), make_weighted({-1, 1, 2}, make_lex(3, 1)), {"t", "x", "y"});
  const std::vector<Coeff> w{-1, 1, 2};
  // x-degree d, weighted degree d - 2: t-exponent b + 2 for x^a y^b
  auto gen = [&](int d) {
    std::vector<Term> terms;
    for (int b = 0; b <= d; ++b) {
      if (rtest::uniform(rng, 0, 1) == 0) continue;
      terms.push_back(Term{Coeff(rtest::uniform(rng, 1, 5)), Exponents{b + 2, d - b, b}, 0});
    }
    if (terms.empty()) terms.push_back(Term{Coeff(1), Exponents{2, d, 0}, 0});
    return Poly::from_terms(s, std::move(terms));
  };
  for (int trial = 0; trial < 100; ++trial) {
    const Poly f = gen(3);
    const std::vector<Poly> G{gen(1), gen(2)};
    auto d = hddwr(f, G);
    CHECK(check_conditions(f, G, d).contains(kDeterminate));
    for (const auto& q : d.q) {
      if (!q.is_zero()) CHECK(q.is_weighted_homogeneous(w));
    }
    if (!d.r.is_zero()) CHECK(d.r.is_weighted_homogeneous(w));
  }
}

TEST_CASE("dwr examples") {
  auto loc = rtest::space(Ring::rationals(), make_weighted({-1}, make_lex(1, 1)), {"x"});
  const std::vector<Poly> G{P(loc, "x - x^2")};
  auto d = dwr(P(loc, "x"), G);
  CHECK(d.u == P(loc, "1 - x"));
  CHECK(d.q[0] == P(loc, "1"));
  CHECK(d.r.is_zero());
  CHECK(check_conditions(P(loc, "x"), G, d).contains(kWeak));

  auto s = rtest::space(Ring::integers(), make_deglex(2, 0), {"x", "y"});
  const Poly f = P(s, "3*x*y^2 + 1");
  auto e = dwr(f, std::vector<Poly>{P(s, "2*x^2*y + 1")});
  CHECK(e.u == P(s, "1"));
  CHECK(e.q[0].is_zero());
  CHECK(e.r == f);

  const std::vector<Poly> H{P(s, "2*x^2*y + 1"), P(s, "3*x*y^2 + 1")};
  auto g = dwr(H[0], H);
  CHECK(g.u == P(s, "1"));
  CHECK(g.q[0] == P(s, "1"));
  CHECK(g.q[1].is_zero());
  CHECK(g.r.is_zero());

  auto empty = dwr(f, std::vector<Poly>{});
  CHECK(empty.q.empty());
  CHECK(empty.r == f);
}

TEST_CASE("normal form examples") {
  auto s = rtest::space(Ring::integers(), make_deglex(2, 0), {"x", "y"});
  const std::vector<Poly> H{P(s, "2*x^2*y + 1"), P(s, "3*x*y^2 + 1")};
  CHECK(normal_form(H[0], std::vector<Poly>{H[0]}).is_zero());
  CHECK(normal_form(P(s, "3*y - 2*x"), H) == P(s, "3*y - 2*x"));
}

TEST_CASE("check_conditions") {
  auto s = rtest::space(Ring::integers(), make_deglex(2, 0), {"x", "y"});
  const std::vector<Poly> G{P(s, "2*x^2*y + 1")};
  const Poly f = P(s, "3*x*y^2 + 1");
  DivisionResult trivial{P(s, "1"), {Poly(s)}, f, {}};
  auto c = check_conditions(f, G, trivial);
  CHECK(c.contains(ConditionSet{Condition::ID1, Condition::ID2, Condition::SID2, Condition::DD2}));

  DivisionResult wrong{P(s, "1"), {P(s, "1")}, f, {}};
  CHECK_THROWS_AS(check_conditions(f, G, wrong), CertificateError);

  // 4x^2y is reducible by 2x^2y over ZZ
  const Poly h = P(s, "4*x^2*y + y");
  DivisionResult lazy{P(s, "1"), {Poly(s)}, h, {}};
  auto lc = check_conditions(h, G, lazy);
  CHECK_FALSE(lc.has(Condition::ID2));
  CHECK_FALSE(lc.has(Condition::DD2));
  CHECK(lc.has(Condition::ID1));
  CHECK(ConditionSet{Condition::ID1, Condition::SID2}.to_string() == "ID1 SID2");
}

TEST_CASE("condition implications on random certificates") {
  rtest::Rng rng(99);
  auto s = rtest::space(Ring::integers(), make_weighted({-1, 1, 1}, make_lex(3, 1)), {"t", "x", "y"});
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Poly f = rtest::random_nonzero_poly(s, rng, 4, 2, 5);
    std::vector<Poly> G{rtest::random_nonzero_poly(s, rng, 3, 2, 4), rtest::random_nonzero_poly(s, rng, 3, 2, 4)};
    DivisionResult d = dwr(f, G);
    // also a lazy variant that leaves the remainder untouched
    DivisionResult lazy{P(s, "1"), {Poly(s), Poly(s)}, f, {}};
    for (const auto* res : {&d, &lazy}) {
      auto c = check_conditions(f, G, *res);
      if (c.has(Condition::DD2)) CHECK(c.has(Condition::SID2));
      if (c.has(Condition::SID2)) CHECK(c.has(Condition::ID2));
      if (c.has(Condition::DD1) && c.has(Condition::DD2)) CHECK(c.contains(kWeak));
      ++checked;
    }
  }
  CHECK(checked == 600);
}

TEST_CASE("weak divisions on random input") {
  rtest::Rng rng(7);
  std::vector<SpacePtr> spaces{
      rtest::space(Ring::integers(), make_weighted({-1, 1, 1}, make_lex(3, 1)), {"t", "x", "y"}),
      rtest::space(Ring::rationals(), make_weighted({-1, -1}, make_lex(2, 2)), {"x", "y"}),
      rtest::space(Ring::integers_mod(6), make_degrevlex(2, 0), {"x", "y"}),
  };
  for (const auto& s : spaces) {
    for (int trial = 0; trial < 100; ++trial) {
      const Poly f = rtest::random_poly(s, rng, 5, 3, 6);
      std::vector<Poly> G;
      for (int i = rtest::uniform(rng, 1, 3); i > 0; --i) G.push_back(rtest::random_nonzero_poly(s, rng, 3, 2, 6));
      auto d = dwr(f, G);
      CHECK(rtest::residual(f, G, d).is_zero());
      CHECK(has_unit_lead(d.u));
      CHECK(check_conditions(f, G, d, 0).contains(d.flags));
      CHECK(d.flags.contains(kWeak));
    }
  }
}

TEST_CASE("dwr_sid2 on module instances") {
  rtest::Rng rng(31);
  for (std::uint32_t rank : {2u, 3u}) {
    auto s = rtest::space(Ring::integers(), make_deglex(2, 0, rank), {"x", "y"});
    for (int trial = 0; trial < 60; ++trial) {
      const Poly f = rtest::random_poly(s, rng, 5, 2, 5);
      std::vector<Poly> G;
      for (int i = rtest::uniform(rng, 1, 3); i > 0; --i) G.push_back(rtest::random_nonzero_poly(s, rng, 3, 2, 4));
      auto d = dwr_sid2(f, G);
      CHECK(has_unit_lead(d.u));
      CHECK(check_conditions(f, G, d, 0).contains(ConditionSet{Condition::ID1, Condition::SID2}));
    }
  }
  auto s1 = rtest::space(Ring::integers(), make_deglex(2, 0), {"x", "y"});
  const std::vector<Poly> G{P(s1, "2*x^2*y + 1"), P(s1, "3*x*y^2 + 1")};
  const Poly f = P(s1, "x^3*y^2 + 5*x*y + 2");
  auto a = dwr(f, G);
  auto b = dwr_sid2(f, G);
  CHECK(a.r == b.r);
  CHECK(a.u == b.u);
}

TEST_CASE("term_in_lead_module") {
  auto s = rtest::space(Ring::integers(), make_deglex(2, 0), {"x", "y"});
  const std::vector<Poly> G{P(s, "4*x + 1"), P(s, "6*y")};
  CHECK(term_in_lead_module(2, ModuleMonomial{Exponents{1, 1}, 0}, G));
  CHECK_FALSE(term_in_lead_module(2, ModuleMonomial{Exponents{1, 0}, 0}, G));
  CHECK(term_in_lead_module(8, ModuleMonomial{Exponents{2, 0}, 0}, G));
}
