#include "doctest.h"
#include "ringstd/errors.hpp"
#include "support.hpp"

using namespace ringstd;

namespace {

ModuleMonomial M(std::initializer_list<std::int32_t> e, std::uint32_t comp = 0) { return {Exponents(e), comp}; }

std::vector<OrderingPtr> zoo(std::size_t nvars, std::size_t nt, std::uint32_t rank) {
  std::vector<OrderingPtr> out{make_lex(nvars, nt, rank), make_deglex(nvars, nt, rank),
                               make_degrevlex(nvars, nt, rank), make_deglex(nvars, nt, rank, Position::Pot)};
  std::vector<Coeff> w(nvars, 1);
  for (std::size_t i = 0; i < nt; ++i) w[i] = -1;
  if (nvars > nt) w[nt] = 2;
  out.push_back(make_weighted(w, make_lex(nvars, nt, rank)));
  out.push_back(make_homogenized(make_deglex(nvars - 1, 0, rank), 0));
  return out;
}

}  // namespace

TEST_CASE("ordering examples") {
  auto dl = make_deglex(2, 0);
  CHECK(dl->compare(M({2, 1}), M({1, 2})) == 1);

  auto w = make_weighted({-1, 3, 3}, make_lex(3, 1));
  CHECK(w->compare(M({5, 1, 1}), M({0, 0, 0})) == 1);
  CHECK(w->describe() == "w(-1,3,3):lex");

  for (const auto& o : zoo(3, 1, 1)) {
    if (o->nt() == 0) continue;
    CHECK(o->compare(M({0, 0, 0}), M({1, 0, 0})) == 1);
    CHECK(o->compare(M({0, 0, 0}), M({4, 0, 0})) == 1);
  }
  CHECK_THROWS_AS(make_weighted({1, 3, 3}, make_lex(3, 1)), UsageError);
  CHECK_THROWS_AS(make_weighted({-1, 3}, make_lex(3, 1)), UsageError);
  CHECK_THROWS_AS(make_matrix({{1, 1}, {2, 2}}, 2, 0), UsageError);
  CHECK_THROWS_AS(dl->compare(M({1, 1, 1}), M({1, 1})), UsageError);
}

TEST_CASE("divisibility and lcm") {
  CHECK(divides(M({1, 0}), M({2, 1})));
  CHECK(quotient(M({2, 1}), M({1, 0})) == Exponents{1, 1});
  CHECK_FALSE(divides(M({1, 0}, 0), M({2, 1}, 1)));
  CHECK_FALSE(divides(M({2, 1}), M({1, 3})));
  CHECK_THROWS_AS(quotient(M({1, 3}), M({2, 1})), UsageError);
  CHECK(lcm_mm(M({2, 1}), M({1, 2}))->exp == Exponents{2, 2});
  CHECK_FALSE(lcm_mm(M({1, 0}, 0), M({0, 1}, 1)).has_value());
  CHECK(*lcm_mm(M({3, 1}), M({3, 1})) == M({3, 1}));
  const std::int32_t big = std::numeric_limits<std::int32_t>::max();
  CHECK_THROWS_AS(mono::mul(Exponents{big}, Exponents{1}), ExponentOverflow);
}

TEST_CASE("Schreyer ordering examples") {
  auto base = make_deglex(2, 0);
  auto S = make_schreyer(base, {M({1, 0}), M({0, 1})});
  CHECK(S->compare(M({0, 0}, 0), M({0, 0}, 1)) == 1);
  auto T = make_schreyer(base, {M({1, 0}), M({1, 0})});
  CHECK(T->compare(M({0, 0}, 1), M({0, 0}, 0)) == 1);
  CHECK(T->rank() == 2);
}

TEST_CASE("homogenized ordering examples") {
  auto h = make_homogenized(make_deglex(1, 0), 0);  // (x, x0)
  CHECK(h->compare(M({0, 2}), M({2, 0})) == -1);
  auto hw = make_homogenized(make_weighted({-1, 1}, make_lex(2, 1)), 1);  // (t, x, x0)
  CHECK(hw->compare(M({0, 1, 1}), M({1, 0, 2})) == 1);
}

TEST_CASE("ordering properties on random monomials") {
  rtest::Rng rng(11);
  for (std::uint32_t rank : {1u, 2u}) {
    for (const auto& o : zoo(4, 1, rank)) {
      const std::size_t n = o->nvars();
      for (int trial = 0; trial < 300; ++trial) {
        auto a = rtest::random_exponents(n, rng, 8);
        auto b = rtest::random_exponents(n, rng, 8);
        auto q = rtest::random_exponents(n, rng, 8);
        const auto ca = static_cast<std::uint32_t>(rtest::uniform(rng, 0, static_cast<int>(rank) - 1));
        const auto cb = static_cast<std::uint32_t>(rtest::uniform(rng, 0, static_cast<int>(rank) - 1));
        const int ab = o->compare(a, ca, b, cb);
        CHECK(ab == -o->compare(b, cb, a, ca));
        CHECK((ab == 0) == (a == b && ca == cb));
        CHECK(o->compare(mono::mul(q, a), ca, mono::mul(q, b), cb) == ab);
        if (rank == 2) CHECK(o->compare(a, 0, b, 0) == o->compare(a, 1, b, 1));
        if (o->nt() > 0 && !mono::is_one(std::span<const std::int32_t>(a).first(o->nt()))) {
          Exponents t(n, 0);
          for (std::size_t i = 0; i < o->nt(); ++i) t[i] = a[i];
          CHECK(o->compare(mono::one(n), ca, t, ca) == 1);
        }
      }
    }
  }
}

TEST_CASE("homogenized divisibility identity") {
  rtest::Rng rng(5);
  auto s = rtest::space(Ring::integers(), make_weighted({-1, 1, 2}, make_lex(3, 1)), {"t", "x", "y"});
  for (int trial = 0; trial < 300; ++trial) {
    Poly f = rtest::random_nonzero_poly(s, rng, 4, 3);
    Poly g = rtest::random_nonzero_poly(s, rng, 4, 3);
    const Poly fh = homogenize(f, 1), gh = homogenize(g, 1);
    const bool lhs = mono::divides(gh.lt().exp, fh.lt().exp);
    const bool rhs = mono::divides(g.lt().exp, f.lt().exp) && g.ecart() <= f.ecart();
    CHECK(lhs == rhs);
  }
}
