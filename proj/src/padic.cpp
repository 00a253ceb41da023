#include "ringstd/padic.hpp"

#include <algorithm>
#include <set>

#include "ringstd/errors.hpp"

namespace ringstd {

namespace {

constexpr std::size_t kAllVariables = 0;

// sum_{i<l} p^{l-1-i} t^i
Poly geometric(const PadicContext& ctx, std::int32_t l) {
  std::vector<Term> terms;
  mpz_class pw = 1;
  for (std::int32_t i = l - 1; i >= 0; --i) {
    Exponents e = mono::one(ctx.space->nvars());
    e[0] = i;
    terms.push_back(Term{Coeff(pw), std::move(e), 0});
    pw *= ctx.p;
  }
  return Poly::from_terms(ctx.space, std::move(terms));
}

Exponents t_power(const PadicContext& ctx, std::int32_t l) {
  Exponents e = mono::one(ctx.space->nvars());
  e[0] = l;
  return e;
}

// a with a*c = 1 mod p in {1..p-1}, and b = (1 - a c) / p.
std::pair<mpz_class, mpz_class> bezout_mod_p(const mpz_class& c, const mpz_class& p) {
  mpz_class a;
  mpz_class cm = c % p;
  if (cm < 0) cm += p;
  if (mpz_invert(a.get_mpz_t(), cm.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw UsageError("coefficient divisible by p has no inverse");
  }
  mpz_class b = (1 - a * c);
  mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), p.get_mpz_t());
  return {a, b};
}

void require_ctx_space(const Poly& f, const PadicContext& ctx) {
  if (f.space() != ctx.space) throw UsageError("polynomial is not over the p-adic context space");
}

void require_special_divisors(std::span<const Poly> G, const PadicContext& ctx, const SpacePtr& space) {
  if (G.empty()) throw UsageError("special division needs p - t as first divisor");
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].space() != space) throw UsageError("divisor from a different space");
    if (G[i].is_zero()) throw UsageError("zero divisor in special division");
    if (i == 0 && G[i].lc() != Coeff(ctx.p)) throw UsageError("first divisor must have leading coefficient p");
    if (i > 0 && G[i].lc() != 1) throw UsageError("divisor " + std::to_string(i + 1) + " is not monic");
  }
}

constexpr std::size_t kMaxSdwrDepth = 2000;

struct SdwrState {
  const PadicContext& ctx;
  SpacePtr hspace;
  std::vector<Poly> G;
  std::vector<Poly> Gh;
  std::vector<Poly> Gh_lead;
  std::vector<std::int64_t> ecarts;
  const DivisionBudget& budget;
  std::size_t recursions = 0;

  void push(const Poly& g) {
    G.push_back(g);
    Gh.push_back(homogenize(g, kAllVariables));
    Gh_lead.push_back(Gh.back().lt_poly());
    ecarts.push_back(g.ecart(kAllVariables));
  }

  void pop() {
    G.pop_back();
    Gh.pop_back();
    Gh_lead.pop_back();
    ecarts.pop_back();
  }
};

struct Weak {
  Poly u;
  std::vector<Poly> q;
  Poly r;
};

Poly dehom(const Poly& F, const SpacePtr& base) { return F.is_zero() ? Poly(base) : dehomogenize(F, base); }

// pRed runs on entry only; inner recursions treat p - t as an ordinary divisor
Weak sdwr_rec(SdwrState& st, const Poly& f, bool top) {
  const std::size_t limit = std::min(st.budget.max_recursions, kMaxSdwrDepth);
  if (++st.recursions > limit) {
    throw BudgetExhausted("SDwR exceeded " + std::to_string(limit) + " recursions");
  }
  detail::check_size(f, st.budget, "SDwR");
  const SpacePtr& base = st.ctx.space;
  const Ring& R = base->ring();
  const std::size_t k = st.G.size();
  PRedResult pr = top ? pred(f, st.ctx, st.budget) : PRedResult{1, Poly(base), f};
  const Poly& f1 = pr.r;
  auto finish = [&](Weak w) {
    w.q[0] = w.q[0] + w.u * pr.q;
    w.u = w.u.scale(Coeff(pr.a));
    return w;
  };
  std::optional<std::size_t> pick;
  if (!f1.is_zero()) {
    const Term& lt = f1.lt();
    for (std::size_t i = 0; i < k; ++i) {
      const Term& g = st.G[i].lt();
      if (!mono::divides(g.exp, lt.exp) || !R.divides(g.c, lt.c)) continue;
      if (!pick || st.ecarts[i] < st.ecarts[*pick]) pick = i;
    }
  }
  if (!pick) return finish(Weak{Poly::constant(base, 1), detail::zero_quotients(base, k), f1});
  const std::int64_t e = st.ecarts[*pick] - f1.ecart(kAllVariables);
  const Poly fh = homogenize(f1, kAllVariables);
  Weak out{Poly(base), detail::zero_quotients(base, k), Poly(base)};
  if (e > 0) {
    Exponents shift = mono::one(st.hspace->nvars());
    shift.back() = static_cast<std::int32_t>(e);
    const Poly F = fh.times_term(Coeff(1), shift);
    auto core = detail::hddwr_core(F, st.Gh_lead, detail::Strategy::Special, st.budget, true);
    Poly rest = F;
    for (std::size_t i = 0; i < k; ++i) {
      if (!core.q[i].is_zero()) rest = rest - core.q[i] * st.Gh[i];
    }
    st.push(f1);
    Weak sub = sdwr_rec(st, dehom(rest, base), false);
    st.pop();
    for (std::size_t i = 0; i < k; ++i) out.q[i] = sub.q[i] + sub.u * dehom(core.q[i], base);
    out.u = sub.u - sub.q[k];
    out.r = std::move(sub.r);
    detail::check_size(out.u, st.budget, "SDwR");
  } else {
    auto core = detail::hddwr_core(fh, st.Gh, detail::Strategy::Special, st.budget, true);
    Weak sub = sdwr_rec(st, dehom(core.r, base), false);
    for (std::size_t i = 0; i < k; ++i) out.q[i] = sub.q[i] + sub.u * dehom(core.q[i], base);
    out.u = std::move(sub.u);
    out.r = std::move(sub.r);
  }
  return finish(std::move(out));
}

}  // namespace

PadicContext PadicContext::make(const mpz_class& p, SpacePtr space) {
  if (!is_prime(p)) throw UsageError("p = " + p.get_str() + " is not prime");
  if (!space) throw UsageError("missing space");
  if (space->ring().tag() != RingTag::Integers) throw UsageError("p-adic pipeline needs the ring ZZ");
  if (space->nt() != 1) throw UsageError("p-adic pipeline needs exactly one t-variable");
  if (space->rank() != 1) throw UsageError("p-adic pipeline needs rank 1");
  return PadicContext{p, std::move(space)};
}

Poly PadicContext::p_minus_t() const {
  return Poly::constant(space, Coeff(p)) - Poly::monomial(space, Coeff(1), t_power(*this, 1));
}

PRedResult pred(const Poly& g, const PadicContext& ctx, const DivisionBudget& budget) {
  require_ctx_space(g, ctx);
  PRedResult out{1, Poly(ctx.space), g};
  std::size_t steps = 0;
  while (!out.r.is_zero()) {
    const mpz_class c = out.r.lc().get_num();
    if (mpz_divisible_p(c.get_mpz_t(), ctx.p.get_mpz_t()) == 0) break;
    if (++steps > budget.max_iterations) {
      throw BudgetExhausted("pRed exceeded " + std::to_string(budget.max_iterations) + " steps");
    }
    mpz_class rest;
    const auto l = static_cast<std::int32_t>(mpz_remove(rest.get_mpz_t(), c.get_mpz_t(), ctx.p.get_mpz_t()));
    const Exponents m = out.r.lt().exp;
    out.r = out.r.tail() + Poly::monomial(ctx.space, Coeff(rest), mono::mul(m, t_power(ctx, l)));
    out.q = out.q + geometric(ctx, l).times_term(Coeff(rest), m);
  }
  if (!out.r.is_zero() && out.r.lc() != 1) {
    auto [a, b] = bezout_mod_p(out.r.lc().get_num(), ctx.p);
    const Exponents M = out.r.lt().exp;
    out.r = out.r.scale(Coeff(a)) + ctx.p_minus_t().times_term(Coeff(b), M);
    out.q = out.q.scale(Coeff(a)) - Poly::monomial(ctx.space, Coeff(b), M);
    out.a = a;
  }
  return out;
}

DivisionResult shddwr(const Poly& f, std::span<const Poly> G, const PadicContext& ctx, const DivisionBudget& budget) {
  require_special_divisors(G, ctx, f.space());
  if (!f.is_x_homogeneous(kAllVariables)) throw UsageError("shddwr: dividend is not homogeneous");
  for (const auto& g : G) {
    if (!g.is_x_homogeneous(kAllVariables)) throw UsageError("shddwr: divisor is not homogeneous");
  }
  auto core = detail::hddwr_core(f, G, detail::Strategy::Special, budget);
  return DivisionResult{Poly::constant(f.space(), 1), std::move(core.q), std::move(core.r),
                        ConditionSet{Condition::DD1, Condition::DD2, Condition::DDH, Condition::ID1, Condition::ID2,
                                     Condition::SID2}};
}

DivisionResult sdwr(const Poly& f, std::span<const Poly> G, const PadicContext& ctx, const DivisionBudget& budget) {
  require_ctx_space(f, ctx);
  require_special_divisors(G, ctx, ctx.space);
  SdwrState st{ctx, ctx.space->homogenized(kAllVariables), {}, {}, {}, {}, budget};
  for (const auto& g : G) st.push(g);
  Weak w = sdwr_rec(st, f, true);
  return DivisionResult{std::move(w.u), std::move(w.q), std::move(w.r), ConditionSet{Condition::ID1, Condition::ID2}};
}

DivisionResult strengthen_unit(const Poly& f, std::span<const Poly> G, const DivisionResult& res,
                               const PadicContext& ctx) {
  require_ctx_space(f, ctx);
  check_conditions(f, G, res);
  if (res.u.is_zero() || !mono::is_one(res.u.lt().exp)) throw CertificateError("unit factor has lm != 1");
  const mpz_class c = res.u.lc().get_num();
  if (mpz_divisible_p(c.get_mpz_t(), ctx.p.get_mpz_t()) != 0) throw CertificateError("p divides lc(u)");
  if (c == 1) return res;
  auto [a, b] = bezout_mod_p(c, ctx.p);
  // balanced p-adic digits of b
  Poly v = Poly::constant(ctx.space, 1) + res.u.tail().scale(Coeff(a));
  Poly h(ctx.space);
  std::int32_t j = 0;
  const mpz_class half = ctx.p / 2;
  while (b != 0) {
    mpz_class d = b % ctx.p;
    if (d < 0) d += ctx.p;
    if (d > half || (ctx.p == 2 && d == 1 && b < 0)) d -= ctx.p;
    v = v - Poly::monomial(ctx.space, Coeff(d), t_power(ctx, j + 1));
    h = h - geometric(ctx, j + 1).scale(Coeff(d));
    b = (b - d) / ctx.p;
    ++j;
  }
  DivisionResult out{std::move(v), {}, res.r.scale(Coeff(a)), res.flags};
  for (std::size_t i = 0; i < res.q.size(); ++i) out.q.push_back(res.q[i].scale(Coeff(a)));
  out.q[0] = out.q[0] - h * f;
  check_conditions(f, G, out);
  return out;
}

BasisResult std_padic(std::span<const Poly> G, const PadicContext& ctx, const StdOptions& opts) {
  if (G.empty() || !(G.front() == ctx.p_minus_t())) throw UsageError("std_padic: first generator must be p - t");
  BasisResult out;
  out.basis.push_back(G.front());
  out.trace.push_back({TraceEntry::Kind::Input, 0, 0});
  for (std::size_t i = 1; i < G.size(); ++i) {
    require_ctx_space(G[i], ctx);
    Poly r = pred(G[i], ctx, opts.budget).r;
    if (r.is_zero()) continue;
    out.basis.push_back(std::move(r));
    out.trace.push_back({TraceEntry::Kind::Input, i, 0});
  }
  std::size_t seq = 0;
  struct Pair {
    Exponents a;
    std::size_t i, j, seq;
  };
  const Ordering& ord = ctx.space->ordering();
  auto less = [&](const Pair& x, const Pair& y) {
    int c = ord.compare(x.a, 0, y.a, 0);
    if (c != 0) return c < 0;
    if (x.j != y.j) return x.j < y.j;
    return x.seq < y.seq;
  };
  std::set<Pair, decltype(less)> pairs(less);
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      pairs.insert(Pair{mono::lcm(out.basis[i].lt().exp, out.basis[j].lt().exp), i, j, seq++});
    }
  };
  for (std::size_t j = 1; j < out.basis.size(); ++j) add_pairs(j);
  while (!pairs.empty()) {
    const Pair pr = *pairs.begin();
    pairs.erase(pairs.begin());
    const Poly s = spoly(out.basis[pr.i], out.basis[pr.j]);
    DivisionResult d = sdwr(s, out.basis, ctx, opts.budget);
    if (d.r.is_zero()) continue;
    Poly r = pred(d.r, ctx, opts.budget).r;
    if (r.is_zero()) continue;
    out.basis.push_back(std::move(r));
    out.trace.push_back({TraceEntry::Kind::Pair, pr.i, pr.j});
    if (out.basis.size() > opts.max_basis) {
      throw BudgetExhausted("standard basis exceeded " + std::to_string(opts.max_basis) + " elements");
    }
    add_pairs(out.basis.size() - 1);
  }
  return out;
}

Pullback tropical_pullback(std::span<const Poly> F, const mpz_class& p, const std::vector<Coeff>& w,
                           OrderingPtr tiebreaker) {
  std::size_t n = w.size();
  std::vector<std::string> names{"t"};
  if (!F.empty()) {
    const SpacePtr& s = F.front().space();
    if (s->nt() != 0) throw UsageError("tropical_pullback: input must not contain t-variables");
    if (s->nvars() != n) throw UsageError("tropical_pullback: weight arity does not match the variables");
    for (const auto& name : s->names()) names.push_back(name);
    while (std::find(names.begin() + 1, names.end(), names[0]) != names.end()) names[0] += "_";
  } else {
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  }
  std::vector<Coeff> weights{Coeff(-1)};
  weights.insert(weights.end(), w.begin(), w.end());
  if (!tiebreaker) tiebreaker = make_lex(n + 1, 1);
  auto space = Space::make(Ring::integers(), make_weighted(weights, tiebreaker), std::move(names));
  return tropical_pullback(F, PadicContext::make(p, space));
}

Pullback tropical_pullback(std::span<const Poly> F, const PadicContext& ctx) {
  Pullback out{{ctx.p_minus_t()}, ctx};
  for (const auto& f : F) {
    if (f.space()->nvars() + 1 != ctx.space->nvars() || f.space()->rank() != 1) {
      throw UsageError("tropical_pullback: variable count mismatch");
    }
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      if (t.c.get_den() != 1) throw UsageError("tropical_pullback: non-integral coefficient");
      Exponents e{0};
      e.insert(e.end(), t.exp.begin(), t.exp.end());
      terms.push_back(Term{t.c, std::move(e), 0});
    }
    out.generators.push_back(Poly::from_terms(ctx.space, std::move(terms)));
  }
  return out;
}

bool has_x_monomial_lead(std::span<const Poly> basis, const PadicContext& ctx) {
  const Poly pt = ctx.p_minus_t();
  for (const auto& g : basis) {
    if (g.is_zero() || g == pt) continue;
    const Term& lt = g.lt();
    if (lt.exp[0] != 0) continue;
    mpz_class c = lt.c.get_num();
    if (mpz_divisible_p(c.get_mpz_t(), ctx.p.get_mpz_t()) == 0) return true;
  }
  return false;
}

}  // namespace ringstd
