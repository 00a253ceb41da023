#include "ringstd/division.hpp"

#include <algorithm>
#include <numeric>

#include "ringstd/errors.hpp"

namespace ringstd {

namespace {

constexpr std::size_t kPolynomialMode = 0;

const std::pair<Condition, const char*> kConditionNames[] = {
    {Condition::ID1, "ID1"}, {Condition::ID2, "ID2"},   {Condition::DD1, "DD1"},
    {Condition::DD2, "DD2"}, {Condition::SID2, "SID2"}, {Condition::DDH, "DDH"},
};

void require_common_space(const Poly& f, std::span<const Poly> G) {
  for (const auto& g : G) {
    if (g.space() != f.space()) throw UsageError("divisor from a different space than the dividend");
  }
}

std::int64_t t_degree(const Term& t, std::size_t nt) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < nt; ++i) d += t.exp[i];
  return d;
}

Poly dehomogenize_all_zero_safe(const Poly& F, const SpacePtr& base) {
  if (F.is_zero()) return Poly(base);
  return dehomogenize(F, base);
}

}  // namespace

std::string ConditionSet::to_string() const {
  std::string s;
  for (const auto& [c, name] : kConditionNames) {
    if (!has(c)) continue;
    if (!s.empty()) s += " ";
    s += name;
  }
  return s;
}

std::vector<std::string> ConditionSet::names() const {
  std::vector<std::string> out;
  for (const auto& [c, name] : kConditionNames) {
    if (has(c)) out.emplace_back(name);
  }
  return out;
}

bool term_in_lead_module(const Coeff& c, const ModuleMonomial& m, std::span<const Poly> G) {
  if (sgn(c) == 0) return true;
  std::vector<Coeff> lcs;
  const Ring* R = nullptr;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    R = &g.ring();
    const Term& lt = g.lt();
    if (lt.comp == m.comp && mono::divides(lt.exp, m.exp)) lcs.push_back(lt.c);
  }
  if (lcs.empty()) return false;
  return R->lift_membership(c, lcs).has_value();
}

bool term_in_lead_module(const Term& t, std::span<const Poly> G) { return term_in_lead_module(t.c, t.mm(), G); }

bool has_unit_lead(const Poly& u) {
  if (u.is_zero()) return false;
  const Term& lt = u.lt();
  return lt.c == 1 && lt.comp == 0 && mono::is_one(lt.exp);
}

ConditionSet check_conditions(const Poly& f, std::span<const Poly> G, const DivisionResult& res,
                              std::optional<std::size_t> deg_begin) {
  require_common_space(f, G);
  if (res.q.size() != G.size()) throw CertificateError("certificate has the wrong number of quotients");
  if (res.u.space() != f.space() || res.r.space() != f.space()) throw CertificateError("certificate space mismatch");
  if (!res.u.is_scalar()) throw CertificateError("unit factor is not a ring polynomial");
  const std::size_t k = G.size();
  std::vector<Poly> products;
  products.reserve(k);
  Poly rhs = res.r;
  for (std::size_t i = 0; i < k; ++i) {
    if (res.q[i].space() != f.space() || !res.q[i].is_scalar()) {
      throw CertificateError("quotient " + std::to_string(i + 1) + " is not a ring polynomial");
    }
    products.push_back(res.q[i] * G[i]);
    rhs = rhs + products.back();
  }
  if (!(res.u * f == rhs)) throw CertificateError("division identity u*f = sum q_i*g_i + r fails");

  const Ordering& ord = f.space()->ordering();
  ConditionSet out;

  bool id1 = true;
  for (const auto& p : products) {
    if (p.is_zero()) continue;
    if (f.is_zero()) {
      id1 = false;
      break;
    }
    const Term& a = p.lt();
    const Term& b = f.lt();
    if (ord.compare(a.exp, a.comp, b.exp, b.comp) > 0) {
      id1 = false;
      break;
    }
  }
  if (id1) out.insert(Condition::ID1);

  if (res.r.is_zero() || !term_in_lead_module(res.r.lt(), G)) out.insert(Condition::ID2);

  bool dd1 = true;
  for (std::size_t i = 0; i < k && dd1; ++i) {
    if (res.q[i].is_zero() || G[i].is_zero()) continue;
    const Poly p = res.q[i] * G[i].lt_poly();
    for (const auto& t : p.terms()) {
      if (term_in_lead_module(t, G.first(i))) {
        dd1 = false;
        break;
      }
    }
  }
  if (dd1) out.insert(Condition::DD1);

  bool dd2 = true;
  for (const auto& t : res.r.terms()) {
    if (term_in_lead_module(t, G)) {
      dd2 = false;
      break;
    }
  }
  if (dd2) out.insert(Condition::DD2);

  bool sid2 = true;
  std::vector<bool> seen(f.space()->rank(), false);
  for (const auto& t : res.r.terms()) {
    if (seen[t.comp]) continue;
    seen[t.comp] = true;
    if (term_in_lead_module(t, G)) {
      sid2 = false;
      break;
    }
  }
  if (sid2) out.insert(Condition::SID2);

  const std::size_t db = deg_begin.value_or(f.space()->nt());
  bool ddh = true;
  if (f.is_zero()) {
    ddh = res.r.is_zero() && std::all_of(res.q.begin(), res.q.end(), [](const Poly& q) { return q.is_zero(); });
  } else {
    const std::int64_t df = f.x_degree(db);
    auto homogeneous_of = [&](const Poly& p, std::int64_t d) {
      return p.is_zero() || (p.is_x_homogeneous(db) && p.x_degree(db) == d);
    };
    if (!homogeneous_of(res.r, df)) ddh = false;
    for (std::size_t i = 0; i < k && ddh; ++i) {
      if (res.q[i].is_zero()) continue;
      if (G[i].is_zero() || !homogeneous_of(res.q[i], df - G[i].x_degree(db))) ddh = false;
    }
  }
  if (ddh) out.insert(Condition::DDH);
  return out;
}

namespace detail {

std::vector<Poly> zero_quotients(const SpacePtr& space, std::size_t k) { return std::vector<Poly>(k, Poly(space)); }

void check_size(const Poly& f, const DivisionBudget& budget, const char* who) {
  if (f.terms().size() > budget.max_terms) {
    throw BudgetExhausted(std::string(who) + " exceeded " + std::to_string(budget.max_terms) + " terms");
  }
  for (const auto& t : f.terms()) {
    const std::size_t bits =
        mpz_sizeinbase(t.c.get_num_mpz_t(), 2) + mpz_sizeinbase(t.c.get_den_mpz_t(), 2);
    if (bits > budget.max_coefficient_bits) {
      throw BudgetExhausted(std::string(who) + " exceeded " + std::to_string(budget.max_coefficient_bits) +
                            " coefficient bits");
    }
  }
}

HddwrOutput hddwr_core(const Poly& f, std::span<const Poly> G, Strategy strategy, const DivisionBudget& budget,
                       bool lead_only) {
  const SpacePtr& space = f.space();
  const Ring& R = space->ring();
  const std::size_t k = G.size();
  std::vector<std::vector<Term>> q(k);
  std::vector<Term> r;
  Poly fnu = f;
  std::size_t iterations = 0;
  std::vector<std::size_t> divisors;
  std::vector<Coeff> lcs;
  while (!fnu.is_zero()) {
    if (++iterations > budget.max_iterations) {
      throw BudgetExhausted("HDDwR exceeded " + std::to_string(budget.max_iterations) + " iterations");
    }
    const Term lt = fnu.lt();
    if (budget.max_t_degree && t_degree(lt, space->nt()) > *budget.max_t_degree) {
      throw BudgetExhausted("HDDwR exceeded the t-degree cap " + std::to_string(*budget.max_t_degree));
    }
    divisors.clear();
    lcs.clear();
    bool reduced = false;
    if (strategy == Strategy::General) {
      for (std::size_t i = 0; i < k; ++i) {
        if (G[i].is_zero()) continue;
        const Term& g = G[i].lt();
        if (g.comp == lt.comp && mono::divides(g.exp, lt.exp)) {
          divisors.push_back(i);
          lcs.push_back(g.c);
        }
      }
      std::optional<std::size_t> single;
      for (std::size_t d = 0; lead_only && d < divisors.size() && !single; ++d) {
        if (R.divides(lcs[d], lt.c)) single = d;
      }
      if (single) {
        const std::size_t i = divisors[*single];
        const Coeff c = R.exact_quotient(lt.c, lcs[*single]);
        Exponents m = mono::quotient(lt.exp, G[i].lt().exp);
        fnu = fnu.add_scaled(R.neg(c), m, G[i]);
        q[i].push_back(Term{c, std::move(m), 0});
        reduced = true;
      } else if (!divisors.empty() && R.lift_membership(lt.c, lcs)) {
        const std::vector<Coeff> a = R.div_r(lt.c, lcs);
        for (std::size_t d = 0; d < divisors.size(); ++d) {
          if (sgn(a[d]) == 0) continue;
          const std::size_t i = divisors[d];
          Exponents m = mono::quotient(lt.exp, G[i].lt().exp);
          fnu = fnu.add_scaled(R.neg(a[d]), m, G[i]);
          q[i].push_back(Term{a[d], std::move(m), 0});
        }
        reduced = true;
      }
    } else {
      for (std::size_t i = 0; i < k; ++i) {
        if (G[i].is_zero()) continue;
        const Term& g = G[i].lt();
        if (g.comp == lt.comp && mono::divides(g.exp, lt.exp) && R.divides(g.c, lt.c)) {
          const Coeff c = R.exact_quotient(lt.c, g.c);
          Exponents m = mono::quotient(lt.exp, g.exp);
          fnu = fnu.add_scaled(R.neg(c), m, G[i]);
          q[i].push_back(Term{c, std::move(m), 0});
          reduced = true;
          break;
        }
      }
    }
    if (!reduced && lead_only) {
      for (const auto& t : fnu.terms()) r.push_back(t);
      break;
    }
    if (!reduced) {
      r.push_back(lt);
      fnu = fnu.tail();
    } else if (!fnu.is_zero() && space->ordering().compare(fnu.lt().exp, fnu.lt().comp, lt.exp, lt.comp) >= 0) {
      // Over ZZ/m the chosen coefficients may fail to cancel only if the
      // ring arithmetic is broken; guard against an infinite loop.
      throw CertificateError("HDDwR step did not cancel the leading term");
    }
  }
  HddwrOutput out{zero_quotients(space, k), Poly::from_sorted_terms(space, std::move(r))};
  for (std::size_t i = 0; i < k; ++i) out.q[i] = Poly::from_sorted_terms(space, std::move(q[i]));
  return out;
}

}  // namespace detail

DivisionResult hddwr(const Poly& f, std::span<const Poly> G, const DivisionBudget& budget) {
  require_common_space(f, G);
  if (!f.is_x_homogeneous()) throw UsageError("hddwr: dividend is not x-homogeneous");
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!G[i].is_x_homogeneous()) throw UsageError("hddwr: divisor " + std::to_string(i + 1) + " is not x-homogeneous");
  }
  auto core = detail::hddwr_core(f, G, detail::Strategy::General, budget);
  return DivisionResult{Poly::constant(f.space(), 1), std::move(core.q), std::move(core.r),
                        ConditionSet{Condition::ID1, Condition::ID2, Condition::DD1, Condition::DD2,
                                     Condition::SID2, Condition::DDH}};
}

namespace {

// Shared state of one DwR invocation. The divisor list grows while the
// recursion descends through the positive-ecart branch.
struct DwrState {
  SpacePtr base;
  SpacePtr hspace;
  std::vector<Poly> G;
  std::vector<Poly> Gh;
  std::vector<Poly> Gh_lead;
  std::vector<std::int64_t> ecarts;
  const DivisionBudget& budget;
  std::size_t recursions = 0;

  void push(const Poly& g) {
    G.push_back(g);
    Gh.push_back(homogenize(g, kPolynomialMode));
    Gh_lead.push_back(Gh.back().is_zero() ? Gh.back() : Gh.back().lt_poly());
    ecarts.push_back(g.is_zero() ? 0 : g.ecart(kPolynomialMode));
  }

  void pop() {
    G.pop_back();
    Gh.pop_back();
    Gh_lead.pop_back();
    ecarts.pop_back();
  }
};

struct WeakDivision {
  Poly u;
  std::vector<Poly> q;
  Poly r;
};

WeakDivision dwr_rec(DwrState& st, const Poly& f) {
  if (++st.recursions > st.budget.max_recursions) {
    throw BudgetExhausted("DwR exceeded " + std::to_string(st.budget.max_recursions) + " recursions");
  }
  detail::check_size(f, st.budget, "DwR");
  const std::size_t k = st.G.size();
  const Ring& R = st.base->ring();
  if (f.is_zero() || !term_in_lead_module(f.lt(), st.G)) {
    return {Poly::constant(st.base, 1), detail::zero_quotients(st.base, k), f};
  }
  const Term& lt = f.lt();
  std::vector<std::size_t> D;
  for (std::size_t i = 0; i < k; ++i) {
    if (st.G[i].is_zero()) continue;
    const Term& g = st.G[i].lt();
    if (g.comp == lt.comp && mono::divides(g.exp, lt.exp)) D.push_back(i);
  }
  std::stable_sort(D.begin(), D.end(), [&](std::size_t a, std::size_t b) { return st.ecarts[a] < st.ecarts[b]; });
  std::vector<Coeff> lcs;
  std::int64_t max_ecart = 0;
  for (std::size_t i : D) {
    lcs.push_back(st.G[i].lc());
    max_ecart = std::max(max_ecart, st.ecarts[i]);
    if (R.lift_membership(lt.c, lcs)) break;
  }
  const std::int64_t e = max_ecart - f.ecart(kPolynomialMode);
  const Poly fh = homogenize(f, kPolynomialMode);
  WeakDivision out{Poly(st.base), detail::zero_quotients(st.base, k), Poly(st.base)};
  if (e > 0) {
    Exponents shift = mono::one(st.hspace->nvars());
    shift.back() = static_cast<std::int32_t>(e);
    const Poly F = fh.times_term(Coeff(1), shift);
    auto core = detail::hddwr_core(F, st.Gh_lead, detail::Strategy::General, st.budget, true);
    Poly rest = F;
    for (std::size_t i = 0; i < k; ++i) {
      if (!core.q[i].is_zero()) rest = rest - core.q[i] * st.Gh[i];
    }
    const Poly fprime = dehomogenize_all_zero_safe(rest, st.base);
    st.push(f);
    WeakDivision sub = dwr_rec(st, fprime);
    st.pop();
    for (std::size_t i = 0; i < k; ++i) {
      out.q[i] = sub.q[i] + sub.u * dehomogenize_all_zero_safe(core.q[i], st.base);
    }
    out.u = sub.u - sub.q[k];
    out.r = std::move(sub.r);
    detail::check_size(out.u, st.budget, "DwR");
  } else {
    auto core = detail::hddwr_core(fh, st.Gh, detail::Strategy::General, st.budget, true);
    WeakDivision sub = dwr_rec(st, dehomogenize_all_zero_safe(core.r, st.base));
    for (std::size_t i = 0; i < k; ++i) {
      out.q[i] = sub.q[i] + sub.u * dehomogenize_all_zero_safe(core.q[i], st.base);
    }
    out.u = std::move(sub.u);
    out.r = std::move(sub.r);
  }
  return out;
}

}  // namespace

DivisionResult dwr(const Poly& f, std::span<const Poly> G, const DivisionBudget& budget) {
  require_common_space(f, G);
  DwrState st{f.space(), f.space()->homogenized(kPolynomialMode), {}, {}, {}, {}, budget};
  for (const auto& g : G) st.push(g);
  WeakDivision w = dwr_rec(st, f);
  return DivisionResult{std::move(w.u), std::move(w.q), std::move(w.r), ConditionSet{Condition::ID1, Condition::ID2}};
}

DivisionResult dwr_sid2(const Poly& f, std::span<const Poly> G, const DivisionBudget& budget) {
  DivisionResult res = dwr(f, G, budget);
  res.flags.insert(Condition::SID2);
  if (res.r.is_zero()) return res;
  const std::uint32_t j = res.r.lt().comp;
  std::vector<std::size_t> keep;
  std::vector<Poly> projected;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero() || G[i].lt().comp == j) continue;
    keep.push_back(i);
    projected.push_back(G[i].without_component(j));
  }
  const Poly sigma_r = res.r.without_component(j);
  if (sigma_r.is_zero()) return res;
  DivisionResult sub = dwr_sid2(sigma_r, projected, budget);
  DivisionResult out{res.u * sub.u, {}, Poly(f.space()), res.flags};
  out.q.reserve(G.size());
  for (std::size_t i = 0; i < G.size(); ++i) out.q.push_back(sub.u * res.q[i]);
  for (std::size_t a = 0; a < keep.size(); ++a) out.q[keep[a]] = out.q[keep[a]] + sub.q[a];
  Poly r = out.u * f;
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (!out.q[i].is_zero()) r = r - out.q[i] * G[i];
  }
  out.r = std::move(r);
  return out;
}

Poly normal_form(const Poly& f, std::span<const Poly> G, const DivisionBudget& budget) {
  return dwr(f, G, budget).r;
}

}  // namespace ringstd
