#include "ringstd/stdbasis.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "ringstd/errors.hpp"

namespace ringstd {

namespace {

struct Queued {
  ModuleMonomial a;
  std::size_t l;
  std::size_t seq;
  std::size_t i = 0;  // pair partner, factorial loop only
};

// Ascending by a, then l, then insertion order.
struct QueueLess {
  const Ordering* ord;
  bool operator()(const Queued& x, const Queued& y) const {
    int c = ord->compare(x.a.exp, x.a.comp, y.a.exp, y.a.comp);
    if (c != 0) return c < 0;
    if (x.l != y.l) return x.l < y.l;
    return x.seq < y.seq;
  }
};

void require_nonempty_common_space(std::span<const Poly> G) {
  for (const auto& g : G) {
    if (g.space() != G.front().space()) throw UsageError("generators from different spaces");
  }
}

void pad(SyzVector& v, const SpacePtr& s, std::size_t len) {
  while (v.size() < len) v.emplace_back(s);
}

// xi = u xi' - sum q_i eps_i (- eps_new).
SyzVector syzygy_from(const SyzVector& xi_prime, const DivisionResult& d, bool appended) {
  const SpacePtr& s = d.u.space();
  SyzVector xi = detail::zero_quotients(s, d.q.size() + (appended ? 1 : 0));
  for (std::size_t i = 0; i < xi_prime.size(); ++i) xi[i] = d.u * xi_prime[i];
  for (std::size_t i = 0; i < d.q.size(); ++i) xi[i] = xi[i] - d.q[i];
  if (appended) xi.back() = Poly::constant(s, -1);
  return xi;
}

void drop_zero_inputs(std::span<const Poly> G, std::vector<Poly>& basis, std::vector<TraceEntry>& trace) {
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (G[i].is_zero()) continue;
    basis.push_back(G[i]);
    trace.push_back({TraceEntry::Kind::Input, i, 0});
  }
}

void check_size(const std::vector<Poly>& basis, const StdOptions& opts) {
  if (basis.size() > opts.max_basis) {
    throw BudgetExhausted("standard basis exceeded " + std::to_string(opts.max_basis) + " elements");
  }
}

void finish_syzygies(BasisResult& out, std::vector<SyzVector>& syz, const StdOptions& opts) {
  if (!opts.with_syzygies || out.basis.empty()) return;
  const SpacePtr s = out.basis.front().space();
  for (auto& v : syz) pad(v, s, out.basis.size());
  out.syzygy_basis = std::move(syz);
}

// Distinct lcms of subsets J with max J = l and l in J.
std::vector<ModuleMonomial> layer_lcms(std::span<const Poly> G, std::size_t l, std::size_t max_lcms) {
  std::vector<ModuleMonomial> out{G[l].lm()};
  std::unordered_set<ModuleMonomial, ModuleMonomialHash> seen{out.front()};
  for (std::size_t i = 0; i < l; ++i) {
    if (G[i].is_zero() || G[i].lt().comp != G[l].lt().comp) continue;
    const std::size_t n = out.size();
    for (std::size_t k = 0; k < n; ++k) {
      ModuleMonomial m{mono::lcm(out[k].exp, G[i].lt().exp), out[k].comp};
      if (seen.insert(m).second) {
        out.push_back(std::move(m));
        if (out.size() > max_lcms) {
          throw BudgetExhausted("syzygy layer exceeded " + std::to_string(max_lcms) + " distinct lcms");
        }
      }
    }
  }
  return out;
}

struct LeadKey {
  std::size_t l;
  Coeff c;
  Exponents exp;
  bool operator==(const LeadKey& o) const { return l == o.l && c == o.c && exp == o.exp; }
};

struct LeadKeyHash {
  std::size_t operator()(const LeadKey& k) const noexcept {
    return ExponentsHash{}(k.exp) ^ (k.l * 0x9e3779b97f4a7c15ull) ^ std::hash<std::string>{}(k.c.get_str());
  }
};

}  // namespace

std::string TraceEntry::to_string() const {
  switch (kind) {
    case Kind::Input:
      return "input " + std::to_string(first + 1);
    case Kind::Pair:
      return "spoly " + std::to_string(first + 1) + "," + std::to_string(second + 1);
    case Kind::Layer:
      return "syzygy layer " + std::to_string(first + 1);
  }
  return {};
}

Poly spoly(const Poly& gi, const Poly& gj) {
  if (gi.space() != gj.space()) throw UsageError("spoly: different spaces");
  const Ring& R = gi.ring();
  if (!R.is_factorial()) throw UsageError("spoly needs a factorial ring; use the general engine");
  if (gi.is_zero() || gj.is_zero()) return Poly(gi.space());
  const Term& a = gi.lt();
  const Term& b = gj.lt();
  if (a.comp != b.comp) return Poly(gi.space());
  const Exponents m = mono::lcm(a.exp, b.exp);
  const Coeff L = R.lcm(a.c, b.c);
  Poly s = gi.times_term(R.exact_quotient(L, a.c), mono::quotient(m, a.exp));
  return s.add_scaled(R.neg(R.exact_quotient(L, b.c)), mono::quotient(m, b.exp), gj);
}

Poly apply_syzygy(std::span<const Poly> xi, std::span<const Poly> G) {
  if (G.empty()) throw UsageError("apply_syzygy: no generators");
  Poly out(G.front().space());
  for (std::size_t i = 0; i < xi.size() && i < G.size(); ++i) {
    if (!xi[i].is_zero()) out = out + xi[i] * G[i];
  }
  return out;
}

SpacePtr schreyer_space(std::span<const Poly> G) {
  if (G.empty()) throw UsageError("schreyer_space: no generators");
  std::vector<ModuleMonomial> leads;
  for (const auto& g : G) {
    if (g.is_zero()) throw UsageError("schreyer_space: zero generator");
    leads.push_back(g.lm());
  }
  const SpacePtr& base = G.front().space();
  return Space::make(base->ring(), make_schreyer(base->ordering_ptr(), std::move(leads)), base->names());
}

Poly to_schreyer(std::span<const Poly> xi, const SpacePtr& schreyer) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < xi.size(); ++i) {
    for (const auto& t : xi[i].terms()) terms.push_back(Term{t.c, t.exp, static_cast<std::uint32_t>(i)});
  }
  return Poly::from_terms(schreyer, std::move(terms));
}

std::vector<SyzygyCandidate> build_syzygy_layer(std::span<const Poly> G, std::size_t l, std::size_t max_lcms) {
  if (l >= G.size()) throw UsageError("build_syzygy_layer: index out of range");
  std::vector<SyzygyCandidate> out;
  if (G[l].is_zero()) return out;
  const SpacePtr& s = G[l].space();
  const Ring& R = s->ring();
  const Term& gl = G[l].lt();
  if (R.is_factorial()) {
    for (std::size_t i = 0; i < l; ++i) {
      if (G[i].is_zero() || G[i].lt().comp != gl.comp) continue;
      const Term& gi = G[i].lt();
      const Exponents m = mono::lcm(gi.exp, gl.exp);
      const Coeff L = R.lcm(gi.c, gl.c);
      SyzygyCandidate c;
      c.l = l;
      c.a = {m, gl.comp};
      c.support = {i, l};
      c.coeff_syz = {R.exact_quotient(L, gi.c), R.neg(R.exact_quotient(L, gl.c))};
      c.xi_prime = detail::zero_quotients(s, l + 1);
      c.xi_prime[i] = Poly::monomial(s, c.coeff_syz[0], mono::quotient(m, gi.exp));
      c.xi_prime[l] = Poly::monomial(s, c.coeff_syz[1], mono::quotient(m, gl.exp));
      out.push_back(std::move(c));
    }
    return out;
  }
  std::unordered_set<LeadKey, LeadKeyHash> leads;
  for (const auto& a : layer_lcms(G, l, max_lcms)) {
    std::vector<std::size_t> J;
    std::vector<Coeff> lcs;
    for (std::size_t i = 0; i <= l; ++i) {
      if (G[i].is_zero()) continue;
      const Term& t = G[i].lt();
      if (t.comp == a.comp && mono::divides(t.exp, a.exp)) {
        J.push_back(i);
        lcs.push_back(t.c);
      }
    }
    for (auto& gen : R.syzygy_generators(lcs)) {
      if (sgn(gen.back()) == 0) continue;
      const Exponents ml = mono::quotient(a.exp, gl.exp);
      if (!leads.insert(LeadKey{l, gen.back(), ml}).second) continue;
      SyzygyCandidate c;
      c.l = l;
      c.a = a;
      c.support = J;
      c.xi_prime = detail::zero_quotients(s, l + 1);
      for (std::size_t k = 0; k < J.size(); ++k) {
        if (sgn(gen[k]) == 0) continue;
        c.xi_prime[J[k]] = Poly::monomial(s, gen[k], mono::quotient(a.exp, G[J[k]].lt().exp));
      }
      c.coeff_syz = std::move(gen);
      out.push_back(std::move(c));
    }
  }
  return out;
}

BasisResult std_general(std::span<const Poly> G, const StdOptions& opts) {
  require_nonempty_common_space(G);
  BasisResult out;
  drop_zero_inputs(G, out.basis, out.trace);
  if (out.basis.empty()) return out;
  const SpacePtr s = out.basis.front().space();
  std::vector<SyzVector> syz;
  std::vector<SyzygyCandidate> pool;
  std::set<Queued, QueueLess> queue(QueueLess{&s->ordering()});
  auto enqueue_layer = [&](std::size_t l) {
    for (auto& c : build_syzygy_layer(out.basis, l, opts.max_layer_lcms)) {
      queue.insert(Queued{c.a, c.l, pool.size()});
      pool.push_back(std::move(c));
    }
  };
  for (std::size_t l = 0; l < out.basis.size(); ++l) enqueue_layer(l);
  while (!queue.empty()) {
    const Queued next = *queue.begin();
    queue.erase(queue.begin());
    SyzygyCandidate& cand = pool[next.seq];
    const Poly h = apply_syzygy(cand.xi_prime, out.basis);
    DivisionResult d = dwr(h, out.basis, opts.budget);
    const bool appended = !d.r.is_zero();
    if (opts.with_syzygies) syz.push_back(syzygy_from(cand.xi_prime, d, appended));
    if (appended) {
      out.basis.push_back(d.r);
      out.trace.push_back({TraceEntry::Kind::Layer, cand.l, next.seq});
      check_size(out.basis, opts);
      enqueue_layer(out.basis.size() - 1);
    }
    pool[next.seq].certificate = std::move(d);
  }
  finish_syzygies(out, syz, opts);
  return out;
}

BasisResult std_factorial(std::span<const Poly> G, const StdOptions& opts) {
  require_nonempty_common_space(G);
  if (!G.empty() && !G.front().ring().is_factorial()) {
    throw UsageError("std_factorial needs a factorial ring; use the general engine");
  }
  BasisResult out;
  drop_zero_inputs(G, out.basis, out.trace);
  if (out.basis.empty()) return out;
  const SpacePtr s = out.basis.front().space();
  const Ring& R = s->ring();
  std::vector<SyzVector> syz;
  std::size_t seq = 0;
  std::set<Queued, QueueLess> pairs(QueueLess{&s->ordering()});
  auto add_pairs = [&](std::size_t j) {
    const Term& gj = out.basis[j].lt();
    for (std::size_t i = 0; i < j; ++i) {
      const Term& gi = out.basis[i].lt();
      if (gi.comp != gj.comp) continue;
      pairs.insert(Queued{{mono::lcm(gi.exp, gj.exp), gj.comp}, j, seq++, i});
    }
  };
  for (std::size_t j = 0; j < out.basis.size(); ++j) add_pairs(j);
  while (!pairs.empty()) {
    const Queued p = *pairs.begin();
    pairs.erase(pairs.begin());
    const Poly h = spoly(out.basis[p.i], out.basis[p.l]);
    DivisionResult d = dwr(h, out.basis, opts.budget);
    const bool appended = !d.r.is_zero();
    if (opts.with_syzygies) {
      const Term& gi = out.basis[p.i].lt();
      const Term& gj = out.basis[p.l].lt();
      const Coeff L = R.lcm(gi.c, gj.c);
      SyzVector xi_prime = detail::zero_quotients(s, p.l + 1);
      xi_prime[p.i] = Poly::monomial(s, R.exact_quotient(L, gi.c), mono::quotient(p.a.exp, gi.exp));
      xi_prime[p.l] = Poly::monomial(s, R.neg(R.exact_quotient(L, gj.c)), mono::quotient(p.a.exp, gj.exp));
      syz.push_back(syzygy_from(xi_prime, d, appended));
    }
    if (appended) {
      out.basis.push_back(std::move(d.r));
      out.trace.push_back({TraceEntry::Kind::Pair, p.i, p.l});
      check_size(out.basis, opts);
      add_pairs(out.basis.size() - 1);
    }
  }
  finish_syzygies(out, syz, opts);
  return out;
}

BasisResult standard_basis(std::span<const Poly> G, const StdOptions& opts) {
  if (!G.empty() && G.front().ring().is_factorial()) return std_factorial(G, opts);
  return std_general(G, opts);
}

CriterionReport is_standard_basis(std::span<const Poly> G, const DivisionBudget& budget) {
  CriterionReport rep;
  if (G.empty()) return rep;
  require_nonempty_common_space(G);
  std::vector<Poly> basis;
  for (const auto& g : G) {
    if (!g.is_zero()) basis.push_back(g);
  }
  for (std::size_t l = 0; l < basis.size(); ++l) {
    for (const auto& c : build_syzygy_layer(basis, l)) {
      const Poly h = apply_syzygy(c.xi_prime, basis);
      Poly r = normal_form(h, basis, budget);
      if (r.is_zero()) continue;
      rep.ok = false;
      rep.detail = "candidate of layer " + std::to_string(l + 1) + " with support {";
      for (std::size_t k = 0; k < c.support.size(); ++k) {
        rep.detail += (k ? "," : "") + std::to_string(c.support[k] + 1);
      }
      rep.detail += "} has a nonzero normal form";
      rep.remainder = std::move(r);
      return rep;
    }
  }
  return rep;
}

bool membership(const Poly& f, std::span<const Poly> basis, const DivisionBudget& budget) {
  return normal_form(f, basis, budget).is_zero();
}

bool lead_module_contains(std::span<const Poly> G, std::span<const Poly> H) {
  return std::all_of(H.begin(), H.end(),
                     [&](const Poly& h) { return h.is_zero() || term_in_lead_module(h.lt(), G); });
}

bool same_lead_module(std::span<const Poly> G, std::span<const Poly> H) {
  return lead_module_contains(G, H) && lead_module_contains(H, G);
}

std::vector<Poly> minimize_basis(std::span<const Poly> G) {
  std::vector<Poly> out;
  for (const auto& g : G) {
    if (!g.is_zero()) out.push_back(g);
  }
  for (std::size_t i = 0; i < out.size();) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < out.size(); ++j) {
      if (j != i) others.push_back(out[j]);
    }
    if (term_in_lead_module(out[i].lt(), others)) {
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return out;
}

std::vector<Poly> reduce_basis(std::span<const Poly> G, const DivisionBudget& budget) {
  std::vector<Poly> out(G.begin(), G.end());
  if (out.empty()) return out;
  require_nonempty_common_space(G);
  const SpacePtr s = out.front().space();
  const Ring& R = s->ring();
  const Ordering& ord = s->ordering();
  for (const auto& g : out) {
    if (g.is_zero()) throw UsageError("reduce_basis: zero element");
    if (s->nt() > 0 && !g.is_x_homogeneous()) throw UsageError("reduce_basis: basis is not x-homogeneous");
  }
  std::size_t steps = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::size_t pos = 1;
    while (pos < out[i].size()) {
      const Term p = out[i].terms()[pos];
      if (!term_in_lead_module(p, out)) {
        ++pos;
        continue;
      }
      if (++steps > budget.max_iterations) {
        throw BudgetExhausted("reduce_basis exceeded " + std::to_string(budget.max_iterations) + " steps");
      }
      const Poly pt = Poly::from_sorted_terms(s, {p});
      auto core = detail::hddwr_core(pt, out, detail::Strategy::General, budget);
      Poly g = out[i];
      for (std::size_t j = 0; j < out.size(); ++j) {
        if (!core.q[j].is_zero()) g = g - core.q[j] * out[j];
      }
      out[i] = std::move(g);
      // terms above p are untouched; resume at the first term below p
      pos = 1;
      while (pos < out[i].size() &&
             ord.compare(out[i].terms()[pos].exp, out[i].terms()[pos].comp, p.exp, p.comp) >= 0) {
        ++pos;
      }
    }
  }
  if (R.is_field()) {
    for (auto& g : out) g = g.scale(R.inverse(g.lc()));
  }
  return out;
}

bool is_reduced(std::span<const Poly> G) {
  const std::vector<Poly> m = minimize_basis(G);
  std::size_t nonzero = 0;
  for (const auto& g : G) nonzero += g.is_zero() ? 0 : 1;
  if (m.size() != nonzero) return false;
  for (const auto& g : G) {
    if (g.is_zero()) continue;
    for (std::size_t k = 1; k < g.size(); ++k) {
      if (term_in_lead_module(g.terms()[k], G)) return false;
    }
  }
  return true;
}

}  // namespace ringstd
