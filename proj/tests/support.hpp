#pragma once

// Shared helpers for the unit and acceptance tests: random inputs and
// small oracles written without the library's algorithms.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ringstd/division.hpp"
#include "ringstd/parse.hpp"
#include "ringstd/poly.hpp"
#include "ringstd/ring.hpp"

namespace rtest {

using namespace ringstd;
using Rng = std::mt19937_64;

inline Poly P(const SpacePtr& s, const std::string& text) { return parse_poly(text, s); }

inline SpacePtr space(Ring R, OrderingPtr o, std::vector<std::string> names) {
  return Space::make(std::move(R), std::move(o), std::move(names));
}

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Coeff random_coeff(const Ring& R, Rng& rng, int bound = 9) {
  for (;;) {
    Coeff c(uniform(rng, -bound, bound));
    if (R.tag() == RingTag::Rationals && uniform(rng, 0, 3) == 0) c /= uniform(rng, 2, 3);
    c = R.canonical(c);
    if (sgn(c) != 0) return c;
  }
}

inline Exponents random_exponents(std::size_t nvars, Rng& rng, int max_exp) {
  Exponents e(nvars, 0);
  for (auto& x : e) x = uniform(rng, 0, max_exp);
  return e;
}

/// Exponents whose degree over [deg_begin, nvars) is exactly deg.
inline Exponents random_exponents_of_degree(std::size_t nvars, std::size_t deg_begin, int deg, Rng& rng,
                                            int max_t_exp) {
  Exponents e(nvars, 0);
  for (std::size_t i = 0; i < deg_begin; ++i) e[i] = uniform(rng, 0, max_t_exp);
  const std::size_t n = nvars - deg_begin;
  if (n == 0) return e;
  for (int d = 0; d < deg; ++d) e[deg_begin + static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1))]++;
  return e;
}

inline Poly random_poly(const SpacePtr& s, Rng& rng, int max_terms, int max_exp, int coeff_bound = 9) {
  std::vector<Term> terms;
  const int n = uniform(rng, 1, max_terms);
  for (int i = 0; i < n; ++i) {
    terms.push_back(Term{random_coeff(s->ring(), rng, coeff_bound), random_exponents(s->nvars(), rng, max_exp),
                         static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(s->rank()) - 1))});
  }
  return Poly::from_terms(s, std::move(terms));
}

inline Poly random_nonzero_poly(const SpacePtr& s, Rng& rng, int max_terms, int max_exp, int coeff_bound = 9) {
  for (;;) {
    Poly f = random_poly(s, rng, max_terms, max_exp, coeff_bound);
    if (!f.is_zero()) return f;
  }
}

/// x-homogeneous of the given x-degree; t-exponents up to max_t_exp.
inline Poly random_homogeneous(const SpacePtr& s, Rng& rng, int max_terms, int deg, int max_t_exp = 0,
                               int coeff_bound = 9) {
  for (;;) {
    std::vector<Term> terms;
    const int n = uniform(rng, 1, max_terms);
    for (int i = 0; i < n; ++i) {
      terms.push_back(Term{random_coeff(s->ring(), rng, coeff_bound),
                           random_exponents_of_degree(s->nvars(), s->nt(), deg, rng, max_t_exp),
                           static_cast<std::uint32_t>(uniform(rng, 0, static_cast<int>(s->rank()) - 1))});
    }
    Poly f = Poly::from_terms(s, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

// ---------------------------------------------------------------------------
// Ground rings

inline long mod(long a, long m) { return ((a % m) + m) % m; }

/// All vectors in (Z/m)^k, as index <-> vector.
struct ModVectors {
  long m;
  std::size_t k;
  std::size_t count() const {
    std::size_t c = 1;
    for (std::size_t i = 0; i < k; ++i) c *= static_cast<std::size_t>(m);
    return c;
  }
  std::vector<long> at(std::size_t idx) const {
    std::vector<long> v(k);
    for (std::size_t i = 0; i < k; ++i) {
      v[i] = static_cast<long>(idx % static_cast<std::size_t>(m));
      idx /= static_cast<std::size_t>(m);
    }
    return v;
  }
  std::size_t index(const std::vector<long>& v) const {
    std::size_t idx = 0;
    for (std::size_t i = k; i-- > 0;) idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(mod(v[i], m));
    return idx;
  }
};

/// b in <C> over Z/m, by enumeration.
inline bool brute_member_mod(long b, const std::vector<long>& C, long m) {
  std::vector<bool> reach(static_cast<std::size_t>(m), false);
  reach[0] = true;
  for (long c : C) {
    std::vector<bool> next = reach;
    for (long r = 0; r < m; ++r) {
      if (!reach[static_cast<std::size_t>(r)]) continue;
      for (long a = 0; a < m; ++a) next[static_cast<std::size_t>(mod(r + a * c, m))] = true;
    }
    reach = std::move(next);
  }
  return reach[static_cast<std::size_t>(mod(b, m))];
}

/// Submodule of (Z/m)^k spanned by gens, as a membership bitmap.
inline std::vector<bool> span_mod(const std::vector<std::vector<long>>& gens, long m, std::size_t k) {
  ModVectors mv{m, k};
  std::vector<bool> in(mv.count(), false);
  std::vector<std::size_t> members{0};
  in[0] = true;
  for (const auto& g : gens) {
    const std::size_t before = members.size();
    for (std::size_t s = 0; s < before; ++s) {
      const auto v = mv.at(members[s]);
      for (long a = 1; a < m; ++a) {
        std::vector<long> w(k);
        for (std::size_t i = 0; i < k; ++i) w[i] = mod(v[i] + a * g[i], m);
        const std::size_t idx = mv.index(w);
        if (!in[idx]) {
          in[idx] = true;
          members.push_back(idx);
        }
      }
    }
  }
  return in;
}

/// gcd of the entries, nonnegative; b in <C> over Z iff gcd | b.
inline mpz_class gcd_all(const std::vector<mpz_class>& C) {
  mpz_class g = 0;
  for (const auto& c : C) {
    mpz_class a = abs(c);
    while (a != 0) {
      mpz_class r = g % a;
      g = a;
      a = r;
    }
  }
  return g;
}

inline bool gcd_member(const mpz_class& b, const std::vector<mpz_class>& C) {
  const mpz_class g = gcd_all(C);
  return g == 0 ? b == 0 : b % g == 0;
}

/// v in the Z-span of rows, by integer row echelon form.
inline bool in_integer_span(std::vector<mpz_class> v, std::vector<std::vector<mpz_class>> rows) {
  const std::size_t k = v.size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < k && top < rows.size(); ++col) {
    for (;;) {
      std::size_t piv = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] != 0 && (piv == rows.size() || abs(rows[r][col]) < abs(rows[piv][col]))) piv = r;
      }
      if (piv == rows.size()) break;
      std::swap(rows[top], rows[piv]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t c = col; c < k; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  for (const auto& row : rows) {
    std::size_t col = 0;
    while (row[col] == 0) ++col;
    for (std::size_t c = 0; c < col; ++c) {
      if (v[c] != 0) return false;
    }
    if (v[col] % row[col] != 0) return false;
    const mpz_class q = v[col] / row[col];
    for (std::size_t c = col; c < k; ++c) v[c] -= q * row[c];
  }
  return std::all_of(v.begin(), v.end(), [](const mpz_class& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Textbook Buchberger over Q with deglex (x1 > x2 > ...), map based.

struct DegLexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;
  }
};

using QPoly = std::map<std::vector<int>, mpq_class, DegLexGreater>;

inline void qadd(QPoly& f, const std::vector<int>& m, const mpq_class& c) {
  auto [it, fresh] = f.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
}

/// f -= c * m * g
inline void qsub_scaled(QPoly& f, const mpq_class& c, const std::vector<int>& m, const QPoly& g) {
  for (const auto& [e, a] : g) {
    std::vector<int> me(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) me[i] = e[i] + m[i];
    qadd(f, me, -c * a);
  }
}

inline bool mono_divides(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline QPoly qreduce(QPoly f, const std::vector<QPoly>& G) {
  QPoly r;
  while (!f.empty()) {
    const auto [m, c] = *f.begin();
    bool hit = false;
    for (const auto& g : G) {
      const auto& [gm, gc] = *g.begin();
      if (!mono_divides(gm, m)) continue;
      std::vector<int> q(m.size());
      for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] - gm[i];
      qsub_scaled(f, c / gc, q, g);
      hit = true;
      break;
    }
    if (!hit) {
      r.emplace(m, c);
      f.erase(f.begin());
    }
  }
  return r;
}

inline QPoly qmonic(QPoly f) {
  if (f.empty()) return f;
  const mpq_class lc = f.begin()->second;
  for (auto& [m, c] : f) c /= lc;
  return f;
}

// Normal selection strategy plus the coprime-leads criterion.
inline std::vector<QPoly> buchberger(std::vector<QPoly> G) {
  G.erase(std::remove_if(G.begin(), G.end(), [](const QPoly& g) { return g.empty(); }), G.end());
  for (auto& g : G) g = qmonic(std::move(g));
  auto lcm_of = [&](std::size_t i, std::size_t j) {
    const auto& mi = G[i].begin()->first;
    const auto& mj = G[j].begin()->first;
    std::vector<int> l(mi.size());
    for (std::size_t v = 0; v < mi.size(); ++v) l[v] = std::max(mi[v], mj[v]);
    return l;
  };
  auto deg = [](const std::vector<int>& m) { return std::accumulate(m.begin(), m.end(), 0); };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      return deg(lcm_of(a.first, a.second)) < deg(lcm_of(b.first, b.second));
    });
    auto [i, j] = *best;
    pairs.erase(best);
    const auto& mi = G[i].begin()->first;
    const auto& mj = G[j].begin()->first;
    const std::vector<int> l = lcm_of(i, j);
    if (deg(l) == deg(mi) + deg(mj)) continue;
    std::vector<int> qi(l.size()), qj(l.size());
    for (std::size_t v = 0; v < l.size(); ++v) {
      qi[v] = l[v] - mi[v];
      qj[v] = l[v] - mj[v];
    }
    QPoly s;
    qsub_scaled(s, mpq_class(-1), qi, G[i]);
    qsub_scaled(s, mpq_class(1), qj, G[j]);
    QPoly r = qmonic(qreduce(std::move(s), G));
    if (r.empty()) continue;
    G.push_back(std::move(r));
    for (std::size_t a = 0; a + 1 < G.size(); ++a) pairs.emplace_back(a, G.size() - 1);
  }
  return G;
}

/// Minimal generators of the monomial ideal, sorted.
inline std::vector<std::vector<int>> minimal_monomials(std::vector<std::vector<int>> ms) {
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < ms.size() && !redundant; ++j) {
      redundant = j != i && mono_divides(ms[j], ms[i]) && (ms[j] != ms[i]);
    }
    if (!redundant) out.push_back(ms[i]);
  }
  return out;
}

inline QPoly to_qpoly(const Poly& f) {
  QPoly q;
  for (const auto& t : f.terms()) qadd(q, std::vector<int>(t.exp.begin(), t.exp.end()), t.c);
  return q;
}

inline std::vector<std::vector<int>> oracle_lead_ideal(std::span<const Poly> F) {
  std::vector<QPoly> G;
  for (const auto& f : F) G.push_back(to_qpoly(f));
  std::vector<std::vector<int>> leads;
  for (const auto& g : buchberger(std::move(G))) leads.push_back(g.begin()->first);
  return minimal_monomials(std::move(leads));
}

inline std::vector<std::vector<int>> lead_monomial_ideal(std::span<const Poly> B) {
  std::vector<std::vector<int>> leads;
  for (const auto& b : B) {
    if (!b.is_zero()) leads.emplace_back(b.lt().exp.begin(), b.lt().exp.end());
  }
  return minimal_monomials(std::move(leads));
}

// ---------------------------------------------------------------------------
// Certificates

/// u f - sum q_i g_i - r, recomputed here.
inline Poly residual(const Poly& f, std::span<const Poly> G, const DivisionResult& d) {
  Poly acc = d.u * f - d.r;
  for (std::size_t i = 0; i < G.size(); ++i) acc = acc - d.q[i] * G[i];
  return acc;
}

}  // namespace rtest
