#pragma once

#include <string>
#include <vector>

#include "ringstd/stdbasis.hpp"

namespace ringstd {

/// Prime p and a rank-one space over ZZ whose first variable is t, local,
/// and otherwise an ordinary polynomial variable.
struct PadicContext {
  mpz_class p;
  SpacePtr space;

  /// UsageError unless p is prime and space is ZZ[t, x...] of rank 1 with
  /// exactly one t-variable.
  static PadicContext make(const mpz_class& p, SpacePtr space);

  /// The polynomial p - t.
  Poly p_minus_t() const;
};

struct PRedResult {
  mpz_class a;
  Poly q;
  Poly r;
};

/// a*g = q*(p - t) + r with a in {1..p-1}, lm(q) <= lm(g), r = 0 or lc(r) = 1.
PRedResult pred(const Poly& g, const PadicContext& ctx, const DivisionBudget& budget = {});

/// HDDwR with the single-divisor test lt(g_i) | lt(f), lowest index first.
/// Degrees count t as well. Expects lc(g_1) = p and lc(g_i) = 1 otherwise.
DivisionResult shddwr(const Poly& f, std::span<const Poly> G, const PadicContext& ctx,
                      const DivisionBudget& budget = {});

/// Weak division with p not dividing lc(u), lm(u) = 1. G[0] must be p - t
/// and every other divisor must have leading coefficient 1.
DivisionResult sdwr(const Poly& f, std::span<const Poly> G, const PadicContext& ctx,
                    const DivisionBudget& budget = {});

/// Turns u f = sum q_i g_i + r with p not dividing lc(u) into a
/// representation with lc(u) = 1. Re-verifies the identity.
DivisionResult strengthen_unit(const Poly& f, std::span<const Poly> G, const DivisionResult& res,
                               const PadicContext& ctx);

/// Standard basis of <G> with G[0] = p - t; every later element has
/// leading coefficient 1.
BasisResult std_padic(std::span<const Poly> G, const PadicContext& ctx, const StdOptions& opts = {});

struct Pullback {
  std::vector<Poly> generators;
  PadicContext ctx;
};

/// (p - t, f_1, ..., f_k) over ZZ[t, x] with the ordering of weight
/// (-1, w) and the given tiebreaker (lex on x, t local, when null).
Pullback tropical_pullback(std::span<const Poly> F, const mpz_class& p, const std::vector<Coeff>& w,
                           OrderingPtr tiebreaker = nullptr);
/// Same, for an explicit target space whose variable 0 is t.
Pullback tropical_pullback(std::span<const Poly> F, const PadicContext& ctx);

/// Heuristic: some leading term of the basis other than p - t is free of
/// t and has a coefficient prime to p.
bool has_x_monomial_lead(std::span<const Poly> basis, const PadicContext& ctx);

}  // namespace ringstd
