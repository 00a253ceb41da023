#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringstd/division.hpp"

namespace ringstd {

/// A vector of ring polynomials indexed like a generator list.
using SyzVector = std::vector<Poly>;

struct StdOptions {
  DivisionBudget budget;
  bool with_syzygies = false;
  /// Distinct lcms per syzygy layer before giving up.
  std::size_t max_layer_lcms = 4096;
  /// Basis size before giving up.
  std::size_t max_basis = 2000;
};

/// Where a basis element came from.
struct TraceEntry {
  enum class Kind { Input, Pair, Layer };
  Kind kind = Kind::Input;
  /// Input: 0-based input index. Pair: (i, j). Layer: (l, candidate seq).
  std::size_t first = 0;
  std::size_t second = 0;

  std::string to_string() const;
};

struct BasisResult {
  std::vector<Poly> basis;
  /// Syzygies of basis, padded to basis.size(), when requested.
  std::optional<std::vector<SyzVector>> syzygy_basis;
  std::vector<TraceEntry> trace;
};

struct SyzygyCandidate {
  /// Index of the generator carrying the Schreyer leading term.
  std::size_t l = 0;
  ModuleMonomial a;
  /// Coefficient syzygy on J_{l,a}, parallel to `support`.
  std::vector<Coeff> coeff_syz;
  std::vector<std::size_t> support;
  /// sum over support of coeff_syz_i * (a / lm g_i) * eps_i, length l + 1.
  SyzVector xi_prime;
  std::optional<DivisionResult> certificate;
};

/// lcm-scaled difference of g_i and g_j; zero across components.
/// Factorial rings only.
Poly spoly(const Poly& gi, const Poly& gj);

/// The candidates of layer l (0-based) of G: C_l, J_{l,a}, coefficient
/// syzygies with nonzero entry at l. Factorial rings use the pairwise form.
std::vector<SyzygyCandidate> build_syzygy_layer(std::span<const Poly> G, std::size_t l,
                                                std::size_t max_lcms = 4096);

/// sum xi_i g_i.
Poly apply_syzygy(std::span<const Poly> xi, std::span<const Poly> G);

/// The space of rank |G| over G's ring polynomials with the Schreyer
/// ordering induced by lm(G), and xi as an element of it.
SpacePtr schreyer_space(std::span<const Poly> G);
Poly to_schreyer(std::span<const Poly> xi, const SpacePtr& schreyer);

BasisResult std_general(std::span<const Poly> G, const StdOptions& opts = {});
BasisResult std_factorial(std::span<const Poly> G, const StdOptions& opts = {});
/// std_factorial on factorial rings, std_general otherwise.
BasisResult standard_basis(std::span<const Poly> G, const StdOptions& opts = {});

struct CriterionReport {
  bool ok = true;
  /// First failing candidate, empty when ok.
  std::string detail;
  std::optional<Poly> remainder;
};

/// Buchberger-type criterion: every candidate image reduces to zero.
CriterionReport is_standard_basis(std::span<const Poly> G, const DivisionBudget& budget = {});

bool membership(const Poly& f, std::span<const Poly> basis, const DivisionBudget& budget = {});

/// lt(h) in LT(G) for every nonzero h in H.
bool lead_module_contains(std::span<const Poly> G, std::span<const Poly> H);
bool same_lead_module(std::span<const Poly> G, std::span<const Poly> H);

/// Drops elements whose leading term lies in the leading module of the rest.
std::vector<Poly> minimize_basis(std::span<const Poly> G);

/// Reduces tails of a minimal standard basis, largest term first.
/// Elements must be x-homogeneous when t-variables are present. Over
/// fields the result is monic.
std::vector<Poly> reduce_basis(std::span<const Poly> G, const DivisionBudget& budget = {});

/// Minimal, and no tail term lies in LT(G).
bool is_reduced(std::span<const Poly> G);

}  // namespace ringstd
