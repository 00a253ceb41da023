#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringstd/monomial.hpp"
#include "ringstd/ring.hpp"

namespace ringstd {

/// How components enter a module ordering built from a ring ordering.
/// Top: monomials first, smaller component greater on ties.
/// Pot: smaller component greater first, then monomials.
enum class Position { Top, Pot };

/// Total, multiplicative ordering on module monomials of a fixed
/// signature (nvars exponents, the first nt of which are t-variables,
/// components 0..rank-1). Immutable once built.
class Ordering {
 public:
  virtual ~Ordering() = default;

  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t nt() const noexcept { return nt_; }
  std::uint32_t rank() const noexcept { return rank_; }

  /// -1, 0, +1. No signature checks; the hot path.
  virtual int compare(std::span<const std::int32_t> a, std::uint32_t ca, std::span<const std::int32_t> b,
                      std::uint32_t cb) const = 0;
  /// Checked comparison; UsageError on signature mismatch.
  int compare(const ModuleMonomial& a, const ModuleMonomial& b) const;

  /// Round-trippable spec string.
  virtual std::string describe() const = 0;

 protected:
  Ordering(std::size_t nvars, std::size_t nt, std::uint32_t rank);

 private:
  std::size_t nvars_;
  std::size_t nt_;
  std::uint32_t rank_;
};

using OrderingPtr = std::shared_ptr<const Ordering>;

/// Rows of a full-rank rational matrix, compared lexicographically.
/// A row may carry rank extra entries, weighting the components.
OrderingPtr make_matrix(const std::vector<std::vector<Coeff>>& rows, std::size_t nvars, std::size_t nt,
                        std::uint32_t rank = 1, Position pos = Position::Top);

/// Lexicographic on the x-block in the given priority (indices into the
/// x-block, default x_1 > x_2 > ...), t-variables local after that.
OrderingPtr make_lex(std::size_t nvars, std::size_t nt, std::uint32_t rank = 1, Position pos = Position::Top,
                     std::optional<std::vector<std::size_t>> priority = std::nullopt);
/// x-degree, then lex; t-variables local.
OrderingPtr make_deglex(std::size_t nvars, std::size_t nt, std::uint32_t rank = 1, Position pos = Position::Top);
/// x-degree, then reverse lex; t-variables local.
OrderingPtr make_degrevlex(std::size_t nvars, std::size_t nt, std::uint32_t rank = 1, Position pos = Position::Top);

/// Weighted degree w.(beta, alpha[, e_i]) first, tiebreaker after.
/// w has length nvars or nvars + rank; its t-entries must be negative.
OrderingPtr make_weighted(const std::vector<Coeff>& w, OrderingPtr tiebreaker);

/// a eps_i > b eps_j iff a lm_i > b lm_j, or equal and i > j.
OrderingPtr make_schreyer(OrderingPtr base, std::vector<ModuleMonomial> leads);

/// Ordering on (vars, x0), x0 appended last: the degree over
/// [deg_begin, nvars) plus x0 first, then base on the x0 = 1 image.
OrderingPtr make_homogenized(OrderingPtr base, std::size_t deg_begin);

}  // namespace ringstd
