#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "ringstd/monomial.hpp"
#include "ringstd/ordering.hpp"
#include "ringstd/ring.hpp"

namespace ringstd {

class Space;
using SpacePtr = std::shared_ptr<const Space>;

/// Signature of R[t,x]^s together with its ordering and variable names.
/// Polynomials compare and combine only within the same Space object.
class Space : public std::enable_shared_from_this<Space> {
 public:
  static SpacePtr make(Ring ring, OrderingPtr ordering, std::vector<std::string> names = {});

  const Ring& ring() const noexcept { return ring_; }
  const Ordering& ordering() const noexcept { return *ordering_; }
  const OrderingPtr& ordering_ptr() const noexcept { return ordering_; }
  std::size_t nvars() const noexcept { return ordering_->nvars(); }
  std::size_t nt() const noexcept { return ordering_->nt(); }
  std::uint32_t rank() const noexcept { return ordering_->rank(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Space over (vars, x0) with the homogenized ordering, x0 last. The
  /// degree runs over [deg_begin, nvars) plus x0. Cached per deg_begin.
  SpacePtr homogenized(std::size_t deg_begin) const;
  /// Same variables and ring under another ordering of the same signature.
  SpacePtr with_ordering(OrderingPtr ordering) const;

 private:
  Space(Ring ring, OrderingPtr ordering, std::vector<std::string> names);

  Ring ring_;
  OrderingPtr ordering_;
  std::vector<std::string> names_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::size_t, SpacePtr> homogenized_;
};

struct Term {
  Coeff c;
  Exponents exp;
  std::uint32_t comp = 0;

  ModuleMonomial mm() const { return {exp, comp}; }
};

/// Sparse element of R[t,x]^s, terms strictly descending under the space
/// ordering, no zero coefficients. Ring polynomials (units u, quotients q)
/// are polys whose terms all sit in component 0.
class Poly {
 public:
  explicit Poly(SpacePtr space) : space_(std::move(space)) {}

  /// Sorts, merges equal monomials and reduces coefficients into the ring.
  static Poly from_terms(SpacePtr space, std::vector<Term> terms);
  /// Trusted: terms already strictly descending, canonical and nonzero.
  static Poly from_sorted_terms(SpacePtr space, std::vector<Term> terms);
  static Poly constant(SpacePtr space, const Coeff& c, std::uint32_t comp = 0);
  static Poly monomial(SpacePtr space, const Coeff& c, Exponents exp, std::uint32_t comp = 0);

  const SpacePtr& space() const noexcept { return space_; }
  const Ring& ring() const noexcept { return space_->ring(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// All terms in component 0.
  bool is_scalar() const noexcept;

  /// EmptyInputError for the zero polynomial.
  const Term& lt() const;
  ModuleMonomial lm() const;
  const Coeff& lc() const;
  Poly lt_poly() const;
  Poly tail() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  /// Scalar times vector (either side may be the scalar).
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly scale(const Coeff& c) const;
  /// c * x^exp * this.
  Poly times_term(const Coeff& c, std::span<const std::int32_t> exp) const;
  /// this + c * x^exp * g, one merge pass.
  Poly add_scaled(const Coeff& c, std::span<const std::int32_t> exp, const Poly& g) const;

  /// Component j as a ring polynomial.
  Poly component(std::uint32_t j) const;
  /// Copy with component j removed (set to zero).
  Poly without_component(std::uint32_t j) const;
  /// Ring polynomial placed into component j.
  Poly in_component(std::uint32_t j) const;

  /// Maximal degree over variables [deg_begin, nvars); EmptyInputError on 0.
  std::int64_t x_degree(std::size_t deg_begin) const;
  std::int64_t x_degree() const { return x_degree(space_->nt()); }
  bool is_x_homogeneous(std::size_t deg_begin) const;
  bool is_x_homogeneous() const { return is_x_homogeneous(space_->nt()); }
  /// max w.(beta, alpha[, e_i]); w of length nvars or nvars + rank.
  Coeff weighted_degree(const std::vector<Coeff>& w) const;
  bool is_weighted_homogeneous(const std::vector<Coeff>& w) const;
  /// deg(f) - deg(lm f) over [deg_begin, nvars).
  std::int64_t ecart(std::size_t deg_begin) const;
  std::int64_t ecart() const { return ecart(space_->nt()); }

 private:
  void require_same_space(const Poly& o) const;

  SpacePtr space_;
  std::vector<Term> terms_;
};

/// f^h in f.space()->homogenized(deg_begin). Zero maps to zero.
Poly homogenize(const Poly& f, std::size_t deg_begin);
/// F|_{x0=1} as an element of base (the space F's space was derived from).
Poly dehomogenize(const Poly& F, const SpacePtr& base);
/// Re-sorts f under another space with the same signature and ring.
Poly rebase(const Poly& f, const SpacePtr& target);

}  // namespace ringstd
