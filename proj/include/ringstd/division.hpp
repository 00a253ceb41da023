#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ringstd/poly.hpp"

namespace ringstd {

/// Caps that turn non-termination into BudgetExhausted.
struct DivisionBudget {
  /// Reduction steps per HDDwR call.
  std::size_t max_iterations = 10000;
  /// Optional cap on the t-degree of a leading term being processed.
  std::optional<std::int64_t> max_t_degree;
  /// Recursive calls per DwR / SDwR invocation.
  std::size_t max_recursions = 10000;
  /// Caps on intermediate polynomials inside DwR / SDwR.
  std::size_t max_terms = 100000;
  std::size_t max_coefficient_bits = 65536;
};

enum class Condition : unsigned { ID1 = 1u, ID2 = 2u, DD1 = 4u, DD2 = 8u, SID2 = 16u, DDH = 32u };

class ConditionSet {
 public:
  constexpr ConditionSet() = default;
  constexpr ConditionSet(std::initializer_list<Condition> cs) {
    for (auto c : cs) bits_ |= static_cast<unsigned>(c);
  }
  bool has(Condition c) const noexcept { return (bits_ & static_cast<unsigned>(c)) != 0; }
  bool contains(ConditionSet o) const noexcept { return (bits_ & o.bits_) == o.bits_; }
  void insert(Condition c) noexcept { bits_ |= static_cast<unsigned>(c); }
  unsigned bits() const noexcept { return bits_; }
  friend bool operator==(ConditionSet, ConditionSet) = default;
  /// "ID1 ID2 SID2" in a fixed order.
  std::string to_string() const;
  std::vector<std::string> names() const;

 private:
  unsigned bits_ = 0;
};

/// u f = sum q_i g_i + r. u and the q_i are ring polynomials of f's
/// space. flags holds what the producing engine guarantees; use
/// check_conditions for an independent verdict.
struct DivisionResult {
  Poly u;
  std::vector<Poly> q;
  Poly r;
  ConditionSet flags;
};

/// c*m lies in <lt(g) : g in G>, decided over the ground ring.
bool term_in_lead_module(const Coeff& c, const ModuleMonomial& m, std::span<const Poly> G);
bool term_in_lead_module(const Term& t, std::span<const Poly> G);

/// Verifies u f = sum q_i g_i + r exactly (CertificateError otherwise)
/// and returns the conditions that hold. DDH degrees run over
/// [deg_begin, nvars), by default the x-block.
ConditionSet check_conditions(const Poly& f, std::span<const Poly> G, const DivisionResult& res,
                              std::optional<std::size_t> deg_begin = std::nullopt);

/// lt(u) = 1.
bool has_unit_lead(const Poly& u);

/// Determinate division of x-homogeneous input, term by term. Always
/// terminates without t-variables; otherwise bounded by the budget.
DivisionResult hddwr(const Poly& f, std::span<const Poly> G, const DivisionBudget& budget = {});

/// Weak division (ID1, ID2, lt(u) = 1) by the ecart-driven recursion.
/// Runs with every variable counted in degrees, so it terminates on
/// polynomial input for any ordering.
DivisionResult dwr(const Poly& f, std::span<const Poly> G, const DivisionBudget& budget = {});

/// Weak division whose remainder also satisfies SID2.
DivisionResult dwr_sid2(const Poly& f, std::span<const Poly> G, const DivisionBudget& budget = {});

/// Remainder of dwr.
Poly normal_form(const Poly& f, std::span<const Poly> G, const DivisionBudget& budget = {});

namespace detail {

enum class Strategy {
  /// Divisors are all g with lm(g) | lm(f), coefficients by div_r. In
  /// lead_only mode a single g with lt(g) | lt(f) is preferred.
  General,
  /// First g (lowest index) with lt(g) | lt(f).
  Special,
};

struct HddwrOutput {
  std::vector<Poly> q;
  Poly r;
};

/// The HDDwR loop without precondition checks. With lead_only the loop stops at
/// the first irreducible leading term and returns the rest as remainder.
HddwrOutput hddwr_core(const Poly& f, std::span<const Poly> G, Strategy strategy, const DivisionBudget& budget,
                       bool lead_only = false);

/// Throws BudgetExhausted when f exceeds the size caps of the budget.
void check_size(const Poly& f, const DivisionBudget& budget, const char* who);

/// Zero polynomials of f's space, one per divisor.
std::vector<Poly> zero_quotients(const SpacePtr& space, std::size_t k);

}  // namespace detail

}  // namespace ringstd
