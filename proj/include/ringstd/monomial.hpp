#pragma once

#include <boost/container/small_vector.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace ringstd {

/// Exponent vector over (t_1..t_m, x_1..x_n), t-block first.
class Exponents : public boost::container::small_vector<std::int32_t, 8> {
 public:
  using Base = boost::container::small_vector<std::int32_t, 8>;
  using Base::Base;
  Exponents() = default;
  Exponents(const Base& b) : Base(b) {}

  operator std::span<const std::int32_t>() const noexcept { return {data(), size()}; }
  operator std::span<std::int32_t>() noexcept { return {data(), size()}; }
};

/// Exponent arithmetic. All of it is overflow checked and throws
/// ExponentOverflow rather than wrapping.
namespace mono {

Exponents one(std::size_t nvars);
Exponents mul(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
bool divides(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
/// b / a; UsageError unless a | b.
Exponents quotient(std::span<const std::int32_t> b, std::span<const std::int32_t> a);
Exponents lcm(std::span<const std::int32_t> a, std::span<const std::int32_t> b);
/// Sum of exponents over [begin, size).
std::int64_t degree(std::span<const std::int32_t> a, std::size_t begin = 0);
bool is_one(std::span<const std::int32_t> a);

}  // namespace mono

/// Monomial times a basis vector e_{comp+1}. Components are 0-based.
struct ModuleMonomial {
  Exponents exp;
  std::uint32_t comp = 0;

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

bool divides(const ModuleMonomial& a, const ModuleMonomial& b);
/// Ring monomial b / a; UsageError unless a | b.
Exponents quotient(const ModuleMonomial& b, const ModuleMonomial& a);
/// nullopt stands for the zero lcm of different components.
std::optional<ModuleMonomial> lcm_mm(const ModuleMonomial& a, const ModuleMonomial& b);

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept;
};

struct ModuleMonomialHash {
  std::size_t operator()(const ModuleMonomial& m) const noexcept;
};

}  // namespace ringstd
