#include "ringstd/monomial.hpp"

#include <algorithm>
#include <limits>

#include "ringstd/errors.hpp"

namespace ringstd {

namespace mono {

namespace {

void require_same_length(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  if (a.size() != b.size()) throw UsageError("monomials of different signatures");
}

std::int32_t checked_add(std::int32_t a, std::int32_t b) {
  std::int32_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ExponentOverflow("exponent overflow in monomial product");
  return out;
}

}  // namespace

Exponents one(std::size_t nvars) { return Exponents(nvars, 0); }

Exponents mul(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  require_same_length(a, b);
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
  return out;
}

bool divides(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents quotient(std::span<const std::int32_t> b, std::span<const std::int32_t> a) {
  if (!divides(a, b)) throw UsageError("monomial quotient by a non-divisor");
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[i] - a[i];
  return out;
}

Exponents lcm(std::span<const std::int32_t> a, std::span<const std::int32_t> b) {
  require_same_length(a, b);
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

std::int64_t degree(std::span<const std::int32_t> a, std::size_t begin) {
  std::int64_t d = 0;
  for (std::size_t i = begin; i < a.size(); ++i) d += a[i];
  return d;
}

bool is_one(std::span<const std::int32_t> a) {
  return std::all_of(a.begin(), a.end(), [](std::int32_t e) { return e == 0; });
}

}  // namespace mono

bool divides(const ModuleMonomial& a, const ModuleMonomial& b) {
  return a.comp == b.comp && mono::divides(a.exp, b.exp);
}

Exponents quotient(const ModuleMonomial& b, const ModuleMonomial& a) {
  if (a.comp != b.comp) throw UsageError("monomial quotient across components");
  return mono::quotient(b.exp, a.exp);
}

std::optional<ModuleMonomial> lcm_mm(const ModuleMonomial& a, const ModuleMonomial& b) {
  if (a.comp != b.comp) return std::nullopt;
  return ModuleMonomial{mono::lcm(a.exp, b.exp), a.comp};
}

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto v : e) {
    h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(v));
    h *= 0x100000001b3ull;
  }
  return h;
}

std::size_t ModuleMonomialHash::operator()(const ModuleMonomial& m) const noexcept {
  return ExponentsHash{}(m.exp) * 31u + m.comp;
}

}  // namespace ringstd
