#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ringstd {

/// Exact coefficient value. Integers and residues keep denominator 1;
/// residues are kept in {0, ..., m-1}.
using Coeff = mpq_class;

enum class RingTag { Integers, Rationals, IntegersMod };

/// Deterministic primality check: trial division to a fixed bound, then
/// GMP's BPSW/Miller-Rabin combination.
bool is_prime(const mpz_class& n);

/// Coefficient ring R with solvable linear equations: membership with a
/// witness, syzygy generators, and the prefix-minimal division Div_R.
///
/// Implemented for ZZ, QQ and ZZ/m. Everything is a pure function of the
/// arguments, so a Ring can be shared freely between threads.
class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring integers_mod(const mpz_class& m);
  /// "ZZ", "QQ" or "ZZ/<m>".
  static Ring parse(std::string_view spec);

  RingTag tag() const noexcept { return tag_; }
  const mpz_class& modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept;
  bool is_factorial() const noexcept;
  std::string name() const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.tag_ == b.tag_ && a.modulus_ == b.modulus_; }

  /// True if c is a canonical representative of an element of this ring.
  bool contains(const Coeff& c) const;
  /// Maps a rational (integral unless R = QQ) to its canonical representative.
  Coeff canonical(const Coeff& c) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;

  bool is_unit(const Coeff& a) const;
  Coeff inverse(const Coeff& a) const;
  /// a | b in R.
  bool divides(const Coeff& a, const Coeff& b) const;
  /// Some c with c*a = b; requires divides(a, b).
  Coeff exact_quotient(const Coeff& b, const Coeff& a) const;
  /// Least common multiple; factorial rings only. Units are normalised to 1
  /// over fields and to the positive associate over ZZ.
  Coeff lcm(const Coeff& a, const Coeff& b) const;

  /// Witness a with b = sum a_i c_i, or nullopt if b is not in <C>.
  std::optional<std::vector<Coeff>> lift_membership(const Coeff& b, std::span<const Coeff> C) const;
  /// Generators of {a : sum a_i c_i = 0}. C must be nonempty.
  std::vector<std::vector<Coeff>> syzygy_generators(std::span<const Coeff> C) const;
  /// Representation b = sum a_i c_i with a_i c_i = 0 or a_i c_i outside <c_j | j < i>.
  std::vector<Coeff> div_r(const Coeff& b, std::span<const Coeff> C) const;

 private:
  Ring(RingTag tag, mpz_class modulus, bool prime_modulus)
      : tag_(tag), modulus_(std::move(modulus)), prime_modulus_(prime_modulus) {}

  void require_elements(std::span<const Coeff> values, const char* where) const;

  RingTag tag_;
  mpz_class modulus_;
  bool prime_modulus_ = false;
};

}  // namespace ringstd
