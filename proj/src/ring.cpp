#include "ringstd/ring.hpp"

#include <string>

#include "ringstd/errors.hpp"

namespace ringstd {

namespace {

const mpz_class& integral(const Coeff& c) { return c.get_num(); }

mpz_class mod_floor(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Bezout cofactors for g' = s*g + t*c. Keeps s = 1, t = 0 when g already
// divides c so that earlier generators stay preferred.
void extend_gcd(const mpz_class& g, const mpz_class& c, mpz_class& g_out, mpz_class& s, mpz_class& t) {
  if (g != 0 && mpz_divisible_p(c.get_mpz_t(), g.get_mpz_t())) {
    g_out = g;
    s = 1;
    t = 0;
    return;
  }
  if (g == 0) {
    g_out = abs(c);
    s = 0;
    t = sgn(c) < 0 ? -1 : 1;
    return;
  }
  mpz_gcdext(g_out.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
}

// Left-to-right extended gcd over ZZ.
std::optional<std::vector<mpz_class>> integer_witness(const mpz_class& b, const std::vector<mpz_class>& C) {
  std::vector<mpz_class> coeffs(C.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < C.size(); ++i) {
    mpz_class g_next, s, t;
    extend_gcd(g, C[i], g_next, s, t);
    if (s != 1) {
      for (std::size_t j = 0; j < i; ++j) coeffs[j] *= s;
    }
    coeffs[i] = t;
    g = g_next;
  }
  if (g == 0) {
    if (b != 0) return std::nullopt;
    return std::vector<mpz_class>(C.size(), mpz_class(0));
  }
  if (!mpz_divisible_p(b.get_mpz_t(), g.get_mpz_t())) return std::nullopt;
  mpz_class factor = b / g;
  for (auto& a : coeffs) a *= factor;
  return coeffs;
}

mpz_class integer_lcm(const mpz_class& a, const mpz_class& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d < 1000; ++d) {
    if (n == d) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) return false;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Ring Ring::integers() { return Ring(RingTag::Integers, 0, false); }

Ring Ring::rationals() { return Ring(RingTag::Rationals, 0, false); }

Ring Ring::integers_mod(const mpz_class& m) {
  if (m < 2) throw UsageError("ZZ/m requires m >= 2");
  return Ring(RingTag::IntegersMod, m, is_prime(m));
}

Ring Ring::parse(std::string_view spec) {
  if (spec == "ZZ") return integers();
  if (spec == "QQ") return rationals();
  if (spec.starts_with("ZZ/")) {
    std::string digits(spec.substr(3));
    mpz_class m;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || m.set_str(digits, 10) != 0) {
      throw UsageError("malformed ring modulus in '" + std::string(spec) + "'");
    }
    return integers_mod(m);
  }
  throw UsageError("unknown ring '" + std::string(spec) + "' (expected ZZ, QQ or ZZ/<m>)");
}

bool Ring::is_field() const noexcept {
  return tag_ == RingTag::Rationals || (tag_ == RingTag::IntegersMod && prime_modulus_);
}

bool Ring::is_factorial() const noexcept { return tag_ == RingTag::Integers || is_field(); }

std::string Ring::name() const {
  switch (tag_) {
    case RingTag::Integers: return "ZZ";
    case RingTag::Rationals: return "QQ";
    case RingTag::IntegersMod: return "ZZ/" + modulus_.get_str();
  }
  return "?";
}

bool Ring::contains(const Coeff& c) const {
  switch (tag_) {
    case RingTag::Rationals: return true;
    case RingTag::Integers: return c.get_den() == 1;
    case RingTag::IntegersMod: return c.get_den() == 1 && c.get_num() >= 0 && c.get_num() < modulus_;
  }
  return false;
}

Coeff Ring::canonical(const Coeff& raw) const {
  Coeff c = raw;
  c.canonicalize();
  switch (tag_) {
    case RingTag::Rationals: return c;
    case RingTag::Integers:
      if (c.get_den() != 1) throw UsageError("non-integral coefficient " + c.get_str() + " over ZZ");
      return c;
    case RingTag::IntegersMod: {
      if (c.get_den() == 1) return Coeff(mod_floor(c.get_num(), modulus_));
      // a/b with b invertible mod m
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), c.get_den().get_mpz_t(), modulus_.get_mpz_t()) == 0) {
        throw UsageError("denominator of " + c.get_str() + " is not invertible in " + name());
      }
      return Coeff(mod_floor(c.get_num() * inv, modulus_));
    }
  }
  return c;
}

void Ring::require_elements(std::span<const Coeff> values, const char* where) const {
  for (const auto& v : values) {
    if (!contains(v)) throw UsageError(std::string(where) + ": " + v.get_str() + " is not an element of " + name());
  }
}

Coeff Ring::add(const Coeff& a, const Coeff& b) const {
  if (tag_ == RingTag::IntegersMod) return Coeff(mod_floor(integral(a) + integral(b), modulus_));
  return a + b;
}

Coeff Ring::sub(const Coeff& a, const Coeff& b) const {
  if (tag_ == RingTag::IntegersMod) return Coeff(mod_floor(integral(a) - integral(b), modulus_));
  return a - b;
}

Coeff Ring::mul(const Coeff& a, const Coeff& b) const {
  if (tag_ == RingTag::IntegersMod) return Coeff(mod_floor(integral(a) * integral(b), modulus_));
  return a * b;
}

Coeff Ring::neg(const Coeff& a) const {
  if (tag_ == RingTag::IntegersMod) return Coeff(mod_floor(-integral(a), modulus_));
  return -a;
}

bool Ring::is_unit(const Coeff& a) const {
  switch (tag_) {
    case RingTag::Rationals: return sgn(a) != 0;
    case RingTag::Integers: return a == 1 || a == -1;
    case RingTag::IntegersMod: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), integral(a).get_mpz_t(), modulus_.get_mpz_t());
      return g == 1;
    }
  }
  return false;
}

Coeff Ring::inverse(const Coeff& a) const {
  if (!is_unit(a)) throw UsageError(a.get_str() + " is not a unit in " + name());
  switch (tag_) {
    case RingTag::Rationals: return 1 / a;
    case RingTag::Integers: return a;
    case RingTag::IntegersMod: {
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), integral(a).get_mpz_t(), modulus_.get_mpz_t());
      return Coeff(inv);
    }
  }
  return a;
}

bool Ring::divides(const Coeff& a, const Coeff& b) const {
  switch (tag_) {
    case RingTag::Rationals: return sgn(a) != 0 || sgn(b) == 0;
    case RingTag::Integers:
      if (sgn(a) == 0) return sgn(b) == 0;
      return mpz_divisible_p(integral(b).get_mpz_t(), integral(a).get_mpz_t()) != 0;
    case RingTag::IntegersMod: {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), integral(a).get_mpz_t(), modulus_.get_mpz_t());
      return mpz_divisible_p(integral(b).get_mpz_t(), g.get_mpz_t()) != 0;
    }
  }
  return false;
}

Coeff Ring::exact_quotient(const Coeff& b, const Coeff& a) const {
  if (!divides(a, b)) throw MembershipError(a.get_str() + " does not divide " + b.get_str() + " in " + name());
  if (sgn(b) == 0) return Coeff(0);
  switch (tag_) {
    case RingTag::Rationals: return b / a;
    case RingTag::Integers: return Coeff(mpz_class(integral(b) / integral(a)));
    case RingTag::IntegersMod: {
      const Coeff one[] = {a};
      return (*lift_membership(b, one))[0];
    }
  }
  return b;
}

Coeff Ring::lcm(const Coeff& a, const Coeff& b) const {
  if (!is_factorial()) throw UsageError("lcm requires a factorial ring, got " + name());
  if (sgn(a) == 0 || sgn(b) == 0) return Coeff(0);
  if (is_field()) return Coeff(1);
  return Coeff(integer_lcm(integral(a), integral(b)));
}

std::optional<std::vector<Coeff>> Ring::lift_membership(const Coeff& b, std::span<const Coeff> C) const {
  require_elements(std::span<const Coeff>(&b, 1), "lift_membership");
  require_elements(C, "lift_membership");
  std::vector<Coeff> out(C.size(), Coeff(0));
  switch (tag_) {
    case RingTag::Rationals: {
      if (sgn(b) == 0) return out;
      for (std::size_t i = 0; i < C.size(); ++i) {
        if (sgn(C[i]) != 0) {
          out[i] = b / C[i];
          return out;
        }
      }
      return std::nullopt;
    }
    case RingTag::Integers: {
      std::vector<mpz_class> cs;
      cs.reserve(C.size());
      for (const auto& c : C) cs.push_back(integral(c));
      auto w = integer_witness(integral(b), cs);
      if (!w) return std::nullopt;
      for (std::size_t i = 0; i < C.size(); ++i) out[i] = Coeff((*w)[i]);
      return out;
    }
    case RingTag::IntegersMod: {
      std::vector<mpz_class> cs;
      cs.reserve(C.size() + 1);
      for (const auto& c : C) cs.push_back(integral(c));
      cs.push_back(modulus_);
      auto w = integer_witness(integral(b), cs);
      if (!w) return std::nullopt;
      for (std::size_t i = 0; i < C.size(); ++i) out[i] = Coeff(mod_floor((*w)[i], modulus_));
      return out;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<Coeff>> Ring::syzygy_generators(std::span<const Coeff> C) const {
  if (C.empty()) throw UsageError("syzygy_generators: empty coefficient list");
  require_elements(C, "syzygy_generators");
  const std::size_t k = C.size();
  std::vector<std::vector<Coeff>> gens;
  auto unit_vector = [k](std::size_t i, const Coeff& value) {
    std::vector<Coeff> v(k, Coeff(0));
    v[i] = value;
    return v;
  };

  for (std::size_t i = 0; i < k; ++i) {
    if (sgn(C[i]) == 0) gens.push_back(unit_vector(i, Coeff(1)));
  }

  if (tag_ == RingTag::Rationals) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (sgn(C[i]) == 0 || sgn(C[j]) == 0) continue;
        std::vector<Coeff> v(k, Coeff(0));
        v[i] = 1 / C[i];
        v[j] = -1 / C[j];
        gens.push_back(std::move(v));
      }
    }
    return gens;
  }

  // ZZ and ZZ/m: pairwise lcm syzygies computed over the integers. For ZZ/m
  // the modulus acts as an extra generator, which contributes the
  // annihilator syzygies (m / gcd(c_i, m)) e_i.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (sgn(C[i]) == 0 || sgn(C[j]) == 0) continue;
      const mpz_class l = integer_lcm(integral(C[i]), integral(C[j]));
      std::vector<Coeff> v(k, Coeff(0));
      v[i] = canonical(Coeff(mpz_class(l / integral(C[i]))));
      v[j] = canonical(Coeff(mpz_class(-l / integral(C[j]))));
      gens.push_back(std::move(v));
    }
  }
  if (tag_ == RingTag::IntegersMod) {
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(C[i]) == 0) continue;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), integral(C[i]).get_mpz_t(), modulus_.get_mpz_t());
      if (g == 1) continue;
      gens.push_back(unit_vector(i, Coeff(mpz_class(modulus_ / g))));
    }
  }
  return gens;
}

std::vector<Coeff> Ring::div_r(const Coeff& b, std::span<const Coeff> C) const {
  auto witness = lift_membership(b, C);
  if (!witness) throw MembershipError("div_r: " + b.get_str() + " is not in the ideal of the given coefficients");
  std::vector<Coeff> a = std::move(*witness);
  for (std::size_t i = C.size(); i-- > 0;) {
    const Coeff product = mul(a[i], C[i]);
    if (sgn(product) == 0) continue;
    auto h = lift_membership(product, C.subspan(0, i));
    if (!h) continue;
    for (std::size_t j = 0; j < i; ++j) a[j] = add(a[j], (*h)[j]);
    a[i] = 0;
  }
  return a;
}

}  // namespace ringstd
