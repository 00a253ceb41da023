#include "ringstd/poly.hpp"

#include <algorithm>
#include <unordered_set>

#include "ringstd/errors.hpp"

namespace ringstd {

namespace {

std::vector<std::string> default_names(std::size_t nvars, std::size_t nt) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) {
    if (i < nt) {
      names.push_back(nt == 1 ? "t" : "t" + std::to_string(i + 1));
    } else {
      names.push_back("x" + std::to_string(i - nt + 1));
    }
  }
  return names;
}

struct Descending {
  const Ordering* ord;
  bool operator()(const Term& a, const Term& b) const { return ord->compare(a.exp, a.comp, b.exp, b.comp) > 0; }
};

}  // namespace

Space::Space(Ring ring, OrderingPtr ordering, std::vector<std::string> names)
    : ring_(std::move(ring)), ordering_(std::move(ordering)), names_(std::move(names)) {}

SpacePtr Space::make(Ring ring, OrderingPtr ordering, std::vector<std::string> names) {
  if (!ordering) throw UsageError("space needs an ordering");
  if (names.empty()) names = default_names(ordering->nvars(), ordering->nt());
  if (names.size() != ordering->nvars()) throw UsageError("variable names do not match the ordering signature");
  std::unordered_set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw UsageError("duplicate variable name '" + n + "'");
  }
  return SpacePtr(new Space(std::move(ring), std::move(ordering), std::move(names)));
}

SpacePtr Space::homogenized(std::size_t deg_begin) const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto it = homogenized_.find(deg_begin);
  if (it != homogenized_.end()) return it->second;
  std::vector<std::string> names = names_;
  std::string h = "x0";
  while (std::find(names.begin(), names.end(), h) != names.end()) h += "_";
  names.push_back(h);
  auto space = make(ring_, make_homogenized(ordering_, deg_begin), std::move(names));
  homogenized_.emplace(deg_begin, space);
  return space;
}

SpacePtr Space::with_ordering(OrderingPtr ordering) const {
  if (ordering->nvars() != nvars() || ordering->nt() != nt() || ordering->rank() != rank()) {
    throw UsageError("replacement ordering has a different signature");
  }
  return make(ring_, std::move(ordering), names_);
}

Poly Poly::from_terms(SpacePtr space, std::vector<Term> terms) {
  const Ring& R = space->ring();
  const std::size_t n = space->nvars();
  for (auto& t : terms) {
    if (t.exp.size() != n) throw UsageError("term has the wrong number of exponents");
    if (t.comp >= space->rank()) throw UsageError("term component out of range");
    for (auto e : t.exp) {
      if (e < 0) throw UsageError("negative exponent");
    }
    t.c = R.canonical(t.c);
  }
  std::sort(terms.begin(), terms.end(), Descending{&space->ordering()});
  Poly out(space);
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().comp == t.comp && out.terms_.back().exp == t.exp) {
      out.terms_.back().c = R.add(out.terms_.back().c, t.c);
      if (sgn(out.terms_.back().c) == 0) out.terms_.pop_back();
    } else if (sgn(t.c) != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

Poly Poly::from_sorted_terms(SpacePtr space, std::vector<Term> terms) {
  Poly out(std::move(space));
  out.terms_ = std::move(terms);
  return out;
}

Poly Poly::constant(SpacePtr space, const Coeff& c, std::uint32_t comp) {
  return monomial(space, c, mono::one(space->nvars()), comp);
}

Poly Poly::monomial(SpacePtr space, const Coeff& c, Exponents exp, std::uint32_t comp) {
  std::vector<Term> t;
  t.push_back(Term{c, std::move(exp), comp});
  return from_terms(std::move(space), std::move(t));
}

bool Poly::is_scalar() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.comp == 0; });
}

const Term& Poly::lt() const {
  if (terms_.empty()) throw EmptyInputError("leading term of the zero polynomial");
  return terms_.front();
}

ModuleMonomial Poly::lm() const { return lt().mm(); }

const Coeff& Poly::lc() const { return lt().c; }

Poly Poly::lt_poly() const {
  Poly out(space_);
  out.terms_.push_back(lt());
  return out;
}

Poly Poly::tail() const {
  Poly out(space_);
  if (!terms_.empty()) out.terms_.assign(terms_.begin() + 1, terms_.end());
  return out;
}

void Poly::require_same_space(const Poly& o) const {
  if (space_ != o.space_) throw UsageError("polynomials from different spaces");
}

Poly Poly::operator-() const {
  Poly out(space_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(Term{ring().neg(t.c), t.exp, t.comp});
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  return a.add_scaled(Coeff(1), mono::one(a.space_->nvars()), b);
}

Poly operator-(const Poly& a, const Poly& b) {
  return a.add_scaled(Coeff(-1), mono::one(a.space_->nvars()), b);
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_space(b);
  const bool a_scalar = a.is_scalar();
  if (!a_scalar && !b.is_scalar()) throw UsageError("product of two vectors");
  const Poly& s = a_scalar ? a : b;
  const Poly& v = a_scalar ? b : a;
  if (s.is_zero() || v.is_zero()) return Poly(a.space_);
  if (s.size() == 1) return v.times_term(s.terms_[0].c, s.terms_[0].exp);
  const Ring& R = a.ring();
  std::vector<Term> prods;
  prods.reserve(s.size() * v.size());
  for (const auto& x : s.terms_) {
    for (const auto& y : v.terms_) {
      Coeff c = R.mul(x.c, y.c);
      if (sgn(c) == 0) continue;
      prods.push_back(Term{std::move(c), mono::mul(x.exp, y.exp), y.comp});
    }
  }
  return Poly::from_terms(a.space_, std::move(prods));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.space_ != b.space_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.comp != y.comp || x.exp != y.exp || x.c != y.c) return false;
  }
  return true;
}

Poly Poly::scale(const Coeff& c) const { return times_term(c, mono::one(space_->nvars())); }

Poly Poly::times_term(const Coeff& c, std::span<const std::int32_t> exp) const {
  const Ring& R = ring();
  Coeff cc = R.canonical(c);
  Poly out(space_);
  if (sgn(cc) == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Coeff p = R.mul(cc, t.c);
    if (sgn(p) == 0) continue;
    out.terms_.push_back(Term{std::move(p), mono::mul(t.exp, exp), t.comp});
  }
  return out;
}

Poly Poly::add_scaled(const Coeff& c, std::span<const std::int32_t> exp, const Poly& g) const {
  require_same_space(g);
  const Ring& R = ring();
  const Ordering& ord = space_->ordering();
  Coeff cc = R.canonical(c);
  if (sgn(cc) == 0 || g.is_zero()) return *this;
  const bool unit_shift = mono::is_one(exp);
  Poly out(space_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  Term next;
  bool have_next = false;
  auto load = [&]() {
    have_next = false;
    while (j < g.terms_.size()) {
      const Term& t = g.terms_[j++];
      Coeff p = R.mul(cc, t.c);
      if (sgn(p) == 0) continue;
      next.c = std::move(p);
      next.exp = unit_shift ? t.exp : mono::mul(t.exp, exp);
      next.comp = t.comp;
      have_next = true;
      return;
    }
  };
  load();
  while (i < terms_.size() || have_next) {
    if (!have_next) {
      out.terms_.push_back(terms_[i++]);
      continue;
    }
    if (i == terms_.size()) {
      out.terms_.push_back(std::move(next));
      load();
      continue;
    }
    const int cmp = ord.compare(terms_[i].exp, terms_[i].comp, next.exp, next.comp);
    if (cmp > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.terms_.push_back(std::move(next));
      load();
    } else {
      Coeff s = R.add(terms_[i].c, next.c);
      if (sgn(s) != 0) out.terms_.push_back(Term{std::move(s), terms_[i].exp, terms_[i].comp});
      ++i;
      load();
    }
  }
  return out;
}

Poly Poly::component(std::uint32_t j) const {
  Poly out(space_);
  for (const auto& t : terms_) {
    if (t.comp == j) out.terms_.push_back(Term{t.c, t.exp, 0});
  }
  return out;
}

Poly Poly::without_component(std::uint32_t j) const {
  Poly out(space_);
  for (const auto& t : terms_) {
    if (t.comp != j) out.terms_.push_back(t);
  }
  return out;
}

Poly Poly::in_component(std::uint32_t j) const {
  if (!is_scalar()) throw UsageError("in_component expects a ring polynomial");
  std::vector<Term> terms = terms_;
  for (auto& t : terms) t.comp = j;
  return from_terms(space_, std::move(terms));
}

std::int64_t Poly::x_degree(std::size_t deg_begin) const {
  if (terms_.empty()) throw EmptyInputError("degree of the zero polynomial");
  std::int64_t d = mono::degree(terms_[0].exp, deg_begin);
  for (const auto& t : terms_) d = std::max(d, mono::degree(t.exp, deg_begin));
  return d;
}

bool Poly::is_x_homogeneous(std::size_t deg_begin) const {
  if (terms_.empty()) return true;
  const std::int64_t d = mono::degree(terms_[0].exp, deg_begin);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return mono::degree(t.exp, deg_begin) == d; });
}

namespace {

Coeff weight_of(const Term& t, const std::vector<Coeff>& w, std::size_t n) {
  Coeff d = 0;
  for (std::size_t i = 0; i < n; ++i) d += w[i] * t.exp[i];
  if (w.size() > n) d += w[n + t.comp];
  return d;
}

void check_weight(const std::vector<Coeff>& w, const Space& s) {
  if (w.size() != s.nvars() && w.size() != s.nvars() + s.rank()) {
    throw UsageError("weight vector does not match the space signature");
  }
}

}  // namespace

Coeff Poly::weighted_degree(const std::vector<Coeff>& w) const {
  if (terms_.empty()) throw EmptyInputError("weighted degree of the zero polynomial");
  check_weight(w, *space_);
  Coeff best = weight_of(terms_[0], w, space_->nvars());
  for (const auto& t : terms_) best = std::max(best, weight_of(t, w, space_->nvars()));
  return best;
}

bool Poly::is_weighted_homogeneous(const std::vector<Coeff>& w) const {
  if (terms_.empty()) return true;
  check_weight(w, *space_);
  const Coeff d = weight_of(terms_[0], w, space_->nvars());
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return weight_of(t, w, space_->nvars()) == d; });
}

std::int64_t Poly::ecart(std::size_t deg_begin) const {
  return x_degree(deg_begin) - mono::degree(lt().exp, deg_begin);
}

Poly homogenize(const Poly& f, std::size_t deg_begin) {
  SpacePtr h = f.space()->homogenized(deg_begin);
  if (f.is_zero()) return Poly(h);
  const std::int64_t d = f.x_degree(deg_begin);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Exponents e = t.exp;
    e.push_back(static_cast<std::int32_t>(d - mono::degree(t.exp, deg_begin)));
    terms.push_back(Term{t.c, std::move(e), t.comp});
  }
  return Poly::from_terms(h, std::move(terms));
}

Poly dehomogenize(const Poly& F, const SpacePtr& base) {
  if (F.space()->nvars() != base->nvars() + 1) throw UsageError("dehomogenize: space mismatch");
  std::vector<Term> terms;
  terms.reserve(F.size());
  for (const auto& t : F.terms()) {
    Exponents e(t.exp.begin(), t.exp.end() - 1);
    terms.push_back(Term{t.c, std::move(e), t.comp});
  }
  return Poly::from_terms(base, std::move(terms));
}

Poly rebase(const Poly& f, const SpacePtr& target) {
  if (f.space()->nvars() != target->nvars() || !(f.ring() == target->ring())) {
    throw UsageError("rebase: incompatible spaces");
  }
  return Poly::from_terms(target, f.terms());
}

}  // namespace ringstd
