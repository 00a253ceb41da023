#include "ringstd/parse.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdint>
#include <unordered_map>

#include "ringstd/errors.hpp"

namespace ringstd {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Position in the original text for error messages.
struct Source {
  std::string_view full;

  [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < full.size(); ++i) {
      if (full[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }
};

struct Cursor {
  const Source& src;
  std::size_t pos;
  std::size_t end;

  void skip_ws() {
    while (pos < end && std::isspace(static_cast<unsigned char>(src.full[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= end;
  }
  char peek() {
    skip_ws();
    return pos < end ? src.full[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) src.fail(std::string("expected '") + c + "'", pos);
  }
  std::string ident() {
    skip_ws();
    if (pos >= end || !ident_start(src.full[pos])) src.fail("expected a name", pos);
    const std::size_t b = pos;
    while (pos < end && ident_char(src.full[pos])) ++pos;
    return std::string(src.full.substr(b, pos - b));
  }
  bool peek_ident() {
    skip_ws();
    return pos < end && ident_start(src.full[pos]);
  }
  mpz_class integer() {
    skip_ws();
    const std::size_t b = pos;
    while (pos < end && std::isdigit(static_cast<unsigned char>(src.full[pos]))) ++pos;
    if (b == pos) src.fail("expected a number", pos);
    return mpz_class(std::string(src.full.substr(b, pos - b)));
  }
  Coeff rational() {
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    Coeff c(integer());
    if (accept('/')) {
      const std::size_t at = pos;
      mpz_class d = integer();
      if (d == 0) src.fail("zero denominator", at);
      c /= Coeff(d);
    }
    c.canonicalize();
    return neg ? Coeff(-c) : c;
  }
  void expect_end(const char* what) {
    if (!at_end()) src.fail(std::string("unexpected text after ") + what, pos);
  }
};

std::vector<Coeff> rationals_until(Cursor& cur, char close) {
  std::vector<Coeff> out;
  if (cur.peek() == close) return out;
  do {
    out.push_back(cur.rational());
  } while (cur.accept(','));
  return out;
}

struct OrderingParser {
  Cursor& cur;
  const std::vector<std::string>& names;
  std::size_t nt;
  std::uint32_t rank;
  Position pos;

  std::size_t x_index(std::size_t at) {
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      const mpz_class v = cur.integer();
      if (v < 1 || v > static_cast<long>(names.size() - nt)) cur.src.fail("lex index out of range", at);
      return v.get_ui() - 1;
    }
    const std::string n = cur.ident();
    auto it = std::find(names.begin() + static_cast<std::ptrdiff_t>(nt), names.end(), n);
    if (it == names.end()) cur.src.fail("'" + n + "' is not an x-variable", at);
    return static_cast<std::size_t>(it - names.begin()) - nt;
  }

  OrderingPtr parse() {
    const std::size_t at = (cur.skip_ws(), cur.pos);
    const std::string kind = cur.ident();
    const std::size_t n = names.size();
    try {
      if (kind == "w") {
        cur.expect('(');
        std::vector<Coeff> w = rationals_until(cur, ')');
        cur.expect(')');
        if (w.size() != n && w.size() != n + rank) {
          cur.src.fail("weight vector has " + std::to_string(w.size()) + " entries for " + std::to_string(n) +
                           " variables",
                       at);
        }
        cur.expect(':');
        OrderingPtr tie = parse();
        return make_weighted(w, tie);
      }
      if (kind == "m") {
        cur.expect('(');
        std::vector<std::vector<Coeff>> rows;
        do {
          cur.expect('(');
          rows.push_back(rationals_until(cur, ')'));
          cur.expect(')');
          if (rows.back().size() != n && rows.back().size() != n + rank) {
            cur.src.fail("matrix row arity does not match " + std::to_string(n) + " variables", at);
          }
        } while (cur.accept(','));
        cur.expect(')');
        return make_matrix(rows, n, nt, rank, pos);
      }
      if (kind == "lex") {
        std::optional<std::vector<std::size_t>> prio;
        if (cur.accept('(')) {
          prio.emplace();
          do {
            const std::size_t vat = (cur.skip_ws(), cur.pos);
            prio->push_back(x_index(vat));
          } while (cur.accept('>'));
          cur.expect(')');
        }
        return make_lex(n, nt, rank, pos, prio);
      }
      if (kind == "deglex") return make_deglex(n, nt, rank, pos);
      if (kind == "degrevlex") return make_degrevlex(n, nt, rank, pos);
    } catch (const UsageError& e) {
      cur.src.fail(e.what(), at);
    }
    cur.src.fail("unknown ordering '" + kind + "'", at);
  }
};

// Expressions are evaluated over QQ and mapped into the target ring last.
struct ExprParser {
  Cursor& cur;
  SpacePtr shadow;
  std::unordered_map<std::string, std::size_t> vars;

  Poly expr() {
    Poly v(shadow);
    bool first = true;
    for (;;) {
      int sign = 1;
      if (cur.accept('-')) {
        sign = -1;
      } else if (!cur.accept('+') && !first) {
        return v;
      }
      Poly t = term();
      v = sign > 0 ? v + t : v - t;
      first = false;
    }
  }

  Poly term() {
    Poly v = power();
    for (;;) {
      const std::size_t at = (cur.skip_ws(), cur.pos);
      if (cur.accept('*')) {
        Poly rhs = power();
        if (!v.is_scalar() && !rhs.is_scalar()) cur.src.fail("product of two vectors", at);
        v = v * rhs;
      } else if (cur.accept('/')) {
        Poly rhs = power();
        if (rhs.size() != 1 || !rhs.is_scalar() || !mono::is_one(rhs.lt().exp)) {
          cur.src.fail("division only by nonzero constants", at);
        }
        v = v.scale(1 / rhs.lc());
      } else {
        return v;
      }
    }
  }

  Poly power() {
    Poly base = atom();
    const std::size_t at = (cur.skip_ws(), cur.pos);
    if (!cur.accept('^')) return base;
    const mpz_class e = cur.integer();
    if (!e.fits_sint_p() || e > 100000) cur.src.fail("exponent too large", at);
    const long n = e.get_si();
    if (n == 1) return base;
    if (!base.is_scalar()) cur.src.fail("power of a vector", at);
    Poly out = Poly::constant(shadow, 1);
    if (base.size() == 1) {
      Exponents ex = base.lt().exp;
      for (auto& x : ex) {
        const long long y = static_cast<long long>(x) * n;
        if (y > INT32_MAX) cur.src.fail("exponent overflow", at);
        x = static_cast<std::int32_t>(y);
      }
      Coeff c;
      mpz_pow_ui(c.get_num_mpz_t(), base.lc().get_num_mpz_t(), static_cast<unsigned long>(n));
      mpz_pow_ui(c.get_den_mpz_t(), base.lc().get_den_mpz_t(), static_cast<unsigned long>(n));
      return Poly::monomial(shadow, c, std::move(ex));
    }
    for (long i = 0; i < n; ++i) out = out * base;
    return out;
  }

  Poly atom() {
    const std::size_t at = (cur.skip_ws(), cur.pos);
    const char c = cur.peek();
    if (c == '(') {
      cur.expect('(');
      Poly v = expr();
      cur.expect(')');
      return v;
    }
    if (c == '[') {
      cur.expect('[');
      std::vector<Term> terms;
      std::uint32_t comp = 0;
      do {
        const std::size_t eat = (cur.skip_ws(), cur.pos);
        Poly v = expr();
        if (!v.is_scalar()) cur.src.fail("nested vector", eat);
        if (comp >= shadow->rank()) cur.src.fail("vector longer than the rank", eat);
        for (const auto& t : v.terms()) terms.push_back(Term{t.c, t.exp, comp});
        ++comp;
      } while (cur.accept(','));
      cur.expect(']');
      if (comp != shadow->rank()) cur.src.fail("vector has " + std::to_string(comp) + " entries, rank is " +
                                                   std::to_string(shadow->rank()),
                                               at);
      return Poly::from_terms(shadow, std::move(terms));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(shadow, Coeff(cur.integer()));
    if (ident_start(c)) {
      const std::string name = cur.ident();
      if (name == "gen" && cur.peek() == '(') {
        cur.expect('(');
        const std::size_t iat = (cur.skip_ws(), cur.pos);
        const mpz_class i = cur.integer();
        cur.expect(')');
        if (i < 1 || i > shadow->rank()) cur.src.fail("gen index out of range", iat);
        return Poly::constant(shadow, 1, static_cast<std::uint32_t>(i.get_ui() - 1));
      }
      auto it = vars.find(name);
      if (it == vars.end()) cur.src.fail("unknown variable '" + name + "'", at);
      Exponents e = mono::one(shadow->nvars());
      e[it->second] = 1;
      return Poly::monomial(shadow, 1, std::move(e));
    }
    if (c == '\0') cur.src.fail("unexpected end of expression", at);
    cur.src.fail(std::string("unexpected '") + c + "'", at);
  }
};

Poly to_target(const Poly& v, const SpacePtr& space, const Source& src, std::size_t at) {
  std::vector<Term> terms(v.terms().begin(), v.terms().end());
  try {
    return Poly::from_terms(space, std::move(terms));
  } catch (const UsageError& e) {
    src.fail(e.what(), at);
  }
}

Poly parse_expression(const Source& src, std::size_t b, std::size_t e, const SpacePtr& space) {
  Cursor cur{src, b, e};
  ExprParser p{cur, Space::make(Ring::rationals(), space->ordering_ptr(), space->names()), {}};
  for (std::size_t i = 0; i < space->names().size(); ++i) p.vars.emplace(space->names()[i], i);
  const std::size_t at = (cur.skip_ws(), cur.pos);
  if (cur.at_end()) src.fail("empty expression", at);
  Poly v = p.expr();
  cur.expect_end("expression");
  return to_target(v, space, src, at);
}

// Splits [b, e) at top-level commas.
std::vector<std::pair<std::size_t, std::size_t>> split_commas(std::string_view s, std::size_t b, std::size_t e) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  int depth = 0;
  std::size_t start = b;
  for (std::size_t i = b; i < e; ++i) {
    const char c = s[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.emplace_back(start, i);
      start = i + 1;
    }
  }
  out.emplace_back(start, e);
  return out;
}

struct Statement {
  std::string keyword;
  std::size_t at;
  std::size_t body;  // offset after the keyword (and ':')
  std::size_t end;
};

}  // namespace

std::vector<Coeff> parse_rationals(std::string_view text) {
  Source src{text};
  Cursor cur{src, 0, text.size()};
  std::vector<Coeff> out = rationals_until(cur, '\0');
  cur.expect_end("number list");
  return out;
}

OrderingPtr parse_ordering(std::string_view spec, const std::vector<std::string>& names, std::size_t nt,
                           std::uint32_t rank, Position pos) {
  Source src{spec};
  Cursor cur{src, 0, spec.size()};
  // a trailing "pot" / "top" overrides pos
  std::string_view body = spec;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  if (body.size() > 4 && (body.ends_with(" pot") || body.ends_with(" top"))) {
    pos = body.ends_with(" pot") ? Position::Pot : Position::Top;
    cur.end = body.size() - 4;
  }
  OrderingParser p{cur, names, nt, rank, pos};
  OrderingPtr o = p.parse();
  cur.expect_end("ordering");
  return o;
}

Poly parse_poly(std::string_view text, const SpacePtr& space) {
  Source src{text};
  return parse_expression(src, 0, text.size(), space);
}

Problem parse_problem(std::string_view text) {
  Source src{text};
  // strip comments by blanking them, keeping offsets
  std::string clean(text);
  for (std::size_t i = 0; i < clean.size(); ++i) {
    if (clean[i] != '#') continue;
    while (i < clean.size() && clean[i] != '\n') clean[i++] = ' ';
  }
  Source csrc{clean};
  auto fail = [&](const std::string& msg, std::size_t at) { src.fail(msg, at); };

  std::vector<Statement> stmts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= clean.size(); ++i) {
    if (i < clean.size() && clean[i] != ';') continue;
    Cursor cur{csrc, start, i};
    if (!cur.at_end()) {
      if (i == clean.size()) fail("missing ';'", clean.size());
      const std::size_t at = cur.pos;
      Statement s{cur.ident(), at, 0, i};
      cur.accept(':');
      s.body = cur.pos;
      stmts.push_back(s);
    }
    start = i + 1;
  }

  Problem pr;
  std::optional<std::pair<std::size_t, std::size_t>> order_span;
  std::size_t order_at = 0;
  bool have_vars = false;
  const Statement* gens = nullptr;
  const Statement* query = nullptr;
  for (const auto& s : stmts) {
    Cursor cur{csrc, s.body, s.end};
    if (s.keyword == "ring") {
      cur.skip_ws();
      std::string spec(clean.substr(cur.pos, s.end - cur.pos));
      spec.erase(std::remove_if(spec.begin(), spec.end(), [](unsigned char c) { return std::isspace(c); }),
                 spec.end());
      try {
        pr.ring = Ring::parse(spec);
      } catch (const UsageError& e) {
        fail(e.what(), cur.pos);
      }
    } else if (s.keyword == "vars") {
      if (have_vars) fail("vars declared twice", s.at);
      have_vars = true;
      std::vector<std::string>* block = &pr.x_vars;
      std::vector<std::pair<std::string, std::size_t>> all;
      bool bar = false;
      for (;;) {
        if (cur.at_end()) break;
        if (cur.accept('|')) {
          if (bar) fail("second '|' in vars", cur.pos - 1);
          bar = true;
          pr.t_vars = std::move(pr.x_vars);
          pr.x_vars.clear();
          continue;
        }
        const std::size_t at = (cur.skip_ws(), cur.pos);
        std::string n = cur.ident();
        for (const auto& [prev, _] : all) {
          if (prev == n) fail("duplicate variable name '" + n + "'", at);
        }
        if (n == "gen") fail("'gen' is reserved", at);
        all.emplace_back(n, at);
        block->push_back(std::move(n));
        if (cur.at_end()) break;
        if (cur.peek() != '|') cur.expect(',');
      }
      if (all.empty()) fail("no variables declared", s.at);
    } else if (s.keyword == "rank") {
      const std::size_t at = (cur.skip_ws(), cur.pos);
      const mpz_class r = cur.integer();
      cur.expect_end("rank");
      if (r < 1 || r > 1000) fail("rank must be between 1 and 1000", at);
      pr.rank = static_cast<std::uint32_t>(r.get_ui());
    } else if (s.keyword == "order") {
      cur.skip_ws();
      order_at = cur.pos;
      order_span = std::make_pair(cur.pos, s.end);
    } else if (s.keyword == "position") {
      const std::size_t at = (cur.skip_ws(), cur.pos);
      const std::string p = cur.ident();
      cur.expect_end("position");
      if (p == "top") {
        pr.position = Position::Top;
      } else if (p == "pot") {
        pr.position = Position::Pot;
      } else {
        fail("position must be top or pot", at);
      }
    } else if (s.keyword == "prime") {
      const std::size_t at = (cur.skip_ws(), cur.pos);
      pr.prime = cur.integer();
      cur.expect_end("prime");
      if (!is_prime(*pr.prime)) fail(pr.prime->get_str() + " is not prime", at);
    } else if (s.keyword == "weights") {
      pr.weights = rationals_until(cur, '\0');
      cur.expect_end("weights");
    } else if (s.keyword == "gens") {
      gens = &s;
    } else if (s.keyword == "query") {
      query = &s;
    } else {
      fail("unknown statement '" + s.keyword + "'", s.at);
    }
  }
  if (!have_vars) fail("missing 'vars' statement", text.size());

  std::vector<std::string> names = pr.t_vars;
  names.insert(names.end(), pr.x_vars.begin(), pr.x_vars.end());
  const std::size_t nt = pr.t_vars.size();
  OrderingPtr ord;
  if (order_span) {
    const std::string spec = clean.substr(order_span->first, order_span->second - order_span->first);
    try {
      ord = parse_ordering(spec, names, nt, pr.rank, pr.position);
    } catch (const ParseError& e) {
      // re-anchor to the file position
      const std::string msg = e.what();
      fail(msg.substr(msg.find(": ") + 2), order_at + e.column() - 1);
    }
  } else {
    ord = make_deglex(names.size(), nt, pr.rank, pr.position);
  }
  if (pr.weights && pr.weights->size() != pr.x_vars.size()) {
    fail("weights need one entry per x-variable", text.size());
  }
  try {
    pr.space = Space::make(pr.ring, ord, names);
  } catch (const UsageError& e) {
    fail(e.what(), order_at);
  }
  if (gens) {
    Cursor cur{csrc, gens->body, gens->end};
    if (!cur.at_end()) {
      for (auto [b, e] : split_commas(clean, gens->body, gens->end)) {
        pr.gens.push_back(parse_expression(src, b, e, pr.space));
      }
    }
  }
  if (query) pr.query = parse_expression(src, query->body, query->end, pr.space);
  return pr;
}

std::string format_coeff(const Coeff& c) { return c.get_str(); }

namespace {

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[i];
    if (e[i] != 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

std::string term_string(const Term& t, const std::vector<std::string>& names) {
  const std::string m = monomial_string(t.exp, names);
  if (m.empty()) return format_coeff(t.c);
  if (t.c == 1) return m;
  if (t.c == -1) return "-" + m;
  return format_coeff(t.c) + "*" + m;
}

std::string scalar_string(const std::vector<Term>& terms, const std::vector<std::string>& names) {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& t : terms) {
    std::string ts = term_string(t, names);
    if (s.empty()) {
      s = std::move(ts);
    } else if (ts[0] == '-') {
      s += " - " + ts.substr(1);
    } else {
      s += " + " + ts;
    }
  }
  return s;
}

}  // namespace

std::string format_poly(const Poly& f) {
  const auto& names = f.space()->names();
  if (f.space()->rank() == 1) return scalar_string(f.terms(), names);
  std::vector<std::vector<Term>> comps(f.space()->rank());
  for (const auto& t : f.terms()) comps[t.comp].push_back(t);
  std::string s = "[";
  for (std::size_t j = 0; j < comps.size(); ++j) {
    if (j) s += ", ";
    s += scalar_string(comps[j], names);
  }
  return s + "]";
}

std::string format_scalar(const Poly& f) {
  if (!f.is_scalar()) throw UsageError("format_scalar: not a ring polynomial");
  return scalar_string(f.terms(), f.space()->names());
}

std::string format_lead(const Poly& f) {
  if (f.is_zero()) return "0";
  const std::string s = term_string(f.lt(), f.space()->names());
  if (f.space()->rank() == 1) return s;
  return s + "*gen(" + std::to_string(f.lt().comp + 1) + ")";
}

}  // namespace ringstd
