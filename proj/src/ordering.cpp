#include "ringstd/ordering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "ringstd/errors.hpp"

namespace ringstd {

namespace {

using Row = std::vector<std::int64_t>;

int sign128(__int128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Scales a rational row to coprime integers of the same direction.
Row integral_row(const std::vector<Coeff>& row) {
  mpz_class den = 1;
  for (const auto& c : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<mpz_class> scaled;
  mpz_class g = 0;
  for (const auto& c : row) {
    mpz_class v = c.get_num() * (den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(v);
  }
  Row out;
  for (auto& v : scaled) {
    if (g > 1) v /= g;
    if (!v.fits_slong_p()) throw UsageError("ordering weight too large after scaling to integers");
    out.push_back(v.get_si());
  }
  return out;
}

std::string join_coeffs(const std::vector<Coeff>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s;
}

std::size_t matrix_rank(std::vector<std::vector<Coeff>> m, std::size_t ncols) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Coeff f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < ncols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

class MatrixOrdering final : public Ordering {
 public:
  MatrixOrdering(std::vector<std::vector<Coeff>> rows, std::size_t nvars, std::size_t nt, std::uint32_t rank,
                 Position pos, std::string label)
      : Ordering(nvars, nt, rank), source_(std::move(rows)), pos_(pos), label_(std::move(label)) {
    if (source_.empty() && nvars > 0) throw UsageError("matrix ordering needs at least one row");
    for (const auto& r : source_) {
      if (r.size() != nvars && r.size() != nvars + rank) {
        throw UsageError("matrix ordering row has " + std::to_string(r.size()) + " entries, expected " +
                         std::to_string(nvars));
      }
      rows_.push_back(integral_row(r));
    }
    std::vector<std::vector<Coeff>> square;
    for (const auto& r : source_) square.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(nvars));
    if (matrix_rank(square, nvars) != nvars) throw UsageError("matrix ordering is not of full rank");
    for (std::size_t col = 0; col < nt; ++col) {
      for (const auto& r : rows_) {
        if (r[col] == 0) continue;
        if (r[col] > 0) throw UsageError("ordering is not t-local in variable " + std::to_string(col + 1));
        break;
      }
    }
  }

  int compare(std::span<const std::int32_t> a, std::uint32_t ca, std::span<const std::int32_t> b,
              std::uint32_t cb) const override {
    if (pos_ == Position::Pot && ca != cb) return ca < cb ? 1 : -1;
    const std::size_t n = nvars();
    for (const auto& row : rows_) {
      __int128 d = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (row[i] != 0) d += static_cast<__int128>(row[i]) * (a[i] - b[i]);
      }
      if (row.size() > n && ca != cb) d += static_cast<__int128>(row[n + ca]) - row[n + cb];
      if (d != 0) return sign128(d);
    }
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

  std::string describe() const override {
    std::string s = label_;
    if (s.empty()) {
      s = "m(";
      for (std::size_t i = 0; i < source_.size(); ++i) {
        if (i) s += ",";
        s += "(" + join_coeffs(source_[i]) + ")";
      }
      s += ")";
    }
    if (pos_ == Position::Pot) s += " pot";
    return s;
  }

 private:
  std::vector<std::vector<Coeff>> source_;
  std::vector<Row> rows_;
  Position pos_;
  std::string label_;
};

class WeightedOrdering final : public Ordering {
 public:
  WeightedOrdering(const std::vector<Coeff>& w, OrderingPtr tie)
      : Ordering(tie->nvars(), tie->nt(), tie->rank()), source_(w), w_(integral_row(w)), tie_(std::move(tie)) {
    const std::size_t n = nvars();
    if (w.size() != n && w.size() != n + rank()) {
      throw UsageError("weight vector has " + std::to_string(w.size()) + " entries for " + std::to_string(n) +
                       " variables");
    }
    for (std::size_t i = 0; i < nt(); ++i) {
      if (sgn(w[i]) >= 0) throw UsageError("weight of t-variable " + std::to_string(i + 1) + " must be negative");
    }
  }

  int compare(std::span<const std::int32_t> a, std::uint32_t ca, std::span<const std::int32_t> b,
              std::uint32_t cb) const override {
    const std::size_t n = nvars();
    __int128 d = 0;
    for (std::size_t i = 0; i < n; ++i) d += static_cast<__int128>(w_[i]) * (a[i] - b[i]);
    if (w_.size() > n && ca != cb) d += static_cast<__int128>(w_[n + ca]) - w_[n + cb];
    if (d != 0) return sign128(d);
    return tie_->compare(a, ca, b, cb);
  }

  std::string describe() const override { return "w(" + join_coeffs(source_) + "):" + tie_->describe(); }

 private:
  std::vector<Coeff> source_;
  Row w_;
  OrderingPtr tie_;
};

class SchreyerOrdering final : public Ordering {
 public:
  SchreyerOrdering(OrderingPtr base, std::vector<ModuleMonomial> leads)
      : Ordering(base->nvars(), base->nt(), static_cast<std::uint32_t>(leads.size())),
        base_(std::move(base)),
        leads_(std::move(leads)) {
    if (leads_.empty()) throw UsageError("Schreyer ordering needs at least one leading monomial");
    for (const auto& l : leads_) {
      if (l.exp.size() != nvars() || l.comp >= base_->rank()) throw UsageError("Schreyer lead of wrong signature");
    }
  }

  int compare(std::span<const std::int32_t> a, std::uint32_t ca, std::span<const std::int32_t> b,
              std::uint32_t cb) const override {
    const auto& la = leads_[ca];
    const auto& lb = leads_[cb];
    Exponents pa = mono::mul(a, la.exp);
    Exponents pb = mono::mul(b, lb.exp);
    int c = base_->compare(pa, la.comp, pb, lb.comp);
    if (c != 0) return c;
    if (ca == cb) return 0;
    return ca > cb ? 1 : -1;
  }

  std::string describe() const override { return "schreyer(" + base_->describe() + ")"; }

 private:
  OrderingPtr base_;
  std::vector<ModuleMonomial> leads_;
};

class HomogenizedOrdering final : public Ordering {
 public:
  HomogenizedOrdering(OrderingPtr base, std::size_t deg_begin)
      : Ordering(base->nvars() + 1, base->nt(), base->rank()), base_(std::move(base)), deg_begin_(deg_begin) {
    if (deg_begin_ > base_->nvars()) throw UsageError("homogenization degree range out of bounds");
  }

  int compare(std::span<const std::int32_t> a, std::uint32_t ca, std::span<const std::int32_t> b,
              std::uint32_t cb) const override {
    const std::int64_t da = mono::degree(a, deg_begin_);
    const std::int64_t db = mono::degree(b, deg_begin_);
    if (da != db) return da > db ? 1 : -1;
    const std::size_t n = base_->nvars();
    return base_->compare(a.first(n), ca, b.first(n), cb);
  }

  std::string describe() const override { return "h(" + base_->describe() + ")"; }

 private:
  OrderingPtr base_;
  std::size_t deg_begin_;
};

std::vector<Coeff> unit_row(std::size_t n, std::size_t i, int value) {
  std::vector<Coeff> r(n, Coeff(0));
  r[i] = value;
  return r;
}

void append_local_t_rows(std::vector<std::vector<Coeff>>& rows, std::size_t nvars, std::size_t nt) {
  for (std::size_t i = 0; i < nt; ++i) rows.push_back(unit_row(nvars, i, -1));
}

std::vector<Coeff> x_degree_row(std::size_t nvars, std::size_t nt) {
  std::vector<Coeff> r(nvars, Coeff(0));
  for (std::size_t i = nt; i < nvars; ++i) r[i] = 1;
  return r;
}

}  // namespace

Ordering::Ordering(std::size_t nvars, std::size_t nt, std::uint32_t rank) : nvars_(nvars), nt_(nt), rank_(rank) {
  if (nt > nvars) throw UsageError("more t-variables than variables");
  if (rank == 0) throw UsageError("module rank must be positive");
}

int Ordering::compare(const ModuleMonomial& a, const ModuleMonomial& b) const {
  if (a.exp.size() != nvars_ || b.exp.size() != nvars_ || a.comp >= rank_ || b.comp >= rank_) {
    throw UsageError("module monomial does not match the ordering signature");
  }
  return compare(a.exp, a.comp, b.exp, b.comp);
}

OrderingPtr make_matrix(const std::vector<std::vector<Coeff>>& rows, std::size_t nvars, std::size_t nt,
                        std::uint32_t rank, Position pos) {
  return std::make_shared<MatrixOrdering>(rows, nvars, nt, rank, pos, "");
}

OrderingPtr make_lex(std::size_t nvars, std::size_t nt, std::uint32_t rank, Position pos,
                     std::optional<std::vector<std::size_t>> priority) {
  const std::size_t nx = nvars - nt;
  std::vector<std::size_t> order(nx);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::string label = "lex";
  if (priority) {
    std::vector<std::size_t> sorted = *priority;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != order) throw UsageError("lex priority must be a permutation of the x-variables");
    order = *priority;
    label += "(";
    for (std::size_t i = 0; i < order.size(); ++i) label += (i ? ">" : "") + std::to_string(order[i] + 1);
    label += ")";
  }
  std::vector<std::vector<Coeff>> rows;
  for (auto i : order) rows.push_back(unit_row(nvars, nt + i, 1));
  append_local_t_rows(rows, nvars, nt);
  return std::make_shared<MatrixOrdering>(rows, nvars, nt, rank, pos, label);
}

OrderingPtr make_deglex(std::size_t nvars, std::size_t nt, std::uint32_t rank, Position pos) {
  std::vector<std::vector<Coeff>> rows;
  if (nvars > nt) rows.push_back(x_degree_row(nvars, nt));
  for (std::size_t i = nt; i < nvars; ++i) rows.push_back(unit_row(nvars, i, 1));
  append_local_t_rows(rows, nvars, nt);
  return std::make_shared<MatrixOrdering>(rows, nvars, nt, rank, pos, "deglex");
}

OrderingPtr make_degrevlex(std::size_t nvars, std::size_t nt, std::uint32_t rank, Position pos) {
  std::vector<std::vector<Coeff>> rows;
  if (nvars > nt) rows.push_back(x_degree_row(nvars, nt));
  for (std::size_t i = nvars; i-- > nt + 1;) rows.push_back(unit_row(nvars, i, -1));
  append_local_t_rows(rows, nvars, nt);
  return std::make_shared<MatrixOrdering>(rows, nvars, nt, rank, pos, "degrevlex");
}

OrderingPtr make_weighted(const std::vector<Coeff>& w, OrderingPtr tiebreaker) {
  if (!tiebreaker) throw UsageError("weighted ordering needs a tiebreaker");
  return std::make_shared<WeightedOrdering>(w, std::move(tiebreaker));
}

OrderingPtr make_schreyer(OrderingPtr base, std::vector<ModuleMonomial> leads) {
  return std::make_shared<SchreyerOrdering>(std::move(base), std::move(leads));
}

OrderingPtr make_homogenized(OrderingPtr base, std::size_t deg_begin) {
  return std::make_shared<HomogenizedOrdering>(std::move(base), deg_begin);
}

}  // namespace ringstd
