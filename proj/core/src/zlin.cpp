#include "selfsim/zlin.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <queue>
#include <sstream>

#include "selfsim/error.hpp"

namespace selfsim {

namespace {

struct Overflow {};

// Scalar helpers shared by the int64 fast path and the Integer fallback.
inline std::int64_t sub_mul(std::int64_t a, std::int64_t f, std::int64_t b) {
  std::int64_t p, r;
  if (__builtin_mul_overflow(f, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
  if (r == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return r;
}
inline Integer sub_mul(const Integer& a, const Integer& f, const Integer& b) { return a - f * b; }

inline std::int64_t abs_of(std::int64_t a) { return a < 0 ? -a : a; }
inline Integer abs_of(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline bool is_pm1(std::int64_t a) { return a == 1 || a == -1; }
inline bool is_pm1(const Integer& a) { return a == 1 || a == -1; }

inline Integer to_integer(std::int64_t a) { return Integer(a); }
inline Integer to_integer(const Integer& a) { return a; }

bool fits_int64(const Integer& v) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min() + 1;
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  return v >= lo && v <= hi;
}

Integer gcd_of(const Integer& a, const Integer& b) {
  Integer x = abs_of(a), y = abs_of(b);
  while (y != 0) {
    Integer r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

// Turns a list of positive diagonal entries into invariant factors
// (replacing pairs by gcd and lcm), dropping the 1s.
std::vector<Integer> normalize_torsion(std::vector<Integer> d) {
  std::erase_if(d, [](const Integer& x) { return x == 1; });
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[j] % d[i] == 0) continue;
      Integer g = gcd_of(d[i], d[j]);
      Integer l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  std::erase_if(d, [](const Integer& x) { return x == 1; });
  return d;
}

// Diagonalizes a dense m x n matrix (row-major) with smallest-absolute
// pivots and returns the absolute values of the nonzero diagonal entries.
template <class T>
std::vector<Integer> diagonal_entries(std::vector<T> a, std::size_t m, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
  auto swap_rows = [&](std::size_t p, std::size_t q) {
    if (p != q)
      for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(q, j));
  };
  auto swap_cols = [&](std::size_t p, std::size_t q) {
    if (p != q)
      for (std::size_t i = 0; i < m; ++i) std::swap(at(i, p), at(i, q));
  };
  std::vector<Integer> out;
  const std::size_t lim = std::min(m, n);
  for (std::size_t t = 0; t < lim; ++t) {
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (at(i, j) != 0 && (pi == m || abs_of(at(i, j)) < abs_of(at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == m) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool residue = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (at(i, t) == 0) continue;
        T q = at(i, t) / at(t, t);
        for (std::size_t j = t; j < n; ++j)
          if (at(t, j) != 0) at(i, j) = sub_mul(at(i, j), q, at(t, j));
        if (at(i, t) != 0) residue = true;
      }
      if (residue) {
        std::size_t best = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (at(i, t) != 0 && abs_of(at(i, t)) < abs_of(at(best, t))) best = i;
        swap_rows(t, best);
        continue;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (at(t, j) == 0) continue;
        T q = at(t, j) / at(t, t);
        for (std::size_t i = t; i < m; ++i)
          if (at(i, t) != 0) at(i, j) = sub_mul(at(i, j), q, at(i, t));
        if (at(t, j) != 0) residue = true;
      }
      if (residue) {
        std::size_t best = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (at(t, j) != 0 && abs_of(at(t, j)) < abs_of(at(t, best))) best = j;
        swap_cols(t, best);
        continue;
      }
      break;
    }
    out.push_back(to_integer(abs_of(at(t, t))));
  }
  return out;
}

InvariantFactors from_diagonal(std::vector<Integer> diag) {
  InvariantFactors f;
  f.rank = diag.size();
  f.torsion = normalize_torsion(std::move(diag));
  return f;
}

std::vector<Integer> dense_diagonal(const std::vector<Integer>& a, std::size_t m, std::size_t n) {
  bool small = std::all_of(a.begin(), a.end(), fits_int64);
  if (small) {
    std::vector<std::int64_t> b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) b[i] = static_cast<std::int64_t>(a[i]);
    try {
      return diagonal_entries(std::move(b), m, n);
    } catch (const Overflow&) {
    }
  }
  return diagonal_entries(a, m, n);
}

// Sparse elimination with +-1 pivots. Each such pivot contributes an
// invariant factor 1 and removes its row and column; what is left is
// returned as a dense residual.
template <class T>
struct UnitEliminator {
  using Row = std::vector<std::pair<std::uint32_t, T>>;

  std::vector<Row> rows;
  std::vector<bool> row_live;
  std::vector<std::vector<std::uint32_t>> col_rows;
  std::vector<std::size_t> col_count;
  std::vector<bool> col_live;
  std::size_t pivots = 0;

  explicit UnitEliminator(const SparseIntMatrix& a)
      : rows(a.rows()), row_live(a.rows(), true), col_rows(a.cols()), col_count(a.cols(), 0),
        col_live(a.cols(), true) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (const auto& [i, v] : a.column(j)) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          rows[i].push_back({static_cast<std::uint32_t>(j), static_cast<std::int64_t>(v)});
        } else {
          rows[i].push_back({static_cast<std::uint32_t>(j), v});
        }
        col_rows[j].push_back(i);
        ++col_count[j];
      }
    }
  }

  const T* find(std::uint32_t r, std::uint32_t c) const {
    const Row& row = rows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::uint32_t col) { return e.first < col; });
    if (it == row.end() || it->first != c) return nullptr;
    return &it->second;
  }

  // rows[r] -= f * rows[p]
  void row_op(std::uint32_t r, std::uint32_t p, const T& f) {
    const Row& src = rows[p];
    Row& dst = rows[r];
    Row out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
        out.push_back(std::move(dst[i++]));
      } else if (i == dst.size() || src[j].first < dst[i].first) {
        T v = sub_mul(T(0), f, src[j].second);
        std::uint32_t c = src[j].first;
        ++col_count[c];
        col_rows[c].push_back(r);
        out.push_back({c, std::move(v)});
        ++j;
      } else {
        T v = sub_mul(dst[i].second, f, src[j].second);
        if (v == 0) {
          --col_count[dst[i].first];
        } else {
          out.push_back({dst[i].first, std::move(v)});
        }
        ++i;
        ++j;
      }
    }
    dst = std::move(out);
  }

  // Tries to eliminate column c with a unit pivot; false if none exists.
  bool eliminate(std::uint32_t c) {
    auto& cr = col_rows[c];
    std::sort(cr.begin(), cr.end());
    cr.erase(std::unique(cr.begin(), cr.end()), cr.end());
    std::vector<std::uint32_t> live;
    std::int64_t best = -1;
    for (std::uint32_t r : cr) {
      if (!row_live[r]) continue;
      const T* v = find(r, c);
      if (!v) continue;
      live.push_back(r);
      if (is_pm1(*v) && (best < 0 || rows[r].size() < rows[static_cast<std::uint32_t>(best)].size()))
        best = r;
    }
    cr = live;
    if (best < 0) return false;
    auto p = static_cast<std::uint32_t>(best);
    T pv = *find(p, c);
    for (std::uint32_t r : live) {
      if (r == p) continue;
      T f = *find(r, c) * pv;  // pv is its own inverse
      row_op(r, p, f);
    }
    row_live[p] = false;
    for (const auto& [col, v] : rows[p]) --col_count[col];
    rows[p].clear();
    col_live[c] = false;
    cr.clear();
    ++pivots;
    return true;
  }

  void run() {
    using Key = std::pair<std::size_t, std::uint32_t>;
    std::vector<std::uint32_t> pending(col_live.size());
    for (std::uint32_t j = 0; j < pending.size(); ++j) pending[j] = j;
    bool progress = true;
    while (progress && !pending.empty()) {
      progress = false;
      std::priority_queue<Key, std::vector<Key>, std::greater<>> heap;
      for (auto j : pending) heap.push({col_count[j], j});
      std::vector<std::uint32_t> deferred;
      while (!heap.empty()) {
        auto [cnt, c] = heap.top();
        heap.pop();
        if (!col_live[c]) continue;
        if (cnt != col_count[c]) {
          heap.push({col_count[c], c});
          continue;
        }
        if (cnt == 0) {
          col_live[c] = false;
          continue;
        }
        if (eliminate(c)) {
          progress = true;
        } else {
          deferred.push_back(c);
          col_live[c] = false;  // parked for the next pass
        }
      }
      for (auto c : deferred) col_live[c] = true;
      pending = std::move(deferred);
    }
  }

  // Live rows x live columns with their current entries.
  std::vector<Integer> residual(std::size_t& m, std::size_t& n) const {
    std::vector<std::uint32_t> rmap, cmap(col_live.size(), UINT32_MAX);
    std::uint32_t nc = 0;
    for (std::uint32_t j = 0; j < col_live.size(); ++j)
      if (col_live[j] && col_count[j] > 0) cmap[j] = nc++;
    for (std::uint32_t i = 0; i < rows.size(); ++i)
      if (row_live[i] && !rows[i].empty()) rmap.push_back(i);
    m = rmap.size();
    n = nc;
    std::vector<Integer> out(m * n);
    for (std::size_t ri = 0; ri < rmap.size(); ++ri)
      for (const auto& [c, v] : rows[rmap[ri]])
        if (cmap[c] != UINT32_MAX) out[ri * n + cmap[c]] = to_integer(v);
    return out;
  }
};

template <class T>
InvariantFactors sparse_factors(const SparseIntMatrix& a) {
  UnitEliminator<T> elim(a);
  elim.run();
  std::size_t m = 0, n = 0;
  auto res = elim.residual(m, n);
  auto diag = dense_diagonal(res, m, n);
  auto f = from_diagonal(std::move(diag));
  f.rank += elim.pivots;
  return f;
}

Integer parse_integer(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorKind::ParseError, "expected a number, got '" + s + "'");
  return Integer(s);
}

}  // namespace

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if ((*this)(src, j) != 0) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if ((*this)(i, src) != 0) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out << ", ";
    out << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << m(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------- SNF

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) ++r;
  return r;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) d.push_back(S(i, i));
  return d;
}

SmithForm snf(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm f{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& S = f.S;
  const std::size_t lim = std::min(m, n);

  auto smallest_in = [&](std::size_t t, std::size_t& pi, std::size_t& pj) {
    pi = m;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (S(i, j) != 0 && (pi == m || abs_of(S(i, j)) < abs_of(S(pi, pj)))) {
          pi = i;
          pj = j;
        }
    return pi != m;
  };

  for (std::size_t t = 0; t < lim; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!smallest_in(t, pi, pj)) break;
    S.swap_rows(t, pi);
    f.U.swap_rows(t, pi);
    S.swap_cols(t, pj);
    f.V.swap_cols(t, pj);
    for (;;) {
      bool residue = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Integer q = S(i, t) / S(t, t);
        S.add_row(i, t, -q);
        f.U.add_row(i, t, -q);
        if (S(i, t) != 0) residue = true;
      }
      if (residue) {
        std::size_t best = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (S(i, t) != 0 && abs_of(S(i, t)) < abs_of(S(best, t))) best = i;
        S.swap_rows(t, best);
        f.U.swap_rows(t, best);
        continue;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Integer q = S(t, j) / S(t, t);
        S.add_col(j, t, -q);
        f.V.add_col(j, t, -q);
        if (S(t, j) != 0) residue = true;
      }
      if (residue) {
        std::size_t best = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(t, j) != 0 && abs_of(S(t, j)) < abs_of(S(t, best))) best = j;
        S.swap_cols(t, best);
        f.V.swap_cols(t, best);
        continue;
      }
      // Divisibility: pull a non-multiple into row t and go again.
      bool fixed = true;
      for (std::size_t i = t + 1; i < m && fixed; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            S.add_row(t, i, 1);
            f.U.add_row(t, i, 1);
            fixed = false;
            break;
          }
      if (fixed) break;
    }
    if (S(t, t) < 0) {
      S.negate_row(t);
      f.U.negate_row(t);
    }
  }
  return f;
}

// ---------------------------------------------------------------- sparse

void SparseIntMatrix::add(std::size_t i, std::size_t j, const Integer& k) {
  if (i >= rows_ || j >= columns_.size())
    throw Error(ErrorKind::DimensionMismatch, "sparse entry out of range");
  if (k == 0) return;
  auto& col = columns_[j];
  auto r = static_cast<std::uint32_t>(i);
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const Entry& e, std::uint32_t row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    it->second += k;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, {r, k});
  }
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix m(rows_, columns_.size());
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& [i, v] : columns_[j]) m(i, j) = v;
  return m;
}

SparseIntMatrix SparseIntMatrix::from_dense(const IntMatrix& m) {
  SparseIntMatrix s(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0) s.columns_[j].push_back({static_cast<std::uint32_t>(i), m(i, j)});
  return s;
}

SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "sparse product");
  SparseIntMatrix c(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::map<std::uint32_t, Integer> acc;
    for (const auto& [k, bv] : b.column(j))
      for (const auto& [i, av] : a.column(k)) acc[i] += av * bv;
    for (auto& [i, v] : acc)
      if (v != 0) c.columns_[j].push_back({i, std::move(v)});
  }
  return c;
}

InvariantFactors invariant_factors(const IntMatrix& a) {
  std::vector<Integer> flat;
  flat.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) flat.push_back(a(i, j));
  return from_diagonal(dense_diagonal(flat, a.rows(), a.cols()));
}

InvariantFactors invariant_factors(const SparseIntMatrix& a) {
  bool small = true;
  for (std::size_t j = 0; j < a.cols() && small; ++j)
    for (const auto& e : a.column(j))
      if (!fits_int64(e.second)) {
        small = false;
        break;
      }
  if (small) {
    try {
      return sparse_factors<std::int64_t>(a);
    } catch (const Overflow&) {
    }
  }
  return sparse_factors<Integer>(a);
}

// ---------------------------------------------------------------- primes

std::vector<Integer> prime_factors(const Integer& n) {
  std::vector<Integer> out;
  Integer x = abs_of(n);
  if (x < 2) return out;
  for (Integer p = 2; p * p <= x; p += (p == 2 ? 1 : 2)) {
    if (x % p != 0) continue;
    out.push_back(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) out.push_back(x);
  return out;
}

Integer radical(const Integer& n) {
  Integer x = abs_of(n);
  if (x < 2) return x;
  Integer r = 1;
  for (const auto& p : prime_factors(x)) r *= p;
  return r;
}

Integer strip_primes_of(const Integer& a, const Integer& D) {
  Integer x = abs_of(a);
  if (x == 0) return 0;
  for (const auto& p : prime_factors(D))
    while (x % p == 0) x /= p;
  return x;
}

// ---------------------------------------------------------------- AbGroup

AbGroup AbGroup::free(std::size_t rank) {
  AbGroup g;
  g.free_rank_ = rank;
  return g;
}

AbGroup AbGroup::cyclic(const Integer& n) {
  Integer a = abs_of(n);
  if (a == 0) return free(1);
  AbGroup g;
  if (a >= 2) g.torsion_.push_back(a);
  return g;
}

AbGroup AbGroup::localized(const Integer& D) {
  Integer a = abs_of(D);
  if (a == 0) return zero();
  if (a == 1) return free(1);
  AbGroup g;
  g.localized_.push_back(radical(a));
  return g;
}

AbGroup operator+(const AbGroup& a, const AbGroup& b) {
  AbGroup s;
  s.free_rank_ = a.free_rank_ + b.free_rank_;
  std::vector<Integer> t = a.torsion_;
  t.insert(t.end(), b.torsion_.begin(), b.torsion_.end());
  s.torsion_ = normalize_torsion(std::move(t));
  s.localized_ = a.localized_;
  s.localized_.insert(s.localized_.end(), b.localized_.begin(), b.localized_.end());
  std::sort(s.localized_.begin(), s.localized_.end());
  return s;
}

std::string AbGroup::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (free_rank_ == 1) parts.push_back("Z");
  if (free_rank_ > 1) parts.push_back("Z^" + std::to_string(free_rank_));
  for (const auto& t : torsion_) parts.push_back("Z/" + t.str());
  for (const auto& d : localized_) parts.push_back("Z[1/" + d.str() + "]");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " + ";
    out += parts[i];
  }
  return out;
}

AbGroup parse_abgroup(const std::string& text) {
  AbGroup g;
  std::string cleaned;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
  if (cleaned.empty()) throw Error(ErrorKind::ParseError, "empty group");
  std::size_t start = 0;
  while (start <= cleaned.size()) {
    std::size_t end = cleaned.find('+', start);
    if (end == std::string::npos) end = cleaned.size();
    std::string tok = cleaned.substr(start, end - start);
    if (tok == "0") {
    } else if (tok == "Z") {
      g = g + AbGroup::free(1);
    } else if (tok.rfind("Z^", 0) == 0) {
      g = g + AbGroup::free(static_cast<std::size_t>(parse_integer(tok.substr(2))));
    } else if (tok.rfind("Z/", 0) == 0) {
      g = g + AbGroup::cyclic(parse_integer(tok.substr(2)));
    } else if (tok.rfind("Z[1/", 0) == 0 && tok.back() == ']') {
      g = g + AbGroup::localized(parse_integer(tok.substr(4, tok.size() - 5)));
    } else {
      throw Error(ErrorKind::ParseError, "unrecognized group summand '" + tok + "'");
    }
    start = end + 1;
  }
  return g;
}

// ---------------------------------------------------------------- homology

AbGroup homology_of_pair(const IntMatrix& dn, const IntMatrix& dn1) {
  return homology_of_pair(SparseIntMatrix::from_dense(dn), SparseIntMatrix::from_dense(dn1));
}

AbGroup homology_of_pair(const SparseIntMatrix& dn, const SparseIntMatrix& dn1) {
  if (dn.cols() != dn1.rows())
    throw Error(ErrorKind::DimensionMismatch,
                "boundary maps do not compose (" + std::to_string(dn.cols()) + " vs " +
                    std::to_string(dn1.rows()) + ")");
  if (!(dn * dn1).is_zero()) throw Error(ErrorKind::NotAChainComplex, "dn * dn1 != 0");
  auto a = invariant_factors(dn);
  auto b = invariant_factors(dn1);
  AbGroup h = AbGroup::free(dn.cols() - a.rank - b.rank);
  for (const auto& t : b.torsion) h = h + AbGroup::cyclic(t);
  return h;
}

AbGroup colimit_const_Z(const Integer& multiplier) {
  if (multiplier < 0) throw Error(ErrorKind::DimensionMismatch, "negative multiplier");
  return AbGroup::localized(multiplier);
}

// ---------------------------------------------------------------- LocMult

LocMult::LocMult(Integer num, Integer den, Integer D)
    : num_(std::move(num)), den_(std::move(den)), D_(radical(D)) {
  if (D_ < 1) throw Error(ErrorKind::DimensionMismatch, "LocMult base must be >= 1");
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (den_ == 0 || strip_primes_of(den_, D_) != 1)
    throw Error(ErrorKind::DimensionMismatch, "denominator is not a unit in Z[1/D]");
  Integer g = gcd_of(num_, den_);
  if (num_ == 0) g = den_;
  num_ /= g;
  den_ /= g;
}

LocMult operator-(const LocMult& a, const LocMult& b) {
  if (a.D_ != b.D_) throw Error(ErrorKind::DimensionMismatch, "LocMult on different groups");
  return LocMult(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_, a.D_);
}

LocMult operator*(const LocMult& a, const LocMult& b) {
  if (a.D_ != b.D_) throw Error(ErrorKind::DimensionMismatch, "LocMult on different groups");
  return LocMult(a.num_ * b.num_, a.den_ * b.den_, a.D_);
}

std::string LocMult::to_string() const {
  if (den_ == 1) return "x" + num_.str();
  return "x(" + num_.str() + "/" + den_.str() + ")";
}

std::pair<AbGroup, AbGroup> ker_coker(const LocMult& f) {
  AbGroup g = f.group();
  if (f.num() == 0) return {g, g};
  // den is invertible, so only num matters; primes of D are invertible too.
  return {AbGroup::zero(), AbGroup::cyclic(strip_primes_of(f.num(), f.base()))};
}

}  // namespace selfsim
