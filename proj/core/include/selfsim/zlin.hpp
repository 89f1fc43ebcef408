#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace selfsim {

using Integer = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  // Throws DimensionMismatch on ragged input.
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  IntMatrix transpose() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k);
  // col[dst] += k * col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t i);

  // Throws DimensionMismatch.
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::string to_string(const IntMatrix& m);

// Determinant by fraction-free elimination (Bareiss). Square only.
Integer determinant(const IntMatrix& m);

// U A V = S with U, V unimodular and S diagonal, d_1 | d_2 | ... , d_i >= 0.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::size_t rank() const;
  // Nonzero diagonal entries in order (so units included).
  std::vector<Integer> diagonal() const;
};

SmithForm snf(const IntMatrix& a);

// Column-major sparse integer matrix. Used for boundary matrices, which are
// far too large to hold densely.
class SparseIntMatrix {
 public:
  using Entry = std::pair<std::uint32_t, Integer>;  // (row, value)
  using Column = std::vector<Entry>;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), columns_(cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return columns_.size(); }

  // Adds k at (i, j); entries that cancel to zero are dropped.
  void add(std::size_t i, std::size_t j, const Integer& k);
  const Column& column(std::size_t j) const { return columns_.at(j); }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  IntMatrix to_dense() const;
  static SparseIntMatrix from_dense(const IntMatrix& m);

  friend SparseIntMatrix operator*(const SparseIntMatrix& a, const SparseIntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::vector<Column> columns_;  // each sorted by row
};

// Rank and the invariant factors > 1 of a matrix.
struct InvariantFactors {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // ascending, each >= 2, divisibility chain
};

InvariantFactors invariant_factors(const IntMatrix& a);
// Eliminates unit pivots sparsely, then finishes the residual densely.
InvariantFactors invariant_factors(const SparseIntMatrix& a);

// Product of the distinct prime factors. rad(0) = 0, rad(1) = 1.
Integer radical(const Integer& n);
std::vector<Integer> prime_factors(const Integer& n);
// |a| with every prime factor of D divided out.
Integer strip_primes_of(const Integer& a, const Integer& D);

// Finite direct sum of Z, Z/n (n >= 2) and Z[1/D] (D >= 2) factors.
//
// Canonical form: free rank; torsion as invariant factors d_1 | d_2 | ...;
// localized factors by D replaced with rad(D), sorted ascending.
class AbGroup {
 public:
  AbGroup() = default;

  static AbGroup zero() { return {}; }
  static AbGroup free(std::size_t rank);
  static AbGroup cyclic(const Integer& n);  // Z/n; n = 0 gives Z, n = 1 gives 0
  static AbGroup localized(const Integer& D);  // Z[1/D]; D = 1 gives Z, D = 0 gives 0

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& torsion() const noexcept { return torsion_; }
  const std::vector<Integer>& localized_factors() const noexcept { return localized_; }

  bool is_zero() const noexcept {
    return free_rank_ == 0 && torsion_.empty() && localized_.empty();
  }
  // Rank over Q: free summands plus localized summands.
  std::size_t rank() const noexcept { return free_rank_ + localized_.size(); }
  bool is_torsion_free() const noexcept { return torsion_.empty(); }

  friend AbGroup operator+(const AbGroup& a, const AbGroup& b);
  friend bool operator==(const AbGroup&, const AbGroup&) = default;

  // "0", "Z", "Z^2 + Z/2 + Z[1/2]".
  std::string to_string() const;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
  std::vector<Integer> localized_;
};

// Parses the to_string form. Throws ParseError.
AbGroup parse_abgroup(const std::string& text);

// H = ker(dn) / im(dn1), where dn1 maps into the domain of dn.
// Throws DimensionMismatch or NotAChainComplex (dn * dn1 != 0).
AbGroup homology_of_pair(const IntMatrix& dn, const IntMatrix& dn1);
AbGroup homology_of_pair(const SparseIntMatrix& dn, const SparseIntMatrix& dn1);

// colim(Z, xD): 0 for D = 0, Z for D = 1, Z[1/D] otherwise.
AbGroup colimit_const_Z(const Integer& multiplier);

// The endomorphism "multiply by num/den" of Z[1/D], den a divisor of a
// power of D. D = 1 models Z itself.
class LocMult {
 public:
  // Throws DimensionMismatch unless den > 0 divides a power of D and D >= 1.
  LocMult(Integer num, Integer den, Integer D);

  static LocMult identity(const Integer& D) { return LocMult(1, 1, D); }

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }
  const Integer& base() const noexcept { return D_; }

  // The group this map acts on.
  AbGroup group() const { return AbGroup::localized(D_); }

  friend LocMult operator-(const LocMult& a, const LocMult& b);
  friend LocMult operator*(const LocMult& a, const LocMult& b);
  friend bool operator==(const LocMult&, const LocMult&) = default;

  // "x2", "x(1/2)", "x(-3/4)".
  std::string to_string() const;

 private:
  Integer num_;
  Integer den_;
  Integer D_;
};

// (ker f, coker f) as abstract groups.
std::pair<AbGroup, AbGroup> ker_coker(const LocMult& f);

}  // namespace selfsim
