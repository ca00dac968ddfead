#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace catoric {

/* Univariate polynomial over GF(2), bit-packed little-endian:
   bit k of word k/64 is the coefficient of x^k. */
class XPoly {
 public:
  XPoly() = default;

  static XPoly one();
  static XPoly xpow(uint32_t k);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const;
  // degree of the zero polynomial is -1
  int64_t degree() const;
  bool get(uint32_t k) const;
  void flip(uint32_t k);

  friend bool operator==(const XPoly&, const XPoly&) = default;

  XPoly operator^(const XPoly& o) const;  // addition over GF(2)
  XPoly operator*(const XPoly& o) const;  // carryless multiplication
  XPoly shifted(uint32_t k) const;        // multiply by x^k

  // division with remainder; divisor must be nonzero
  std::pair<XPoly, XPoly> divmod(const XPoly& d) const;
  XPoly mod(const XPoly& d) const { return divmod(d).second; }

  static XPoly gcd(XPoly a, XPoly b);

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  std::vector<uint64_t> words_;
  void trim();
};

/* Dense GF(2) matrix with 64-bit packed rows. Row echelon reduction uses a
   deterministic pivot order (lowest column index first) so ranks and solution
   vectors are reproducible. */
class Gf2Matrix {
 public:
  explicit Gf2Matrix(size_t cols) : cols_(cols), width_((cols + 63) / 64) {}

  size_t rows() const { return rows_.size(); }
  size_t cols() const { return cols_; }

  size_t add_row();  // appends a zero row, returns its index
  void flip(size_t r, size_t c);
  bool get(size_t r, size_t c) const;
  void xor_row(size_t dst, size_t src);

  // In-place Gauss-Jordan elimination restricted to the first pivot_cols
  // columns (the remaining columns ride along as right-hand sides).
  // Returns the rank; pivot_of[r] = pivot column of row r for r < rank.
  size_t eliminate(size_t pivot_cols, std::vector<size_t>* pivot_of = nullptr);

  size_t rank() { return eliminate(cols_); }

 private:
  size_t cols_;
  size_t width_;
  std::vector<std::vector<uint64_t>> rows_;
};

/* One shared elimination, many right-hand sides: solve M*d = rhs_k over GF(2)
   for a fixed coefficient matrix M and a batch of right-hand sides. Columns
   of M are labelled by the caller; solutions come back as sets of labels. */
class BatchSolverF2 {
 public:
  BatchSolverF2(size_t unknowns, size_t n_rhs);

  // each equation is one matrix row: unknown indices with coefficient 1
  // plus, per right-hand side, its bit for this equation
  size_t add_equation();
  void set_coeff(size_t eq, size_t unknown);
  void set_rhs(size_t eq, size_t rhs_index);

  // after solve(): solution(k) is empty if rhs k is inconsistent, else the
  // set of unknown indices equal to 1 (a particular solution, free vars = 0)
  void solve();
  std::optional<std::vector<size_t>> solution(size_t rhs_index) const;

 private:
  size_t unknowns_, n_rhs_;
  Gf2Matrix m_;
  bool solved_ = false;
  std::vector<size_t> pivot_of_;
  size_t rank_ = 0;
};

}  // namespace catoric
