#include "catoric/gf2.hpp"

#include <cassert>
#include <stdexcept>

namespace catoric {

void XPoly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

XPoly XPoly::one() {
  XPoly p;
  p.words_.push_back(1);
  return p;
}

XPoly XPoly::xpow(uint32_t k) {
  XPoly p;
  p.words_.resize(k / 64 + 1, 0);
  p.words_[k / 64] = uint64_t{1} << (k % 64);
  return p;
}

bool XPoly::is_one() const { return words_.size() == 1 && words_[0] == 1; }

int64_t XPoly::degree() const {
  if (words_.empty()) return -1;
  uint64_t top = words_.back();
  int bit = 63;
  while (!(top >> bit & 1)) --bit;
  return static_cast<int64_t>(words_.size() - 1) * 64 + bit;
}

bool XPoly::get(uint32_t k) const {
  size_t w = k / 64;
  return w < words_.size() && (words_[w] >> (k % 64) & 1);
}

void XPoly::flip(uint32_t k) {
  size_t w = k / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= uint64_t{1} << (k % 64);
  trim();
}

XPoly XPoly::operator^(const XPoly& o) const {
  XPoly r;
  r.words_.resize(std::max(words_.size(), o.words_.size()), 0);
  for (size_t k = 0; k < words_.size(); ++k) r.words_[k] ^= words_[k];
  for (size_t k = 0; k < o.words_.size(); ++k) r.words_[k] ^= o.words_[k];
  r.trim();
  return r;
}

XPoly XPoly::shifted(uint32_t k) const {
  if (is_zero() || k == 0) {
    XPoly r = *this;
    return r;
  }
  XPoly r;
  size_t wshift = k / 64;
  int bshift = static_cast<int>(k % 64);
  r.words_.assign(words_.size() + wshift + 1, 0);
  for (size_t w = 0; w < words_.size(); ++w) {
    r.words_[w + wshift] ^= words_[w] << bshift;
    if (bshift) r.words_[w + wshift + 1] ^= words_[w] >> (64 - bshift);
  }
  r.trim();
  return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
  XPoly r;
  if (is_zero() || o.is_zero()) return r;
  r.words_.assign(words_.size() + o.words_.size(), 0);
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t a = words_[w];
    while (a) {
      int bit = __builtin_ctzll(a);
      a &= a - 1;
      size_t base = w * 64 + static_cast<size_t>(bit);
      size_t wshift = base / 64;
      int bshift = static_cast<int>(base % 64);
      for (size_t v = 0; v < o.words_.size(); ++v) {
        r.words_[wshift + v] ^= o.words_[v] << bshift;
        if (bshift && wshift + v + 1 < r.words_.size())
          r.words_[wshift + v + 1] ^= o.words_[v] >> (64 - bshift);
      }
    }
  }
  r.trim();
  return r;
}

std::pair<XPoly, XPoly> XPoly::divmod(const XPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("XPoly division by zero");
  XPoly q, r = *this;
  int64_t dd = d.degree();
  for (int64_t k = r.degree(); k >= dd; k = r.degree()) {
    uint32_t shift = static_cast<uint32_t>(k - dd);
    q.flip(shift);
    r = r ^ d.shifted(shift);
  }
  return {q, r};
}

XPoly XPoly::gcd(XPoly a, XPoly b) {
  while (!b.is_zero()) {
    XPoly r = a.mod(b);
    a = b;
    b = r;
  }
  return a;
}

size_t Gf2Matrix::add_row() {
  rows_.emplace_back(width_, 0);
  return rows_.size() - 1;
}

void Gf2Matrix::flip(size_t r, size_t c) {
  assert(r < rows_.size() && c < cols_);
  rows_[r][c / 64] ^= uint64_t{1} << (c % 64);
}

bool Gf2Matrix::get(size_t r, size_t c) const {
  return rows_[r][c / 64] >> (c % 64) & 1;
}

void Gf2Matrix::xor_row(size_t dst, size_t src) {
  auto& d = rows_[dst];
  const auto& s = rows_[src];
  for (size_t w = 0; w < width_; ++w) d[w] ^= s[w];
}

size_t Gf2Matrix::eliminate(size_t pivot_cols, std::vector<size_t>* pivot_of) {
  size_t rank = 0;
  if (pivot_of) pivot_of->clear();
  for (size_t c = 0; c < pivot_cols && rank < rows_.size(); ++c) {
    size_t pivot = rank;
    while (pivot < rows_.size() && !get(pivot, c)) ++pivot;
    if (pivot == rows_.size()) continue;
    std::swap(rows_[rank], rows_[pivot]);
    for (size_t r = 0; r < rows_.size(); ++r) {
      if (r != rank && get(r, c)) xor_row(r, rank);
    }
    if (pivot_of) pivot_of->push_back(c);
    ++rank;
  }
  return rank;
}

BatchSolverF2::BatchSolverF2(size_t unknowns, size_t n_rhs)
    : unknowns_(unknowns), n_rhs_(n_rhs), m_(unknowns + n_rhs) {}

size_t BatchSolverF2::add_equation() { return m_.add_row(); }

void BatchSolverF2::set_coeff(size_t eq, size_t unknown) {
  m_.flip(eq, unknown);
}

void BatchSolverF2::set_rhs(size_t eq, size_t rhs_index) {
  m_.flip(eq, unknowns_ + rhs_index);
}

void BatchSolverF2::solve() {
  rank_ = m_.eliminate(unknowns_, &pivot_of_);
  solved_ = true;
}

std::optional<std::vector<size_t>> BatchSolverF2::solution(
    size_t rhs_index) const {
  assert(solved_);
  size_t col = unknowns_ + rhs_index;
  // after full Gauss-Jordan over the unknown columns, rows below the rank
  // are zero there; a rhs bit on such a row means the system is inconsistent
  for (size_t r = rank_; r < m_.rows(); ++r) {
    if (m_.get(r, col)) return std::nullopt;
  }
  std::vector<size_t> on;
  for (size_t r = 0; r < rank_; ++r) {
    if (m_.get(r, col)) on.push_back(pivot_of_[r]);
  }
  return on;
}

}  // namespace catoric
