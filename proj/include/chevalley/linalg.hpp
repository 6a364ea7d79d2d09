#pragma once

#include <gmpxx.h>

#include <cassert>
#include <optional>
#include <utility>
#include <vector>

namespace chevalley {

using Rat = mpq_class;

// Dense matrix over the rationals. Sizes stay small (at most a few hundred
// rows), so a flat vector with exact entries is fine.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[size_t(i) * cols_ + j];
  }
  const Rat& at(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return a_[size_t(i) * cols_ + j];
  }

  static Mat identity(int n);
  Mat transposed() const;
  bool is_zero() const;

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Rat& c) const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

// Row-major sparse matrix; the representation matrices of root vectors shift
// one-dimensional weight spaces, so they carry at most one entry per column.
class SparseMat {
 public:
  SparseMat() : rows_(0), cols_(0) {}
  SparseMat(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<std::pair<int, Rat>>& row(int i) const { return row_[i]; }

  void add(int i, int j, const Rat& v);
  Rat at(int i, int j) const;
  bool is_zero() const;
  long nnz() const;

  SparseMat operator*(const SparseMat& o) const;
  SparseMat operator+(const SparseMat& o) const;
  SparseMat operator-(const SparseMat& o) const;
  SparseMat scaled(const Rat& c) const;
  bool operator==(const SparseMat& o) const;

  Mat dense() const;

 private:
  int rows_, cols_;
  std::vector<std::vector<std::pair<int, Rat>>> row_;
};

inline SparseMat commutator(const SparseMat& a, const SparseMat& b) {
  return a * b - b * a;
}

// Rank by fraction-free-ish Gaussian elimination. The parallel variant
// distributes the row updates of each pivot step across OpenMP threads; both
// must agree, which the test suite checks.
int rank_serial(Mat m);
int rank_parallel(Mat m);
int rank(const Mat& m);

// Solves A x = b exactly. Returns one solution (free variables set to zero)
// or nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_linear(Mat a, std::vector<Rat> b);

}  // namespace chevalley
