#include "chevalley/linalg.hpp"

#include <algorithm>

namespace chevalley {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transposed() const {
  Mat t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool Mat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

Mat Mat::operator*(const Mat& o) const {
  assert(cols_ == o.rows_);
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& bkj = o.at(k, j);
        if (bkj != 0) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::scaled(const Rat& c) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

void SparseMat::add(int i, int j, const Rat& v) {
  assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
  if (v == 0) return;
  for (auto it = row_[i].begin(); it != row_[i].end(); ++it) {
    if (it->first == j) {
      it->second += v;
      if (it->second == 0) row_[i].erase(it);
      return;
    }
    if (it->first > j) {
      row_[i].insert(it, {j, v});
      return;
    }
  }
  row_[i].push_back({j, v});
}

Rat SparseMat::at(int i, int j) const {
  for (const auto& [c, v] : row_[i])
    if (c == j) return v;
  return Rat(0);
}

bool SparseMat::is_zero() const {
  for (const auto& r : row_)
    if (!r.empty()) return false;
  return true;
}

long SparseMat::nnz() const {
  long n = 0;
  for (const auto& r : row_) n += (long)r.size();
  return n;
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
  assert(cols_ == o.rows_);
  SparseMat r(rows_, o.cols_);
  std::vector<Rat> acc(o.cols_, Rat(0));
  for (int i = 0; i < rows_; ++i) {
    if (row_[i].empty()) continue;
    std::vector<int> touched;
    for (const auto& [k, va] : row_[i])
      for (const auto& [j, vb] : o.row_[k]) {
        if (acc[j] == 0) touched.push_back(j);
        acc[j] += va * vb;
      }
    std::sort(touched.begin(), touched.end());
    for (int j : touched) {
      if (acc[j] != 0) r.row_[i].push_back({j, acc[j]});
      acc[j] = 0;
    }
  }
  return r;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  SparseMat r = *this;
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : o.row_[i]) r.add(i, j, v);
  return r;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  SparseMat r = *this;
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : o.row_[i]) r.add(i, j, -v);
  return r;
}

SparseMat SparseMat::scaled(const Rat& c) const {
  SparseMat r(rows_, cols_);
  if (c == 0) return r;
  for (int i = 0; i < rows_; ++i) {
    r.row_[i] = row_[i];
    for (auto& [j, v] : r.row_[i]) v *= c;
  }
  return r;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_;
}

Mat SparseMat::dense() const {
  Mat m(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (const auto& [j, v] : row_[i]) m.at(i, j) = v;
  return m;
}

namespace {

// Shared elimination loop; `parallel` toggles the OpenMP row updates.
int eliminate(Mat& m, bool parallel) {
  int rank = 0;
  int rows = m.rows(), cols = m.cols();
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = col; j < cols; ++j) swap(m.at(pivot, j), m.at(rank, j));
    const Rat inv_p = 1 / m.at(rank, col);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (int i = rank + 1; i < rows; ++i) {
      if (m.at(i, col) == 0) continue;
      Rat f = m.at(i, col) * inv_p;
      m.at(i, col) = 0;
      for (int j = col + 1; j < cols; ++j)
        if (m.at(rank, j) != 0) m.at(i, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int rank_serial(Mat m) { return eliminate(m, false); }
int rank_parallel(Mat m) { return eliminate(m, true); }
int rank(const Mat& m) { return rank_parallel(m); }

std::optional<std::vector<Rat>> solve_linear(Mat a, std::vector<Rat> b) {
  int rows = a.rows(), cols = a.cols();
  assert((int)b.size() == rows);
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i)
      if (a.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int j = col; j < cols; ++j) swap(a.at(pivot, j), a.at(rank, j));
      swap(b[pivot], b[rank]);
    }
    const Rat inv_p = 1 / a.at(rank, col);
    for (int i = rank + 1; i < rows; ++i) {
      if (a.at(i, col) == 0) continue;
      Rat f = a.at(i, col) * inv_p;
      a.at(i, col) = 0;
      for (int j = col + 1; j < cols; ++j)
        if (a.at(rank, j) != 0) a.at(i, j) -= f * a.at(rank, j);
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int i = rank; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (int i = rank - 1; i >= 0; --i) {
    int pc = pivot_col[i];
    Rat s = b[i];
    for (int j = pc + 1; j < cols; ++j)
      if (a.at(i, j) != 0) s -= a.at(i, j) * x[j];
    x[pc] = s / a.at(i, pc);
  }
  return x;
}

}  // namespace chevalley
