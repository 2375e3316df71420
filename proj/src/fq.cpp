#include "hallbridge/fq.hpp"

#include <algorithm>
#include <cmath>

namespace hb {

FqMatrix FqMatrix::identity(unsigned q, int n) {
  FqMatrix m(q, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FqMatrix FqMatrix::from_columns(unsigned q, int rows, const std::vector<FqVec>& cols) {
  FqMatrix m(q, rows, int(cols.size()));
  for (int c = 0; c < int(cols.size()); ++c) {
    if (int(cols[c].size()) != rows) throw DimensionError("from_columns: bad column length");
    for (int r = 0; r < rows; ++r) m.set(r, c, cols[c][r]);
  }
  return m;
}

bool FqMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x == 0; });
}

FqMatrix FqMatrix::operator+(const FqMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix add: shape mismatch");
  FqMatrix m(q_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = (e_[i] + o.e_[i]) % q_;
  return m;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const { return *this + (-o); }

FqMatrix FqMatrix::operator-() const {
  FqMatrix m(q_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = (q_ - e_[i]) % q_;
  return m;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix mul: shape mismatch");
  FqMatrix m(q_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      unsigned a = at(i, k);
      if (!a) continue;
      for (int j = 0; j < o.cols_; ++j)
        m.e_[size_t(i) * o.cols_ + j] = (m.e_[size_t(i) * o.cols_ + j] + a * o.at(k, j)) % q_;
    }
  return m;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix m(q_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.set(j, i, at(i, j));
  return m;
}

FqVec FqMatrix::apply(const FqVec& x) const {
  if (int(x.size()) != cols_) throw DimensionError("apply: length mismatch");
  FqVec y(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    unsigned s = 0;
    for (int j = 0; j < cols_; ++j) s = (s + at(i, j) * x[j]) % q_;
    y[i] = s;
  }
  return y;
}

FqMatrix FqMatrix::scaled(unsigned c) const {
  FqMatrix m(q_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) m.e_[i] = (e_[i] * c) % q_;
  return m;
}

void FqMatrix::set_block(int r0, int c0, const FqMatrix& m) {
  for (int i = 0; i < m.rows_; ++i)
    for (int j = 0; j < m.cols_; ++j) set(r0 + i, c0 + j, m.at(i, j));
}

FqMatrix FqMatrix::block(int r0, int c0, int rows, int cols) const {
  FqMatrix m(q_, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.set(i, j, at(r0 + i, c0 + j));
  return m;
}

FqVec FqMatrix::column(int c) const {
  FqVec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

unsigned FqMatrix::inv_scalar(unsigned a) const {
  for (unsigned x = 1; x < q_; ++x)
    if (a * x % q_ == 1) return x;
  throw DimensionError("inverse of zero scalar");
}

std::vector<int> FqMatrix::rref() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (at(i, c)) { p = i; break; }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < cols_; ++j) {
        unsigned t = at(r, j);
        set(r, j, at(p, j));
        set(p, j, t);
      }
    unsigned inv = inv_scalar(at(r, c));
    for (int j = 0; j < cols_; ++j) set(r, j, at(r, j) * inv % q_);
    for (int i = 0; i < rows_; ++i) {
      if (i == r || !at(i, c)) continue;
      unsigned f = at(i, c);
      for (int j = 0; j < cols_; ++j) set(i, j, (at(i, j) + (q_ - f) * at(r, j)) % q_);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int FqMatrix::rank() const {
  FqMatrix m = *this;
  return int(m.rref().size());
}

std::vector<FqVec> FqMatrix::kernel_basis() const {
  FqMatrix m = *this;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<FqVec> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    FqVec v(cols_, 0);
    v[c] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = (q_ - m.at(int(r), c)) % q_;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FqVec> FqMatrix::solve(const FqVec& b) const {
  if (int(b.size()) != rows_) throw DimensionError("solve: length mismatch");
  FqMatrix aug(q_, rows_, cols_ + 1);
  aug.set_block(0, 0, *this);
  for (int r = 0; r < rows_; ++r) aug.set(r, cols_, b[r]);
  std::vector<int> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  FqVec x(cols_, 0);
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(int(r), cols_);
  return x;
}

std::optional<FqMatrix> FqMatrix::solve_matrix(const FqMatrix& B) const {
  if (B.rows_ != rows_) throw DimensionError("solve_matrix: shape mismatch");
  FqMatrix X(q_, cols_, B.cols_);
  for (int c = 0; c < B.cols_; ++c) {
    auto x = solve(B.column(c));
    if (!x) return std::nullopt;
    for (int r = 0; r < cols_; ++r) X.set(r, c, (*x)[r]);
  }
  return X;
}

bool FqMatrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

std::optional<FqMatrix> FqMatrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  return solve_matrix(identity(q_, rows_));
}

FqMatrix hstack(const FqMatrix& a, const FqMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack: row mismatch");
  FqMatrix m(a.q(), a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

FqMatrix vstack(const FqMatrix& a, const FqMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("vstack: col mismatch");
  FqMatrix m(a.q(), a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

BlockLinMap::BlockLinMap(unsigned q, std::vector<std::pair<int, int>> in_shapes,
                         std::vector<std::pair<int, int>> out_shapes)
    : q_(q), in_shapes_(std::move(in_shapes)), out_shapes_(std::move(out_shapes)) {
  in_dim_ = 0;
  for (auto& s : in_shapes_) {
    in_off_.push_back(in_dim_);
    in_dim_ += s.first * s.second;
  }
  out_dim_ = 0;
  for (auto& s : out_shapes_) {
    out_off_.push_back(out_dim_);
    out_dim_ += s.first * s.second;
  }
  mat_ = FqMatrix(q_, out_dim_, in_dim_);
}

void BlockLinMap::add(int ob, int ib, const FqMatrix& L, const FqMatrix& R, int sign) {
  auto [xr, xc] = in_shapes_[ib];
  auto [yr, yc] = out_shapes_[ob];
  if (L.rows() != yr || L.cols() != xr || R.rows() != xc || R.cols() != yc)
    throw DimensionError("BlockLinMap::add: shape mismatch");
  unsigned s = sign >= 0 ? unsigned(sign) % q_ : q_ - unsigned(-sign) % q_;
  for (int i = 0; i < yr; ++i)
    for (int j = 0; j < yc; ++j) {
      int row = out_off_[ob] + i * yc + j;
      for (int r = 0; r < xr; ++r) {
        unsigned lv = L.at(i, r);
        if (!lv) continue;
        for (int c = 0; c < xc; ++c) {
          unsigned coef = lv * R.at(c, j) % q_ * s % q_;
          if (!coef) continue;
          int col = in_off_[ib] + r * xc + c;
          mat_.set(row, col, mat_.at(row, col) + coef);
        }
      }
    }
}

FqVec BlockLinMap::pack_in(const std::vector<FqMatrix>& xs) const {
  FqVec v(in_dim_, 0);
  for (size_t b = 0; b < in_shapes_.size(); ++b) {
    auto [r, c] = in_shapes_[b];
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) v[in_off_[b] + i * c + j] = xs[b].at(i, j);
  }
  return v;
}

std::vector<FqMatrix> BlockLinMap::unpack_in(const FqVec& v) const {
  std::vector<FqMatrix> xs;
  for (size_t b = 0; b < in_shapes_.size(); ++b) {
    auto [r, c] = in_shapes_[b];
    FqMatrix m(q_, r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.set(i, j, v[in_off_[b] + i * c + j]);
    xs.push_back(std::move(m));
  }
  return xs;
}

FqVec BlockLinMap::pack_out(const std::vector<FqMatrix>& ys) const {
  FqVec v(out_dim_, 0);
  for (size_t b = 0; b < out_shapes_.size(); ++b) {
    auto [r, c] = out_shapes_[b];
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) v[out_off_[b] + i * c + j] = ys[b].at(i, j);
  }
  return v;
}

bool for_each_combo(unsigned q, int k, unsigned long cap,
                    const std::function<bool(const FqVec&)>& fn) {
  double bits = k * std::log2(double(q));
  if (bits > std::log2(double(cap)))
    throw CapError("enumeration too large: q^" + std::to_string(k));
  FqVec v(k, 0);
  while (true) {
    if (!fn(v)) return false;
    int i = 0;
    while (i < k && ++v[i] == q) v[i++] = 0;
    if (i == k) return true;
  }
}

}  // namespace hb
