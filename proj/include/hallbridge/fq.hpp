#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hb {

struct DimensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using FqVec = std::vector<unsigned>;

/// Dense matrix over the prime field F_q. Entries are kept reduced mod q.
/// 0 x n and n x 0 matrices are legal.
class FqMatrix {
public:
  FqMatrix() : q_(2), rows_(0), cols_(0) {}
  FqMatrix(unsigned q, int rows, int cols)
      : q_(q), rows_(rows), cols_(cols), e_(size_t(rows) * cols, 0) {}

  static FqMatrix identity(unsigned q, int n);
  static FqMatrix from_columns(unsigned q, int rows, const std::vector<FqVec>& cols);

  unsigned q() const { return q_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  unsigned at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }
  void set(int r, int c, long v) {
    long m = v % long(q_);
    e_[size_t(r) * cols_ + c] = unsigned(m < 0 ? m + q_ : m);
  }

  bool is_zero() const;
  FqMatrix operator+(const FqMatrix& o) const;
  FqMatrix operator-(const FqMatrix& o) const;
  FqMatrix operator-() const;
  FqMatrix operator*(const FqMatrix& o) const;
  bool operator==(const FqMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const FqMatrix& o) const { return !(*this == o); }

  FqMatrix transpose() const;
  FqVec apply(const FqVec& x) const;
  FqMatrix scaled(unsigned c) const;

  void set_block(int r0, int c0, const FqMatrix& m);
  FqMatrix block(int r0, int c0, int rows, int cols) const;
  FqVec column(int c) const;

  /// In-place reduced row echelon form; returns pivot column indices
  /// (lowest column index first).
  std::vector<int> rref();

  int rank() const;
  /// Basis of the null space, deterministic (one vector per free column of
  /// the RREF, in increasing column order).
  std::vector<FqVec> kernel_basis() const;
  /// Particular solution of A x = b, or nullopt when inconsistent.
  std::optional<FqVec> solve(const FqVec& b) const;
  /// X with A X = B, or nullopt.
  std::optional<FqMatrix> solve_matrix(const FqMatrix& B) const;
  bool is_invertible() const;
  std::optional<FqMatrix> inverse() const;

  const std::vector<unsigned>& entries() const { return e_; }

private:
  unsigned inv_scalar(unsigned a) const;

  unsigned q_;
  int rows_, cols_;
  std::vector<unsigned> e_;
};

FqMatrix hstack(const FqMatrix& a, const FqMatrix& b);
FqMatrix vstack(const FqMatrix& a, const FqMatrix& b);

/// Matrix of a linear map between spaces of matrix tuples, assembled from
/// terms of the form  out_k += L * X_j * R.  Used for Hom-space constraint
/// systems, homotopy maps, cocycle conditions and the like.
class BlockLinMap {
public:
  BlockLinMap(unsigned q, std::vector<std::pair<int, int>> in_shapes,
              std::vector<std::pair<int, int>> out_shapes);

  /// out block ob += sign * L * X_{ib} * R. L cols must match X rows,
  /// R rows must match X cols.
  void add(int ob, int ib, const FqMatrix& L, const FqMatrix& R, int sign = 1);

  const FqMatrix& matrix() const { return mat_; }
  int in_dim() const { return in_dim_; }
  int out_dim() const { return out_dim_; }

  FqVec pack_in(const std::vector<FqMatrix>& xs) const;
  std::vector<FqMatrix> unpack_in(const FqVec& v) const;
  FqVec pack_out(const std::vector<FqMatrix>& ys) const;

private:
  unsigned q_;
  std::vector<std::pair<int, int>> in_shapes_, out_shapes_;
  std::vector<int> in_off_, out_off_;
  int in_dim_, out_dim_;
  FqMatrix mat_;
};

/// Iterates all q^k coefficient tuples; throws CapError when q^k > cap.
/// fn returns false to stop early; returns true if the walk was exhaustive.
bool for_each_combo(unsigned q, int k, unsigned long cap,
                    const std::function<bool(const FqVec&)>& fn);

}  // namespace hb
