#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace strongcolor::lp {

/// Row-major dense matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

enum class Status { Optimal, Unbounded, IterationLimit };

struct Options {
  double tolerance = 1e-9;
  /// Consecutive degenerate pivots before switching to Bland's rule.
  std::size_t stall_threshold = 500;
  std::size_t max_iterations = 200000;
  /// Pivots between recomputations of the basis inverse from scratch.
  std::size_t refactor_interval = 64;
};

struct Result {
  Status status = Status::Optimal;
  std::vector<double> x;      // structural values
  std::vector<double> duals;  // one multiplier per row, >= 0 at optimality
  double objective = 0.0;
  std::size_t iterations = 0;
  bool used_bland = false;
};

namespace detail {

// Gauss-Jordan inverse with partial pivoting; throws on a singular basis.
inline std::vector<std::vector<double>> invert(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<double>> inv(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (std::abs(a[piv][col]) < 1e-12) throw std::runtime_error("revised simplex: singular basis");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const double d = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0.0) continue;
      const double f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

}  // namespace detail

/// Revised simplex for   maximize c'x  subject to  Ax <= b, x >= 0,  b >= 0.
///
/// The all-slack basis is feasible, so no phase one is needed. The basis
/// inverse is kept explicitly and updated by elementary row operations.
/// Entering variable by largest reduced cost until stall_threshold
/// consecutive degenerate pivots, then Bland's smallest-index rule.
class RevisedSimplex {
 public:
  RevisedSimplex(const DenseMatrix& a, std::span<const double> b, std::span<const double> c, Options opt = {})
      : a_(a), b_(b.begin(), b.end()), c_(c.begin(), c.end()), opt_(opt), m_(a.rows()), n_(a.cols()) {
    if (b_.size() != m_ || c_.size() != n_) throw std::invalid_argument("revised simplex: dimension mismatch");
    for (double v : b_)
      if (v < 0.0) throw std::invalid_argument("revised simplex: right-hand side must be non-negative");
  }

  Result solve() {
    basis_.resize(m_);
    is_basic_.assign(n_ + m_, false);
    for (std::size_t i = 0; i < m_; ++i) {
      basis_[i] = n_ + i;
      is_basic_[n_ + i] = true;
    }
    binv_.assign(m_, std::vector<double>(m_, 0.0));
    for (std::size_t i = 0; i < m_; ++i) binv_[i][i] = 1.0;
    xb_ = b_;

    Result res;
    std::size_t stall = 0;
    bool bland = false;
    std::vector<double> pi(m_), u(m_);
    for (;;) {
      if (res.iterations >= opt_.max_iterations) {
        res.status = Status::IterationLimit;
        break;
      }
      multipliers(pi);
      const std::size_t entering = choose_entering(pi, bland);
      if (entering == kNone) {
        res.status = Status::Optimal;
        break;
      }
      transformed_column(entering, u);
      const std::size_t leave = choose_leaving(u, bland);
      if (leave == kNone) {
        res.status = Status::Unbounded;
        break;
      }
      const double step = xb_[leave] / u[leave];
      if (step <= opt_.tolerance) {
        if (++stall > opt_.stall_threshold) bland = true;
      } else {
        stall = 0;
      }
      pivot(entering, leave, u, step);
      ++res.iterations;
      if (res.iterations % opt_.refactor_interval == 0) refactor();
    }

    res.used_bland = bland;
    res.x.assign(n_, 0.0);
    res.objective = 0.0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) res.x[basis_[i]] = std::max(0.0, xb_[i]);
    }
    for (std::size_t j = 0; j < n_; ++j) res.objective += c_[j] * res.x[j];
    multipliers(pi);
    res.duals.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) res.duals[i] = std::max(0.0, pi[i]);
    return res;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  double cost(std::size_t var) const { return var < n_ ? c_[var] : 0.0; }

  // pi = c_B' B^-1
  void multipliers(std::vector<double>& pi) const {
    std::fill(pi.begin(), pi.end(), 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = cost(basis_[i]);
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j < m_; ++j) pi[j] += cb * binv_[i][j];
    }
  }

  double reduced_cost(std::size_t var, const std::vector<double>& pi) const {
    if (var >= n_) return -pi[var - n_];
    double d = c_[var];
    for (std::size_t i = 0; i < m_; ++i) d -= pi[i] * a_(i, var);
    return d;
  }

  std::size_t choose_entering(const std::vector<double>& pi, bool bland) const {
    std::size_t best = kNone;
    double best_d = opt_.tolerance;
    for (std::size_t var = 0; var < n_ + m_; ++var) {
      if (is_basic_[var]) continue;
      const double d = reduced_cost(var, pi);
      if (d <= opt_.tolerance) continue;
      if (bland) return var;
      if (d > best_d) {
        best_d = d;
        best = var;
      }
    }
    return best;
  }

  // u = B^-1 a_var
  void transformed_column(std::size_t var, std::vector<double>& u) const {
    for (std::size_t i = 0; i < m_; ++i) {
      if (var >= n_) {
        u[i] = binv_[i][var - n_];
      } else {
        double s = 0.0;
        for (std::size_t k = 0; k < m_; ++k) s += binv_[i][k] * a_(k, var);
        u[i] = s;
      }
    }
  }

  std::size_t choose_leaving(const std::vector<double>& u, bool bland) const {
    std::size_t best = kNone;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m_; ++i) {
      if (u[i] <= opt_.tolerance) continue;
      const double ratio = std::max(0.0, xb_[i]) / u[i];
      if (best == kNone || ratio < best_ratio - opt_.tolerance) {
        best = i;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + opt_.tolerance) {
        const bool prefer = bland ? basis_[i] < basis_[best] : u[i] > u[best];
        if (prefer) {
          best = i;
          best_ratio = std::min(best_ratio, ratio);
        }
      }
    }
    return best;
  }

  void pivot(std::size_t entering, std::size_t leave, const std::vector<double>& u, double step) {
    for (std::size_t i = 0; i < m_; ++i) xb_[i] = i == leave ? step : std::max(0.0, xb_[i] - step * u[i]);
    const double p = u[leave];
    for (std::size_t j = 0; j < m_; ++j) binv_[leave][j] /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == leave || u[i] == 0.0) continue;
      const double f = u[i];
      for (std::size_t j = 0; j < m_; ++j) binv_[i][j] -= f * binv_[leave][j];
    }
    is_basic_[basis_[leave]] = false;
    is_basic_[entering] = true;
    basis_[leave] = entering;
  }

  void refactor() {
    std::vector<std::vector<double>> bmat(m_, std::vector<double>(m_, 0.0));
    for (std::size_t col = 0; col < m_; ++col) {
      const std::size_t var = basis_[col];
      for (std::size_t r = 0; r < m_; ++r) bmat[r][col] = var < n_ ? a_(r, var) : (r == var - n_ ? 1.0 : 0.0);
    }
    binv_ = detail::invert(std::move(bmat));
    for (std::size_t i = 0; i < m_; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < m_; ++k) s += binv_[i][k] * b_[k];
      xb_[i] = std::max(0.0, s);
    }
  }

  const DenseMatrix& a_;
  std::vector<double> b_;
  std::vector<double> c_;
  Options opt_;
  std::size_t m_;
  std::size_t n_;
  std::vector<std::size_t> basis_;
  std::vector<bool> is_basic_;
  std::vector<std::vector<double>> binv_;
  std::vector<double> xb_;
};

inline Result maximize(const DenseMatrix& a, std::span<const double> b, std::span<const double> c, Options opt = {}) {
  return RevisedSimplex(a, b, c, opt).solve();
}

}  // namespace strongcolor::lp
