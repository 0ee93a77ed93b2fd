#pragma once

// Eigendecomposition of real symmetric tridiagonal matrices by the implicit
// QL algorithm with Wilkinson-type shifts (the tql1/tql2 scheme of the
// Handbook/EISPACK, rewritten for Eigen storage). Eigenvalues are returned in
// ascending order; eigenvectors are the columns of `modes`.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "curvchain/errors.hpp"
#include "curvchain/metric.hpp"

namespace curvchain {

/// Single-particle matrix of the hopping Hamiltonian. The sign convention is
/// that of the Hamiltonian itself: off-diagonal entries are -J_m, so its
/// eigenvalues are the single-body energies and the bonding orbital of a
/// 2-site chain has energy -J.
struct HoppingMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;

  static HoppingMatrix from_profile(const HoppingProfile& profile) {
    HoppingMatrix T;
    T.diag.assign(static_cast<std::size_t>(profile.sites()), 0.0);
    T.offdiag.reserve(profile.hoppings().size());
    for (double J : profile.hoppings()) T.offdiag.push_back(-J);
    return T;
  }

  int size() const { return static_cast<int>(diag.size()); }

  Eigen::MatrixXd dense() const {
    const auto n = static_cast<Eigen::Index>(diag.size());
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) M(i, i) = diag[static_cast<std::size_t>(i)];
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      M(i, i + 1) = M(i + 1, i) = offdiag[static_cast<std::size_t>(i)];
    }
    return M;
  }
};

struct Spectrum {
  Eigen::VectorXd energies;  // ascending
  Eigen::MatrixXd modes;     // column k is the mode with energy energies(k)

  int size() const { return static_cast<int>(energies.size()); }
};

namespace detail {

inline constexpr int kMaxSweepsPerEigenvalue = 60;

// Implicit QL on (d, e) in place. On return d holds the (unsorted)
// eigenvalues. If `Z` is non-null, the plane rotations are accumulated into
// its columns. Throws numerical_failure if one eigenvalue needs more than
// `max_sweeps` QL sweeps.
inline void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e,
                           Eigen::MatrixXd* Z, int max_sweeps = kMaxSweepsPerEigenvalue) {
  const std::size_t n = d.size();
  if (n == 0) return;
  e.resize(n, 0.0);
  e[n - 1] = 0.0;

  const double eps = std::numeric_limits<double>::epsilon();
  const Eigen::Index rows = Z ? Z->rows() : 0;
  double shift_total = 0.0;
  double scale = 0.0;

  for (std::size_t l = 0; l < n; ++l) {
    scale = std::max(scale, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n && std::abs(e[m]) > eps * scale) ++m;
    if (m == n) m = n - 1;

    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > max_sweeps) {
          throw numerical_failure(
              "tridiagonal QL did not converge for eigenvalue " + std::to_string(l), l);
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        shift_total += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          if (Z) {
            double* zi = Z->col(static_cast<Eigen::Index>(ii)).data();
            double* zi1 = Z->col(static_cast<Eigen::Index>(ii + 1)).data();
            for (Eigen::Index k = 0; k < rows; ++k) {
              const double t = zi1[k];
              zi1[k] = s * zi[k] + c * t;
              zi[k] = c * zi[k] - s * t;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * scale);
    }
    d[l] += shift_total;
    e[l] = 0.0;
  }
}

inline void check_input(const HoppingMatrix& T) {
  if (T.size() < 2) throw range_error("eigendecompose needs N >= 2");
  if (T.offdiag.size() + 1 != T.diag.size()) {
    throw range_error("off-diagonal length must be N-1");
  }
}

}  // namespace detail

/// Eigenvalues only, ascending. Same arithmetic as eigendecompose, so the two
/// agree bitwise.
inline std::vector<double> eigenvalues(const HoppingMatrix& T) {
  detail::check_input(T);
  std::vector<double> d = T.diag;
  std::vector<double> e = T.offdiag;
  detail::tridiagonal_ql(d, e, nullptr);
  std::sort(d.begin(), d.end());
  return d;
}

/// Full eigendecomposition. Each column is normalized and signed so that its
/// first significant component (|u_i| > 1e-10 max|u|) is positive.
inline Spectrum eigendecompose(const HoppingMatrix& T) {
  detail::check_input(T);
  const auto n = static_cast<Eigen::Index>(T.size());
  std::vector<double> d = T.diag;
  std::vector<double> e = T.offdiag;
  Eigen::MatrixXd Z = Eigen::MatrixXd::Identity(n, n);
  detail::tridiagonal_ql(d, e, &Z);

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return d[static_cast<std::size_t>(x)] < d[static_cast<std::size_t>(y)];
  });

  Spectrum out;
  out.energies.resize(n);
  out.modes.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.energies(k) = d[static_cast<std::size_t>(src)];
    auto col = out.modes.col(k);
    col = Z.col(src);
    col.normalize();
    const double cutoff = 1e-10 * col.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < n; ++i) {
      if (std::abs(col(i)) > cutoff) {
        if (col(i) < 0) col = -col;
        break;
      }
    }
  }
  return out;
}

inline Spectrum eigendecompose(const HoppingProfile& profile) {
  return eigendecompose(HoppingMatrix::from_profile(profile));
}

}  // namespace curvchain
