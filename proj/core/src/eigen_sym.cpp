#include "coverbound/eigen_sym.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace coverbound {

void EigenWorkspace::resize(int dim) {
  std::size_t d = static_cast<std::size_t>(dim);
  if (b.size() < d) {
    b.resize(d);
    z.resize(d);
    e.resize(d);
    col.resize(d);
    perm.resize(dim);
  }
  if (vtmp.size() < d * d) vtmp.resize(d * d);
}

namespace {

constexpr int kJacobiMaxDim = 64;
constexpr int kMaxDim = 5000;

inline void rotate(double* m, int n, int i, int j, int k, int l, double s, double tau) {
  double g = m[static_cast<std::size_t>(i) * n + j];
  double h = m[static_cast<std::size_t>(k) * n + l];
  m[static_cast<std::size_t>(i) * n + j] = g - s * (h + g * tau);
  m[static_cast<std::size_t>(k) * n + l] = h + s * (g - h * tau);
}

// Cyclic Jacobi with the classic threshold schedule. a: row-major, only the
// upper triangle is referenced/updated. Eigenvalues into d, eigenvector
// columns accumulated into v (initialized to identity here).
void jacobi(int n, double* a, double* d, double* v, EigenWorkspace& ws) {
  double* b = ws.b.data();
  double* z = ws.z.data();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(i) * n + j] = (i == j) ? 1.0 : 0.0;
  for (int i = 0; i < n; ++i) {
    b[i] = d[i] = a[static_cast<std::size_t>(i) * n + i];
    z[i] = 0.0;
  }
  for (int sweep = 1; sweep <= 100; ++sweep) {
    double sm = 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) sm += std::fabs(a[static_cast<std::size_t>(p) * n + q]);
    if (sm == 0.0) return;
    double tresh = (sweep < 4) ? 0.2 * sm / (static_cast<double>(n) * n) : 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double& apq = a[static_cast<std::size_t>(p) * n + q];
        double g = 100.0 * std::fabs(apq);
        if (sweep > 4 && std::fabs(d[p]) + g == std::fabs(d[p]) &&
            std::fabs(d[q]) + g == std::fabs(d[q])) {
          apq = 0.0;
        } else if (std::fabs(apq) > tresh) {
          double h = d[q] - d[p];
          double t;
          if (std::fabs(h) + g == std::fabs(h)) {
            t = apq / h;
          } else {
            double theta = 0.5 * h / apq;
            t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
            if (theta < 0.0) t = -t;
          }
          double c = 1.0 / std::sqrt(1.0 + t * t);
          double s = t * c;
          double tau = s / (1.0 + c);
          h = t * apq;
          z[p] -= h;
          z[q] += h;
          d[p] -= h;
          d[q] += h;
          apq = 0.0;
          for (int j = 0; j <= p - 1; ++j) rotate(a, n, j, p, j, q, s, tau);
          for (int j = p + 1; j <= q - 1; ++j) rotate(a, n, p, j, j, q, s, tau);
          for (int j = q + 1; j < n; ++j) rotate(a, n, p, j, q, j, s, tau);
          for (int j = 0; j < n; ++j) rotate(v, n, j, p, j, q, s, tau);
        }
      }
    }
    for (int i = 0; i < n; ++i) {
      b[i] += z[i];
      d[i] = b[i];
      z[i] = 0.0;
    }
  }
  throw std::runtime_error("jacobi: no convergence in 100 sweeps");
}

// Householder reduction to tridiagonal form with accumulated transform.
// On return a holds the orthogonal matrix, d the diagonal, e the subdiagonal
// (e[0] = 0).
void tred2(int n, double* a, double* d, double* e) {
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = n - 1; i >= 1; --i) {
    int l = i - 1;
    double h = 0.0, scale = 0.0;
    if (l > 0) {
      for (int k = 0; k <= l; ++k) scale += std::fabs(A(i, k));
      if (scale == 0.0) {
        e[i] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = (f >= 0.0) ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          A(j, i) = A(i, j) / h;
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
          e[j] = g / h;
          f += e[j] * A(i, j);
        }
        double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = A(i, j);
          double gg = e[j] - hh * f;
          e[j] = gg;
          for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + gg * A(i, k);
        }
      }
    } else {
      e[i] = A(i, l);
    }
    d[i] = h;
  }
  d[0] = 0.0;
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) {
    int l = i - 1;
    if (d[i] != 0.0) {
      for (int j = 0; j <= l; ++j) {
        double g = 0.0;
        for (int k = 0; k <= l; ++k) g += A(i, k) * A(k, j);
        for (int k = 0; k <= l; ++k) A(k, j) -= g * A(k, i);
      }
    }
    d[i] = A(i, i);
    A(i, i) = 1.0;
    for (int j = 0; j <= l; ++j) A(j, i) = A(i, j) = 0.0;
  }
}

// Implicit QL with Wilkinson shifts on the tridiagonal (d, e), rotations
// applied to the columns of z.
void tqli(int n, double* d, double* e, double* z) {
  auto Z = [&](int i, int j) -> double& { return z[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= DBL_EPSILON * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("tqli: no convergence in 60 iterations");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          for (int k = 0; k < n; ++k) {
            f = Z(k, i + 1);
            Z(k, i + 1) = s * Z(k, i) + c * f;
            Z(k, i) = c * Z(k, i) - s * f;
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

void sym_eigen_inplace(int dim, double* a, double* w, double* q, EigenWorkspace& ws) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("sym_eigen: dimension in [1,5000]");
  std::size_t total = static_cast<std::size_t>(dim) * dim;
  for (std::size_t i = 0; i < total; ++i)
    if (!std::isfinite(a[i])) throw std::invalid_argument("sym_eigen: non-finite entry");
  ws.resize(dim);
  if (dim == 1) {
    w[0] = a[0];
    q[0] = 1.0;
    return;
  }
  if (dim <= kJacobiMaxDim) {
    jacobi(dim, a, w, ws.vtmp.data(), ws);
  } else {
    tred2(dim, a, w, ws.e.data());
    tqli(dim, w, ws.e.data(), a);
    std::copy(a, a + total, ws.vtmp.begin());
  }
  // Ascending sort, applied to the eigenvector columns.
  int* perm = ws.perm.data();
  std::iota(perm, perm + dim, 0);
  std::sort(perm, perm + dim, [&](int x, int y) { return w[x] < w[y]; });
  double* vals = ws.b.data();
  for (int k = 0; k < dim; ++k) vals[k] = w[perm[k]];
  std::copy(vals, vals + dim, w);
  const double* v = ws.vtmp.data();
  for (int i = 0; i < dim; ++i) {
    const double* vrow = v + static_cast<std::size_t>(i) * dim;
    double* qrow = q + static_cast<std::size_t>(i) * dim;
    for (int k = 0; k < dim; ++k) qrow[k] = vrow[perm[k]];
  }
}

int psd_clip_inplace(int dim, double* a, double* w, double* q, EigenWorkspace& ws) {
  sym_eigen_inplace(dim, a, w, q, ws);
  std::size_t total = static_cast<std::size_t>(dim) * dim;
  for (std::size_t i = 0; i < total; ++i) a[i] = 0.0;
  int kept = 0;
  double* col = ws.col.data();
  for (int k = dim - 1; k >= 0; --k) {
    if (!(w[k] > 0.0)) break;  // ascending order: the tail holds the positives
    ++kept;
    double s = std::sqrt(w[k]);
    for (int i = 0; i < dim; ++i) col[i] = s * q[static_cast<std::size_t>(i) * dim + k];
    for (int i = 0; i < dim; ++i) {
      double ci = col[i];
      if (ci == 0.0) continue;
      double* arow = a + static_cast<std::size_t>(i) * dim;
      for (int j = i; j < dim; ++j) arow[j] += ci * col[j];
    }
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < i; ++j)
      a[static_cast<std::size_t>(i) * dim + j] = a[static_cast<std::size_t>(j) * dim + i];
  return kept;
}

namespace {

EigenDecomposition eigen_of_dense(int dim, std::vector<double> dense) {
  EigenWorkspace ws;
  EigenDecomposition out;
  out.values.resize(dim);
  out.vectors.resize(static_cast<std::size_t>(dim) * dim);
  sym_eigen_inplace(dim, dense.data(), out.values.data(), out.vectors.data(), ws);
  return out;
}

}  // namespace

EigenDecomposition sym_eigen(const SymMatrix& m) { return eigen_of_dense(m.dim(), m.dense()); }

SymMatrix psd_project(const SymMatrix& m) {
  int dim = m.dim();
  std::vector<double> dense = m.dense();
  std::vector<double> w(dim), q(static_cast<std::size_t>(dim) * dim);
  EigenWorkspace ws;
  psd_clip_inplace(dim, dense.data(), w.data(), q.data(), ws);
  SymMatrix out(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) out.set(i, j, dense[static_cast<std::size_t>(i) * dim + j]);
  return out;
}

double min_eigenvalue(const SymMatrix& m) {
  return eigen_of_dense(m.dim(), m.dense()).values.front();
}

}  // namespace coverbound
