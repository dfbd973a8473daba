#include "coverbound/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "coverbound/eigen_sym.hpp"

namespace coverbound {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::MaxIter: return "max_iter";
    case SolveStatus::UnboundedDetected: return "unbounded_detected";
  }
  return "unknown";
}

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

struct Csc {
  std::vector<std::size_t> col_ptr;
  std::vector<int> row;
  std::vector<double> val;
};

// Dense Cholesky, lower triangle of h (row-major n*n) replaced by L.
bool cholesky(int n, std::vector<double>& h) {
  for (int j = 0; j < n; ++j) {
    double d = h[static_cast<std::size_t>(j) * n + j];
    for (int k = 0; k < j; ++k) {
      double l = h[static_cast<std::size_t>(j) * n + k];
      d -= l * l;
    }
    if (d <= 0.0) return false;
    d = std::sqrt(d);
    h[static_cast<std::size_t>(j) * n + j] = d;
    for (int i = j + 1; i < n; ++i) {
      double s = h[static_cast<std::size_t>(i) * n + j];
      const double* ri = &h[static_cast<std::size_t>(i) * n];
      const double* rj = &h[static_cast<std::size_t>(j) * n];
      for (int k = 0; k < j; ++k) s -= ri[k] * rj[k];
      h[static_cast<std::size_t>(i) * n + j] = s / d;
    }
  }
  return true;
}

void chol_solve(int n, const std::vector<double>& l, std::vector<double>& x) {
  for (int i = 0; i < n; ++i) {
    double s = x[static_cast<std::size_t>(i)];
    const double* ri = &l[static_cast<std::size_t>(i) * n];
    for (int k = 0; k < i; ++k) s -= ri[k] * x[static_cast<std::size_t>(k)];
    x[static_cast<std::size_t>(i)] = s / ri[i];
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < n; ++k)
      s -= l[static_cast<std::size_t>(k) * n + i] * x[static_cast<std::size_t>(k)];
    x[static_cast<std::size_t>(i)] = s / l[static_cast<std::size_t>(i) * n + i];
  }
}

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

struct BlockLayout {
  int dim;
  std::size_t offset;      // start of this block's svec section
  std::size_t svec_size;   // dim*(dim+1)/2
  double f0_fro;           // ||F0||_F of the original block
};

}  // namespace

SdpSolution solve(const SdpProblem& p, const SolveOptions& opts) {
  validate(p);
  if (opts.tol <= 0 || opts.max_iter < 1 || opts.check_interval < 1 ||
      !(opts.rho > 0) || !(opts.over_relax > 0 && opts.over_relax < 2))
    throw std::invalid_argument("solve: bad options");
  auto t0 = std::chrono::steady_clock::now();

  const int nv = p.num_vars;
  const bool maximize = (p.sense == SdpProblem::Sense::Max);

  // Internal problem is a minimization.
  std::vector<double> c_int(p.objective);
  if (maximize)
    for (double& c : c_int) c = -c;

  // Diagonal rescaling: per-variable d_i evens out coefficient magnitudes,
  // per-block e_B tames the constant part, sigma the objective. Scaled data:
  // F'_i = e_B d_i F_i, F0' = e_B F0, c' = sigma d_i c_i. A y' solving the
  // scaled problem maps back via y_i = d_i y'_i; feasibility is unchanged
  // because each block is scaled by a positive factor.
  std::vector<double> dvar(static_cast<std::size_t>(nv), 1.0);
  std::vector<double> eblk(p.blocks.size(), 1.0);
  double sigma = 1.0;
  if (opts.scale) {
    std::vector<double> colmax(static_cast<std::size_t>(nv), 0.0);
    for (const LmiBlock& blk : p.blocks)
      for (const BlockTerm& t : blk.terms)
        colmax[static_cast<std::size_t>(t.var)] =
            std::max(colmax[static_cast<std::size_t>(t.var)], std::fabs(t.coeff));
    for (int i = 0; i < nv; ++i)
      if (colmax[static_cast<std::size_t>(i)] > 0)
        dvar[static_cast<std::size_t>(i)] = 1.0 / colmax[static_cast<std::size_t>(i)];
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      double m = p.blocks[b].constant.max_abs();
      for (const BlockTerm& t : p.blocks[b].terms)
        m = std::max(m, std::fabs(t.coeff) * dvar[static_cast<std::size_t>(t.var)]);
      if (m > 0) eblk[b] = 1.0 / m;
    }
    double cmax = 0.0;
    for (int i = 0; i < nv; ++i)
      cmax = std::max(cmax, std::fabs(c_int[static_cast<std::size_t>(i)]) *
                                dvar[static_cast<std::size_t>(i)]);
    if (cmax > 0) sigma = 1.0 / cmax;
  }

  // svec stacking: one section per block (sqrt(2) on off-diagonal entries so
  // inner products carry over), then one row per flagged variable.
  std::vector<BlockLayout> layout(p.blocks.size());
  std::size_t rows = 0;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    int d = p.blocks[b].dim;
    layout[b] = {d, rows, static_cast<std::size_t>(d) * (d + 1) / 2,
                 p.blocks[b].constant.frobenius_norm()};
    rows += layout[b].svec_size;
  }
  std::size_t flag_offset = rows;
  std::vector<int> flagged;
  for (int i = 0; i < nv; ++i)
    if (p.nonneg[static_cast<std::size_t>(i)]) flagged.push_back(i);
  rows += flagged.size();

  // Scaled constant vector g0 and the scaled coefficient matrix G in both
  // row and column forms.
  std::vector<double> g0(rows, 0.0);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const SymMatrix& f0 = p.blocks[b].constant;
    int d = layout[b].dim;
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        double w = (i == j) ? 1.0 : kSqrt2;
        g0[layout[b].offset + f0.pos(i, j)] = w * eblk[b] * f0(i, j);
      }
  }

  struct Triplet {
    std::size_t row;
    int var;
    double val;
  };
  std::vector<Triplet> trips;
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const LmiBlock& blk = p.blocks[b];
    const SymMatrix& f0 = blk.constant;
    for (const BlockTerm& t : blk.terms) {
      double w = (t.row == t.col) ? 1.0 : kSqrt2;
      double v = w * eblk[b] * dvar[static_cast<std::size_t>(t.var)] * t.coeff;
      if (v != 0.0) trips.push_back({layout[b].offset + f0.pos(t.row, t.col), t.var, v});
    }
  }
  for (std::size_t k = 0; k < flagged.size(); ++k)
    trips.push_back({flag_offset + k, flagged[k],
                     dvar[static_cast<std::size_t>(flagged[k])]});

  std::sort(trips.begin(), trips.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.var < b.var;
  });
  // Merge duplicates (same row, same var).
  {
    std::size_t out = 0;
    for (std::size_t i = 0; i < trips.size(); ++i) {
      if (out > 0 && trips[out - 1].row == trips[i].row &&
          trips[out - 1].var == trips[i].var) {
        trips[out - 1].val += trips[i].val;
      } else {
        trips[out++] = trips[i];
      }
    }
    trips.resize(out);
  }

  Csc csc;
  csc.col_ptr.assign(static_cast<std::size_t>(nv) + 1, 0);
  for (const Triplet& t : trips) ++csc.col_ptr[static_cast<std::size_t>(t.var) + 1];
  for (int i = 0; i < nv; ++i)
    csc.col_ptr[static_cast<std::size_t>(i) + 1] += csc.col_ptr[static_cast<std::size_t>(i)];
  csc.row.resize(trips.size());
  csc.val.resize(trips.size());
  {
    std::vector<std::size_t> fill(csc.col_ptr.begin(), csc.col_ptr.end() - 1);
    for (const Triplet& t : trips) {
      std::size_t at = fill[static_cast<std::size_t>(t.var)]++;
      csc.row[at] = static_cast<int>(t.row);
      csc.val[at] = t.val;
    }
  }

  // Normal matrix H = G^T G, dense, factored once. Accumulated row by row:
  // triplets are row-sorted, so each row's entries are contiguous.
  std::vector<double> chol;
  bool have_chol = false;
  if (nv > 0) {
    std::vector<double> h(static_cast<std::size_t>(nv) * nv, 0.0);
    std::size_t i = 0;
    while (i < trips.size()) {
      std::size_t j = i;
      while (j < trips.size() && trips[j].row == trips[i].row) ++j;
      for (std::size_t a = i; a < j; ++a)
        for (std::size_t b = a; b < j; ++b) {
          h[static_cast<std::size_t>(trips[a].var) * nv + trips[b].var] +=
              trips[a].val * trips[b].val;
          if (trips[a].var != trips[b].var)
            h[static_cast<std::size_t>(trips[b].var) * nv + trips[a].var] +=
                trips[a].val * trips[b].val;
        }
      i = j;
    }
    double maxdiag = 0.0;
    for (int d = 0; d < nv; ++d)
      maxdiag = std::max(maxdiag, h[static_cast<std::size_t>(d) * nv + d]);
    if (maxdiag == 0.0) maxdiag = 1.0;
    double ridge = 0.0;
    for (int attempt = 0; attempt < 4; ++attempt) {
      chol = h;
      if (ridge > 0)
        for (int d = 0; d < nv; ++d) chol[static_cast<std::size_t>(d) * nv + d] += ridge;
      if (cholesky(nv, chol)) {
        have_chol = true;
        break;
      }
      ridge = (ridge == 0.0) ? 1e-12 * maxdiag : ridge * 100.0;
    }
    if (!have_chol)
      throw std::runtime_error("solve: normal matrix factorization failed");
  }

  std::vector<double> c_scaled(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i)
    c_scaled[static_cast<std::size_t>(i)] =
        sigma * dvar[static_cast<std::size_t>(i)] * c_int[static_cast<std::size_t>(i)];
  double c_norm = norm2(c_scaled);

  // Iteration state.
  std::vector<double> y(static_cast<std::size_t>(nv), 0.0);
  std::vector<double> u(rows, 0.0), uhat(rows, 0.0), z(rows, 0.0), w(rows, 0.0);
  std::vector<double> rhs(static_cast<std::size_t>(nv));
  std::vector<double> dres(static_cast<std::size_t>(nv));

  int max_block_dim = 1;
  for (const auto& l : layout) max_block_dim = std::max(max_block_dim, l.dim);
  EigenWorkspace ews;
  std::vector<double> dense(static_cast<std::size_t>(max_block_dim) * max_block_dim);
  std::vector<double> evals(static_cast<std::size_t>(max_block_dim));
  std::vector<double> evecs(static_cast<std::size_t>(max_block_dim) * max_block_dim);

  double rho = opts.rho;
  const double alpha = opts.over_relax;

  SdpSolution sol;
  sol.y.assign(static_cast<std::size_t>(nv), 0.0);

  // Certificate in the original (unscaled) problem. Returns the certified
  // lower bound for the internal minimization; fills primal measures.
  std::vector<double> y_orig(static_cast<std::size_t>(nv));
  std::vector<SymMatrix> zcert;
  zcert.reserve(p.blocks.size());
  for (const LmiBlock& blk : p.blocks) zcert.emplace_back(blk.dim);

  auto certificate = [&](double& obj_min, double& lower, double& infeas_norm,
                         bool& box_exact) {
    for (int i = 0; i < nv; ++i)
      y_orig[static_cast<std::size_t>(i)] =
          dvar[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    obj_min = 0.0;
    for (int i = 0; i < nv; ++i)
      obj_min += c_int[static_cast<std::size_t>(i)] * y_orig[static_cast<std::size_t>(i)];

    // Primal slack, normalized per block.
    infeas_norm = 0.0;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      SymMatrix s = evaluate_block(p.blocks[b], y_orig);
      int d = s.dim();
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          dense[static_cast<std::size_t>(i) * d + j] = s(i, j);
      sym_eigen_inplace(d, dense.data(), evals.data(), evecs.data(), ews);
      double viol = std::max(0.0, -evals[0]) / (1.0 + layout[b].f0_fro);
      infeas_norm = std::max(infeas_norm, viol);
    }
    for (int i : flagged)
      infeas_norm = std::max(infeas_norm, -std::min(0.0, y_orig[static_cast<std::size_t>(i)]));

    // Dual candidate: unsvec of -rho*w per block, unscaled, clipped PSD.
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      int d = layout[b].dim;
      double unscale = eblk[b] / sigma;
      const SymMatrix& f0 = p.blocks[b].constant;
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
          double v = -rho * w[layout[b].offset + f0.pos(i, j)] * unscale;
          if (i != j) v /= kSqrt2;
          dense[static_cast<std::size_t>(i) * d + j] = v;
          dense[static_cast<std::size_t>(j) * d + i] = v;
        }
      psd_clip_inplace(d, dense.data(), evals.data(), evecs.data(), ews);
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
          zcert[b].set(i, j, dense[static_cast<std::size_t>(i) * d + j]);
    }

    double base = 0.0;
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      const SymMatrix& f0 = p.blocks[b].constant;
      int d = f0.dim();
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j)
          base -= zcert[b](i, j) * f0(i, j) * (i == j ? 1.0 : 2.0);
    }

    box_exact = (p.optimum_box > 0.0);
    double box = box_exact ? p.optimum_box : 1.0;
    if (!box_exact) {
      for (int i = 0; i < nv; ++i)
        box = std::max(box, 2.0 * std::fabs(y_orig[static_cast<std::size_t>(i)]));
    }

    // eta_i = c_i - sum_B <Z_B, F_i^B>; the residual each variable's dual
    // equality leaves, charged against the box below.
    lower = base;
    for (int i = 0; i < nv; ++i)
      dres[static_cast<std::size_t>(i)] = c_int[static_cast<std::size_t>(i)];
    for (std::size_t b = 0; b < p.blocks.size(); ++b)
      for (const BlockTerm& t : p.blocks[b].terms)
        dres[static_cast<std::size_t>(t.var)] -=
            zcert[b](t.row, t.col) * t.coeff * (t.row == t.col ? 1.0 : 2.0);
    for (int i = 0; i < nv; ++i) {
      double eta = dres[static_cast<std::size_t>(i)];
      if (p.nonneg[static_cast<std::size_t>(i)])
        lower += std::min(0.0, eta) * box;
      else
        lower -= std::fabs(eta) * box;
    }
  };

  auto finish = [&](SolveStatus status, long iters) {
    double obj_min, lower, infeas;
    bool box_exact;
    certificate(obj_min, lower, infeas, box_exact);
    sol.status = status;
    sol.iterations = iters;
    sol.y = y_orig;
    sol.primal_infeas = infeas;
    sol.dual_gap_bound = std::max(0.0, obj_min - lower);
    sol.certificate_from_box = box_exact;
    if (maximize) {
      sol.objective = -obj_min;
      sol.dual_objective = -lower;
    } else {
      sol.objective = obj_min;
      sol.dual_objective = lower;
    }
    sol.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return sol;
  };

  long iter = 0;
  int stall_count = 0;
  double best_gap = std::numeric_limits<double>::infinity();
  double prev_abs_obj = 0.0;
  int diverge_count = 0;

  while (iter < opts.max_iter) {
    ++iter;

    // Affine step: y = argmin c'y + (rho/2)||Gy + g0 - z + w||^2.
    if (nv > 0) {
      for (int i = 0; i < nv; ++i)
        rhs[static_cast<std::size_t>(i)] = -c_scaled[static_cast<std::size_t>(i)] / rho;
      for (int i = 0; i < nv; ++i) {
        double acc = 0.0;
        for (std::size_t k = csc.col_ptr[static_cast<std::size_t>(i)];
             k < csc.col_ptr[static_cast<std::size_t>(i) + 1]; ++k) {
          std::size_t r = static_cast<std::size_t>(csc.row[k]);
          acc += csc.val[k] * (z[r] - w[r] - g0[r]);
        }
        rhs[static_cast<std::size_t>(i)] += acc;
      }
      y = rhs;
      chol_solve(nv, chol, y);
    }

    // u = Gy + g0, relaxed toward the previous z.
    std::copy(g0.begin(), g0.end(), u.begin());
    for (int i = 0; i < nv; ++i) {
      double yi = y[static_cast<std::size_t>(i)];
      if (yi == 0.0) continue;
      for (std::size_t k = csc.col_ptr[static_cast<std::size_t>(i)];
           k < csc.col_ptr[static_cast<std::size_t>(i) + 1]; ++k)
        u[static_cast<std::size_t>(csc.row[k])] += csc.val[k] * yi;
    }
    for (std::size_t r = 0; r < rows; ++r)
      uhat[r] = alpha * u[r] + (1.0 - alpha) * z[r];

    // Cone projection of uhat + w.
    for (std::size_t b = 0; b < layout.size(); ++b) {
      int d = layout[b].dim;
      const SymMatrix& f0 = p.blocks[b].constant;
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
          std::size_t r = layout[b].offset + f0.pos(i, j);
          double v = uhat[r] + w[r];
          if (i != j) v /= kSqrt2;
          dense[static_cast<std::size_t>(i) * d + j] = v;
          dense[static_cast<std::size_t>(j) * d + i] = v;
        }
      psd_clip_inplace(d, dense.data(), evals.data(), evecs.data(), ews);
      for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
          std::size_t r = layout[b].offset + f0.pos(i, j);
          double v = dense[static_cast<std::size_t>(i) * d + j];
          z[r] = (i == j) ? v : v * kSqrt2;
        }
    }
    for (std::size_t k = 0; k < flagged.size(); ++k) {
      std::size_t r = flag_offset + k;
      z[r] = std::max(0.0, uhat[r] + w[r]);
    }

    for (std::size_t r = 0; r < rows; ++r) w[r] += uhat[r] - z[r];

    if (iter % opts.check_interval != 0 && iter != opts.max_iter) continue;

    // Scaled residuals: primal ||u - z||, dual feasibility of -rho*w.
    double rnorm = 0.0, unorm = 0.0, znorm = 0.0;
    for (std::size_t r = 0; r < rows; ++r) {
      double d = u[r] - z[r];
      rnorm += d * d;
      unorm += u[r] * u[r];
      znorm += z[r] * z[r];
    }
    rnorm = std::sqrt(rnorm);
    unorm = std::sqrt(unorm);
    znorm = std::sqrt(znorm);
    double snorm = 0.0;
    for (int i = 0; i < nv; ++i) {
      double acc = 0.0;
      for (std::size_t k = csc.col_ptr[static_cast<std::size_t>(i)];
           k < csc.col_ptr[static_cast<std::size_t>(i) + 1]; ++k)
        acc += csc.val[k] * w[static_cast<std::size_t>(csc.row[k])];
      double g = -rho * acc - c_scaled[static_cast<std::size_t>(i)];
      dres[static_cast<std::size_t>(i)] = g;
      snorm += g * g;
    }
    snorm = std::sqrt(snorm);
    double r_scaled = rnorm / (1.0 + std::max(unorm, znorm));
    double s_scaled = snorm / (1.0 + c_norm);

    // Divergence probe on the scaled objective.
    double sobj = 0.0;
    for (int i = 0; i < nv; ++i)
      sobj += c_scaled[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    if (std::fabs(sobj) > 1e12 && std::fabs(sobj) > prev_abs_obj) {
      if (++diverge_count >= 5) return finish(SolveStatus::UnboundedDetected, iter);
    } else {
      diverge_count = 0;
    }
    prev_abs_obj = std::fabs(sobj);

    if (r_scaled <= opts.tol && s_scaled <= opts.tol) {
      double obj_min, lower, infeas;
      bool box_exact;
      certificate(obj_min, lower, infeas, box_exact);
      double gap = std::max(0.0, obj_min - lower);
      bool slack_ok = infeas <= opts.tol;
      if (slack_ok && gap <= opts.tol) return finish(SolveStatus::Optimal, iter);
      if (gap < best_gap * (1.0 - 1e-3)) {
        best_gap = gap;
        stall_count = 0;
      } else if (++stall_count >= opts.stall_attempts) {
        return finish(SolveStatus::MaxIter, iter);
      }
    }

    // Residual balancing; only c/rho enters the affine step, so no
    // refactorization. w is the scaled dual, so it rescales inversely.
    if (iter % 100 == 0) {
      if (rnorm > 10.0 * snorm && rho < 1e6) {
        rho *= 2.0;
        for (double& x : w) x *= 0.5;
      } else if (snorm > 10.0 * rnorm && rho > 1e-6) {
        rho *= 0.5;
        for (double& x : w) x *= 2.0;
      }
    }
  }
  return finish(SolveStatus::MaxIter, opts.max_iter);
}

}  // namespace coverbound
