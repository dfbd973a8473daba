#pragma once

#include <vector>

#include "coverbound/sym_matrix.hpp"

namespace coverbound {

struct EigenDecomposition {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // row-major; column k is the eigenvector of values[k]
};

// Scratch buffers reused across calls of the in-place routines.
struct EigenWorkspace {
  std::vector<double> b, z, e, col, vtmp;
  std::vector<int> perm;
  void resize(int dim);
};

// Full symmetric eigendecomposition. a: row-major dim*dim, symmetric,
// destroyed. On return w[0..dim) holds ascending eigenvalues and q (row-major)
// the corresponding orthonormal columns. Cyclic Jacobi up to dim 64,
// Householder tridiagonalization + implicit QL with shifts above; dim capped
// at 5000. Throws on non-finite input or (never seen in practice) no
// convergence.
void sym_eigen_inplace(int dim, double* a, double* w, double* q, EigenWorkspace& ws);

// Overwrites a (row-major, symmetric, both triangles) with its projection
// onto the PSD cone; w and q receive the eigensystem of the input. Returns
// the number of strictly positive eigenvalues kept.
int psd_clip_inplace(int dim, double* a, double* w, double* q, EigenWorkspace& ws);

EigenDecomposition sym_eigen(const SymMatrix& m);
SymMatrix psd_project(const SymMatrix& m);
double min_eigenvalue(const SymMatrix& m);

}  // namespace coverbound
