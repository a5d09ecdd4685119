#pragma once

#include "dkp/complex_matrix.hpp"

namespace dkp {

/// Minkowski metric diag(+1, -1, -1, -1).
int metric(int a, int b);

/// beta^a in the cyclic basis, a in 0..3. Throws InvalidArgument otherwise.
ComplexMatrix10 build_beta(int a);

/// J^{12} = beta^1 beta^2 - beta^2 beta^1.
ComplexMatrix10 build_J12();

/// S_3 = blockdiag(0, tau_3, tau_3, tau_3).
ComplexMatrix10 build_S3();

/// beta^a beta^b beta^c + beta^c beta^b beta^a == eta^{bc} beta^a + eta^{ba} beta^c
/// entrywise within `tol`.
bool verify_trilinear(int a, int b, int c, double tol = 1e-14);

}  // namespace dkp
