#pragma once

#include "finitefield.hpp"
#include "matrix.hpp"
#include "numfield.hpp"

namespace latbend {

using FMat = Mat<FElem>;

// Irreducible n-dimensional representation of (G)L2 on homogeneous
// polynomials in the basis X^{n-1}, X^{n-2}Y, ..., Y^{n-1}.
FMat tau(int n, const FMat& M);

// Invariant antidiagonal pairing: entry (i, n+1-i) = (-1)^{i-1}(n-i)!(i-1)!
// (1-indexed), symmetric for odd n and antisymmetric for even n.
FMat j_form(int n);

// tau_n(M)^T J_n tau_n(M) == J_n, exactly (expects det M = 1).
bool check_invariance(int n, const FMat& M);

// Integer coefficients of Phi_n, lowest degree first; deg = n-1 and
// Tr tau_n(M) = Phi_n(Tr M) on SL2.
std::vector<Int> trace_poly(int n);

FElem phi_eval(int n, const FElem& t);
Fq phi_eval_fq(int n, const Fq& t);

}  // namespace latbend
