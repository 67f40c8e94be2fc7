#pragma once

#include <vector>

#include "umbral/multipoly.hpp"
#include "umbral/partition.hpp"
#include "umbral/rational.hpp"
#include "umbral/report.hpp"

namespace umbral {

enum class Algebra { gl, o, sp };

struct HighestWeight {
    Algebra alg;
    int N;             // matrix size of the Lie algebra
    Partition lambda;  // depth <= N for gl, <= floor(N/2) for o and sp
};

// The rho-shifted label sequence of length N used by the eigenvalue
// formulas: gl: l_i = lambda_i + N - i; o: l_i = lambda_i + (N-2i)/2 for
// i <= n (half-integers when N is odd), with a middle zero for odd N and
// the mirrored negatives; sp: l_i = lambda_i + n + 1 - i and the mirror.
std::vector<Rational> l_sequence(const HighestWeight& hw);

// Explicit summation formulas over index tuples (symbolic in x_1..x_N).
MultiPoly explicit_e_forward(int k, int N);                  // increasing tuples
MultiPoly explicit_h_forward(int k, int N);                  // weakly increasing tuples
MultiPoly explicit_e_central(int k, int N, bool mirrored);   // two displayed forms
MultiPoly explicit_hstar_central(int k, int N, bool mirrored);

enum class GlKind { C, D };  // column-determinant / column-permanent family

// Scalars by which the Capelli-type central elements act on the irreducible
// representation with highest weight hw (exact rationals).
Rational eigen_gl(const HighestWeight& hw, int k, const Rational& u, GlKind kind);
Rational eigen_o(const HighestWeight& hw, int k, const Rational& u);
Rational eigen_sp(const HighestWeight& hw, int k, const Rational& u);

// s_mu(x | a) = det((x_j|a)^{mu_i + n - i}) / det((x_j|a)^{n-i}) with
// (x|a)^k = (x - a_1)...(x - a_k), evaluated at pairwise distinct points.
Rational gen_factorial_schur(const Partition& mu, const std::vector<Rational>& x,
                             const std::vector<Rational>& a);

enum class TStarType { B, C, D };

// Shifted-symmetric analogues for types B/C/D: the generalized factorial
// Schur function at squared rho-shifted arguments with the type's squared
// offset sequence.
Rational t_star(TStarType type, const Partition& mu, const Partition& lambda, int n);

// Explicit sums against the determinant-ratio definitions, k <= N <= nmax,
// including the agreement of the two mirrored central-difference forms.
std::vector<VerificationReport> verify_explicit_sums(int nmax);

// eigen_gl with k = N against the product scalar prod_i (lambda_i - u + N - i).
std::vector<VerificationReport> verify_gl_consistency(int nmax, int box);

// The seven bridge identities between central-difference e/h/h* values at
// mirrored points and generalized factorial Schur values. The even-degree
// functions carry the identity (with an alternating sign on the e-side and
// halved indices); odd-degree values vanish at mirrored points.
std::vector<VerificationReport> verify_bridge_identities(int n, int kmax,
                                                         const std::vector<Rational>& l);

// Capelli eigenvalues at u = 0 against t* values for types B, C, D.
std::vector<VerificationReport> verify_thm86(int nmax, int kmax, int box);

}  // namespace umbral
