#pragma once

// First three cumulants of the entanglement potential H over the Haar
// ensemble, the structure functions f2, f3_0, f3_1 entering them, and the
// asymptotic constants obtained from the saddle-point equations.
//
// Every "exact" quantity is a big-integer rational; doubles appear only in
// the asymptotic estimates.

#include <string>

#include "mmes/exact.hpp"
#include "mmes/system.hpp"

namespace mmes {

// --- structure functions ----------------------------------------------

// f2 = 4 sum_{k,l} g(k,l)^2 over all mask pairs; n <= 12.
Rational f2_bitsum(SystemSize size);

// Distance-sum form 2 C(n,n_a)^{-1} sum_d C(n_a,d) C(n_abar,d) (2^{n-2d} + 4^d);
// exact for every n (integer powers keep it rational for odd n).
Rational f2_distance(SystemSize size);

// Triple-mask sums; n <= 8. Only pairwise-disjoint mask patterns contribute,
// so the walk is over 5^n terms rather than 8^n.
Rational f3_0_bitsum(SystemSize size);
Rational f3_1_bitsum(SystemSize size);

// Multinomial reductions, O(n^4) terms:
//   f3_0 = sum_s multinom(n; s0..s3) ghat(s1+s0,s2) ghat(s3+s0,s2) ghat(s1+s3,s2)
//   f3_1 = sum_s multinom(n; s0..s3) ghat(s1+s0,s2+s3) ghat(s2+s0,s1+s3) ghat(s3+s0,s1+s2)
// The weight counts mask triples by popcounts alone, so the identity holds
// for odd n as well; agreement with the bit sums is exact for all n <= 8.
Rational f3_0_reduced(SystemSize size);
Rational f3_1_reduced(SystemSize size);

struct StructureFunctions {
    SystemSize size;
    Rational f2;
    Rational f3_0;
    Rational f3_1;
};

StructureFunctions structure_functions(SystemSize size);

// --- exact cumulants ----------------------------------------------------

struct CumulantReport {
    SystemSize size;
    Rational mu;                 // (dim_a + dim_abar) / (dim + 1)
    Rational sigma_bar_sq;       // ((N+1) f2 - 2 (N_A+N_Abar)^2) / ((N+1)^2 (N+2) (N+3))
    Rational kappa3;
    Rational sigma_single_sq;    // variance of one fixed bipartition
    Rational sigma_bar_sq_ind;   // sigma_single_sq / C(n, n_a): independent-bipartition baseline
    StructureFunctions structure;
    double asymptotic_mu = 0.0;        // 2 / sqrt(N)
    double asymptotic_sigma_bar_sq = 0.0;  // 3 sqrt(2) N^-(4 - log2 3)
    double asymptotic_kappa3 = 0.0;    // 64 c N^-gamma
};

CumulantReport exact_cumulants(SystemSize size);

struct AsymptoticCumulants {
    double mu;
    double sigma_bar_sq;
    double kappa3;
    double kappa3_prefactor;  // 64 c, about 67.443
};

AsymptoticCumulants asymptotic_cumulants(SystemSize size);

// Exact cumulant formulas with the structure functions replaced by their
// asymptotic power laws. These are the curves whose deviation from the
// exact values oscillates in sign between even and odd n.
double sigma_bar_sq_substituted(SystemSize size);
double kappa3_substituted(SystemSize size);

// --- saddle-point constants ----------------------------------------------

struct AsymptoticConstants {
    double alpha = 0.0;           // log2(3) - 1
    double gamma = 0.0;           // 5 - S0* log2(e)
    double c = 0.0;               // f3_0 prefactor
    double sigma0_star = 0.0;
    double sigma_star = 0.0;
    double sigma_star_f31 = 0.0;  // symmetric saddle of f3_1, exactly 1/12
    double s0_star_f31 = 0.0;     // log(3/2); growth exponent alpha follows
    int newton_iterations = 0;
};

// Damped Newton on the symmetric saddle equations
//   (1 - s0 - 3s)(1 - 2 s0)^3 = 8 s0 (1 - s0 - 2s)^3
//   (1 - s0 - 3s)(1 - 4 s)^2  = 4 s  (1 - s0 - 2s)^2
// from the starting point (0.1, 0.1). Throws on non-convergence with the
// residuals in the message.
AsymptoticConstants solve_saddle_constants();

}  // namespace mmes
