#pragma once

#include <string>
#include <vector>

#include "srt/laurent.hpp"
#include "srt/partitions.hpp"

namespace srt {

// Highest weight of an irreducible rational representation. GL_n: n weakly
// decreasing integers, possibly negative. Sp_n (n even): n/2 weakly
// decreasing nonnegative integers.
struct DominantWeight {
    GroupType group;
    std::vector<int> entries;

    bool operator==(const DominantWeight&) const = default;
    bool operator<(const DominantWeight& o) const {
        if (group.param != o.group.param) return group.param < o.group.param;
        if (group.kind != o.group.kind) return group.kind < o.group.kind;
        return entries < o.entries;
    }
};

DominantWeight gl_weight(int n, std::vector<int> entries);
DominantWeight sp_weight(int n, std::vector<int> entries);

// Hard size caps for the combinatorial operations; exceeding one raises
// ResourceLimit. Defaults are desk scale.
struct RepLimits {
    int ctRank = 4;      // host rank bound for constant-term extraction
    int ctWeight = 6;    // sum |lambda_i| bound for constant-term extraction
    int cauchySize = 4;  // bound on n and m''
    int cauchyDegree = 6;
    int ksRank = 3;
    int ksWeight = 5;
};

long long weyl_dim(const DominantWeight& lambda);

// Formal character in the torus variables t1..t_rank; evaluates to weyl_dim
// at the all-ones point. GL via Gelfand-Tsetlin weight enumeration, Sp via
// Freudenthal multiplicities expanded over signed-permutation orbits.
LaurentPolynomial character(const DominantWeight& lambda);

// dim of the GL_k-invariant subspace of the GL_n irreducible, with GL_k on
// the first k coordinates: the number of interlacing chains from lambda down
// to the zero weight at level k.
long long gt_invariant_dim(const DominantWeight& lambda, int k);

// Independent oracle: (1/|W'|) * constant term of (restricted character *
// product of (1 - t^alpha) over all subgroup roots). The subgroup occupies
// the first block of coordinates.
long long ct_invariant_dim(const DominantWeight& lambda, const GroupType& subgroup,
                           const RepLimits& limits = {});

// Hilbert function of the generic quotient fibers: dim M when m >= 2n (GL)
// or m >= n (Sp); the invariant dimension under the deficit block subgroup
// (GL_{n-m/2}, Sp_{n-m}) for even m below that; no value at odd m below.
long long h0(const GroupType& group, int n, int m, const DominantWeight& lambda,
             const RepLimits& limits = {});

struct CauchyReport {
    bool ok = false;
    std::vector<long long> degree_dims; // dimension of each graded piece
};

// Degree-by-degree identity between the bigraded character of the functions
// on an n x m'' matrix space and sum of s_lambda(x) s_lambda(y) over
// partitions with at most min(n, m'') parts.
CauchyReport cauchy_check(int n, int mpp, int degree_bound,
                          const RepLimits& limits = {});

struct MonomialXY {
    std::vector<int> x; // exponents of x_1..x_n
    std::vector<int> y; // exponents of y_1..y_n

    bool operator==(const MonomialXY&) const = default;
    bool operator<(const MonomialXY& o) const {
        return x != o.x ? x < o.x : y < o.y;
    }
};

// No x_r and y_s simultaneously positive with r + s > n.
bool monomial_admissible(const MonomialXY& mono);

// The canonical admissible monomial whose GL(V)-weight is lambda. Weight
// conventions: x_i carries -(eps_{n-i+1}+...+eps_n), y_j carries
// eps_1+...+eps_j.
MonomialXY lambda_monomial(const DominantWeight& lambda);

DominantWeight monomial_weight(const MonomialXY& mono);

// Weight on the second torus under x_i -> eps'_1+...+eps'_i,
// y_j -> -(eps'_{n-j+1}+...+eps'_n); equals the dual of monomial_weight.
DominantWeight monomial_tprime_weight(const MonomialXY& mono);

struct KsReport {
    bool ok = false;
    long long monomial_count = 0;
    long long weight_count = 0;
    std::string detail; // populated on failure
};

// Checks that admissible monomials of weighted degree <= weight_bound
// biject with dominant GL_n-weights of |entry| sum <= weight_bound, with
// weight pair (lambda, lambda^*) and matching irreducible dimensions.
KsReport ks_presentation_check(int n, int weight_bound,
                               const RepLimits& limits = {});

std::vector<DominantWeight> dominant_weights_gl(int n, int abs_bound);
std::vector<DominantWeight> dominant_weights_sp(int n, int bound);

DominantWeight dual_weight(const DominantWeight& lambda);

} // namespace srt
