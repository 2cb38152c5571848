#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "srt/matrix.hpp"
#include "srt/partitions.hpp"

namespace srt {

// Point of W = Hom(V', V) x Hom(V, V') with dim V = n, dim V' = m.
struct MatrixPair {
    Mat u1; // n x m
    Mat u2; // m x n
};

// Point of W = Hom(E, V) where E = Q^2m carries the split quadratic form
// [[0,I],[I,0]] and V = Q^n (n even) the symplectic form [[0,I],[-I,0]].
struct SpPoint {
    Mat w; // n x 2m
};

struct ComponentDescriptor {
    GroupType group; // acting group, GL_n or Sp_n
    int n = 0;
    int m = 0;
    int index = -1;      // GL: the rank parameter p of X_p
    Tag tag = Tag::None; // Sp with m <= n: I or II
    long long dim = 0;
};

using FiberPoint = std::variant<MatrixPair, SpPoint>;

Mat moment_gl(const MatrixPair& pair);   // u1*u2, n x n
Mat quotient_gl(const MatrixPair& pair); // u2*u1, m x m

// The form-adjoint of w: Q^-1 * w^T * Omega, a map V -> E. Satisfies
// q(tw(v), e) = omega(w(e), v) and t(t(w)) = -w.
Mat sp_transpose(const SpPoint& x);

bool sp_moment_zero(const SpPoint& x);

std::vector<ComponentDescriptor> zero_fiber_components(const GroupType& group,
                                                       int n, int m);

// Deterministic seeded point on the component: a coordinate (GL) or graph-of-
// skew-map (Sp) subspace L of the right kind, plus bounded random integer
// fiber data. Always satisfies the component's defining conditions.
FiberPoint sample_component(const ComponentDescriptor& desc, std::uint64_t seed);

// Resamples (up to 10 attempts) until tangent_dim equals desc.dim.
FiberPoint sample_component_generic(const ComponentDescriptor& desc,
                                    std::uint64_t seed);

// dim ker of the moment map's differential at a zero-fiber point: 2mn minus
// the exact rank of (a1,a2) -> a1*u2 + u1*a2 into gl(V) for GL, and of
// a -> a*tw + w*ta into { A : A*Omega symmetric } for Sp.
long long tangent_dim(const MatrixPair& point);
long long tangent_dim(const SpPoint& point);
long long tangent_dim(const FiberPoint& point);

// Splits a square-zero F with rank(F) <= min(m/2, n) as F = u2*u1 with
// u1*u2 = 0, via the rank-l normal form of F.
MatrixPair factor_two_nilpotent(const Mat& f, int n);

// Which of the two components of the m <= n zero fiber the point lies on:
// tag I iff dim(im tw meet span(e_1..e_m)) has the parity of m.
Tag classify_sp_component(const SpPoint& x);

// The defining closed conditions of the GL component X_p / the Sp zero fiber.
bool component_predicates_hold(const FiberPoint& point,
                               const ComponentDescriptor& desc);

} // namespace srt
