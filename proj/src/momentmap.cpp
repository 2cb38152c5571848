#include "srt/momentmap.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "srt/errors.hpp"
#include "srt/rng.hpp"

namespace srt {

namespace {

void check_pair_shapes(const MatrixPair& pair) {
    if (pair.u1.rows() != pair.u2.cols() || pair.u1.cols() != pair.u2.rows())
        throw std::invalid_argument("matrix pair shapes are inconsistent");
}

// (n, m) of an Sp point; also enforces the evenness of n.
std::pair<int, int> sp_shape(const SpPoint& x) {
    const int n = static_cast<int>(x.w.rows());
    const int cols = static_cast<int>(x.w.cols());
    if (n % 2 != 0 || cols % 2 != 0)
        throw std::invalid_argument("Sp point needs even n and a 2m-column matrix");
    return {n, cols / 2};
}

Mat omega_gram(int n) { return ambient_gram(sp_ambient(n / 2)); }
Mat q_gram(int m) { return ambient_gram(so_ambient(m)); }

} // namespace

Mat moment_gl(const MatrixPair& pair) {
    check_pair_shapes(pair);
    return pair.u1 * pair.u2;
}

Mat quotient_gl(const MatrixPair& pair) {
    check_pair_shapes(pair);
    return pair.u2 * pair.u1;
}

Mat sp_transpose(const SpPoint& x) {
    const auto [n, m] = sp_shape(x);
    // Q is an involution, so Q^-1 = Q.
    return q_gram(m) * x.w.transpose() * omega_gram(n);
}

bool sp_moment_zero(const SpPoint& x) {
    return (x.w * sp_transpose(x)).is_zero();
}

std::vector<ComponentDescriptor> zero_fiber_components(const GroupType& group,
                                                       int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("n and m must be positive");
    std::vector<ComponentDescriptor> out;
    switch (group.kind) {
        case GroupKind::GeneralLinear: {
            const int lo = m <= n ? 0 : std::min(m - n, n);
            const int hi = std::min(m, n);
            for (int p = lo; p <= hi; ++p)
                out.push_back({group, n, m, p, Tag::None,
                               1LL * p * (m - p) + 1LL * m * n});
            return out;
        }
        case GroupKind::Symplectic: {
            if (n % 2 != 0)
                throw std::invalid_argument("Sp(V) needs even dim V");
            if (m > n) {
                out.push_back({group, n, m, -1, Tag::None,
                               2LL * m * n - 1LL * n * (n + 1) / 2});
            } else {
                const long long d = 1LL * m * n + 1LL * m * (m - 1) / 2;
                out.push_back({group, n, m, -1, Tag::I, d});
                out.push_back({group, n, m, -1, Tag::II, d});
            }
            return out;
        }
        case GroupKind::Orthogonal:
            throw UnsupportedRegime(
                "zero-fiber components of the orthogonal action are not modeled");
    }
    throw std::logic_error("unreachable");
}

namespace {

std::vector<int> random_subset(int m, int p, Rng& rng) {
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < p; ++i) {
        const int j = i + static_cast<int>(rng.next() % (m - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(p);
    std::sort(idx.begin(), idx.end());
    return idx;
}

MatrixPair sample_gl(const ComponentDescriptor& desc, Rng& rng) {
    const int n = desc.n, m = desc.m, p = desc.index;
    const auto chosen = random_subset(m, p, rng);
    std::vector<bool> in_l(m, false);
    for (int k : chosen) in_l[k] = true;
    // u2 maps into L, u1 factors through V'/L; u1*u2 = 0 by construction.
    Mat u1(n, m), u2(m, n);
    for (int k = 0; k < m; ++k) {
        if (in_l[k])
            for (int j = 0; j < n; ++j) u2(k, j) = rng.range(-9, 9);
        else
            for (int i = 0; i < n; ++i) u1(i, k) = rng.range(-9, 9);
    }
    return {u1, u2};
}

SpPoint sample_sp(const ComponentDescriptor& desc, Rng& rng) {
    const int n = desc.n, m = desc.m;
    // L = graph of a random skew form lies in the same maximal-isotropic
    // family as span(e_1..e_m); one hyperbolic swap moves it to the other.
    Mat basis(2 * m, m);
    for (int i = 0; i < m; ++i) basis(i, i) = 1;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const long long v = rng.range(-9, 9);
            basis(m + i, j) = v;
            basis(m + j, i) = -v;
        }
    if (desc.tag == Tag::II)
        for (int j = 0; j < m; ++j) std::swap(basis(m - 1, j), basis(2 * m - 1, j));
    const Mat a = random_int_mat(n, m, rng);
    return {a * (q_gram(m) * basis).transpose()};
}

} // namespace

FiberPoint sample_component(const ComponentDescriptor& desc, std::uint64_t seed) {
    Rng rng(seed);
    if (desc.group.kind == GroupKind::GeneralLinear) return sample_gl(desc, rng);
    if (desc.group.kind == GroupKind::Symplectic) return sample_sp(desc, rng);
    throw UnsupportedRegime("no sampler for the orthogonal action");
}

FiberPoint sample_component_generic(const ComponentDescriptor& desc,
                                    std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 10; ++attempt) {
        FiberPoint pt = sample_component(desc, rng.next());
        if (tangent_dim(pt) == desc.dim) return pt;
    }
    throw NonGenericPoint("sampling did not reach the generic locus in 10 attempts");
}

long long tangent_dim(const MatrixPair& point) {
    check_pair_shapes(point);
    if (!moment_gl(point).is_zero())
        throw std::invalid_argument("point is not in the zero fiber");
    const int n = static_cast<int>(point.u1.rows());
    const int m = static_cast<int>(point.u1.cols());
    // Differential (a1, a2) -> a1*u2 + u1*a2, written in the n^2 coordinates
    // of gl(V); column order is a1 entries then a2 entries.
    Mat d(static_cast<std::size_t>(n) * n, 2 * static_cast<std::size_t>(m) * n);
    std::size_t col = 0;
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < m; ++k, ++col)
            for (int j = 0; j < n; ++j) d(i * n + j, col) = point.u2(k, j);
    for (int k = 0; k < m; ++k)
        for (int j = 0; j < n; ++j, ++col)
            for (int i = 0; i < n; ++i) d(i * n + j, col) = point.u1(i, k);
    return 2LL * m * n - static_cast<long long>(rank(d));
}

long long tangent_dim(const SpPoint& point) {
    if (!sp_moment_zero(point))
        throw std::invalid_argument("point is not in the zero fiber");
    const auto [n, m] = sp_shape(point);
    // Differential a -> a*tw + w*ta; its value B satisfies B*Omega symmetric,
    // and B*Omega = -(a*Q*w^T + w*Q*a^T), so the n(n+1)/2 entries on or below
    // the diagonal of a*T + (a*T)^T with T = Q*w^T are full coordinates.
    const Mat t = q_gram(m) * point.w.transpose();
    Mat d(static_cast<std::size_t>(n) * (n + 1) / 2,
          static_cast<std::size_t>(n) * 2 * m);
    std::size_t col = 0;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < 2 * m; ++c, ++col) {
            // a = E_rc: (a*T)(r, j) = T(c, j), other rows vanish.
            std::size_t row = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j, ++row) {
                    Rat v;
                    if (i == r) v += t(c, j);
                    if (j == r) v += t(c, i);
                    d(row, col) = v;
                }
        }
    return 2LL * m * n - static_cast<long long>(rank(d));
}

long long tangent_dim(const FiberPoint& point) {
    if (std::holds_alternative<MatrixPair>(point))
        return tangent_dim(std::get<MatrixPair>(point));
    return tangent_dim(std::get<SpPoint>(point));
}

MatrixPair factor_two_nilpotent(const Mat& f, int n) {
    if (f.rows() != f.cols()) throw std::invalid_argument("square matrix required");
    const int m = static_cast<int>(f.rows());
    if (!(f * f).is_zero())
        throw std::invalid_argument("matrix does not square to zero");
    const int l = static_cast<int>(rank(f));
    if (l > std::min(m / 2, n))
        throw std::invalid_argument("rank too large to factor through V");

    // Basis adapted to im F <= ker F: columns are (im F | rest of ker F |
    // preimages of the im F basis); in it F becomes the top-right corner
    // identity f_l, which visibly splits through Q^l.
    const Mat image = column_space_basis(f);
    const Mat kernel_ext = column_space_basis(hstack(image, nullspace(f)));
    Mat basis(m, m);
    basis.set_block(0, 0, kernel_ext);
    for (int i = 0; i < l; ++i) {
        const auto pre = solve(f, image.col(i));
        if (!pre) throw std::logic_error("image vector without preimage");
        basis.set_block(0, m - l + i, *pre);
    }
    const Mat basis_inv = inverse(basis);

    Mat u1l(n, m), u2l(m, n);
    for (int i = 0; i < l; ++i) {
        u1l(i, m - l + i) = 1;
        u2l(i, i) = 1;
    }
    return {u1l * basis_inv, basis * u2l};
}

Tag classify_sp_component(const SpPoint& x) {
    const auto [n, m] = sp_shape(x);
    if (m > n || m % 2 != 0)
        throw std::invalid_argument("classification needs m <= n with m even");
    if (!sp_moment_zero(x))
        throw std::invalid_argument("point is not in the zero fiber");
    if (static_cast<int>(rank(x.w)) < m)
        throw NonGenericPoint("rank below m; the point sits in the boundary");
    const Mat image = column_space_basis(sp_transpose(x));
    Mat l0(2 * m, m);
    for (int i = 0; i < m; ++i) l0(i, i) = 1;
    const auto joint = static_cast<int>(rank(hstack(image, l0)));
    // dim(im tw meet L0) = 2m - joint; tag I iff it has the parity of m.
    return joint % 2 == m % 2 ? Tag::I : Tag::II;
}

bool component_predicates_hold(const FiberPoint& point,
                               const ComponentDescriptor& desc) {
    if (desc.group.kind == GroupKind::GeneralLinear) {
        const auto& pair = std::get<MatrixPair>(point);
        if (!moment_gl(pair).is_zero()) return false;
        const int p = desc.index, n = desc.n, m = desc.m;
        if (static_cast<int>(rank(pair.u2)) > std::min(n, p)) return false;
        const int ker_dim = m - static_cast<int>(rank(pair.u1));
        return ker_dim >= std::max(m - n, p);
    }
    const auto& x = std::get<SpPoint>(point);
    if (!sp_moment_zero(x)) return false;
    if (desc.tag == Tag::None || desc.m % 2 != 0) return true;
    try {
        return classify_sp_component(x) == desc.tag;
    } catch (const NonGenericPoint&) {
        return true; // boundary points belong to both closures
    }
}

} // namespace srt
