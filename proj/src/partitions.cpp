#include "srt/partitions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "srt/errors.hpp"

namespace srt {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::count_eq(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

Partition transpose(const Partition& p) {
    std::vector<int> t;
    for (int i = 1; i <= p.max_part(); ++i) {
        int c = 0;
        for (int d : p.parts())
            if (d >= i) ++c;
        t.push_back(c);
    }
    return Partition(std::move(t));
}

namespace {

void partitions_rec(int total, int bound, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (total == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int first = std::min(bound, total); first >= 1; --first) {
        cur.push_back(first);
        partitions_rec(total - first, first, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int total, int max_part) {
    if (total < 0) throw std::invalid_argument("negative partition total");
    if (max_part <= 0 || max_part > total) max_part = total;
    std::vector<Partition> out;
    std::vector<int> cur;
    if (total == 0) {
        out.emplace_back(cur);
        return out;
    }
    partitions_rec(total, max_part, cur, out);
    return out;
}

namespace {

// Part value -> multiplicity, in decreasing part order.
std::vector<std::pair<int, int>> multiplicities(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (int d : p.parts()) {
        if (!out.empty() && out.back().first == d)
            ++out.back().second;
        else
            out.emplace_back(d, 1);
    }
    return out;
}

bool parity_ok(GroupKind kind, const Partition& p) {
    for (auto [d, c] : multiplicities(p)) {
        if (kind == GroupKind::Symplectic && d % 2 == 1 && c % 2 == 1) return false;
        if (kind == GroupKind::Orthogonal && d % 2 == 0 && c % 2 == 1) return false;
    }
    return true;
}

bool very_even(const Partition& p) {
    for (int d : p.parts())
        if (d % 2 == 1) return false;
    return true;
}

void require_valid(const OrbitLabel& o) {
    for (const auto& l : validate_orbit(o.ambient, o.partition))
        if (l.tag == o.tag) return;
    throw std::invalid_argument("label does not index an orbit");
}

} // namespace

std::vector<OrbitLabel> validate_orbit(const GroupType& ambient, const Partition& p) {
    if (p.size() != ambient.ambient_size())
        throw std::invalid_argument("partition size does not match ambient matrix size");
    if (ambient.kind == GroupKind::GeneralLinear)
        return {{ambient, p, Tag::None}};
    if (!parity_ok(ambient.kind, p)) return {};
    if (ambient.kind == GroupKind::Orthogonal && very_even(p))
        return {{ambient, p, Tag::I}, {ambient, p, Tag::II}};
    return {{ambient, p, Tag::None}};
}

long long ambient_algebra_dim(const GroupType& ambient) {
    const long long m = ambient.param;
    switch (ambient.kind) {
        case GroupKind::GeneralLinear: return m * m;
        case GroupKind::Symplectic: return m * (2 * m + 1);
        case GroupKind::Orthogonal: return m * (2 * m - 1);
    }
    throw std::logic_error("unreachable");
}

Mat ambient_gram(const GroupType& ambient) {
    const int m = ambient.param;
    Mat g(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        g(i, m + i) = 1;
        g(m + i, i) = ambient.kind == GroupKind::Orthogonal ? 1 : -1;
    }
    if (ambient.kind == GroupKind::GeneralLinear)
        throw std::invalid_argument("general linear ambient carries no bilinear form");
    return g;
}

std::vector<Mat> ambient_algebra_basis(const GroupType& ambient) {
    const int m = ambient.param;
    std::vector<Mat> basis;
    if (ambient.kind == GroupKind::GeneralLinear) {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                Mat e(m, m);
                e(i, j) = 1;
                basis.push_back(e);
            }
        return basis;
    }
    // Block shape [[A, B], [C, -A^T]]; B and C symmetric for sp, skew for so.
    const bool skew = ambient.kind == GroupKind::Orthogonal;
    const int s = 2 * m;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            Mat e(s, s);
            e(a, b) = 1;
            e(m + b, m + a) = -1;
            basis.push_back(e);
        }
    for (int corner = 0; corner < 2; ++corner) {
        const int ro = corner == 0 ? 0 : m, co = corner == 0 ? m : 0;
        for (int a = 0; a < m; ++a)
            for (int b = skew ? a + 1 : a; b < m; ++b) {
                Mat e(s, s);
                e(ro + a, co + b) = 1;
                e(ro + b, co + a) = skew ? -1 : 1;
                basis.push_back(e);
            }
    }
    return basis;
}

namespace {

Mat unit_column(int dim, int i) {
    Mat v(dim, 1);
    v(i, 0) = 1;
    return v;
}

// Conjugate by the hyperbolic swap e_m <-> f_m (an orthogonal reflection of
// determinant -1); moves a very even representative to the other tag.
Mat swap_last_pair(const Mat& x, int m) {
    Mat r = Mat::identity(2 * m);
    r(m - 1, m - 1) = 0;
    r(2 * m - 1, 2 * m - 1) = 0;
    r(m - 1, 2 * m - 1) = 1;
    r(2 * m - 1, m - 1) = 1;
    return r * x * r;
}

// Jordan pieces carrying an invariant form, glued over Q and base-changed to
// the fixed split Gram matrix. A single part d carries the antidiagonal form
// B(w_i, w_j) = s(-1)^i [i+j = d+1] (symmetric iff d odd); a doubled part is
// a hyperbolic pairing of two Jordan blocks and works for every d.
Mat general_form_rep(GroupKind kind, int m, const Partition& p) {
    const bool symplectic = kind == GroupKind::Symplectic;
    const int dim = 2 * m;
    Mat f(dim, dim), form(dim, dim);
    std::vector<Mat> es, fs;
    std::vector<Mat> middles; // q-norms alternate +1, -1 by construction
    int off = 0, middle_count = 0;

    auto add_jordan_block = [&](int o, int d) {
        for (int i = 0; i + 1 < d; ++i) f(o + i + 1, o + i) = 1;
    };

    for (auto [d, c] : multiplicities(p)) {
        const bool pair_up = symplectic ? d % 2 == 1 : d % 2 == 0;
        if (pair_up) {
            for (int t = 0; t < c / 2; ++t) {
                add_jordan_block(off, d);
                add_jordan_block(off + d, d);
                for (int a = 0; a < d; ++a) {
                    const int b = d - 1 - a;
                    const int sign = a % 2 == 0 ? -1 : 1; // (-1)^(a+1)
                    form(off + a, off + d + b) = sign;
                    form(off + d + b, off + a) = symplectic ? -sign : sign;
                    es.push_back(unit_column(dim, off + a));
                    fs.push_back(unit_column(dim, off + d + b) * Rat(sign));
                }
                off += 2 * d;
            }
        } else {
            for (int t = 0; t < c; ++t) {
                int s = 1;
                if (!symplectic) {
                    // Middle q-norm is s(-1)^((d+1)/2); force it to alternate
                    // so the total form is split over Q.
                    const int want = middle_count % 2 == 0 ? 1 : -1;
                    s = want * (((d + 1) / 2) % 2 == 0 ? 1 : -1);
                }
                add_jordan_block(off, d);
                for (int a = 0; a < d; ++a) {
                    const int b = d - 1 - a;
                    const int sign = s * (a % 2 == 0 ? -1 : 1);
                    form(off + a, off + b) = sign;
                }
                for (int a = 0; a < d / 2; ++a) {
                    const int b = d - 1 - a;
                    const int sign = s * (a % 2 == 0 ? -1 : 1);
                    es.push_back(unit_column(dim, off + a));
                    fs.push_back(unit_column(dim, off + b) * Rat(sign));
                }
                if (!symplectic && d % 2 == 1) {
                    middles.push_back(unit_column(dim, off + (d - 1) / 2));
                    ++middle_count;
                }
                off += d;
            }
        }
    }
    if (off != dim) throw std::logic_error("piece sizes do not tile the space");

    for (std::size_t k = 0; k + 1 < middles.size(); k += 2) {
        es.push_back(middles[k] + middles[k + 1]);
        fs.push_back((middles[k] - middles[k + 1]) * Rat(1, 2));
    }
    if (es.size() != static_cast<std::size_t>(m))
        throw std::logic_error("hyperbolic basis has wrong size");

    Mat basis(dim, dim);
    for (int k = 0; k < m; ++k) {
        basis.set_block(0, k, es[k]);
        basis.set_block(0, m + k, fs[k]);
    }
    const GroupType ambient{kind, m};
    if (basis.transpose() * form * basis != ambient_gram(ambient))
        throw std::logic_error("base change does not reach the split form");
    return inverse(basis) * f * basis;
}

} // namespace

Mat nilpotent_representative(const OrbitLabel& o) {
    require_valid(o);
    const int m = o.ambient.param;
    if (o.ambient.kind == GroupKind::GeneralLinear) {
        Mat f(m, m);
        int off = 0;
        for (int d : o.partition.parts()) {
            for (int i = 0; i + 1 < d; ++i) f(off + i + 1, off + i) = 1;
            off += d;
        }
        return f;
    }
    Mat rep;
    if (o.partition.max_part() <= 2) {
        const int n2 = 2 * m, N = o.partition.count_eq(2);
        rep = Mat(n2, n2);
        if (o.ambient.kind == GroupKind::Symplectic) {
            for (int i = 0; i < N; ++i) rep(i, m + i) = 1;
        } else {
            for (int t = 0; 2 * t + 1 < N; ++t) {
                rep(2 * t, m + 2 * t + 1) = 1;
                rep(2 * t + 1, m + 2 * t) = -1;
            }
        }
    } else {
        rep = general_form_rep(o.ambient.kind, m, o.partition);
    }
    if (o.tag == Tag::II) rep = swap_last_pair(rep, m);
    return rep;
}

long long orbit_dim(const OrbitLabel& o) {
    require_valid(o);
    if (o.ambient.kind == GroupKind::GeneralLinear) {
        const Partition tr = transpose(o.partition);
        long long s = 0;
        for (int t : tr.parts()) s += 1LL * t * t;
        return 1LL * o.ambient.param * o.ambient.param - s;
    }
    return orbit_dim_centralizer(o);
}

long long orbit_dim_centralizer(const OrbitLabel& o) {
    const Mat f = nilpotent_representative(o);
    const auto basis = ambient_algebra_basis(o.ambient);
    const std::size_t s = f.rows();
    Mat cols(s * s, basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const Mat c = f * basis[k] - basis[k] * f;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < s; ++j) cols(i * s + j, k) = c(i, j);
    }
    return static_cast<long long>(rank(cols));
}

bool closure_leq(const OrbitLabel& a, const OrbitLabel& b) {
    if (a.ambient != b.ambient)
        throw std::invalid_argument("closure order needs a common ambient algebra");
    require_valid(a);
    require_valid(b);
    if (a.partition.max_part() > 2 || b.partition.max_part() > 2)
        throw UnsupportedRegime("closure order is only computed for parts <= 2");
    const int na = a.partition.count_eq(2), nb = b.partition.count_eq(2);
    return na < nb || (na == nb && a.tag == b.tag);
}

Normality is_normal(const OrbitLabel& o) {
    require_valid(o);
    const auto& parts = o.partition.parts();
    const int d1 = parts.empty() ? 0 : parts[0];
    const int d2 = parts.size() < 2 ? 0 : parts[1];
    switch (o.ambient.kind) {
        case GroupKind::GeneralLinear: return Normality::Normal;
        case GroupKind::Symplectic:
            return d1 + d2 <= 4 ? Normality::Normal : Normality::Unknown;
        case GroupKind::Orthogonal:
            return d1 <= 2 ? Normality::Normal : Normality::Unknown;
    }
    throw std::logic_error("unreachable");
}

Partition jordan_type(const Mat& f) {
    if (f.rows() != f.cols()) throw std::invalid_argument("square matrix required");
    std::vector<std::size_t> ranks{f.rows()}; // rank of f^0
    Mat power = f;
    while (true) {
        const std::size_t r = rank(power);
        ranks.push_back(r);
        if (r == 0) break;
        power = power * f;
        if (ranks.size() > f.rows() + 1)
            throw std::invalid_argument("matrix is not nilpotent");
    }
    std::vector<int> col_counts; // #parts >= k, weakly decreasing
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        const int c = static_cast<int>(ranks[k - 1] - ranks[k]);
        if (c > 0) col_counts.push_back(c);
    }
    return transpose(Partition(std::move(col_counts)));
}

} // namespace srt
