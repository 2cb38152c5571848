#include "srt/repthy.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "srt/errors.hpp"

namespace srt {

namespace {

void validate_weight(const DominantWeight& l) {
    const int n = l.group.param;
    std::size_t want;
    switch (l.group.kind) {
        case GroupKind::GeneralLinear:
            want = static_cast<std::size_t>(n);
            break;
        case GroupKind::Symplectic:
            if (n % 2 != 0)
                throw std::invalid_argument("Sp weights need even group rank");
            want = static_cast<std::size_t>(n / 2);
            if (!l.entries.empty() && l.entries.back() < 0)
                throw std::invalid_argument("Sp weight entries must be nonnegative");
            break;
        default:
            throw std::invalid_argument("weights are supported for GL and Sp only");
    }
    if (l.entries.size() != want)
        throw std::invalid_argument("weight has the wrong number of entries");
    for (std::size_t i = 1; i < l.entries.size(); ++i)
        if (l.entries[i] > l.entries[i - 1])
            throw std::invalid_argument("weight entries must be weakly decreasing");
}

std::vector<std::string> torus_names(const std::string& stem, int count) {
    std::vector<std::string> names;
    for (int i = 1; i <= count; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

long long abs_weight(const DominantWeight& l) {
    long long s = 0;
    for (int e : l.entries) s += std::abs(e);
    return s;
}

// All rows of length one less interlacing the given row; entries may be
// negative.
void for_each_interlacing(const std::vector<int>& row,
                          const std::function<void(const std::vector<int>&)>& fn) {
    const std::size_t l = row.size();
    std::vector<int> next(l - 1);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == l - 1) {
            fn(next);
            return;
        }
        for (int v = row[j + 1]; v <= row[j]; ++v) {
            next[j] = v;
            rec(j + 1);
        }
    };
    if (l == 1)
        fn(next);
    else
        rec(0);
}

LaurentPolynomial character_gl(const DominantWeight& lambda) {
    const int n = lambda.group.param;
    LaurentPolynomial out(torus_names("t", n));
    if (n == 0) {
        out.add_term({}, 1);
        return out;
    }
    std::vector<int> weight(n);
    std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& row) {
        const long long s = std::accumulate(row.begin(), row.end(), 0LL);
        if (row.size() == 1) {
            weight[0] = row[0];
            out.add_term(weight, 1);
            return;
        }
        for_each_interlacing(row, [&](const std::vector<int>& next) {
            const long long sn = std::accumulate(next.begin(), next.end(), 0LL);
            weight[row.size() - 1] = static_cast<int>(s - sn);
            rec(next);
        });
    };
    rec(lambda.entries);
    return out;
}

long long ip(const std::vector<int>& a, const std::vector<int>& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += 1LL * a[i] * b[i];
    return s;
}

std::vector<std::vector<int>> sp_positive_roots(int r) {
    std::vector<std::vector<int>> roots;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            std::vector<int> a(r, 0), b(r, 0);
            a[i] = 1;
            a[j] = -1;
            b[i] = 1;
            b[j] = 1;
            roots.push_back(a);
            roots.push_back(b);
        }
    for (int i = 0; i < r; ++i) {
        std::vector<int> c(r, 0);
        c[i] = 2;
        roots.push_back(c);
    }
    return roots;
}

// Dominant weights mu <= lambda in the root order of type C: all partial
// sums of lambda - mu nonnegative and the full sum even.
std::vector<std::vector<int>> sp_dominant_below(const std::vector<int>& lambda) {
    const int r = static_cast<int>(lambda.size());
    std::vector<std::vector<int>> out;
    std::vector<int> mu(r);
    std::function<void(int, int, long long)> rec = [&](int i, int maxv, long long slack) {
        if (i == r) {
            if (slack % 2 == 0) out.push_back(mu);
            return;
        }
        for (int v = 0; v <= maxv; ++v) {
            const long long s = slack + lambda[i] - v;
            if (s < 0) continue; // larger v only shrinks s further
            mu[i] = v;
            rec(i + 1, v, s);
        }
    };
    rec(0, lambda.empty() ? 0 : lambda[0], 0);
    return out;
}

std::map<std::vector<int>, Int> freudenthal_sp(const std::vector<int>& lambda) {
    const int r = static_cast<int>(lambda.size());
    std::vector<int> rho(r);
    for (int i = 0; i < r; ++i) rho[i] = r - i;
    const auto roots = sp_positive_roots(r);

    auto height = [&](const std::vector<int>& mu) {
        long long h = 0, s = 0;
        for (int i = 0; i < r; ++i) {
            s += lambda[i] - mu[i];
            h += i + 1 < r ? s : s / 2;
        }
        return h;
    };
    auto candidates = sp_dominant_below(lambda);
    std::sort(candidates.begin(), candidates.end(),
              [&](const auto& a, const auto& b) { return height(a) < height(b); });

    std::vector<int> lr(r);
    for (int i = 0; i < r; ++i) lr[i] = lambda[i] + rho[i];
    const long long top_norm = ip(lr, lr);
    const long long total = std::accumulate(lambda.begin(), lambda.end(), 0LL);

    std::map<std::vector<int>, Int> mult;
    for (const auto& mu : candidates) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        Int acc = 0;
        std::vector<int> nu(r), dom(r);
        for (const auto& alpha : roots)
            for (long long k = 1; k <= 2 * total + 3; ++k) {
                for (int i = 0; i < r; ++i) nu[i] = mu[i] + static_cast<int>(k) * alpha[i];
                for (int i = 0; i < r; ++i) dom[i] = std::abs(nu[i]);
                std::sort(dom.begin(), dom.end(), std::greater<int>());
                const auto it = mult.find(dom);
                if (it == mult.end()) continue;
                acc += it->second * ip(nu, alpha);
            }
        std::vector<int> mr(r);
        for (int i = 0; i < r; ++i) mr[i] = mu[i] + rho[i];
        const long long denom = top_norm - ip(mr, mr);
        const Int num = 2 * acc;
        if (denom <= 0 || num % denom != 0)
            throw std::logic_error("weight multiplicity recursion went inconsistent");
        mult[mu] = num / denom;
    }
    return mult;
}

// All distinct signed permutations of a dominant type-C weight.
std::set<std::vector<int>> signed_orbit(const std::vector<int>& mu) {
    std::set<std::vector<int>> orbit;
    std::vector<int> base = mu;
    std::sort(base.begin(), base.end());
    do {
        const int r = static_cast<int>(base.size());
        std::vector<int> v(r);
        std::function<void(int)> rec = [&](int i) {
            if (i == r) {
                orbit.insert(v);
                return;
            }
            v[i] = base[i];
            rec(i + 1);
            if (base[i] != 0) {
                v[i] = -base[i];
                rec(i + 1);
            }
        };
        rec(0);
    } while (std::next_permutation(base.begin(), base.end()));
    return orbit;
}

LaurentPolynomial character_sp(const DominantWeight& lambda) {
    const int r = lambda.group.param / 2;
    LaurentPolynomial out(torus_names("t", r));
    for (const auto& [mu, m] : freudenthal_sp(lambda.entries))
        for (const auto& nu : signed_orbit(mu)) out.add_term(nu, m);
    return out;
}

} // namespace

DominantWeight gl_weight(int n, std::vector<int> entries) {
    DominantWeight w{{GroupKind::GeneralLinear, n}, std::move(entries)};
    validate_weight(w);
    return w;
}

DominantWeight sp_weight(int n, std::vector<int> entries) {
    DominantWeight w{{GroupKind::Symplectic, n}, std::move(entries)};
    validate_weight(w);
    return w;
}

long long weyl_dim(const DominantWeight& lambda) {
    validate_weight(lambda);
    const auto& e = lambda.entries;
    Rat dim(1);
    if (lambda.group.kind == GroupKind::GeneralLinear) {
        const int n = lambda.group.param;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                dim *= Rat(e[i] - e[j] + j - i, j - i);
    } else {
        const int r = lambda.group.param / 2;
        for (int i = 0; i < r; ++i) {
            const long long li = e[i] + r - i, di = r - i;
            dim *= Rat(li, di);
            for (int j = i + 1; j < r; ++j) {
                const long long lj = e[j] + r - j, dj = r - j;
                dim *= Rat(li * li - lj * lj, di * di - dj * dj);
            }
        }
    }
    if (boost::multiprecision::denominator(dim) != 1)
        throw std::logic_error("dimension product is not an integer");
    return static_cast<long long>(boost::multiprecision::numerator(dim));
}

LaurentPolynomial character(const DominantWeight& lambda) {
    validate_weight(lambda);
    return lambda.group.kind == GroupKind::GeneralLinear ? character_gl(lambda)
                                                         : character_sp(lambda);
}

long long gt_invariant_dim(const DominantWeight& lambda, int k) {
    validate_weight(lambda);
    if (lambda.group.kind != GroupKind::GeneralLinear)
        throw std::invalid_argument("branching chains are a general linear computation");
    const int n = lambda.group.param;
    if (k < 0 || k > n)
        throw std::invalid_argument("subgroup rank must lie between 0 and n");
    std::map<std::vector<int>, long long> memo;
    std::function<long long(const std::vector<int>&)> count =
        [&](const std::vector<int>& row) -> long long {
        if (static_cast<int>(row.size()) == k) {
            for (int v : row)
                if (v != 0) return 0;
            return 1;
        }
        const auto it = memo.find(row);
        if (it != memo.end()) return it->second;
        long long total = 0;
        for_each_interlacing(row, [&](const std::vector<int>& next) { total += count(next); });
        memo[row] = total;
        return total;
    };
    return count(lambda.entries);
}

long long ct_invariant_dim(const DominantWeight& lambda, const GroupType& subgroup,
                           const RepLimits& limits) {
    validate_weight(lambda);
    if (subgroup.kind != lambda.group.kind)
        throw std::invalid_argument("subgroup must have the host's type");
    int host_rank, sub_rank;
    if (lambda.group.kind == GroupKind::GeneralLinear) {
        host_rank = lambda.group.param;
        sub_rank = subgroup.param;
    } else {
        if (subgroup.param % 2 != 0)
            throw std::invalid_argument("symplectic subgroup size must be even");
        host_rank = lambda.group.param / 2;
        sub_rank = subgroup.param / 2;
    }
    if (sub_rank < 0 || sub_rank > host_rank)
        throw std::invalid_argument("subgroup rank exceeds the host rank");
    if (host_rank > limits.ctRank || abs_weight(lambda) > limits.ctWeight)
        throw ResourceLimit("constant-term extraction beyond the configured size caps");

    // Restrict the character to the first block of torus coordinates.
    LaurentPolynomial restricted(torus_names("t", sub_rank));
    for (const auto& [e, c] : character(lambda).terms())
        restricted.add_term(std::vector<int>(e.begin(), e.begin() + sub_rank), c);

    LaurentPolynomial delta = LaurentPolynomial::one(torus_names("t", sub_rank));
    std::vector<std::vector<int>> roots;
    if (lambda.group.kind == GroupKind::GeneralLinear) {
        for (int i = 0; i < sub_rank; ++i)
            for (int j = 0; j < sub_rank; ++j) {
                if (i == j) continue;
                std::vector<int> a(sub_rank, 0);
                a[i] = 1;
                a[j] = -1;
                roots.push_back(a);
            }
    } else {
        roots = sp_positive_roots(sub_rank);
        const std::size_t half = roots.size();
        for (std::size_t t = 0; t < half; ++t) {
            std::vector<int> neg = roots[t];
            for (int& v : neg) v = -v;
            roots.push_back(neg);
        }
    }
    for (const auto& alpha : roots) {
        LaurentPolynomial factor = LaurentPolynomial::one(torus_names("t", sub_rank));
        factor.add_term(alpha, -1);
        delta = delta * factor;
    }

    // Only the constant coefficient of restricted * delta is needed.
    Int ct = 0;
    for (const auto& [e, c] : restricted.terms()) {
        std::vector<int> neg(e);
        for (int& v : neg) v = -v;
        ct += c * delta.coefficient(neg);
    }
    Int weyl_order = 1;
    for (int i = 1; i <= sub_rank; ++i) weyl_order *= i;
    if (lambda.group.kind == GroupKind::Symplectic)
        weyl_order <<= sub_rank;
    if (ct % weyl_order != 0)
        throw std::logic_error("constant term is not divisible by the Weyl order");
    return static_cast<long long>(Int(ct / weyl_order));
}

long long h0(const GroupType& group, int n, int m, const DominantWeight& lambda,
             const RepLimits& limits) {
    if (n < 1 || m < 1) throw std::invalid_argument("n and m must be positive");
    if (lambda.group.kind != group.kind || lambda.group.param != n)
        throw std::invalid_argument("weight belongs to a different group");
    switch (group.kind) {
        case GroupKind::GeneralLinear:
            if (m >= 2 * n) return weyl_dim(lambda);
            if (m % 2 == 0) return gt_invariant_dim(lambda, n - m / 2);
            throw UnsupportedRegime(
                "Hilbert function undefined: odd m below 2n is excluded");
        case GroupKind::Symplectic:
            if (n % 2 != 0) throw std::invalid_argument("Sp(V) needs even dim V");
            if (m >= n) return weyl_dim(lambda);
            if (m % 2 == 0)
                return ct_invariant_dim(lambda, {GroupKind::Symplectic, n - m}, limits);
            throw UnsupportedRegime(
                "Hilbert function undefined: odd m below n is excluded");
        case GroupKind::Orthogonal:
            throw UnsupportedRegime("Hilbert function for the orthogonal action is not modeled");
    }
    throw std::logic_error("unreachable");
}

namespace {

long long x_degree(const std::vector<int>& e, int n) {
    long long d = 0;
    for (int i = 0; i < n; ++i) d += e[i];
    return d;
}

} // namespace

CauchyReport cauchy_check(int n, int mpp, int degree_bound, const RepLimits& limits) {
    if (n < 1 || mpp < 1 || degree_bound < 0)
        throw std::invalid_argument("sizes must be positive");
    if (n > limits.cauchySize || mpp > limits.cauchySize ||
        degree_bound > limits.cauchyDegree)
        throw ResourceLimit("series comparison beyond the configured size caps");

    auto names = torus_names("x", n);
    for (const auto& y : torus_names("y", mpp)) names.push_back(y);
    const int vars = n + mpp;

    // Left side: product over matrix entries of truncated geometric series.
    LaurentPolynomial lhs = LaurentPolynomial::one(names);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < mpp; ++j) {
            LaurentPolynomial geo(names);
            for (int k = 0; k <= degree_bound; ++k) {
                std::vector<int> e(vars, 0);
                e[i] = k;
                e[n + j] = k;
                geo.add_term(e, 1);
            }
            LaurentPolynomial next(names);
            for (const auto& [e, c] : (lhs * geo).terms())
                if (x_degree(e, n) <= degree_bound) next.add_term(e, c);
            lhs = next;
        }

    // Right side, degree by degree: sum of paired Schur characters.
    auto lift = [&](const LaurentPolynomial& p, int offset) {
        LaurentPolynomial out(names);
        for (const auto& [e, c] : p.terms()) {
            std::vector<int> big(vars, 0);
            for (std::size_t i = 0; i < e.size(); ++i) big[offset + i] = e[i];
            out.add_term(big, c);
        }
        return out;
    };

    CauchyReport report;
    report.ok = true;
    for (int d = 0; d <= degree_bound; ++d) {
        LaurentPolynomial lhs_d(names);
        for (const auto& [e, c] : lhs.terms())
            if (x_degree(e, n) == d) lhs_d.add_term(e, c);
        LaurentPolynomial rhs_d(names);
        for (const auto& p : partitions_of(d)) {
            if (static_cast<int>(p.parts().size()) > std::min(n, mpp)) continue;
            std::vector<int> padded_x(p.parts().begin(), p.parts().end());
            padded_x.resize(n, 0);
            std::vector<int> padded_y(p.parts().begin(), p.parts().end());
            padded_y.resize(mpp, 0);
            rhs_d = rhs_d + lift(character(gl_weight(n, padded_x)), 0) *
                                lift(character(gl_weight(mpp, padded_y)), n);
        }
        if (lhs_d != rhs_d) report.ok = false;
        report.degree_dims.push_back(
            static_cast<long long>(lhs_d.eval_ones()));
    }
    return report;
}

bool monomial_admissible(const MonomialXY& mono) {
    const int n = static_cast<int>(mono.x.size());
    for (int r = 1; r <= n; ++r) {
        if (mono.x[r - 1] <= 0) continue;
        for (int s = 1; s <= n; ++s)
            if (mono.y[s - 1] > 0 && r + s > n) return false;
    }
    return true;
}

MonomialXY lambda_monomial(const DominantWeight& lambda) {
    validate_weight(lambda);
    if (lambda.group.kind != GroupKind::GeneralLinear)
        throw std::invalid_argument("monomials correspond to general linear weights");
    const int n = lambda.group.param;
    const auto& l = lambda.entries;
    int t = 0;
    while (t < n && l[t] >= 0) ++t;
    // k_1 >= ... >= k_t >= 0 from the leading entries, k_n >= ... >= k_{t+1}
    // >= 0 from the negated trailing ones.
    std::vector<int> k(n + 1, 0);
    for (int i = 1; i <= t; ++i) k[i] = l[i - 1];
    for (int i = t + 1; i <= n; ++i) k[i] = -l[i - 1];
    MonomialXY mono{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    for (int r = 1; r <= n - t; ++r)
        mono.x[r - 1] = r == n - t ? k[t + 1] : k[n + 1 - r] - k[n - r];
    for (int s = 1; s <= t; ++s)
        mono.y[s - 1] = s == t ? k[t] : k[s] - k[s + 1];
    return mono;
}

DominantWeight monomial_weight(const MonomialXY& mono) {
    const int n = static_cast<int>(mono.x.size());
    std::vector<int> l(n, 0);
    for (int i = 1; i <= n; ++i) {
        for (int s = i; s <= n; ++s) l[i - 1] += mono.y[s - 1];
        for (int r = n + 1 - i; r <= n; ++r) l[i - 1] -= mono.x[r - 1];
    }
    return gl_weight(n, std::move(l));
}

DominantWeight monomial_tprime_weight(const MonomialXY& mono) {
    const int n = static_cast<int>(mono.x.size());
    std::vector<int> l(n, 0);
    for (int i = 1; i <= n; ++i) {
        for (int r = i; r <= n; ++r) l[i - 1] += mono.x[r - 1];
        for (int s = n + 1 - i; s <= n; ++s) l[i - 1] -= mono.y[s - 1];
    }
    return gl_weight(n, std::move(l));
}

DominantWeight dual_weight(const DominantWeight& lambda) {
    validate_weight(lambda);
    if (lambda.group.kind != GroupKind::GeneralLinear) return lambda;
    std::vector<int> rev(lambda.entries.rbegin(), lambda.entries.rend());
    for (int& v : rev) v = -v;
    return gl_weight(lambda.group.param, std::move(rev));
}

namespace {

long long weighted_degree(const MonomialXY& mono) {
    long long d = 0;
    const int n = static_cast<int>(mono.x.size());
    for (int i = 1; i <= n; ++i) d += 1LL * i * (mono.x[i - 1] + mono.y[i - 1]);
    return d;
}

} // namespace

KsReport ks_presentation_check(int n, int weight_bound, const RepLimits& limits) {
    if (n < 1 || weight_bound < 0)
        throw std::invalid_argument("sizes must be positive");
    if (n > limits.ksRank || weight_bound > limits.ksWeight)
        throw ResourceLimit("monomial enumeration beyond the configured size caps");

    KsReport report;
    report.ok = true;
    auto fail = [&](const std::string& why) {
        report.ok = false;
        if (report.detail.empty()) report.detail = why;
    };

    const auto weights = dominant_weights_gl(n, weight_bound);
    report.weight_count = static_cast<long long>(weights.size());
    std::set<MonomialXY> images;
    for (const auto& lambda : weights) {
        const MonomialXY mono = lambda_monomial(lambda);
        if (!monomial_admissible(mono)) fail("image monomial not admissible");
        if (weighted_degree(mono) != abs_weight(lambda))
            fail("weighted degree drifted from the weight size");
        if (!(monomial_weight(mono) == lambda)) fail("weight did not round-trip");
        if (!(monomial_tprime_weight(mono) == dual_weight(lambda)))
            fail("second-torus weight is not the dual");
        if (weyl_dim(lambda) != weyl_dim(dual_weight(lambda)))
            fail("dual weight has a different dimension");
        images.insert(mono);
    }
    if (static_cast<long long>(images.size()) != report.weight_count)
        fail("two weights mapped to one monomial");

    // Independent enumeration of every admissible monomial in range.
    std::set<MonomialXY> enumerated;
    MonomialXY mono{std::vector<int>(n, 0), std::vector<int>(n, 0)};
    std::function<void(int, long long)> rec = [&](int slot, long long budget) {
        if (slot == 2 * n) {
            if (monomial_admissible(mono)) enumerated.insert(mono);
            return;
        }
        const int var_index = slot < n ? slot : slot - n;
        const long long unit = var_index + 1;
        int& cell = slot < n ? mono.x[slot] : mono.y[slot - n];
        for (long long v = 0; unit * v <= budget; ++v) {
            cell = static_cast<int>(v);
            rec(slot + 1, budget - unit * v);
        }
        cell = 0;
    };
    rec(0, weight_bound);
    report.monomial_count = static_cast<long long>(enumerated.size());
    if (enumerated != images)
        fail("admissible monomials and dominant weights do not match up");
    return report;
}

std::vector<DominantWeight> dominant_weights_gl(int n, int abs_bound) {
    std::vector<DominantWeight> out;
    std::vector<int> e(n);
    std::function<void(int, int, int)> rec = [&](int i, int maxv, int budget) {
        if (i == n) {
            out.push_back(gl_weight(n, e));
            return;
        }
        for (int v = -budget; v <= std::min(maxv, budget); ++v) {
            e[i] = v;
            rec(i + 1, v, budget - std::abs(v));
        }
    };
    rec(0, abs_bound, abs_bound);
    return out;
}

std::vector<DominantWeight> dominant_weights_sp(int n, int bound) {
    if (n % 2 != 0) throw std::invalid_argument("Sp rank must be even");
    const int r = n / 2;
    std::vector<DominantWeight> out;
    std::vector<int> e(r);
    std::function<void(int, int, int)> rec = [&](int i, int maxv, int budget) {
        if (i == r) {
            out.push_back(sp_weight(n, e));
            return;
        }
        for (int v = 0; v <= std::min(maxv, budget); ++v) {
            e[i] = v;
            rec(i + 1, v, budget - v);
        }
    };
    rec(0, bound, bound);
    return out;
}

} // namespace srt
