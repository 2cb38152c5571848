#pragma once

#include <vector>

#include "srt/matrix.hpp"

namespace srt {

enum class GroupKind { GeneralLinear, Orthogonal, Symplectic };

// Doubles as an ambient-algebra descriptor (gl_m, so_2m, sp_2m; param = m)
// and an acting-group descriptor (GL_n, O_n, Sp_n; param = n = dim V).
struct GroupType {
    GroupKind kind = GroupKind::GeneralLinear;
    int param = 0;

    // Matrix size of the ambient algebra this descriptor names.
    int ambient_size() const {
        return kind == GroupKind::GeneralLinear ? param : 2 * param;
    }

    bool operator==(const GroupType&) const = default;
};

inline GroupType gl_ambient(int m) { return {GroupKind::GeneralLinear, m}; }
inline GroupType so_ambient(int m) { return {GroupKind::Orthogonal, m}; }
inline GroupType sp_ambient(int m) { return {GroupKind::Symplectic, m}; }

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    int count_eq(int value) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

Partition transpose(const Partition& p);

// All partitions of total with parts bounded by max_part (0 = unbounded).
std::vector<Partition> partitions_of(int total, int max_part = 0);

enum class Tag { None, I, II };

enum class Normality { Normal, Unknown };

struct OrbitLabel {
    GroupType ambient;
    Partition partition;
    Tag tag = Tag::None;

    bool operator==(const OrbitLabel&) const = default;
};

// Labels of the adjoint orbits with Jordan type p, if any. Empty when the
// parity condition fails (sp: odd parts need even multiplicity; so: even
// parts need even multiplicity); two tagged labels for very even orthogonal
// partitions. A size mismatch is an argument error, not an empty answer.
std::vector<OrbitLabel> validate_orbit(const GroupType& ambient, const Partition& p);

long long ambient_algebra_dim(const GroupType& ambient);

// Fixed split forms: sp_2m Gram [[0,I],[-I,0]], so_2m Gram [[0,I],[I,0]].
Mat ambient_gram(const GroupType& ambient);

std::vector<Mat> ambient_algebra_basis(const GroupType& ambient);

// Nilpotent element of the ambient algebra with Jordan type o.partition.
// Orthogonal tag convention: in the 2-bounded full-rank case tag I is the
// representative whose image is the span of the first m coordinates; tag II
// is its conjugate under the hyperbolic swap e_m <-> f_m.
Mat nilpotent_representative(const OrbitLabel& o);

long long orbit_dim(const OrbitLabel& o);

// dim(ambient) minus the exact nullity of ad(representative) on the ambient
// algebra. Agrees with orbit_dim everywhere; on gl the two routes differ in
// implementation and serve as mutual checks.
long long orbit_dim_centralizer(const OrbitLabel& o);

// Closure order, 2-bounded regime only: count parts equal to 2, with the two
// tagged full-rank orthogonal orbits mutually incomparable.
bool closure_leq(const OrbitLabel& a, const OrbitLabel& b);

Normality is_normal(const OrbitLabel& o);

// Jordan type of a nilpotent matrix, from the rank sequence of its powers.
Partition jordan_type(const Mat& f);

} // namespace srt
