#include "cdopt/dihedral.hpp"

#include <stdexcept>

namespace cdopt {

DihedralGroup::DihedralGroup(int half_order) : m_(half_order) {
    if (half_order < 1)
        throw std::invalid_argument("dihedral half-order must be positive");
}

int DihedralGroup::check(int i) const {
    if (i < 1 || i > 2 * m_)
        throw std::invalid_argument("element index out of range");
    return i - 1;
}

int DihedralGroup::mul(int i, int j) const {
    const int u = check(i), v = check(j);
    const int r1 = u % m_, f1 = u / m_;
    const int r2 = v % m_, f2 = v / m_;
    // b a^k = a^{-k} b, so a reflecting left factor negates the right rotation.
    const int r = (r1 + (f1 ? m_ - r2 : r2)) % m_;
    return r + 1 + (f1 ^ f2) * m_;
}

int DihedralGroup::inverse(int i) const {
    const int u = check(i);
    if (u >= m_) return i;
    return (m_ - u) % m_ + 1;
}

int embed_subgroup(const DihedralGroup& sub, int i) {
    if (i < 1 || i > sub.order())
        throw std::invalid_argument("element index out of range");
    return 2 * i - 1;
}

}
