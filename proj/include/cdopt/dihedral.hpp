#pragma once

namespace cdopt {

// Dihedral group of order 2m with presentation <a,b : a^m = b^2 = (ab)^2 = 1>
// and element ordering {1, a, ..., a^(m-1), b, ab, ..., a^(m-1)b}.
// Indices are 1-based: i <= m is the rotation a^(i-1), i > m is a^(i-m-1)b.
class DihedralGroup {
public:
    explicit DihedralGroup(int half_order);

    int half_order() const { return m_; }
    int order() const { return 2 * m_; }

    // Index of g_i * g_j under the fixed ordering.
    int mul(int i, int j) const;

    // Index of g_i^{-1}; reflections (i > m) are involutions.
    int inverse(int i) const;

private:
    int m_;
    int check(int i) const;
};

// Index in D_{4t} of the i-th element of the subgroup <a^2, b> ~= D_{2t},
// where `sub` is D_{2t}. The image is exactly the odd indices 1, 3, ..., 4t-1.
int embed_subgroup(const DihedralGroup& sub, int i);

}
