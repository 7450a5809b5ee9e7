#include "cdopt/restriction.hpp"

#include <algorithm>
#include <stdexcept>

namespace cdopt {

namespace {

void require_odd_t(int t, const char* what) {
    if (t < 3 || t % 2 == 0)
        throw std::invalid_argument(std::string(what) + " requires odd t >= 3");
}

std::vector<int> sym_diff(std::vector<int> a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

}

SignMatrix restrict_matrix(const SignMatrix& m) {
    const int n = m.order();
    if (n % 4 != 0) throw std::invalid_argument("matrix order must be 4t");
    const int h = n / 2;
    std::vector<std::uint64_t> rows(h, 0);
    for (int i = 0; i < h; ++i) {
        const std::uint64_t src = m.row_bits(2 * i + 1);
        for (int j = 0; j < h; ++j)
            rows[i] |= ((src >> (2 * j)) & 1) << j;
    }
    return SignMatrix::from_rows(h, std::move(rows));
}

std::vector<int> gamma_restriction_deltas(int t) {
    require_odd_t(t, "gamma restriction");
    std::vector<int> out;
    for (int i = 1; i <= (t - 1) / 2; ++i) {
        out.push_back(2 * i);
        out.push_back(2 * t - 2 * i + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> gamma_compensator_deltas(int t) {
    require_odd_t(t, "gamma compensator");
    std::vector<int> out;
    for (int i = 1; i <= (t - 1) / 2; ++i) {
        out.push_back(4 * i - 1);
        out.push_back(4 * t - 4 * i + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

CocycleSpec restrict_spec(const CocycleSpec& spec) {
    spec.validate();
    if (spec.m % 2) throw std::invalid_argument("restriction requires even m");
    const int t = spec.m / 2;
    require_odd_t(t, "spec restriction");

    CocycleSpec out;
    out.m = t;
    std::vector<int> acc;
    for (int d : spec.deltas)
        if (d % 2) acc = sym_diff(std::move(acc), {(d + 1) / 2});
    if (spec.k3) acc = sym_diff(std::move(acc), gamma_restriction_deltas(t));
    out.deltas = std::move(acc);
    out.k2 = spec.k2;
    out.validate();
    return out;
}

ExtensionFamily::ExtensionFamily(CocycleSpec tilde) : tilde_(std::move(tilde)) {
    tilde_.validate();
    require_odd_t(tilde_.m, "extension family");
    if (!tilde_.k2)
        throw std::invalid_argument("extension family seed must carry beta2");
    for (int d : tilde_.deltas) fixed_odd_.push_back(2 * d - 1);
}

std::uint64_t ExtensionFamily::size() const {
    return std::uint64_t{1} << (2 * t() + 1);
}

std::uint64_t ExtensionFamily::beta1_off_size() const {
    return std::uint64_t{1} << (2 * t());
}

CocycleSpec ExtensionFamily::member(std::uint64_t index) const {
    if (index >= size()) throw std::invalid_argument("family index out of range");
    const int tt = t();
    CocycleSpec out;
    out.m = 2 * tt;
    std::vector<int> acc = fixed_odd_;
    for (int i = 0; i <= 2 * tt - 2; ++i)
        if ((index >> i) & 1) acc = sym_diff(std::move(acc), {2 * (i + 1)});
    out.k3 = (index >> (2 * tt - 1)) & 1;
    if (out.k3) acc = sym_diff(std::move(acc), gamma_compensator_deltas(tt));
    out.k1 = (index >> (2 * tt)) & 1;
    out.k2 = true;
    out.deltas = std::move(acc);
    out.validate();
    return out;
}

}
