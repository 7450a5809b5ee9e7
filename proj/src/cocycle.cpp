#include "cdopt/cocycle.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdopt/dihedral.hpp"

namespace cdopt {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, const char* what) {
    if (s.empty()) throw std::invalid_argument(std::string("missing ") + what);
    int v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string("bad ") + what + " in spec text");
        if (v > 214748363) throw std::invalid_argument(std::string(what) + " too large");
        v = v * 10 + (c - '0');
    }
    return v;
}

std::string_view field_value(std::string_view part, std::string_view key) {
    part = trim(part);
    if (part.substr(0, key.size()) != key)
        throw std::invalid_argument("spec text: expected field " + std::string(key));
    return trim(part.substr(key.size()));
}

bool parse_flag(std::string_view part, std::string_view key) {
    const std::string_view v = field_value(part, key);
    if (v == "0") return false;
    if (v == "1") return true;
    throw std::invalid_argument("spec text: flag must be 0 or 1");
}

}

int basis_delta_max(int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    return m % 2 ? 2 * m - 1 : 2 * m - 2;
}

void CocycleSpec::validate() const {
    if (m < 1) throw std::invalid_argument("m must be positive");
    const int dmax = basis_delta_max(m);
    int prev = 1;
    for (int d : deltas) {
        if (d <= prev)
            throw std::invalid_argument("coboundary indices must be strictly increasing");
        if (d < 2 || d > dmax)
            throw std::invalid_argument("coboundary index outside basis range");
        prev = d;
    }
    if (m % 2 && (k1 || k3))
        throw std::invalid_argument("beta1 and gamma require even m");
}

CocycleSpec CocycleSpec::combined(const CocycleSpec& other) const {
    if (other.m != m) throw std::invalid_argument("spec m mismatch");
    CocycleSpec out;
    out.m = m;
    std::set_symmetric_difference(deltas.begin(), deltas.end(), other.deltas.begin(),
                                  other.deltas.end(), std::back_inserter(out.deltas));
    out.k1 = k1 != other.k1;
    out.k2 = k2 != other.k2;
    out.k3 = k3 != other.k3;
    return out;
}

std::string CocycleSpec::to_text() const {
    std::string s = "m=" + std::to_string(m) + "; d=";
    for (std::size_t i = 0; i < deltas.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(deltas[i]);
    }
    s += "; k1=";
    s += k1 ? '1' : '0';
    s += "; k2=";
    s += k2 ? '1' : '0';
    s += "; k3=";
    s += k3 ? '1' : '0';
    return s;
}

CocycleSpec CocycleSpec::parse(std::string_view line) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t semi = line.find(';', start);
        if (semi == std::string_view::npos) {
            parts.push_back(line.substr(start));
            break;
        }
        parts.push_back(line.substr(start, semi - start));
        start = semi + 1;
    }
    if (parts.size() != 5)
        throw std::invalid_argument("spec text must have fields m, d, k1, k2, k3");

    CocycleSpec spec;
    spec.m = parse_int(field_value(parts[0], "m="), "m");
    const std::string_view dlist = field_value(parts[1], "d=");
    if (!dlist.empty()) {
        std::size_t p = 0;
        while (true) {
            const std::size_t comma = dlist.find(',', p);
            const std::string_view tok =
                trim(comma == std::string_view::npos ? dlist.substr(p)
                                                     : dlist.substr(p, comma - p));
            spec.deltas.push_back(parse_int(tok, "coboundary index"));
            if (comma == std::string_view::npos) break;
            p = comma + 1;
        }
    }
    spec.k1 = parse_flag(parts[2], "k1=");
    spec.k2 = parse_flag(parts[3], "k2=");
    spec.k3 = parse_flag(parts[4], "k3=");
    spec.validate();
    return spec;
}

SignMatrix coboundary_matrix(int m, int d) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    const int n = 2 * m;
    if (d < 1 || d > n) throw std::invalid_argument("coboundary index out of range");
    const DihedralGroup g(m);
    SignMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int neg = (i == d) + (j == d) + (g.mul(i, j) == d);
            if (neg & 1) out.flip(i, j);
        }
    return out;
}

SignMatrix beta1_matrix(int m) {
    if (m < 1 || m % 2) throw std::invalid_argument("beta1 requires even m");
    const int n = 2 * m;
    SignMatrix out(n);
    for (int i = 2; i <= n; i += 2)
        for (int j = 2; j <= n; j += 2) out.flip(i, j);
    return out;
}

SignMatrix beta2_matrix(int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    const int n = 2 * m;
    SignMatrix out(n);
    for (int i = m + 1; i <= n; ++i)
        for (int j = m + 1; j <= n; ++j) out.flip(i, j);
    return out;
}

SignMatrix gamma_matrix(int m) {
    if (m < 1 || m % 2) throw std::invalid_argument("gamma requires even m");
    const int n = 2 * m;
    // Block form [[A, A], [B, B]] with A_ij = -1 iff i + j > m + 1 and
    // B_ij = -1 iff i < j (block-local 1-based indices).
    SignMatrix out(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int jj = (j - 1) % m + 1;
            const bool neg = i <= m ? i + jj > m + 1 : i - m < jj;
            if (neg) out.flip(i, j);
        }
    return out;
}

SignMatrix assemble(const CocycleSpec& spec) {
    spec.validate();
    SignMatrix out(2 * spec.m);
    for (int d : spec.deltas) out = out.pointwise(coboundary_matrix(spec.m, d));
    if (spec.k1) out = out.pointwise(beta1_matrix(spec.m));
    if (spec.k2) out = out.pointwise(beta2_matrix(spec.m));
    if (spec.k3) out = out.pointwise(gamma_matrix(spec.m));
    return out;
}

bool verify_cocycle(int m, const SignMatrix& M) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (M.order() != 2 * m) throw std::invalid_argument("matrix order must be 2m");
    const DihedralGroup g(m);
    const int n = 2 * m;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int ij = g.mul(i, j);
            for (int k = 1; k <= n; ++k)
                if (M.at(i, j) * M.at(ij, k) != M.at(j, k) * M.at(i, g.mul(j, k)))
                    return false;
        }
    return true;
}

}
