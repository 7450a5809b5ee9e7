#include "cdopt/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "cdopt/kernels.hpp"
#include "checkpoint_io.hpp"

namespace cdopt {

namespace {

void require_search_t(int t) {
    if (t < 3 || t % 2 == 0 || t > 15)
        throw std::invalid_argument("t must be odd with 3 <= t <= 15");
}

void require_kappa(const Rational& kappa) {
    if (kappa < 0 || kappa > 1)
        throw std::invalid_argument("kappa must be in [0, 1]");
}

// Packed rows of the scan generators over D_{4t}: the fixed representative
// part beta2 o gamma and the basis coboundaries 2..4t-2.
struct PackedGens {
    int n = 0;
    std::vector<std::uint64_t> base;
    std::vector<std::vector<std::uint64_t>> gens;
};

PackedGens make_gens(int t) {
    const int m = 2 * t;
    PackedGens pg;
    pg.n = 2 * m;
    pg.base = beta2_matrix(m).pointwise(gamma_matrix(m)).rows();
    pg.gens.reserve(2 * m - 3);
    for (int d = 2; d <= 2 * m - 2; ++d)
        pg.gens.push_back(coboundary_matrix(m, d).rows());
    return pg;
}

// Scan counters [c0, c1) in Gray order: counter c stands for the coboundary
// subset gray(c) = c ^ (c >> 1), and one generator toggles per step. Each
// reported hit is rechecked from scratch before being recorded.
std::vector<std::uint64_t> scan_chunk(int t, const PackedGens& pg, std::uint64_t c0,
                                      std::uint64_t c1) {
    const kernels::Ops& k = kernels::active();
    const int n = pg.n;
    std::vector<std::uint64_t> acc = pg.base;
    std::uint64_t gray = c0 ^ (c0 >> 1);
    for (std::size_t b = 0; b < pg.gens.size(); ++b)
        if ((gray >> b) & 1) k.xor_rows(acc.data(), pg.gens[b].data(), n);

    std::vector<std::uint64_t> hits;
    auto check = [&](std::uint64_t mask) {
        if (k.rows_balanced(acc.data(), n, n)) {
            if (!hadamard_test(assemble(hadamard_spec_from_mask(t, mask))))
                throw std::logic_error("scan hit failed the full recheck");
            hits.push_back(mask);
        }
    };
    check(gray);
    for (std::uint64_t c = c0 + 1; c < c1; ++c) {
        const int b = std::countr_zero(c);
        k.xor_rows(acc.data(), pg.gens[b].data(), n);
        gray ^= std::uint64_t{1} << b;
        check(gray);
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

struct GroupKey {
    BigInt det;
    int re;
    bool operator<(const GroupKey& o) const {
        if (det != o.det) return det > o.det;   // determinant descending
        return re < o.re;
    }
};

struct Group {
    std::uint64_t count = 0;
    std::set<std::vector<std::uint64_t>> mats;
};

std::vector<SpectrumRecord> records_from_groups(int t,
                                                const std::map<GroupKey, Group>& groups,
                                                const Rational& kappa) {
    const BigInt bound = maxdet_bound(t);
    BigInt pow2 = 1;
    pow2 <<= 2 * t - 1;
    std::vector<SpectrumRecord> out;
    for (const auto& [key, grp] : groups) {
        if (key.det > bound)
            throw std::logic_error("restriction determinant exceeds the maxdet bound");
        if (key.det % pow2 != 0)
            throw std::logic_error("restriction determinant not divisible by 2^(2t-1)");
        SpectrumRecord rec;
        rec.t = t;
        rec.det = key.det;
        rec.det_over_pow2 = key.det / pow2;
        rec.count = grp.count;
        rec.distinct = grp.mats.size();
        rec.re = key.re;
        rec.eff = efficiency(key.det, t);
        if (rec.eff >= kappa) out.push_back(std::move(rec));
    }
    return out;
}

}

std::uint64_t hadamard_space_size(int t) {
    require_search_t(t);
    return std::uint64_t{1} << (4 * t - 3);
}

CocycleSpec hadamard_spec_from_mask(int t, std::uint64_t mask) {
    if (mask >= hadamard_space_size(t))
        throw std::invalid_argument("mask outside the candidate space");
    CocycleSpec spec;
    spec.m = 2 * t;
    for (int p = 0; p < 4 * t - 3; ++p)
        if ((mask >> p) & 1) spec.deltas.push_back(p + 2);
    spec.k2 = true;
    spec.k3 = true;
    return spec;
}

std::optional<CocycleSpec> embed_search(const CocycleSpec& tilde) {
    const ExtensionFamily fam(tilde);
    for (std::uint64_t idx = 0; idx < fam.beta1_off_size(); ++idx) {
        CocycleSpec cand = fam.member(idx);
        if (hadamard_test(assemble(cand))) return cand;
    }
    return std::nullopt;
}

SearchCheckpoint SearchCheckpoint::fresh(int t, std::uint64_t chunk_size) {
    const std::uint64_t space = hadamard_space_size(t);
    if (chunk_size == 0 || (chunk_size & (chunk_size - 1)) != 0 || chunk_size > space)
        throw std::invalid_argument("chunk size must be a power of two dividing the space");
    SearchCheckpoint ck;
    ck.t = t;
    ck.chunk_size = chunk_size;
    ck.done.assign(space / chunk_size, 0);
    ck.chunk_hits.resize(space / chunk_size);
    return ck;
}

std::uint64_t SearchCheckpoint::remaining() const {
    std::uint64_t r = 0;
    for (std::uint8_t d : done) r += d == 0;
    return r;
}

std::vector<std::uint64_t> SearchCheckpoint::all_hits() const {
    std::vector<std::uint64_t> hits;
    for (const auto& ch : chunk_hits) hits.insert(hits.end(), ch.begin(), ch.end());
    std::sort(hits.begin(), hits.end());
    return hits;
}

void run_chunked(SearchCheckpoint& ck, const RunOptions& opts) {
    // fresh() revalidates t and the chunk geometry
    SearchCheckpoint probe = SearchCheckpoint::fresh(ck.t, ck.chunk_size);
    if (ck.done.size() != probe.done.size() || ck.chunk_hits.size() != probe.done.size())
        throw std::invalid_argument("checkpoint chunk tables have the wrong size");

    std::vector<std::uint64_t> pending;
    for (std::uint64_t i = 0; i < ck.chunk_count(); ++i)
        if (!ck.done[i]) pending.push_back(i);
    if (pending.size() > opts.max_chunks) pending.resize(opts.max_chunks);
    if (pending.empty()) return;

    if (!opts.persist_path.empty() && !detail::checkpoint_file_exists(opts.persist_path))
        ck.save(opts.persist_path);

    const PackedGens pg = make_gens(ck.t);
    const int workers = std::clamp(opts.workers, 1, 64);
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::exception_ptr first_error;

    auto work = [&] {
        try {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= pending.size()) return;
                const std::uint64_t ci = pending[i];
                std::vector<std::uint64_t> hits =
                    scan_chunk(ck.t, pg, ci * ck.chunk_size, (ci + 1) * ck.chunk_size);
                std::lock_guard<std::mutex> lk(mu);
                ck.done[ci] = 1;
                ck.chunk_hits[ci] = std::move(hits);
                if (!opts.persist_path.empty())
                    detail::checkpoint_append_chunk(opts.persist_path, ck, ci);
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(mu);
            if (!first_error) first_error = std::current_exception();
            next.store(pending.size());
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
}

std::uint64_t default_chunk_size(int t) {
    const std::uint64_t space = hadamard_space_size(t);
    std::uint64_t cs = space / 256;
    if (cs < 1024) cs = 1024;
    if (cs > (std::uint64_t{1} << 20)) cs = std::uint64_t{1} << 20;
    if (cs > space) cs = space;
    return cs;
}

std::vector<std::uint64_t> enumerate_hadamard(int t, int workers) {
    SearchCheckpoint ck = SearchCheckpoint::fresh(t, default_chunk_size(t));
    RunOptions opts;
    opts.workers = workers;
    run_chunked(ck, opts);
    return ck.all_hits();
}

std::vector<SpectrumRecord> records_from_masks(int t,
                                               const std::vector<std::uint64_t>& masks,
                                               const Rational& kappa) {
    require_search_t(t);
    require_kappa(kappa);
    std::map<GroupKey, Group> groups;
    for (std::uint64_t mask : masks) {
        const SignMatrix r = restrict_matrix(assemble(hadamard_spec_from_mask(t, mask)));
        Group& g = groups[GroupKey{determinant(r), row_excess(r)}];
        ++g.count;
        g.mats.insert(r.rows());
    }
    return records_from_groups(t, groups, kappa);
}

std::vector<SpectrumRecord> spectrum(int t, const Rational& kappa, int workers) {
    require_search_t(t);
    require_kappa(kappa);
    return records_from_masks(t, enumerate_hadamard(t, workers), kappa);
}

std::vector<SpectrumRecord> spectrum_via_embedding(int t, const Rational& kappa) {
    require_search_t(t);
    require_kappa(kappa);
    const PackedGens pg = make_gens(t);
    const int n = pg.n;
    const kernels::Ops& k = kernels::active();

    // beta2 o gamma o compensator: the fixed part of every gamma-bearing
    // beta1-free family member.
    std::vector<std::uint64_t> gbase = pg.base;
    for (int d : gamma_compensator_deltas(t))
        k.xor_rows(gbase.data(), pg.gens[d - 2].data(), n);

    // Free even coboundaries 2, 4, ..., 4t-2 in member bit order.
    std::vector<const std::uint64_t*> evens;
    for (int i = 0; i <= 2 * t - 2; ++i) evens.push_back(pg.gens[2 * i].data());

    std::map<GroupKey, Group> groups;
    std::vector<std::uint64_t> acc(n);
    const std::uint64_t cands = std::uint64_t{1} << (2 * t - 2);
    for (std::uint64_t cm = 0; cm < cands; ++cm) {
        CocycleSpec tilde;
        tilde.m = t;
        tilde.k2 = true;
        for (int p = 0; p < 2 * t - 2; ++p)
            if ((cm >> p) & 1) tilde.deltas.push_back(p + 2);
        const SignMatrix mt = assemble(tilde);
        const BigInt det = determinant(mt);
        if (efficiency(det, t) < kappa) continue;

        // Count Hadamard members among the seed's gamma-bearing lifts by a
        // Gray scan over the free even coboundaries.
        acc = gbase;
        for (int d : tilde.deltas)
            k.xor_rows(acc.data(), pg.gens[(2 * d - 1) - 2].data(), n);
        std::uint64_t found = k.rows_balanced(acc.data(), n, n) ? 1 : 0;
        const std::uint64_t lifts = std::uint64_t{1} << (2 * t - 1);
        for (std::uint64_t c = 1; c < lifts; ++c) {
            k.xor_rows(acc.data(), evens[std::countr_zero(c)], n);
            if (k.rows_balanced(acc.data(), n, n)) ++found;
        }
        if (found == 0) continue;

        Group& g = groups[GroupKey{det, row_excess(mt)}];
        g.count += found;
        g.mats.insert(mt.rows());
    }
    return records_from_groups(t, groups, kappa);
}

}
