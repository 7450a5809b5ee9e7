// Acceptance gate: each criterion prints exactly one [PASS]/[FAIL] line and
// the process exits nonzero when any criterion fails. Expected spectra are
// byte-compared against the shipped fixtures on top of field-level checks.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cdopt/cocycle.hpp"
#include "cdopt/dihedral.hpp"
#include "cdopt/io.hpp"
#include "cdopt/pivot.hpp"
#include "cdopt/restriction.hpp"
#include "cdopt/search.hpp"
#include "cdopt/sign_matrix.hpp"
#include "oracles.hpp"

using cdopt::BigInt;
using cdopt::CocycleSpec;
using cdopt::Rational;
using cdopt::SignMatrix;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& on_fail) {
        if (cond) return;
        ok = false;
        if (!detail.str().empty()) detail << "; ";
        detail << on_fail;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fixture(const std::string& name) {
    return std::string(CDOPT_FIXTURE_DIR) + "/" + name;
}

const cdopt::SpectrumRecord* find_det(const std::vector<cdopt::SpectrumRecord>& recs,
                                      long long det) {
    for (const auto& r : recs)
        if (r.det == det) return &r;
    return nullptr;
}

std::uint64_t total_count(const std::vector<cdopt::SpectrumRecord>& recs) {
    std::uint64_t n = 0;
    for (const auto& r : recs) n += r.count;
    return n;
}

void check_record(Check& c, const std::vector<cdopt::SpectrumRecord>& recs,
                  long long det, std::uint64_t count, std::uint64_t distinct,
                  int re, const Rational& eff) {
    const auto* r = find_det(recs, det);
    if (!r) {
        c.require(false, "no record with det " + std::to_string(det));
        return;
    }
    c.require(r->count == count, "det " + std::to_string(det) + " count " +
                                     std::to_string(r->count) + " != " + std::to_string(count));
    c.require(r->distinct == distinct, "det " + std::to_string(det) + " distinct " +
                                           std::to_string(r->distinct) + " != " +
                                           std::to_string(distinct));
    c.require(r->re == re, "det " + std::to_string(det) + " re " + std::to_string(r->re) +
                               " != " + std::to_string(re));
    c.require(r->eff == eff, "det " + std::to_string(det) + " efficiency " +
                                 cdopt::format_rational(r->eff) + " != " +
                                 cdopt::format_rational(eff));
}

// --- criteria -------------------------------------------------------------

Check c1_spectrum_t3() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const auto recs = cdopt::spectrum(3, Rational(0), 1);
    const double dt = seconds_since(t0);
    c.require(total_count(recs) == 72,
              "Hadamard spec count " + std::to_string(total_count(recs)) + " != 72");
    c.require(recs.size() == 2, "record count " + std::to_string(recs.size()) + " != 2");
    check_record(c, recs, 160, 36, 6, 4, Rational(1));
    check_record(c, recs, 128, 36, 9, 4, Rational(4, 5));
    c.require(cdopt::format_spectrum(recs) == read_file(fixture("expected_t3.spectrum")),
              "formatted spectrum differs from fixture");
    c.require(dt < 5.0, "runtime " + std::to_string(dt) + "s >= 5s");
    if (c.ok) {
        c.detail << "72 specs, 2 records, " << std::fixed;
        c.detail.precision(2);
        c.detail << dt << "s (< 5s)";
    }
    return c;
}

Check c2_spectrum_t5() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const auto recs = cdopt::spectrum(5, Rational(0), 1);
    const double dt = seconds_since(t0);
    c.require(total_count(recs) == 1400,
              "Hadamard spec count " + std::to_string(total_count(recs)) + " != 1400");
    check_record(c, recs, 73728, 100, 25, 8, Rational(1));
    check_record(c, recs, 64000, 1200, 100, 8, Rational(125, 144));
    check_record(c, recs, 41472, 100, 50, 8, Rational(81, 144));
    c.require(cdopt::format_spectrum(recs) == read_file(fixture("expected_t5.spectrum")),
              "formatted spectrum differs from fixture");
    c.require(dt < 120.0, "single-worker runtime " + std::to_string(dt) + "s >= 120s");
    if (c.ok) {
        c.detail << "1400 specs, 3 records, single worker, " << std::fixed;
        c.detail.precision(2);
        c.detail << dt << "s (< 120s)";
    }
    return c;
}

Check c3_spectrum_t7() {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    const auto recs = cdopt::spectrum(7, Rational(0), 8);
    const double dt = seconds_since(t0);
    c.require(total_count(recs) == 11368,
              "Hadamard spec count " + std::to_string(total_count(recs)) + " != 11368");
    c.require(recs.size() == 8, "record count " + std::to_string(recs.size()) + " != 8");
    const std::vector<long long> expect_q = {9477, 8405, 7569, 4096, 2197, 845, 841, 576};
    for (std::size_t i = 0; i < recs.size() && i < expect_q.size(); ++i)
        c.require(recs[i].det_over_pow2 == expect_q[i],
                  "record " + std::to_string(i) + " det/2^13 " + recs[i].det_over_pow2.str() +
                      " != " + std::to_string(expect_q[i]));
    if (const auto* r = find_det(recs, 9477LL << 13)) {
        c.require(r->count == 392 && r->distinct == 196 && r->re == 12,
                  "leading record fields differ from 392(196) re 12");
    } else {
        c.require(false, "no record with det 9477*2^13");
    }
    c.require(cdopt::format_spectrum(recs) == read_file(fixture("expected_t7.spectrum")),
              "formatted spectrum differs from fixture");
    c.require(dt < 3600.0, "8-worker runtime " + std::to_string(dt) + "s >= 3600s");
    if (c.ok) {
        c.detail << "11368 specs, 8 records, 8 workers, " << std::fixed;
        c.detail.precision(2);
        c.detail << dt << "s (< 3600s)";
    }
    return c;
}

Check c4_d10_pivots() {
    Check c;
    const SignMatrix& m = cdopt::d10_matrix();
    c.require(cdopt::determinant(m) == 73728, "determinant != 73728");
    const auto rep = cdopt::ge_complete_pivoting(m);
    c.require(rep.was_cp, "elimination required exchanges");
    const std::vector<Rational> expect = {1, 2, 2, 4, 3, Rational(10, 3), Rational(16, 5),
                                          5, Rational(24, 5), 6};
    c.require(rep.pivots == expect, "pivot pattern differs");
    c.require(rep.growth == 6, "growth " + cdopt::format_rational(rep.growth) + " != 6");
    if (c.ok) c.detail << "det 73728, CP, pivots (1,2,2,4,3,10/3,16/5,5,24/5,6), growth 6";
    return c;
}

Check c5_border_completions() {
    Check c;
    const SignMatrix& m = cdopt::d10_matrix();
    SignMatrix core(7);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) core.set(i, j, m.at(i, j));
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = cdopt::extension_maxdet_check(core);
    const double dt = seconds_since(t0);
    c.require(r.max_det <= 2560, "max |det| " + r.max_det.str() + " > 2560");
    c.require(dt < 10.0, "runtime " + std::to_string(dt) + "s >= 10s");
    if (c.ok) {
        c.detail << "8192 completions, max |det| " << r.max_det.str() << " (<= 2560), "
                 << std::fixed;
        c.detail.precision(2);
        c.detail << dt << "s (< 10s)";
    }
    return c;
}

Check c6_order20_example() {
    Check c;
    const CocycleSpec& spec = cdopt::d20_hadamard_spec();
    const SignMatrix m = cdopt::assemble(spec);
    c.require(cdopt::hadamard_test(m), "order-20 matrix fails the Hadamard test");
    const BigInt det = cdopt::determinant(cdopt::restrict_matrix(m));
    c.require(det == 64000, "restricted determinant " + det.str() + " != 64000");
    c.require(BigInt(125) * (BigInt(1) << 9) == 64000, "64000 != 125 * 2^9");
    if (c.ok) c.detail << "Hadamard at order 20, restriction det 64000 = 125 * 2^9";
    return c;
}

bool prop_gram_formula() {
    std::mt19937_64 rng(0xa11ce501);
    const int ms[] = {3, 5, 6, 10};
    for (int rep = 0; rep < 200; ++rep) {
        const int m = ms[rep % 4];
        const cdopt::DihedralGroup g(m);
        const SignMatrix mat = cdopt::assemble(oracles::random_spec(rng, m));
        const SignMatrix mt = mat.transposed();
        if (!(cdopt::gram_rows_cocyclic(g, mat) == oracles::gram_product(mat, mt))) return false;
        if (!(cdopt::gram_cols_cocyclic(g, mat) == oracles::gram_product(mt, mat))) return false;
    }
    return true;
}

bool prop_row_excess_bound() {
    std::mt19937_64 rng(0xa11ce502);
    const int ts[] = {3, 5, 7};
    for (int rep = 0; rep < 1000; ++rep) {
        const int t = ts[rep % 3];
        const SignMatrix m = cdopt::assemble(oracles::random_spec(rng, t));
        if (cdopt::row_excess(m) < 2 * t - 2) return false;
    }
    return true;
}

bool prop_restriction_commutes() {
    std::mt19937_64 rng(0xa11ce503);
    const int ms[] = {6, 10};
    for (int rep = 0; rep < 500; ++rep) {
        const auto spec = oracles::random_spec(rng, ms[rep % 2]);
        if (!(cdopt::assemble(cdopt::restrict_spec(spec)) ==
              cdopt::restrict_matrix(cdopt::assemble(spec))))
            return false;
    }
    return true;
}

bool prop_family_restricts_to_seed() {
    // Every seed over D_6 in full, plus a sampled family at t = 5.
    for (std::uint64_t bits = 0; bits < 16; ++bits) {
        CocycleSpec seed;
        seed.m = 3;
        seed.k2 = true;
        for (int d = 2; d <= 5; ++d)
            if ((bits >> (d - 2)) & 1) seed.deltas.push_back(d);
        const cdopt::ExtensionFamily fam(seed);
        for (std::uint64_t i = 0; i < fam.size(); ++i)
            if (!(cdopt::restrict_spec(fam.member(i)) == seed)) return false;
    }
    std::mt19937_64 rng(0xa11ce504);
    CocycleSpec seed5;
    seed5.m = 5;
    seed5.k2 = true;
    for (int d = 2; d <= 9; ++d)
        if (rng() & 1) seed5.deltas.push_back(d);
    const cdopt::ExtensionFamily fam5(seed5);
    for (int rep = 0; rep < 128; ++rep)
        if (!(cdopt::restrict_spec(fam5.member(rng() % fam5.size())) == seed5)) return false;
    return true;
}

bool prop_hadamard_iff_gram() {
    std::mt19937_64 rng(0xa11ce505);
    const int ms[] = {3, 4, 5, 6, 10};
    int hits = 0, misses = 0;
    for (int rep = 0; rep < 1000; ++rep) {
        SignMatrix m;
        if (rep % 5 == 4) {
            // Bias one fifth of the draws toward the order-12 Hadamard space
            // so both sides of the equivalence are exercised.
            m = cdopt::assemble(cdopt::hadamard_spec_from_mask(3, rng() % 512));
        } else {
            m = cdopt::assemble(oracles::random_spec(rng, ms[rep % 4]));
        }
        const int n = m.order();
        cdopt::GramMatrix id{n, std::vector<int>(std::size_t(n) * n, 0)};
        for (int i = 1; i <= n; ++i) id.entries[std::size_t(i - 1) * n + (i - 1)] = n;
        const bool gram_is_nI = cdopt::gram_rows(m) == id;
        if (cdopt::hadamard_test(m) != gram_is_nI) return false;
        (gram_is_nI ? hits : misses)++;
    }
    return hits > 0 && misses > 0;
}

bool prop_cp_pivots_are_minor_ratios() {
    std::mt19937_64 rng(0xa11ce506);
    for (int rep = 0; rep < 200; ++rep) {
        const int n = 3 + int(rng() % 10);
        const auto tr = cdopt::cp_transform(oracles::random_sign_matrix(rng, n));
        const auto rep_ge = cdopt::ge_complete_pivoting(tr.matrix);
        if (!rep_ge.was_cp) return false;
        const auto mp = cdopt::pivots_from_minors(tr.matrix);
        if (!rep_ge.singular && mp.defined != std::size_t(n)) return false;
        for (std::size_t k = 0; k < mp.defined; ++k)
            if (mp.pivots[k] != rep_ge.pivots[k]) return false;
    }
    return true;
}

bool prop_pivot_product_is_det() {
    std::mt19937_64 rng(0xa11ce507);
    int done = 0;
    while (done < 100) {
        const int n = 3 + int(rng() % 8);
        const SignMatrix m = oracles::random_sign_matrix(rng, n);
        const BigInt det = cdopt::determinant(m);
        if (det == 0) continue;
        const auto rep = cdopt::ge_complete_pivoting(m);
        Rational prod = 1;
        for (const auto& p : rep.pivots) prod *= p;
        if (prod != Rational(det)) return false;
        ++done;
    }
    return true;
}

Check c7_property_suite() {
    Check c;
    const std::pair<const char*, std::function<bool()>> props[] = {
        {"a:gram-formula", prop_gram_formula},
        {"b:row-excess-bound", prop_row_excess_bound},
        {"c:restriction-commutes", prop_restriction_commutes},
        {"d:family-restricts-to-seed", prop_family_restricts_to_seed},
        {"e:hadamard-iff-gram", prop_hadamard_iff_gram},
        {"f:cp-pivots-minor-ratios", prop_cp_pivots_are_minor_ratios},
        {"g:pivot-product-det", prop_pivot_product_is_det},
    };
    int passed = 0;
    for (const auto& [name, fn] : props) {
        if (fn()) {
            ++passed;
        } else {
            c.require(false, std::string("property ") + name + " failed");
        }
    }
    if (c.ok) c.detail << passed << "/7 properties hold";
    return c;
}

Check c8_determinism() {
    Check c;
    const std::string s1 = cdopt::format_spectrum(cdopt::spectrum(5, Rational(0), 1));
    const std::string s8 = cdopt::format_spectrum(cdopt::spectrum(5, Rational(0), 8));
    c.require(s1 == s8, "1-worker and 8-worker outputs differ");

    const auto path =
        (std::filesystem::temp_directory_path() / "cdopt_acceptance_t5.ck").string();
    std::filesystem::remove(path);
    auto ck = cdopt::SearchCheckpoint::fresh(5, cdopt::default_chunk_size(5));
    cdopt::RunOptions first;
    first.workers = 2;
    first.max_chunks = ck.chunk_count() / 3;
    first.persist_path = path;
    cdopt::run_chunked(ck, first);
    c.require(!ck.complete(), "interrupted run unexpectedly finished");

    auto resumed = cdopt::SearchCheckpoint::load(path);
    cdopt::RunOptions rest;
    rest.workers = 8;
    rest.persist_path = path;
    cdopt::run_chunked(resumed, rest);
    c.require(resumed.complete(), "resumed run did not finish");
    const auto recs = cdopt::records_from_masks(5, resumed.all_hits(), Rational(0));
    c.require(cdopt::format_spectrum(recs) == s1, "interrupt/resume output differs");
    std::filesystem::remove(path);
    if (c.ok) c.detail << "t=5 output byte-identical across 1 vs 8 workers and interrupt/resume";
    return c;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Check()>> criteria[] = {
        {"C1 t=3 spectrum", c1_spectrum_t3},
        {"C2 t=5 spectrum", c2_spectrum_t5},
        {"C3 t=7 spectrum", c3_spectrum_t7},
        {"C4 order-10 design pivots", c4_d10_pivots},
        {"C5 order-8 border completions", c5_border_completions},
        {"C6 order-20 worked example", c6_order20_example},
        {"C7 property suite", c7_property_suite},
        {"C8 determinism", c8_determinism},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Check c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail.str("");
            c.detail << "exception: " << e.what();
        }
        if (!c.ok) ++failures;
        std::printf("[%s] %s: %s\n", c.ok ? "PASS" : "FAIL", name, c.detail.str().c_str());
    }
    std::printf("acceptance: %d/8 criteria passed\n", 8 - failures);
    return failures == 0 ? 0 : 1;
}
