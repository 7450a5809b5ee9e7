#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cdopt/io.hpp"
#include "cdopt/pivot.hpp"
#include "cdopt/restriction.hpp"
#include "cdopt/search.hpp"

namespace {

// Exit codes: 0 success, 1 search found nothing, 2 usage or argument error,
// 3 file I/O error, 4 integrity or internal consistency error.
enum ExitCode { kOk = 0, kNotFound = 1, kUsage = 2, kIo = 3, kIntegrity = 4 };

int cmd_enumerate(int t, int workers, std::uint64_t chunk_size) {
    cdopt::SearchCheckpoint ck = cdopt::SearchCheckpoint::fresh(
        t, chunk_size ? chunk_size : cdopt::default_chunk_size(t));
    cdopt::RunOptions opts;
    opts.workers = workers;
    cdopt::run_chunked(ck, opts);
    const std::vector<std::uint64_t> hits = ck.all_hits();
    for (std::uint64_t mask : hits)
        std::cout << cdopt::hadamard_spec_from_mask(t, mask).to_text() << "\n";
    std::cout << "count=" << hits.size() << "\n";
    return kOk;
}

int cmd_spectrum(int t, const std::string& kappa_text, int workers,
                 std::uint64_t chunk_size, const std::string& out_path, bool resume) {
    const cdopt::Rational kappa = cdopt::parse_rational(kappa_text);
    if (resume && out_path.empty())
        throw std::invalid_argument("--resume needs --out for the checkpoint path");

    cdopt::SearchCheckpoint ck;
    const std::string ck_path = out_path.empty() ? "" : out_path + ".ck";
    bool loaded = false;
    if (resume) {
        try {
            ck = cdopt::SearchCheckpoint::load(ck_path);
            loaded = true;
        } catch (const cdopt::IoError&) {
            // no checkpoint yet: start fresh
        }
    }
    if (loaded) {
        if (ck.t != t)
            throw std::invalid_argument("checkpoint was created for a different t");
        if (chunk_size && chunk_size != ck.chunk_size)
            throw std::invalid_argument("checkpoint was created with a different chunk size");
    } else {
        ck = cdopt::SearchCheckpoint::fresh(
            t, chunk_size ? chunk_size : cdopt::default_chunk_size(t));
    }

    cdopt::RunOptions opts;
    opts.workers = workers;
    opts.persist_path = ck_path;
    cdopt::run_chunked(ck, opts);

    const std::string text =
        cdopt::format_spectrum(cdopt::records_from_masks(t, ck.all_hits(), kappa));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
        if (!out) throw cdopt::IoError("cannot open file for writing: " + out_path);
        out << text;
        out.flush();
        if (!out) throw cdopt::IoError("cannot write file: " + out_path);
    }
    return kOk;
}

int cmd_embed(const std::string& in_path) {
    const cdopt::CocycleSpec tilde = cdopt::read_spec_file(in_path);
    const std::optional<cdopt::CocycleSpec> found = cdopt::embed_search(tilde);
    if (!found) {
        std::cout << "NOT_FOUND\n";
        return kNotFound;
    }
    std::cout << found->to_text() << "\n";
    return kOk;
}

int cmd_restrict(const std::string& in_path, const std::string& out_path) {
    const cdopt::CocycleSpec spec = cdopt::read_spec_file(in_path);
    const cdopt::CocycleSpec tilde = cdopt::restrict_spec(spec);
    const cdopt::SignMatrix restricted =
        cdopt::restrict_matrix(cdopt::assemble(spec));
    std::cout << tilde.to_text() << "\n" << restricted.to_text();
    if (!out_path.empty()) cdopt::write_matrix_file(out_path, restricted);
    return kOk;
}

int cmd_pivots(const std::string& in_path) {
    const cdopt::SignMatrix m = cdopt::read_matrix_file(in_path);
    std::cout << cdopt::format_pivot_report(cdopt::ge_complete_pivoting(m));
    return kOk;
}

int cmd_extend_check(const std::string& in_path) {
    const cdopt::SignMatrix m =
        in_path.empty() ? cdopt::d10_matrix() : cdopt::read_matrix_file(in_path);
    if (m.order() < 7)
        throw std::invalid_argument("extend-check needs a matrix of order >= 7");
    cdopt::SignMatrix core(7);
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j)
            if (m.at(i, j) < 0) core.flip(i, j);
    const cdopt::ExtensionMaxDet result = cdopt::extension_maxdet_check(core);
    std::cout << "max=" << result.max_det.str() << "\n"
              << "attained=" << result.attained << "\n";
    return kOk;
}

}

int main(int argc, char** argv) {
    CLI::App app{"cocyclic Hadamard matrices, embedded D-optimal designs and "
                 "complete-pivoting analysis over dihedral groups"};
    app.require_subcommand(1);

    int t = 3;
    std::string kappa = "0";
    int workers = 1;
    std::uint64_t chunk_size = 0;
    std::string in_path, out_path;
    bool resume = false;

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "List every Hadamard spec over D_4t carrying beta2 and gamma");
    enumerate->add_option("--t", t, "odd subgroup parameter t >= 3")->required();
    enumerate->add_option("--workers", workers, "worker threads");
    enumerate->add_option("--chunk-size", chunk_size, "scan chunk size (power of two)");

    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Determinant spectrum of the restrictions of all Hadamard specs");
    spectrum->add_option("--t", t, "odd subgroup parameter t >= 3")->required();
    spectrum->add_option("--kappa", kappa, "efficiency threshold (rational or decimal)");
    spectrum->add_option("--workers", workers, "worker threads");
    spectrum->add_option("--chunk-size", chunk_size, "scan chunk size (power of two)");
    spectrum->add_option("--out", out_path, "output file (checkpoint goes to <out>.ck)");
    spectrum->add_flag("--resume", resume, "resume from <out>.ck when present");

    CLI::App* embed = app.add_subcommand(
        "embed", "Find a Hadamard spec over D_4t restricting to the given spec");
    embed->add_option("--in", in_path, "file with a spec over D_2t")->required();

    CLI::App* restrict_cmd = app.add_subcommand(
        "restrict", "Restrict a spec over D_4t to the odd-index subgroup");
    restrict_cmd->add_option("--in", in_path, "file with a spec over D_4t")->required();
    restrict_cmd->add_option("--out", out_path, "also write the restricted matrix here");

    CLI::App* pivots = app.add_subcommand(
        "pivots", "Exact complete-pivoting pivots, growth and CP status");
    pivots->add_option("--in", in_path, "matrix file")->required();

    CLI::App* extend_check = app.add_subcommand(
        "extend-check", "Max |det| over the 2^13 borderings of the leading 7x7 block");
    extend_check->add_option("--in", in_path, "matrix file (default: built-in order-10 design)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*enumerate) return cmd_enumerate(t, workers, chunk_size);
        if (*spectrum) return cmd_spectrum(t, kappa, workers, chunk_size, out_path, resume);
        if (*embed) return cmd_embed(in_path);
        if (*restrict_cmd) return cmd_restrict(in_path, out_path);
        if (*pivots) return cmd_pivots(in_path);
        if (*extend_check) return cmd_extend_check(in_path);
    } catch (const cdopt::IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const cdopt::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::logic_error& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    }
    return kUsage;
}
