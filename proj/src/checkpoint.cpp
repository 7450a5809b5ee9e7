#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "cdopt/io.hpp"
#include "cdopt/search.hpp"
#include "checkpoint_io.hpp"

// Checkpoint file layout (little-endian):
//   8 bytes  magic "CDHCKPT1"
//   u32      version (1)
//   u32      t
//   u64      chunk size
//   u64      chunk count
//   u64      FNV-1a digest of the bytes above
// followed by one record per completed chunk, in completion order:
//   u64      chunk index
//   u64      hit count
//   u64[]    hit masks, ascending
//   u64      FNV-1a digest of the record bytes above
// Records are appended and flushed one at a time, so a run interrupted
// between chunks leaves a loadable file.

namespace cdopt {

namespace {

constexpr char kMagic[8] = {'C', 'D', 'H', 'C', 'K', 'P', 'T', '1'};
constexpr std::uint32_t kVersion = 1;

std::uint64_t fnv1a(const char* data, std::size_t len) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= static_cast<unsigned char>(data[i]);
        h *= 1099511628211ull;
    }
    return h;
}

void put_u32(std::string& buf, std::uint32_t v) {
    char b[4];
    std::memcpy(b, &v, 4);
    buf.append(b, 4);
}

void put_u64(std::string& buf, std::uint64_t v) {
    char b[8];
    std::memcpy(b, &v, 8);
    buf.append(b, 8);
}

std::string header_bytes(const SearchCheckpoint& ck) {
    std::string buf(kMagic, 8);
    put_u32(buf, kVersion);
    put_u32(buf, static_cast<std::uint32_t>(ck.t));
    put_u64(buf, ck.chunk_size);
    put_u64(buf, ck.chunk_count());
    put_u64(buf, fnv1a(buf.data(), buf.size()));
    return buf;
}

std::string record_bytes(const SearchCheckpoint& ck, std::uint64_t idx) {
    std::string buf;
    put_u64(buf, idx);
    const std::vector<std::uint64_t>& hits = ck.chunk_hits[idx];
    put_u64(buf, hits.size());
    for (std::uint64_t h : hits) put_u64(buf, h);
    put_u64(buf, fnv1a(buf.data(), buf.size()));
    return buf;
}

class Reader {
public:
    explicit Reader(std::ifstream& in) : in_(in) {}

    bool read_exact(char* out, std::size_t len, bool allow_clean_eof) {
        in_.read(out, static_cast<std::streamsize>(len));
        const std::size_t got = static_cast<std::size_t>(in_.gcount());
        if (got == len) return true;
        if (got == 0 && allow_clean_eof && in_.eof()) return false;
        throw IntegrityError("checkpoint file is truncated");
    }

    std::uint32_t u32() {
        char b[4];
        read_exact(b, 4, false);
        std::uint32_t v;
        std::memcpy(&v, b, 4);
        return v;
    }

    std::uint64_t u64() {
        char b[8];
        read_exact(b, 8, false);
        std::uint64_t v;
        std::memcpy(&v, b, 8);
        return v;
    }

private:
    std::ifstream& in_;
};

}

void SearchCheckpoint::save(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write checkpoint file: " + tmp);
        const std::string hdr = header_bytes(*this);
        out.write(hdr.data(), static_cast<std::streamsize>(hdr.size()));
        for (std::uint64_t i = 0; i < chunk_count(); ++i) {
            if (!done[i]) continue;
            const std::string rec = record_bytes(*this, i);
            out.write(rec.data(), static_cast<std::streamsize>(rec.size()));
        }
        out.flush();
        if (!out) throw IoError("cannot write checkpoint file: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot replace checkpoint file: " + path);
}

SearchCheckpoint SearchCheckpoint::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open checkpoint file: " + path);
    Reader rd(in);

    char magic[8];
    rd.read_exact(magic, 8, false);
    if (std::memcmp(magic, kMagic, 8) != 0)
        throw IntegrityError("checkpoint magic mismatch");
    if (rd.u32() != kVersion) throw IntegrityError("unsupported checkpoint version");
    const std::uint32_t t = rd.u32();
    const std::uint64_t chunk_size = rd.u64();
    const std::uint64_t nchunks = rd.u64();
    const std::uint64_t hdr_digest = rd.u64();

    SearchCheckpoint ck;
    try {
        ck = SearchCheckpoint::fresh(static_cast<int>(t), chunk_size);
    } catch (const std::invalid_argument&) {
        throw IntegrityError("checkpoint header has invalid search parameters");
    }
    if (ck.chunk_count() != nchunks)
        throw IntegrityError("checkpoint header has an inconsistent chunk count");
    const std::string hdr = header_bytes(ck);
    std::uint64_t expect;
    std::memcpy(&expect, hdr.data() + hdr.size() - 8, 8);
    if (expect != hdr_digest) throw IntegrityError("checkpoint header checksum mismatch");

    char first[8];
    while (rd.read_exact(first, 8, true)) {
        std::uint64_t idx;
        std::memcpy(&idx, first, 8);
        const std::uint64_t nhits = rd.u64();
        if (idx >= nchunks) throw IntegrityError("checkpoint record index out of range");
        if (ck.done[idx]) throw IntegrityError("duplicate checkpoint record");
        if (nhits > chunk_size) throw IntegrityError("checkpoint record has too many hits");
        std::vector<std::uint64_t> hits(nhits);
        for (std::uint64_t& h : hits) h = rd.u64();
        const std::uint64_t digest = rd.u64();
        std::string buf;
        put_u64(buf, idx);
        put_u64(buf, nhits);
        for (std::uint64_t h : hits) put_u64(buf, h);
        if (fnv1a(buf.data(), buf.size()) != digest)
            throw IntegrityError("checkpoint record checksum mismatch");
        const std::uint64_t space = hadamard_space_size(static_cast<int>(t));
        for (std::size_t i = 0; i < hits.size(); ++i) {
            if (hits[i] >= space)
                throw IntegrityError("checkpoint hit mask out of range");
            if (i && hits[i] <= hits[i - 1])
                throw IntegrityError("checkpoint hit masks out of order");
        }
        ck.done[idx] = 1;
        ck.chunk_hits[idx] = std::move(hits);
    }
    return ck;
}

namespace detail {

bool checkpoint_file_exists(const std::string& path) {
    std::error_code ec;
    return std::filesystem::exists(path, ec);
}

void checkpoint_append_chunk(const std::string& path, const SearchCheckpoint& ck,
                             std::uint64_t chunk_index) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    if (!out) throw IoError("cannot append to checkpoint file: " + path);
    const std::string rec = record_bytes(ck, chunk_index);
    out.write(rec.data(), static_cast<std::streamsize>(rec.size()));
    out.flush();
    if (!out) throw IoError("cannot append to checkpoint file: " + path);
}

}

}
