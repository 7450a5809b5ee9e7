#include "cdopt/io.hpp"

#include <fstream>
#include <sstream>

namespace cdopt {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("cannot read file: " + path);
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("cannot write file: " + path);
}

BigInt parse_bigint(std::string_view s, const char* what) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) throw std::invalid_argument(std::string("missing ") + what);
    BigInt v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw std::invalid_argument(std::string("bad ") + what);
        v = v * 10 + (c - '0');
    }
    return neg ? BigInt(-v) : v;
}

}

SignMatrix read_matrix_file(const std::string& path) {
    try {
        return SignMatrix::from_text(read_file(path));
    } catch (const std::invalid_argument& e) {
        throw IoError(path + ": " + e.what());
    }
}

void write_matrix_file(const std::string& path, const SignMatrix& m) {
    write_file(path, m.to_text());
}

CocycleSpec read_spec_file(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            return CocycleSpec::parse(line);
        } catch (const std::invalid_argument& e) {
            throw IoError(path + ": " + e.what());
        }
    }
    throw IoError(path + ": no spec line found");
}

void write_spec_file(const std::string& path, const CocycleSpec& spec) {
    write_file(path, spec.to_text() + "\n");
}

std::string format_rational(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    const std::size_t slash = text.find('/');
    if (slash != std::string_view::npos) {
        const BigInt num = parse_bigint(text.substr(0, slash), "numerator");
        const BigInt den = parse_bigint(text.substr(slash + 1), "denominator");
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    }
    const std::size_t dot = text.find('.');
    if (dot != std::string_view::npos) {
        std::string_view frac = text.substr(dot + 1);
        std::string digits(text.substr(0, dot));
        digits.append(frac);
        BigInt den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        return Rational(parse_bigint(digits, "decimal"), den);
    }
    return Rational(parse_bigint(text, "rational"));
}

std::string format_spectrum_record(const SpectrumRecord& rec) {
    std::string s = "t=" + std::to_string(rec.t);
    s += " det=" + rec.det.str();
    s += " det_over_pow2=" + rec.det_over_pow2.str();
    s += " count=" + std::to_string(rec.count);
    s += " distinct=" + std::to_string(rec.distinct);
    s += " re=" + std::to_string(rec.re);
    s += " eff_num=" + boost::multiprecision::numerator(rec.eff).str();
    s += " eff_den=" + boost::multiprecision::denominator(rec.eff).str();
    return s;
}

std::string format_spectrum(const std::vector<SpectrumRecord>& recs) {
    std::string s;
    for (const SpectrumRecord& r : recs) {
        s += format_spectrum_record(r);
        s.push_back('\n');
    }
    return s;
}

std::string format_pivot_report(const PivotReport& rep) {
    std::string s;
    for (int i = 0; i < rep.n; ++i) {
        if (i) s.push_back(' ');
        s += format_rational(rep.pivots[i]);
    }
    s.push_back('\n');
    s += "growth=" + format_rational(rep.growth) + "\n";
    s += std::string("cp=") + (rep.was_cp ? "true" : "false") + "\n";
    if (rep.singular) s += "rank=" + std::to_string(rep.rank) + "\n";
    return s;
}

const SignMatrix& d10_matrix() {
    static const SignMatrix m = SignMatrix::from_text(
        "10\n"
        "-++++-++++\n"
        "++-+++-+++\n"
        "+-++++++-+\n"
        "---+-++++-\n"
        "----+++-++\n"
        "+--++-+-+-\n"
        "--++++--+-\n"
        "++++-++-++\n"
        "-+-++++---\n"
        "+++-+++++-\n");
    return m;
}

const CocycleSpec& d20_hadamard_spec() {
    static const CocycleSpec spec = CocycleSpec::parse("m=10; d=2,4,8,10,13,14; k1=0; k2=1; k3=1");
    return spec;
}

}
