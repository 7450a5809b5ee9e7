#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdopt/cocycle.hpp"
#include "cdopt/pivot.hpp"
#include "cdopt/search.hpp"
#include "cdopt/sign_matrix.hpp"

namespace cdopt {

// Unreadable, unwritable or malformed files.
class IoError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

SignMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const SignMatrix& m);

// Spec files hold one spec line; blank lines and trailing whitespace are
// tolerated around it.
CocycleSpec read_spec_file(const std::string& path);
void write_spec_file(const std::string& path, const CocycleSpec& spec);

std::string format_rational(const Rational& r);   // "6" or "10/3"

// Accepts "3", "5/6" and decimal forms like "0.85".
Rational parse_rational(std::string_view text);

// One spectrum line:
// t=<t> det=<d> det_over_pow2=<d> count=<c> distinct=<c> re=<r> eff_num=<n> eff_den=<n>
std::string format_spectrum_record(const SpectrumRecord& rec);
std::string format_spectrum(const std::vector<SpectrumRecord>& recs);

// Pivot line, then "growth=", "cp=", and "rank=" only for singular input.
std::string format_pivot_report(const PivotReport& rep);

// Built-in copies of the shipped fixtures: the order-10 D-optimal design
// and the order-20 Hadamard spec whose restriction attains det 64000.
const SignMatrix& d10_matrix();
const CocycleSpec& d20_hadamard_spec();

}
