#pragma once

#include <string>
#include <vector>

#include "trpoly/validate.hpp"

namespace trpoly {

enum class OutputFormat { text, json, csv };

/// Shortest round-trip decimal form of a binary64 (std::to_chars), so
/// identical inputs always serialize byte-identically.
std::string format_double(double v);

OutputFormat parse_format(const std::string& s);  // throws std::invalid_argument

struct BoundRecord {
    int n = 0;
    bool odd = false;
    double bound = 0.0;
    double mu_or_eta = 0.0;
    double nu = 0.0;  // even only
};

BoundRecord bound_record(int n);

struct ExtremizerRecord {
    int n = 0;
    bool is_max = true;
    std::vector<double> coefficients;
    double p_at_1 = 0.0;
    double p_at_minus1 = 0.0;
};

ExtremizerRecord extremizer_record(int n, bool is_max);

struct KernelRecord {
    int n = 0;
    std::vector<double> t;
    std::vector<double> im;
};

/// points uniform samples of Im P_max(e^{it}) at t_k = pi k/(points+1).
KernelRecord kernel_record(int n, int points);

std::string emit(const BoundRecord& r, OutputFormat f);
std::string emit(const ExtremizerRecord& r, OutputFormat f);
std::string emit(const KernelRecord& r, OutputFormat f);

/// Table of bounds and coefficients a_2..a_n for degrees from..to,
/// columns padded to the widest row.
std::string emit_table(int from, int to, OutputFormat f);

std::string emit(const CertificationReport& r, OutputFormat f);

/// Reports for every degree in [from, to] plus a pass/fail summary line
/// ("passed k/m" in text; a summary object in json).
std::string emit_verify(const std::vector<CertificationReport>& reports, OutputFormat f);

}  // namespace trpoly
