#include "trpoly/output.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "trpoly/chebyshev.hpp"
#include "trpoly/extremal.hpp"
#include "trpoly/pencil.hpp"

namespace trpoly {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

OutputFormat parse_format(const std::string& s) {
    if (s == "text") return OutputFormat::text;
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown format '" + s + "' (expected text|json|csv)");
}

BoundRecord bound_record(int n) {
    const SpectralParams p = spectral_params(n);
    BoundRecord r;
    r.n = n;
    r.odd = p.odd;
    r.bound = sharp_bound(n);
    r.mu_or_eta = p.odd ? p.mu : p.eta;
    r.nu = p.nu;
    return r;
}

ExtremizerRecord extremizer_record(int n, bool is_max) {
    ExtremizerRecord r;
    r.n = n;
    r.is_max = is_max;
    r.coefficients = extremizer(n, is_max ? Which::max : Which::min).coeffs;
    r.p_at_1 = horner(r.coefficients, 1.0).real();
    r.p_at_minus1 = horner(r.coefficients, -1.0).real();
    return r;
}

KernelRecord kernel_record(int n, int points) {
    if (points < 2) throw std::invalid_argument("kernel_record: points < 2");
    KernelRecord r;
    r.n = n;
    r.t.reserve(points);
    r.im.reserve(points);
    for (int k = 1; k <= points; ++k) {
        const double t = M_PI * k / (points + 1.0);
        r.t.push_back(t);
        r.im.push_back(kernel_on_circle(n, t));
    }
    return r;
}

namespace {

const char* parity_name(bool odd) { return odd ? "odd" : "even"; }

ordered_json to_json(const BoundRecord& r) {
    ordered_json j;
    j["n"] = r.n;
    j["parity"] = parity_name(r.odd);
    j["bound"] = r.bound;
    if (r.odd) {
        j["mu"] = r.mu_or_eta;
    } else {
        j["eta"] = r.mu_or_eta;
        j["nu"] = r.nu;
    }
    return j;
}

ordered_json to_json(const CertificationReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["parity"] = parity_name(r.n % 2 == 1);
    j["bound_closed"] = r.bound_closed;
    j["bound_oracle"] = r.bound_oracle;
    j["min_im_on_grid"] = r.min_im_on_grid;
    j["argmin_t"] = r.argmin_t;
    j["pencil_residual"] = r.pencil_residual;
    j["recurrence_residual"] = r.recurrence_residual;
    j["pipeline_vs_closed_gap"] = r.pipeline_vs_closed_gap;
    j["factorization_gap"] = r.factorization_gap;
    j["passed"] = r.passed;
    if (!r.failed_stage.empty()) j["failed_stage"] = r.failed_stage;
    return j;
}

}  // namespace

std::string emit(const BoundRecord& r, OutputFormat f) {
    std::ostringstream os;
    switch (f) {
        case OutputFormat::json:
            os << to_json(r).dump() << '\n';
            break;
        case OutputFormat::csv:
            os << "n,parity,bound,mu_or_eta,nu\n"
               << r.n << ',' << parity_name(r.odd) << ',' << format_double(r.bound) << ','
               << format_double(r.mu_or_eta) << ',' << (r.odd ? "" : format_double(r.nu)) << '\n';
            break;
        case OutputFormat::text:
            os << "N=" << r.n << ' ' << parity_name(r.odd) << " bound=" << format_double(r.bound);
            if (r.odd)
                os << " mu=" << format_double(r.mu_or_eta);
            else
                os << " eta=" << format_double(r.mu_or_eta) << " nu=" << format_double(r.nu);
            os << '\n';
            break;
    }
    return os.str();
}

std::string emit(const ExtremizerRecord& r, OutputFormat f) {
    std::ostringstream os;
    switch (f) {
        case OutputFormat::json: {
            ordered_json j;
            j["n"] = r.n;
            j["which"] = r.is_max ? "max" : "min";
            j["coefficients"] = r.coefficients;
            j["p_at_1"] = r.p_at_1;
            j["p_at_minus1"] = r.p_at_minus1;
            os << j.dump() << '\n';
            break;
        }
        case OutputFormat::csv: {
            os << "n,which,p_at_1,p_at_minus1";
            for (size_t i = 1; i <= r.coefficients.size(); ++i) os << ",a" << i;
            os << '\n'
               << r.n << ',' << (r.is_max ? "max" : "min") << ',' << format_double(r.p_at_1) << ','
               << format_double(r.p_at_minus1);
            for (double c : r.coefficients) os << ',' << format_double(c);
            os << '\n';
            break;
        }
        case OutputFormat::text: {
            os << "N=" << r.n << ' ' << (r.is_max ? "max" : "min") << " coefficients=[";
            for (size_t i = 0; i < r.coefficients.size(); ++i) {
                if (i) os << ',';
                os << format_double(r.coefficients[i]);
            }
            os << "] P(1)=" << format_double(r.p_at_1)
               << " P(-1)=" << format_double(r.p_at_minus1) << '\n';
            break;
        }
    }
    return os.str();
}

std::string emit(const KernelRecord& r, OutputFormat f) {
    std::ostringstream os;
    switch (f) {
        case OutputFormat::json: {
            ordered_json j;
            j["n"] = r.n;
            ordered_json samples = ordered_json::array();
            for (size_t i = 0; i < r.t.size(); ++i)
                samples.push_back(ordered_json{{"t", r.t[i]}, {"im", r.im[i]}});
            j["samples"] = samples;
            os << j.dump() << '\n';
            break;
        }
        case OutputFormat::csv:
        case OutputFormat::text:
            os << "t,im\n";
            for (size_t i = 0; i < r.t.size(); ++i)
                os << format_double(r.t[i]) << ',' << format_double(r.im[i]) << '\n';
            break;
    }
    return os.str();
}

std::string emit_table(int from, int to, OutputFormat f) {
    std::ostringstream os;
    if (f == OutputFormat::json) {
        ordered_json rows = ordered_json::array();
        for (int n = from; n <= to; ++n) {
            ordered_json j;
            j["n"] = n;
            j["parity"] = parity_name(n % 2 == 1);
            j["bound"] = sharp_bound(n);
            const auto coeffs = extremizer(n, Which::max).coeffs;
            j["coefficients"] = std::vector<double>(coeffs.begin() + 1, coeffs.end());
            rows.push_back(j);
        }
        os << rows.dump() << '\n';
        return os.str();
    }
    os << "n,parity,bound";
    for (int j = 2; j <= to; ++j) os << ",a" << j;
    os << '\n';
    for (int n = from; n <= to; ++n) {
        os << n << ',' << parity_name(n % 2 == 1) << ',' << format_double(sharp_bound(n));
        const auto coeffs = extremizer(n, Which::max).coeffs;
        for (int j = 2; j <= to; ++j) os << ',' << (j <= n ? format_double(coeffs[j - 1]) : "");
        os << '\n';
    }
    return os.str();
}

std::string emit(const CertificationReport& r, OutputFormat f) {
    std::ostringstream os;
    switch (f) {
        case OutputFormat::json:
            os << to_json(r).dump() << '\n';
            break;
        case OutputFormat::csv:
            os << r.n << ',' << parity_name(r.n % 2 == 1) << ',' << format_double(r.bound_closed)
               << ',' << format_double(r.bound_oracle) << ',' << format_double(r.min_im_on_grid)
               << ',' << format_double(r.argmin_t) << ',' << format_double(r.pencil_residual)
               << ',' << format_double(r.recurrence_residual) << ','
               << format_double(r.pipeline_vs_closed_gap) << ','
               << format_double(r.factorization_gap) << ',' << (r.passed ? "true" : "false")
               << '\n';
            break;
        case OutputFormat::text:
            os << "n=" << r.n << " parity=" << parity_name(r.n % 2 == 1)
               << " bound_closed=" << format_double(r.bound_closed)
               << " bound_oracle=" << format_double(r.bound_oracle)
               << " min_im=" << format_double(r.min_im_on_grid)
               << " pencil_residual=" << format_double(r.pencil_residual)
               << " recurrence_residual=" << format_double(r.recurrence_residual)
               << " pipeline_gap=" << format_double(r.pipeline_vs_closed_gap)
               << " factorization_gap=" << format_double(r.factorization_gap)
               << " passed=" << (r.passed ? "true" : "false");
            if (!r.failed_stage.empty()) os << " failed_stage=" << r.failed_stage;
            os << '\n';
            break;
    }
    return os.str();
}

std::string emit_verify(const std::vector<CertificationReport>& reports, OutputFormat f) {
    std::ostringstream os;
    int passed = 0;
    for (const auto& r : reports) passed += r.passed ? 1 : 0;
    if (f == OutputFormat::json) {
        ordered_json j;
        ordered_json rows = ordered_json::array();
        for (const auto& r : reports) rows.push_back(to_json(r));
        j["reports"] = rows;
        j["passed"] = passed;
        j["total"] = static_cast<int>(reports.size());
        os << j.dump() << '\n';
        return os.str();
    }
    if (f == OutputFormat::csv)
        os << "n,parity,bound_closed,bound_oracle,min_im_on_grid,argmin_t,pencil_residual,"
              "recurrence_residual,pipeline_vs_closed_gap,factorization_gap,passed\n";
    for (const auto& r : reports) os << emit(r, f);
    if (f == OutputFormat::text) os << "passed " << passed << '/' << reports.size() << '\n';
    return os.str();
}

}  // namespace trpoly
