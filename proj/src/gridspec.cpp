#include "chi2refine/gridspec.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace chi2refine {

namespace {

double parse_number(const std::string& field) {
    if (field.empty()) throw std::invalid_argument("grid spec: empty field");
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size() || !std::isfinite(v))
        throw std::invalid_argument("grid spec: bad number '" + field + "'");
    return v;
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec,
                               GridSpacing default_spacing) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = spec.find(':', start);
        if (pos == std::string::npos) {
            fields.push_back(spec.substr(start));
            break;
        }
        fields.push_back(spec.substr(start, pos - start));
        start = pos + 1;
    }

    if (fields.size() == 1) return {parse_number(fields[0])};
    if (fields.size() != 3 && fields.size() != 4)
        throw std::invalid_argument("grid spec: expected NUMBER or lo:hi:steps[:log]");

    const double lo = parse_number(fields[0]);
    const double hi = parse_number(fields[1]);
    const double steps_real = parse_number(fields[2]);
    const long steps = static_cast<long>(steps_real);
    if (steps_real != static_cast<double>(steps) || steps < 1)
        throw std::invalid_argument("grid spec: steps must be a positive integer");

    bool log_spacing = default_spacing == GridSpacing::log;
    if (fields.size() == 4) {
        if (fields[3] == "log")
            log_spacing = true;
        else if (fields[3] == "lin")
            log_spacing = false;
        else
            throw std::invalid_argument("grid spec: unknown modifier '" + fields[3] + "'");
    }
    if (steps == 1) {
        if (lo != hi)
            throw std::invalid_argument("grid spec: steps=1 requires lo == hi");
        return {lo};
    }
    if (!(lo < hi))
        throw std::invalid_argument("grid spec: requires lo < hi");
    if (log_spacing && !(lo > 0.0))
        throw std::invalid_argument("grid spec: log spacing requires lo > 0");

    std::vector<double> out(steps);
    if (log_spacing) {
        const double llo = std::log(lo), lhi = std::log(hi);
        for (long i = 0; i < steps; ++i)
            out[i] = std::exp(llo + (lhi - llo) * i / (steps - 1));
    } else {
        for (long i = 0; i < steps; ++i)
            out[i] = lo + (hi - lo) * i / (steps - 1);
    }
    out.front() = lo;  // endpoints exact
    out.back() = hi;
    return out;
}

std::string format_sig(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

}  // namespace chi2refine
