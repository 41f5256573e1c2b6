#include "qorw/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "qorw/errors.hpp"

namespace qorw {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string distribution_csv(const PositionDistribution& dist) {
    std::string out = "m,probability\n";
    for (int i = 0; i < static_cast<int>(dist.probs.size()); ++i) {
        out += std::to_string(dist.site(i));
        out += ',';
        out += format_double(dist.probs[i]);
        out += '\n';
    }
    return out;
}

std::string histogram_csv(const Histogram& h) {
    std::string out = "bin_left,bin_right,mass\n";
    for (int b = 0; b < h.bins(); ++b) {
        out += format_double(h.edges[b]);
        out += ',';
        out += format_double(h.edges[b + 1]);
        out += ',';
        out += format_double(h.masses[b]);
        out += '\n';
    }
    return out;
}

std::string moments_csv(const std::vector<MomentRow>& rows) {
    std::string out = "n,s,value\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += std::to_string(r.s);
        out += ',';
        out += format_double(r.value);
        out += '\n';
    }
    return out;
}

std::string moment_table_csv(const std::vector<MomentTableRow>& rows) {
    std::string out = "s,simulated,quadrature,abs_diff\n";
    for (const auto& r : rows) {
        out += std::to_string(r.s);
        out += ',';
        out += format_double(r.simulated);
        out += ',';
        out += format_double(r.quadrature);
        out += ',';
        out += format_double(std::abs(r.simulated - r.quadrature));
        out += '\n';
    }
    return out;
}

std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::string out = "N,max_entry_error,predicted_sigma\n";
    for (const auto& r : rows) {
        out += std::to_string(r.samples);
        out += ',';
        out += format_double(r.max_entry_error);
        out += ',';
        out += format_double(r.predicted_sigma);
        out += '\n';
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp");
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw resource_error("cannot open output file " + tmp.string());
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw resource_error("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw resource_error("rename failed for " + path + ": " + ec.message());
}

}  // namespace qorw
