#pragma once

#include <string>
#include <vector>

#include "qorw/distribution.hpp"

namespace qorw {

// All floats at 17 significant digits, LF line endings, header row mandatory.
std::string format_double(double v);

std::string distribution_csv(const PositionDistribution& dist);
std::string histogram_csv(const Histogram& h);

struct MomentRow {
    int n;
    int s;
    double value;
};
std::string moments_csv(const std::vector<MomentRow>& rows);

struct MomentTableRow {
    int s;
    double simulated;
    double quadrature;
};
std::string moment_table_csv(const std::vector<MomentTableRow>& rows);

struct ConvergenceRow {
    long long samples;
    double max_entry_error;
    double predicted_sigma;
};
std::string convergence_csv(const std::vector<ConvergenceRow>& rows);

// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace qorw
