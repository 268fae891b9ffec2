#pragma once

#include <string>

#include "zartan/analyze.hpp"

namespace zartan {

struct Provenance {
    std::string input_hash;  // FNV-1a 64 of the input text, hex
    unsigned long long seed = 0;
    std::string version;
};

Provenance make_provenance(const std::string& input, unsigned long long seed);

std::string version_string();

// Machine-readable report with a fixed schema and sorted keys.
std::string report_json(const ComparisonReport& rep, const Provenance& prov);
// One-screen human summary.
std::string report_text(const ComparisonReport& rep);
// Bases and matrices of the three comparison maps.
std::string explain_text(const ComparisonReport& rep);

std::string matrix_str(const Matrix& m);

}  // namespace zartan
