#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zartan/analyze.hpp"

namespace zartan {

struct CorpusSummary {
    std::string text;
    size_t passed = 0;
    size_t failed = 0;
};

// The bundled cases (name, problem text), also shipped under data/.
const std::vector<std::pair<std::string, std::string>>& paper_problem_texts();

// Runs the bundled cases and asserts the expected report fields.
CorpusSummary run_paper_corpus();

// Generates `count` seeded instances from a catalogue of constructions that
// are supported by design, analyzes each and asserts every guaranteed
// identity on the resulting report.  Deterministic for a fixed seed.
CorpusSummary run_random_corpus(unsigned long long seed, size_t count);

}  // namespace zartan
