#pragma once

#include <string>
#include <vector>

#include "zartan/scheme.hpp"

namespace zartan {

// A parsed problem file: the base field, presentations of X (and optionally
// S with the morphism), the two point specifications and the options.
// When S is absent the problem is absolute: S = Spec(base), s its point.
struct Problem {
    FieldPtr base;
    std::vector<std::string> x_vars;
    std::vector<Polynomial> x_ideal;
    RingPtr x_ring;

    bool has_S = false;
    std::vector<std::string> s_vars;
    std::vector<Polynomial> s_ideal;
    RingPtr s_ring;
    std::vector<Polynomial> pullbacks;  // in the X ring, one per S variable

    PointSpec px;
    PointSpec ps;  // trivial closed point when absolute

    Options opts;
    std::string source;
};

// Line-oriented grammar:
//   base = Q | Fp <prime>
//   [S] / [X]   vars = a, b      ideal = p1; p2
//   [map]       y = g            (one assignment per line or ;-separated)
//   [point.x] / [point.s]   kind = closed | generic    tower = p1; p2
//   [options]   order = grevlex | lex   trust_point = true|false   seed = <u64>
// '#' starts a comment.
Problem parse_problem(const std::string& text);

// Canonical rendering; parsing it back yields an identical rendering.
std::string problem_to_text(const Problem& p);

}  // namespace zartan
