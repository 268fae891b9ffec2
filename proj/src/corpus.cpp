#include "zartan/corpus.hpp"

#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

namespace zartan {

namespace {

// Bundled problems; the same texts are shipped under data/.
const std::vector<std::pair<std::string, std::string>> kPaperProblems = {
    {"counterexample_generic_line",
     "# Function-field point of the affine line over Q\n"
     "base = Q\n"
     "[X]\nvars = t\n"
     "[point.x]\nkind = generic\n"},
    {"gaussian_point_line",
     "# The point (x^2 + 1) of the affine line over Q\n"
     "base = Q\n"
     "[X]\nvars = x\n"
     "[point.x]\nkind = closed\ntower = x^2 + 1\n"},
    {"node_origin",
     "# Nodal cubic at the origin\n"
     "base = Q\n"
     "[X]\nvars = x, y\nideal = y^2 - x^3 - x^2\n"
     "[point.x]\nkind = closed\ntower = x; y\n"},
    {"relative_plane_line",
     "# Projection of the plane to a line, at the origin\n"
     "base = Q\n"
     "[S]\nvars = y\n"
     "[X]\nvars = x, y\n"
     "[map]\ny = y\n"
     "[point.x]\nkind = closed\ntower = x; y\n"
     "[point.s]\nkind = closed\ntower = y\n"},
    {"inseparable_char2",
     "# v^2 = u in characteristic 2, generic over generic\n"
     "base = Fp 2\n"
     "[S]\nvars = u\n"
     "[X]\nvars = u, v\nideal = v^2 - u\n"
     "[map]\nu = u\n"
     "[point.x]\nkind = generic\n"
     "[point.s]\nkind = generic\n"},
    {"separable_char3",
     "# The same family in characteristic 3 is separable\n"
     "base = Fp 3\n"
     "[S]\nvars = u\n"
     "[X]\nvars = u, v\nideal = v^2 - u\n"
     "[map]\nu = u\n"
     "[point.x]\nkind = generic\n"
     "[point.s]\nkind = generic\n"},
    {"spec_of_base",
     "# Spec Q at its only point\n"
     "base = Q\n"
     "[X]\nvars =\n"
     "[point.x]\nkind = closed\n"},
};

using Checks = std::vector<std::string>;

void want(Checks& bad, bool cond, const std::string& what) {
    if (!cond) bad.push_back(what);
}

void check_guarantees(Checks& bad, const ComparisonReport& r) {
    want(bad, r.lemma1_ok, "lemma1");
    want(bad, r.lemma2.ok, "lemma2");
    want(bad, r.conormal.seq5_ok, "seq5");
    want(bad, r.conormal.seq6_ok, "seq6");
    want(bad, r.consistent, "theorem consistency");
    want(bad, !r.theta.iso || r.phi.iso, "main lemma");
    want(bad, !r.upsilon.defined || r.upsilon.identities_hold, "upsilon identities");
    want(bad, r.dim_zariski_relative == r.dim_fiber_tangent, "lemma1 dims");
}

Checks check_paper_case(const std::string& name, const ComparisonReport& r) {
    Checks bad;
    check_guarantees(bad, r);
    auto dims = [&](size_t z, size_t g, size_t zr, size_t f) {
        want(bad, r.dim_zariski == z, "dim_zariski");
        want(bad, r.dim_grothendieck == g, "dim_grothendieck");
        want(bad, r.dim_zariski_relative == zr, "dim_zariski_relative");
        want(bad, r.dim_fiber_tangent == f, "dim_fiber_tangent");
    };
    if (name == "counterexample_generic_line") {
        dims(0, 1, 0, 0);
        want(bad, !r.phi.iso && !r.phi.injective, "phi not injective");
        want(bad, !r.extension.algebraic, "not algebraic");
        want(bad, !r.extension.separable.has_value(), "separable undefined");
        want(bad, !r.hypothesis && !r.conclusion, "verdict");
    } else if (name == "gaussian_point_line") {
        dims(1, 1, 1, 1);
        want(bad, r.phi.iso && r.theta.iso, "phi and theta iso");
        want(bad, r.upsilon.defined && r.upsilon.identities_hold, "upsilon");
        want(bad, r.extension.algebraic && r.extension.separable == true, "separable algebraic");
        want(bad, r.extension.omega_dim == 0, "omega 0");
    } else if (name == "node_origin") {
        dims(2, 2, 2, 2);
        want(bad, r.phi.iso && is_identity(r.phi.columns), "phi identity");
        want(bad, r.conormal.delta_rank == 2, "delta rank 2");
    } else if (name == "relative_plane_line") {
        dims(2, 1, 1, 1);
        want(bad, r.phi.iso, "phi iso onto relative");
        want(bad, !r.theta.iso, "theta not iso");
        want(bad, r.hypothesis && r.conclusion, "verdict");
    } else if (name == "inseparable_char2") {
        dims(0, 1, 0, 0);
        want(bad, r.extension.algebraic && r.extension.separable == false, "inseparable");
        want(bad, r.extension.omega_dim == 1, "omega 1");
        want(bad, !r.phi.injective && !r.phi.iso, "phi not injective");
    } else if (name == "separable_char3") {
        dims(0, 0, 0, 0);
        want(bad, r.phi.iso && r.theta.iso, "iso");
        want(bad, r.extension.separable == true, "separable");
    } else if (name == "spec_of_base") {
        dims(0, 0, 0, 0);
        want(bad, r.phi.iso && r.theta.iso, "empty maps are iso");
        want(bad, r.upsilon.defined && r.upsilon.identities_hold, "upsilon");
    } else {
        bad.push_back("unknown case");
    }
    return bad;
}

std::string dims_str(const ComparisonReport& r) {
    std::ostringstream out;
    out << "dims=(" << r.dim_zariski << "," << r.dim_grothendieck << ","
        << r.dim_zariski_relative << "," << r.dim_fiber_tangent << ")";
    return out.str();
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& paper_problem_texts() {
    return kPaperProblems;
}

CorpusSummary run_paper_corpus() {
    CorpusSummary sum;
    std::ostringstream out;
    out << "corpus mode=paper cases=" << kPaperProblems.size() << "\n";
    for (const auto& [name, text] : kPaperProblems) {
        Checks bad;
        std::string extra;
        try {
            ComparisonReport rep = analyze(parse_problem(text));
            bad = check_paper_case(name, rep);
            extra = dims_str(rep);
        } catch (const std::exception& e) {
            bad.push_back(std::string("exception: ") + e.what());
        }
        if (bad.empty()) {
            ++sum.passed;
            out << "  " << name << ": ok " << extra << "\n";
        } else {
            ++sum.failed;
            out << "  " << name << ": FAIL";
            for (const std::string& b : bad) out << " [" << b << "]";
            out << "\n";
        }
    }
    out << "passed " << sum.passed << " failed " << sum.failed << "\n";
    sum.text = out.str();
    return sum;
}

namespace {

// Deterministic instance generation.  Every construction below is valid by
// design: points lie on their schemes, towers come from a catalogue of
// certified-irreducible steps, morphism images match.
struct Gen {
    std::mt19937_64 rng;

    long pick(long lo, long hi) {
        return lo + (long)(rng() % (unsigned long long)(hi - lo + 1));
    }
    template <typename T>
    const T& choose(const std::vector<T>& v) {
        return v[rng() % v.size()];
    }

    // ("Q", 0) or ("Fp <p>", p)
    std::pair<std::string, long> base() {
        long p = choose(std::vector<long>{0, 2, 3, 5});
        if (p == 0) return {"Q", 0};
        return {"Fp " + std::to_string(p), p};
    }

    // Nonzero coefficient as text.
    std::string coeff(long p) {
        long c = p == 0 ? pick(-3, 3) : pick(0, p - 1);
        if (c == 0) c = 1;
        return "(" + std::to_string(c) + ")";
    }

    // Random polynomial in x of degree <= 3 (possibly constant).
    std::string upoly(long p) {
        std::ostringstream out;
        bool first = true;
        for (int d = 3; d >= 0; --d) {
            if (pick(0, 1) == 0 && !(d == 0 && first)) continue;
            out << (first ? "" : " + ") << coeff(p);
            if (d >= 1) out << "*x" << (d > 1 ? "^" + std::to_string(d) : "");
            first = false;
        }
        return out.str();
    }

    // Random plane polynomial vanishing at the origin, degree <= 3.
    std::string origin_poly(long p) {
        static const std::vector<std::string> monos = {"x",     "y",     "x^2", "x*y", "y^2",
                                                       "x^3", "x^2*y", "x*y^2", "y^3"};
        std::ostringstream out;
        bool first = true;
        for (const std::string& m : monos) {
            if (pick(0, 2) != 0) continue;
            out << (first ? "" : " + ") << coeff(p) << "*" << m;
            first = false;
        }
        if (first) return "y^2 - x^3";
        return out.str();
    }

    // Catalogued irreducible tower step on the line, per characteristic.
    std::string line_tower(long p) {
        static const std::vector<std::string> q = {"x^2 + 1", "x^2 - 2", "x^3 - 2",
                                                   "x^2 + x + 1", "x - 3", "x + 2", "x"};
        static const std::vector<std::string> f2 = {"x^2 + x + 1", "x^3 + x + 1", "x", "x + 1"};
        static const std::vector<std::string> f3 = {"x^2 + 1", "x^3 + 2*x + 1", "x", "x + 1"};
        static const std::vector<std::string> f5 = {"x^2 + 2", "x + 1", "x", "x + 3"};
        switch (p) {
            case 2: return choose(f2);
            case 3: return choose(f3);
            case 5: return choose(f5);
            default: return choose(q);
        }
    }
};

struct Instance {
    std::string name;
    std::string text;
};

Instance make_instance(size_t idx, Gen& g) {
    auto [bs, p] = g.base();
    std::ostringstream t;
    t << "base = " << bs << "\n";
    switch (idx % 7) {
        case 0: {  // plane curve through the origin, absolute
            t << "[X]\nvars = x, y\nideal = " << g.origin_poly(p) << "\n"
              << "[point.x]\nkind = closed\ntower = x; y\n";
            return {"plane_curve_origin", t.str()};
        }
        case 1: {  // catalogued algebraic point on the line, absolute
            t << "[X]\nvars = x\n[point.x]\nkind = closed\ntower = " << g.line_tower(p) << "\n";
            return {"line_algebraic_point", t.str()};
        }
        case 2: {  // plane curve through the origin over a line base
            t << "[S]\nvars = y\n[X]\nvars = x, y\nideal = " << g.origin_poly(p) << "\n"
              << "[map]\ny = y\n[point.x]\nkind = closed\ntower = x; y\n"
              << "[point.s]\nkind = closed\ntower = y\n";
            return {"relative_curve_origin", t.str()};
        }
        case 3: {  // graph of a polynomial, rational point, relative over x
            long a = p == 0 ? g.pick(-2, 2) : g.pick(0, p - 1);
            std::string gp = g.upoly(p);
            t << "[S]\nvars = u\n[X]\nvars = x, y\nideal = y - (" << gp << ")\n"
              << "[map]\nu = x\n[point.x]\nkind = closed\ntower = x - (" << a << "); y - ("
              << gp << ")\n"
              << "[point.s]\nkind = closed\ntower = u - (" << a << ")\n";
            return {"graph_relative_point", t.str()};
        }
        case 4: {  // v^q = u family, generic over generic
            long q = g.pick(2, 3);
            t << "[S]\nvars = u\n[X]\nvars = u, v\nideal = v^" << q << " - u\n"
              << "[map]\nu = u\n[point.x]\nkind = generic\n[point.s]\nkind = generic\n";
            return {"power_family_generic", t.str()};
        }
        case 5: {  // generic point of a graph curve, absolute
            t << "[X]\nvars = x, y\nideal = y - (" << g.upoly(p) << ")\n"
              << "[point.x]\nkind = generic\n";
            return {"graph_generic_point", t.str()};
        }
        default: {  // tower of height two on the plane, absolute
            std::string step1 = g.line_tower(p);
            std::string step2 = g.pick(0, 1) ? "y - x" : "y - x^2";
            t << "[X]\nvars = x, y\n[point.x]\nkind = closed\ntower = " << step1 << "; " << step2
              << "\n";
            return {"plane_tower_point", t.str()};
        }
    }
}

}  // namespace

CorpusSummary run_random_corpus(unsigned long long seed, size_t count) {
    CorpusSummary sum;
    Gen g{std::mt19937_64(seed)};
    std::ostringstream out;
    out << "corpus mode=random seed=" << seed << " count=" << count << "\n";
    for (size_t i = 0; i < count; ++i) {
        Instance inst = make_instance(i, g);
        std::ostringstream id;
        id << std::setw(3) << std::setfill('0') << i + 1;
        Checks bad;
        std::string extra;
        try {
            Problem prob = parse_problem(inst.text);
            prob.opts.seed = g.rng();
            ComparisonReport rep = analyze(prob);
            check_guarantees(bad, rep);
            extra = dims_str(rep);
        } catch (const std::exception& e) {
            bad.push_back(std::string("exception: ") + e.what());
        }
        if (bad.empty()) {
            ++sum.passed;
            out << "  " << id.str() << " " << inst.name << ": ok " << extra << "\n";
        } else {
            ++sum.failed;
            out << "  " << id.str() << " " << inst.name << ": FAIL";
            for (const std::string& b : bad) out << " [" << b << "]";
            out << "\n";
        }
    }
    out << "passed " << sum.passed << " failed " << sum.failed << "\n";
    sum.text = out.str();
    return sum;
}

}  // namespace zartan
