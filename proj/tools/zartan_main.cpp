#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "zartan/corpus.hpp"
#include "zartan/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw zartan::InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Command-line overrides applied on top of the file's [options].
struct Overrides {
    std::optional<std::string> order;
    bool trust_point = false;
    std::optional<unsigned long long> seed;

    void apply(zartan::Problem& prob) const {
        if (order)
            prob.opts.order = *order == "lex" ? zartan::MonomialOrder::Kind::Lex
                                              : zartan::MonomialOrder::Kind::Grevlex;
        if (trust_point) prob.opts.trust_point = true;
        if (seed) prob.opts.seed = *seed;
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Tangent-space comparison for finitely presented affine schemes"};
    app.require_subcommand(1);

    std::string file;
    bool as_text = false, as_json = false;
    Overrides ov;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "problem file")->required();
        cmd->add_option("--order", ov.order, "monomial order: lex | grevlex")
            ->check(CLI::IsMember({"lex", "grevlex"}));
        cmd->add_flag("--trust-point", ov.trust_point,
                      "skip irreducibility certification of tower steps");
        cmd->add_option("--seed", ov.seed, "random seed");
    };

    CLI::App* an = app.add_subcommand("analyze", "analyze a problem file");
    add_common(an);
    an->add_flag("--json", as_json, "machine-readable report (default)");
    an->add_flag("--text", as_text, "human-readable report");

    CLI::App* ex = app.add_subcommand("explain", "print bases and matrices");
    add_common(ex);

    CLI::App* co = app.add_subcommand("corpus", "run the bundled or randomized suites");
    std::string mode = "paper";
    unsigned long long cseed = 42;
    size_t count = 60;
    co->add_option("--mode", mode, "paper | random")->check(CLI::IsMember({"paper", "random"}));
    co->add_option("--seed", cseed, "random-mode seed");
    co->add_option("--count", count, "random-mode instance count");

    CLI11_PARSE(app, argc, argv);

    if (co->parsed()) {
        zartan::CorpusSummary sum = mode == "paper"
                                        ? zartan::run_paper_corpus()
                                        : zartan::run_random_corpus(cseed, count);
        std::cout << sum.text;
        return sum.failed == 0 ? 0 : 4;
    }

    std::string text = read_file(file);
    zartan::Problem prob = zartan::parse_problem(text);
    ov.apply(prob);
    zartan::ComparisonReport rep = zartan::analyze(prob);
    if (ex->parsed()) {
        std::cout << zartan::explain_text(rep);
    } else if (as_text && !as_json) {
        std::cout << zartan::report_text(rep);
    } else {
        std::cout << zartan::report_json(rep, zartan::make_provenance(text, prob.opts.seed));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const zartan::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const zartan::UnsupportedError& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return 2;
    } catch (const zartan::InvalidityError& e) {
        std::cerr << "invalid point: " << e.what() << "\n"
                  << "witness: " << e.witness << "\n";
        return 3;
    } catch (const zartan::ZartanError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
