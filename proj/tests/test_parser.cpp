#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zartan/corpus.hpp"
#include "zartan/report.hpp"

using namespace zartan;

TEST_CASE("basic problem parsing") {
    Problem p = parse_problem(
        "# comment\n"
        "base = Fp 5\n"
        "[S]\nvars = u\nideal = u^2 - u\n"
        "[X]\nvars = x, y\nideal = y - x^2; x*y\n"
        "[map]\nu = x\n"
        "[point.x]\nkind = closed\ntower = x; y\n"
        "[point.s]\nkind = closed\ntower = u\n"
        "[options]\norder = lex\ntrust_point = true\nseed = 7\n");
    CHECK(p.base->p == 5);
    CHECK(p.has_S);
    CHECK(p.x_vars == std::vector<std::string>{"x", "y"});
    CHECK(p.x_ideal.size() == 2);
    CHECK(p.s_ideal.size() == 1);
    CHECK(p.pullbacks.size() == 1);
    CHECK(p.pullbacks[0].str() == "x");
    CHECK_FALSE(p.px.generic);
    CHECK(p.px.tower.size() == 2);
    CHECK(p.opts.order == MonomialOrder::Kind::Lex);
    CHECK(p.opts.trust_point);
    CHECK(p.opts.seed == 7);
}

TEST_CASE("grammar rejections") {
    // [map] without [S].
    CHECK_THROWS_AS(parse_problem("base = Q\n[X]\nvars = x\n[map]\ny = x\n"
                                  "[point.x]\nkind = generic\n"),
                    SemanticError);
    // [S] without [map].
    CHECK_THROWS_AS(parse_problem("base = Q\n[S]\nvars = u\n[X]\nvars = x\n"
                                  "[point.x]\nkind = generic\n"
                                  "[point.s]\nkind = generic\n"),
                    SemanticError);
    // Missing base.
    CHECK_THROWS_AS(parse_problem("[X]\nvars = x\n[point.x]\nkind = generic\n"), SemanticError);
    // Composite modulus.
    CHECK_THROWS_AS(parse_problem("base = Fp 6\n[X]\nvars = x\n[point.x]\nkind = generic\n"),
                    InputError);
    // Unknown section and bad polynomial carry line numbers.
    try {
        parse_problem("base = Q\n[Y]\nvars = x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    try {
        parse_problem("base = Q\n[X]\nvars = x\nideal = x ++ 1\n[point.x]\nkind = generic\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 4);
    }
    // Generic points cannot carry towers; closed towers must be complete.
    CHECK_THROWS_AS(
        parse_problem("base = Q\n[X]\nvars = x\n[point.x]\nkind = generic\ntower = x\n"),
        SemanticError);
    CHECK_THROWS_AS(parse_problem("base = Q\n[X]\nvars = x, y\n[point.x]\nkind = closed\n"
                                  "tower = x\n"),
                    SemanticError);
}

TEST_CASE("pretty-print round trip is a fixed point on the bundled corpus") {
    for (const auto& [name, text] : paper_problem_texts()) {
        CAPTURE(name);
        std::string once = problem_to_text(parse_problem(text));
        std::string twice = problem_to_text(parse_problem(once));
        CHECK(once == twice);
    }
}

TEST_CASE("json report schema and determinism") {
    const std::string text =
        "base = Q\n[X]\nvars = x\n[point.x]\nkind = closed\ntower = x^2 + 1\n";
    Problem p = parse_problem(text);
    std::string a = report_json(analyze(p), make_provenance(text, p.opts.seed));
    std::string b = report_json(analyze(parse_problem(text)), make_provenance(text, p.opts.seed));
    CHECK(a == b);
    for (const char* key :
         {"\"dim_zariski\"", "\"dim_grothendieck\"", "\"dim_zariski_relative\"",
          "\"dim_fiber_tangent\"", "\"phi\"", "\"theta\"", "\"upsilon\"", "\"extension\"",
          "\"sequence_checks\"", "\"theorem\"", "\"provenance\"", "\"rank\"", "\"injective\"",
          "\"surjective_onto_relative\"", "\"iso\"", "\"defined\"", "\"identities_hold\"",
          "\"algebraic\"", "\"separable\"", "\"omega_dim\"", "\"seq5_ok\"", "\"seq6_ok\"",
          "\"lemma1_ok\"", "\"lemma2_ok\"", "\"hypothesis\"", "\"conclusion\"", "\"consistent\"",
          "\"input_hash\"", "\"seed\"", "\"version\""}) {
        CAPTURE(key);
        CHECK(a.find(key) != std::string::npos);
    }
}

TEST_CASE("separable is null when the extension is transcendental") {
    const std::string text = "base = Q\n[X]\nvars = t\n[point.x]\nkind = generic\n";
    std::string j = report_json(analyze(parse_problem(text)), make_provenance(text, 0));
    CHECK(j.find("\"separable\": null") != std::string::npos);
}

TEST_CASE("corpus runners") {
    CorpusSummary paper = run_paper_corpus();
    CHECK(paper.passed == 7);
    CHECK(paper.failed == 0);
    CorpusSummary r1 = run_random_corpus(42, 60);
    CorpusSummary r2 = run_random_corpus(42, 60);
    CHECK(r1.passed == 60);
    CHECK(r1.failed == 0);
    CHECK(r1.text == r2.text);
    // A different seed draws different instances but still passes.
    CorpusSummary r3 = run_random_corpus(7, 50);
    CHECK(r3.failed == 0);
    CHECK(r3.text != r1.text);
}

TEST_CASE("explain rendering mentions the bases") {
    ComparisonReport rep = analyze(parse_problem(
        "base = Q\n[X]\nvars = x\n[point.x]\nkind = closed\ntower = x^2 + 1\n"));
    std::string e = explain_text(rep);
    CHECK(e.find("cotangent basis") != std::string::npos);
    CHECK(e.find("x^2 + 1") != std::string::npos);
    CHECK(e.find("Upsilon") != std::string::npos);
}
