#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "testutil.hpp"
#include "umr/diff.hpp"
#include "umr/report.hpp"
#include "umr/score.hpp"
#include "umr/util.hpp"

using namespace umr;
using namespace testutil;

namespace {

void check_scores(const Scores &scores, long long matched, long long gold_total,
                  long long pred_total) {
    CHECK(scores.matched == matched);
    CHECK(scores.gold_total == gold_total);
    CHECK(scores.pred_total == pred_total);
}

void check_perfect(const ScoreReport &report) {
    for (const Scores *scores :
         {&report.overall, &report.concepts, &report.relations, &report.attributes_all,
          &report.alignment, &report.mapping}) {
        CHECK(scores->f1() == doctest::Approx(1.0));
        CHECK(scores->matched == scores->gold_total);
        CHECK(scores->matched == scores->pred_total);
    }
    for (const auto &[name, scores] : report.attributes_by_name) {
        CAPTURE(name);
        CHECK(scores.f1() == doctest::Approx(1.0));
    }
    if (report.doc_level)
        CHECK(report.doc_level->f1() == doctest::Approx(1.0));
}

} // namespace

TEST_CASE("empty sides score as fully correct") {
    Scores nothing;
    CHECK(nothing.precision() == 1.0);
    CHECK(nothing.recall() == 1.0);
    CHECK(nothing.f1() == 1.0);

    Scores missed_all{0, 5, 0};
    CHECK(missed_all.precision() == 1.0);
    CHECK(missed_all.recall() == 0.0);
    CHECK(missed_all.f1() == 0.0);

    Scores invented{0, 0, 4};
    CHECK(invented.precision() == 0.0);
    CHECK(invented.recall() == 1.0);
    CHECK(invented.f1() == 0.0);
}

TEST_CASE("mapping coverage rendering") {
    Scores scores = mapping_scores(1157, 1675, 1501);
    CHECK(format_percent(scores.precision()) == "77.08");
    CHECK(format_percent(scores.recall()) == "69.07");
}

TEST_CASE("reference fixture scores") {
    UmrDocument gold = load_fixture("vesmir_gold.umr");
    UmrDocument conv = load_fixture("vesmir_conv.umr");
    ScoreReport report = score_documents(gold, conv);

    check_scores(report.overall, 16, 39, 26);
    CHECK(format_percent(report.overall.precision()) == "61.54");
    CHECK(format_percent(report.overall.recall()) == "41.03");
    CHECK(format_percent(report.overall.f1()) == "49.23");

    check_scores(report.concepts, 6, 11, 9);
    check_scores(report.attributes_all, 5, 14, 8);
    check_scores(report.relations, 5, 14, 9);

    check_scores(report.attributes_by_name.at("aspect"), 0, 4, 2);
    check_scores(report.attributes_by_name.at("modal-strength"), 0, 4, 0);
    check_scores(report.attributes_by_name.at("refer-number"), 4, 4, 5);
    check_scores(report.attributes_by_name.at("refer-person"), 1, 2, 1);

    check_scores(report.alignment, 7, 8, 9);
    check_scores(report.mapping, 8, 11, 9);
    CHECK_FALSE(report.doc_level.has_value());
    REQUIRE(report.per_sentence.size() == 1);
    CHECK(report.per_sentence[0].overall == report.overall);
}

TEST_CASE("hill-climb matcher raises the fixture score") {
    UmrDocument gold = load_fixture("vesmir_gold.umr");
    UmrDocument conv = load_fixture("vesmir_conv.umr");
    ScoreOptions options;
    options.matcher = MatcherKind::hill_climb;
    ScoreReport report = score_documents(gold, conv, options);
    check_scores(report.overall, 17, 39, 26);
    check_scores(report.mapping, 9, 11, 9);
    // Same annotations, same alignment score, regardless of matcher.
    check_scores(report.alignment, 7, 8, 9);
}

TEST_CASE("restricting to mapped nodes shrinks the totals") {
    UmrDocument gold = load_fixture("vesmir_gold.umr");
    UmrDocument conv = load_fixture("vesmir_conv.umr");
    ScoreOptions options;
    options.mapped_only = true;
    ScoreReport report = score_documents(gold, conv, options);
    check_scores(report.concepts, 6, 8, 8);
    check_scores(report.attributes_all, 5, 10, 7);
    check_scores(report.relations, 5, 8, 7);
    check_scores(report.overall, 16, 26, 22);
}

TEST_CASE("document-level triples are scored through the united mapping") {
    UmrDocument gold = load_fixture("multisent_a.umr");
    UmrDocument pred = load_fixture("multisent_b.umr");
    ScoreOptions options;
    options.include_doc = true;
    ScoreReport report = score_documents(gold, pred, options);

    REQUIRE(report.doc_level.has_value());
    check_scores(*report.doc_level, 4, 5, 4);

    REQUIRE(report.per_sentence.size() == 2);
    check_scores(report.per_sentence[0].overall, 3, 9, 9);
    check_scores(report.per_sentence[1].overall, 6, 6, 6);
    check_scores(report.overall, 9, 15, 15);

    ScoreReport without = score_documents(gold, pred);
    CHECK_FALSE(without.doc_level.has_value());
    CHECK(without.overall == report.overall);
}

TEST_CASE("sentence counts must agree") {
    UmrDocument gold = load_fixture("vesmir_gold.umr");
    UmrDocument pred = load_fixture("multisent_b.umr");
    CHECK_THROWS_AS(score_documents(gold, pred), SentenceCountMismatch);
}

TEST_CASE("every fixture scores perfectly against itself") {
    for (const std::string &name : kFixtureNames) {
        CAPTURE(name);
        UmrDocument doc = load_fixture(name);
        ScoreOptions options;
        options.include_doc = true;
        check_perfect(score_documents(doc, doc, options));

        options.matcher = MatcherKind::hill_climb;
        ScoreReport climbed = score_documents(doc, doc, options);
        CHECK(climbed.overall.f1() == doctest::Approx(1.0));
    }
}

TEST_CASE("category counts always add up to the overall row") {
    TestRng rng(271);
    for (int i = 0; i < 60; ++i) {
        SentencePair pair = random_pair(rng, 8);
        ScoreReport report =
            score_documents(wrap(pair.gold), wrap(pair.pred), {}, nullptr);
        Scores sum;
        sum += report.concepts;
        sum += report.attributes_all;
        sum += report.relations;
        CAPTURE(i);
        CHECK(sum == report.overall);

        Scores by_name_sum;
        for (const auto &[name, scores] : report.attributes_by_name)
            by_name_sum += scores;
        CHECK(by_name_sum == report.attributes_all);

        NodeMapping mapping = match_graphs(pair.gold, pair.pred);
        TripleSet gold_triples =
            extract_triples(normalize_inverse_relations(pair.gold), false);
        TripleSet pred_triples =
            extract_triples(normalize_inverse_relations(pair.pred), false);
        Scores direct = score_triples(mapping, gold_triples, pred_triples);
        CHECK(direct == report.overall);
    }
}

TEST_CASE("alignment score uses exact span sets") {
    UmrSentence gold = parse_document("# :: snt1\nWords: a b c\n"
                                      "# sentence level graph:\n"
                                      "(s1a / x\n    :mod (s1b / y)\n    :poss (s1c / z))\n"
                                      "# alignment:\ns1a: 1-2\ns1b: 3-3\ns1c: 0-0\n")
                            .sentences[0];
    UmrSentence pred = parse_document("# :: snt1\nWords: a b c\n"
                                      "# sentence level graph:\n"
                                      "(s1d / x\n    :mod (s1e / y)\n    :poss (s1f / z))\n"
                                      "# alignment:\ns1d: 1-1\ns1e: 3-3\ns1f: 2-2\n")
                            .sentences[0];
    // {1,2} matches nothing; {3} matches; {1} and {2} do not. Unaligned
    // nodes contribute no span.
    check_scores(alignment_f1(gold, pred), 1, 2, 3);
}

TEST_CASE("duplicate spans count as often as they appear") {
    UmrSentence gold = parse_document("# :: snt1\nWords: a b\n"
                                      "# sentence level graph:\n"
                                      "(s1a / x\n    :mod (s1b / y))\n"
                                      "# alignment:\ns1a: 1-1\ns1b: 1-1\n")
                            .sentences[0];
    UmrSentence pred = parse_document("# :: snt1\nWords: a b\n"
                                      "# sentence level graph:\n"
                                      "(s1c / x\n    :mod (s1d / y))\n"
                                      "# alignment:\ns1c: 1-1\ns1d: 2-2\n")
                            .sentences[0];
    check_scores(alignment_f1(gold, pred), 1, 2, 2);
}

TEST_CASE("corpus statistics") {
    CorpusStats stats = corpus_stats({load_fixture("vesmir_gold.umr")});
    CHECK(stats.total_nodes == 11);
    CHECK(stats.aligned == 8);
    CHECK(stats.unaligned == 3);
    CHECK(format_percent(stats.aligned_pct()) == "72.73");
    CHECK(format_percent(stats.unaligned_pct()) == "27.27");

    CorpusStats combined = corpus_stats(
        {load_fixture("vesmir_gold.umr"), load_fixture("vesmir_conv.umr")});
    CHECK(combined.total_nodes == 20);
    CHECK(combined.aligned == 17);
    CHECK(combined.unaligned == 3);
}

TEST_CASE("diff lists pairs and leftovers") {
    UmrDocument gold = load_fixture("vesmir_gold.umr");
    UmrDocument conv = load_fixture("vesmir_conv.umr");
    NodeMapping mapping = match_graphs(gold.sentences[0], conv.sentences[0]);
    DiffReport diff = diff_sentences(mapping, gold.sentences[0], conv.sentences[0]);

    CHECK(diff.sentence_index == 1);
    REQUIRE(diff.entries.size() == 12);
    CHECK(diff.entries[0].gold->var == "slp0");
    CHECK_FALSE(diff.entries[0].pred.has_value());
    CHECK_FALSE(diff.entries.back().gold.has_value());
    CHECK(diff.entries.back().pred->var == "slt1");

    CHECK(diff.concepts.gold_only.size() == 5);
    CHECK(diff.concepts.pred_only.size() == 3);
    CHECK(diff.attributes.gold_only.size() == 9);
    CHECK(diff.attributes.pred_only.size() == 3);
    CHECK(diff.relations.gold_only.size() == 9);
    CHECK(diff.relations.pred_only.size() == 4);
    CHECK(diff.mismatch_count() == 33);

    std::string text = diff_to_text(diff);
    CHECK(text.find("33 mismatches") != std::string::npos);
    CHECK(text.find("UNMAPPED") != std::string::npos);
    CHECK(text.find("slv1 / vážený (\"Vážení\")") != std::string::npos);

    nlohmann::json as_json = diff_to_json(diff);
    CHECK(as_json["mismatch_count"] == 33);
    CHECK(as_json["nodes"].size() == 12);
}

TEST_CASE("diff of identical sentences is empty") {
    for (const std::string &name : kFixtureNames) {
        UmrDocument doc = load_fixture(name);
        for (const UmrSentence &sentence : doc.sentences) {
            NodeMapping mapping = match_graphs(sentence, sentence);
            DiffReport diff = diff_sentences(mapping, sentence, sentence);
            CAPTURE(name);
            CHECK(diff.mismatch_count() == 0);
            for (const DiffPairEntry &entry : diff.entries) {
                CHECK(entry.gold.has_value());
                CHECK(entry.pred.has_value());
            }
        }
    }
}

TEST_CASE("report renderings") {
    UmrDocument gold = load_fixture("vesmir_gold.umr");
    UmrDocument conv = load_fixture("vesmir_conv.umr");
    ScoreReport report = score_documents(gold, conv);

    std::string text = report_to_text(report);
    CHECK(text.find("overall") != std::string::npos);
    CHECK(text.find("61.54") != std::string::npos);
    CHECK(text.find("49.23") != std::string::npos);
    CHECK(text.find("refer-number") != std::string::npos);

    nlohmann::json as_json = report_to_json(report);
    CHECK(as_json["overall"]["f1"] == 49.23);
    CHECK(as_json["overall"]["matched"] == 16);
    CHECK(as_json["attributes_by_name"]["refer-person"]["recall"] == 50.0);
    CHECK(as_json["sentences"].size() == 1);

    std::string tsv = report_to_tsv(report, "pair1", true);
    CHECK(tsv.find("pair\tsentence\tcategory") == 0);
    CHECK(tsv.find("pair1\tall\toverall\t61.54\t41.03\t49.23\t16\t39\t26") !=
          std::string::npos);
}

TEST_CASE("percent formatting") {
    CHECK(format_percent(0.5) == "50.00");
    CHECK(format_percent(1.0) == "100.00");
    CHECK(format_percent(0.0) == "0.00");
    CHECK(format_percent(16.0 / 39.0) == "41.03");
    CHECK(percent_2dp(16.0 / 39.0) == 41.03);
    CHECK(percent_2dp(1.0) == 100.0);
}
