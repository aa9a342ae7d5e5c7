#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "umr/diff.hpp"
#include "umr/parse.hpp"
#include "umr/report.hpp"
#include "umr/score.hpp"
#include "umr/util.hpp"

namespace {

using namespace umr;

struct Args {
    std::vector<std::string> paths;
    std::string matcher = "jumatch";
    std::string format = "text";
    bool include_doc = false;
    bool mapped_only = false;
    std::uint64_t seed = 0;
    int restarts = 4;
};

void print_warnings(const std::vector<std::string> &warnings) {
    for (const std::string &warning : warnings)
        std::cerr << "warning: " << warning << "\n";
}

ScoreOptions to_options(const Args &args) {
    ScoreOptions options;
    options.matcher = args.matcher == "smatch" ? MatcherKind::hill_climb
                                               : MatcherKind::alignment_driven;
    options.include_doc = args.include_doc;
    options.mapped_only = args.mapped_only;
    options.search.seed = args.seed;
    options.search.restarts = args.restarts;
    return options;
}

// Positional files are gold annotations followed by the same number of
// predicted ones.
std::vector<std::pair<std::string, std::string>> split_pairs(const Args &args) {
    if (args.paths.empty() || args.paths.size() % 2 != 0)
        throw CLI::ValidationError(
            "files", "expected an even number of files: gold... followed by pred...");
    std::vector<std::pair<std::string, std::string>> pairs;
    std::size_t half = args.paths.size() / 2;
    for (std::size_t i = 0; i < half; ++i)
        pairs.emplace_back(args.paths[i], args.paths[half + i]);
    return pairs;
}

UmrDocument load(const std::string &path) {
    UmrDocument doc = parse_document_file(path);
    print_warnings(doc.warnings);
    return doc;
}

ScoreReport merge_reports(const std::vector<ScoreReport> &reports) {
    ScoreReport total;
    bool any_doc = false;
    for (const ScoreReport &report : reports) {
        total.overall += report.overall;
        total.concepts += report.concepts;
        total.attributes_all += report.attributes_all;
        for (const auto &[name, scores] : report.attributes_by_name)
            total.attributes_by_name[name] += scores;
        total.relations += report.relations;
        total.alignment += report.alignment;
        total.mapping += report.mapping;
        if (report.doc_level) {
            if (!total.doc_level)
                total.doc_level = Scores{};
            *total.doc_level += *report.doc_level;
            any_doc = true;
        }
    }
    if (!any_doc)
        total.doc_level.reset();
    return total;
}

int run_compare(const Args &args) {
    auto pairs = split_pairs(args);
    ScoreOptions options = to_options(args);

    std::vector<ScoreReport> reports;
    for (const auto &[gold_path, pred_path] : pairs) {
        UmrDocument gold = load(gold_path);
        UmrDocument pred = load(pred_path);
        Diagnostics diag;
        reports.push_back(score_documents(gold, pred, options, &diag));
        print_warnings(diag.warnings);
    }

    if (args.format == "json") {
        nlohmann::json out;
        out["pairs"] = nlohmann::json::array();
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            nlohmann::json entry = report_to_json(reports[i]);
            entry["gold"] = pairs[i].first;
            entry["pred"] = pairs[i].second;
            out["pairs"].push_back(std::move(entry));
        }
        if (pairs.size() > 1)
            out["aggregate"] = report_to_json(merge_reports(reports));
        std::cout << out.dump(2) << "\n";
    } else if (args.format == "tsv") {
        for (std::size_t i = 0; i < pairs.size(); ++i)
            std::cout << report_to_tsv(reports[i], pairs[i].first + "|" + pairs[i].second,
                                       i == 0);
        if (pairs.size() > 1)
            std::cout << report_to_tsv(merge_reports(reports), "all", false);
    } else {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (pairs.size() > 1)
                std::cout << "pair " << i + 1 << ": " << pairs[i].first << " vs "
                          << pairs[i].second << "\n";
            std::cout << report_to_text(reports[i]) << "\n";
        }
        if (pairs.size() > 1) {
            std::cout << "aggregate (" << pairs.size() << " pairs)\n";
            std::cout << report_to_text(merge_reports(reports));
        }
    }
    return 0;
}

int run_stats(const Args &args) {
    std::vector<std::pair<std::string, CorpusStats>> per_file;
    CorpusStats total;
    for (const std::string &path : args.paths) {
        UmrDocument doc = load(path);
        CorpusStats stats = corpus_stats({doc});
        per_file.emplace_back(path, stats);
        total += stats;
    }

    if (args.format == "json") {
        nlohmann::json out;
        out["files"] = nlohmann::json::array();
        for (const auto &[path, stats] : per_file) {
            nlohmann::json entry = stats_to_json(stats);
            entry["path"] = path;
            out["files"].push_back(std::move(entry));
        }
        out["total"] = stats_to_json(total);
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto &[path, stats] : per_file)
            std::cout << path << ": nodes " << stats.total_nodes << ", aligned "
                      << stats.aligned << " (" << format_percent(stats.aligned_pct())
                      << "%), unaligned " << stats.unaligned << " ("
                      << format_percent(stats.unaligned_pct()) << "%)\n";
        if (per_file.size() > 1) {
            std::cout << "total\n";
            std::cout << stats_to_text(total);
        }
    }
    return 0;
}

int run_diff(const Args &args) {
    auto pairs = split_pairs(args);
    ScoreOptions options = to_options(args);

    nlohmann::json json_pairs = nlohmann::json::array();
    for (const auto &[gold_path, pred_path] : pairs) {
        UmrDocument gold = load(gold_path);
        UmrDocument pred = load(pred_path);
        if (gold.sentences.size() != pred.sentences.size())
            throw SentenceCountMismatch(
                "document '" + gold.doc_id + "' has " +
                std::to_string(gold.sentences.size()) + " sentences but '" +
                pred.doc_id + "' has " + std::to_string(pred.sentences.size()));

        nlohmann::json json_sentences = nlohmann::json::array();
        if (args.format == "text" && pairs.size() > 1)
            std::cout << "== " << gold_path << " vs " << pred_path << " ==\n";
        for (std::size_t i = 0; i < gold.sentences.size(); ++i) {
            const UmrSentence &gold_sentence = gold.sentences[i];
            const UmrSentence &pred_sentence = pred.sentences[i];
            Diagnostics diag;
            NodeMapping mapping =
                options.matcher == MatcherKind::alignment_driven
                    ? match_graphs(gold_sentence, pred_sentence, &diag)
                    : hill_climb_match(gold_sentence, pred_sentence, options.search);
            print_warnings(diag.warnings);
            DiffReport diff = diff_sentences(mapping, gold_sentence, pred_sentence);
            if (args.format == "json")
                json_sentences.push_back(diff_to_json(diff));
            else
                std::cout << diff_to_text(diff);
        }
        if (args.format == "json")
            json_pairs.push_back({{"gold", gold_path},
                                  {"pred", pred_path},
                                  {"sentences", std::move(json_sentences)}});
    }
    if (args.format == "json")
        std::cout << nlohmann::json{{"pairs", std::move(json_pairs)}}.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Score and compare UMR annotation files"};
    app.require_subcommand(1);

    Args compare_args;
    CLI::App *compare =
        app.add_subcommand("compare", "Score predicted annotations against gold ones");
    compare->add_option("files", compare_args.paths,
                        "gold files followed by the matching predicted files")
        ->required();
    compare->add_option("--matcher", compare_args.matcher, "node matching strategy")
        ->check(CLI::IsMember({"jumatch", "smatch"}));
    compare->add_option("--output-format", compare_args.format, "output format")
        ->check(CLI::IsMember({"text", "json", "tsv"}));
    compare->add_flag("--include-doc", compare_args.include_doc,
                      "also score document-level triples");
    compare->add_flag("--mapped-only", compare_args.mapped_only,
                      "score only triples whose variables are all mapped");
    compare->add_option("--seed", compare_args.seed, "random seed for smatch restarts");
    compare->add_option("--restarts", compare_args.restarts,
                        "number of smatch restarts");

    Args stats_args;
    CLI::App *stats =
        app.add_subcommand("stats", "Alignment statistics over annotation files");
    stats->add_option("files", stats_args.paths, "annotation files")->required();
    stats->add_option("--output-format", stats_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    Args diff_args;
    CLI::App *diff =
        app.add_subcommand("diff", "Show node pairs and unmatched triples per sentence");
    diff->add_option("files", diff_args.paths,
                     "gold files followed by the matching predicted files")
        ->required();
    diff->add_option("--matcher", diff_args.matcher, "node matching strategy")
        ->check(CLI::IsMember({"jumatch", "smatch"}));
    diff->add_option("--output-format", diff_args.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    diff->add_option("--seed", diff_args.seed, "random seed for smatch restarts");
    diff->add_option("--restarts", diff_args.restarts, "number of smatch restarts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compare->parsed())
            return run_compare(compare_args);
        if (stats->parsed())
            return run_stats(stats_args);
        return run_diff(diff_args);
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
