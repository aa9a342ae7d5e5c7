#include "umr/report.hpp"

#include <cstdio>
#include <sstream>

#include "umr/util.hpp"

namespace umr {

namespace {

void table_row(std::ostringstream &out, const std::string &name, const Scores &s) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-24s %8s %8s %8s %9lld %8lld %8lld\n",
                  name.c_str(), format_percent(s.precision()).c_str(),
                  format_percent(s.recall()).c_str(), format_percent(s.f1()).c_str(),
                  s.matched, s.gold_total, s.pred_total);
    out << line;
}

void table_header(std::ostringstream &out) {
    char line[160];
    std::snprintf(line, sizeof(line), "%-24s %8s %8s %8s %9s %8s %8s\n", "category", "P",
                  "R", "F1", "matched", "gold", "pred");
    out << line;
}

void category_rows(std::ostringstream &out, const ScoreReport &report) {
    table_row(out, "overall", report.overall);
    table_row(out, "concepts", report.concepts);
    table_row(out, "attributes", report.attributes_all);
    for (const auto &[name, scores] : report.attributes_by_name)
        table_row(out, "  " + name, scores);
    table_row(out, "relations", report.relations);
    table_row(out, "alignment", report.alignment);
    table_row(out, "mapping", report.mapping);
    if (report.doc_level)
        table_row(out, "doc-level", *report.doc_level);
}

} // namespace

std::string report_to_text(const ScoreReport &report) {
    std::ostringstream out;
    if (report.per_sentence.size() > 1) {
        for (const ScoreReport &sentence : report.per_sentence) {
            out << "sentence " << sentence.sentence_index << "\n";
            table_header(out);
            category_rows(out, sentence);
            out << "\n";
        }
        out << "total (" << report.per_sentence.size() << " sentences)\n";
    }
    table_header(out);
    category_rows(out, report);
    return out.str();
}

nlohmann::json scores_to_json(const Scores &scores) {
    return {{"precision", percent_2dp(scores.precision())},
            {"recall", percent_2dp(scores.recall())},
            {"f1", percent_2dp(scores.f1())},
            {"matched", scores.matched},
            {"gold_total", scores.gold_total},
            {"pred_total", scores.pred_total}};
}

namespace {

nlohmann::json report_body(const ScoreReport &report) {
    nlohmann::json by_name = nlohmann::json::object();
    for (const auto &[name, scores] : report.attributes_by_name)
        by_name[name] = scores_to_json(scores);
    nlohmann::json body = {{"overall", scores_to_json(report.overall)},
                           {"concepts", scores_to_json(report.concepts)},
                           {"attributes", scores_to_json(report.attributes_all)},
                           {"attributes_by_name", by_name},
                           {"relations", scores_to_json(report.relations)},
                           {"alignment", scores_to_json(report.alignment)},
                           {"mapping", scores_to_json(report.mapping)}};
    if (report.doc_level)
        body["doc_level"] = scores_to_json(*report.doc_level);
    return body;
}

} // namespace

nlohmann::json report_to_json(const ScoreReport &report) {
    nlohmann::json body = report_body(report);
    nlohmann::json sentences = nlohmann::json::array();
    for (const ScoreReport &sentence : report.per_sentence) {
        nlohmann::json entry = report_body(sentence);
        entry["index"] = sentence.sentence_index;
        sentences.push_back(std::move(entry));
    }
    body["sentences"] = std::move(sentences);
    return body;
}

namespace {

void tsv_row(std::ostringstream &out, const std::string &label,
             const std::string &sentence, const std::string &category, const Scores &s) {
    out << label << '\t' << sentence << '\t' << category << '\t'
        << format_percent(s.precision()) << '\t' << format_percent(s.recall()) << '\t'
        << format_percent(s.f1()) << '\t' << s.matched << '\t' << s.gold_total << '\t'
        << s.pred_total << '\n';
}

void tsv_rows(std::ostringstream &out, const std::string &label,
              const std::string &sentence, const ScoreReport &report) {
    tsv_row(out, label, sentence, "overall", report.overall);
    tsv_row(out, label, sentence, "concepts", report.concepts);
    tsv_row(out, label, sentence, "attributes", report.attributes_all);
    for (const auto &[name, scores] : report.attributes_by_name)
        tsv_row(out, label, sentence, "attribute:" + name, scores);
    tsv_row(out, label, sentence, "relations", report.relations);
    tsv_row(out, label, sentence, "alignment", report.alignment);
    tsv_row(out, label, sentence, "mapping", report.mapping);
    if (report.doc_level)
        tsv_row(out, label, sentence, "doc-level", *report.doc_level);
}

} // namespace

std::string report_to_tsv(const ScoreReport &report, const std::string &label,
                          bool header) {
    std::ostringstream out;
    if (header)
        out << "pair\tsentence\tcategory\tprecision\trecall\tf1\tmatched\tgold_total\t"
               "pred_total\n";
    for (const ScoreReport &sentence : report.per_sentence)
        tsv_rows(out, label, std::to_string(sentence.sentence_index), sentence);
    tsv_rows(out, label, "all", report);
    return out.str();
}

std::string stats_to_text(const CorpusStats &stats) {
    std::ostringstream out;
    out << "nodes: " << stats.total_nodes << "\n";
    out << "aligned: " << stats.aligned << " (" << format_percent(stats.aligned_pct())
        << "%)\n";
    out << "unaligned: " << stats.unaligned << " ("
        << format_percent(stats.unaligned_pct()) << "%)\n";
    return out.str();
}

nlohmann::json stats_to_json(const CorpusStats &stats) {
    return {{"nodes", stats.total_nodes},
            {"aligned", stats.aligned},
            {"unaligned", stats.unaligned},
            {"aligned_pct", percent_2dp(stats.aligned_pct())},
            {"unaligned_pct", percent_2dp(stats.unaligned_pct())}};
}

} // namespace umr
