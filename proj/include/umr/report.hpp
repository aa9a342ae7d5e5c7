#ifndef UMR_REPORT_HPP
#define UMR_REPORT_HPP

#include <string>

#include <json.hpp>

#include "umr/score.hpp"

namespace umr {

// Fixed-width table with one row per category and indented rows per
// attribute name; per-sentence blocks first when the document has more than
// one sentence.
std::string report_to_text(const ScoreReport &report);

nlohmann::json scores_to_json(const Scores &scores);
nlohmann::json report_to_json(const ScoreReport &report);

// One row per (sentence, category); the totals use "all" as sentence key.
// The header row is emitted only when `header` is set so rows from several
// document pairs can be concatenated.
std::string report_to_tsv(const ScoreReport &report, const std::string &label,
                          bool header);

std::string stats_to_text(const CorpusStats &stats);
nlohmann::json stats_to_json(const CorpusStats &stats);

} // namespace umr

#endif
