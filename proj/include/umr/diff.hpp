#ifndef UMR_DIFF_HPP
#define UMR_DIFF_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "umr/match.hpp"
#include "umr/model.hpp"
#include "umr/triples.hpp"

namespace umr {

struct DiffNode {
    Var var;
    std::string concept_name;
    std::string words; // aligned tokens, empty when unaligned
};

// One row of the node comparison: a matched pair, or one side alone.
struct DiffPairEntry {
    std::optional<DiffNode> gold;
    std::optional<DiffNode> pred;
};

struct CategoryMismatch {
    std::vector<Triple> gold_only; // missing from the predicted graph
    std::vector<Triple> pred_only; // extra, variables renamed where mapped
};

struct DiffReport {
    int sentence_index = 0;
    std::vector<DiffPairEntry> entries;
    CategoryMismatch concepts;
    CategoryMismatch attributes;
    CategoryMismatch relations;

    std::size_t mismatch_count() const {
        return concepts.gold_only.size() + concepts.pred_only.size() +
               attributes.gold_only.size() + attributes.pred_only.size() +
               relations.gold_only.size() + relations.pred_only.size();
    }
};

// Node pairs in gold definition order followed by unmapped predicted nodes,
// plus the unmatched triples of each category.
DiffReport diff_sentences(const NodeMapping &mapping, const UmrSentence &gold,
                          const UmrSentence &pred);

std::string diff_to_text(const DiffReport &report);
nlohmann::json diff_to_json(const DiffReport &report);

} // namespace umr

#endif
