#ifndef UMR_SCORE_HPP
#define UMR_SCORE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "umr/diagnostics.hpp"
#include "umr/hillclimb.hpp"
#include "umr/match.hpp"
#include "umr/model.hpp"
#include "umr/triples.hpp"

namespace umr {

// Match / total counts with the derived precision, recall and F1.
// An empty side scores 1.0 when nothing was expected of it.
struct Scores {
    long long matched = 0;
    long long gold_total = 0;
    long long pred_total = 0;

    double precision() const {
        return pred_total == 0 ? 1.0 : static_cast<double>(matched) / pred_total;
    }
    double recall() const {
        return gold_total == 0 ? 1.0 : static_cast<double>(matched) / gold_total;
    }
    double f1() const {
        double p = precision();
        double r = recall();
        return p + r == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
    }

    Scores &operator+=(const Scores &other) {
        matched += other.matched;
        gold_total += other.gold_total;
        pred_total += other.pred_total;
        return *this;
    }
    bool operator==(const Scores &) const = default;
};

struct ScoreReport {
    int sentence_index = 0; // 0 for whole-document reports
    Scores overall;         // concepts + relations + attributes
    Scores concepts;
    Scores relations;
    Scores attributes_all;
    std::map<std::string, Scores> attributes_by_name;
    Scores alignment;
    Scores mapping;
    std::optional<Scores> doc_level;
    std::vector<ScoreReport> per_sentence; // empty inside per-sentence entries
};

struct CorpusStats {
    long long total_nodes = 0;
    long long aligned = 0;
    long long unaligned = 0;

    double aligned_pct() const {
        return total_nodes == 0 ? 0.0 : static_cast<double>(aligned) / total_nodes;
    }
    double unaligned_pct() const {
        return total_nodes == 0 ? 0.0 : static_cast<double>(unaligned) / total_nodes;
    }
    CorpusStats &operator+=(const CorpusStats &other) {
        total_nodes += other.total_nodes;
        aligned += other.aligned;
        unaligned += other.unaligned;
        return *this;
    }
};

enum class MatcherKind { alignment_driven, hill_climb };

struct ScoreOptions {
    MatcherKind matcher = MatcherKind::alignment_driven;
    bool include_doc = false;
    bool mapped_only = false; // restrict scoring to triples with fully mapped endpoints
    SearchConfig search;      // hill-climb parameters
};

// Multiset-intersection score over all sentence-level triples after renaming
// predicted variables through the mapping.
Scores score_triples(const NodeMapping &mapping, const TripleSet &gold_triples,
                     const TripleSet &pred_triples);

// Same counting, split into concepts / relations / one entry per attribute
// name. Fills the category fields of `report` (not alignment or mapping).
void partial_scores(const NodeMapping &mapping, const TripleSet &gold_triples,
                    const TripleSet &pred_triples, ScoreReport &report,
                    bool mapped_only = false);

// Node-coverage statistic: how many nodes found a partner on each side.
Scores mapping_scores(std::size_t pair_count, int n_gold, int n_pred);

// F1 of token subsets aligned to one node in each graph: each side
// contributes the multiset of its nonempty alignment sets, matched by exact
// set equality.
Scores alignment_f1(const UmrSentence &gold, const UmrSentence &pred);

CorpusStats corpus_stats(const std::vector<UmrDocument> &docs);

// Sentence-by-sentence matching and scoring with micro-averaged totals.
// Document-level triples are scored through the union of the per-sentence
// mappings when include_doc is set. Throws SentenceCountMismatch.
ScoreReport score_documents(const UmrDocument &gold, const UmrDocument &pred,
                            const ScoreOptions &options = {}, Diagnostics *diag = nullptr);

} // namespace umr

#endif
