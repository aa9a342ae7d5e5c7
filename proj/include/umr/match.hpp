#ifndef UMR_MATCH_HPP
#define UMR_MATCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "umr/diagnostics.hpp"
#include "umr/model.hpp"

namespace umr {

// Exact rational in [0,1]; compared by cross-multiplication so similarity
// ordering never depends on floating-point rounding.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / den; }
    bool operator==(const Ratio &other) const { return num * other.den == other.num * den; }
    bool operator<(const Ratio &other) const { return num * other.den < other.num * den; }
};

// Similarity cascade for one candidate pair. Fields compare lexicographically
// in declaration order, larger = more similar; ties fall through to the
// unordered variable-pair tiebreak held by the edge.
struct SimilarityKey {
    int concept_equal = 0;     // enhanced concept strings identical
    Ratio strong_score;        // Dice over (attribute name, value) and (label, child concept)
    Ratio weak_score;          // Dice over attribute names and edge labels only
    std::int64_t word_length = 0; // characters of the overlapped tokens
};

// Candidate pairing of a gold and a predicted node whose alignments overlap
// (phase 1) or whose concepts agree while both are unaligned (phase 2).
struct CandidateEdge {
    Var gold_var;
    Var pred_var;
    std::set<int> overlap;
    SimilarityKey key;
};

// True if `a` is preferred over `b` during symmetrization. Total order:
// key fields descending, then the unordered variable pair ascending.
bool candidate_preferred(const CandidateEdge &a, const CandidateEdge &b);

// Symmetric partial 1-1 correspondence between two graphs' node sets.
struct NodeMapping {
    std::map<Var, Var> gold_to_pred;
    std::map<Var, Var> pred_to_gold;
    std::set<Var> unmapped_gold;
    std::set<Var> unmapped_pred;

    void add_pair(const Var &gold, const Var &pred);
    std::size_t pair_count() const { return gold_to_pred.size(); }
    std::optional<Var> pred_of(const Var &gold) const;
    std::optional<Var> gold_of(const Var &pred) const;
};

// One candidate edge per (gold node, pred node) pair with intersecting
// alignments. Unaligned nodes produce no edges. A differing token list is
// reported as a warning; matching proceeds by position.
std::vector<CandidateEdge> candidate_edges(const UmrSentence &gold, const UmrSentence &pred,
                                           Diagnostics *diag = nullptr);

SimilarityKey similarity_key(const Node &gold_node, const Node &pred_node,
                             const NodeGraph &gold_ctx, const NodeGraph &pred_ctx,
                             const std::set<int> &overlap,
                             const std::vector<std::string> &tokens);

// Greedy selection over key-sorted edges; an edge is accepted iff both of
// its endpoints are still free. Returns only the accepted pairs.
NodeMapping symmetrize(const std::vector<CandidateEdge> &candidates);

// Phase 2: pairs still-unmapped unaligned nodes with identical enhanced
// concepts, resolving ambiguity with the same cascade (word_length = 0).
void pair_unaligned(const UmrSentence &gold, const UmrSentence &pred, NodeMapping &mapping);

// Full pipeline: overlap candidates, symmetrization, unaligned pairing.
// Inverse relations are normalized internally (idempotent), so callers may
// pass sentences as parsed. Deterministic; symmetric under argument swap.
NodeMapping match_graphs(const UmrSentence &gold, const UmrSentence &pred,
                         Diagnostics *diag = nullptr);

} // namespace umr

#endif
