#include "umr/match.hpp"

#include <algorithm>

#include "umr/triples.hpp"
#include "umr/util.hpp"

namespace umr {

namespace {

using Feature = std::pair<std::string, std::string>;

// Per-graph cache of the node features the similarity cascade needs:
// enhanced concepts, sorted (name, value) feature multisets and sorted
// name-only multisets.
struct FeatureIndex {
    explicit FeatureIndex(const NodeGraph &graph) {
        for (const auto &[var, node] : graph.nodes) {
            enhanced[var] = enhance_name_concept(node, graph);
        }
        for (const auto &[var, node] : graph.nodes) {
            auto &strong_features = strong[var];
            auto &weak_features = weak[var];
            for (const auto &attr : node.attributes) {
                strong_features.push_back(attr);
                weak_features.push_back(attr.first);
            }
        }
        for (const Edge &edge : graph.edges) {
            strong[edge.parent].emplace_back(edge.label, enhanced.at(edge.child));
            weak[edge.parent].push_back(edge.label);
        }
        for (auto &[var, features] : strong) std::sort(features.begin(), features.end());
        for (auto &[var, names] : weak) std::sort(names.begin(), names.end());
    }

    std::map<Var, std::string> enhanced;
    std::map<Var, std::vector<Feature>> strong;
    std::map<Var, std::vector<std::string>> weak;
};

// Dice coefficient 2|A∩B| / (|A|+|B|) over sorted multisets; 0 when both
// are empty so feature agreement can never outrank concept identity.
template <typename T>
Ratio dice(const std::vector<T> &a, const std::vector<T> &b) {
    if (a.empty() && b.empty()) return {0, 1};
    std::int64_t common = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    return {2 * common, static_cast<std::int64_t>(a.size() + b.size())};
}

std::int64_t overlap_char_length(const std::set<int> &overlap,
                                 const std::vector<std::string> &tokens) {
    std::int64_t total = 0;
    for (int position : overlap) {
        if (position >= 1 && position <= static_cast<int>(tokens.size()))
            total += static_cast<std::int64_t>(utf8_length(tokens[position - 1]));
    }
    return total;
}

SimilarityKey key_from_features(const FeatureIndex &gold_index, const FeatureIndex &pred_index,
                                const Var &gold_var, const Var &pred_var,
                                std::int64_t word_length) {
    SimilarityKey key;
    key.concept_equal = gold_index.enhanced.at(gold_var) == pred_index.enhanced.at(pred_var);
    key.strong_score = dice(gold_index.strong.at(gold_var), pred_index.strong.at(pred_var));
    key.weak_score = dice(gold_index.weak.at(gold_var), pred_index.weak.at(pred_var));
    key.word_length = word_length;
    return key;
}

std::vector<CandidateEdge> overlap_candidates(const UmrSentence &gold, const UmrSentence &pred,
                                              const FeatureIndex &gold_index,
                                              const FeatureIndex &pred_index,
                                              Diagnostics *diag) {
    if (gold.tokens != pred.tokens)
        warn_into(diag, "sentence " + std::to_string(gold.index) +
                            ": token lists differ between the two annotations; "
                            "matching by position");
    std::vector<CandidateEdge> edges;
    for (const Var &gold_var : gold.graph.order) {
        const AlignmentSpan &gold_span = gold.alignment_of(gold_var);
        if (gold_span.empty()) continue;
        for (const Var &pred_var : pred.graph.order) {
            const AlignmentSpan &pred_span = pred.alignment_of(pred_var);
            if (pred_span.empty()) continue;
            std::set<int> overlap;
            std::set_intersection(gold_span.positions.begin(), gold_span.positions.end(),
                                  pred_span.positions.begin(), pred_span.positions.end(),
                                  std::inserter(overlap, overlap.begin()));
            if (overlap.empty()) continue;
            CandidateEdge edge;
            edge.gold_var = gold_var;
            edge.pred_var = pred_var;
            edge.key = key_from_features(gold_index, pred_index, gold_var, pred_var,
                                         overlap_char_length(overlap, gold.tokens));
            edge.overlap = std::move(overlap);
            edges.push_back(std::move(edge));
        }
    }
    return edges;
}

void phase2_pairs(const UmrSentence &gold, const UmrSentence &pred,
                  const FeatureIndex &gold_index, const FeatureIndex &pred_index,
                  NodeMapping &mapping) {
    std::vector<CandidateEdge> candidates;
    for (const Var &gold_var : gold.graph.order) {
        if (!gold.alignment_of(gold_var).empty() || mapping.pred_of(gold_var)) continue;
        for (const Var &pred_var : pred.graph.order) {
            if (!pred.alignment_of(pred_var).empty() || mapping.gold_of(pred_var)) continue;
            if (gold_index.enhanced.at(gold_var) != pred_index.enhanced.at(pred_var)) continue;
            CandidateEdge edge;
            edge.gold_var = gold_var;
            edge.pred_var = pred_var;
            edge.key = key_from_features(gold_index, pred_index, gold_var, pred_var, 0);
            candidates.push_back(std::move(edge));
        }
    }
    NodeMapping extra = symmetrize(candidates);
    for (const auto &[gold_var, pred_var] : extra.gold_to_pred)
        mapping.add_pair(gold_var, pred_var);
}

} // namespace

bool candidate_preferred(const CandidateEdge &a, const CandidateEdge &b) {
    if (a.key.concept_equal != b.key.concept_equal)
        return a.key.concept_equal > b.key.concept_equal;
    if (!(a.key.strong_score == b.key.strong_score)) return b.key.strong_score < a.key.strong_score;
    if (!(a.key.weak_score == b.key.weak_score)) return b.key.weak_score < a.key.weak_score;
    if (a.key.word_length != b.key.word_length) return a.key.word_length > b.key.word_length;
    // Unordered pair so the order is identical when gold and pred swap sides.
    auto unordered = [](const CandidateEdge &e) {
        return e.gold_var <= e.pred_var ? std::make_pair(e.gold_var, e.pred_var)
                                        : std::make_pair(e.pred_var, e.gold_var);
    };
    auto ua = unordered(a);
    auto ub = unordered(b);
    if (ua != ub) return ua < ub;
    return std::make_pair(a.gold_var, a.pred_var) < std::make_pair(b.gold_var, b.pred_var);
}

void NodeMapping::add_pair(const Var &gold, const Var &pred) {
    gold_to_pred[gold] = pred;
    pred_to_gold[pred] = gold;
    unmapped_gold.erase(gold);
    unmapped_pred.erase(pred);
}

std::optional<Var> NodeMapping::pred_of(const Var &gold) const {
    auto it = gold_to_pred.find(gold);
    if (it == gold_to_pred.end()) return std::nullopt;
    return it->second;
}

std::optional<Var> NodeMapping::gold_of(const Var &pred) const {
    auto it = pred_to_gold.find(pred);
    if (it == pred_to_gold.end()) return std::nullopt;
    return it->second;
}

std::vector<CandidateEdge> candidate_edges(const UmrSentence &gold, const UmrSentence &pred,
                                           Diagnostics *diag) {
    UmrSentence gold_norm = normalize_inverse_relations(gold);
    UmrSentence pred_norm = normalize_inverse_relations(pred);
    FeatureIndex gold_index(gold_norm.graph);
    FeatureIndex pred_index(pred_norm.graph);
    return overlap_candidates(gold_norm, pred_norm, gold_index, pred_index, diag);
}

SimilarityKey similarity_key(const Node &gold_node, const Node &pred_node,
                             const NodeGraph &gold_ctx, const NodeGraph &pred_ctx,
                             const std::set<int> &overlap,
                             const std::vector<std::string> &tokens) {
    FeatureIndex gold_index(gold_ctx);
    FeatureIndex pred_index(pred_ctx);
    return key_from_features(gold_index, pred_index, gold_node.var, pred_node.var,
                             overlap_char_length(overlap, tokens));
}

NodeMapping symmetrize(const std::vector<CandidateEdge> &candidates) {
    std::vector<const CandidateEdge *> sorted;
    sorted.reserve(candidates.size());
    for (const CandidateEdge &edge : candidates) sorted.push_back(&edge);
    std::sort(sorted.begin(), sorted.end(), [](const CandidateEdge *a, const CandidateEdge *b) {
        return candidate_preferred(*a, *b);
    });
    NodeMapping mapping;
    std::set<Var> gold_taken;
    std::set<Var> pred_taken;
    for (const CandidateEdge *edge : sorted) {
        if (gold_taken.count(edge->gold_var) > 0 || pred_taken.count(edge->pred_var) > 0)
            continue;
        gold_taken.insert(edge->gold_var);
        pred_taken.insert(edge->pred_var);
        mapping.add_pair(edge->gold_var, edge->pred_var);
    }
    return mapping;
}

void pair_unaligned(const UmrSentence &gold, const UmrSentence &pred, NodeMapping &mapping) {
    UmrSentence gold_norm = normalize_inverse_relations(gold);
    UmrSentence pred_norm = normalize_inverse_relations(pred);
    FeatureIndex gold_index(gold_norm.graph);
    FeatureIndex pred_index(pred_norm.graph);
    phase2_pairs(gold_norm, pred_norm, gold_index, pred_index, mapping);
}

NodeMapping match_graphs(const UmrSentence &gold, const UmrSentence &pred, Diagnostics *diag) {
    UmrSentence gold_norm = normalize_inverse_relations(gold);
    UmrSentence pred_norm = normalize_inverse_relations(pred);
    FeatureIndex gold_index(gold_norm.graph);
    FeatureIndex pred_index(pred_norm.graph);

    std::vector<CandidateEdge> candidates =
        overlap_candidates(gold_norm, pred_norm, gold_index, pred_index, diag);
    NodeMapping mapping = symmetrize(candidates);
    phase2_pairs(gold_norm, pred_norm, gold_index, pred_index, mapping);

    for (const auto &[var, node] : gold.graph.nodes)
        if (!mapping.pred_of(var)) mapping.unmapped_gold.insert(var);
    for (const auto &[var, node] : pred.graph.nodes)
        if (!mapping.gold_of(var)) mapping.unmapped_pred.insert(var);
    return mapping;
}

} // namespace umr
