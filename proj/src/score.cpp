#include "umr/score.hpp"

#include <algorithm>
#include <iterator>
#include <set>

namespace umr {

namespace {

// Predicted triples only count as matches once their variables are renamed
// into the gold namespace; triples touching an unmapped variable cannot match.
std::vector<Triple> rename_into_gold(const std::vector<Triple> &pred,
                                     const NodeMapping &mapping, bool both_endpoints) {
    std::vector<Triple> out;
    out.reserve(pred.size());
    for (const Triple &t : pred) {
        auto source = mapping.gold_of(t.source);
        if (!source)
            continue;
        if (both_endpoints) {
            auto target = mapping.gold_of(t.target);
            if (!target)
                continue;
            out.push_back({*source, t.label, *target});
        } else {
            out.push_back({*source, t.label, t.target});
        }
    }
    return out;
}

long long multiset_intersection_size(std::vector<Triple> a, std::vector<Triple> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::vector<Triple> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(common));
    return static_cast<long long>(common.size());
}

template <typename Keep>
std::vector<Triple> filter(const std::vector<Triple> &triples, Keep keep) {
    std::vector<Triple> out;
    std::copy_if(triples.begin(), triples.end(), std::back_inserter(out), keep);
    return out;
}

Scores category_scores(const NodeMapping &mapping, std::vector<Triple> gold,
                       std::vector<Triple> pred, bool both_endpoints, bool mapped_only) {
    if (mapped_only) {
        auto gold_mapped = [&](const Triple &t) {
            return mapping.pred_of(t.source) &&
                   (!both_endpoints || mapping.pred_of(t.target));
        };
        auto pred_mapped = [&](const Triple &t) {
            return mapping.gold_of(t.source) &&
                   (!both_endpoints || mapping.gold_of(t.target));
        };
        gold = filter(gold, gold_mapped);
        pred = filter(pred, pred_mapped);
    }
    Scores s;
    s.gold_total = static_cast<long long>(gold.size());
    s.pred_total = static_cast<long long>(pred.size());
    s.matched = multiset_intersection_size(
        gold, rename_into_gold(pred, mapping, both_endpoints));
    return s;
}

std::map<std::string, std::vector<Triple>> group_by_label(const std::vector<Triple> &triples) {
    std::map<std::string, std::vector<Triple>> groups;
    for (const Triple &t : triples)
        groups[t.label].push_back(t);
    return groups;
}

void merge_by_name(std::map<std::string, Scores> &into,
                   const std::map<std::string, Scores> &from) {
    for (const auto &[name, scores] : from)
        into[name] += scores;
}

} // namespace

Scores score_triples(const NodeMapping &mapping, const TripleSet &gold_triples,
                     const TripleSet &pred_triples) {
    Scores s;
    s += category_scores(mapping, gold_triples.concepts, pred_triples.concepts, false, false);
    s += category_scores(mapping, gold_triples.attributes, pred_triples.attributes, false, false);
    s += category_scores(mapping, gold_triples.relations, pred_triples.relations, true, false);
    return s;
}

void partial_scores(const NodeMapping &mapping, const TripleSet &gold_triples,
                    const TripleSet &pred_triples, ScoreReport &report, bool mapped_only) {
    report.concepts = category_scores(mapping, gold_triples.concepts,
                                      pred_triples.concepts, false, mapped_only);
    report.relations = category_scores(mapping, gold_triples.relations,
                                       pred_triples.relations, true, mapped_only);

    auto gold_groups = group_by_label(gold_triples.attributes);
    auto pred_groups = group_by_label(pred_triples.attributes);
    std::set<std::string> names;
    for (const auto &[name, _] : gold_groups)
        names.insert(name);
    for (const auto &[name, _] : pred_groups)
        names.insert(name);

    report.attributes_all = Scores{};
    report.attributes_by_name.clear();
    for (const std::string &name : names) {
        Scores s = category_scores(mapping, gold_groups[name], pred_groups[name],
                                   false, mapped_only);
        report.attributes_by_name[name] = s;
        report.attributes_all += s;
    }

    report.overall = Scores{};
    report.overall += report.concepts;
    report.overall += report.attributes_all;
    report.overall += report.relations;
}

Scores mapping_scores(std::size_t pair_count, int n_gold, int n_pred) {
    Scores s;
    s.matched = static_cast<long long>(pair_count);
    s.gold_total = n_gold;
    s.pred_total = n_pred;
    return s;
}

Scores alignment_f1(const UmrSentence &gold, const UmrSentence &pred) {
    auto spans = [](const UmrSentence &sentence) {
        std::vector<std::set<int>> out;
        for (const auto &[var, span] : sentence.alignments) {
            (void)var;
            if (!span.positions.empty())
                out.push_back(span.positions);
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto gold_spans = spans(gold);
    auto pred_spans = spans(pred);
    std::vector<std::set<int>> common;
    std::set_intersection(gold_spans.begin(), gold_spans.end(), pred_spans.begin(),
                          pred_spans.end(), std::back_inserter(common));
    Scores s;
    s.matched = static_cast<long long>(common.size());
    s.gold_total = static_cast<long long>(gold_spans.size());
    s.pred_total = static_cast<long long>(pred_spans.size());
    return s;
}

CorpusStats corpus_stats(const std::vector<UmrDocument> &docs) {
    CorpusStats stats;
    for (const UmrDocument &doc : docs) {
        auto [aligned, unaligned] = count_nodes_by_alignment(doc);
        stats.aligned += aligned;
        stats.unaligned += unaligned;
        stats.total_nodes += aligned + unaligned;
    }
    return stats;
}

namespace {

// Document-level triples live in one namespace per side, so they are scored
// once through the union of the per-sentence mappings. Endpoints that are not
// variables of their own side (constants such as document-creation-time) pass
// through unchanged.
Scores doc_level_scores(const UmrDocument &gold, const UmrDocument &pred,
                        const std::map<Var, Var> &pred_to_gold,
                        const std::map<Var, Var> &gold_to_pred, bool mapped_only) {
    auto collect = [](const UmrDocument &doc) {
        std::vector<Triple> out;
        for (const UmrSentence &sentence : doc.sentences)
            for (const DocTriple &t : sentence.doc_triples)
                out.push_back({t.source, t.label, t.target});
        return out;
    };
    std::vector<Triple> gold_triples = collect(gold);
    std::vector<Triple> pred_triples = collect(pred);

    auto endpoint_ok = [](const UmrDocument &doc, const std::map<Var, Var> &mapped,
                          const std::string &endpoint) {
        return !doc.defines_variable(endpoint) || mapped.count(endpoint) > 0;
    };
    if (mapped_only) {
        gold_triples = filter(gold_triples, [&](const Triple &t) {
            return endpoint_ok(gold, gold_to_pred, t.source) &&
                   endpoint_ok(gold, gold_to_pred, t.target);
        });
        pred_triples = filter(pred_triples, [&](const Triple &t) {
            return endpoint_ok(pred, pred_to_gold, t.source) &&
                   endpoint_ok(pred, pred_to_gold, t.target);
        });
    }

    std::vector<Triple> renamed;
    for (const Triple &t : pred_triples) {
        auto rename = [&](const std::string &endpoint) -> std::optional<std::string> {
            if (!pred.defines_variable(endpoint))
                return endpoint;
            auto it = pred_to_gold.find(endpoint);
            if (it == pred_to_gold.end())
                return std::nullopt;
            return it->second;
        };
        auto source = rename(t.source);
        auto target = rename(t.target);
        if (source && target)
            renamed.push_back({*source, t.label, *target});
    }

    Scores s;
    s.gold_total = static_cast<long long>(gold_triples.size());
    s.pred_total = static_cast<long long>(pred_triples.size());
    s.matched = multiset_intersection_size(gold_triples, renamed);
    return s;
}

} // namespace

ScoreReport score_documents(const UmrDocument &gold, const UmrDocument &pred,
                            const ScoreOptions &options, Diagnostics *diag) {
    if (gold.sentences.size() != pred.sentences.size())
        throw SentenceCountMismatch(
            "document '" + gold.doc_id + "' has " +
            std::to_string(gold.sentences.size()) + " sentences but '" + pred.doc_id +
            "' has " + std::to_string(pred.sentences.size()));

    ScoreReport total;
    std::map<Var, Var> union_pred_to_gold;
    std::map<Var, Var> union_gold_to_pred;

    for (std::size_t i = 0; i < gold.sentences.size(); ++i) {
        const UmrSentence &gold_sentence = gold.sentences[i];
        const UmrSentence &pred_sentence = pred.sentences[i];

        NodeMapping mapping = options.matcher == MatcherKind::alignment_driven
                                  ? match_graphs(gold_sentence, pred_sentence, diag)
                                  : hill_climb_match(gold_sentence, pred_sentence,
                                                     options.search);

        TripleSet gold_triples =
            extract_triples(normalize_inverse_relations(gold_sentence), false);
        TripleSet pred_triples =
            extract_triples(normalize_inverse_relations(pred_sentence), false);

        ScoreReport sentence;
        sentence.sentence_index = gold_sentence.index;
        partial_scores(mapping, gold_triples, pred_triples, sentence, options.mapped_only);
        sentence.alignment = alignment_f1(gold_sentence, pred_sentence);
        sentence.mapping =
            mapping_scores(mapping.pair_count(),
                           static_cast<int>(gold_sentence.graph.nodes.size()),
                           static_cast<int>(pred_sentence.graph.nodes.size()));

        total.overall += sentence.overall;
        total.concepts += sentence.concepts;
        total.relations += sentence.relations;
        total.attributes_all += sentence.attributes_all;
        merge_by_name(total.attributes_by_name, sentence.attributes_by_name);
        total.alignment += sentence.alignment;
        total.mapping += sentence.mapping;
        total.per_sentence.push_back(std::move(sentence));

        for (const auto &[pred_var, gold_var] : mapping.pred_to_gold) {
            union_pred_to_gold.emplace(pred_var, gold_var);
            union_gold_to_pred.emplace(gold_var, pred_var);
        }
    }

    if (options.include_doc)
        total.doc_level = doc_level_scores(gold, pred, union_pred_to_gold,
                                           union_gold_to_pred, options.mapped_only);
    return total;
}

} // namespace umr
