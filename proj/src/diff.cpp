#include "umr/diff.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "umr/util.hpp"

namespace umr {

namespace {

DiffNode describe(const UmrSentence &sentence, const Var &var) {
    DiffNode node;
    node.var = var;
    auto it = sentence.graph.nodes.find(var);
    if (it != sentence.graph.nodes.end())
        node.concept_name = it->second.concept_name;
    std::string words;
    for (int position : sentence.alignment_of(var).positions) {
        if (position < 1 || position > static_cast<int>(sentence.tokens.size()))
            continue;
        if (!words.empty())
            words += ' ';
        words += sentence.tokens[static_cast<std::size_t>(position) - 1];
    }
    node.words = words;
    return node;
}

CategoryMismatch leftover(const NodeMapping &mapping, const std::vector<Triple> &gold,
                          const std::vector<Triple> &pred, bool rename_target) {
    CategoryMismatch out;
    std::multiset<Triple> pool(gold.begin(), gold.end());
    for (const Triple &t : pred) {
        Triple shown = t;
        bool complete = true;
        if (auto source = mapping.gold_of(t.source))
            shown.source = *source;
        else
            complete = false;
        if (rename_target) {
            if (auto target = mapping.gold_of(t.target))
                shown.target = *target;
            else
                complete = false;
        }
        if (complete) {
            auto it = pool.find(shown);
            if (it != pool.end()) {
                pool.erase(it);
                continue;
            }
        }
        out.pred_only.push_back(shown);
    }
    out.gold_only.assign(pool.begin(), pool.end());
    std::sort(out.pred_only.begin(), out.pred_only.end());
    return out;
}

} // namespace

DiffReport diff_sentences(const NodeMapping &mapping, const UmrSentence &gold,
                          const UmrSentence &pred) {
    UmrSentence gold_n = normalize_inverse_relations(gold);
    UmrSentence pred_n = normalize_inverse_relations(pred);

    DiffReport report;
    report.sentence_index = gold.index;

    for (const Var &var : gold_n.graph.order) {
        DiffPairEntry entry;
        entry.gold = describe(gold_n, var);
        if (auto partner = mapping.pred_of(var))
            entry.pred = describe(pred_n, *partner);
        report.entries.push_back(std::move(entry));
    }
    for (const Var &var : pred_n.graph.order) {
        if (mapping.gold_of(var))
            continue;
        DiffPairEntry entry;
        entry.pred = describe(pred_n, var);
        report.entries.push_back(std::move(entry));
    }

    TripleSet gold_triples = extract_triples(gold_n, false);
    TripleSet pred_triples = extract_triples(pred_n, false);
    report.concepts = leftover(mapping, gold_triples.concepts, pred_triples.concepts, false);
    report.attributes =
        leftover(mapping, gold_triples.attributes, pred_triples.attributes, false);
    report.relations = leftover(mapping, gold_triples.relations, pred_triples.relations, true);
    return report;
}

namespace {

std::string node_text(const std::optional<DiffNode> &node) {
    if (!node)
        return "UNMAPPED";
    std::string text = node->var + " / " + node->concept_name;
    if (!node->words.empty())
        text += " (\"" + node->words + "\")";
    return text;
}

std::string triple_text(const Triple &t) {
    return "(" + t.source + ", " + t.label + ", " + t.target + ")";
}

void render_category(std::ostringstream &out, const std::string &title,
                     const CategoryMismatch &mismatch) {
    if (mismatch.gold_only.empty() && mismatch.pred_only.empty())
        return;
    out << "  " << title << ":\n";
    for (const Triple &t : mismatch.gold_only)
        out << "    - " << triple_text(t) << "\n";
    for (const Triple &t : mismatch.pred_only)
        out << "    + " << triple_text(t) << "\n";
}

} // namespace

std::string diff_to_text(const DiffReport &report) {
    std::ostringstream out;
    out << "sentence " << report.sentence_index << "\n";

    // Pad by codepoints, not bytes, so accented text keeps the columns straight.
    std::size_t width = 0;
    for (const DiffPairEntry &entry : report.entries)
        width = std::max(width, utf8_length(node_text(entry.gold)));
    for (const DiffPairEntry &entry : report.entries) {
        std::string left = node_text(entry.gold);
        out << "  " << left << std::string(width - utf8_length(left), ' ') << "  <=>  "
            << node_text(entry.pred) << "\n";
    }

    render_category(out, "concepts", report.concepts);
    render_category(out, "attributes", report.attributes);
    render_category(out, "relations", report.relations);
    out << "  " << report.mismatch_count() << " mismatches\n";
    return out.str();
}

namespace {

nlohmann::json node_json(const std::optional<DiffNode> &node) {
    if (!node)
        return nullptr;
    return {{"var", node->var}, {"concept", node->concept_name}, {"words", node->words}};
}

nlohmann::json triples_json(const std::vector<Triple> &triples) {
    nlohmann::json out = nlohmann::json::array();
    for (const Triple &t : triples)
        out.push_back({t.source, t.label, t.target});
    return out;
}

nlohmann::json category_json(const CategoryMismatch &mismatch) {
    return {{"gold_only", triples_json(mismatch.gold_only)},
            {"pred_only", triples_json(mismatch.pred_only)}};
}

} // namespace

nlohmann::json diff_to_json(const DiffReport &report) {
    nlohmann::json entries = nlohmann::json::array();
    for (const DiffPairEntry &entry : report.entries)
        entries.push_back({{"gold", node_json(entry.gold)}, {"pred", node_json(entry.pred)}});
    return {{"sentence", report.sentence_index},
            {"nodes", entries},
            {"mismatches",
             {{"concepts", category_json(report.concepts)},
              {"attributes", category_json(report.attributes)},
              {"relations", category_json(report.relations)}}},
            {"mismatch_count", report.mismatch_count()}};
}

} // namespace umr
