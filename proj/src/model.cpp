#include "umr/model.hpp"

#include <algorithm>

namespace umr {

const char *to_string(DocFamily family) {
    switch (family) {
    case DocFamily::temporal: return "temporal";
    case DocFamily::coref: return "coref";
    case DocFamily::modal: return "modal";
    }
    return "?";
}

bool NodeGraph::operator==(const NodeGraph &other) const {
    if (sentence_index != other.sentence_index || root != other.root || nodes != other.nodes)
        return false;
    // Edge order within a parent carries no meaning; compare as multisets.
    std::vector<Edge> a = edges;
    std::vector<Edge> b = other.edges;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool UmrSentence::operator==(const UmrSentence &other) const {
    return index == other.index && sent_id == other.sent_id && metadata == other.metadata &&
           had_index_line == other.had_index_line && tokens == other.tokens &&
           graph == other.graph && alignments == other.alignments &&
           doc_triples == other.doc_triples;
}

const AlignmentSpan &UmrSentence::alignment_of(const Var &var) const {
    static const AlignmentSpan kEmpty;
    auto it = alignments.find(var);
    return it == alignments.end() ? kEmpty : it->second;
}

bool UmrDocument::operator==(const UmrDocument &other) const {
    return doc_id == other.doc_id && sentences == other.sentences;
}

bool UmrDocument::defines_variable(const std::string &name) const {
    for (const UmrSentence &sentence : sentences) {
        if (sentence.graph.nodes.count(name) > 0) return true;
    }
    return false;
}

} // namespace umr
