#ifndef UMR_MODEL_HPP
#define UMR_MODEL_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace umr {

using Var = std::string;

// Token positions a node is aligned to, 1-based, possibly discontinuous.
// An empty set means the node is unaligned (written "0-0" in files).
struct AlignmentSpan {
    std::set<int> positions;

    bool empty() const { return positions.empty(); }
    bool operator==(const AlignmentSpan &) const = default;
};

// One concept node of a sentence graph.
struct Node {
    Var var;
    std::string concept_name;
    std::optional<std::string> gloss; // annotation aid, excluded from matching
    std::vector<std::pair<std::string, std::string>> attributes; // name (no colon) -> constant value

    bool operator==(const Node &) const = default;
};

// Labeled relation between two nodes of the same graph.
struct Edge {
    Var parent;
    std::string label; // stored without the leading colon
    Var child;

    bool operator==(const Edge &) const = default;
    auto operator<=>(const Edge &) const = default;
};

// Directed graph of one sentence. `order` lists variables in the order they
// were introduced in the source text and drives serialization and reports;
// it is presentation data and does not take part in equality.
struct NodeGraph {
    int sentence_index = 0;
    Var root;
    std::map<Var, Node> nodes;
    std::vector<Edge> edges;
    std::vector<Var> order;

    bool operator==(const NodeGraph &other) const;
};

enum class DocFamily { temporal, coref, modal };

const char *to_string(DocFamily family);

// Document-level relation: temporal / coreference / modality link between
// variables (possibly of different sentences) or reserved constants such as
// document-creation-time, root and author.
struct DocTriple {
    DocFamily family = DocFamily::temporal;
    std::string source;
    std::string label; // stored without the leading colon
    std::string target;

    bool operator==(const DocTriple &) const = default;
};

struct UmrSentence {
    int index = 0; // 1-based, contiguous within the document
    std::optional<std::string> sent_id;
    std::vector<std::string> metadata; // unrecognized '#' lines, kept verbatim
    bool had_index_line = false;
    std::vector<std::string> tokens; // position p is tokens[p-1]
    NodeGraph graph;
    std::map<Var, AlignmentSpan> alignments; // one entry per node
    std::vector<DocTriple> doc_triples;

    bool operator==(const UmrSentence &other) const;

    // Alignment of one node; absent entries count as unaligned.
    const AlignmentSpan &alignment_of(const Var &var) const;
};

struct UmrDocument {
    std::string doc_id;
    std::string source_path; // diagnostic only
    std::vector<UmrSentence> sentences;
    std::vector<std::string> warnings; // parse-time diagnostics, not part of equality

    bool operator==(const UmrDocument &other) const;

    // True if `name` is a variable of any sentence in this document.
    bool defines_variable(const std::string &name) const;
};

} // namespace umr

#endif
