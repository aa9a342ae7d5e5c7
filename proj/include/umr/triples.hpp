#ifndef UMR_TRIPLES_HPP
#define UMR_TRIPLES_HPP

#include <string>
#include <utility>
#include <vector>

#include "umr/model.hpp"

namespace umr {

// One scored property unit. The label "instance" is reserved for concepts.
struct Triple {
    std::string source;
    std::string label;
    std::string target;

    bool operator==(const Triple &) const = default;
    auto operator<=>(const Triple &) const = default;
};

// Triples of one graph (or document side), kept per category so partial
// metrics can score them separately. All four are multisets: duplicated
// annotation entries count once per occurrence.
struct TripleSet {
    std::vector<Triple> concepts;   // (var, instance, concept)
    std::vector<Triple> attributes; // (var, name, value)
    std::vector<Triple> relations;  // (parent, label, child)
    std::vector<Triple> doc_level;  // (endpoint, label, endpoint)

    std::size_t sentence_level_size() const {
        return concepts.size() + attributes.size() + relations.size();
    }
};

// Replaces every `X-of` edge by `X` with parent and child swapped.
// Idempotent; node set unchanged.
NodeGraph normalize_inverse_relations(const NodeGraph &graph);

// Returns a copy of the sentence with a normalized graph.
UmrSentence normalize_inverse_relations(const UmrSentence &sentence);

// Concept used for matching. `name` nodes are expanded with their :opN
// values in ascending N order, e.g. name["United" "States"]; every other
// concept passes through unchanged.
std::string enhance_name_concept(const Node &node, const NodeGraph &graph);

TripleSet extract_triples(const NodeGraph &graph);
TripleSet extract_triples(const UmrSentence &sentence, bool include_doc);

// (aligned, unaligned) node counts; a node is unaligned iff its alignment
// set is empty or absent.
std::pair<int, int> count_nodes_by_alignment(const UmrDocument &doc);

} // namespace umr

#endif
