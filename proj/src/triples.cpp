#include "umr/triples.hpp"

#include <algorithm>
#include <sstream>

#include "umr/util.hpp"

namespace umr {

namespace {

// ":opN" -> N, or -1 when the name is not an op attribute.
int op_number(const std::string &name) {
    if (!starts_with(name, "op") || name.size() <= 2) return -1;
    int value = 0;
    for (std::size_t i = 2; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return -1;
        value = value * 10 + (name[i] - '0');
    }
    return value;
}

} // namespace

NodeGraph normalize_inverse_relations(const NodeGraph &graph) {
    NodeGraph result = graph;
    for (Edge &edge : result.edges) {
        if (edge.label.size() > 3 && edge.label.ends_with("-of")) {
            edge.label.resize(edge.label.size() - 3);
            std::swap(edge.parent, edge.child);
        }
    }
    return result;
}

UmrSentence normalize_inverse_relations(const UmrSentence &sentence) {
    UmrSentence result = sentence;
    result.graph = normalize_inverse_relations(sentence.graph);
    return result;
}

std::string enhance_name_concept(const Node &node, const NodeGraph &) {
    if (node.concept_name != "name") return node.concept_name;
    std::vector<std::pair<int, const std::string *>> ops;
    for (const auto &[name, value] : node.attributes) {
        int n = op_number(name);
        if (n >= 0) ops.emplace_back(n, &value);
    }
    std::stable_sort(ops.begin(), ops.end(),
                     [](const auto &a, const auto &b) { return a.first < b.first; });
    std::string result = "name[";
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (i > 0) result += ' ';
        result += *ops[i].second;
    }
    result += ']';
    return result;
}

TripleSet extract_triples(const NodeGraph &graph) {
    TripleSet set;
    auto add_node = [&set](const Node &node) {
        set.concepts.push_back({node.var, "instance", node.concept_name});
        for (const auto &[name, value] : node.attributes)
            set.attributes.push_back({node.var, name, value});
    };
    if (graph.order.size() == graph.nodes.size()) {
        for (const Var &var : graph.order) add_node(graph.nodes.at(var));
    } else {
        // Hand-built graphs may lack `order`; fall back to the node map.
        for (const auto &[var, node] : graph.nodes) add_node(node);
    }
    for (const Edge &edge : graph.edges)
        set.relations.push_back({edge.parent, edge.label, edge.child});
    return set;
}

TripleSet extract_triples(const UmrSentence &sentence, bool include_doc) {
    TripleSet set = extract_triples(sentence.graph);
    if (include_doc) {
        for (const DocTriple &triple : sentence.doc_triples)
            set.doc_level.push_back({triple.source, triple.label, triple.target});
    }
    return set;
}

std::pair<int, int> count_nodes_by_alignment(const UmrDocument &doc) {
    int aligned = 0;
    int unaligned = 0;
    for (const UmrSentence &sentence : doc.sentences) {
        for (const auto &[var, node] : sentence.graph.nodes) {
            if (sentence.alignment_of(var).empty())
                ++unaligned;
            else
                ++aligned;
        }
    }
    return {aligned, unaligned};
}

} // namespace umr
