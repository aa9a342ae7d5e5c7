#include "umr/serialize.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace umr {

namespace {

class GraphWriter {
  public:
    explicit GraphWriter(const NodeGraph &graph) : graph_(graph) {
        for (std::size_t i = 0; i < graph.edges.size(); ++i)
            children_[graph.edges[i].parent].push_back(i);
    }

    std::string write() {
        write_node(graph_.root, 0);
        if (defined_.size() != graph_.nodes.size())
            throw std::invalid_argument("graph has nodes unreachable from the root");
        return std::move(out_).str();
    }

  private:
    void indent(int depth) {
        out_ << '\n';
        for (int i = 0; i < depth; ++i) out_ << "    ";
    }

    void write_node(const Var &var, int depth) {
        const Node &node = graph_.nodes.at(var);
        defined_.insert(var);
        out_ << '(' << var << " / " << node.concept_name;
        if (node.gloss) out_ << " '" << *node.gloss << '\'';
        for (const auto &[name, value] : node.attributes) {
            indent(depth + 1);
            out_ << ':' << name << ' ' << value;
        }
        auto it = children_.find(var);
        if (it != children_.end()) {
            for (std::size_t edge_index : it->second) {
                const Edge &edge = graph_.edges[edge_index];
                indent(depth + 1);
                out_ << ':' << edge.label << ' ';
                if (defined_.count(edge.child) > 0) {
                    out_ << edge.child; // re-entrant reference
                } else {
                    write_node(edge.child, depth + 1);
                }
            }
        }
        out_ << ')';
    }

    const NodeGraph &graph_;
    std::map<Var, std::vector<std::size_t>> children_;
    std::set<Var> defined_;
    std::ostringstream out_;
};

void write_doc_block(std::ostringstream &out, const UmrSentence &sentence) {
    out << "# document level annotation:\n";
    out << "(s" << sentence.index << "s0 / sentence";
    for (DocFamily family : {DocFamily::temporal, DocFamily::coref, DocFamily::modal}) {
        bool first = true;
        for (const DocTriple &triple : sentence.doc_triples) {
            if (triple.family != family) continue;
            if (first) {
                out << "\n    :" << to_string(family) << " (";
                first = false;
            } else {
                out << ' ';
            }
            out << '(' << triple.source << " :" << triple.label << ' ' << triple.target << ')';
        }
        if (!first) out << ')';
    }
    out << ")\n";
}

} // namespace

std::string serialize_span(const AlignmentSpan &span) {
    if (span.positions.empty()) return "0-0";
    std::ostringstream out;
    auto it = span.positions.begin();
    while (it != span.positions.end()) {
        int lo = *it;
        int hi = lo;
        auto run = std::next(it);
        while (run != span.positions.end() && *run == hi + 1) hi = *run++;
        if (it != span.positions.begin()) out << ", ";
        out << lo << '-' << hi;
        it = run;
    }
    return std::move(out).str();
}

std::string serialize_graph(const NodeGraph &graph) { return GraphWriter(graph).write(); }

std::string serialize_sentence(const UmrSentence &sentence) {
    std::ostringstream out;
    if (sentence.sent_id) out << "# sent_id = " << *sentence.sent_id << '\n';
    for (const std::string &line : sentence.metadata) out << line << '\n';
    out << "# :: snt" << sentence.index << '\n';
    if (sentence.had_index_line) {
        out << "Index:";
        for (std::size_t i = 1; i <= sentence.tokens.size(); ++i) out << ' ' << i;
        out << '\n';
    }
    out << "Words:";
    for (const std::string &token : sentence.tokens) out << ' ' << token;
    out << '\n';
    out << "# sentence level graph:\n";
    out << serialize_graph(sentence.graph) << '\n';
    out << "# alignment:\n";
    for (const Var &var : sentence.graph.order)
        out << var << ": " << serialize_span(sentence.alignment_of(var)) << '\n';
    if (!sentence.doc_triples.empty()) write_doc_block(out, sentence);
    return std::move(out).str();
}

std::string serialize_document(const UmrDocument &doc) {
    std::ostringstream out;
    for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
        if (i > 0) out << '\n';
        out << serialize_sentence(doc.sentences[i]);
    }
    return std::move(out).str();
}

} // namespace umr
