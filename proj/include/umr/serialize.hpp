#ifndef UMR_SERIALIZE_HPP
#define UMR_SERIALIZE_HPP

#include <string>

#include "umr/model.hpp"

namespace umr {

// Emits the canonical file shape: metadata, '# :: snt<k>', token line,
// graph, alignment block (one line per node, '0-0' for unaligned) and the
// document-level block when present. parse_document(serialize_document(d))
// equals d for every well-formed document.
std::string serialize_document(const UmrDocument &doc);

std::string serialize_sentence(const UmrSentence &sentence);

// Penman-style rendering of one graph, nodes defined at first mention.
// Throws std::invalid_argument if some node is unreachable from the root.
std::string serialize_graph(const NodeGraph &graph);

// {2,3,10} -> "2-3, 10-10"; the empty span -> "0-0".
std::string serialize_span(const AlignmentSpan &span);

} // namespace umr

#endif
