#ifndef UMR_PARSE_HPP
#define UMR_PARSE_HPP

#include <string>

#include "umr/diagnostics.hpp"
#include "umr/model.hpp"

namespace umr {

// Reads a complete UMR file: one block per sentence, blank-line separated.
// Each block holds metadata lines, the token line, the sentence graph, the
// alignment block and an optional document-level annotation block.
// Throws SyntaxError / DanglingVariable / DuplicateVariable / MisalignedIndex.
UmrDocument parse_document(const std::string &text, Diagnostics *diag = nullptr);

// parse_document over the contents of `path`; sets source_path.
UmrDocument parse_document_file(const std::string &path, Diagnostics *diag = nullptr);

// Parses a single parenthesized graph expression. Bare variable mentions
// become re-entrant edges, everything else becomes an attribute constant.
NodeGraph parse_sentence_graph(const std::string &sexpr, int sentence_index);

// True if `token` fits the variable shape `s<digits><letters><digits?>`
// (e.g. s23w, s1p0). Used to tell dangling references from constants.
bool looks_like_variable(std::string_view token);

} // namespace umr

#endif
