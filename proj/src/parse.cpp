#include "umr/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "umr/util.hpp"

namespace umr {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

// ---------------------------------------------------------------------------
// S-expression lexer
// ---------------------------------------------------------------------------

enum class TokKind { lparen, rparen, atom, dquote, squote };

struct Token {
    TokKind kind;
    std::string text; // surface form; quoted strings keep their quotes
    Location loc;
};

// Tokenizes a graph expression. `first_line` anchors locations so errors in
// multi-line files point at the right place.
std::vector<Token> lex_sexpr(std::string_view text, int first_line) {
    std::vector<Token> tokens;
    int line = first_line;
    int col = 1;
    std::size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        Location loc{line, col};
        if (c == '(') {
            tokens.push_back({TokKind::lparen, "(", loc});
            advance(c);
            ++i;
        } else if (c == ')') {
            tokens.push_back({TokKind::rparen, ")", loc});
            advance(c);
            ++i;
        } else if (c == '"' || c == '\'') {
            char quote = c;
            std::size_t start = i;
            advance(c);
            ++i;
            while (i < text.size() && text[i] != quote && text[i] != '\n') {
                advance(text[i]);
                ++i;
            }
            if (i >= text.size() || text[i] != quote)
                throw SyntaxError("unterminated quoted string", loc);
            advance(text[i]);
            ++i;
            tokens.push_back({quote == '"' ? TokKind::dquote : TokKind::squote,
                              std::string(text.substr(start, i - start)), loc});
        } else {
            std::size_t start = i;
            while (i < text.size()) {
                char a = text[i];
                if (std::isspace(static_cast<unsigned char>(a)) || a == '(' || a == ')' ||
                    a == '"' || a == '\'')
                    break;
                advance(a);
                ++i;
            }
            tokens.push_back({TokKind::atom, std::string(text.substr(start, i - start)), loc});
        }
    }
    return tokens;
}

// ---------------------------------------------------------------------------
// Sentence graph parser (two passes: collect definitions, then build)
// ---------------------------------------------------------------------------

class GraphParser {
  public:
    GraphParser(std::vector<Token> tokens, int sentence_index)
        : tokens_(std::move(tokens)) {
        graph_.sentence_index = sentence_index;
    }

    NodeGraph parse() {
        collect_definitions();
        pos_ = 0;
        Var root = parse_node();
        if (pos_ != tokens_.size())
            throw SyntaxError("trailing content after graph", tokens_[pos_].loc);
        graph_.root = root;
        return std::move(graph_);
    }

  private:
    const Token &peek() const {
        if (pos_ >= tokens_.size())
            throw SyntaxError("unexpected end of graph expression",
                              tokens_.empty() ? Location{} : tokens_.back().loc);
        return tokens_[pos_];
    }

    const Token &next() {
        const Token &tok = peek();
        ++pos_;
        return tok;
    }

    // Every `( var / ...` introduces a variable; a second introduction of the
    // same name is an error.
    void collect_definitions() {
        for (std::size_t i = 0; i + 2 < tokens_.size(); ++i) {
            if (tokens_[i].kind == TokKind::lparen && tokens_[i + 1].kind == TokKind::atom &&
                tokens_[i + 2].kind == TokKind::atom && tokens_[i + 2].text == "/") {
                const std::string &var = tokens_[i + 1].text;
                if (defined_.count(var) > 0)
                    throw DuplicateVariable("variable '" + var + "' defined twice",
                                            tokens_[i + 1].loc);
                defined_.insert(var);
            }
        }
    }

    Var parse_node() {
        const Token &open = next();
        if (open.kind != TokKind::lparen) throw SyntaxError("expected '('", open.loc);
        const Token &var_tok = next();
        if (var_tok.kind != TokKind::atom)
            throw SyntaxError("expected variable after '('", var_tok.loc);
        const Token &slash = next();
        if (slash.kind != TokKind::atom || slash.text != "/")
            throw SyntaxError("expected '/' after variable", slash.loc);
        const Token &concept_tok = next();
        if (concept_tok.kind == TokKind::lparen || concept_tok.kind == TokKind::rparen)
            throw SyntaxError("expected concept string", concept_tok.loc);

        Node node;
        node.var = var_tok.text;
        node.concept_name = concept_tok.text;
        if (node.concept_name.empty()) throw SyntaxError("empty concept", concept_tok.loc);
        started_.insert(node.var);
        graph_.order.push_back(node.var);

        // Optional single-quoted gloss after the concept, e.g. číst-002 'read'.
        if (pos_ < tokens_.size() && tokens_[pos_].kind == TokKind::squote) {
            const std::string &raw = tokens_[pos_].text;
            node.gloss = raw.substr(1, raw.size() - 2);
            ++pos_;
        }

        while (true) {
            const Token &tok = peek();
            if (tok.kind == TokKind::rparen) {
                ++pos_;
                break;
            }
            if (tok.kind != TokKind::atom || tok.text.size() < 2 || tok.text[0] != ':')
                throw SyntaxError("expected ':label' or ')'", tok.loc);
            std::string label = tok.text.substr(1);
            ++pos_;
            parse_value(node, label);
        }

        graph_.nodes.emplace(node.var, std::move(node));
        return var_tok.text;
    }

    void parse_value(Node &node, const std::string &label) {
        const Token &tok = peek();
        switch (tok.kind) {
        case TokKind::lparen: {
            // Reserve the slot first so edges keep document order even though
            // the child subtree is parsed before this edge is complete.
            std::size_t slot = graph_.edges.size();
            graph_.edges.push_back({node.var, label, ""});
            graph_.edges[slot].child = parse_node();
            return;
        }
        case TokKind::dquote:
        case TokKind::squote:
            node.attributes.emplace_back(label, tok.text);
            ++pos_;
            return;
        case TokKind::atom: {
            if (tok.text[0] == ':')
                throw SyntaxError("missing value for ':" + label + "'", tok.loc);
            ++pos_;
            if (started_.count(tok.text) > 0) {
                // Re-entrancy: bare mention of an already introduced variable.
                graph_.edges.push_back({node.var, label, tok.text});
            } else if (defined_.count(tok.text) > 0 && looks_like_variable(tok.text)) {
                // Forward reference, resolved by the definition pass.
                graph_.edges.push_back({node.var, label, tok.text});
            } else if (defined_.count(tok.text) == 0 && looks_like_variable(tok.text)) {
                throw DanglingVariable("reference to undefined variable '" + tok.text + "'",
                                       tok.loc);
            } else {
                node.attributes.emplace_back(label, tok.text);
            }
            return;
        }
        default:
            throw SyntaxError("expected attribute value or child node", tok.loc);
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    NodeGraph graph_;
    std::set<std::string> defined_; // all variables introduced anywhere
    std::set<std::string> started_; // introductions seen so far in pass 2
};

// ---------------------------------------------------------------------------
// Document parser
// ---------------------------------------------------------------------------

struct Line {
    std::string text;
    int number; // 1-based in the input
};

const std::string_view kGraphMarker = "# sentence level graph:";
const std::string_view kAlignMarker = "# alignment:";
const std::string_view kDocMarker = "# document level annotation:";

// `# :: snt<k>` -> k, or 0 if the line is not a sentence marker.
int parse_sentence_marker(std::string_view line) {
    std::string_view rest = trim(line);
    if (!starts_with(rest, "#")) return 0;
    rest = trim(rest.substr(1));
    if (!starts_with(rest, "::")) return 0;
    rest = trim(rest.substr(2));
    if (!starts_with(rest, "snt")) return 0;
    rest = rest.substr(3);
    if (rest.empty()) return 0;
    int value = 0;
    for (char c : rest) {
        if (!is_digit(c)) return 0;
        value = value * 10 + (c - '0');
    }
    return value;
}

// `# sent_id = <id>` -> id, empty optional otherwise.
std::optional<std::string> parse_sent_id(std::string_view line) {
    std::string_view rest = trim(line);
    if (!starts_with(rest, "#")) return std::nullopt;
    rest = trim(rest.substr(1));
    if (!starts_with(rest, "sent_id")) return std::nullopt;
    rest = trim(rest.substr(7));
    if (!starts_with(rest, "=")) return std::nullopt;
    return std::string(trim(rest.substr(1)));
}

struct AlignmentLine {
    std::string var;
    std::string spans;
    Location loc;
};

class SentenceBlockParser {
  public:
    SentenceBlockParser(const std::vector<Line> &lines, Diagnostics *diag,
                        std::vector<std::string> *doc_warnings)
        : lines_(lines), diag_(diag), doc_warnings_(doc_warnings) {}

    UmrSentence parse() {
        split_sections();
        if (sentence_.index == 0)
            throw SyntaxError("missing '# :: snt<k>' sentence marker", {lines_.front().number, 1});
        if (sentence_.tokens.empty() && !saw_words_)
            throw SyntaxError("missing 'Words:' line", {lines_.front().number, 1});
        if (graph_text_.empty())
            throw SyntaxError("missing sentence graph", {lines_.front().number, 1});

        std::vector<Token> tokens = lex_sexpr(graph_text_, graph_first_line_);
        sentence_.graph = GraphParser(std::move(tokens), sentence_.index).parse();

        if (index_field_count_ >= 0 &&
            index_field_count_ != static_cast<int>(sentence_.tokens.size()))
            warn("line " + std::to_string(index_line_number_) + ": Index line has " +
                 std::to_string(index_field_count_) + " entries for " +
                 std::to_string(sentence_.tokens.size()) + " tokens");

        parse_alignments();
        parse_doc_block();
        return std::move(sentence_);
    }

  private:
    void warn(const std::string &message) {
        warn_into(diag_, message);
        if (doc_warnings_ != nullptr) doc_warnings_->push_back(message);
    }

    void split_sections() {
        enum class Section { preamble, graph, align, doc };
        Section section = Section::preamble;
        for (const Line &line : lines_) {
            std::string_view text = trim(line.text);
            if (starts_with(text, "#")) {
                if (text == kGraphMarker) {
                    section = Section::graph;
                    continue;
                }
                if (text == kAlignMarker) {
                    section = Section::align;
                    continue;
                }
                if (text == kDocMarker) {
                    section = Section::doc;
                    continue;
                }
                if (int marker = parse_sentence_marker(text); marker > 0) {
                    if (sentence_.index != 0)
                        throw SyntaxError("second sentence marker in one block",
                                          {line.number, 1});
                    sentence_.index = marker;
                    continue;
                }
                if (auto id = parse_sent_id(text)) {
                    sentence_.sent_id = std::move(*id);
                    continue;
                }
                // Unrecognized metadata lines are preserved verbatim.
                sentence_.metadata.push_back(std::string(text));
                continue;
            }
            switch (section) {
            case Section::preamble:
                handle_preamble_line(line, text);
                break;
            case Section::graph:
                graph_text_ += line.text;
                graph_text_ += '\n';
                if (graph_first_line_ == 0) graph_first_line_ = line.number;
                break;
            case Section::align:
                collect_alignment_line(line, text);
                break;
            case Section::doc:
                doc_text_ += line.text;
                doc_text_ += '\n';
                if (doc_first_line_ == 0) doc_first_line_ = line.number;
                break;
            }
        }
        if (graph_first_line_ == 0) graph_first_line_ = lines_.front().number;
    }

    void handle_preamble_line(const Line &line, std::string_view text) {
        if (starts_with(text, "Index:")) {
            sentence_.had_index_line = true;
            index_field_count_ =
                static_cast<int>(split_whitespace(text.substr(6)).size());
            index_line_number_ = line.number;
            return;
        }
        std::string_view rest;
        if (starts_with(text, "Words:")) {
            rest = text.substr(6);
        } else if (starts_with(text, "Sentence:")) {
            rest = text.substr(9);
        } else {
            throw SyntaxError("unexpected line before sentence graph", {line.number, 1});
        }
        if (saw_words_) throw SyntaxError("duplicate token line", {line.number, 1});
        saw_words_ = true;
        sentence_.tokens = split_whitespace(rest);
    }

    void collect_alignment_line(const Line &line, std::string_view text) {
        std::size_t colon = text.find(':');
        if (colon == std::string_view::npos || colon == 0)
            throw SyntaxError("expected '<var>: <spans>' alignment line", {line.number, 1});
        AlignmentLine entry;
        entry.var = std::string(trim(text.substr(0, colon)));
        entry.spans = std::string(trim(text.substr(colon + 1)));
        entry.loc = {line.number, 1};
        alignment_lines_.push_back(std::move(entry));
    }

    void parse_alignments() {
        for (const AlignmentLine &entry : alignment_lines_) {
            if (sentence_.graph.nodes.count(entry.var) == 0)
                throw MisalignedIndex("alignment for unknown variable '" + entry.var + "'",
                                      entry.loc);
            if (sentence_.alignments.count(entry.var) > 0)
                throw DuplicateVariable("variable '" + entry.var +
                                            "' aligned twice in one block",
                                        entry.loc);
            sentence_.alignments.emplace(entry.var, parse_span_list(entry.spans, entry.loc));
        }
        // Nodes without an alignment line count as unaligned.
        for (const auto &[var, node] : sentence_.graph.nodes)
            sentence_.alignments.try_emplace(var);
    }

    AlignmentSpan parse_span_list(const std::string &spans, Location loc) {
        AlignmentSpan span;
        std::stringstream stream(spans);
        std::string part;
        while (std::getline(stream, part, ',')) {
            std::string_view range = trim(part);
            std::size_t dash = range.find('-');
            if (dash == std::string_view::npos || dash == 0 || dash + 1 >= range.size())
                throw SyntaxError("expected '<a>-<b>' alignment span", loc);
            int lo = parse_position(range.substr(0, dash), loc);
            int hi = parse_position(range.substr(dash + 1), loc);
            if (lo == 0 && hi == 0) continue; // 0-0 = unaligned
            if (lo == 0 || hi == 0 || lo > hi)
                throw MisalignedIndex("invalid alignment span '" + std::string(range) + "'",
                                      loc);
            if (hi > static_cast<int>(sentence_.tokens.size()))
                throw MisalignedIndex("alignment position " + std::to_string(hi) +
                                          " beyond last token",
                                      loc);
            for (int p = lo; p <= hi; ++p) span.positions.insert(p);
        }
        return span;
    }

    int parse_position(std::string_view digits, Location loc) {
        digits = trim(digits);
        if (digits.empty()) throw SyntaxError("empty alignment position", loc);
        int value = 0;
        for (char c : digits) {
            if (!is_digit(c)) throw SyntaxError("non-numeric alignment position", loc);
            value = value * 10 + (c - '0');
        }
        return value;
    }

    // Document-level annotation. Any structural surprise downgrades to a
    // warning and an empty triple list for this sentence.
    void parse_doc_block() {
        if (trim(doc_text_).empty()) return;
        try {
            sentence_.doc_triples = parse_doc_tree(doc_text_, doc_first_line_);
        } catch (const UmrError &error) {
            warn("sentence " + std::to_string(sentence_.index) +
                 ": skipping document-level annotation (" + error.what() + ")");
            sentence_.doc_triples.clear();
        }
    }

    static std::vector<DocTriple> parse_doc_tree(const std::string &text, int first_line) {
        std::vector<Token> tokens = lex_sexpr(text, first_line);
        std::vector<DocTriple> triples;
        std::size_t pos = 0;
        auto need = [&](TokKind kind, const char *what) -> const Token & {
            if (pos >= tokens.size())
                throw SyntaxError(std::string("unexpected end of document-level block; expected ") +
                                  what);
            const Token &tok = tokens[pos];
            if (tok.kind != kind) throw SyntaxError(std::string("expected ") + what, tok.loc);
            ++pos;
            return tok;
        };
        need(TokKind::lparen, "'('");
        need(TokKind::atom, "pseudo-node variable");
        const Token &slash = need(TokKind::atom, "'/'");
        if (slash.text != "/") throw SyntaxError("expected '/'", slash.loc);
        need(TokKind::atom, "'sentence'");
        while (pos < tokens.size() && tokens[pos].kind != TokKind::rparen) {
            const Token &label = need(TokKind::atom, "':temporal', ':coref' or ':modal'");
            DocFamily family;
            if (label.text == ":temporal") family = DocFamily::temporal;
            else if (label.text == ":coref") family = DocFamily::coref;
            else if (label.text == ":modal") family = DocFamily::modal;
            else throw SyntaxError("unknown document-level list '" + label.text + "'", label.loc);
            need(TokKind::lparen, "'('");
            while (pos < tokens.size() && tokens[pos].kind == TokKind::lparen) {
                ++pos;
                const Token &source = need(TokKind::atom, "triple source");
                const Token &relation = need(TokKind::atom, "triple relation");
                if (relation.text.size() < 2 || relation.text[0] != ':')
                    throw SyntaxError("expected ':relation'", relation.loc);
                const Token &target = need(TokKind::atom, "triple target");
                need(TokKind::rparen, "')'");
                triples.push_back(
                    {family, source.text, relation.text.substr(1), target.text});
            }
            need(TokKind::rparen, "')'");
        }
        need(TokKind::rparen, "')'");
        if (pos != tokens.size())
            throw SyntaxError("trailing content after document-level block", tokens[pos].loc);
        return triples;
    }

    const std::vector<Line> &lines_;
    Diagnostics *diag_;
    std::vector<std::string> *doc_warnings_;
    UmrSentence sentence_;
    bool saw_words_ = false;
    int index_field_count_ = -1;
    int index_line_number_ = 0;
    std::string graph_text_;
    int graph_first_line_ = 0;
    std::string doc_text_;
    int doc_first_line_ = 0;
    std::vector<AlignmentLine> alignment_lines_;
};

std::vector<Line> split_lines(const std::string &text) {
    std::vector<Line> lines;
    std::string current;
    int number = 1;
    for (char c : text) {
        if (c == '\n') {
            if (!current.empty() && current.back() == '\r') current.pop_back();
            lines.push_back({std::move(current), number});
            current.clear();
            ++number;
        } else {
            current += c;
        }
    }
    if (!current.empty()) {
        if (current.back() == '\r') current.pop_back();
        lines.push_back({std::move(current), number});
    }
    return lines;
}

} // namespace

bool looks_like_variable(std::string_view token) {
    // s<digits><letters><optional digits>, e.g. s23w, s1p0.
    std::size_t i = 0;
    if (i >= token.size() || token[i] != 's') return false;
    ++i;
    std::size_t digits = 0;
    while (i < token.size() && is_digit(token[i])) ++i, ++digits;
    if (digits == 0) return false;
    std::size_t letters = 0;
    while (i < token.size() && is_letter(token[i])) ++i, ++letters;
    if (letters == 0) return false;
    while (i < token.size() && is_digit(token[i])) ++i;
    return i == token.size();
}

NodeGraph parse_sentence_graph(const std::string &sexpr, int sentence_index) {
    return GraphParser(lex_sexpr(sexpr, 1), sentence_index).parse();
}

UmrDocument parse_document(const std::string &text, Diagnostics *diag) {
    std::string body = text;
    if (starts_with(body, "\xEF\xBB\xBF")) body.erase(0, 3); // UTF-8 BOM

    UmrDocument document;
    std::vector<Line> lines = split_lines(body);

    std::vector<std::vector<Line>> blocks;
    std::vector<Line> current;
    for (Line &line : lines) {
        if (trim(line.text).empty()) {
            if (!current.empty()) blocks.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(std::move(line));
        }
    }
    if (!current.empty()) blocks.push_back(std::move(current));
    if (blocks.empty()) throw SyntaxError("empty document");

    for (const std::vector<Line> &block : blocks) {
        UmrSentence sentence =
            SentenceBlockParser(block, diag, &document.warnings).parse();
        int expected = static_cast<int>(document.sentences.size()) + 1;
        if (sentence.index != expected)
            throw SyntaxError("expected sentence index " + std::to_string(expected) +
                                  ", found snt" + std::to_string(sentence.index),
                              {block.front().number, 1});
        document.sentences.push_back(std::move(sentence));
    }

    if (document.sentences.front().sent_id)
        document.doc_id = *document.sentences.front().sent_id;

    // Document-level endpoints may name variables of any sentence; anything
    // variable-shaped that is defined nowhere is dropped with a warning.
    for (UmrSentence &sentence : document.sentences) {
        auto bad = [&](const std::string &name) {
            return looks_like_variable(name) && !document.defines_variable(name);
        };
        std::vector<DocTriple> kept;
        for (DocTriple &triple : sentence.doc_triples) {
            if (bad(triple.source) || bad(triple.target)) {
                std::string message = "sentence " + std::to_string(sentence.index) +
                                      ": dropping document-level triple (" + triple.source +
                                      " :" + triple.label + " " + triple.target +
                                      "): undefined variable";
                warn_into(diag, message);
                document.warnings.push_back(message);
            } else {
                kept.push_back(std::move(triple));
            }
        }
        sentence.doc_triples = std::move(kept);
    }
    return document;
}

UmrDocument parse_document_file(const std::string &path, Diagnostics *diag) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) throw UmrError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    UmrDocument document = parse_document(buffer.str(), diag);
    document.source_path = path;
    return document;
}

} // namespace umr
