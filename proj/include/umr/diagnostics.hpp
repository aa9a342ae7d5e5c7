#ifndef UMR_DIAGNOSTICS_HPP
#define UMR_DIAGNOSTICS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace umr {

// Position in an input file, 1-based. line == 0 means "unknown".
struct Location {
    int line = 0;
    int column = 0;
};

inline std::string to_string(const Location &loc) {
    return "line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column);
}

// Base class for all errors raised while reading UMR files.
class UmrError : public std::runtime_error {
  public:
    UmrError(const std::string &what, Location loc = {})
        : std::runtime_error(loc.line > 0 ? what + " at " + to_string(loc) : what), loc_(loc) {}

    const Location &where() const { return loc_; }

  private:
    Location loc_;
};

// Malformed input text (bad token, unbalanced parentheses, missing section).
class SyntaxError : public UmrError {
  public:
    using UmrError::UmrError;
};

// A bare token that looks like a variable but is never defined.
class DanglingVariable : public UmrError {
  public:
    using UmrError::UmrError;
};

// A variable defined twice in one graph, or aligned twice in one block.
class DuplicateVariable : public UmrError {
  public:
    using UmrError::UmrError;
};

// An alignment entry that does not fit the sentence: unknown variable or
// token position outside 1..len(tokens).
class MisalignedIndex : public UmrError {
  public:
    using UmrError::UmrError;
};

// Gold and predicted documents with different numbers of sentences.
class SentenceCountMismatch : public UmrError {
  public:
    using UmrError::UmrError;
};

// Collects non-fatal warnings (token mismatches, index-line mismatches,
// skipped document-level content). May be null wherever accepted.
struct Diagnostics {
    std::vector<std::string> warnings;

    void warn(std::string message) { warnings.push_back(std::move(message)); }
};

inline void warn_into(Diagnostics *diag, std::string message) {
    if (diag != nullptr) diag->warn(std::move(message));
}

} // namespace umr

#endif
