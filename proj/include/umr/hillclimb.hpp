#ifndef UMR_HILLCLIMB_HPP
#define UMR_HILLCLIMB_HPP

#include <cstdint>

#include "umr/match.hpp"
#include "umr/triples.hpp"

namespace umr {

// Search parameters for the smatch-style baseline. Restart 0 starts from a
// greedy concept-match assignment, the rest from seeded random injections,
// so results are reproducible for a fixed seed.
struct SearchConfig {
    int restarts = 4;
    std::uint64_t seed = 0;
    int max_iterations_per_restart = 1000;
};

// Number of sentence-level triples (concepts, attributes, relations) that
// are equal once predicted variables are renamed to their mapped gold
// partners. Triples mentioning an unmapped variable never match.
int triple_match_count(const NodeMapping &mapping, const TripleSet &gold_triples,
                       const TripleSet &pred_triples);

// Hill-climbing search for the mapping that maximizes triple_match_count,
// ignoring word alignments entirely. Accepts only strict improvements
// (single reassignments or partner swaps), then saturates the mapping to
// min(n_gold, n_pred) pairs. Deterministic for a fixed config.
NodeMapping hill_climb_match(const UmrSentence &gold, const UmrSentence &pred,
                             const SearchConfig &config = {});

} // namespace umr

#endif
