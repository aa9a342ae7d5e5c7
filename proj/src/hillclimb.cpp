#include "umr/hillclimb.hpp"

#include <algorithm>
#include <optional>

namespace umr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Minimal deterministic generator (xorshift*); avoids the implementation-
// defined behavior of the standard distributions so runs are reproducible
// across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed) | 1) {}

    std::uint64_t next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    // Uniform-enough index in [0, bound); bound is tiny here.
    std::size_t below(std::size_t bound) { return next() % bound; }

  private:
    std::uint64_t state_;
};

template <typename T>
void shuffle(std::vector<T> &values, Rng &rng) {
    for (std::size_t i = values.size(); i > 1; --i)
        std::swap(values[i - 1], values[rng.below(i)]);
}

std::vector<Triple> sorted(std::vector<Triple> triples) {
    std::sort(triples.begin(), triples.end());
    return triples;
}

int sorted_intersection_size(const std::vector<Triple> &a, const std::vector<Triple> &b) {
    int common = 0;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) {
            ++i;
        } else if (b[j] < a[i]) {
            ++j;
        } else {
            ++common;
            ++i;
            ++j;
        }
    }
    return common;
}

// Objective evaluator with the gold side pre-sorted once.
class Objective {
  public:
    Objective(const TripleSet &gold, const TripleSet &pred)
        : gold_concepts_(sorted(gold.concepts)), gold_attributes_(sorted(gold.attributes)),
          gold_relations_(sorted(gold.relations)), pred_(pred) {}

    int evaluate(const std::map<Var, Var> &pred_to_gold) const {
        std::vector<Triple> renamed;
        int total = 0;

        renamed.clear();
        for (const Triple &triple : pred_.concepts)
            if (auto it = pred_to_gold.find(triple.source); it != pred_to_gold.end())
                renamed.push_back({it->second, triple.label, triple.target});
        std::sort(renamed.begin(), renamed.end());
        total += sorted_intersection_size(gold_concepts_, renamed);

        renamed.clear();
        for (const Triple &triple : pred_.attributes)
            if (auto it = pred_to_gold.find(triple.source); it != pred_to_gold.end())
                renamed.push_back({it->second, triple.label, triple.target});
        std::sort(renamed.begin(), renamed.end());
        total += sorted_intersection_size(gold_attributes_, renamed);

        renamed.clear();
        for (const Triple &triple : pred_.relations) {
            auto src = pred_to_gold.find(triple.source);
            auto dst = pred_to_gold.find(triple.target);
            if (src != pred_to_gold.end() && dst != pred_to_gold.end())
                renamed.push_back({src->second, triple.label, dst->second});
        }
        std::sort(renamed.begin(), renamed.end());
        total += sorted_intersection_size(gold_relations_, renamed);

        return total;
    }

  private:
    std::vector<Triple> gold_concepts_;
    std::vector<Triple> gold_attributes_;
    std::vector<Triple> gold_relations_;
    const TripleSet &pred_;
};

struct Move {
    Var pred;
    Var gold;
};

class HillClimber {
  public:
    HillClimber(const UmrSentence &gold, const UmrSentence &pred, const SearchConfig &config)
        : config_(config), gold_norm_(normalize_inverse_relations(gold)),
          pred_norm_(normalize_inverse_relations(pred)),
          gold_triples_(extract_triples(gold_norm_.graph)),
          pred_triples_(extract_triples(pred_norm_.graph)),
          objective_(gold_triples_, pred_triples_) {
        for (const auto &[var, node] : gold_norm_.graph.nodes) gold_vars_.push_back(var);
        for (const auto &[var, node] : pred_norm_.graph.nodes) pred_vars_.push_back(var);
    }

    NodeMapping run() {
        std::map<Var, Var> best;
        int best_score = -1;
        for (int restart = 0; restart < config_.restarts; ++restart) {
            std::map<Var, Var> state =
                restart == 0 ? greedy_concept_init() : random_init(restart);
            climb(state);
            // Saturating can complete relation triples (both endpoints newly
            // mapped), so give the climb one more chance afterwards.
            saturate(state);
            int score = climb(state);
            if (score > best_score) {
                best_score = score;
                best = std::move(state);
            }
        }

        NodeMapping mapping;
        for (const auto &[pred_var, gold_var] : best) mapping.add_pair(gold_var, pred_var);
        for (const Var &var : gold_vars_)
            if (!mapping.pred_of(var)) mapping.unmapped_gold.insert(var);
        for (const Var &var : pred_vars_)
            if (!mapping.gold_of(var)) mapping.unmapped_pred.insert(var);
        return mapping;
    }

  private:
    std::map<Var, Var> greedy_concept_init() const {
        std::map<Var, Var> state;
        std::set<Var> gold_taken;
        for (const Var &pred_var : pred_vars_) {
            const std::string concept_name =
                enhance_name_concept(pred_norm_.graph.nodes.at(pred_var), pred_norm_.graph);
            for (const Var &gold_var : gold_vars_) {
                if (gold_taken.count(gold_var) > 0) continue;
                if (enhance_name_concept(gold_norm_.graph.nodes.at(gold_var),
                                         gold_norm_.graph) != concept_name)
                    continue;
                state[pred_var] = gold_var;
                gold_taken.insert(gold_var);
                break;
            }
        }
        return state;
    }

    std::map<Var, Var> random_init(int restart) const {
        Rng rng(splitmix64(config_.seed) ^ static_cast<std::uint64_t>(restart));
        std::map<Var, Var> state;
        if (pred_vars_.size() <= gold_vars_.size()) {
            std::vector<Var> targets = gold_vars_;
            shuffle(targets, rng);
            for (std::size_t i = 0; i < pred_vars_.size(); ++i)
                state[pred_vars_[i]] = targets[i];
        } else {
            std::vector<Var> sources = pred_vars_;
            shuffle(sources, rng);
            for (std::size_t i = 0; i < gold_vars_.size(); ++i)
                state[sources[i]] = gold_vars_[i];
        }
        return state;
    }

    // Applies `move` to a copy of `state`: reassign when the gold target is
    // free, otherwise swap partners with its current owner.
    std::map<Var, Var> apply_move(const std::map<Var, Var> &state, const Move &move) const {
        std::map<Var, Var> next = state;
        std::optional<Var> old_partner;
        if (auto it = next.find(move.pred); it != next.end()) old_partner = it->second;

        const Var *owner = nullptr;
        for (const auto &[pred_var, gold_var] : next)
            if (gold_var == move.gold && pred_var != move.pred) owner = &pred_var;

        if (owner != nullptr) {
            Var owner_var = *owner;
            if (old_partner)
                next[owner_var] = *old_partner;
            else
                next.erase(owner_var);
        }
        next[move.pred] = move.gold;
        return next;
    }

    int climb(std::map<Var, Var> &state) const {
        int current = objective_.evaluate(state);
        for (int iteration = 0; iteration < config_.max_iterations_per_restart; ++iteration) {
            int best_gain = 0;
            std::optional<Move> best_move;
            for (const Var &pred_var : pred_vars_) {
                for (const Var &gold_var : gold_vars_) {
                    auto it = state.find(pred_var);
                    if (it != state.end() && it->second == gold_var) continue;
                    Move move{pred_var, gold_var};
                    int gain = objective_.evaluate(apply_move(state, move)) - current;
                    if (gain > best_gain) {
                        best_gain = gain;
                        best_move = move;
                    }
                }
            }
            if (!best_move) break;
            state = apply_move(state, *best_move);
            current += best_gain;
        }
        return current;
    }

    // Pairs the remaining free variables in sorted order. At a local optimum
    // these additions cannot change the objective, but they bring the pair
    // count up to min(n_gold, n_pred).
    void saturate(std::map<Var, Var> &state) const {
        std::set<Var> gold_taken;
        for (const auto &[pred_var, gold_var] : state) gold_taken.insert(gold_var);
        auto next_free_gold = gold_vars_.begin();
        for (const Var &pred_var : pred_vars_) {
            if (state.count(pred_var) > 0) continue;
            while (next_free_gold != gold_vars_.end() && gold_taken.count(*next_free_gold) > 0)
                ++next_free_gold;
            if (next_free_gold == gold_vars_.end()) break;
            state[pred_var] = *next_free_gold;
            gold_taken.insert(*next_free_gold);
        }
    }

    SearchConfig config_;
    UmrSentence gold_norm_;
    UmrSentence pred_norm_;
    TripleSet gold_triples_;
    TripleSet pred_triples_;
    Objective objective_;
    std::vector<Var> gold_vars_; // sorted (std::map iteration order)
    std::vector<Var> pred_vars_;
};

} // namespace

int triple_match_count(const NodeMapping &mapping, const TripleSet &gold_triples,
                       const TripleSet &pred_triples) {
    return Objective(gold_triples, pred_triples).evaluate(mapping.pred_to_gold);
}

NodeMapping hill_climb_match(const UmrSentence &gold, const UmrSentence &pred,
                             const SearchConfig &config) {
    return HillClimber(gold, pred, config).run();
}

} // namespace umr
