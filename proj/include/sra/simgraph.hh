#ifndef SRARED_SIMGRAPH_HH
#define SRARED_SIMGRAPH_HH

#include "sra/automata.hh"

namespace sra {

using StatePair = std::pair<StateId, StateId>;

/// Pair graph of an automaton.  Vertices are ordered pairs of non-terminal
/// states (the diagonal included); an edge ((r1,r2),(s1,s2)) witnesses a pair
/// of equal-symbol transitions r1 -> s1 and r2 -> s2 that do not update the
/// register.  Only vertices with at least one successor carry an adjacency
/// entry; the vertex set itself is the full square of the interior states.
struct SelfProduct {
    std::vector<StateId> interior;                         // Q \ (I u F), sorted
    std::map<StatePair, std::vector<StatePair>> adjacency; // sorted successor lists

    bool has_vertex(StatePair v) const;
    bool has_edge(StatePair u, StatePair v) const;
    const std::vector<StatePair>* successors(StatePair u) const;
    std::size_t vertex_count() const { return interior.size() * interior.size(); }
    std::vector<std::pair<StatePair, StatePair>> edge_list() const;
};

SelfProduct self_product(const Sra& a);

/// Rooted linear similarity graph relating two disjoint sub-graphs.  Only the
/// spanning path is stored (path.front() is the root); the edge set is the
/// sub-graph induced on the path's vertices by the self-product.
struct SimilarityGraph {
    std::vector<StatePair> path;

    std::set<StateId> first_invocation() const;
    std::set<StateId> second_invocation() const;
    std::set<StateId> invocation_states() const;
};

enum class SimGraphViolation {
    Sg1Rooted,
    Sg2Bijection,
    Sg3EqualSignatures,
    Sg4DisjointSignatures,
    DisjointInvocations,
    Linearity,
    EdgeSubsetOfSelfProduct,
    VertexExcludesTerminals,
};

const char* to_string(SimGraphViolation v);

struct ValidationResult {
    std::vector<SimGraphViolation> violations;

    bool ok() const { return violations.empty(); }
    bool has(SimGraphViolation v) const;
    std::string describe() const;
};

/// Checks SG1-SG4 along with invocation disjointness, linearity of the
/// spanning path and the terminal exclusion.  Violations are data, not
/// errors.  Throws only when the graph mentions unknown state ids.
ValidationResult validate_simgraph(const Sra& a, const SimilarityGraph& g);

/// The six transition classes relative to a similarity graph; they partition
/// the automaton's transition set exactly.
struct TransitionPartition {
    std::set<SraTransition> entry;
    std::set<SraTransition> exit;
    std::set<SraTransition> common;
    std::set<SraTransition> unique;
    std::set<SraTransition> invocation_switch;
    std::set<SraTransition> untouched;
};

/// Throws std::invalid_argument when the graph does not validate.
TransitionPartition classify_transitions(const Sra& a, const SimilarityGraph& g);

/// Predicted transition-count decrease of merging the graph into a
/// procedure: |Common|/2 minus the symbol-expansion losses of unique and
/// exit transitions of the form */*.  May be negative.
std::int64_t gain(const Sra& a, const SimilarityGraph& g);

} // namespace sra

#endif
