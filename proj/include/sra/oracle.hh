#ifndef SRARED_ORACLE_HH
#define SRARED_ORACLE_HH

#include "sra/automata.hh"

namespace sra {

/// Verdict of an equivalence check between two automata.
struct EquivalenceResult {
    enum class Kind { Equal, Counterexample, CapExceeded };

    Kind kind = Kind::Equal;
    Word counterexample; // shortest witness, lexicographic tie-break

    bool equal() const { return kind == Kind::Equal; }
    bool inconclusive() const { return kind == Kind::CapExceeded; }
};

/// Compares acceptance verdicts of all words up to max_len via a parallel
/// breadth-first search over pairs of configuration sets; no word list is
/// materialized.  The search also terminates early (with a conclusive Equal)
/// when the joint state space is exhausted before the bound.  Counterexample
/// symbols are ids of x's alphabet.  Throws std::invalid_argument when the
/// alphabets differ as name sets.
EquivalenceResult equivalent_bounded(const Sra& x, const Sra& y, std::size_t max_len);

/// Default bound for the bounded oracle:
/// 2 * (reachable configuration count of the larger automaton) + 2.
std::size_t default_bound(const Sra& x, const Sra& y);

/// Exact equivalence: determinizes both induced NFAs by subset construction
/// and searches the product for a distinguishing state.  CapExceeded when
/// either determinization needs more than config_cap subsets.
EquivalenceResult equivalent_exact(const Sra& x, const Sra& y, std::size_t config_cap);

struct SizeMetrics {
    std::size_t states = 0;
    std::size_t transitions = 0;
    std::size_t registers = 0;
    std::size_t states_plus_registers = 0;
    std::size_t register_using_transitions = 0; // anything except _/_ and */*
    std::size_t bit_cost = 0; // 72 bits per register-free transition, 80 otherwise
};

SizeMetrics metrics(const Sra& a);

/// State sets of the procedures derivable from the signature map: for every
/// distinct nonempty signature I, the set { q | I is a subset of Sig(q) }.
std::vector<std::set<StateId>> procedure_state_sets(const Sra& a);

/// Well nested: every two procedure state sets are disjoint or one contains
/// the other.
bool procedures_well_nested(const Sra& a);

} // namespace sra

#endif
