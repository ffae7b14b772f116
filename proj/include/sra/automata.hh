#ifndef SRARED_AUTOMATA_HH
#define SRARED_AUTOMATA_HH

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace sra {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;
using RegSymbol = std::uint32_t;
using Word = std::vector<SymbolId>;

/// Register operand of an SRA transition: a concrete register symbol, the
/// default value (printed `_`) or the wildcard (printed `*`).  The two
/// reserved values are never members of the register alphabet.
class RegToken {
public:
    constexpr RegToken() = default;

    static constexpr RegToken bot() { return RegToken{kBot}; }
    static constexpr RegToken star() { return RegToken{kStar}; }
    static constexpr RegToken sym(RegSymbol s) { return RegToken{static_cast<std::int64_t>(s)}; }

    constexpr bool is_bot() const { return raw_ == kBot; }
    constexpr bool is_star() const { return raw_ == kStar; }
    constexpr bool is_sym() const { return raw_ >= 0; }

    /// Concrete register symbol; only meaningful when is_sym().
    constexpr RegSymbol sym_value() const { return static_cast<RegSymbol>(raw_); }

    auto operator<=>(const RegToken&) const = default;

private:
    static constexpr std::int64_t kBot = -2;
    static constexpr std::int64_t kStar = -1;

    constexpr explicit RegToken(std::int64_t raw) : raw_(raw) {}

    std::int64_t raw_ = kBot;
};

struct NfaTransition {
    StateId src;
    SymbolId sym;
    StateId dst;

    auto operator<=>(const NfaTransition&) const = default;
};

struct SraTransition {
    StateId src;
    SymbolId sym;
    RegToken test;
    RegToken set;
    StateId dst;

    auto operator<=>(const SraTransition&) const = default;

    /// True when the transition does not update the register, i.e. it is of
    /// the form _/_ or */*.
    bool is_non_updating() const {
        return (test.is_bot() && set.is_bot()) || (test.is_star() && set.is_star());
    }

    /// True when the register plays a role: anything except _/_ and */*.
    bool uses_register() const { return !is_non_updating(); }
};

/// Runtime unit of an SRA: a state together with the register content.
/// The register holds a concrete symbol or the default value, never `*`.
struct Configuration {
    StateId state;
    RegToken reg;

    auto operator<=>(const Configuration&) const = default;
};

/// Interning table mapping dense ids to unique printable names.
class NameTable {
public:
    std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }
    const std::string& name(std::uint32_t id) const { return names_.at(id); }
    std::optional<std::uint32_t> find(const std::string& name) const;

    /// Returns the id for `name`, creating it if unseen.
    std::uint32_t intern(const std::string& name);

    /// Adds a fresh entry; the requested name gets a `'` suffix on clashes.
    std::uint32_t add_unique(std::string name);

    auto operator<=>(const NameTable&) const = default;

private:
    std::vector<std::string> names_;
    std::map<std::string, std::uint32_t> index_;
};

/// Classic 5-tuple nondeterministic finite automaton.  State and symbol ids
/// are dense at construction time; removed states leave holes.
struct Nfa {
    std::string name = "a";
    std::set<StateId> states;
    std::set<NfaTransition> transitions;
    std::set<StateId> initial;
    std::set<StateId> final_states;
    NameTable state_table;
    NameTable symbol_table;

    StateId add_state(std::string state_name = {});
    SymbolId intern_symbol(const std::string& symbol_name);
    void add_transition(StateId src, SymbolId sym, StateId dst);

    const std::string& state_name(StateId s) const { return state_table.name(s); }
    const std::string& symbol_name(SymbolId s) const { return symbol_table.name(s); }
    std::size_t alphabet_size() const { return symbol_table.size(); }

    bool operator==(const Nfa&) const = default;
};

/// Single-finite-register automaton: an NFA whose transitions additionally
/// test and set one register over a finite alphabet plus `_` and `*`.
struct Sra {
    std::string name = "a";
    std::set<StateId> states;
    std::set<RegSymbol> registers;
    std::set<SraTransition> transitions;
    std::set<StateId> initial;
    std::set<StateId> final_states;
    NameTable state_table;
    NameTable symbol_table;
    /// Diagnostic provenance: procedure state -> the pair of states it merged.
    std::map<StateId, std::pair<StateId, StateId>> merged_from;

    StateId add_state(std::string state_name = {});
    SymbolId intern_symbol(const std::string& symbol_name);

    /// Adds a transition after validating endpoints, the input symbol, the
    /// register operands, and the `*` pairing rule (`*` only appears as */*).
    void add_transition(StateId src, SymbolId sym, RegToken test, RegToken set, StateId dst);

    /// Smallest non-negative integer not yet in the register alphabet;
    /// the symbol is added to the alphabet before returning.
    RegSymbol new_id_symbol();

    bool is_terminal(StateId s) const { return initial.contains(s) || final_states.contains(s); }
    std::size_t terminal_count() const;

    const std::string& state_name(StateId s) const { return state_table.name(s); }
    const std::string& symbol_name(SymbolId s) const { return symbol_table.name(s); }
    std::size_t alphabet_size() const { return symbol_table.size(); }

    bool operator==(const Sra& other) const;
};

using SignatureMap = std::map<StateId, std::set<RegSymbol>>;

/// Language-equivalent SRA that does not use the register: every NFA
/// transition becomes src --sym,_/_--> dst.
Sra lift_nfa(const Nfa& n);

/// Equivalent NFA with fresh initial state i and final state f so that
/// |I u F| <= 2; i is also final exactly when the empty word is accepted.
Nfa normalize_terminals(const Nfa& n);

/// Same construction on an SRA; copied transitions keep their register ops.
Sra normalize_terminals(const Sra& a);

/// Exact forward-reachable configuration set from I x {_}.
std::set<Configuration> reach(const Sra& a);

/// Sig(q) = set of concrete register symbols v with (q, v) reachable.
/// Every state of the automaton is present as a key.
SignatureMap signatures(const Sra& a);

/// NFA over the reachable configurations defining the SRA's language.
Nfa induced_nfa(const Sra& a);

/// Subset simulation over configurations.  Throws std::out_of_range when a
/// word symbol is not part of the alphabet (distinct from rejection).
bool accepts(const Sra& a, std::span<const SymbolId> word);

bool accepts(const Nfa& n, std::span<const SymbolId> word);

} // namespace sra

#endif
