#include "sra/automata.hh"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sra {

std::optional<std::uint32_t> NameTable::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::uint32_t NameTable::intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end())
        return it->second;
    auto id = static_cast<std::uint32_t>(names_.size());
    names_.push_back(name);
    index_.emplace(name, id);
    return id;
}

std::uint32_t NameTable::add_unique(std::string name) {
    while (index_.contains(name))
        name += '\'';
    auto id = static_cast<std::uint32_t>(names_.size());
    names_.push_back(name);
    index_.emplace(std::move(name), id);
    return id;
}

StateId Nfa::add_state(std::string state_name) {
    auto id = state_table.size();
    if (state_name.empty())
        state_name = "q" + std::to_string(id);
    StateId s = state_table.add_unique(std::move(state_name));
    states.insert(s);
    return s;
}

SymbolId Nfa::intern_symbol(const std::string& symbol_name) {
    return symbol_table.intern(symbol_name);
}

void Nfa::add_transition(StateId src, SymbolId sym, StateId dst) {
    if (!states.contains(src) || !states.contains(dst))
        throw std::invalid_argument("nfa transition endpoint is not a state");
    if (sym >= symbol_table.size())
        throw std::invalid_argument("nfa transition symbol is not in the alphabet");
    transitions.insert({src, sym, dst});
}

StateId Sra::add_state(std::string state_name) {
    auto id = state_table.size();
    if (state_name.empty())
        state_name = "q" + std::to_string(id);
    StateId s = state_table.add_unique(std::move(state_name));
    states.insert(s);
    return s;
}

SymbolId Sra::intern_symbol(const std::string& symbol_name) {
    return symbol_table.intern(symbol_name);
}

void Sra::add_transition(StateId src, SymbolId sym, RegToken test, RegToken set, StateId dst) {
    if (!states.contains(src) || !states.contains(dst))
        throw std::invalid_argument("sra transition endpoint is not a state");
    if (sym >= symbol_table.size())
        throw std::invalid_argument("sra transition symbol is not in the alphabet");
    if (test.is_star() != set.is_star())
        throw std::invalid_argument("wildcard register operands must come in matched */* pairs");
    if (test.is_sym() && !registers.contains(test.sym_value()))
        throw std::invalid_argument("test symbol is not in the register alphabet");
    if (set.is_sym() && !registers.contains(set.sym_value()))
        throw std::invalid_argument("set symbol is not in the register alphabet");
    transitions.insert({src, sym, test, set, dst});
}

RegSymbol Sra::new_id_symbol() {
    RegSymbol candidate = 0;
    for (RegSymbol used : registers) {
        if (used != candidate)
            break;
        ++candidate;
    }
    registers.insert(candidate);
    return candidate;
}

std::size_t Sra::terminal_count() const {
    std::set<StateId> both = initial;
    both.insert(final_states.begin(), final_states.end());
    return both.size();
}

bool Sra::operator==(const Sra& other) const {
    return name == other.name && states == other.states && registers == other.registers &&
           transitions == other.transitions && initial == other.initial &&
           final_states == other.final_states && state_table == other.state_table &&
           symbol_table == other.symbol_table;
}

Sra lift_nfa(const Nfa& n) {
    Sra out;
    out.name = n.name;
    out.states = n.states;
    out.initial = n.initial;
    out.final_states = n.final_states;
    out.state_table = n.state_table;
    out.symbol_table = n.symbol_table;
    for (const auto& t : n.transitions)
        out.transitions.insert({t.src, t.sym, RegToken::bot(), RegToken::bot(), t.dst});
    return out;
}

Nfa normalize_terminals(const Nfa& n) {
    Nfa out = n;
    bool epsilon = false;
    for (StateId s : n.initial)
        epsilon = epsilon || n.final_states.contains(s);

    StateId fresh_initial = out.add_state("i");
    StateId fresh_final = out.add_state("f");
    for (const auto& t : n.transitions) {
        if (n.initial.contains(t.src))
            out.transitions.insert({fresh_initial, t.sym, t.dst});
        if (n.final_states.contains(t.dst))
            out.transitions.insert({t.src, t.sym, fresh_final});
        if (n.initial.contains(t.src) && n.final_states.contains(t.dst))
            out.transitions.insert({fresh_initial, t.sym, fresh_final});
    }
    out.initial = {fresh_initial};
    out.final_states = {fresh_final};
    if (epsilon)
        out.final_states.insert(fresh_initial);
    return out;
}

Sra normalize_terminals(const Sra& a) {
    Sra out = a;
    bool epsilon = false;
    for (StateId s : a.initial)
        epsilon = epsilon || a.final_states.contains(s);

    StateId fresh_initial = out.add_state("i");
    StateId fresh_final = out.add_state("f");
    for (const auto& t : a.transitions) {
        if (a.initial.contains(t.src))
            out.transitions.insert({fresh_initial, t.sym, t.test, t.set, t.dst});
        if (a.final_states.contains(t.dst))
            out.transitions.insert({t.src, t.sym, t.test, t.set, fresh_final});
        if (a.initial.contains(t.src) && a.final_states.contains(t.dst))
            out.transitions.insert({fresh_initial, t.sym, t.test, t.set, fresh_final});
    }
    out.initial = {fresh_initial};
    out.final_states = {fresh_final};
    if (epsilon)
        out.final_states.insert(fresh_initial);
    return out;
}

namespace {

std::map<StateId, std::vector<const SraTransition*>> index_by_source(const Sra& a) {
    std::map<StateId, std::vector<const SraTransition*>> by_src;
    for (const auto& t : a.transitions)
        by_src[t.src].push_back(&t);
    return by_src;
}

/// Successor configurations of (q, v) over one input symbol.
void step(const std::vector<const SraTransition*>& outgoing, const Configuration& conf,
          SymbolId sym, std::set<Configuration>& out) {
    for (const SraTransition* t : outgoing) {
        if (t->sym != sym)
            continue;
        if (t->test.is_star())
            out.insert({t->dst, conf.reg});
        else if (t->test == conf.reg)
            out.insert({t->dst, t->set});
    }
}

} // namespace

std::set<Configuration> reach(const Sra& a) {
    auto by_src = index_by_source(a);
    std::set<Configuration> seen;
    std::deque<Configuration> queue;
    for (StateId s : a.initial) {
        Configuration c{s, RegToken::bot()};
        if (seen.insert(c).second)
            queue.push_back(c);
    }
    while (!queue.empty()) {
        Configuration conf = queue.front();
        queue.pop_front();
        auto it = by_src.find(conf.state);
        if (it == by_src.end())
            continue;
        for (const SraTransition* t : it->second) {
            std::optional<Configuration> succ;
            if (t->test.is_star())
                succ = Configuration{t->dst, conf.reg};
            else if (t->test == conf.reg)
                succ = Configuration{t->dst, t->set};
            if (succ && seen.insert(*succ).second)
                queue.push_back(*succ);
        }
    }
    return seen;
}

SignatureMap signatures(const Sra& a) {
    SignatureMap sig;
    for (StateId s : a.states)
        sig[s];
    for (const Configuration& c : reach(a))
        if (c.reg.is_sym())
            sig[c.state].insert(c.reg.sym_value());
    return sig;
}

Nfa induced_nfa(const Sra& a) {
    auto confs = reach(a);
    Nfa out;
    out.name = a.name;
    out.symbol_table = a.symbol_table;

    std::map<Configuration, StateId> ids;
    for (const Configuration& c : confs) {
        std::string reg = c.reg.is_bot() ? "_" : std::to_string(c.reg.sym_value());
        ids[c] = out.add_state(a.state_name(c.state) + "@" + reg);
    }
    for (StateId s : a.initial) {
        Configuration c{s, RegToken::bot()};
        if (ids.contains(c))
            out.initial.insert(ids.at(c));
    }
    for (const Configuration& c : confs)
        if (a.final_states.contains(c.state))
            out.final_states.insert(ids.at(c));

    auto by_src = index_by_source(a);
    for (const Configuration& c : confs) {
        auto it = by_src.find(c.state);
        if (it == by_src.end())
            continue;
        for (const SraTransition* t : it->second) {
            std::optional<Configuration> succ;
            if (t->test.is_star())
                succ = Configuration{t->dst, c.reg};
            else if (t->test == c.reg)
                succ = Configuration{t->dst, t->set};
            if (succ)
                out.transitions.insert({ids.at(c), t->sym, ids.at(*succ)});
        }
    }
    return out;
}

bool accepts(const Sra& a, std::span<const SymbolId> word) {
    for (SymbolId s : word)
        if (s >= a.symbol_table.size())
            throw std::out_of_range("word symbol is not in the alphabet");

    auto by_src = index_by_source(a);
    std::set<Configuration> current;
    for (StateId s : a.initial)
        current.insert({s, RegToken::bot()});

    for (SymbolId sym : word) {
        std::set<Configuration> next;
        for (const Configuration& c : current) {
            auto it = by_src.find(c.state);
            if (it != by_src.end())
                step(it->second, c, sym, next);
        }
        current = std::move(next);
        if (current.empty())
            return false;
    }
    return std::ranges::any_of(current, [&](const Configuration& c) {
        return a.final_states.contains(c.state);
    });
}

bool accepts(const Nfa& n, std::span<const SymbolId> word) {
    for (SymbolId s : word)
        if (s >= n.symbol_table.size())
            throw std::out_of_range("word symbol is not in the alphabet");

    std::map<StateId, std::vector<const NfaTransition*>> by_src;
    for (const auto& t : n.transitions)
        by_src[t.src].push_back(&t);

    std::set<StateId> current = n.initial;
    for (SymbolId sym : word) {
        std::set<StateId> next;
        for (StateId s : current) {
            auto it = by_src.find(s);
            if (it == by_src.end())
                continue;
            for (const NfaTransition* t : it->second)
                if (t->sym == sym)
                    next.insert(t->dst);
        }
        current = std::move(next);
        if (current.empty())
            return false;
    }
    return std::ranges::any_of(current, [&](StateId s) { return n.final_states.contains(s); });
}

} // namespace sra
