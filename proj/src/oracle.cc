#include "sra/oracle.hh"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace sra {

namespace {

/// Maps every symbol id of y to the id of the same-named symbol in x.
/// Throws when the alphabets differ as name sets.
std::vector<SymbolId> align_alphabets(const Sra& x, const Sra& y) {
    if (x.alphabet_size() != y.alphabet_size())
        throw std::invalid_argument("alphabet mismatch");
    std::vector<SymbolId> y_to_x(y.alphabet_size());
    for (SymbolId sy = 0; sy < y.alphabet_size(); ++sy) {
        auto sx = x.symbol_table.find(y.symbol_name(sy));
        if (!sx)
            throw std::invalid_argument("alphabet mismatch: symbol " + y.symbol_name(sy));
        y_to_x[sy] = *sx;
    }
    return y_to_x;
}

using ConfigSet = std::vector<Configuration>; // sorted, unique

struct SraStepper {
    std::map<StateId, std::vector<const SraTransition*>> by_src;
    const std::set<StateId>* finals;

    explicit SraStepper(const Sra& a) : finals(&a.final_states) {
        for (const auto& t : a.transitions)
            by_src[t.src].push_back(&t);
    }

    ConfigSet step(const ConfigSet& confs, SymbolId sym) const {
        std::set<Configuration> next;
        for (const Configuration& c : confs) {
            auto it = by_src.find(c.state);
            if (it == by_src.end())
                continue;
            for (const SraTransition* t : it->second) {
                if (t->sym != sym)
                    continue;
                if (t->test.is_star())
                    next.insert({t->dst, c.reg});
                else if (t->test == c.reg)
                    next.insert({t->dst, t->set});
            }
        }
        return {next.begin(), next.end()};
    }

    bool accepting(const ConfigSet& confs) const {
        return std::ranges::any_of(confs,
                                   [&](const Configuration& c) { return finals->contains(c.state); });
    }
};

} // namespace

EquivalenceResult equivalent_bounded(const Sra& x, const Sra& y, std::size_t max_len) {
    auto y_to_x = align_alphabets(x, y);
    std::vector<SymbolId> x_to_y(x.alphabet_size());
    for (SymbolId sy = 0; sy < y_to_x.size(); ++sy)
        x_to_y[y_to_x[sy]] = sy;

    SraStepper sx(x), sy(y);
    ConfigSet start_x, start_y;
    for (StateId s : x.initial)
        start_x.push_back({s, RegToken::bot()});
    for (StateId s : y.initial)
        start_y.push_back({s, RegToken::bot()});

    struct Node {
        ConfigSet cx, cy;
        Word word;
    };
    std::set<std::pair<ConfigSet, ConfigSet>> visited;
    std::deque<Node> queue;
    visited.insert({start_x, start_y});
    queue.push_back({std::move(start_x), std::move(start_y), {}});

    while (!queue.empty()) {
        Node node = std::move(queue.front());
        queue.pop_front();
        if (sx.accepting(node.cx) != sy.accepting(node.cy))
            return {EquivalenceResult::Kind::Counterexample, node.word};
        if (node.word.size() >= max_len)
            continue;
        for (SymbolId sym = 0; sym < x.alphabet_size(); ++sym) {
            ConfigSet nx = sx.step(node.cx, sym);
            ConfigSet ny = sy.step(node.cy, x_to_y[sym]);
            if (visited.insert({nx, ny}).second) {
                Word w = node.word;
                w.push_back(sym);
                queue.push_back({std::move(nx), std::move(ny), std::move(w)});
            }
        }
    }
    return {EquivalenceResult::Kind::Equal, {}};
}

std::size_t default_bound(const Sra& x, const Sra& y) {
    return 2 * std::max(reach(x).size(), reach(y).size()) + 2;
}

namespace {

/// Total DFA over a dense state space; state 0 is reserved for nothing in
/// particular, the empty subset becomes an ordinary sink.
struct Dfa {
    std::size_t num_symbols = 0;
    std::vector<std::uint32_t> trans; // state * num_symbols + symbol
    std::vector<char> accept;
    std::uint32_t start = 0;

    std::size_t size() const { return accept.size(); }
};

/// Subset construction over the induced NFA; nullopt when more than cap
/// subsets would be needed.
std::optional<Dfa> determinize(const Nfa& n, std::size_t cap) {
    std::map<StateId, std::vector<const NfaTransition*>> by_src;
    for (const auto& t : n.transitions)
        by_src[t.src].push_back(&t);

    using Subset = std::vector<StateId>;
    std::map<Subset, std::uint32_t> ids;
    std::deque<Subset> queue;
    Dfa dfa;
    dfa.num_symbols = n.alphabet_size();

    auto intern = [&](const Subset& s) -> std::optional<std::uint32_t> {
        auto it = ids.find(s);
        if (it != ids.end())
            return it->second;
        if (ids.size() >= cap)
            return std::nullopt;
        auto id = static_cast<std::uint32_t>(ids.size());
        ids.emplace(s, id);
        dfa.accept.push_back(std::ranges::any_of(
            s, [&](StateId q) { return n.final_states.contains(q); }));
        queue.push_back(s);
        return id;
    };

    Subset start(n.initial.begin(), n.initial.end());
    auto start_id = intern(start);
    if (!start_id)
        return std::nullopt;
    dfa.start = *start_id;

    while (!queue.empty()) {
        Subset subset = std::move(queue.front());
        queue.pop_front();
        std::uint32_t id = ids.at(subset);
        if (dfa.trans.size() < (id + 1) * dfa.num_symbols)
            dfa.trans.resize((id + 1) * dfa.num_symbols, 0);
        for (SymbolId sym = 0; sym < dfa.num_symbols; ++sym) {
            std::set<StateId> next;
            for (StateId q : subset) {
                auto it = by_src.find(q);
                if (it == by_src.end())
                    continue;
                for (const NfaTransition* t : it->second)
                    if (t->sym == sym)
                        next.insert(t->dst);
            }
            auto next_id = intern(Subset(next.begin(), next.end()));
            if (!next_id)
                return std::nullopt;
            if (dfa.trans.size() < (id + 1) * dfa.num_symbols)
                dfa.trans.resize((id + 1) * dfa.num_symbols, 0);
            dfa.trans[id * dfa.num_symbols + sym] = *next_id;
        }
    }
    dfa.trans.resize(ids.size() * dfa.num_symbols, 0);
    return dfa;
}

} // namespace

EquivalenceResult equivalent_exact(const Sra& x, const Sra& y, std::size_t config_cap) {
    auto y_to_x = align_alphabets(x, y);
    std::vector<SymbolId> x_to_y(x.alphabet_size());
    for (SymbolId sy = 0; sy < y_to_x.size(); ++sy)
        x_to_y[y_to_x[sy]] = sy;

    auto dx = determinize(induced_nfa(x), config_cap);
    auto dy = determinize(induced_nfa(y), config_cap);
    if (!dx || !dy)
        return {EquivalenceResult::Kind::CapExceeded, {}};

    using Pair = std::pair<std::uint32_t, std::uint32_t>;
    std::map<Pair, std::pair<Pair, SymbolId>> parent;
    std::deque<Pair> queue;
    Pair start{dx->start, dy->start};
    std::set<Pair> visited{start};
    queue.push_back(start);

    auto witness = [&](Pair node) {
        Word w;
        while (node != start) {
            auto [prev, sym] = parent.at(node);
            w.push_back(sym);
            node = prev;
        }
        std::ranges::reverse(w);
        return w;
    };

    while (!queue.empty()) {
        Pair node = queue.front();
        queue.pop_front();
        if (dx->accept[node.first] != dy->accept[node.second])
            return {EquivalenceResult::Kind::Counterexample, witness(node)};
        for (SymbolId sym = 0; sym < x.alphabet_size(); ++sym) {
            Pair next{dx->trans[node.first * dx->num_symbols + sym],
                      dy->trans[node.second * dy->num_symbols + x_to_y[sym]]};
            if (visited.insert(next).second) {
                parent.emplace(next, std::make_pair(node, sym));
                queue.push_back(next);
            }
        }
    }
    return {EquivalenceResult::Kind::Equal, {}};
}

SizeMetrics metrics(const Sra& a) {
    SizeMetrics m;
    m.states = a.states.size();
    m.transitions = a.transitions.size();
    m.registers = a.registers.size();
    m.states_plus_registers = m.states + m.registers;
    for (const auto& t : a.transitions)
        if (t.uses_register())
            ++m.register_using_transitions;
    m.bit_cost = 80 * m.register_using_transitions +
                 72 * (m.transitions - m.register_using_transitions);
    return m;
}

std::vector<std::set<StateId>> procedure_state_sets(const Sra& a) {
    SignatureMap sig = signatures(a);
    std::set<std::set<RegSymbol>> distinct;
    for (const auto& [state, s] : sig)
        if (!s.empty())
            distinct.insert(s);

    std::vector<std::set<StateId>> sets;
    for (const auto& proc_sig : distinct) {
        std::set<StateId> members;
        for (const auto& [state, s] : sig)
            if (std::ranges::includes(s, proc_sig))
                members.insert(state);
        sets.push_back(std::move(members));
    }
    return sets;
}

bool procedures_well_nested(const Sra& a) {
    auto sets = procedure_state_sets(a);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const auto& p = sets[i];
            const auto& q = sets[j];
            bool p_in_q = std::ranges::includes(q, p);
            bool q_in_p = std::ranges::includes(p, q);
            if (p_in_q || q_in_p)
                continue;
            bool disjoint = std::ranges::none_of(p, [&](StateId s) { return q.contains(s); });
            if (!disjoint)
                return false;
        }
    }
    return true;
}

} // namespace sra
