#include "ssatc/mdp.hpp"

#include "ssatc/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ssatc {

uint32_t Mdp::state_id(const std::string& name) const {
    for (uint32_t i = 0; i < states.size(); ++i)
        if (states[i] == name) return i;
    throw Error(Errc::UnknownState, "unknown state '" + name + "'");
}

uint32_t Mdp::action_id(const std::string& name) const {
    for (uint32_t i = 0; i < actions.size(); ++i)
        if (actions[i] == name) return i;
    throw Error(Errc::UnknownState, "unknown action '" + name + "'");
}

std::vector<uint32_t> Mdp::available_actions(uint32_t s) const {
    std::vector<uint32_t> out;
    for (uint32_t a = 0; a < actions.size(); ++a)
        if (action_available(s, a)) out.push_back(a);
    return out;
}

Rational Mdp::prob(uint32_t s, uint32_t a, uint32_t t) const {
    for (const auto& [succ, p] : trans[s][a])
        if (succ == t) return p;
    return Rational::zero();
}

void Mdp::validate() const {
    if (states.empty()) throw Error(Errc::ParseError, "MDP has no states");
    if (actions.empty()) throw Error(Errc::ParseError, "MDP has no actions");
    if (init >= states.size()) throw Error(Errc::UnknownState, "init state out of range");
    for (uint32_t s = 0; s < states.size(); ++s) {
        if (available_actions(s).empty())
            throw Error(Errc::ParseError, "state '" + states[s] + "' has no available action");
        for (uint32_t a = 0; a < actions.size(); ++a) {
            if (trans[s][a].empty()) continue;
            Rational sum;
            std::set<uint32_t> seen;
            for (const auto& [succ, p] : trans[s][a]) {
                if (succ >= states.size()) throw Error(Errc::UnknownState, "successor out of range");
                if (!seen.insert(succ).second)
                    throw Error(Errc::ParseError, "duplicate successor '" + states[succ] + "' for (" +
                                                      states[s] + "," + actions[a] + ")");
                if (p <= Rational::zero() || p > Rational::one())
                    throw Error(Errc::ParseError, "transition probability " + p.to_string() +
                                                      " outside (0,1] for (" + states[s] + "," + actions[a] + ")");
                sum += p;
            }
            if (!(sum == Rational::one()))
                throw Error(Errc::DistributionSumError, "(" + states[s] + "," + actions[a] +
                                                            ") distribution sums to " + sum.to_string());
        }
    }
    auto check_set = [&](const std::optional<StateSet>& set, const char* what) {
        if (!set) return;
        for (uint32_t s : *set)
            if (s >= states.size())
                throw Error(Errc::UnknownState, std::string(what) + " state out of range");
    };
    check_set(target, "target");
    check_set(region, "region");
}

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw Error(Errc::ParseError, "line " + std::to_string(line) + ": " + msg);
}

} // namespace

Mdp parse_mdp(std::istream& in) {
    Mdp m;
    std::string line;
    int lineno = 0;
    bool have_states = false, have_init = false, have_actions = false;
    std::vector<std::tuple<std::string, std::string, std::string, std::string, int>> trans_rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "states") {
            std::string s;
            while (ls >> s) {
                if (std::find(m.states.begin(), m.states.end(), s) != m.states.end())
                    fail(lineno, "duplicate state '" + s + "'");
                m.states.push_back(s);
            }
            if (m.states.empty()) fail(lineno, "empty states line");
            have_states = true;
        } else if (tok == "init") {
            std::string s;
            if (!(ls >> s)) fail(lineno, "init needs a state");
            if (!have_states) fail(lineno, "init before states");
            try {
                m.init = m.state_id(s);
            } catch (const Error& e) {
                fail(lineno, e.what());
            }
            have_init = true;
        } else if (tok == "actions") {
            std::string a;
            while (ls >> a) {
                if (std::find(m.actions.begin(), m.actions.end(), a) != m.actions.end())
                    fail(lineno, "duplicate action '" + a + "'");
                m.actions.push_back(a);
            }
            if (m.actions.empty()) fail(lineno, "empty actions line");
            have_actions = true;
        } else if (tok == "target" || tok == "region") {
            if (!have_states) fail(lineno, tok + " before states");
            StateSet set;
            std::string s;
            while (ls >> s) {
                try {
                    set.insert(m.state_id(s));
                } catch (const Error& e) {
                    fail(lineno, e.what());
                }
            }
            if (tok == "target")
                m.target = std::move(set);
            else
                m.region = std::move(set);
        } else if (tok == "trans") {
            std::string src, act, dst, p;
            if (!(ls >> src >> act >> dst >> p)) fail(lineno, "trans needs: src action dst prob");
            trans_rows.emplace_back(src, act, dst, p, lineno);
        } else {
            fail(lineno, "unknown directive '" + tok + "'");
        }
    }
    if (!have_states) throw Error(Errc::ParseError, "missing states line");
    if (!have_actions) throw Error(Errc::ParseError, "missing actions line");
    if (!have_init) throw Error(Errc::ParseError, "missing init line");

    m.trans.assign(m.states.size(), std::vector<std::vector<std::pair<uint32_t, Rational>>>(m.actions.size()));
    for (const auto& [src, act, dst, p, row_line] : trans_rows) {
        uint32_t s, a, t;
        Rational prob;
        try {
            s = m.state_id(src);
            a = m.action_id(act);
            t = m.state_id(dst);
            prob = Rational::from_string(p);
        } catch (const Error& e) {
            fail(row_line, e.what());
        }
        m.trans[s][a].emplace_back(t, std::move(prob));
    }
    m.validate();
    return m;
}

Mdp parse_mdp_string(const std::string& text) {
    std::istringstream in(text);
    return parse_mdp(in);
}

Mdp parse_mdp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    return parse_mdp(in);
}

Ast state_set_to_ast(const Mdp& m, const StateSet& set) {
    if (set.empty()) return ast::constant(false);
    if (set.size() == m.states.size()) return ast::constant(true);
    if (set.size() <= m.states.size() - set.size()) {
        std::vector<Ast> members;
        for (uint32_t s : set) members.push_back(ast::var(Var(s + 1)));
        return ast::disjunction(std::move(members));
    }
    std::vector<Ast> non_members;
    for (uint32_t s = 0; s < m.states.size(); ++s)
        if (!set.count(s)) non_members.push_back(ast::leaf(Lit(Var(s + 1), false)));
    return ast::conjunction(std::move(non_members));
}

StateSet ast_to_state_set(const Mdp& m, const Ast& predicate) {
    StateSet out;
    for (uint32_t s = 0; s < m.states.size(); ++s) {
        Assignment one_hot;
        for (uint32_t t = 0; t < m.states.size(); ++t) one_hot.set(Var(t + 1), t == s);
        if (ast::eval(predicate, one_hot)) out.insert(s);
    }
    return out;
}

std::vector<std::string> canonical_state_names(const Mdp& m) {
    std::vector<std::string> names(m.states.size() + 1);
    for (uint32_t s = 0; s < m.states.size(); ++s) names[s + 1] = m.states[s];
    return names;
}

std::string format_state_set(const Mdp& m, const StateSet& set) {
    std::string out = "{";
    bool first = true;
    for (uint32_t s : set) {
        if (!first) out += ",";
        out += m.states[s];
        first = false;
    }
    return out + "}";
}

} // namespace ssatc
