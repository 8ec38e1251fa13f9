#include "ssatc/encode.hpp"

#include "ssatc/cnf.hpp"
#include "ssatc/error.hpp"

#include <algorithm>
#include <cassert>

namespace ssatc {

namespace {

uint32_t bits_for(size_t n) {
    uint32_t b = 0;
    while ((size_t{1} << b) < n) ++b;
    return b;
}

// Conditional chain probabilities: q_i = p_i / remaining mass, so that the
// product along each leaf path equals the declared probability.
std::vector<Rational> chain_probs(const std::vector<std::pair<uint32_t, Rational>>& dist) {
    std::vector<Rational> out;
    Rational remaining = Rational::one();
    for (size_t i = 0; i + 1 < dist.size(); ++i) {
        out.push_back(dist[i].second / remaining);
        remaining = remaining - dist[i].second;
    }
    return out;
}

} // namespace

StepEncoding encode_step(const Mdp& m) {
    m.validate();
    StepEncoding enc;
    enc.num_states = static_cast<uint32_t>(m.states.size());
    enc.state_names = m.states;

    size_t max_actions = 1;
    for (uint32_t s = 0; s < m.states.size(); ++s)
        max_actions = std::max(max_actions, m.available_actions(s).size());
    enc.nd_bits = bits_for(max_actions);

    auto add_chain_clauses = [&](uint32_t s, const std::vector<TemplateLit>& guard,
                                 const std::vector<std::pair<uint32_t, Rational>>& dist,
                                 uint32_t chain_base) {
        const size_t links = dist.size() - 1;
        for (size_t i = 0; i < dist.size(); ++i) {
            TemplateClause c = guard;
            // earlier chain branches not taken
            for (size_t j = 0; j < std::min(i, links); ++j)
                c.push_back({SlotKind::Chain, static_cast<uint32_t>(chain_base + j), true});
            if (i < links) c.push_back({SlotKind::Chain, static_cast<uint32_t>(chain_base + i), false});
            c.push_back({SlotKind::NextState, dist[i].first, true});
            enc.trans_clauses.push_back(std::move(c));
        }
        (void)s;
    };

    for (uint32_t s = 0; s < m.states.size(); ++s) {
        std::vector<uint32_t> avail = m.available_actions(s);
        bool uniform = true;
        for (size_t i = 1; i < avail.size() && uniform; ++i)
            uniform = m.trans[s][avail[i]] == m.trans[s][avail[0]];

        if (uniform) {
            // action-independent distribution: one chain, no selector guard
            const auto& dist = m.trans[s][avail[0]];
            uint32_t chain_base = static_cast<uint32_t>(enc.chain_vars.size());
            std::vector<Rational> qs = chain_probs(dist);
            for (size_t i = 0; i + 1 < dist.size(); ++i) {
                std::string name = "p" + m.states[s] + (dist.size() > 2 ? std::to_string(i) : "");
                enc.chain_vars.push_back({s, -1, static_cast<uint32_t>(i), qs[i], std::move(name)});
            }
            add_chain_clauses(s, {{SlotKind::PrevState, s, false}}, dist, chain_base);
            continue;
        }

        // distinct distributions: selector-guarded chain per action
        std::vector<uint32_t> chain_base_of(avail.size());
        for (size_t ai = 0; ai < avail.size(); ++ai) {
            const auto& dist = m.trans[s][avail[ai]];
            chain_base_of[ai] = static_cast<uint32_t>(enc.chain_vars.size());
            std::vector<Rational> qs = chain_probs(dist);
            for (size_t i = 0; i + 1 < dist.size(); ++i) {
                std::string name =
                    "p" + m.states[s] + m.actions[avail[ai]] + (dist.size() > 2 ? std::to_string(i) : "");
                enc.chain_vars.push_back(
                    {s, static_cast<int32_t>(avail[ai]), static_cast<uint32_t>(i), qs[i], std::move(name)});
            }
        }
        for (uint32_t word = 0; word < (1u << enc.nd_bits); ++word) {
            size_t ai = std::min<size_t>(word, avail.size() - 1); // total decoding
            std::vector<TemplateLit> guard = {{SlotKind::PrevState, s, false}};
            for (uint32_t b = 0; b < enc.nd_bits; ++b) {
                bool bit = (word >> b) & 1;
                // required selector value: bit 0 means true, so the first
                // action is selected by the positive literal
                guard.push_back({SlotKind::NdBit, b, bit});
            }
            add_chain_clauses(s, guard, m.trans[s][avail[ai]], chain_base_of[ai]);
        }
    }

    // exactly one next-state bit
    TemplateClause at_least;
    for (uint32_t s = 0; s < m.states.size(); ++s)
        at_least.push_back({SlotKind::NextState, s, true});
    enc.trans_clauses.push_back(std::move(at_least));
    for (uint32_t s = 0; s < m.states.size(); ++s)
        for (uint32_t t = s + 1; t < m.states.size(); ++t)
            enc.trans_clauses.push_back(
                {{SlotKind::NextState, s, false}, {SlotKind::NextState, t, false}});

    for (uint32_t s = 0; s < m.states.size(); ++s)
        enc.init_clauses.push_back(Clause({Lit(Var(s + 1), s == m.init)}));
    if (m.target) {
        std::vector<Lit> t;
        for (uint32_t s : *m.target) t.push_back(Lit(Var(s + 1), true));
        enc.target_clauses.push_back(Clause(std::move(t)));
    }
    if (m.region) {
        std::vector<Lit> r;
        for (uint32_t s : *m.region) r.push_back(Lit(Var(s + 1), true));
        enc.region_clauses.push_back(Clause(std::move(r)));
    }
    return enc;
}

Unroller::Unroller(const Mdp& m) : m_(m), enc_(encode_step(m)) {
    f_.var_names.resize(1);
}

Var Unroller::alloc(const std::string& name) {
    Var v(next_var_++);
    if (f_.var_names.size() <= v.idx) f_.var_names.resize(v.idx + 1);
    f_.var_names[v.idx] = name;
    return v;
}

void Unroller::add_initial() {
    std::vector<Var> block;
    for (uint32_t s = 0; s < enc_.num_states; ++s) {
        Var v = alloc(enc_.state_names[s] + "@0");
        f_.prefix.append(v, Quantifier::exists());
        block.push_back(v);
    }
    state_vars_.push_back(block);
    for (const Clause& c : enc_.init_clauses) {
        std::vector<Lit> lits;
        for (Lit l : c) lits.push_back(Lit(block[l.var().idx - 1], l.positive()));
        add_clause(Clause(std::move(lits)), &init_clauses_);
    }
}

void Unroller::add_step() {
    ++depth_;
    const std::string suffix = "@" + std::to_string(depth_);
    std::vector<Var> nd, chain, next;
    for (uint32_t b = 0; b < enc_.nd_bits; ++b) {
        Var v = alloc(enc_.nd_bits == 1 ? "act" + suffix : "act" + std::to_string(b) + suffix);
        f_.prefix.append(v, Quantifier::exists());
        nd.push_back(v);
    }
    for (const ChainVarSpec& cs : enc_.chain_vars) {
        Var v = alloc(cs.name + suffix);
        f_.prefix.append(v, Quantifier::random(cs.prob));
        chain.push_back(v);
    }
    for (uint32_t s = 0; s < enc_.num_states; ++s) {
        Var v = alloc(enc_.state_names[s] + suffix);
        f_.prefix.append(v, Quantifier::exists());
        next.push_back(v);
    }
    const std::vector<Var> prev = state_vars_.back(); // copy; push_back may reallocate
    state_vars_.push_back(next);

    last_step_clauses_.clear();
    for (const TemplateClause& tc : enc_.trans_clauses) {
        std::vector<Lit> lits;
        lits.reserve(tc.size());
        for (const TemplateLit& tl : tc) lits.push_back(instantiate(tl, prev, nd, chain, next));
        add_clause(Clause(std::move(lits)), &last_step_clauses_);
    }
}

Lit Unroller::instantiate(const TemplateLit& tl, const std::vector<Var>& prev,
                          const std::vector<Var>& nd, const std::vector<Var>& chain,
                          const std::vector<Var>& next) const {
    switch (tl.kind) {
        case SlotKind::PrevState: return Lit(prev[tl.index], tl.positive);
        case SlotKind::NdBit: return Lit(nd[tl.index], tl.positive);
        case SlotKind::Chain: return Lit(chain[tl.index], tl.positive);
        case SlotKind::NextState: return Lit(next[tl.index], tl.positive);
    }
    throw Error(Errc::InvalidArgument, "bad template literal");
}

Ast Unroller::at_depth(const Ast& canonical, uint32_t depth) const {
    std::map<uint32_t, Var> map;
    for (uint32_t s = 0; s < enc_.num_states; ++s) map[s + 1] = state_vars_[depth][s];
    return ast::remap_vars(canonical, map);
}

std::vector<uint32_t> Unroller::add_predicate_cnf(const Ast& predicate_at_depth) {
    std::vector<std::string>* names = &f_.var_names;
    VarAllocator alloc_aux(next_var_, names);
    CnfResult cnf = to_cnf(predicate_at_depth, alloc_aux);
    next_var_ = alloc_aux.next_index();
    std::vector<uint32_t> indices;
    for (Clause& c : cnf.clauses) add_clause(std::move(c), &indices);
    for (Var v : cnf.aux_vars) pending_aux_.push_back(v);
    return indices;
}

void Unroller::add_clause(Clause c, std::vector<uint32_t>* index_sink) {
    if (index_sink) index_sink->push_back(static_cast<uint32_t>(f_.matrix.size()));
    f_.matrix.push_back(std::move(c));
}

SsatFormula Unroller::finish() {
    for (Var v : pending_aux_) f_.prefix.append(v, Quantifier::exists());
    pending_aux_.clear();
    f_.num_vars = next_var_ - 1;
    f_.validate();
    return f_;
}

SsatFormula build_pbmc(const Mdp& m, unsigned k) {
    if (!m.target) throw Error(Errc::MissingTarget, "PBMC needs a target set");
    Unroller u(m);
    u.add_initial();
    std::vector<Lit> hit;
    for (unsigned d = 0; d <= k; ++d) {
        if (d > 0) u.add_step();
        for (uint32_t s : *m.target) hit.push_back(Lit(u.state_vars(d)[s], true));
    }
    u.add_clause(Clause(std::move(hit)));
    return u.finish();
}

BackstepQuery build_backstep_query(const Mdp& m, const Ast& predicate, unsigned j, BackstepMode mode) {
    if (j < 1) throw Error(Errc::InvalidArgument, "backstep parameter j must be >= 1");
    Unroller u(m);
    u.add_initial();
    for (unsigned d = 1; d + 1 <= j; ++d) u.add_step(); // j-1 forward steps: B-side
    u.add_step(); // step j, the backward step: A-side
    std::vector<uint32_t> a_indices = u.last_step_clause_indices();
    Ast pred = u.at_depth(predicate, j);
    if (mode == BackstepMode::Stability) pred = ast::negation(pred);
    for (uint32_t i : u.add_predicate_cnf(pred)) a_indices.push_back(i);

    BackstepQuery q;
    q.formula = u.finish();
    q.partition = Partition::make(q.formula, a_indices);
    q.common_state_vars = u.state_vars(j - 1);
    q.canonical_names = canonical_state_names(m);
    return q;
}

SsatFormula build_upper_bound(const Mdp& m, const Ast& breach, unsigned k) {
    Unroller u(m);
    u.add_initial();
    u.add_predicate_cnf(u.at_depth(breach, 0));
    for (unsigned d = 1; d <= k; ++d) {
        u.add_step();
        u.add_predicate_cnf(u.at_depth(breach, d));
    }
    return u.finish();
}

SsatFormula build_kernel_avoid(const Mdp& m, const Ast& kernel, unsigned k) {
    Unroller u(m);
    u.add_initial();
    u.add_predicate_cnf(ast::negation(u.at_depth(kernel, 0)));
    for (unsigned d = 1; d <= k; ++d) {
        u.add_step();
        u.add_predicate_cnf(ast::negation(u.at_depth(kernel, d)));
    }
    return u.finish();
}

} // namespace ssatc
