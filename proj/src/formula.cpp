#include "ursa/formula.hpp"

#include <algorithm>
#include <cassert>

#include "ursa/error.hpp"

namespace ursa {

void FormulaFactory::reset() {
    // Constants live at fixed ids 0 and 1 so folding can compare handles.
    nodes_.push_back(FormulaNode{Kind::False, 0, {}});
    nodes_.push_back(FormulaNode{Kind::True, 0, {}});
}

FormulaRef FormulaFactory::append(Kind kind, uint32_t var_index, FormulaRef a, FormulaRef b) {
    FormulaNode n;
    n.kind = kind;
    n.var_index = var_index;
    n.child[0] = a;
    n.child[1] = b;
    nodes_.push_back(n);
    return FormulaRef(uint32_t(nodes_.size() - 1));
}

FormulaRef FormulaFactory::intern(Kind kind, FormulaRef a, FormulaRef b) {
    ConsKey key{uint8_t(kind), a.id(), b.valid() ? b.id() : 0};
    auto [it, inserted] = cons_table_.try_emplace(key, uint32_t(nodes_.size()));
    if (!inserted)
        return FormulaRef(it->second);
    return append(kind, 0, a, b);
}

FormulaRef FormulaFactory::fresh_var() {
    // Indices never repeat within a session, so no table lookup is needed.
    return append(Kind::Var, next_var_index_++, FormulaRef(), FormulaRef());
}

FormulaRef FormulaFactory::mk_not(FormulaRef a) {
    if (is_false(a)) return verum();
    if (is_true(a)) return falsum();
    if (kind(a) == Kind::Not) return node(a).child[0];
    return intern(Kind::Not, a, FormulaRef());
}

FormulaRef FormulaFactory::mk_connective(Kind k, FormulaRef a, FormulaRef b) {
    assert(k == Kind::And || k == Kind::Or || k == Kind::Xor || k == Kind::Equiv);

    // Constant folding.
    if (is_const(a) || is_const(b)) {
        bool const_is_a = is_const(a);
        bool cval = is_true(const_is_a ? a : b);
        FormulaRef other = const_is_a ? b : a;
        if (is_const(other)) {
            bool oval = is_true(other);
            switch (k) {
            case Kind::And: return constant(cval && oval);
            case Kind::Or: return constant(cval || oval);
            case Kind::Xor: return constant(cval != oval);
            default: return constant(cval == oval);
            }
        }
        switch (k) {
        case Kind::And: return cval ? other : falsum();
        case Kind::Or: return cval ? verum() : other;
        case Kind::Xor: return cval ? mk_not(other) : other;
        default: return cval ? other : mk_not(other);
        }
    }

    // Identical operands.
    if (a == b) {
        switch (k) {
        case Kind::And:
        case Kind::Or: return a;
        case Kind::Xor: return falsum();
        default: return verum();
        }
    }

    return intern(k, a, b);
}

bool Evaluator::eval(FormulaRef root, const std::vector<bool>& assignment) {
    // Collect the reachable sub-DAG, then compute values in id order (the
    // table is topologically ordered, so children come first).
    if (memo_.size() < factory_.node_count())
        memo_.resize(factory_.node_count());
    reachable_.clear();
    std::vector<uint32_t> stack{root.id()};
    std::vector<int8_t>& m = memo_;
    std::fill(m.begin(), m.end(), int8_t(-1));
    while (!stack.empty()) {
        uint32_t id = stack.back();
        stack.pop_back();
        if (m[id] != -1) continue;
        m[id] = -2;
        reachable_.push_back(id);
        const FormulaNode& n = factory_.node(FormulaRef(id));
        for (int i = 0; i < n.arity(); ++i) {
            uint32_t c = n.child[i].id();
            if (m[c] == -1) stack.push_back(c);
        }
    }
    std::sort(reachable_.begin(), reachable_.end());

    for (uint32_t id : reachable_) {
        const FormulaNode& n = factory_.node(FormulaRef(id));
        switch (n.kind) {
        case Kind::False: m[id] = 0; break;
        case Kind::True: m[id] = 1; break;
        case Kind::Var:
            if (n.var_index >= assignment.size())
                throw Error("unassigned propositional variable " + std::to_string(n.var_index));
            m[id] = assignment[n.var_index] ? 1 : 0;
            break;
        case Kind::Not: m[id] = int8_t(1 - m[n.child[0].id()]); break;
        case Kind::And: m[id] = int8_t(m[n.child[0].id()] & m[n.child[1].id()]); break;
        case Kind::Or: m[id] = int8_t(m[n.child[0].id()] | m[n.child[1].id()]); break;
        case Kind::Xor: m[id] = int8_t(m[n.child[0].id()] ^ m[n.child[1].id()]); break;
        case Kind::Equiv: m[id] = int8_t(m[n.child[0].id()] == m[n.child[1].id()]); break;
        }
    }
    visited_ = reachable_.size();
    return m[root.id()] == 1;
}

}  // namespace ursa
