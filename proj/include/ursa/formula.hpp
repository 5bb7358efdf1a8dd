#ifndef URSA_FORMULA_HPP
#define URSA_FORMULA_HPP

#include <compare>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace ursa {

enum class Kind : uint8_t { False, True, Var, Not, And, Or, Xor, Equiv };

// Handle to a node owned by a FormulaFactory. Plain 32-bit index; equality
// of handles is structural equality of the formulas they denote.
class FormulaRef {
public:
    constexpr FormulaRef() : id_(kInvalid) {}
    constexpr explicit FormulaRef(uint32_t id) : id_(id) {}

    constexpr uint32_t id() const { return id_; }
    constexpr bool valid() const { return id_ != kInvalid; }

    friend constexpr auto operator<=>(FormulaRef, FormulaRef) = default;

private:
    static constexpr uint32_t kInvalid = 0xffffffffu;
    uint32_t id_;
};

struct FormulaNode {
    Kind kind;
    uint32_t var_index = 0;  // meaningful for Var nodes only
    FormulaRef child[2];     // Not uses child[0]; connectives use both

    int arity() const {
        switch (kind) {
        case Kind::False:
        case Kind::True:
        case Kind::Var: return 0;
        case Kind::Not: return 1;
        default: return 2;
        }
    }
};

// Hash-consed formula store. Every constructor folds constants, eliminates
// double negation and collapses identical operands, so the node table never
// holds a connective over a constant, a Not over a Not, or two structurally
// equal nodes. Children always have smaller ids than their parent; the node
// table is therefore topologically ordered.
class FormulaFactory {
public:
    FormulaFactory() { reset(); }

    FormulaFactory(const FormulaFactory&) = delete;
    FormulaFactory& operator=(const FormulaFactory&) = delete;

    FormulaRef falsum() const { return FormulaRef(0); }
    FormulaRef verum() const { return FormulaRef(1); }

    // A Var node over a never-used propositional variable index.
    FormulaRef fresh_var();

    FormulaRef mk_not(FormulaRef a);
    FormulaRef mk_and(FormulaRef a, FormulaRef b) { return mk_connective(Kind::And, a, b); }
    FormulaRef mk_or(FormulaRef a, FormulaRef b) { return mk_connective(Kind::Or, a, b); }
    FormulaRef mk_xor(FormulaRef a, FormulaRef b) { return mk_connective(Kind::Xor, a, b); }
    FormulaRef mk_equiv(FormulaRef a, FormulaRef b) { return mk_connective(Kind::Equiv, a, b); }
    FormulaRef mk_connective(Kind kind, FormulaRef a, FormulaRef b);

    const FormulaNode& node(FormulaRef r) const { return nodes_[r.id()]; }
    Kind kind(FormulaRef r) const { return nodes_[r.id()].kind; }

    bool is_true(FormulaRef r) const { return r.id() == 1; }
    bool is_false(FormulaRef r) const { return r.id() == 0; }
    bool is_const(FormulaRef r) const { return r.id() <= 1; }
    FormulaRef constant(bool b) const { return b ? verum() : falsum(); }

    size_t node_count() const { return nodes_.size(); }

    // Number of propositional variables created so far; also the next
    // fresh index.
    uint32_t variable_count() const { return next_var_index_; }

    // Drops every node and resets the variable counter.
    void clear() {
        nodes_.clear();
        cons_table_.clear();
        next_var_index_ = 0;
        reset();
    }

private:
    struct ConsKey {
        uint8_t kind;
        uint32_t a, b;
        bool operator==(const ConsKey&) const = default;
    };
    struct ConsKeyHash {
        size_t operator()(const ConsKey& k) const {
            uint64_t h = (uint64_t(k.a) << 32) | k.b;
            h ^= uint64_t(k.kind) << 56;
            h *= 0x9e3779b97f4a7c15ull;
            return size_t(h ^ (h >> 32));
        }
    };

    void reset();
    FormulaRef append(Kind kind, uint32_t var_index, FormulaRef a, FormulaRef b);
    FormulaRef intern(Kind kind, FormulaRef a, FormulaRef b);

    std::vector<FormulaNode> nodes_;
    std::unordered_map<ConsKey, uint32_t, ConsKeyHash> cons_table_;
    uint32_t next_var_index_ = 0;
};

// Truth-table evaluation over the DAG; each reachable node is computed
// exactly once. The assignment is indexed by propositional variable index;
// a reachable index at or past its end is an error.
class Evaluator {
public:
    explicit Evaluator(const FormulaFactory& factory) : factory_(factory) {}

    bool eval(FormulaRef root, const std::vector<bool>& assignment);

    // Distinct nodes computed by the last eval() call.
    size_t nodes_visited() const { return visited_; }

private:
    const FormulaFactory& factory_;
    std::vector<uint32_t> reachable_;
    std::vector<int8_t> memo_;  // -1 unknown, 0/1 value, indexed by node id
    size_t visited_ = 0;
};

inline bool eval(const FormulaFactory& factory, FormulaRef root,
                 const std::vector<bool>& assignment) {
    Evaluator ev(factory);
    return ev.eval(root, assignment);
}

}  // namespace ursa

#endif
