#ifndef URSA_AST_HPP
#define URSA_AST_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ursa/error.hpp"

namespace ursa {

// Expressions are either numeric or Boolean; the split is syntactic
// (identifier prefix, operator signatures) and checked while parsing.
enum class ValueKind { Numeric, Boolean };

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

enum class UnOp { Neg, BitNot, LogNot };

enum class BinOp {
    Add, Sub, Mul, BitAnd, BitOr, BitXor, Shl, Shr,   // numeric x numeric -> numeric
    Lt, Gt, Le, Ge, Eq, Ne,                           // numeric x numeric -> Boolean
    LogAnd, LogOr, LogXor                             // Boolean x Boolean -> Boolean
};

// Scalar variable or array element; 0, 1 or 2 index expressions.
struct VarRef {
    std::string name;
    std::vector<ExprPtr> indices;
    SourceLoc loc;

    ValueKind kind() const {
        return name[0] == 'n' ? ValueKind::Numeric : ValueKind::Boolean;
    }
};

struct Expr {
    enum class Tag { IntConst, BoolConst, Var, Unary, Binary, Ite, Sgn, Bool2Num, Num2Bool };

    Tag tag;
    ValueKind kind = ValueKind::Numeric;
    SourceLoc loc;

    uint64_t int_value = 0;   // IntConst
    bool bool_value = false;  // BoolConst
    VarRef var;               // Var

    UnOp un_op{};
    BinOp bin_op{};
    ExprPtr a, b, c;  // operands; Ite uses all three (cond, then, else)
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

enum class AssignOp {
    Set,                                  // =
    Add, Sub, Mul, And, Or, Xor, Shl, Shr,  // numeric compound forms
    LogAnd, LogOr, LogXor                 // Boolean compound forms
};

struct Stmt {
    enum class Tag {
        Block, Assign, Postfix, While, For, If, Call,
        Minimize, Maximize, Assert, AssertAll,
        Print, ListVars, Clear, Halt
    };

    Tag tag;
    SourceLoc loc;

    std::vector<StmtPtr> block;  // Block

    VarRef target;               // Assign, Postfix, Minimize, Maximize
    AssignOp assign_op{};        // Assign
    ExprPtr expr;                // Assign, Print
    int postfix_delta = 0;       // Postfix: +1 or -1

    ExprPtr cond;                // While, For, If
    StmtPtr init, step;          // For
    StmtPtr body;                // While, For, If (then branch)
    StmtPtr else_branch;         // If

    std::string callee;          // Call
    std::vector<ExprPtr> args;   // Call

    uint64_t range_lo = 0, range_hi = 0;  // Minimize, Maximize

    std::vector<ExprPtr> conjuncts;  // Assert, AssertAll
};

struct Procedure {
    std::string name;
    std::vector<std::string> params;  // plain identifiers, n*/b* prefixed
    std::vector<StmtPtr> body;
    SourceLoc loc;
};

struct AstProgram {
    std::vector<Procedure> procedures;
    std::vector<StmtPtr> statements;
};

}  // namespace ursa

#endif
