#include "ursa/print.hpp"

#include <sstream>

namespace ursa {

namespace {

const char* bin_op_text(BinOp op) {
    switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::BitAnd: return "&";
    case BinOp::BitOr: return "|";
    case BinOp::BitXor: return "^";
    case BinOp::Shl: return "<<";
    case BinOp::Shr: return ">>";
    case BinOp::Lt: return "<";
    case BinOp::Gt: return ">";
    case BinOp::Le: return "<=";
    case BinOp::Ge: return ">=";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::LogAnd: return "&&";
    case BinOp::LogOr: return "||";
    case BinOp::LogXor: return "^^";
    }
    return "?";
}

const char* assign_op_text(AssignOp op) {
    switch (op) {
    case AssignOp::Set: return "=";
    case AssignOp::Add: return "+=";
    case AssignOp::Sub: return "-=";
    case AssignOp::Mul: return "*=";
    case AssignOp::And: return "&=";
    case AssignOp::Or: return "|=";
    case AssignOp::Xor: return "^=";
    case AssignOp::Shl: return "<<=";
    case AssignOp::Shr: return ">>=";
    case AssignOp::LogAnd: return "&&=";
    case AssignOp::LogOr: return "||=";
    case AssignOp::LogXor: return "^^=";
    }
    return "?";
}

void print_var(std::ostream& os, const VarRef& v) {
    os << v.name;
    for (const ExprPtr& idx : v.indices) os << "[" << to_text(*idx) << "]";
}

void print_expr(std::ostream& os, const Expr& e) {
    switch (e.tag) {
    case Expr::Tag::IntConst: os << e.int_value; return;
    case Expr::Tag::BoolConst: os << (e.bool_value ? "true" : "false"); return;
    case Expr::Tag::Var: print_var(os, e.var); return;
    case Expr::Tag::Unary: {
        const char* op = e.un_op == UnOp::Neg ? "-" : e.un_op == UnOp::BitNot ? "~" : "!";
        os << op << "(";
        print_expr(os, *e.a);
        os << ")";
        return;
    }
    case Expr::Tag::Binary:
        os << "(";
        print_expr(os, *e.a);
        os << " " << bin_op_text(e.bin_op) << " ";
        print_expr(os, *e.b);
        os << ")";
        return;
    case Expr::Tag::Ite:
        os << "ite(" << to_text(*e.a) << ", " << to_text(*e.b) << ", " << to_text(*e.c) << ")";
        return;
    case Expr::Tag::Sgn: os << "sgn(" << to_text(*e.a) << ")"; return;
    case Expr::Tag::Bool2Num: os << "bool2num(" << to_text(*e.a) << ")"; return;
    case Expr::Tag::Num2Bool: os << "num2bool(" << to_text(*e.a) << ")"; return;
    }
}

std::string pad(int indent) { return std::string(size_t(indent) * 2, ' '); }

void print_stmt(std::ostream& os, const Stmt& s, int indent);

void print_simple(std::ostream& os, const Stmt& s) {
    if (s.tag == Stmt::Tag::Postfix) {
        print_var(os, s.target);
        os << (s.postfix_delta > 0 ? "++" : "--");
    } else {
        print_var(os, s.target);
        os << " " << assign_op_text(s.assign_op) << " " << to_text(*s.expr);
    }
}

void print_stmt(std::ostream& os, const Stmt& s, int indent) {
    os << pad(indent);
    switch (s.tag) {
    case Stmt::Tag::Block:
        os << "{\n";
        for (const StmtPtr& c : s.block) print_stmt(os, *c, indent + 1);
        os << pad(indent) << "}\n";
        return;
    case Stmt::Tag::Assign:
    case Stmt::Tag::Postfix:
        print_simple(os, s);
        os << ";\n";
        return;
    case Stmt::Tag::While:
        os << "while (" << to_text(*s.cond) << ")\n";
        print_stmt(os, *s.body, indent + 1);
        return;
    case Stmt::Tag::For:
        os << "for (";
        print_simple(os, *s.init);
        os << "; " << to_text(*s.cond) << "; ";
        print_simple(os, *s.step);
        os << ")\n";
        print_stmt(os, *s.body, indent + 1);
        return;
    case Stmt::Tag::If:
        os << "if (" << to_text(*s.cond) << ")\n";
        print_stmt(os, *s.body, indent + 1);
        if (s.else_branch) {
            os << pad(indent) << "else\n";
            print_stmt(os, *s.else_branch, indent + 1);
        }
        return;
    case Stmt::Tag::Call:
        os << "call " << s.callee << "(";
        for (size_t i = 0; i < s.args.size(); ++i) {
            if (i) os << ", ";
            os << to_text(*s.args[i]);
        }
        os << ");\n";
        return;
    case Stmt::Tag::Minimize:
    case Stmt::Tag::Maximize:
        os << (s.tag == Stmt::Tag::Minimize ? "minimize(" : "maximize(");
        print_var(os, s.target);
        os << ", " << s.range_lo << ", " << s.range_hi << ");\n";
        return;
    case Stmt::Tag::Assert:
    case Stmt::Tag::AssertAll:
        os << (s.tag == Stmt::Tag::Assert ? "assert(" : "assert_all(");
        for (size_t i = 0; i < s.conjuncts.size(); ++i) {
            if (i) os << "; ";
            os << to_text(*s.conjuncts[i]);
        }
        os << ");\n";
        return;
    case Stmt::Tag::Print: os << "print " << to_text(*s.expr) << ";\n"; return;
    case Stmt::Tag::ListVars: os << "listvars;\n"; return;
    case Stmt::Tag::Clear: os << "clear;\n"; return;
    case Stmt::Tag::Halt: os << "halt;\n"; return;
    }
}

}  // namespace

std::string to_text(const Expr& e) {
    std::ostringstream os;
    print_expr(os, e);
    return os.str();
}

std::string to_text(const Stmt& s, int indent) {
    std::ostringstream os;
    print_stmt(os, s, indent);
    return os.str();
}

std::string to_text(const AstProgram& p) {
    std::ostringstream os;
    for (const Procedure& proc : p.procedures) {
        os << "procedure " << proc.name << "(";
        for (size_t i = 0; i < proc.params.size(); ++i) {
            if (i) os << ", ";
            os << proc.params[i];
        }
        os << ") {\n";
        for (const StmtPtr& s : proc.body) print_stmt(os, *s, 1);
        os << "}\n\n";
    }
    for (const StmtPtr& s : p.statements) print_stmt(os, *s, 0);
    return os.str();
}

}  // namespace ursa
