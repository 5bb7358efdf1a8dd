#include "ursa/parser.hpp"

#include <array>

namespace ursa {

namespace {

struct OpEntry {
    Tok tok;
    BinOp op;
};

// Binary precedence levels, loosest first; parse_binary(0) is the whole
// expression grammar.
const std::vector<std::vector<OpEntry>> kLevels = {
    {{Tok::OrOr, BinOp::LogOr}},
    {{Tok::XorXor, BinOp::LogXor}},
    {{Tok::AndAnd, BinOp::LogAnd}},
    {{Tok::Pipe, BinOp::BitOr}},
    {{Tok::Caret, BinOp::BitXor}},
    {{Tok::Amp, BinOp::BitAnd}},
    {{Tok::EqEq, BinOp::Eq}, {Tok::NotEq, BinOp::Ne}},
    {{Tok::Lt, BinOp::Lt}, {Tok::Gt, BinOp::Gt}, {Tok::Le, BinOp::Le}, {Tok::Ge, BinOp::Ge}},
    {{Tok::Shl, BinOp::Shl}, {Tok::Shr, BinOp::Shr}},
    {{Tok::Plus, BinOp::Add}, {Tok::Minus, BinOp::Sub}},
    {{Tok::Star, BinOp::Mul}},
};

bool is_logical(BinOp op) {
    return op == BinOp::LogAnd || op == BinOp::LogOr || op == BinOp::LogXor;
}

bool is_relational(BinOp op) {
    switch (op) {
    case BinOp::Lt: case BinOp::Gt: case BinOp::Le:
    case BinOp::Ge: case BinOp::Eq: case BinOp::Ne:
        return true;
    default:
        return false;
    }
}

const char* op_text(BinOp op) {
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

bool is_variable_name(const std::string& s) {
    return !s.empty() && (s[0] == 'n' || s[0] == 'b');
}

}  // namespace

const Token& Parser::peek(size_t k) const {
    size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
}

const Token& Parser::advance() {
    const Token& t = peek();
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
}

bool Parser::match(Tok t) {
    if (check(t)) {
        advance();
        return true;
    }
    return false;
}

const Token& Parser::expect(Tok t, const char* what) {
    if (!check(t)) {
        std::string msg = std::string("expected ") + (what ? what : token_name(t)) +
                          ", found " + token_name(peek().type);
        fail(msg, peek().loc);
    }
    return advance();
}

void Parser::fail(const std::string& msg, SourceLoc loc) const {
    throw ParseError(msg, loc);
}

void Parser::require_kind(const Expr& e, ValueKind k, const char* context) const {
    if (e.kind != k) {
        std::string msg = std::string(context) + " requires a " +
                          (k == ValueKind::Numeric ? "numeric" : "Boolean") + " expression";
        fail(msg, e.loc);
    }
}

AstProgram Parser::parse_program() {
    AstProgram prog;
    while (check(Tok::KwProcedure)) prog.procedures.push_back(parse_procedure());
    while (!at_eof()) {
        if (check(Tok::KwProcedure))
            fail("procedure definitions must precede all statements", peek().loc);
        prog.statements.push_back(parse_statement());
    }
    return prog;
}

std::variant<Procedure, StmtPtr> Parser::parse_toplevel() {
    if (check(Tok::KwProcedure)) return parse_procedure();
    return parse_statement();
}

Procedure Parser::parse_procedure() {
    Procedure proc;
    proc.loc = peek().loc;
    expect(Tok::KwProcedure);
    proc.name = expect(Tok::Ident, "procedure name").text;
    expect(Tok::LParen);
    if (!check(Tok::RParen)) {
        do {
            const Token& p = expect(Tok::Ident, "parameter name");
            if (!is_variable_name(p.text))
                fail("parameter name must start with 'n' or 'b'", p.loc);
            proc.params.push_back(p.text);
        } while (match(Tok::Comma));
    }
    expect(Tok::RParen);
    expect(Tok::LBrace);
    while (!check(Tok::RBrace)) proc.body.push_back(parse_statement());
    expect(Tok::RBrace);
    return proc;
}

VarRef Parser::parse_var_ref() {
    const Token& t = expect(Tok::Ident, "variable identifier");
    if (!is_variable_name(t.text))
        fail("variable identifier must start with 'n' or 'b'", t.loc);
    VarRef ref;
    ref.name = t.text;
    ref.loc = t.loc;
    while (ref.indices.size() < 2 && check(Tok::LBracket)) {
        advance();
        ExprPtr idx = parse_expression();
        require_kind(*idx, ValueKind::Numeric, "array index");
        ref.indices.push_back(std::move(idx));
        expect(Tok::RBracket);
    }
    return ref;
}

ExprPtr Parser::parse_expression() { return parse_binary(0); }

ExprPtr Parser::parse_binary(int level) {
    if (level >= int(kLevels.size())) return parse_unary();
    ExprPtr lhs = parse_binary(level + 1);
    for (;;) {
        const OpEntry* hit = nullptr;
        for (const OpEntry& e : kLevels[size_t(level)])
            if (check(e.tok)) {
                hit = &e;
                break;
            }
        if (!hit) return lhs;
        SourceLoc loc = peek().loc;
        advance();
        ExprPtr rhs = parse_binary(level + 1);
        lhs = mk_binary(hit->op, std::move(lhs), std::move(rhs), loc);
    }
}

ExprPtr Parser::mk_binary(BinOp op, ExprPtr a, ExprPtr b, SourceLoc loc) {
    const char* name = op_text(op);
    ValueKind operand = is_logical(op) ? ValueKind::Boolean : ValueKind::Numeric;
    std::string ctx = std::string("operator '") + name + "'";
    require_kind(*a, operand, ctx.c_str());
    require_kind(*b, operand, ctx.c_str());
    auto e = std::make_unique<Expr>();
    e->tag = Expr::Tag::Binary;
    e->kind = (is_logical(op) || is_relational(op)) ? ValueKind::Boolean : ValueKind::Numeric;
    e->loc = loc;
    e->bin_op = op;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

ExprPtr Parser::parse_unary() {
    SourceLoc loc = peek().loc;
    if (match(Tok::Minus)) {
        ExprPtr operand = parse_unary();
        require_kind(*operand, ValueKind::Numeric, "unary '-'");
        auto e = std::make_unique<Expr>();
        e->tag = Expr::Tag::Unary;
        e->kind = ValueKind::Numeric;
        e->loc = loc;
        e->un_op = UnOp::Neg;
        e->a = std::move(operand);
        return e;
    }
    if (match(Tok::Tilde)) {
        ExprPtr operand = parse_unary();
        require_kind(*operand, ValueKind::Numeric, "unary '~'");
        auto e = std::make_unique<Expr>();
        e->tag = Expr::Tag::Unary;
        e->kind = ValueKind::Numeric;
        e->loc = loc;
        e->un_op = UnOp::BitNot;
        e->a = std::move(operand);
        return e;
    }
    if (match(Tok::Not)) {
        ExprPtr operand = parse_unary();
        require_kind(*operand, ValueKind::Boolean, "unary '!'");
        auto e = std::make_unique<Expr>();
        e->tag = Expr::Tag::Unary;
        e->kind = ValueKind::Boolean;
        e->loc = loc;
        e->un_op = UnOp::LogNot;
        e->a = std::move(operand);
        return e;
    }
    return parse_primary();
}

ExprPtr Parser::parse_primary() {
    SourceLoc loc = peek().loc;
    auto e = std::make_unique<Expr>();
    e->loc = loc;

    switch (peek().type) {
    case Tok::IntLit:
        e->tag = Expr::Tag::IntConst;
        e->kind = ValueKind::Numeric;
        e->int_value = advance().int_value;
        return e;
    case Tok::KwTrue:
    case Tok::KwFalse:
        e->tag = Expr::Tag::BoolConst;
        e->kind = ValueKind::Boolean;
        e->bool_value = advance().type == Tok::KwTrue;
        return e;
    case Tok::Ident: {
        e->tag = Expr::Tag::Var;
        e->var = parse_var_ref();
        e->kind = e->var.kind();
        return e;
    }
    case Tok::KwIte: {
        advance();
        expect(Tok::LParen);
        ExprPtr cond = parse_expression();
        require_kind(*cond, ValueKind::Boolean, "'ite' condition");
        expect(Tok::Comma);
        ExprPtr then_e = parse_expression();
        expect(Tok::Comma);
        ExprPtr else_e = parse_expression();
        expect(Tok::RParen);
        if (then_e->kind != else_e->kind)
            fail("'ite' branches must have the same kind", loc);
        e->tag = Expr::Tag::Ite;
        e->kind = then_e->kind;
        e->a = std::move(cond);
        e->b = std::move(then_e);
        e->c = std::move(else_e);
        return e;
    }
    case Tok::KwSgn: {
        advance();
        expect(Tok::LParen);
        ExprPtr arg = parse_expression();
        require_kind(*arg, ValueKind::Numeric, "'sgn'");
        expect(Tok::RParen);
        e->tag = Expr::Tag::Sgn;
        e->kind = ValueKind::Numeric;
        e->a = std::move(arg);
        return e;
    }
    case Tok::KwBool2Num: {
        advance();
        expect(Tok::LParen);
        ExprPtr arg = parse_expression();
        require_kind(*arg, ValueKind::Boolean, "'bool2num'");
        expect(Tok::RParen);
        e->tag = Expr::Tag::Bool2Num;
        e->kind = ValueKind::Numeric;
        e->a = std::move(arg);
        return e;
    }
    case Tok::KwNum2Bool: {
        advance();
        expect(Tok::LParen);
        ExprPtr arg = parse_expression();
        require_kind(*arg, ValueKind::Numeric, "'num2bool'");
        expect(Tok::RParen);
        e->tag = Expr::Tag::Num2Bool;
        e->kind = ValueKind::Boolean;
        e->a = std::move(arg);
        return e;
    }
    case Tok::LParen: {
        advance();
        ExprPtr inner = parse_expression();
        expect(Tok::RParen);
        return inner;
    }
    default:
        fail(std::string("expected expression, found ") + token_name(peek().type), loc);
    }
}

StmtPtr Parser::parse_simple_statement(bool require_semi) {
    auto s = std::make_unique<Stmt>();
    s->loc = peek().loc;
    s->target = parse_var_ref();

    if (check(Tok::PlusPlus) || check(Tok::MinusMinus)) {
        if (s->target.kind() != ValueKind::Numeric)
            fail("'++'/'--' require a numeric variable", s->target.loc);
        s->tag = Stmt::Tag::Postfix;
        s->postfix_delta = advance().type == Tok::PlusPlus ? 1 : -1;
        if (require_semi) expect(Tok::Semi);
        return s;
    }

    s->tag = Stmt::Tag::Assign;
    AssignOp op;
    bool numeric_op = true;
    switch (peek().type) {
    case Tok::Assign: op = AssignOp::Set; numeric_op = s->target.kind() == ValueKind::Numeric; break;
    case Tok::PlusAssign: op = AssignOp::Add; break;
    case Tok::MinusAssign: op = AssignOp::Sub; break;
    case Tok::StarAssign: op = AssignOp::Mul; break;
    case Tok::AmpAssign: op = AssignOp::And; break;
    case Tok::PipeAssign: op = AssignOp::Or; break;
    case Tok::CaretAssign: op = AssignOp::Xor; break;
    case Tok::ShlAssign: op = AssignOp::Shl; break;
    case Tok::ShrAssign: op = AssignOp::Shr; break;
    case Tok::AndAndAssign: op = AssignOp::LogAnd; numeric_op = false; break;
    case Tok::OrOrAssign: op = AssignOp::LogOr; numeric_op = false; break;
    case Tok::XorXorAssign: op = AssignOp::LogXor; numeric_op = false; break;
    default:
        fail(std::string("expected assignment operator, found ") + token_name(peek().type),
             peek().loc);
    }
    if (numeric_op && s->target.kind() != ValueKind::Numeric)
        fail("numeric assignment operator applied to a Boolean variable", peek().loc);
    if (!numeric_op && s->target.kind() != ValueKind::Boolean)
        fail("Boolean assignment operator applied to a numeric variable", peek().loc);
    advance();
    s->assign_op = op;
    s->expr = parse_expression();
    require_kind(*s->expr, s->target.kind(),
                 s->target.kind() == ValueKind::Numeric ? "numeric assignment"
                                                        : "Boolean assignment");
    if (require_semi) expect(Tok::Semi);
    return s;
}

StmtPtr Parser::parse_statement() {
    SourceLoc loc = peek().loc;
    switch (peek().type) {
    case Tok::LBrace: {
        advance();
        auto s = std::make_unique<Stmt>();
        s->tag = Stmt::Tag::Block;
        s->loc = loc;
        while (!check(Tok::RBrace)) s->block.push_back(parse_statement());
        expect(Tok::RBrace);
        return s;
    }
    case Tok::Ident:
        return parse_simple_statement(true);
    case Tok::KwWhile: {
        advance();
        auto s = std::make_unique<Stmt>();
        s->tag = Stmt::Tag::While;
        s->loc = loc;
        expect(Tok::LParen);
        s->cond = parse_expression();
        require_kind(*s->cond, ValueKind::Boolean, "'while' condition");
        expect(Tok::RParen);
        s->body = parse_statement();
        return s;
    }
    case Tok::KwFor: {
        advance();
        auto s = std::make_unique<Stmt>();
        s->tag = Stmt::Tag::For;
        s->loc = loc;
        expect(Tok::LParen);
        s->init = parse_simple_statement(false);
        expect(Tok::Semi);
        s->cond = parse_expression();
        require_kind(*s->cond, ValueKind::Boolean, "'for' condition");
        expect(Tok::Semi);
        s->step = parse_simple_statement(false);
        expect(Tok::RParen);
        s->body = parse_statement();
        return s;
    }
    case Tok::KwIf: {
        advance();
        auto s = std::make_unique<Stmt>();
        s->tag = Stmt::Tag::If;
        s->loc = loc;
        expect(Tok::LParen);
        s->cond = parse_expression();
        require_kind(*s->cond, ValueKind::Boolean, "'if' condition");
        expect(Tok::RParen);
        s->body = parse_statement();
        if (match(Tok::KwElse)) s->else_branch = parse_statement();
        return s;
    }
    case Tok::KwCall: {
        advance();
        auto s = std::make_unique<Stmt>();
        s->tag = Stmt::Tag::Call;
        s->loc = loc;
        s->callee = expect(Tok::Ident, "procedure name").text;
        expect(Tok::LParen);
        if (!check(Tok::RParen)) {
            do {
                s->args.push_back(parse_expression());
            } while (match(Tok::Comma));
        }
        expect(Tok::RParen);
        expect(Tok::Semi);
        return s;
    }
    case Tok::KwMinimize:
    case Tok::KwMaximize: {
        bool maximize = advance().type == Tok::KwMaximize;
        auto s = std::make_unique<Stmt>();
        s->tag = maximize ? Stmt::Tag::Maximize : Stmt::Tag::Minimize;
        s->loc = loc;
        expect(Tok::LParen);
        s->target = parse_var_ref();
        if (s->target.kind() != ValueKind::Numeric)
            fail("minimize/maximize require a numeric variable", s->target.loc);
        expect(Tok::Comma);
        s->range_lo = expect(Tok::IntLit, "numeric constant").int_value;
        expect(Tok::Comma);
        s->range_hi = expect(Tok::IntLit, "numeric constant").int_value;
        expect(Tok::RParen);
        expect(Tok::Semi);
        return s;
    }
    case Tok::KwAssert:
    case Tok::KwAssertAll: {
        bool all = advance().type == Tok::KwAssertAll;
        auto s = std::make_unique<Stmt>();
        s->tag = all ? Stmt::Tag::AssertAll : Stmt::Tag::Assert;
        s->loc = loc;
        expect(Tok::LParen);
        do {
            ExprPtr c = parse_expression();
            require_kind(*c, ValueKind::Boolean, "assert argument");
            s->conjuncts.push_back(std::move(c));
        } while (match(Tok::Semi));
        expect(Tok::RParen);
        expect(Tok::Semi);
        return s;
    }
    case Tok::KwPrint: {
        advance();
        auto s = std::make_unique<Stmt>();
        s->tag = Stmt::Tag::Print;
        s->loc = loc;
        s->expr = parse_expression();
        expect(Tok::Semi);
        return s;
    }
    case Tok::KwListVars: {
        advance();
        expect(Tok::Semi);
        auto s = std::make_unique<Stmt>();
        s->tag = Stmt::Tag::ListVars;
        s->loc = loc;
        return s;
    }
    case Tok::KwClear: {
        advance();
        expect(Tok::Semi);
        auto s = std::make_unique<Stmt>();
        s->tag = Stmt::Tag::Clear;
        s->loc = loc;
        return s;
    }
    case Tok::KwHalt: {
        advance();
        expect(Tok::Semi);
        auto s = std::make_unique<Stmt>();
        s->tag = Stmt::Tag::Halt;
        s->loc = loc;
        return s;
    }
    default:
        fail(std::string("expected statement, found ") + token_name(peek().type), loc);
    }
}

}  // namespace ursa
