#ifndef URSA_PARSER_HPP
#define URSA_PARSER_HPP

#include <optional>
#include <variant>

#include "ursa/ast.hpp"
#include "ursa/lexer.hpp"

namespace ursa {

// Recursive-descent parser. Operator precedence is C's, with '^^' sitting
// between '&&' and '||'; all binary operators are left-associative.
// Numeric/Boolean kind rules are enforced here, so execution never sees a
// kind mismatch.
class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    bool at_eof() const { return peek().type == Tok::Eof; }

    // One procedure definition or one statement, for statement-at-a-time use.
    std::variant<Procedure, StmtPtr> parse_toplevel();

    AstProgram parse_program();

    ExprPtr parse_expression();  // exposed for tests

private:
    const Token& peek(size_t k = 0) const;
    const Token& advance();
    bool check(Tok t) const { return peek().type == t; }
    bool match(Tok t);
    const Token& expect(Tok t, const char* what = nullptr);
    [[noreturn]] void fail(const std::string& msg, SourceLoc loc) const;

    Procedure parse_procedure();
    StmtPtr parse_statement();
    StmtPtr parse_simple_statement(bool require_semi);  // assignment or postfix
    VarRef parse_var_ref();

    ExprPtr parse_binary(int level);
    ExprPtr parse_unary();
    ExprPtr parse_primary();

    ExprPtr mk_binary(BinOp op, ExprPtr a, ExprPtr b, SourceLoc loc);
    void require_kind(const Expr& e, ValueKind k, const char* context) const;

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

inline AstProgram parse_program(std::vector<Token> tokens) {
    return Parser(std::move(tokens)).parse_program();
}

inline AstProgram parse_program(std::string_view source) {
    return Parser(tokenize(source)).parse_program();
}

}  // namespace ursa

#endif
