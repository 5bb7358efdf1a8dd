#include "ursa/lexer.hpp"

#include <cctype>
#include <unordered_map>

namespace ursa {

namespace {

const std::unordered_map<std::string_view, Tok> kKeywords = {
    {"procedure", Tok::KwProcedure}, {"while", Tok::KwWhile},
    {"for", Tok::KwFor},             {"if", Tok::KwIf},
    {"else", Tok::KwElse},           {"call", Tok::KwCall},
    {"minimize", Tok::KwMinimize},   {"maximize", Tok::KwMaximize},
    {"assert", Tok::KwAssert},       {"assert_all", Tok::KwAssertAll},
    {"print", Tok::KwPrint},         {"listvars", Tok::KwListVars},
    {"clear", Tok::KwClear},         {"halt", Tok::KwHalt},
    {"true", Tok::KwTrue},           {"false", Tok::KwFalse},
    {"ite", Tok::KwIte},             {"sgn", Tok::KwSgn},
    {"bool2num", Tok::KwBool2Num},   {"num2bool", Tok::KwNum2Bool},
};

}  // namespace

const char* token_name(Tok t) {
    switch (t) {
    case Tok::Eof: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::IntLit: return "integer literal";
    case Tok::KwProcedure: return "'procedure'";
    case Tok::KwWhile: return "'while'";
    case Tok::KwFor: return "'for'";
    case Tok::KwIf: return "'if'";
    case Tok::KwElse: return "'else'";
    case Tok::KwCall: return "'call'";
    case Tok::KwMinimize: return "'minimize'";
    case Tok::KwMaximize: return "'maximize'";
    case Tok::KwAssert: return "'assert'";
    case Tok::KwAssertAll: return "'assert_all'";
    case Tok::KwPrint: return "'print'";
    case Tok::KwListVars: return "'listvars'";
    case Tok::KwClear: return "'clear'";
    case Tok::KwHalt: return "'halt'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::KwIte: return "'ite'";
    case Tok::KwSgn: return "'sgn'";
    case Tok::KwBool2Num: return "'bool2num'";
    case Tok::KwNum2Bool: return "'num2bool'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Assign: return "'='";
    case Tok::PlusAssign: return "'+='";
    case Tok::MinusAssign: return "'-='";
    case Tok::StarAssign: return "'*='";
    case Tok::AmpAssign: return "'&='";
    case Tok::PipeAssign: return "'|='";
    case Tok::CaretAssign: return "'^='";
    case Tok::ShlAssign: return "'<<='";
    case Tok::ShrAssign: return "'>>='";
    case Tok::AndAndAssign: return "'&&='";
    case Tok::OrOrAssign: return "'||='";
    case Tok::XorXorAssign: return "'^^='";
    case Tok::PlusPlus: return "'++'";
    case Tok::MinusMinus: return "'--'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::Caret: return "'^'";
    case Tok::Shl: return "'<<'";
    case Tok::Shr: return "'>>'";
    case Tok::Lt: return "'<'";
    case Tok::Gt: return "'>'";
    case Tok::Le: return "'<='";
    case Tok::Ge: return "'>='";
    case Tok::EqEq: return "'=='";
    case Tok::NotEq: return "'!='";
    case Tok::AndAnd: return "'&&'";
    case Tok::OrOr: return "'||'";
    case Tok::XorXor: return "'^^'";
    case Tok::Not: return "'!'";
    case Tok::Tilde: return "'~'";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    size_t i = 0, n = src.size();
    int line = 1, col = 1;

    auto advance = [&](size_t k) {
        for (size_t j = 0; j < k; ++j) {
            if (src[i + j] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += k;
    };
    auto peek = [&](size_t k) -> char { return i + k < n ? src[i + k] : '\0'; };
    auto push = [&](Tok t, size_t len) {
        Token tok;
        tok.type = t;
        tok.text = std::string(src.substr(i, len));
        tok.loc = {line, col};
        out.push_back(std::move(tok));
        advance(len);
    };

    while (i < n) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/') {
            if (peek(1) == '*') {
                SourceLoc open{line, col};
                advance(2);
                while (i < n && !(src[i] == '*' && peek(1) == '/')) advance(1);
                if (i >= n) throw LexError("unterminated comment", open);
                advance(2);
                continue;
            }
            throw LexError("illegal character '/'", {line, col});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t len = 1;
            while (i + len < n && std::isdigit(static_cast<unsigned char>(src[i + len]))) ++len;
            Token tok;
            tok.type = Tok::IntLit;
            tok.text = std::string(src.substr(i, len));
            tok.loc = {line, col};
            tok.int_value = std::stoull(tok.text);
            out.push_back(std::move(tok));
            advance(len);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t len = 1;
            while (i + len < n) {
                char d = src[i + len];
                if (std::isalnum(static_cast<unsigned char>(d)) || d == '_')
                    ++len;
                else
                    break;
            }
            std::string_view word = src.substr(i, len);
            auto kw = kKeywords.find(word);
            push(kw != kKeywords.end() ? kw->second : Tok::Ident, len);
            continue;
        }
        switch (c) {
        case '{': push(Tok::LBrace, 1); continue;
        case '}': push(Tok::RBrace, 1); continue;
        case '(': push(Tok::LParen, 1); continue;
        case ')': push(Tok::RParen, 1); continue;
        case '[': push(Tok::LBracket, 1); continue;
        case ']': push(Tok::RBracket, 1); continue;
        case ',': push(Tok::Comma, 1); continue;
        case ';': push(Tok::Semi, 1); continue;
        case '+':
            if (peek(1) == '+') push(Tok::PlusPlus, 2);
            else if (peek(1) == '=') push(Tok::PlusAssign, 2);
            else push(Tok::Plus, 1);
            continue;
        case '-':
            if (peek(1) == '-') push(Tok::MinusMinus, 2);
            else if (peek(1) == '=') push(Tok::MinusAssign, 2);
            else push(Tok::Minus, 1);
            continue;
        case '*':
            if (peek(1) == '=') push(Tok::StarAssign, 2);
            else push(Tok::Star, 1);
            continue;
        case '&':
            if (peek(1) == '&' && peek(2) == '=') push(Tok::AndAndAssign, 3);
            else if (peek(1) == '&') push(Tok::AndAnd, 2);
            else if (peek(1) == '=') push(Tok::AmpAssign, 2);
            else push(Tok::Amp, 1);
            continue;
        case '|':
            if (peek(1) == '|' && peek(2) == '=') push(Tok::OrOrAssign, 3);
            else if (peek(1) == '|') push(Tok::OrOr, 2);
            else if (peek(1) == '=') push(Tok::PipeAssign, 2);
            else push(Tok::Pipe, 1);
            continue;
        case '^':
            if (peek(1) == '^' && peek(2) == '=') push(Tok::XorXorAssign, 3);
            else if (peek(1) == '^') push(Tok::XorXor, 2);
            else if (peek(1) == '=') push(Tok::CaretAssign, 2);
            else push(Tok::Caret, 1);
            continue;
        case '<':
            if (peek(1) == '<' && peek(2) == '=') push(Tok::ShlAssign, 3);
            else if (peek(1) == '<') push(Tok::Shl, 2);
            else if (peek(1) == '=') push(Tok::Le, 2);
            else push(Tok::Lt, 1);
            continue;
        case '>':
            if (peek(1) == '>' && peek(2) == '=') push(Tok::ShrAssign, 3);
            else if (peek(1) == '>') push(Tok::Shr, 2);
            else if (peek(1) == '=') push(Tok::Ge, 2);
            else push(Tok::Gt, 1);
            continue;
        case '=':
            if (peek(1) == '=') push(Tok::EqEq, 2);
            else push(Tok::Assign, 1);
            continue;
        case '!':
            if (peek(1) == '=') push(Tok::NotEq, 2);
            else push(Tok::Not, 1);
            continue;
        case '~': push(Tok::Tilde, 1); continue;
        default:
            throw LexError(std::string("illegal character '") + c + "'", {line, col});
        }
    }

    Token eof;
    eof.type = Tok::Eof;
    eof.loc = {line, col};
    out.push_back(std::move(eof));
    return out;
}

}  // namespace ursa
