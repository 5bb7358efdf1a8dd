#ifndef URSA_LEXER_HPP
#define URSA_LEXER_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ursa/error.hpp"

namespace ursa {

enum class Tok {
    Eof, Ident, IntLit,
    // keywords
    KwProcedure, KwWhile, KwFor, KwIf, KwElse, KwCall,
    KwMinimize, KwMaximize, KwAssert, KwAssertAll,
    KwPrint, KwListVars, KwClear, KwHalt,
    KwTrue, KwFalse, KwIte, KwSgn, KwBool2Num, KwNum2Bool,
    // punctuation
    LBrace, RBrace, LParen, RParen, LBracket, RBracket, Comma, Semi,
    // operators
    Assign, PlusAssign, MinusAssign, StarAssign, AmpAssign, PipeAssign,
    CaretAssign, ShlAssign, ShrAssign, AndAndAssign, OrOrAssign, XorXorAssign,
    PlusPlus, MinusMinus,
    Plus, Minus, Star, Amp, Pipe, Caret, Shl, Shr,
    Lt, Gt, Le, Ge, EqEq, NotEq,
    AndAnd, OrOr, XorXor, Not, Tilde
};

struct Token {
    Tok type = Tok::Eof;
    std::string text;
    uint64_t int_value = 0;
    SourceLoc loc;
};

const char* token_name(Tok t);

// C-style tokens; /* ... */ comments skipped. Throws LexError on characters
// outside the language (there is no division operator, so a '/' not opening
// a comment is illegal).
std::vector<Token> tokenize(std::string_view source);

}  // namespace ursa

#endif
