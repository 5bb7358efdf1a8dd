#ifndef URSA_PRINT_HPP
#define URSA_PRINT_HPP

#include <string>

#include "ursa/ast.hpp"

namespace ursa {

// Source text for an AST, fully parenthesized; reparsing yields a
// structurally identical tree.
std::string to_text(const Expr& e);
std::string to_text(const Stmt& s, int indent = 0);
std::string to_text(const AstProgram& p);

}  // namespace ursa

#endif
