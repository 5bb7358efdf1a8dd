#ifndef URSA_BITVECTOR_HPP
#define URSA_BITVECTOR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ursa/formula.hpp"

namespace ursa {

// Fixed-width unsigned integer as a vector of formulas, most significant
// bit first. Width is the session bit length for numeric values.
using FormulaVector = std::vector<FormulaRef>;

namespace fvec {

enum class Rel { Lt, Gt, Le, Ge, Eq, Ne };
enum class ShiftDir { Left, Right };

// Constant bits of value mod 2^width.
FormulaVector from_const(FormulaFactory& f, uint64_t value, int width);

// Encoded integer when every bit is a constant node.
std::optional<uint64_t> to_ground(const FormulaFactory& f, const FormulaVector& a);

// Ripple-carry sum mod 2^n; the carry out of the top bit is dropped.
FormulaVector add(FormulaFactory& f, const FormulaVector& a, const FormulaVector& b);

// Two's complement: (~a)+1 mod 2^n.
FormulaVector negate(FormulaFactory& f, const FormulaVector& a);
FormulaVector sub(FormulaFactory& f, const FormulaVector& a, const FormulaVector& b);

// Shift-and-add product mod 2^n.
FormulaVector mul(FormulaFactory& f, const FormulaVector& a, const FormulaVector& b);

FormulaVector bit_and(FormulaFactory& f, const FormulaVector& a, const FormulaVector& b);
FormulaVector bit_or(FormulaFactory& f, const FormulaVector& a, const FormulaVector& b);
FormulaVector bit_xor(FormulaFactory& f, const FormulaVector& a, const FormulaVector& b);
FormulaVector bit_not(FormulaFactory& f, const FormulaVector& a);

// Logical shift with zero fill; amounts at or past the width give zero.
FormulaVector shift(FormulaFactory& f, const FormulaVector& a, uint64_t amount, ShiftDir dir);

// Barrel shifter over a symbolic amount of the same width.
FormulaVector shift(FormulaFactory& f, const FormulaVector& a, const FormulaVector& amount,
                    ShiftDir dir);

// Unsigned comparison; returns a single formula.
FormulaRef compare(FormulaFactory& f, Rel rel, const FormulaVector& a, const FormulaVector& b);

// (sel => a_i) and (~sel => c_i), per bit.
FormulaRef mux_bit(FormulaFactory& f, FormulaRef sel, FormulaRef a, FormulaRef c);
FormulaVector mux(FormulaFactory& f, FormulaRef sel, const FormulaVector& a,
                  const FormulaVector& c);

// num2bool: true iff the vector is nonzero.
FormulaRef nonzero(FormulaFactory& f, const FormulaVector& a);

// bool2num: [false, ..., false, b].
FormulaVector from_bool(FormulaFactory& f, FormulaRef b, int width);

// 0 if a = 0, else 1.
FormulaVector signum(FormulaFactory& f, const FormulaVector& a);

}  // namespace fvec
}  // namespace ursa

#endif
