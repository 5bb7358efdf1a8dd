#include "ursa/bitvector.hpp"

#include <cassert>

namespace ursa::fvec {

FormulaVector from_const(FormulaFactory& f, uint64_t value, int width) {
    assert(width >= 1 && width <= 64);
    FormulaVector bits(size_t(width));
    for (int i = 0; i < width; ++i) {
        int shift = width - 1 - i;
        bool set = shift < 64 && ((value >> shift) & 1);
        bits[size_t(i)] = f.constant(set);
    }
    return bits;
}

std::optional<uint64_t> to_ground(const FormulaFactory& f, const FormulaVector& a) {
    uint64_t value = 0;
    for (FormulaRef bit : a) {
        if (!f.is_const(bit)) return std::nullopt;
        value = (value << 1) | (f.is_true(bit) ? 1u : 0u);
    }
    return value;
}

FormulaVector add(FormulaFactory& f, const FormulaVector& a, const FormulaVector& b) {
    assert(a.size() == b.size());
    size_t n = a.size();
    FormulaVector sum(n);
    FormulaRef carry;
    for (size_t i = n; i-- > 0;) {
        FormulaRef x = a[i], y = b[i];
        FormulaRef half = f.mk_xor(x, y);
        if (!carry.valid()) {
            sum[i] = half;
            carry = f.mk_and(x, y);
        } else {
            sum[i] = f.mk_xor(half, carry);
            if (i > 0)  // carry out of the top bit is discarded
                carry = f.mk_or(f.mk_and(x, y), f.mk_and(carry, half));
        }
    }
    return sum;
}

FormulaVector negate(FormulaFactory& f, const FormulaVector& a) {
    return add(f, bit_not(f, a), from_const(f, 1, int(a.size())));
}

FormulaVector sub(FormulaFactory& f, const FormulaVector& a, const FormulaVector& b) {
    return add(f, a, negate(f, b));
}

FormulaVector mul(FormulaFactory& f, const FormulaVector& a, const FormulaVector& b) {
    assert(a.size() == b.size());
    size_t n = a.size();
    FormulaVector acc = from_const(f, 0, int(n));
    for (size_t i = 0; i < n; ++i) {
        FormulaRef gate = b[n - 1 - i];  // bit i of b, counting from the LSB
        if (f.is_false(gate)) continue;
        FormulaVector part = shift(f, a, uint64_t(i), ShiftDir::Left);
        for (FormulaRef& bit : part) bit = f.mk_and(bit, gate);
        acc = add(f, acc, part);
    }
    return acc;
}

FormulaVector bit_and(FormulaFactory& f, const FormulaVector& a, const FormulaVector& b) {
    assert(a.size() == b.size());
    FormulaVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mk_and(a[i], b[i]);
    return r;
}

FormulaVector bit_or(FormulaFactory& f, const FormulaVector& a, const FormulaVector& b) {
    assert(a.size() == b.size());
    FormulaVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mk_or(a[i], b[i]);
    return r;
}

FormulaVector bit_xor(FormulaFactory& f, const FormulaVector& a, const FormulaVector& b) {
    assert(a.size() == b.size());
    FormulaVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mk_xor(a[i], b[i]);
    return r;
}

FormulaVector bit_not(FormulaFactory& f, const FormulaVector& a) {
    FormulaVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = f.mk_not(a[i]);
    return r;
}

FormulaVector shift(FormulaFactory& f, const FormulaVector& a, uint64_t amount, ShiftDir dir) {
    size_t n = a.size();
    size_t k = amount < n ? size_t(amount) : n;
    FormulaVector r(n, f.falsum());
    if (dir == ShiftDir::Left) {
        for (size_t i = k; i < n; ++i) r[i - k] = a[i];
    } else {
        for (size_t i = 0; i + k < n; ++i) r[i + k] = a[i];
    }
    return r;
}

FormulaVector shift(FormulaFactory& f, const FormulaVector& a, const FormulaVector& amount,
                    ShiftDir dir) {
    assert(a.size() == amount.size());
    size_t n = a.size();
    // Staged conditional shifts selected by the amount's bits; stages whose
    // stride reaches the width zero the vector out, so amounts >= n give 0.
    FormulaVector cur = a;
    for (size_t j = 0; j < n; ++j) {
        FormulaRef bit = amount[n - 1 - j];  // bit j, from the LSB
        if (f.is_false(bit)) continue;
        uint64_t stride = j < 63 ? (uint64_t(1) << j) : uint64_t(n);
        FormulaVector shifted = shift(f, cur, stride, dir);
        cur = mux(f, bit, shifted, cur);
    }
    return cur;
}

FormulaRef compare(FormulaFactory& f, Rel rel, const FormulaVector& a, const FormulaVector& b) {
    assert(a.size() == b.size());
    size_t n = a.size();
    switch (rel) {
    case Rel::Eq: {
        FormulaRef acc = f.mk_equiv(a[0], b[0]);
        for (size_t i = 1; i < n; ++i) acc = f.mk_and(acc, f.mk_equiv(a[i], b[i]));
        return acc;
    }
    case Rel::Ne:
        return f.mk_not(compare(f, Rel::Eq, a, b));
    case Rel::Gt: {
        // From the least significant bit upward: a bit where a exceeds b
        // decides unless a more significant bit differs.
        FormulaRef result = f.mk_and(a[n - 1], f.mk_not(b[n - 1]));
        for (size_t i = n - 1; i-- > 0;) {
            FormulaRef here = f.mk_and(a[i], f.mk_not(b[i]));
            result = f.mk_or(here, f.mk_and(result, f.mk_equiv(a[i], b[i])));
        }
        return result;
    }
    case Rel::Lt:
        return compare(f, Rel::Gt, b, a);
    case Rel::Le:
        return f.mk_not(compare(f, Rel::Gt, a, b));
    case Rel::Ge:
        return f.mk_not(compare(f, Rel::Gt, b, a));
    }
    return FormulaRef();
}

FormulaRef mux_bit(FormulaFactory& f, FormulaRef sel, FormulaRef a, FormulaRef c) {
    return f.mk_and(f.mk_or(f.mk_not(sel), a), f.mk_or(sel, c));
}

FormulaVector mux(FormulaFactory& f, FormulaRef sel, const FormulaVector& a,
                  const FormulaVector& c) {
    assert(a.size() == c.size());
    FormulaVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mux_bit(f, sel, a[i], c[i]);
    return r;
}

FormulaRef nonzero(FormulaFactory& f, const FormulaVector& a) {
    return f.mk_not(compare(f, Rel::Eq, a, from_const(f, 0, int(a.size()))));
}

FormulaVector from_bool(FormulaFactory& f, FormulaRef b, int width) {
    FormulaVector r(size_t(width), f.falsum());
    r[size_t(width) - 1] = b;
    return r;
}

FormulaVector signum(FormulaFactory& f, const FormulaVector& a) {
    return from_bool(f, nonzero(f, a), int(a.size()));
}

}  // namespace ursa::fvec
