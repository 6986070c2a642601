// Fixed-width bit-vector arithmetic over uint64_t payloads.
// All operations follow SMT-LIB QF_BV semantics, including the
// total-function conventions for division by zero.

#pragma once

#include <cassert>
#include <cstdint>

namespace lc::bv {

inline uint64_t mask(unsigned w) {
  assert(w >= 1 && w <= 64);
  return w == 64 ? ~0ull : ((1ull << w) - 1);
}

inline uint64_t trunc(uint64_t v, unsigned w) { return v & mask(w); }

inline bool signBit(uint64_t v, unsigned w) { return (v >> (w - 1)) & 1; }

// Sign-extend a w-bit value to the full 64-bit two's complement form.
inline int64_t toSigned(uint64_t v, unsigned w) {
  if (signBit(v, w)) return static_cast<int64_t>(v | ~mask(w));
  return static_cast<int64_t>(v);
}

inline uint64_t add(uint64_t a, uint64_t b, unsigned w) { return trunc(a + b, w); }
inline uint64_t sub(uint64_t a, uint64_t b, unsigned w) { return trunc(a - b, w); }
inline uint64_t mul(uint64_t a, uint64_t b, unsigned w) { return trunc(a * b, w); }
inline uint64_t neg(uint64_t a, unsigned w) { return trunc(~a + 1, w); }

inline uint64_t udiv(uint64_t a, uint64_t b, unsigned w) {
  if (b == 0) return mask(w);  // bvudiv(x, 0) = all ones
  return trunc(a / b, w);
}

inline uint64_t urem(uint64_t a, uint64_t b, unsigned w) {
  if (b == 0) return trunc(a, w);  // bvurem(x, 0) = x
  return trunc(a % b, w);
}

inline uint64_t sdiv(uint64_t a, uint64_t b, unsigned w) {
  bool sa = signBit(a, w), sb = signBit(b, w);
  uint64_t ma = sa ? neg(a, w) : a;
  uint64_t mb = sb ? neg(b, w) : b;
  uint64_t q = udiv(ma, mb, w);
  return (sa != sb) ? neg(q, w) : q;
}

inline uint64_t srem(uint64_t a, uint64_t b, unsigned w) {
  bool sa = signBit(a, w), sb = signBit(b, w);
  uint64_t ma = sa ? neg(a, w) : a;
  uint64_t mb = sb ? neg(b, w) : b;
  uint64_t r = urem(ma, mb, w);
  return sa ? neg(r, w) : r;  // remainder takes the sign of the dividend
}

inline uint64_t shl(uint64_t a, uint64_t s, unsigned w) {
  if (s >= w) return 0;
  return trunc(a << s, w);
}

inline uint64_t lshr(uint64_t a, uint64_t s, unsigned w) {
  if (s >= w) return 0;
  return trunc(a, w) >> s;
}

inline uint64_t ashr(uint64_t a, uint64_t s, unsigned w) {
  bool sign = signBit(a, w);
  if (s >= w) return sign ? mask(w) : 0;
  uint64_t r = trunc(a, w) >> s;
  if (sign && s > 0) r |= mask(w) & ~(mask(w) >> s);
  return r;
}

inline bool ult(uint64_t a, uint64_t b, unsigned w) { return trunc(a, w) < trunc(b, w); }
inline bool ule(uint64_t a, uint64_t b, unsigned w) { return trunc(a, w) <= trunc(b, w); }
inline bool slt(uint64_t a, uint64_t b, unsigned w) { return toSigned(a, w) < toSigned(b, w); }
inline bool sle(uint64_t a, uint64_t b, unsigned w) { return toSigned(a, w) <= toSigned(b, w); }

}  // namespace lc::bv
