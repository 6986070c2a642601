#include "term.hpp"

#include <algorithm>
#include <cassert>

namespace lc {

namespace {

size_t hashCombine(size_t h, size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

size_t hashNode(const TermNode& n) {
  size_t h = static_cast<size_t>(n.op);
  h = hashCombine(h, (static_cast<size_t>(n.sort.kind) << 8) | n.sort.width);
  h = hashCombine(h, n.a);
  h = hashCombine(h, n.b);
  h = hashCombine(h, std::hash<uint64_t>()(n.value));
  h = hashCombine(h, std::hash<std::string>()(n.name));
  for (const TermNode* k : n.kids) h = hashCombine(h, std::hash<const TermNode*>()(k));
  return h;
}

bool isCommutative(Op op) {
  switch (op) {
    case Op::BvAnd:
    case Op::BvOr:
    case Op::BvXor:
    case Op::BvAdd:
    case Op::BvMul:
      return true;
    default:
      return false;
  }
}

}  // namespace

bool TermManager::KeyEq::operator()(const NodeKey& x, const NodeKey& y) const {
  const TermNode& a = *x.n;
  const TermNode& b = *y.n;
  return a.op == b.op && a.sort == b.sort && a.a == b.a && a.b == b.b && a.value == b.value &&
         a.name == b.name && a.kids == b.kids;
}

TermManager::TermManager() {
  true_ = mkConstOfSort(Sort::boolean(), 1);
  false_ = mkConstOfSort(Sort::boolean(), 0);
}

Term TermManager::intern(TermNode&& n) {
  n.hash = hashNode(n);
  NodeKey probe{&n};
  auto it = table_.find(probe);
  if (it != table_.end()) return Term(it->n);
  nodes_.push_back(std::make_unique<TermNode>(std::move(n)));
  TermNode* stored = nodes_.back().get();
  table_.insert(NodeKey{stored});
  return Term(stored);
}

Term TermManager::mkConstOfSort(Sort s, uint64_t v) {
  TermNode n;
  n.op = Op::Const;
  n.sort = s;
  n.value = s.isBool() ? (v ? 1 : 0) : bv::trunc(v, s.width);
  return intern(std::move(n));
}

Term TermManager::mkVar(const std::string& name, Sort sort) {
  TermNode n;
  n.op = Op::Var;
  n.sort = sort;
  n.name = name;
  return intern(std::move(n));
}

Term TermManager::mkBool(bool v) { return v ? true_ : false_; }

Term TermManager::mkBv(unsigned width, uint64_t value) {
  assert(width >= 1 && width <= 64);
  return mkConstOfSort(Sort::bv(width), value);
}

Term TermManager::mkNot(Term t) {
  assert(t.isBool());
  if (t.isConst()) return mkBool(!t.constValue());
  if (t.op() == Op::Not) return t.kid(0);
  TermNode n;
  n.op = Op::Not;
  n.sort = Sort::boolean();
  n.kids = {t.node()};
  return intern(std::move(n));
}

Term TermManager::mkAnd(std::vector<Term> kids) {
  std::vector<const TermNode*> keep;
  for (Term k : kids) {
    assert(k.isBool());
    if (k.isConst()) {
      if (!k.constValue()) return false_;
      continue;  // drop neutral true
    }
    keep.push_back(k.node());
  }
  if (keep.empty()) return true_;
  if (keep.size() == 1) return Term(keep[0]);
  TermNode n;
  n.op = Op::And;
  n.sort = Sort::boolean();
  n.kids = std::move(keep);
  return intern(std::move(n));
}

Term TermManager::mkOr(std::vector<Term> kids) {
  std::vector<const TermNode*> keep;
  for (Term k : kids) {
    assert(k.isBool());
    if (k.isConst()) {
      if (k.constValue()) return true_;
      continue;
    }
    keep.push_back(k.node());
  }
  if (keep.empty()) return false_;
  if (keep.size() == 1) return Term(keep[0]);
  TermNode n;
  n.op = Op::Or;
  n.sort = Sort::boolean();
  n.kids = std::move(keep);
  return intern(std::move(n));
}

Term TermManager::mkImplies(Term a, Term b) {
  assert(a.isBool() && b.isBool());
  if (a.isConst()) return a.constValue() ? b : true_;
  if (b.isConst()) return b.constValue() ? true_ : mkNot(a);
  TermNode n;
  n.op = Op::Implies;
  n.sort = Sort::boolean();
  n.kids = {a.node(), b.node()};
  return intern(std::move(n));
}

Term TermManager::mkEq(Term a, Term b) {
  if (a.sort() != b.sort()) throw Error(ErrorKind::Width, "equality over mismatched sorts");
  if (a == b) return true_;
  if (a.isConst() && b.isConst()) return mkBool(a.constValue() == b.constValue());
  if (a.sort().isBool()) {
    if (a.isConst()) return a.constValue() ? b : mkNot(b);
    if (b.isConst()) return b.constValue() ? a : mkNot(a);
  }
  TermNode n;
  n.op = Op::Eq;
  n.sort = Sort::boolean();
  n.kids = {a.node(), b.node()};
  return intern(std::move(n));
}

Term TermManager::mkIte(Term c, Term t, Term e) {
  assert(c.isBool());
  if (t.sort() != e.sort()) throw Error(ErrorKind::Width, "ite branches of mismatched sorts");
  if (c.isConst()) return c.constValue() ? t : e;
  if (t == e) return t;
  if (t.sort().isBool() && t.isConst() && e.isConst()) {
    return t.constValue() ? c : mkNot(c);  // ite(c, true, false) / ite(c, false, true)
  }
  TermNode n;
  n.op = Op::Ite;
  n.sort = t.sort();
  n.kids = {c.node(), t.node(), e.node()};
  return intern(std::move(n));
}

Term TermManager::mkBvOp(Op op, Term a, Term b) {
  if (!a.sort().isBv() || a.sort() != b.sort())
    throw Error(ErrorKind::Width, "bit-vector operands of mismatched widths");
  unsigned w = a.width();
  bool isCmp = op == Op::BvUlt || op == Op::BvUle || op == Op::BvSlt || op == Op::BvSle;

  if (a.isConst() && b.isConst()) {
    uint64_t x = a.constValue(), y = b.constValue();
    switch (op) {
      case Op::BvAnd: return mkBv(w, x & y);
      case Op::BvOr: return mkBv(w, x | y);
      case Op::BvXor: return mkBv(w, x ^ y);
      case Op::BvAdd: return mkBv(w, bv::add(x, y, w));
      case Op::BvSub: return mkBv(w, bv::sub(x, y, w));
      case Op::BvMul: return mkBv(w, bv::mul(x, y, w));
      case Op::BvUdiv: return mkBv(w, bv::udiv(x, y, w));
      case Op::BvUrem: return mkBv(w, bv::urem(x, y, w));
      case Op::BvSdiv: return mkBv(w, bv::sdiv(x, y, w));
      case Op::BvSrem: return mkBv(w, bv::srem(x, y, w));
      case Op::BvShl: return mkBv(w, bv::shl(x, y, w));
      case Op::BvLshr: return mkBv(w, bv::lshr(x, y, w));
      case Op::BvAshr: return mkBv(w, bv::ashr(x, y, w));
      case Op::BvUlt: return mkBool(bv::ult(x, y, w));
      case Op::BvUle: return mkBool(bv::ule(x, y, w));
      case Op::BvSlt: return mkBool(bv::slt(x, y, w));
      case Op::BvSle: return mkBool(bv::sle(x, y, w));
      default: throw Error(ErrorKind::Internal, "mkBvOp: not a binary bv op");
    }
  }

  // Constants to the right for commutative operators.
  if (isCommutative(op) && a.isConst() && !b.isConst()) std::swap(a, b);

  if (b.isConst()) {
    uint64_t y = b.constValue();
    switch (op) {
      case Op::BvAdd:
        if (y == 0) return a;
        // (x + c1) + c2 -> x + (c1 + c2)
        if (a.op() == Op::BvAdd && a.kid(1).isConst())
          return mkBvOp(Op::BvAdd, a.kid(0), mkBv(w, bv::add(a.kid(1).constValue(), y, w)));
        break;
      case Op::BvSub:
        // x - c == x + (-c), which re-enables the constant-chain rule
        return mkBvOp(Op::BvAdd, a, mkBv(w, bv::neg(y, w)));
      case Op::BvMul:
        if (y == 0) return mkBv(w, 0);
        if (y == 1) return a;
        break;
      case Op::BvAnd:
        if (y == 0) return mkBv(w, 0);
        if (y == bv::mask(w)) return a;
        break;
      case Op::BvOr:
        if (y == 0) return a;
        if (y == bv::mask(w)) return mkBv(w, bv::mask(w));
        break;
      case Op::BvXor:
        if (y == 0) return a;
        break;
      case Op::BvShl:
      case Op::BvLshr:
      case Op::BvAshr:
        if (y == 0) return a;
        break;
      default:
        break;
    }
  }

  if (a == b) {
    switch (op) {
      case Op::BvSub:
      case Op::BvXor: return mkBv(w, 0);
      case Op::BvAnd:
      case Op::BvOr: return a;
      case Op::BvUlt:
      case Op::BvSlt: return false_;
      case Op::BvUle:
      case Op::BvSle: return true_;
      default: break;
    }
  }

  TermNode n;
  n.op = op;
  n.sort = isCmp ? Sort::boolean() : Sort::bv(w);
  n.kids = {a.node(), b.node()};
  return intern(std::move(n));
}

Term TermManager::mkBvNot(Term a) {
  assert(a.sort().isBv());
  if (a.isConst()) return mkBv(a.width(), ~a.constValue());
  if (a.op() == Op::BvNot) return a.kid(0);
  TermNode n;
  n.op = Op::BvNot;
  n.sort = a.sort();
  n.kids = {a.node()};
  return intern(std::move(n));
}

Term TermManager::mkBvNeg(Term a) {
  assert(a.sort().isBv());
  if (a.isConst()) return mkBv(a.width(), bv::neg(a.constValue(), a.width()));
  TermNode n;
  n.op = Op::BvNeg;
  n.sort = a.sort();
  n.kids = {a.node()};
  return intern(std::move(n));
}

Term TermManager::mkExtract(unsigned hi, unsigned lo, Term a) {
  if (!a.sort().isBv() || !(lo <= hi && hi < a.width()))
    throw Error(ErrorKind::Width, "extract bounds out of range");
  unsigned w = hi - lo + 1;
  if (hi == a.width() - 1 && lo == 0) return a;
  if (a.isConst()) return mkBv(w, a.constValue() >> lo);
  TermNode n;
  n.op = Op::Extract;
  n.sort = Sort::bv(w);
  n.a = hi;
  n.b = lo;
  n.kids = {a.node()};
  return intern(std::move(n));
}

Term TermManager::mkConcat(Term hi, Term lo) {
  assert(hi.sort().isBv() && lo.sort().isBv());
  unsigned w = hi.width() + lo.width();
  if (w > 64) throw Error(ErrorKind::Width, "concat wider than 64 bits");
  if (hi.isConst() && lo.isConst())
    return mkBv(w, (hi.constValue() << lo.width()) | lo.constValue());
  TermNode n;
  n.op = Op::Concat;
  n.sort = Sort::bv(w);
  n.kids = {hi.node(), lo.node()};
  return intern(std::move(n));
}

Term TermManager::mkZeroExt(unsigned newWidth, Term a) {
  assert(a.sort().isBv());
  if (newWidth < a.width() || newWidth > 64)
    throw Error(ErrorKind::Width, "zext target width out of range");
  if (newWidth == a.width()) return a;
  if (a.isConst()) return mkBv(newWidth, a.constValue());
  TermNode n;
  n.op = Op::ZeroExt;
  n.sort = Sort::bv(newWidth);
  n.a = newWidth;
  n.kids = {a.node()};
  return intern(std::move(n));
}

Term TermManager::mkSignExt(unsigned newWidth, Term a) {
  assert(a.sort().isBv());
  if (newWidth < a.width() || newWidth > 64)
    throw Error(ErrorKind::Width, "sext target width out of range");
  if (newWidth == a.width()) return a;
  if (a.isConst())
    return mkBv(newWidth, bv::trunc(static_cast<uint64_t>(bv::toSigned(a.constValue(), a.width())),
                                    newWidth));
  TermNode n;
  n.op = Op::SignExt;
  n.sort = Sort::bv(newWidth);
  n.a = newWidth;
  n.kids = {a.node()};
  return intern(std::move(n));
}

std::vector<Term> TermManager::variablesOf(Term t) const {
  std::vector<Term> out;
  std::unordered_set<const TermNode*> seen;
  std::vector<const TermNode*> stack{t.node()};
  while (!stack.empty()) {
    const TermNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->op == Op::Var) out.push_back(Term(n));
    for (auto it = n->kids.rbegin(); it != n->kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

bool TermManager::containsVar(Term t, const std::string& name) const {
  std::unordered_set<std::string> s{name};
  return containsAnyVar(t, s);
}

bool TermManager::containsAnyVar(Term t, const std::unordered_set<std::string>& names) const {
  std::unordered_set<const TermNode*> seen;
  std::vector<const TermNode*> stack{t.node()};
  while (!stack.empty()) {
    const TermNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->op == Op::Var && names.count(n->name)) return true;
    for (const TermNode* k : n->kids) stack.push_back(k);
  }
  return false;
}

Term TermManager::substitute(Term t, const std::unordered_map<std::string, Term>& map) {
  std::unordered_map<const TermNode*, Term> memo;
  auto rec = [&](auto&& self, Term u) -> Term {
    auto it = memo.find(u.node());
    if (it != memo.end()) return it->second;
    Term result = u;
    switch (u.op()) {
      case Op::Var: {
        auto m = map.find(u.varName());
        if (m != map.end()) {
          if (m->second.sort() != u.sort())
            throw Error(ErrorKind::Width, "substitution changes sort of " + u.varName());
          result = m->second;
        }
        break;
      }
      case Op::Const:
        break;
      default: {
        std::vector<Term> kids;
        kids.reserve(u.arity());
        bool changed = false;
        for (size_t i = 0; i < u.arity(); ++i) {
          Term k = self(self, u.kid(i));
          changed |= (k != u.kid(i));
          kids.push_back(k);
        }
        if (!changed) break;
        switch (u.op()) {
          case Op::Not: result = mkNot(kids[0]); break;
          case Op::And: result = mkAnd(kids); break;
          case Op::Or: result = mkOr(kids); break;
          case Op::Implies: result = mkImplies(kids[0], kids[1]); break;
          case Op::Eq: result = mkEq(kids[0], kids[1]); break;
          case Op::Ite: result = mkIte(kids[0], kids[1], kids[2]); break;
          case Op::BvNot: result = mkBvNot(kids[0]); break;
          case Op::BvNeg: result = mkBvNeg(kids[0]); break;
          case Op::Extract: result = mkExtract(u.node()->a, u.node()->b, kids[0]); break;
          case Op::Concat: result = mkConcat(kids[0], kids[1]); break;
          case Op::ZeroExt: result = mkZeroExt(u.node()->a, kids[0]); break;
          case Op::SignExt: result = mkSignExt(u.node()->a, kids[0]); break;
          default: result = mkBvOp(u.op(), kids[0], kids[1]); break;
        }
        break;
      }
    }
    memo.emplace(u.node(), result);
    return result;
  };
  return rec(rec, t);
}

uint64_t evalTerm(Term t, const std::unordered_map<std::string, uint64_t>& env) {
  std::unordered_map<const TermNode*, uint64_t> memo;
  auto rec = [&](auto&& self, Term u) -> uint64_t {
    auto it = memo.find(u.node());
    if (it != memo.end()) return it->second;
    uint64_t r = 0;
    unsigned w = u.sort().isBv() ? u.width() : 1;
    switch (u.op()) {
      case Op::Var: {
        auto e = env.find(u.varName());
        if (e == env.end())
          throw Error(ErrorKind::UnknownVariable, "no value for variable " + u.varName());
        r = u.sort().isBv() ? bv::trunc(e->second, w) : (e->second ? 1 : 0);
        break;
      }
      case Op::Const: r = u.constValue(); break;
      case Op::Not: r = !self(self, u.kid(0)); break;
      case Op::And: {
        r = 1;
        for (size_t i = 0; i < u.arity(); ++i) r = r && self(self, u.kid(i));
        break;
      }
      case Op::Or: {
        r = 0;
        for (size_t i = 0; i < u.arity(); ++i) r = r || self(self, u.kid(i));
        break;
      }
      case Op::Implies: r = !self(self, u.kid(0)) || self(self, u.kid(1)); break;
      case Op::Eq: r = self(self, u.kid(0)) == self(self, u.kid(1)); break;
      case Op::Ite: r = self(self, u.kid(0)) ? self(self, u.kid(1)) : self(self, u.kid(2)); break;
      case Op::BvNot: r = bv::trunc(~self(self, u.kid(0)), w); break;
      case Op::BvNeg: r = bv::neg(self(self, u.kid(0)), w); break;
      case Op::Extract: r = bv::trunc(self(self, u.kid(0)) >> u.node()->b, w); break;
      case Op::Concat:
        r = (self(self, u.kid(0)) << u.kid(1).width()) | self(self, u.kid(1));
        break;
      case Op::ZeroExt: r = self(self, u.kid(0)); break;
      case Op::SignExt:
        r = bv::trunc(
            static_cast<uint64_t>(bv::toSigned(self(self, u.kid(0)), u.kid(0).width())), w);
        break;
      default: {
        uint64_t x = self(self, u.kid(0)), y = self(self, u.kid(1));
        unsigned ow = u.kid(0).width();
        switch (u.op()) {
          case Op::BvAnd: r = x & y; break;
          case Op::BvOr: r = x | y; break;
          case Op::BvXor: r = x ^ y; break;
          case Op::BvAdd: r = bv::add(x, y, ow); break;
          case Op::BvSub: r = bv::sub(x, y, ow); break;
          case Op::BvMul: r = bv::mul(x, y, ow); break;
          case Op::BvUdiv: r = bv::udiv(x, y, ow); break;
          case Op::BvUrem: r = bv::urem(x, y, ow); break;
          case Op::BvSdiv: r = bv::sdiv(x, y, ow); break;
          case Op::BvSrem: r = bv::srem(x, y, ow); break;
          case Op::BvShl: r = bv::shl(x, y, ow); break;
          case Op::BvLshr: r = bv::lshr(x, y, ow); break;
          case Op::BvAshr: r = bv::ashr(x, y, ow); break;
          case Op::BvUlt: r = bv::ult(x, y, ow); break;
          case Op::BvUle: r = bv::ule(x, y, ow); break;
          case Op::BvSlt: r = bv::slt(x, y, ow); break;
          case Op::BvSle: r = bv::sle(x, y, ow); break;
          default: throw Error(ErrorKind::Internal, "evalTerm: unhandled operator");
        }
        break;
      }
    }
    memo.emplace(u.node(), r);
    return r;
  };
  return rec(rec, t);
}

}  // namespace lc
