// First-order term IR over Booleans and fixed-width bit-vectors.
//
// Terms are immutable, hash-consed nodes owned by a TermManager. Structural
// equality is pointer equality. The mk* constructors apply a small set of
// equivalence-preserving rewrites (constant folding, neutral elements,
// x - x -> 0, constant chains) so that symbolic states stay in a canonical
// form. A manager is not thread-safe for construction; built terms may be
// read from any thread.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "bv.hpp"
#include "error.hpp"

namespace lc {

struct Sort {
  enum Kind : uint8_t { Bool, BV } kind = Bool;
  uint8_t width = 0;  // meaningful for BV only

  static Sort boolean() { return {Bool, 0}; }
  static Sort bv(unsigned w) { return {BV, static_cast<uint8_t>(w)}; }
  bool isBool() const { return kind == Bool; }
  bool isBv() const { return kind == BV; }
  bool operator==(const Sort& o) const { return kind == o.kind && width == o.width; }
  bool operator!=(const Sort& o) const { return !(*this == o); }
};

enum class Op : uint8_t {
  Var,
  Const,
  // Boolean structure
  Not,
  And,   // n-ary
  Or,    // n-ary
  Implies,
  Eq,    // Bool x Bool or BV x BV -> Bool
  Ite,   // Bool x T x T -> T
  // bit-vector operators
  BvNot,
  BvNeg,
  BvAnd,
  BvOr,
  BvXor,
  BvAdd,
  BvSub,
  BvMul,
  BvUdiv,
  BvUrem,
  BvSdiv,
  BvSrem,
  BvShl,
  BvLshr,
  BvAshr,
  BvUlt,
  BvUle,
  BvSlt,
  BvSle,
  Extract,  // params a=hi, b=lo
  Concat,   // kids[0] is the high part
  ZeroExt,  // param a = result width
  SignExt,  // param a = result width
};

class TermManager;

struct TermNode {
  Op op;
  Sort sort;
  uint32_t a = 0, b = 0;   // operator parameters (extract bounds, extension width)
  uint64_t value = 0;      // Const payload
  std::string name;        // Var payload
  std::vector<const TermNode*> kids;
  size_t hash = 0;
};

// Lightweight handle; null() compares equal to nothing but itself.
class Term {
 public:
  Term() = default;
  explicit Term(const TermNode* n) : n_(n) {}

  bool isNull() const { return n_ == nullptr; }
  const TermNode* node() const { return n_; }
  Op op() const { return n_->op; }
  Sort sort() const { return n_->sort; }
  bool isBool() const { return n_->sort.isBool(); }
  unsigned width() const { return n_->sort.width; }
  bool isVar() const { return n_->op == Op::Var; }
  bool isConst() const { return n_->op == Op::Const; }
  uint64_t constValue() const { return n_->value; }
  const std::string& varName() const { return n_->name; }
  size_t arity() const { return n_->kids.size(); }
  Term kid(size_t i) const { return Term(n_->kids[i]); }

  bool operator==(const Term& o) const { return n_ == o.n_; }
  bool operator!=(const Term& o) const { return n_ != o.n_; }

 private:
  const TermNode* n_ = nullptr;
};

struct TermHash {
  size_t operator()(const Term& t) const { return std::hash<const TermNode*>()(t.node()); }
};

class TermManager {
 public:
  TermManager();
  TermManager(const TermManager&) = delete;
  TermManager& operator=(const TermManager&) = delete;

  Term mkVar(const std::string& name, Sort sort);
  Term mkBool(bool v);
  Term mkBv(unsigned width, uint64_t value);

  Term mkNot(Term t);
  Term mkAnd(std::vector<Term> kids);
  Term mkAnd(Term a, Term b) { return mkAnd(std::vector<Term>{a, b}); }
  Term mkOr(std::vector<Term> kids);
  Term mkOr(Term a, Term b) { return mkOr(std::vector<Term>{a, b}); }
  Term mkImplies(Term a, Term b);
  Term mkEq(Term a, Term b);
  Term mkDistinct(Term a, Term b) { return mkNot(mkEq(a, b)); }
  Term mkIte(Term c, Term t, Term e);

  Term mkBvOp(Op op, Term a, Term b);  // binary bit-vector op or comparison
  Term mkBvNot(Term a);
  Term mkBvNeg(Term a);
  Term mkExtract(unsigned hi, unsigned lo, Term a);
  Term mkConcat(Term hi, Term lo);
  Term mkZeroExt(unsigned newWidth, Term a);
  Term mkSignExt(unsigned newWidth, Term a);

  Term trueTerm() const { return true_; }
  Term falseTerm() const { return false_; }

  // Collects variable nodes reachable from t, in first-occurrence order.
  std::vector<Term> variablesOf(Term t) const;
  bool containsVar(Term t, const std::string& name) const;
  bool containsAnyVar(Term t, const std::unordered_set<std::string>& names) const;

  // Replaces free variables by name. Unmapped variables stay untouched.
  Term substitute(Term t, const std::unordered_map<std::string, Term>& map);

  size_t numNodes() const { return nodes_.size(); }

 private:
  Term intern(TermNode&& n);
  Term mkConstOfSort(Sort s, uint64_t v);

  struct NodeKey {
    const TermNode* n;
  };
  struct KeyHash {
    size_t operator()(const NodeKey& k) const { return k.n->hash; }
  };
  struct KeyEq {
    bool operator()(const NodeKey& x, const NodeKey& y) const;
  };

  std::vector<std::unique_ptr<TermNode>> nodes_;
  std::unordered_set<NodeKey, KeyHash, KeyEq> table_;
  Term true_, false_;
};

// Evaluates t under a total assignment of its variables (Bools as 0/1).
// Throws Error(UnknownVariable) when a variable is missing from env.
uint64_t evalTerm(Term t, const std::unordered_map<std::string, uint64_t>& env);

}  // namespace lc
