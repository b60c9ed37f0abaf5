#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shlab/algebra.hpp"
#include "shlab/term.hpp"

namespace shlab {

using Assignment = std::map<std::string, int>;

inline int eval_term(const FiniteAlgebra& a, const Term& t,
                     const Assignment& v) {
  switch (t.op()) {
    case Op::var: {
      auto it = v.find(t.var_name());
      if (it == v.end())
        throw validation_error("unbound variable '" + t.var_name() + "'");
      if (it->second < 0 || it->second >= a.size())
        throw validation_error("assignment value out of range for '" +
                               t.var_name() + "'");
      return it->second;
    }
    case Op::zero: return a.zero();
    case Op::one: return a.one();
    case Op::neg: return a.neg(eval_term(a, *t.left(), v));
    case Op::meet:
      return a.meet(eval_term(a, *t.left(), v), eval_term(a, *t.right(), v));
    case Op::join:
      return a.join(eval_term(a, *t.left(), v), eval_term(a, *t.right(), v));
    case Op::imp:
      return a.imp(eval_term(a, *t.left(), v), eval_term(a, *t.right(), v));
  }
  throw validation_error("corrupt term");
}

inline int eval_term(const FiniteAlgebra& a, const TermPtr& t,
                     const Assignment& v) {
  return eval_term(a, *t, v);
}

// Postfix program for fast exhaustive loops; variable leaves are resolved to
// slots in a fixed variable order.
class CompiledTerm {
public:
  CompiledTerm(const Term& t, const std::vector<std::string>& var_order) {
    compile(t, var_order);
    stack_.resize(depth_);
  }

  int eval(const FiniteAlgebra& a, const std::vector<int>& vals) const {
    int sp = 0;
    for (const Instr& in : code_) {
      switch (in.op) {
        case Op::var: stack_[sp++] = vals[in.slot]; break;
        case Op::zero: stack_[sp++] = a.zero(); break;
        case Op::one: stack_[sp++] = a.one(); break;
        case Op::neg: stack_[sp - 1] = a.neg(stack_[sp - 1]); break;
        case Op::meet:
          --sp; stack_[sp - 1] = a.meet(stack_[sp - 1], stack_[sp]); break;
        case Op::join:
          --sp; stack_[sp - 1] = a.join(stack_[sp - 1], stack_[sp]); break;
        case Op::imp:
          --sp; stack_[sp - 1] = a.imp(stack_[sp - 1], stack_[sp]); break;
      }
    }
    return stack_[0];
  }

private:
  struct Instr { Op op; int slot; };

  void compile(const Term& t, const std::vector<std::string>& var_order) {
    if (t.left()) compile(*t.left(), var_order);
    if (t.right()) compile(*t.right(), var_order);
    int slot = -1;
    if (t.op() == Op::var) {
      auto it = std::find(var_order.begin(), var_order.end(), t.var_name());
      if (it == var_order.end())
        throw validation_error("unbound variable '" + t.var_name() + "'");
      slot = static_cast<int>(it - var_order.begin());
    }
    code_.push_back({t.op(), slot});
    int d = 0, m = 0;
    for (const Instr& in : code_) {
      if (in.op == Op::var || in.op == Op::zero || in.op == Op::one) ++d;
      else if (in.op != Op::neg) --d;
      m = std::max(m, d);
    }
    depth_ = m;
  }

  std::vector<Instr> code_;
  int depth_ = 0;
  mutable std::vector<int> stack_;
};

struct CheckResult {
  bool holds = true;
  std::optional<Assignment> witness;  // lexicographically least failure
};

// Exhaustive check over all |A|^k assignments, iterated in mixed-radix order
// over the identity's sorted variable list (first variable most significant),
// so the reported witness is the lexicographically least one.
inline CheckResult satisfies(const FiniteAlgebra& a, const Identity& id) {
  const int k = static_cast<int>(id.vars.size());
  CompiledTerm lhs(*id.lhs, id.vars), rhs(*id.rhs, id.vars);
  std::vector<int> vals(k, 0);
  while (true) {
    if (lhs.eval(a, vals) != rhs.eval(a, vals)) {
      Assignment w;
      for (int i = 0; i < k; ++i) w[id.vars[i]] = vals[i];
      return {false, std::move(w)};
    }
    int i = k - 1;
    while (i >= 0 && vals[i] == a.size() - 1) vals[i--] = 0;
    if (i < 0) break;
    ++vals[i];
  }
  return {};
}

// ---------------------------------------------------------------------------
// Built-in quantified conditions.  These are the statements that are not
// plain identities: guarded implications evaluated quantifier-faithfully,
// with the least failing assignment as witness.

struct Condition {
  std::string id;
  std::string description;
  std::function<CheckResult(const FiniteAlgebra&)> eval;
};

namespace detail {

template <typename F>
CheckResult forall1(const FiniteAlgebra& a, const char* var, F&& pred) {
  for (int x = 0; x < a.size(); ++x)
    if (!pred(x)) {
      CheckResult r;
      r.holds = false;
      r.witness = Assignment{{var, x}};
      return r;
    }
  return {};
}

template <typename F>
CheckResult forall2(const FiniteAlgebra& a, const char* v1, const char* v2,
                    F&& pred) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (!pred(x, y)) {
        CheckResult r;
        r.holds = false;
        r.witness = Assignment{{v1, x}, {v2, y}};
        return r;
      }
  return {};
}

}  // namespace detail

inline const std::vector<Condition>& builtin_conditions() {
  static const std::vector<Condition> table = {
      {"SC", "x != 1 implies x & x'* = 0",
       [](const FiniteAlgebra& a) {
         return detail::forall1(a, "x", [&](int x) {
           if (x == a.one()) return true;
           return a.meet(x, a.pseudocomplement(a.neg(x))) == a.zero();
         });
       }},
      {"dense-neg", "x = 1 or x' = 1 for all x",
       [](const FiniteAlgebra& a) {
         return detail::forall1(a, "x", [&](int x) {
           return x == a.one() || a.neg(x) == a.one();
         });
       }},
      {"neg-trichotomy", "x = 1 or x' = 1 or x' = x for all x",
       [](const FiniteAlgebra& a) {
         return detail::forall1(a, "x", [&](int x) {
           return x == a.one() || a.neg(x) == a.one() || a.neg(x) == x;
         });
       }},
      {"below-own-neg", "x != 1 implies x <= x'",
       [](const FiniteAlgebra& a) {
         return detail::forall1(a, "x", [&](int x) {
           return x == a.one() || a.leq(x, a.neg(x));
         });
       }},
      {"fix-join-top", "a' = a implies a | b | b* = 1",
       [](const FiniteAlgebra& a) {
         return detail::forall2(a, "a", "b", [&](int p, int q) {
           if (a.neg(p) != p) return true;
           return a.join(a.join(p, q), a.pseudocomplement(q)) == a.one();
         });
       }},
      {"fix-pseudo-fixed", "a' = a implies a*' = a*",
       [](const FiniteAlgebra& a) {
         return detail::forall1(a, "a", [&](int p) {
           if (a.neg(p) != p) return true;
           int s = a.pseudocomplement(p);
           return a.neg(s) == s;
         });
       }},
      {"fixpoint-height", "|L| > 2 and a' = a for some a imply height <= 2",
       [](const FiniteAlgebra& a) {
         if (a.size() <= 2) return CheckResult{};
         bool fix = false;
         for (int x = 0; x < a.size(); ++x)
           if (a.neg(x) == x) fix = true;
         if (!fix) return CheckResult{};
         CheckResult r;
         if (a.lattice().height() > 2) r.holds = false;
         return r;
       }},
      {"nonjoin-below-neg", "x | y != 1 implies x <= y'",
       [](const FiniteAlgebra& a) {
         return detail::forall2(a, "x", "y", [&](int x, int y) {
           if (a.join(x, y) == a.one()) return true;
           return a.leq(x, a.neg(y));
         });
       }},
      {"imp-collapse", "a' != a, a != 1, not a <= b imply (a -> b)'' = 0",
       [](const FiniteAlgebra& a) {
         return detail::forall2(a, "a", "b", [&](int p, int q) {
           if (a.neg(p) == p || p == a.one() || a.leq(p, q)) return true;
           return a.neg(a.neg(a.imp(p, q))) == a.zero();
         });
       }},
  };
  return table;
}

inline const Condition* find_condition(const std::string& id) {
  for (const Condition& c : builtin_conditions())
    if (c.id == id) return &c;
  return nullptr;
}

inline CheckResult satisfies_condition(const FiniteAlgebra& a,
                                       const std::string& id) {
  const Condition* c = find_condition(id);
  if (!c) throw validation_error("unknown condition id '" + id + "'");
  return c->eval(a);
}

}  // namespace shlab
