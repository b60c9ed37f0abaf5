#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shlab/core.hpp"

namespace shlab {

enum class Op : unsigned char { var, zero, one, neg, meet, join, imp };

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Immutable term tree over the signature {&, |, ->, ', 0, 1}.  The postfix
// sugar * and + is eliminated by the builders below, so evaluation only ever
// sees the basic signature.
class Term {
public:
  static TermPtr var(std::string name) {
    return std::make_shared<Term>(Op::var, std::move(name), nullptr, nullptr);
  }
  static TermPtr zero() { return std::make_shared<Term>(Op::zero, "", nullptr, nullptr); }
  static TermPtr one() { return std::make_shared<Term>(Op::one, "", nullptr, nullptr); }
  static TermPtr neg(TermPtr t) {
    return std::make_shared<Term>(Op::neg, "", std::move(t), nullptr);
  }
  static TermPtr meet(TermPtr l, TermPtr r) {
    return std::make_shared<Term>(Op::meet, "", std::move(l), std::move(r));
  }
  static TermPtr join(TermPtr l, TermPtr r) {
    return std::make_shared<Term>(Op::join, "", std::move(l), std::move(r));
  }
  static TermPtr imp(TermPtr l, TermPtr r) {
    return std::make_shared<Term>(Op::imp, "", std::move(l), std::move(r));
  }
  // t* := t -> 0
  static TermPtr star(TermPtr t) { return imp(std::move(t), zero()); }
  // t+ := ((t')*)'
  static TermPtr plus(TermPtr t) { return neg(star(neg(std::move(t)))); }

  Term(Op op, std::string v, TermPtr l, TermPtr r)
      : op_(op), var_(std::move(v)), left_(std::move(l)), right_(std::move(r)) {
    nodes_ = 1;
    if (left_) nodes_ += left_->nodes_;
    if (right_) nodes_ += right_->nodes_;
  }

  Op op() const { return op_; }
  const std::string& var_name() const { return var_; }
  const TermPtr& left() const { return left_; }
  const TermPtr& right() const { return right_; }
  int node_count() const { return nodes_; }

  void collect_vars(std::set<std::string>& out) const {
    if (op_ == Op::var) out.insert(var_);
    if (left_) left_->collect_vars(out);
    if (right_) right_->collect_vars(out);
  }

  std::vector<std::string> vars() const {
    std::set<std::string> s;
    collect_vars(s);
    return {s.begin(), s.end()};
  }

  bool equals(const Term& o) const {
    if (op_ != o.op_ || var_ != o.var_) return false;
    if (!!left_ != !!o.left_ || !!right_ != !!o.right_) return false;
    if (left_ && !left_->equals(*o.left_)) return false;
    if (right_ && !right_->equals(*o.right_)) return false;
    return true;
  }

private:
  Op op_;
  std::string var_;
  TermPtr left_, right_;
  int nodes_;
};

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  return a && b && a->equals(*b);
}

// x^{n('*)}: apply t |-> (t')* n times to the variable.
inline TermPtr xn_star_term(int n, const std::string& var = "x") {
  TermPtr t = Term::var(var);
  for (int i = 0; i < n; ++i) t = Term::star(Term::neg(t));
  return t;
}

// t_0(x) = x,  t_{n+1}(x) = t_n(x) & x^{(n+1)('*)}
inline TermPtr t_n_term(int n, const std::string& var = "x") {
  TermPtr t = Term::var(var);
  for (int i = 1; i <= n; ++i) t = Term::meet(t, xn_star_term(i, var));
  return t;
}

// ---------------------------------------------------------------------------
// Pretty-printing with minimal parentheses.
//
// Binding strength: postfix ' (tightest), then &, then |, then -> (loosest,
// right-associative).  & and | associate to the left; a right-nested & or |
// keeps its parentheses so that parsing is an exact inverse.

namespace detail {

enum { prec_imp = 0, prec_join = 1, prec_meet = 2, prec_atom = 3 };

inline int precedence(Op op) {
  switch (op) {
    case Op::imp: return prec_imp;
    case Op::join: return prec_join;
    case Op::meet: return prec_meet;
    default: return prec_atom;
  }
}

inline void pretty_rec(const Term& t, int context, bool right_of_same,
                       std::string& out) {
  const int p = precedence(t.op());
  const bool parens =
      p < context || (p == context && right_of_same && p != prec_imp);
  if (parens) out += '(';
  switch (t.op()) {
    case Op::var: out += t.var_name(); break;
    case Op::zero: out += '0'; break;
    case Op::one: out += '1'; break;
    case Op::neg: {
      // postfix: operand must be at least atom-tight
      const Term& s = *t.left();
      if (precedence(s.op()) < prec_atom) {
        out += '(';
        pretty_rec(s, prec_imp, false, out);
        out += ')';
      } else {
        pretty_rec(s, prec_atom, false, out);
      }
      out += '\'';
      break;
    }
    case Op::meet:
      pretty_rec(*t.left(), prec_meet, false, out);
      out += " & ";
      pretty_rec(*t.right(), prec_meet, true, out);
      break;
    case Op::join:
      pretty_rec(*t.left(), prec_join, false, out);
      out += " | ";
      pretty_rec(*t.right(), prec_join, true, out);
      break;
    case Op::imp:
      // compound left operands keep their parentheses: (x | y) -> z
      pretty_rec(*t.left(), prec_atom, false, out);
      out += " -> ";
      pretty_rec(*t.right(), prec_imp, false, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

inline std::string pretty(const Term& t) {
  std::string out;
  detail::pretty_rec(t, detail::prec_imp, false, out);
  return out;
}

inline std::string pretty(const TermPtr& t) { return pretty(*t); }

// ---------------------------------------------------------------------------
// Exhaustive term enumeration, ordered by node count, then by root
// constructor (Var < 0 < 1 < ' < & < | < ->), variables in the given order,
// children compared recursively left to right.  The stream is the reference
// order for bounded searches; yield may return false to stop.

class TermEnumerator {
public:
  TermEnumerator(std::vector<std::string> vars, int max_nodes)
      : vars_(std::move(vars)), max_nodes_(max_nodes) {
    if (max_nodes_ < 0) throw validation_error("term bound must be >= 0");
  }

  void run(const std::function<bool(const TermPtr&)>& yield) {
    for (int size = 1; size <= max_nodes_; ++size)
      for (const TermPtr& t : of_size(size))
        if (!yield(t)) return;
  }

  // All terms with exactly `size` nodes, in stream order (memoized).
  const std::vector<TermPtr>& of_size(int size) {
    while (static_cast<int>(by_size_.size()) <= size) build_next();
    return by_size_[size];
  }

private:
  void build_next() {
    const int size = static_cast<int>(by_size_.size());
    std::vector<TermPtr> out;
    if (size == 0) {
      by_size_.push_back(std::move(out));
      return;
    }
    if (size == 1) {
      for (const auto& v : vars_) out.push_back(Term::var(v));
      out.push_back(Term::zero());
      out.push_back(Term::one());
    } else {
      for (const TermPtr& s : by_size_[size - 1]) out.push_back(Term::neg(s));
      for (auto make : {&Term::meet, &Term::join, &Term::imp})
        for (int ls = 1; ls <= size - 2; ++ls)
          for (const TermPtr& l : by_size_[ls])
            for (const TermPtr& r : by_size_[size - 1 - ls])
              out.push_back(make(l, r));
    }
    by_size_.push_back(std::move(out));
  }

  std::vector<std::string> vars_;
  int max_nodes_;
  std::vector<std::vector<TermPtr>> by_size_;
};

inline void iter_terms(const std::vector<std::string>& vars, int max_nodes,
                       const std::function<bool(const TermPtr&)>& yield) {
  TermEnumerator(vars, max_nodes).run(yield);
}

inline std::vector<TermPtr> terms_up_to(const std::vector<std::string>& vars,
                                        int max_nodes) {
  std::vector<TermPtr> out;
  iter_terms(vars, max_nodes, [&](const TermPtr& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------

struct Identity {
  TermPtr lhs, rhs;
  // Sorted union of both sides' variables; witness assignments are reported
  // as tuples over this order.
  std::vector<std::string> vars;

  Identity() = default;
  Identity(TermPtr l, TermPtr r) : lhs(std::move(l)), rhs(std::move(r)) {
    std::set<std::string> s;
    lhs->collect_vars(s);
    rhs->collect_vars(s);
    vars.assign(s.begin(), s.end());
  }
};

}  // namespace shlab
