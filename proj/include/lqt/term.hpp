#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <sstream>
#include <string>

#include "lqt/left_quasigroup.hpp"

namespace lqt {

// Abstract syntax tree over variables and the two binary symbols. Immutable;
// subtrees are shared.
class Term {
 public:
  static Term var(int index) {
    if (index < 0) throw std::invalid_argument("negative variable index");
    return Term(std::make_shared<Node>(Node{Kind::Var, index, nullptr, nullptr}));
  }
  static Term mul(Term l, Term r) {
    return Term(std::make_shared<Node>(Node{Kind::Mul, -1, l.node_, r.node_}));
  }
  static Term ldiv(Term l, Term r) {
    return Term(std::make_shared<Node>(Node{Kind::LDiv, -1, l.node_, r.node_}));
  }

  // 1 + largest variable index.
  int arity() const { return max_var(node_.get()) + 1; }

  Point eval(const LeftQuasigroup& q, std::span<const Point> args) const {
    if (static_cast<int>(args.size()) < arity())
      throw std::invalid_argument("eval_term: not enough arguments");
    return eval_node(node_.get(), q, args);
  }

  std::string to_string() const {
    std::ostringstream os;
    print(node_.get(), os);
    return os.str();
  }

  // Pseudorandom term of depth <= max_depth over at most `arity` variables.
  // Variables are relabeled by first occurrence so the used indices are
  // contiguous from 0.
  static Term random(int arity, int max_depth, Rng& rng) {
    Term t = random_raw(arity, max_depth, rng);
    std::vector<int> relabel(arity, -1);
    int next = 0;
    return Term(relabel_node(t.node_, relabel, next));
  }

 private:
  enum class Kind { Var, Mul, LDiv };
  struct Node {
    Kind kind;
    int var;
    std::shared_ptr<const Node> left, right;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static int max_var(const Node* n) {
    if (n->kind == Kind::Var) return n->var;
    return std::max(max_var(n->left.get()), max_var(n->right.get()));
  }

  static Point eval_node(const Node* n, const LeftQuasigroup& q, std::span<const Point> args) {
    switch (n->kind) {
      case Kind::Var:
        return args[n->var];
      case Kind::Mul:
        return q.op(eval_node(n->left.get(), q, args), eval_node(n->right.get(), q, args));
      default:
        return q.ldiv(eval_node(n->left.get(), q, args), eval_node(n->right.get(), q, args));
    }
  }

  static void print(const Node* n, std::ostringstream& os) {
    if (n->kind == Kind::Var) {
      os << 'x' << n->var;
      return;
    }
    os << '(';
    print(n->left.get(), os);
    os << (n->kind == Kind::Mul ? "*" : "\\");
    print(n->right.get(), os);
    os << ')';
  }

  static Term random_raw(int arity, int depth, Rng& rng) {
    if (depth == 0 || rng.below(10) < 3) return var(static_cast<int>(rng.below(arity)));
    Term l = random_raw(arity, depth - 1, rng);
    Term r = random_raw(arity, depth - 1, rng);
    return rng.below(2) ? mul(l, r) : ldiv(l, r);
  }

  static std::shared_ptr<const Node> relabel_node(const std::shared_ptr<const Node>& n,
                                                  std::vector<int>& relabel, int& next) {
    if (n->kind == Kind::Var) {
      if (relabel[n->var] < 0) relabel[n->var] = next++;
      return std::make_shared<Node>(Node{Kind::Var, relabel[n->var], nullptr, nullptr});
    }
    auto l = relabel_node(n->left, relabel, next);
    auto r = relabel_node(n->right, relabel, next);
    return std::make_shared<Node>(Node{n->kind, -1, std::move(l), std::move(r)});
  }

  std::shared_ptr<const Node> node_;
};

}  // namespace lqt
