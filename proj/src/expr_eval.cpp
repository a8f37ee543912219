#include <algorithm>

#include "unc/error.hpp"
#include "unc/expr.hpp"
#include "unc/kernels.hpp"

namespace unc {

UncertainScalar eval_uncertain(const Expr& e, const UncertainEnv& env) {
  return std::visit(
      [&](const auto& n) -> UncertainScalar {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Constant>) {
          return {n.value, 0.0};
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          const auto it = env.find(n.name);
          if (it == env.end()) throw UnboundVariable(n.name);
          return it->second;
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          return kernels::propagate_scalar(n.fn, eval_uncertain(*n.operand, env));
        } else {
          const auto lhs = eval_uncertain(*n.lhs, env);
          const auto rhs = eval_uncertain(*n.rhs, env);
          return kernels::propagate_scalar(n.fn, lhs, rhs);
        }
      },
      e.node);
}

double eval_numeric(const Expr& e, const NumericEnv& env) {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Constant>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          const auto it = env.find(n.name);
          if (it == env.end()) throw UnboundVariable(n.name);
          return it->second;
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          return apply(n.fn, eval_numeric(*n.operand, env));
        } else {
          const double lhs = eval_numeric(*n.lhs, env);
          const double rhs = eval_numeric(*n.rhs, env);
          return apply(n.fn, lhs, rhs);
        }
      },
      e.node);
}

BoundExpr::BoundExpr(const Expr& e, std::span<const std::string> slots)
    : slot_count_(slots.size()) {
  emit(e, slots, 1);
}

void BoundExpr::emit(const Expr& e, std::span<const std::string> slots, std::size_t depth) {
  max_depth_ = std::max(max_depth_, depth);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Expr::Constant>) {
          program_.push_back({Op::constant, UnaryFn::neg, BinaryFn::add, n.value, 0});
        } else if constexpr (std::is_same_v<T, Expr::Variable>) {
          const auto it = std::find(slots.begin(), slots.end(), n.name);
          if (it == slots.end()) throw UnboundVariable(n.name);
          program_.push_back({Op::load, UnaryFn::neg, BinaryFn::add, 0.0,
                              static_cast<std::size_t>(it - slots.begin())});
        } else if constexpr (std::is_same_v<T, Expr::Unary>) {
          emit(*n.operand, slots, depth);
          program_.push_back({Op::unary, n.fn, BinaryFn::add, 0.0, 0});
        } else {
          emit(*n.lhs, slots, depth);
          emit(*n.rhs, slots, depth + 1);
          program_.push_back({Op::binary, UnaryFn::neg, n.fn, 0.0, 0});
        }
      },
      e.node);
}

double BoundExpr::eval(std::span<const double> inputs) const {
  // Small fixed stack covers typical expressions without allocating.
  constexpr std::size_t kInline = 32;
  double inline_stack[kInline]{};
  std::vector<double> heap_stack;
  double* stack = inline_stack;
  if (max_depth_ > kInline) {
    heap_stack.resize(max_depth_);
    stack = heap_stack.data();
  }

  std::size_t top = 0;
  for (const Instr& in : program_) {
    switch (in.op) {
      case Op::constant: stack[top++] = in.constant; break;
      case Op::load: stack[top++] = inputs[in.slot]; break;
      case Op::unary: stack[top - 1] = apply(in.ufn, stack[top - 1]); break;
      case Op::binary:
        --top;
        stack[top - 1] = apply(in.bfn, stack[top - 1], stack[top]);
        break;
    }
  }
  return stack[0];
}

}  // namespace unc
