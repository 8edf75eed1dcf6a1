#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "sunisb/errors.hpp"
#include "sunisb/ket.hpp"

namespace sunisb {

// A linear map defined by its action on basis states and extended by
// linearity. Instances are immutable and cheap to copy.
template <class State>
class LinearOperator {
 public:
  using ket_type = SparseKet<State>;
  using basis_action = std::function<ket_type(const State&)>;
  // Optional whole-ket action, used when the operator is cheaper to apply
  // to a ket at once (e.g. sector-wise coefficient evaluation).
  using ket_action = std::function<ket_type(const ket_type&)>;

  LinearOperator() = default;

  LinearOperator(int rank, basis_action action, std::string label = {})
      : rank_(rank), label_(std::move(label)) {
    auto f = std::make_shared<basis_action>(std::move(action));
    apply_ = [f, rank](const ket_type& psi) {
      ket_type out(rank);
      for (const auto& [s, c] : psi) out.add_scaled((*f)(s), c);
      return out;
    };
  }

  static LinearOperator from_ket_action(int rank, ket_action action, std::string label = {}) {
    LinearOperator op;
    op.rank_ = rank;
    op.label_ = std::move(label);
    op.apply_ = std::move(action);
    return op;
  }

  int rank() const noexcept { return rank_; }
  const std::string& label() const noexcept { return label_; }

  ket_type operator()(const ket_type& psi) const {
    if (psi.is_zero()) return ket_type(rank_);
    if (psi.rank() != rank_)
      throw rank_mismatch("operator '" + label_ + "' applied to ket of different rank");
    return apply_(psi);
  }

  ket_type operator()(const State& s) const { return (*this)(ket_type(s, Rational(1))); }

 private:
  int rank_ = 0;
  std::string label_;
  ket_action apply_;
};

namespace detail {
template <class State>
void check_same_rank(const LinearOperator<State>& a, const LinearOperator<State>& b) {
  if (a.rank() != b.rank())
    throw rank_mismatch("combining operators '" + a.label() + "' and '" + b.label() +
                        "' of different rank");
}
}  // namespace detail

// (A o B) psi = A(B psi)
template <class State>
LinearOperator<State> op_compose(const LinearOperator<State>& a, const LinearOperator<State>& b) {
  detail::check_same_rank(a, b);
  return LinearOperator<State>::from_ket_action(
      a.rank(), [a, b](const SparseKet<State>& psi) { return a(b(psi)); },
      a.label() + " " + b.label());
}

template <class State>
LinearOperator<State> op_sum(const LinearOperator<State>& a, const LinearOperator<State>& b) {
  detail::check_same_rank(a, b);
  return LinearOperator<State>::from_ket_action(
      a.rank(), [a, b](const SparseKet<State>& psi) { return a(psi) + b(psi); },
      "(" + a.label() + " + " + b.label() + ")");
}

template <class State>
LinearOperator<State> op_scale(const Rational& c, const LinearOperator<State>& a) {
  return LinearOperator<State>::from_ket_action(
      a.rank(), [c, a](const SparseKet<State>& psi) { return a(psi) * c; },
      to_string(c) + "*" + a.label());
}

template <class State>
LinearOperator<State> op_commutator(const LinearOperator<State>& a, const LinearOperator<State>& b) {
  detail::check_same_rank(a, b);
  return LinearOperator<State>::from_ket_action(
      a.rank(), [a, b](const SparseKet<State>& psi) { return a(b(psi)) - b(a(psi)); },
      "[" + a.label() + ", " + b.label() + "]");
}

template <class State>
LinearOperator<State> op_identity(int rank) {
  return LinearOperator<State>::from_ket_action(
      rank, [](const SparseKet<State>& psi) { return psi; }, "1");
}

// True iff A psi == B psi for every supplied basis state.
template <class State, class Range>
bool operators_agree_on(const LinearOperator<State>& a, const LinearOperator<State>& b,
                        const Range& states) {
  for (const State& s : states)
    if (a(s) != b(s)) return false;
  return true;
}

}  // namespace sunisb
