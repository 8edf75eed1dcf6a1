#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <utility>

#include "sunisb/errors.hpp"
#include "sunisb/rational.hpp"

namespace sunisb {

// A finite linear combination of basis states with exact rational
// coefficients. The State type must be totally ordered, expose `rank()`
// and have an ADL-visible `factorial_weight(const State&)`.
//
// Zero coefficients are never stored, so two kets are equal iff their
// term maps are equal.
template <class State>
class SparseKet {
 public:
  using state_type = State;
  using map_type = std::map<State, Rational>;
  using const_iterator = typename map_type::const_iterator;

  SparseKet() = default;
  explicit SparseKet(int rank) : rank_(rank) {}
  SparseKet(const State& s, Rational c) : rank_(s.rank()) { add(s, std::move(c)); }

  int rank() const noexcept { return rank_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const noexcept { return terms_; }

  Rational coefficient(const State& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Accumulates c|s>, pruning the entry if it cancels.
  SparseKet& add(const State& s, const Rational& c) {
    if (c == 0) return *this;
    check_rank(s.rank());
    auto [it, inserted] = terms_.try_emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  SparseKet& add_scaled(const SparseKet& other, const Rational& c) {
    if (c == 0) return *this;
    check_rank(other.rank_);
    for (const auto& [s, v] : other.terms_) add(s, v * c);
    return *this;
  }

  SparseKet& operator+=(const SparseKet& other) { return add_scaled(other, Rational(1)); }
  SparseKet& operator-=(const SparseKet& other) { return add_scaled(other, Rational(-1)); }

  friend SparseKet operator+(SparseKet a, const SparseKet& b) { return a += b; }
  friend SparseKet operator-(SparseKet a, const SparseKet& b) { return a -= b; }
  friend SparseKet operator-(const SparseKet& a) { return a * Rational(-1); }

  friend SparseKet operator*(const Rational& c, const SparseKet& k) { return k * c; }
  friend SparseKet operator*(const SparseKet& k, const Rational& c) {
    SparseKet out(k.rank_);
    if (c == 0) return out;
    for (const auto& [s, v] : k.terms_) out.terms_.emplace_hint(out.terms_.end(), s, v * c);
    return out;
  }

  friend bool operator==(const SparseKet& a, const SparseKet& b) {
    return a.rank_ == b.rank_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const SparseKet& k) {
    if (k.is_zero()) return os << "0";
    bool first = true;
    for (const auto& [s, v] : k.terms_) {
      if (!first) os << " + ";
      os << "(" << to_string(v) << ")" << s;
      first = false;
    }
    return os;
  }

 private:
  void check_rank(int r) {
    if (rank_ == 0) {
      rank_ = r;
    } else if (r != rank_) {
      throw rank_mismatch("ket rank " + std::to_string(rank_) + " combined with rank " +
                          std::to_string(r));
    }
  }

  int rank_ = 0;
  map_type terms_;
};

// <phi|psi> with the factorial measure that makes a and a^dagger mutual
// adjoints in the unnormalized monomial basis.
template <class State>
Rational inner_product(const SparseKet<State>& phi, const SparseKet<State>& psi) {
  if (phi.rank() != psi.rank() && !phi.is_zero() && !psi.is_zero())
    throw rank_mismatch("inner product of kets with different rank");
  Rational acc = 0;
  const auto& small = phi.size() <= psi.size() ? phi : psi;
  const auto& large = phi.size() <= psi.size() ? psi : phi;
  for (const auto& [s, v] : small) {
    auto it = large.terms().find(s);
    if (it == large.terms().end()) continue;
    acc += v * it->second * Rational(factorial_weight(s));
  }
  return acc;
}

}  // namespace sunisb
