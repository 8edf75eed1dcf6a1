#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sunisb/algebra.hpp"
#include "sunisb/fock.hpp"
#include "sunisb/irreps.hpp"
#include "sunisb/isb.hpp"
#include "sunisb/serialize.hpp"
#include "sunisb/su3x.hpp"

namespace sunisb::verify {

struct CheckRecord {
  std::string id;
  bool passed = true;
  std::string witness;  // reproducible description of the first failure
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> checks;
  double elapsed_ms = 0;
  std::map<std::string, std::string> config;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& c : checks) f += c.passed ? 0 : 1;
    return f;
  }

  void record(std::string id, bool ok, std::string witness = {}) {
    checks.push_back({std::move(id), ok, ok ? std::string{} : std::move(witness)});
  }
  void merge(const Report& other) {
    for (const auto& c : other.checks) checks.push_back({other.suite + "/" + c.id, c.passed, c.witness});
    elapsed_ms += other.elapsed_ms;
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["config"] = config;
    j["elapsed_ms"] = static_cast<long long>(elapsed_ms);
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
      nlohmann::ordered_json r;
      r["id"] = c.id;
      r["status"] = c.passed ? "pass" : "fail";
      if (!c.passed) r["witness"] = c.witness;
      j["checks"].push_back(std::move(r));
    }
    return j;
  }

  std::string to_plain() const {
    std::ostringstream os;
    os << "suite " << suite;
    for (const auto& [k, v] : config) os << " " << k << "=" << v;
    os << "\n";
    for (const auto& c : checks) {
      os << (c.passed ? "PASS " : "FAIL ") << c.id;
      if (!c.passed) os << "  witness: " << c.witness;
      os << "\n";
    }
    os << (passed() ? "OK" : "FAILED") << " " << (checks.size() - failures()) << "/" << checks.size()
       << " checks passed in " << static_cast<long long>(elapsed_ms) << " ms\n";
    return os.str();
  }
};

// Receives every Fock-space ket a suite produces (used to feed the
// serialization round-trip check).
using KetSink = std::function<void(const Ket&)>;

struct Options {
  std::vector<int> ranks;  // group ranks N to cover; suites fall back to their own default
  int max_quanta = 5;      // bound on the number of boxes / total occupation
  KetSink sink;
};

inline std::string format_multi_index(const MultiIndex& idx) {
  std::string s;
  for (const auto& row : idx) {
    s += "{";
    for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
    s += "}";
  }
  return s;
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

namespace detail {

class Timer {
 public:
  explicit Timer(Report& r) : r_(r), start_(std::chrono::steady_clock::now()) {}
  ~Timer() {
    r_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  Report& r_;
  std::chrono::steady_clock::time_point start_;
};

inline Report make_report(std::string name, const Options& opt, const std::vector<int>& ranks) {
  Report r;
  r.suite = std::move(name);
  std::string rs;
  for (std::size_t i = 0; i < ranks.size(); ++i) rs += (i ? "," : "") + std::to_string(ranks[i]);
  r.config["ranks"] = rs;
  r.config["max_quanta"] = std::to_string(opt.max_quanta);
  return r;
}

inline std::vector<int> ranks_or(const Options& opt, std::vector<int> fallback) {
  return opt.ranks.empty() ? fallback : opt.ranks;
}

inline void emit(const Options& opt, const Ket& k) {
  if (opt.sink) opt.sink(k);
}

// Constrained test states: the exact kernel basis of every label in range.
inline std::vector<std::pair<IrrepLabel, std::vector<Ket>>> constrained_states(int n, int max_quanta) {
  std::vector<std::pair<IrrepLabel, std::vector<Ket>>> out;
  for (const auto& l : enumerate_labels(n, max_quanta)) out.emplace_back(l, nullspace_basis(l));
  return out;
}

inline std::vector<FockState> states_up_to(int n, int max_quanta) {
  std::vector<FockState> out;
  std::function<void(Totals&, int)> rec = [&](Totals& t, int left) {
    if (static_cast<int>(t.size()) == n - 1) {
      auto sec = enumerate_sector(n, t);
      out.insert(out.end(), sec.begin(), sec.end());
      return;
    }
    for (int v = 0; v <= left; ++v) {
      t.push_back(v);
      rec(t, left - v);
      t.pop_back();
    }
  };
  Totals t;
  rec(t, max_quanta);
  return out;
}

}  // namespace detail

// Canonical commutator, commuting creations and adjointness of a and
// a^dagger, on every basis state with at most max_quanta quanta.
inline Report suite_fock(const Options& opt) {
  const auto ranks = detail::ranks_or(opt, {2, 3, 4});
  Report rep = detail::make_report("fock", opt, ranks);
  detail::Timer timer(rep);
  for (int n : ranks) {
    const auto states = detail::states_up_to(n, std::min(opt.max_quanta, 3));
    bool comm_ok = true, commute_ok = true, adj_ok = true;
    std::string w1, w2, w3;
    for (const auto& s : states) {
      const Ket psi(s, Rational(1));
      for (int i = 1; i < n && comm_ok; ++i)
        for (int a = 1; a <= n; ++a) {
          Ket lhs = apply_annihilate(i, a, apply_create(i, a, psi)) - apply_create(i, a, apply_annihilate(i, a, psi));
          if (lhs != psi) {
            comm_ok = false;
            w1 = str(s) + " slot (" + std::to_string(i) + "," + std::to_string(a) + ")";
            break;
          }
        }
      for (int i = 1; i < n && commute_ok; ++i)
        for (int a = 1; a <= n; ++a)
          for (int j = 1; j < n; ++j)
            for (int b = 1; b <= n; ++b) {
              if (apply_create(i, a, apply_create(j, b, psi)) != apply_create(j, b, apply_create(i, a, psi)) ||
                  apply_annihilate(i, a, apply_annihilate(j, b, psi)) !=
                      apply_annihilate(j, b, apply_annihilate(i, a, psi))) {
                commute_ok = false;
                w2 = str(s);
              }
            }
      // <a^dagger phi | psi> = <phi | a psi> with phi ranging over the one-quantum-lower states
      for (int i = 1; i < n && adj_ok; ++i)
        for (int a = 1; a <= n; ++a) {
          const Ket down = apply_annihilate(i, a, psi);
          for (const auto& [t, c] : down) {
            const Ket phi(t, Rational(1));
            if (inner_product(apply_create(i, a, phi), psi) != inner_product(phi, apply_annihilate(i, a, psi))) {
              adj_ok = false;
              w3 = str(s);
            }
          }
        }
    }
    const std::string tag = "SU(" + std::to_string(n) + ")";
    rep.record(tag + "/canonical-commutator", comm_ok, w1);
    rep.record(tag + "/creations-commute", commute_ok, w2);
    rep.record(tag + "/adjointness", adj_ok, w3);
  }
  return rep;
}

// U(N-1) relations [L_ij, L_kl] = d_jk L_il - d_il L_kj, [Q_ab, L_ij] = 0,
// [C2, Q_ab] = 0 and sector preservation by Q_ab, on every basis state of
// every sector with at most max_quanta quanta.
inline Report suite_algebra(const Options& opt) {
  const auto ranks = detail::ranks_or(opt, {2, 3, 4});
  Report rep = detail::make_report("algebra", opt, ranks);
  detail::Timer timer(rep);
  for (int n : ranks) {
    const std::string tag = "SU(" + std::to_string(n) + ")";
    const auto states = detail::states_up_to(n, opt.max_quanta);
    const int rows = n - 1;

    bool un_ok = true;
    std::string w;
    for (int i = 1; i <= rows; ++i)
      for (int j = 1; j <= rows; ++j)
        for (int k = 1; k <= rows; ++k)
          for (int l = 1; l <= rows; ++l) {
            const auto lhs = op_commutator(op_L(i, j, n), op_L(k, l, n));
            for (const auto& s : states) {
              const Ket psi(s, Rational(1));
              Ket rhs(n);
              if (j == k) rhs += apply_L(i, l, psi);
              if (i == l) rhs -= apply_L(k, j, psi);
              if (lhs(psi) != rhs) {
                un_ok = false;
                w = "[L" + std::to_string(i) + std::to_string(j) + ",L" + std::to_string(k) + std::to_string(l) +
                    "] on " + str(s);
                break;
              }
            }
          }
    rep.record(tag + "/u(N-1)-relations", un_ok, w);

    std::vector<Ket> samples;
    for (const auto& s : states) samples.emplace_back(s, Rational(1));
    bool inv_ok = true;
    w.clear();
    for (int i = 1; i <= rows && inv_ok; ++i)
      for (int j = 1; j <= rows; ++j)
        if (!check_invariance(i, j, samples)) {
          inv_ok = false;
          w = "[Q, L" + std::to_string(i) + std::to_string(j) + "] != 0";
          break;
        }
    rep.record(tag + "/Q-commutes-with-L", inv_ok, w);

    const auto c2 = op_casimir2(n);
    bool cas_ok = true, sector_ok = true;
    std::string wc, ws;
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        const auto q = op_generator(a, b, n);
        const auto comm = op_commutator(c2, q);
        for (const auto& s : states) {
          const Ket psi(s, Rational(1));
          if (cas_ok && !comm(psi).is_zero()) {
            cas_ok = false;
            wc = "[C2, Q" + std::to_string(a) + std::to_string(b) + "] on " + str(s);
          }
          const auto t = total_occupations(s);
          for (const auto& [u, c] : q(psi))
            if (sector_ok && total_occupations(u) != t) {
              sector_ok = false;
              ws = "Q" + std::to_string(a) + std::to_string(b) + " on " + str(s);
            }
        }
      }
    rep.record(tag + "/C2-commutes-with-Q", cas_ok, wc);
    rep.record(tag + "/Q-preserves-sector", sector_ok, ws);
  }
  return rep;
}

// Every ordered ISB monomial (every multi-index, every ordering within a
// row) is annihilated by all L_ij, i < j.
inline Report suite_constraints(const Options& opt) {
  const auto ranks = detail::ranks_or(opt, {2, 3, 4, 5});
  Report rep = detail::make_report("constraints", opt, ranks);
  detail::Timer timer(rep);
  for (int n : ranks)
    for (const auto& label : enumerate_labels(n, opt.max_quanta)) {
      bool ok = true;
      std::string w;
      std::size_t count = 0;
      for_each_monomial(
          label,
          [&](const MultiIndex& idx, const Ket& k) {
            ++count;
            detail::emit(opt, k);
            if (!ok) return;
            const auto res = full_constraint_residual(k);
            if (!res.annihilated) {
              ok = false;
              w = format_multi_index(idx) + " violates L" + std::to_string(res.offending.front().first) +
                  std::to_string(res.offending.front().second);
            }
          },
          true);
      rep.record(str(label) + " (" + std::to_string(count) + " monomials)", ok, w);
    }
  return rep;
}

// weyl_dimension == nullspace_dimension == monomial_rank.
inline Report suite_dimensions(const Options& opt) {
  const auto ranks = detail::ranks_or(opt, {2, 3, 4, 5});
  Report rep = detail::make_report("dimensions", opt, ranks);
  detail::Timer timer(rep);
  for (int n : ranks)
    for (const auto& label : enumerate_labels(n, opt.max_quanta)) {
      const Integer w = weyl_dimension(label);
      const Integer d = nullspace_dimension(label);
      const Integer r = Integer(monomial_rank(label));
      rep.record(str(label) + " dim=" + w.str(), w == d && d == r,
                 "weyl=" + w.str() + " nullspace=" + d.str() + " monomial_rank=" + r.str());
    }
  return rep;
}

// The SU(3) octet monomial against its explicit antisymmetrized expansion,
// for every color choice and both orderings of the row-1 factors.
inline Report suite_octet(const Options& opt) {
  Report rep = detail::make_report("octet", opt, {3});
  detail::Timer timer(rep);
  const IrrepLabel octet(3, {2, 1});
  auto raw = [](std::vector<std::pair<int, int>> ops) {
    Ket k = vacuum(3);
    for (auto [row, color] : ops) k = apply_create(row, color, k);
    return k;
  };
  for (int a1 = 1; a1 <= 3; ++a1)
    for (int a2 = 1; a2 <= 3; ++a2)
      for (int b = 1; b <= 3; ++b) {
        Ket expected = raw({{1, a2}, {1, a1}, {2, b}}) - raw({{1, a2}, {1, b}, {2, a1}}) +
                       raw({{1, a1}, {1, a2}, {2, b}}) - raw({{1, a1}, {1, b}, {2, a2}});
        expected = expected * make_rational(1, 3);
        const Ket m12 = build_monomial(octet, {{a1, a2}, {b}});
        const Ket m21 = build_monomial(octet, {{a2, a1}, {b}});
        detail::emit(opt, m12);
        rep.record("alpha=(" + std::to_string(a1) + "," + std::to_string(a2) + ") beta=" + std::to_string(b),
                   m12 == expected && m21 == expected,
                   "monomial " + str(m12) + " expected " + str(expected));
      }
  return rep;
}

// Traceless polynomial states against A^dagger/B^dagger monomials, the L_r
// spot values, trace removal and k- annihilation.
inline Report suite_bv(const Options& opt) {
  using namespace su3x;
  Report rep = detail::make_report("bv", opt, {3});
  detail::Timer timer(rep);
  rep.record("L_1(1,1)=-1/3", coeff_Lr(1, 1, 1) == make_rational(-1, 3), to_string(coeff_Lr(1, 1, 1)));
  rep.record("L_1(2,1)=-1/4", coeff_Lr(2, 1, 1) == make_rational(-1, 4), to_string(coeff_Lr(2, 1, 1)));
  rep.record("L_2(2,2)=1/20", coeff_Lr(2, 2, 2) == make_rational(1, 20), to_string(coeff_Lr(2, 2, 2)));
  const std::vector<std::pair<int, int>> shapes{{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  for (auto [n, m] : shapes) {
    bool eq_ok = true, km_ok = true, tr_ok = true;
    std::string w1, w2, w3;
    std::vector<int> al(n), be(m);
    int total = 1;
    for (int i = 0; i < n + m; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      int x = code;
      for (auto& v : al) v = x % 3 + 1, x /= 3;
      for (auto& v : be) v = x % 3 + 1, x /= 3;
      const ABKet bv = build_bv_state(al, be);
      const std::string where = "alphas=" + format_multi_index({al}) + " betas=" + format_multi_index({be});
      if (eq_ok && bv != isb3_monomial(al, be)) eq_ok = false, w1 = where;
      if (km_ok && !apply_k_minus(bv).is_zero()) km_ok = false, w2 = where;
      for (int l = 1; l <= n && tr_ok; ++l)
        for (int k = 1; k <= m; ++k)
          if (!trace_contract(traceless_builder(), al, be, l, k).is_zero()) {
            tr_ok = false;
            w3 = where + " contract (" + std::to_string(l) + "," + std::to_string(k) + ")";
            break;
          }
    }
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
    rep.record(tag + "/polynomial==ISB-monomial", eq_ok, w1);
    rep.record(tag + "/k-annihilates", km_ok, w2);
    rep.record(tag + "/traceless", tr_ok, w3);
  }
  // the uncorrected monomial must carry a trace
  const ABKet raw_trace = trace_contract(BvBuilder(monomial_state), {1}, {1}, 1, 1);
  rep.record("negative-control/raw-monomial-has-trace", !raw_trace.is_zero(), "raw trace vanished");
  return rep;
}

// All ordered totals vectors of length `rows` with entries <= max_entry.
inline std::vector<Totals> ordered_totals(int rows, int max_entry) {
  std::vector<Totals> out;
  Totals t;
  std::function<void(int)> rec = [&](int bound) {
    if (static_cast<int>(t.size()) == rows) {
      out.push_back(t);
      return;
    }
    for (int v = bound; v >= 0; --v) {
      t.push_back(v);
      rec(v);
      t.pop_back();
    }
  };
  rec(max_entry);
  return out;
}

// Closed-form coefficients: low-rank special cases, the boundary value and
// the recurrence on every ordered totals vector, and H = -F.
inline Report suite_coefficients(const Options& opt) {
  const auto ranks = detail::ranks_or(opt, {3, 4, 5, 6});
  const int max_entry = std::max(opt.max_quanta, 6);
  Report rep = detail::make_report("coefficients", opt, ranks);
  rep.config["max_entry"] = std::to_string(max_entry);
  detail::Timer timer(rep);

  bool f21 = true, f3 = true, hk = true;
  for (const auto& t : ordered_totals(3, max_entry)) {
    const int n1 = t[0], n2 = t[1], n3 = t[2];
    f21 = f21 && coeff_F(2, 1, t) == make_rational(-1, n1 - n2 + 2);
    const Rational f32 = coeff_F(3, 2, t), f31 = coeff_F(3, 1, t);
    f3 = f3 && f32 == make_rational(-1, n2 - n3 + 2) && f31 == make_rational(-1, n1 - n3 + 3) &&
         f32 * f31 == make_rational(1, (n2 - n3 + 2) * (n1 - n3 + 3));
  }
  rep.record("F^2_1=-1/(N1-N2+2)", f21, "mismatch");
  rep.record("F^3_2,F^3_1,F^3_21", f3, "mismatch");

  for (int n : ranks) {
    const int rows = n - 1;
    const auto grid = ordered_totals(rows, max_entry);
    for (const auto& t : grid)
      for (int k = 2; k <= rows; ++k) {
        hk = hk && coeff_F(k, k - 1, t) == make_rational(-1, t[k - 2] - t[k - 1] + 2);
        for (int i = 1; i < k; ++i) hk = hk && coeff_H(k, i, t) + coeff_F(k, i, t) == 0;
      }
    const bool rec_ok = verify_recurrence(IsbCoeffs::closed_form(n), rows, grid);
    rep.record("SU(" + std::to_string(n) + ")/recurrence (" + std::to_string(grid.size()) + " totals)", rec_ok,
               "recurrence fails somewhere on the grid");
  }
  rep.record("boundary-and-H=-F", hk, "mismatch");

  IsbCoeffs perturbed{6, [](int k, int i, const Totals& t) {
                        return make_rational(-1, t[i - 1] - t[k - 1] + 2 + k - i);
                      }};
  rep.record("negative-control/perturbed-closed-form",
             !verify_recurrence(perturbed, 4, ordered_totals(5, 3)), "perturbed table passed");
  return rep;
}

// SU(4): the iterative G construction of A^dagger[3] against the closed form.
inline Report suite_iterative(const Options& opt) {
  Report rep = detail::make_report("iterative", opt, {4});
  detail::Timer timer(rep);
  for (const Totals& t : std::vector<Totals>{{1, 1, 0}, {2, 1, 0}, {2, 1, 1}}) {
    const IrrepLabel label(4, t);
    bool ok = true, l23 = true;
    std::string w;
    for (const auto& psi : nullspace_basis(label))
      for (int a = 1; a <= 4; ++a) {
        const Ket direct = apply_isb_create(3, a, psi);
        const Ket iter = apply_isb_create_iterative(3, a, psi);
        detail::emit(opt, direct);
        if (ok && direct != iter) ok = false, w = "alpha=" + std::to_string(a) + " on " + str(psi);
        l23 = l23 && apply_L(2, 3, direct).is_zero() && apply_L(2, 3, iter).is_zero();
      }
    rep.record(str(label) + "/iterative==closed-form", ok, w);
    rep.record(str(label) + "/L23-annihilates-both", l23, "L23 image nonzero");
  }
  return rep;
}

// Weak vanishing of A^dagger[i].A[j] and A[i].A^dagger[j] (i != j); the
// diagonal A^dagger[i].A[i] acts as the number-operator function
// diagonal_invariant_value, equal to N_i on the top row.
inline Report suite_multiplicity(const Options& opt) {
  const auto ranks = detail::ranks_or(opt, {2, 3, 4});
  Report rep = detail::make_report("multiplicity", opt, ranks);
  detail::Timer timer(rep);
  for (int n : ranks)
    for (const auto& [label, basis] : detail::constrained_states(n, opt.max_quanta)) {
      bool off = true, diag = true;
      std::string w1, w2;
      for (const auto& psi : basis)
        for (int i = 1; i < n; ++i)
          for (int j = 1; j < n; ++j) {
            if (i != j) {
              const Ket x = isb_dot_create_annihilate(i, j, psi);
              const Ket y = isb_dot_annihilate_create(i, j, psi);
              if (off && (!x.is_zero() || !y.is_zero()))
                off = false, w1 = "i=" + std::to_string(i) + " j=" + std::to_string(j) + " on " + str(psi);
            } else {
              const Ket x = isb_dot_create_annihilate(i, i, psi);
              detail::emit(opt, x);
              const Rational want = diagonal_invariant_value(i, label.rows());
              const bool top_bare = i < n - 1 || x == apply_L(i, i, psi);
              if (diag && (x != psi * want || !top_bare))
                diag = false, w2 = "i=" + std::to_string(i) + " expected scalar " + to_string(want) + " on " + str(psi);
            }
          }
      rep.record(str(label) + "/off-diagonal-invariants-vanish", off, w1);
      rep.record(str(label) + "/diagonal-invariants-are-number-operator-functions", diag, w2);
    }
  return rep;
}

// [A^dagger[k]^a, A^dagger[k]^b] on constrained states; for SU(3) also the
// cross commutators of the triplet/antitriplet operators.
inline Report suite_commutators(const Options& opt) {
  const auto ranks = detail::ranks_or(opt, {2, 3, 4, 5});
  Report rep = detail::make_report("commutators", opt, ranks);
  detail::Timer timer(rep);
  for (int n : ranks) {
    const int quanta = n >= 5 ? std::min(opt.max_quanta, 4) : opt.max_quanta;
    for (const auto& [label, basis] : detail::constrained_states(n, quanta)) {
      bool ok = true;
      std::string w;
      for (const auto& psi : basis)
        for (int k = 1; k < n && ok; ++k)
          for (int a = 1; a <= n; ++a)
            for (int b = a + 1; b <= n; ++b) {
              const Ket ab = apply_isb_create(k, a, apply_isb_create(k, b, psi));
              const Ket ba = apply_isb_create(k, b, apply_isb_create(k, a, psi));
              detail::emit(opt, ab);
              if (ok && ab != ba)
                ok = false, w = "k=" + std::to_string(k) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                " on " + str(psi);
            }
      rep.record(str(label) + "/same-row", ok, w);
    }
    if (n == 3) {
      using namespace su3x;
      bool ok = true;
      std::string w;
      for (int tn = 0; tn <= 2; ++tn)
        for (int tm = 0; tm <= 2; ++tm) {
          std::vector<int> al(tn), be(tm);
          int total = 1;
          for (int i = 0; i < tn + tm; ++i) total *= 3;
          for (int code = 0; code < total; ++code) {
            int x = code;
            for (auto& v : al) v = x % 3 + 1, x /= 3;
            for (auto& v : be) v = x % 3 + 1, x /= 3;
            const ABKet psi = build_bv_state(al, be);
            for (int a = 1; a <= 3; ++a)
              for (int b = 1; b <= 3; ++b) {
                const bool aa = isb3_create_A(a, isb3_create_A(b, psi)) == isb3_create_A(b, isb3_create_A(a, psi));
                const bool bb = isb3_create_B(a, isb3_create_B(b, psi)) == isb3_create_B(b, isb3_create_B(a, psi));
                const bool ab = isb3_create_A(a, isb3_create_B(b, psi)) == isb3_create_B(b, isb3_create_A(a, psi));
                if (ok && !(aa && bb && ab))
                  ok = false, w = "a=" + std::to_string(a) + " b=" + std::to_string(b) + " on (" + std::to_string(tn) +
                                  "," + std::to_string(tm) + ") state";
              }
          }
        }
      rep.record("SU(3)/triplet-antitriplet-cross-commutators", ok, w);
    }
  }
  return rep;
}

// Sp(2,R): [k-,k+] = 2k0, [k0,k+] = k+, [k0,k-] = -k- on every state with
// N_a + N_b <= bound; polynomial states are lowest weight; k+ psi is not.
inline Report suite_sp2r(const Options& opt) {
  using namespace su3x;
  Report rep = detail::make_report("sp2r", opt, {3});
  const int bound = std::max(opt.max_quanta, 6);
  rep.config["max_total"] = std::to_string(bound);
  detail::Timer timer(rep);
  const auto ops = sp2r_ops();
  const auto states = enumerate_ab_states(bound);
  bool c1 = true, c2 = true, c3 = true;
  std::string w1, w2, w3;
  for (const auto& s : states) {
    const ABKet psi(s, Rational(1));
    if (c1 && op_commutator(ops.k_minus, ops.k_plus)(psi) != ops.k_zero(psi) * Rational(2)) c1 = false, w1 = str(s);
    if (c2 && op_commutator(ops.k_zero, ops.k_plus)(psi) != ops.k_plus(psi)) c2 = false, w2 = str(s);
    if (c3 && op_commutator(ops.k_zero, ops.k_minus)(psi) != -ops.k_minus(psi)) c3 = false, w3 = str(s);
  }
  rep.record("[k-,k+]=2k0 (" + std::to_string(states.size()) + " states)", c1, w1);
  rep.record("[k0,k+]=k+", c2, w2);
  rep.record("[k0,k-]=-k-", c3, w3);

  bool low = true, neg = true;
  std::string w4, w5;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m + n <= 4; ++m) {
      std::vector<int> al(n), be(m);
      int total = 1;
      for (int i = 0; i < n + m; ++i) total *= 3;
      for (int code = 0; code < total; ++code) {
        int x = code;
        for (auto& v : al) v = x % 3 + 1, x /= 3;
        for (auto& v : be) v = x % 3 + 1, x /= 3;
        const ABKet psi = build_bv_state(al, be);
        if (low && !ops.k_minus(psi).is_zero()) low = false, w4 = str(psi);
        if (neg && !psi.is_zero() && ops.k_minus(ops.k_plus(psi)).is_zero()) neg = false, w5 = str(psi);
      }
    }
  rep.record("k-annihilates-polynomial-states", low, w4);
  rep.record("negative-control/k+psi-fails-k-", neg, w5);
  return rep;
}

// C2 on SU(2) monomials is (n/2)(n/2+1); for higher N it is one exact
// scalar per label, the same on monomials and on the kernel basis.
inline Report suite_casimir(const Options& opt) {
  const auto ranks = detail::ranks_or(opt, {2, 3, 4});
  Report rep = detail::make_report("casimir", opt, ranks);
  detail::Timer timer(rep);
  for (int n : ranks) {
    const auto c2 = op_casimir2(n);
    for (const auto& label : enumerate_labels(n, opt.max_quanta)) {
      Rational mono;
      std::string w;
      bool ok = true;
      try {
        mono = casimir_eigenvalue(label);
      } catch (const std::exception& e) {
        ok = false;
        w = e.what();
      }
      if (ok && n == 2) {
        const int boxes = label.boxes();
        const Rational j = make_rational(boxes, 2);
        if (mono != j * (j + 1)) ok = false, w = "C2=" + to_string(mono) + " want " + to_string(j * (j + 1));
      }
      if (ok)
        for (const auto& b : nullspace_basis(label)) {
          const Ket img = c2(b);
          detail::emit(opt, img);
          if (img != b * mono) {
            ok = false;
            w = "kernel basis vector " + str(b) + " not an eigenvector with " + to_string(mono);
            break;
          }
        }
      rep.record(str(label) + " C2=" + to_string(mono), ok, w);
    }
  }
  return rep;
}

// Every ket produced by the given suites survives serialize/deserialize
// and re-serializes to the identical document.
inline Report suite_serialization(const Options& opt,
                                  const std::vector<std::function<Report(const Options&)>>& producers) {
  Report rep = detail::make_report("serialization", opt, opt.ranks);
  detail::Timer timer(rep);
  std::size_t seen = 0, bad = 0;
  std::string w;
  Options inner = opt;
  inner.sink = [&](const Ket& k) {
    ++seen;
    const std::string doc = serialize_ket(k);
    const Ket back = deserialize_ket(doc);
    if (back != k || serialize_ket(back) != doc) {
      if (!bad) w = doc;
      ++bad;
    }
  };
  for (const auto& produce : producers) produce(inner);
  rep.record("round-trip (" + std::to_string(seen) + " kets)", bad == 0 && seen > 0,
             std::to_string(bad) + " kets failed; first: " + w);
  return rep;
}

inline const std::map<std::string, std::function<Report(const Options&)>>& suites() {
  static const std::map<std::string, std::function<Report(const Options&)>> table{
      {"fock", suite_fock},
      {"algebra", suite_algebra},
      {"constraints", suite_constraints},
      {"dimensions", suite_dimensions},
      {"octet", suite_octet},
      {"bv", suite_bv},
      {"coefficients", suite_coefficients},
      {"recurrence", suite_coefficients},
      {"iterative", suite_iterative},
      {"multiplicity", suite_multiplicity},
      {"commutators", suite_commutators},
      {"sp2r", suite_sp2r},
      {"casimir", suite_casimir},
      {"serialization",
       [](const Options& o) {
         return suite_serialization(o, {suite_constraints, suite_octet, suite_iterative, suite_casimir});
       }},
  };
  return table;
}

}  // namespace sunisb::verify
