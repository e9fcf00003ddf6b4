#include "linkmatch/simplex.hpp"

#include <stdexcept>

namespace linkmatch {

namespace {

struct Overflow {};

// 64-bit entries with 128-bit intermediates; throws Overflow when a result
// leaves (-2^62, 2^62).
struct SmallInt {
  using type = std::int64_t;
  static constexpr std::int64_t kLimit = std::int64_t{1} << 62;

  static type from(std::int64_t v) { return v; }
  static type step(type tij, type p, type tic, type trj, type d) {
    __int128 v = static_cast<__int128>(tij) * p - static_cast<__int128>(tic) * trj;
    v /= d;
    if (v >= kLimit || v <= -kLimit) throw Overflow{};
    return static_cast<type>(v);
  }
  // Sign of a*b - c*e.
  static int cross_sign(type a, type b, type c, type e) {
    __int128 l = static_cast<__int128>(a) * b, r = static_cast<__int128>(c) * e;
    return (l > r) - (l < r);
  }
  static Rational ratio(type num, type den) {
    return Rational(mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))));
  }
};

struct BigInt {
  using type = mpz_class;

  static type from(std::int64_t v) { return mpz_class(static_cast<long>(v)); }
  static type step(const type& tij, const type& p, const type& tic, const type& trj, const type& d) {
    mpz_class v = tij * p - tic * trj;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    return v;
  }
  static int cross_sign(const type& a, const type& b, const type& c, const type& e) {
    int s = cmp(mpz_class(a * b), mpz_class(c * e));
    return (s > 0) - (s < 0);
  }
  static Rational ratio(const type& num, const type& den) { return Rational(mpq_class(num, den)); }
};

template <class Ops>
LpSolution run_simplex(const PackingLp& lp) {
  using Int = typename Ops::type;
  const int m = lp.rows;
  const int total = lp.cols + lp.rows;  // structural + slack columns
  const int width = total + 1;          // rhs last
  const int obj = m;
  std::vector<Int> t(static_cast<std::size_t>(m + 1) * width, Ops::from(0));
  auto at = [&](int i, int j) -> Int& { return t[static_cast<std::size_t>(i) * width + j]; };

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < lp.cols; ++j) at(i, j) = Ops::from(lp.a[static_cast<std::size_t>(i) * lp.cols + j]);
    at(i, lp.cols + i) = Ops::from(1);
    at(i, total) = Ops::from(lp.b[i]);
  }
  for (int j = 0; j < lp.cols; ++j) at(obj, j) = Ops::from(-lp.c[j]);

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = lp.cols + i;
  Int d = Ops::from(1);
  const Int zero = Ops::from(0);

  LpSolution sol;
  for (;;) {
    // Bland: lowest-index column with negative reduced cost enters.
    int enter = -1;
    for (int j = 0; j < total; ++j) {
      if (at(obj, j) < zero) {
        enter = j;
        break;
      }
    }
    if (enter < 0) break;

    // Minimum ratio rhs/entry over positive entries; ties go to the lowest
    // basic variable index.
    int leave = -1;
    for (int i = 0; i < m; ++i) {
      if (!(at(i, enter) > zero)) continue;
      if (leave < 0) {
        leave = i;
        continue;
      }
      int s = Ops::cross_sign(at(i, total), at(leave, enter), at(leave, total), at(i, enter));
      if (s < 0 || (s == 0 && basis[i] < basis[leave])) leave = i;
    }
    if (leave < 0) {
      sol.status = LpSolution::Status::unbounded;
      return sol;
    }

    const Int p = at(leave, enter);
    for (int i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const Int factor = at(i, enter);
      for (int j = 0; j < width; ++j) {
        at(i, j) = Ops::step(at(i, j), p, factor, at(leave, j), d);
      }
    }
    d = p;
    basis[leave] = enter;
    ++sol.pivots;
  }

  sol.value = Ops::ratio(at(obj, total), d);
  sol.primal.assign(lp.cols, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < lp.cols) sol.primal[basis[i]] = Ops::ratio(at(i, total), d);
  }
  sol.dual.resize(m);
  for (int i = 0; i < m; ++i) sol.dual[i] = Ops::ratio(at(obj, lp.cols + i), d);
  return sol;
}

}  // namespace

LpSolution solve_packing_lp(const PackingLp& lp) {
  if (lp.rows < 0 || lp.cols < 0 ||
      lp.a.size() != static_cast<std::size_t>(lp.rows) * lp.cols ||
      lp.b.size() != static_cast<std::size_t>(lp.rows) ||
      lp.c.size() != static_cast<std::size_t>(lp.cols)) {
    throw std::invalid_argument("solve_packing_lp: inconsistent dimensions");
  }
  for (auto v : lp.b) {
    if (v < 0) throw std::invalid_argument("solve_packing_lp: right-hand side must be non-negative");
  }
  try {
    return run_simplex<SmallInt>(lp);
  } catch (const Overflow&) {
    LpSolution sol = run_simplex<BigInt>(lp);
    sol.used_bignum = true;
    return sol;
  }
}

}  // namespace linkmatch
