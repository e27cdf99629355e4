#pragma once

// Integer lattices: Hermite and Smith normal forms, sublattices of Z^n and
// their quotients, plus the local-field count |H^1(k, A_Y)|.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "rootdata.hpp"

namespace sphcomb {

  namespace detail {

    template <typename T>
    T abs_value(T const& x) {
      return x < 0 ? T(-x) : x;
    }

    template <typename T>
    T floor_div(T const& a, T const& b) {
      T q = a / b;
      if ((a % b != 0) && ((a < 0) != (b < 0))) {
        q -= 1;
      }
      return q;
    }

    template <typename T>
    T gcd_value(T a, T b) {
      a = abs_value(a);
      b = abs_value(b);
      while (b != 0) {
        T t = a % b;
        a   = b;
        b   = t;
      }
      return a;
    }

  }  // namespace detail

  //! Row-style Hermite normal form: U * M = H with U unimodular, H in
  //! echelon form with positive pivots and entries above each pivot reduced
  //! into [0, pivot). Zero rows are kept at the bottom.
  template <typename T>
  struct HermiteForm {
    Matrix<T>                H;
    Matrix<T>                U;
    std::vector<std::size_t> pivots;
  };

  template <typename T>
  HermiteForm<T> hermite_rows(Matrix<T> m) {
    std::size_t const rows = m.rows();
    Matrix<T>         u    = Matrix<T>::identity(rows);
    std::vector<std::size_t> pivots;
    std::size_t       r = 0;
    for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
      while (true) {
        std::optional<std::size_t> best;
        for (std::size_t i = r; i < rows; ++i) {
          if (m(i, c) != 0 && (!best || detail::abs_value(m(i, c)) < detail::abs_value(m(*best, c)))) {
            best = i;
          }
        }
        if (!best) {
          break;
        }
        m.swap_rows(r, *best);
        u.swap_rows(r, *best);
        bool done = true;
        for (std::size_t i = r + 1; i < rows; ++i) {
          if (m(i, c) != 0) {
            T q = m(i, c) / m(r, c);
            m.add_row_multiple(i, r, T(-q));
            u.add_row_multiple(i, r, T(-q));
            if (m(i, c) != 0) {
              done = false;
            }
          }
        }
        if (done) {
          break;
        }
      }
      if (m(r, c) == 0) {
        continue;
      }
      if (m(r, c) < 0) {
        m.negate_row(r);
        u.negate_row(r);
      }
      for (std::size_t i = 0; i < r; ++i) {
        T q = detail::floor_div(m(i, c), m(r, c));
        if (q != 0) {
          m.add_row_multiple(i, r, T(-q));
          u.add_row_multiple(i, r, T(-q));
        }
      }
      pivots.push_back(c);
      ++r;
    }
    return {std::move(m), std::move(u), std::move(pivots)};
  }

  //! U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...
  template <typename T>
  struct SmithForm {
    Matrix<T>      D;
    Matrix<T>      U;
    Matrix<T>      V;
    std::vector<T> invariants;  // nonzero diagonal entries
  };

  template <typename T>
  SmithForm<T> smith_normal_form(Matrix<T> m) {
    std::size_t const rows = m.rows(), cols = m.cols();
    Matrix<T>         u = Matrix<T>::identity(rows);
    Matrix<T>         v = Matrix<T>::identity(cols);
    std::size_t       t = 0;
    while (t < rows && t < cols) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m(i, j) != 0
              && (!best
                  || detail::abs_value(m(i, j)) < detail::abs_value(m(best->first, best->second)))) {
            best = std::make_pair(i, j);
          }
        }
      }
      if (!best) {
        break;
      }
      m.swap_rows(t, best->first);
      u.swap_rows(t, best->first);
      m.swap_cols(t, best->second);
      v.swap_cols(t, best->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m(i, t) != 0) {
          T q = m(i, t) / m(t, t);
          m.add_row_multiple(i, t, T(-q));
          u.add_row_multiple(i, t, T(-q));
          clean = clean && m(i, t) == 0;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m(t, j) != 0) {
          T q = m(t, j) / m(t, t);
          m.add_col_multiple(j, t, T(-q));
          v.add_col_multiple(j, t, T(-q));
          clean = clean && m(t, j) == 0;
        }
      }
      if (!clean) {
        continue;
      }
      // divisibility: fold an offending row into the pivot row and retry
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m(i, j) % m(t, t) != 0) {
            offending = i;
            break;
          }
        }
      }
      if (offending) {
        m.add_row_multiple(t, *offending, T(1));
        u.add_row_multiple(t, *offending, T(1));
        continue;
      }
      if (m(t, t) < 0) {
        m.negate_row(t);
        u.negate_row(t);
      }
      ++t;
    }
    std::vector<T> inv;
    for (std::size_t i = 0; i < std::min(rows, cols); ++i) {
      if (m(i, i) != 0) {
        inv.push_back(m(i, i));
      }
    }
    return {std::move(m), std::move(u), std::move(v), std::move(inv)};
  }

  //! Diagonal of the Smith normal form, zeros trimmed.
  template <typename T>
  std::vector<T> smith_invariants(Matrix<T> const& m) {
    return smith_normal_form(m).invariants;
  }

  //! Invariant factors d_1 | d_2 | ... | d_k of a finite abelian group, each >= 2.
  class FiniteAbelianInvariants {
   public:
    FiniteAbelianInvariants() = default;

    explicit FiniteAbelianInvariants(std::vector<Integer> factors) : _factors(std::move(factors)) {
      for (std::size_t i = 0; i < _factors.size(); ++i) {
        if (_factors[i] < 2) {
          fail(ErrorKind::InvalidArgument, "invariant factors must be at least 2");
        }
        if (i > 0 && _factors[i] % _factors[i - 1] != 0) {
          fail(ErrorKind::InvalidArgument, "invariant factors must form a divisibility chain");
        }
      }
    }

    //! Normalizes an arbitrary product of cyclic groups Z/n_1 x Z/n_2 x ...
    static FiniteAbelianInvariants from_cyclic_orders(std::vector<Integer> const& orders) {
      IntMatrix diag(orders.size(), orders.size());
      for (std::size_t i = 0; i < orders.size(); ++i) {
        if (orders[i] < 1) {
          fail(ErrorKind::InvalidArgument, "cyclic orders must be positive");
        }
        diag(i, i) = orders[i];
      }
      std::vector<Integer> f;
      for (auto const& d : smith_invariants(diag)) {
        if (d > 1) {
          f.push_back(d);
        }
      }
      return FiniteAbelianInvariants(std::move(f));
    }

    std::vector<Integer> const& factors() const noexcept {
      return _factors;
    }
    bool trivial() const noexcept {
      return _factors.empty();
    }
    Integer order() const {
      Integer o = 1;
      for (auto const& f : _factors) {
        o *= f;
      }
      return o;
    }

    friend bool operator==(FiniteAbelianInvariants const&, FiniteAbelianInvariants const&) = default;

   private:
    std::vector<Integer> _factors;
  };

  //! Residue field order q and residue characteristic p of a p-adic field.
  class LocalFieldParams {
   public:
    LocalFieldParams(Integer q, Integer p) : _q(std::move(q)), _p(std::move(p)) {
      if (_q < 2) {
        fail(ErrorKind::InvalidArgument, "residue field order q must be at least 2");
      }
      if (_p < 2 || !is_prime(_p)) {
        fail(ErrorKind::InvalidArgument, "residue characteristic p must be prime");
      }
      Integer x = _q;
      while (x % _p == 0) {
        x /= _p;
      }
      if (x != 1) {
        fail(ErrorKind::InvalidArgument, "q must be a power of p");
      }
    }

    Integer const& q() const noexcept {
      return _q;
    }
    Integer const& p() const noexcept {
      return _p;
    }

   private:
    static bool is_prime(Integer const& n) {
      for (Integer d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
          return false;
        }
      }
      return true;
    }

    Integer _q;
    Integer _p;
  };

  //! |H^1(k, prod mu_n)| = prod |k^x / (k^x)^n| = prod n * gcd(n, q - 1),
  //! valid when p divides none of the n.
  inline Integer h1_order(FiniteAbelianInvariants const& torsion, LocalFieldParams const& field) {
    Integer result = 1;
    for (auto const& n : torsion.factors()) {
      if (n % field.p() == 0) {
        fail(ErrorKind::WildCaseUnsupported,
             "residue characteristic " + field.p().str() + " divides the component order "
                 + n.str());
      }
      result *= n * detail::gcd_value(n, Integer(field.q() - 1));
    }
    return result;
  }

  //! A sublattice of Z^n, stored as the nonzero rows of its Hermite form.
  class Sublattice {
   public:
    Sublattice() = default;

    explicit Sublattice(std::size_t ambient_rank) : _ambient(ambient_rank), _basis(0, ambient_rank) {}

    Sublattice(std::size_t ambient_rank, IntMatrix const& generators) : _ambient(ambient_rank) {
      if (generators.rows() > 0 && generators.cols() != ambient_rank) {
        fail(ErrorKind::DimensionMismatch,
             "generator length " + std::to_string(generators.cols()) + " differs from ambient rank "
                 + std::to_string(ambient_rank));
      }
      auto hf = hermite_rows(generators.rows() == 0 ? IntMatrix(0, ambient_rank) : generators);
      _basis  = IntMatrix(hf.pivots.size(), ambient_rank);
      for (std::size_t i = 0; i < hf.pivots.size(); ++i) {
        for (std::size_t j = 0; j < ambient_rank; ++j) {
          _basis(i, j) = hf.H(i, j);
        }
      }
    }

    static Sublattice from_rows(std::size_t ambient_rank, std::vector<IntVector> const& rows) {
      return Sublattice(ambient_rank, IntMatrix::from_rows(rows, ambient_rank));
    }

    static Sublattice full(std::size_t n) {
      return Sublattice(n, IntMatrix::identity(n));
    }
    static Sublattice zero(std::size_t n) {
      return Sublattice(n);
    }

    std::size_t ambient_rank() const noexcept {
      return _ambient;
    }
    std::size_t rank() const noexcept {
      return _basis.rows();
    }
    IntMatrix const& basis() const noexcept {
      return _basis;
    }
    std::vector<IntVector> rows() const {
      return _basis.to_rows();
    }

    bool contains(IntVector const& v) const {
      check_dim(v.size());
      IntMatrix m = _basis;
      m.append_row(v);
      return Sublattice(_ambient, m) == *this;
    }

    //! v in L (x) Q
    bool span_contains(RationalVector const& v) const {
      check_dim(v.size());
      RationalMatrix m = matrix_cast<Rational>(_basis);
      m.append_row(v);
      return rref(m).size() == rank();
    }

    bool contains(Sublattice const& other) const {
      check_same(other);
      return sum(*this, other) == *this;
    }

    //! Every element is fixed by the matrix.
    bool fixed_by(SmallMatrix const& m) const {
      for (std::size_t i = 0; i < rank(); ++i) {
        auto v = _basis.row(i);
        if (WeylElement({}, m).act(v) != v) {
          return false;
        }
      }
      return true;
    }

    //! Some element pairs nontrivially with the covector.
    bool pairs_nontrivially(SmallVector const& covector) const {
      check_dim(covector.size());
      for (std::size_t i = 0; i < rank(); ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < _ambient; ++j) {
          s += _basis(i, j) * covector[j];
        }
        if (s != 0) {
          return true;
        }
      }
      return false;
    }

    friend Sublattice sum(Sublattice const& a, Sublattice const& b) {
      a.check_same(b);
      IntMatrix m = a._basis;
      for (std::size_t i = 0; i < b.rank(); ++i) {
        m.append_row(b._basis.row(i));
      }
      return Sublattice(a._ambient, m);
    }

    friend Sublattice intersection(Sublattice const& a, Sublattice const& b) {
      a.check_same(b);
      if (a.rank() == 0 || b.rank() == 0) {
        return Sublattice(a._ambient);
      }
      // x B_a = y B_b  <=>  (x, y) [B_a; -B_b] = 0
      IntMatrix stacked(a.rank() + b.rank(), a._ambient);
      for (std::size_t i = 0; i < a.rank(); ++i) {
        for (std::size_t j = 0; j < a._ambient; ++j) {
          stacked(i, j) = a._basis(i, j);
        }
      }
      for (std::size_t i = 0; i < b.rank(); ++i) {
        for (std::size_t j = 0; j < a._ambient; ++j) {
          stacked(a.rank() + i, j) = -b._basis(i, j);
        }
      }
      auto      hf = hermite_rows(stacked);
      IntMatrix gens(0, a._ambient);
      for (std::size_t k = hf.pivots.size(); k < stacked.rows(); ++k) {
        IntVector x(hf.U.row_begin(k), hf.U.row_begin(k) + static_cast<std::ptrdiff_t>(a.rank()));
        IntVector g(a._ambient, Integer(0));
        for (std::size_t i = 0; i < a.rank(); ++i) {
          for (std::size_t j = 0; j < a._ambient; ++j) {
            g[j] += x[i] * a._basis(i, j);
          }
        }
        gens.append_row(g);
      }
      return Sublattice(a._ambient, gens);
    }

    //! (L (x) Q) cap Z^n
    friend Sublattice saturation(Sublattice const& a) {
      if (a.rank() == 0) {
        return a;
      }
      auto      snf  = smith_normal_form(a._basis);
      auto      vinv = inverse(matrix_cast<Rational>(snf.V));
      IntMatrix gens(0, a._ambient);
      for (std::size_t i = 0; i < snf.invariants.size(); ++i) {
        IntVector row(a._ambient);
        for (std::size_t j = 0; j < a._ambient; ++j) {
          row[j] = numerator(vinv(i, j));  // V is unimodular
        }
        gens.append_row(row);
      }
      return Sublattice(a._ambient, gens);
    }

    bool is_saturated() const {
      return saturation(*this) == *this;
    }

    friend bool operator==(Sublattice const& a, Sublattice const& b) {
      return a._ambient == b._ambient && a._basis == b._basis;
    }

   private:
    void check_dim(std::size_t n) const {
      if (n != _ambient) {
        fail(ErrorKind::DimensionMismatch,
             "vector of length " + std::to_string(n) + " in a lattice of rank "
                 + std::to_string(_ambient));
      }
    }
    void check_same(Sublattice const& other) const {
      check_dim(other._ambient);
    }

    std::size_t _ambient = 0;
    IntMatrix   _basis;
  };

  //! Image w . L of a sublattice under a Weyl group element.
  inline Sublattice transport(WeylElement const& w, Sublattice const& lattice) {
    if (w.matrix().cols() != lattice.ambient_rank()) {
      fail(ErrorKind::DimensionMismatch, "Weyl element and lattice live in different ranks");
    }
    IntMatrix gens(0, lattice.ambient_rank());
    for (auto const& r : lattice.rows()) {
      gens.append_row(w.act(r));
    }
    return Sublattice(lattice.ambient_rank(), gens);
  }

  struct QuotientInvariants {
    std::size_t             free_rank = 0;
    FiniteAbelianInvariants torsion;

    friend bool operator==(QuotientInvariants const&, QuotientInvariants const&) = default;
  };

  //! Z^n / L = Z^{free_rank} + (+)_i Z/d_i
  inline QuotientInvariants quotient_invariants(std::size_t n, Sublattice const& lattice) {
    if (lattice.ambient_rank() != n) {
      fail(ErrorKind::DimensionMismatch, "lattice ambient rank differs from n");
    }
    QuotientInvariants out;
    out.free_rank = n - lattice.rank();
    std::vector<Integer> torsion;
    if (lattice.rank() > 0) {
      for (auto const& d : smith_invariants(lattice.basis())) {
        if (d > 1) {
          torsion.push_back(d);
        }
      }
    }
    out.torsion = FiniteAbelianInvariants(std::move(torsion));
    return out;
  }

  inline std::string lattice_to_string(Sublattice const& l) {
    if (l.rank() == 0) {
      return "0";
    }
    std::string out = "span{";
    auto        r   = l.rows();
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      out += vector_to_string(r[i]);
    }
    return out + "}";
  }

}  // namespace sphcomb
