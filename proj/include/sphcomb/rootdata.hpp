#pragma once

// Root data on an ambient character lattice Z^n and the Weyl group acting
// on it by integer matrices.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"

namespace sphcomb {

  using SmallVector = std::vector<std::int64_t>;
  using Word        = std::vector<std::size_t>;

  inline constexpr std::size_t default_group_cap = 1'000'000;

  //! A root, stored both in ambient coordinates and in simple-root
  //! coordinates, together with its coroot.
  struct Root {
    SmallVector vector;        // in Z^n
    SmallVector coefficients;  // in the basis of simple roots
    SmallVector coroot;        // covector on Z^n
  };

  //! Simple roots and coroots on X(A) = Z^n with the finite-type Cartan
  //! matrix cartan(i, j) = <alpha_j, coroot_i>.
  class RootDatum {
   public:
    RootDatum() = default;

    static RootDatum from_roots(std::size_t                     ambient_rank,
                                std::vector<SmallVector> const& simple_roots,
                                std::vector<SmallVector> const& simple_coroots,
                                std::string                     name = "") {
      RootDatum d;
      d._ambient = ambient_rank;
      d._roots   = simple_roots;
      d._coroots = simple_coroots;
      d._name    = std::move(name);
      d.init();
      return d;
    }

    //! Simple roots written in the basis dual to the simple coroots, padded
    //! with zero central coordinates up to ambient_rank.
    static RootDatum from_cartan(SmallMatrix const& cartan,
                                 std::size_t        ambient_rank,
                                 std::string        name = "") {
      std::size_t const r = cartan.rows();
      if (cartan.cols() != r) {
        fail(ErrorKind::RankMismatch, "Cartan matrix must be square");
      }
      if (ambient_rank < r) {
        fail(ErrorKind::RankMismatch,
             "ambient rank " + std::to_string(ambient_rank)
                 + " is smaller than the number of simple roots " + std::to_string(r));
      }
      std::vector<SmallVector> roots(r, SmallVector(ambient_rank, 0));
      std::vector<SmallVector> coroots(r, SmallVector(ambient_rank, 0));
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t i = 0; i < r; ++i) {
          roots[j][i] = cartan(i, j);
        }
        coroots[j][j] = 1;
      }
      return from_roots(ambient_rank, roots, coroots, std::move(name));
    }

    //! Named Cartan types "A1".."G2" and products such as "A2xA1".
    static RootDatum named(std::string_view spec);

    //! Direct product: ambient lattices and root systems concatenated.
    static RootDatum product(RootDatum const& a, RootDatum const& b) {
      std::size_t const        n = a._ambient + b._ambient;
      std::vector<SmallVector> roots, coroots;
      for (std::size_t i = 0; i < a.rank(); ++i) {
        SmallVector r(n, 0), c(n, 0);
        std::copy(a._roots[i].begin(), a._roots[i].end(), r.begin());
        std::copy(a._coroots[i].begin(), a._coroots[i].end(), c.begin());
        roots.push_back(r);
        coroots.push_back(c);
      }
      for (std::size_t i = 0; i < b.rank(); ++i) {
        SmallVector r(n, 0), c(n, 0);
        std::copy(b._roots[i].begin(), b._roots[i].end(), r.begin() + a._ambient);
        std::copy(b._coroots[i].begin(), b._coroots[i].end(), c.begin() + a._ambient);
        roots.push_back(r);
        coroots.push_back(c);
      }
      std::string name;
      if (!a._name.empty() && !b._name.empty()) {
        name = a._name + "x" + b._name;
      }
      return from_roots(n, roots, coroots, name);
    }

    //! The Levi sub-datum: same lattice, only the listed simple roots.
    RootDatum levi(std::vector<std::size_t> const& subset) const {
      std::vector<SmallVector> roots, coroots;
      for (auto i : subset) {
        check_root_index(i);
        roots.push_back(_roots[i]);
        coroots.push_back(_coroots[i]);
      }
      return from_roots(_ambient, roots, coroots);
    }

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t ambient_rank() const noexcept {
      return _ambient;
    }
    std::size_t rank() const noexcept {
      return _roots.size();
    }
    std::vector<SmallVector> const& simple_roots() const noexcept {
      return _roots;
    }
    std::vector<SmallVector> const& simple_coroots() const noexcept {
      return _coroots;
    }
    SmallVector const& simple_root(std::size_t i) const {
      check_root_index(i);
      return _roots[i];
    }
    SmallVector const& simple_coroot(std::size_t i) const {
      check_root_index(i);
      return _coroots[i];
    }
    SmallMatrix const& cartan() const noexcept {
      return _cartan;
    }
    std::vector<Root> const& positive_roots() const noexcept {
      return _positive;
    }
    SmallMatrix const& reflection(std::size_t i) const {
      check_root_index(i);
      return _reflections[i];
    }

    //! Order of s_i s_j.
    std::size_t coxeter_entry(std::size_t i, std::size_t j) const {
      if (i == j) {
        return 1;
      }
      switch (_cartan(i, j) * _cartan(j, i)) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: fail(ErrorKind::NonFiniteType, "Cartan product outside {0,1,2,3}");
      }
    }

    bool is_positive_root(SmallVector const& v) const {
      return _positive_index.count(v) != 0;
    }
    bool is_negative_root(SmallVector const& v) const {
      SmallVector neg(v);
      for (auto& x : neg) {
        x = -x;
      }
      return is_positive_root(neg);
    }
    bool is_root(SmallVector const& v) const {
      return is_positive_root(v) || is_negative_root(v);
    }
    //! Index of the simple root equal to v, if any.
    std::optional<std::size_t> simple_index(SmallVector const& v) const {
      for (std::size_t i = 0; i < rank(); ++i) {
        if (_roots[i] == v) {
          return i;
        }
      }
      return std::nullopt;
    }

    void check_root_index(std::size_t i) const {
      if (i >= _roots.size()) {
        fail(ErrorKind::InvalidArgument,
             "simple root index " + std::to_string(i + 1) + " out of range 1.."
                 + std::to_string(_roots.size()));
      }
    }

    friend bool operator==(RootDatum const& a, RootDatum const& b) {
      return a._ambient == b._ambient && a._roots == b._roots && a._coroots == b._coroots;
    }

   private:
    void init();

    std::string              _name;
    std::size_t              _ambient = 0;
    std::vector<SmallVector> _roots;
    std::vector<SmallVector> _coroots;
    SmallMatrix              _cartan;
    std::vector<SmallMatrix> _reflections;
    std::vector<Root>        _positive;
    std::set<SmallVector>    _positive_index;
  };

  namespace detail {

    inline std::int64_t pairing(SmallVector const& v, SmallVector const& covector) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += v[i] * covector[i];
      }
      return s;
    }

    inline void check_finite_type(SmallMatrix const& a) {
      std::size_t const r = a.rows();
      for (std::size_t i = 0; i < r; ++i) {
        if (a(i, i) != 2) {
          fail(ErrorKind::NonFiniteType, "Cartan diagonal entry differs from 2");
        }
        for (std::size_t j = 0; j < r; ++j) {
          if (i == j) {
            continue;
          }
          if (a(i, j) > 0) {
            fail(ErrorKind::NonFiniteType, "positive off-diagonal Cartan entry");
          }
          if ((a(i, j) == 0) != (a(j, i) == 0)) {
            fail(ErrorKind::NonFiniteType, "Cartan matrix zero pattern is not symmetric");
          }
        }
      }
      // symmetrize: d_i a_ij = d_j a_ji with d > 0
      std::vector<Rational> d(r, Rational(0));
      for (std::size_t start = 0; start < r; ++start) {
        if (d[start] != 0) {
          continue;
        }
        d[start] = 1;
        std::vector<std::size_t> stack{start};
        while (!stack.empty()) {
          auto i = stack.back();
          stack.pop_back();
          for (std::size_t j = 0; j < r; ++j) {
            if (i == j || a(i, j) == 0) {
              continue;
            }
            Rational dj = d[i] * a(i, j) / a(j, i);
            if (d[j] == 0) {
              d[j] = dj;
              stack.push_back(j);
            } else if (d[j] != dj) {
              fail(ErrorKind::NonFiniteType, "Cartan matrix is not symmetrizable");
            }
          }
        }
      }
      RationalMatrix s(r, r);
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          s(i, j) = d[i] * a(i, j);
        }
      }
      for (std::size_t k = 1; k <= r; ++k) {
        RationalMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) {
            minor(i, j) = s(i, j);
          }
        }
        if (determinant(minor) <= 0) {
          fail(ErrorKind::NonFiniteType, "symmetrized Cartan matrix is not positive definite");
        }
      }
    }

    inline SmallMatrix cartan_of_type(char family, std::size_t n) {
      SmallMatrix a(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = 2;
      }
      auto link = [&a](std::size_t i, std::size_t j) {
        a(i, j) = -1;
        a(j, i) = -1;
      };
      switch (family) {
        case 'A':
          for (std::size_t i = 0; i + 1 < n; ++i) {
            link(i, i + 1);
          }
          break;
        case 'B':
          // alpha_n short: <alpha_{n-1}, coroot_n> = -2
          for (std::size_t i = 0; i + 1 < n; ++i) {
            link(i, i + 1);
          }
          if (n >= 2) {
            a(n - 1, n - 2) = -2;
          }
          break;
        case 'C':
          for (std::size_t i = 0; i + 1 < n; ++i) {
            link(i, i + 1);
          }
          if (n >= 2) {
            a(n - 2, n - 1) = -2;
          }
          break;
        case 'D':
          for (std::size_t i = 0; i + 2 < n; ++i) {
            link(i, i + 1);
          }
          link(n - 3, n - 1);
          break;
        case 'E':
          // Bourbaki labelling: 1-3-4-5-6-7-8 with 2 attached to 4
          link(0, 2);
          link(1, 3);
          for (std::size_t i = 2; i + 1 < n; ++i) {
            link(i, i + 1);
          }
          break;
        case 'F':
          link(0, 1);
          link(1, 2);
          link(2, 3);
          a(2, 1) = -2;
          break;
        case 'G':
          // alpha_1 short
          a(0, 1) = -3;
          a(1, 0) = -1;
          break;
        default: fail(ErrorKind::InvalidArgument, std::string("unknown Cartan family ") + family);
      }
      return a;
    }

    inline bool valid_type(char family, std::size_t n) {
      switch (family) {
        case 'A': return n >= 1;
        case 'B': return n >= 2;
        case 'C': return n >= 2;
        case 'D': return n >= 4;
        case 'E': return n >= 6 && n <= 8;
        case 'F': return n == 4;
        case 'G': return n == 2;
        default: return false;
      }
    }

  }  // namespace detail

  inline void RootDatum::init() {
    std::size_t const r = _roots.size();
    if (_coroots.size() != r) {
      fail(ErrorKind::RankMismatch, "number of simple roots and coroots differ");
    }
    if (r > _ambient) {
      fail(ErrorKind::RankMismatch, "more simple roots than the ambient rank");
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (_roots[i].size() != _ambient || _coroots[i].size() != _ambient) {
        fail(ErrorKind::DimensionMismatch, "root vector length differs from the ambient rank");
      }
    }
    _cartan = SmallMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < r; ++j) {
        _cartan(i, j) = detail::pairing(_roots[j], _coroots[i]);
      }
    }
    detail::check_finite_type(_cartan);
    if (r > 0) {
      SmallMatrix cor(r, _ambient);
      for (std::size_t i = 0; i < r; ++i) {
        std::copy(_coroots[i].begin(), _coroots[i].end(), cor.row_begin(i));
      }
      if (rank_over_q(cor) != r) {
        fail(ErrorKind::RankMismatch, "simple coroots are linearly dependent");
      }
    }

    _reflections.clear();
    for (std::size_t i = 0; i < r; ++i) {
      SmallMatrix s = SmallMatrix::identity(_ambient);
      for (std::size_t a = 0; a < _ambient; ++a) {
        for (std::size_t b = 0; b < _ambient; ++b) {
          s(a, b) -= _roots[i][a] * _coroots[i][b];
        }
      }
      _reflections.push_back(std::move(s));
    }

    // positive roots by closure of the simple roots under simple reflections
    _positive.clear();
    _positive_index.clear();
    std::map<SmallVector, std::size_t> seen;
    std::vector<std::pair<SmallVector, SmallVector>> queue;  // (root coeffs, coroot coeffs)
    for (std::size_t i = 0; i < r; ++i) {
      SmallVector e(r, 0);
      e[i] = 1;
      queue.emplace_back(e, e);
      seen[e] = 0;
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      if (queue.size() > 100'000) {
        fail(ErrorKind::NonFiniteType, "positive root closure does not terminate");
      }
      auto const c = queue[head].first;
      auto const d = queue[head].second;
      for (std::size_t i = 0; i < r; ++i) {
        std::int64_t pr = 0, pc = 0;
        for (std::size_t j = 0; j < r; ++j) {
          pr += _cartan(i, j) * c[j];
          pc += _cartan(j, i) * d[j];
        }
        SmallVector c2 = c, d2 = d;
        c2[i] -= pr;
        d2[i] -= pc;
        if (std::any_of(c2.begin(), c2.end(), [](auto x) { return x < 0; })) {
          continue;
        }
        if (seen.emplace(c2, 0).second) {
          queue.emplace_back(c2, d2);
        }
      }
    }
    std::sort(queue.begin(), queue.end(), [](auto const& x, auto const& y) {
      auto hx = std::accumulate(x.first.begin(), x.first.end(), std::int64_t(0));
      auto hy = std::accumulate(y.first.begin(), y.first.end(), std::int64_t(0));
      return hx != hy ? hx < hy : x.first > y.first;
    });
    for (auto const& [c, d] : queue) {
      Root root;
      root.coefficients = c;
      root.vector.assign(_ambient, 0);
      root.coroot.assign(_ambient, 0);
      for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t a = 0; a < _ambient; ++a) {
          root.vector[a] += c[j] * _roots[j][a];
          root.coroot[a] += d[j] * _coroots[j][a];
        }
      }
      _positive_index.insert(root.vector);
      _positive.push_back(std::move(root));
    }
  }

  inline RootDatum RootDatum::named(std::string_view spec) {
    std::string const full(spec);
    if (spec.empty()) {
      fail(ErrorKind::InvalidArgument, "empty Cartan type");
    }
    RootDatum   result;
    bool        first = true;
    std::size_t pos   = 0;
    while (pos <= spec.size()) {
      auto        next  = spec.find('x', pos);
      auto        token = spec.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
      if (token.size() < 2) {
        fail(ErrorKind::InvalidArgument, "malformed Cartan type '" + full + "'");
      }
      char const family = token[0];
      std::size_t n = 0;
      for (char ch : token.substr(1)) {
        if (ch < '0' || ch > '9') {
          fail(ErrorKind::InvalidArgument, "malformed Cartan type '" + full + "'");
        }
        n = n * 10 + static_cast<std::size_t>(ch - '0');
      }
      if (!detail::valid_type(family, n)) {
        fail(ErrorKind::InvalidArgument, "unsupported Cartan type '" + std::string(token) + "'");
      }
      auto factor = from_cartan(detail::cartan_of_type(family, n), n, std::string(token));
      result      = first ? factor : product(result, factor);
      first       = false;
      if (next == std::string_view::npos) {
        break;
      }
      pos = next + 1;
    }
    result._name = full;
    return result;
  }

  //! A Weyl group element: a reduced word and the matrix it induces on Z^n.
  class WeylElement {
   public:
    WeylElement() = default;
    WeylElement(Word word, SmallMatrix matrix) : _word(std::move(word)), _matrix(std::move(matrix)) {}

    static WeylElement identity(RootDatum const& d) {
      return WeylElement({}, SmallMatrix::identity(d.ambient_rank()));
    }

    //! Product of simple reflections; the word is kept as given.
    static WeylElement from_word(RootDatum const& d, Word const& word) {
      SmallMatrix m = SmallMatrix::identity(d.ambient_rank());
      for (auto i : word) {
        m = m * d.reflection(i);
      }
      return WeylElement(word, std::move(m));
    }

    Word const& word() const noexcept {
      return _word;
    }
    SmallMatrix const& matrix() const noexcept {
      return _matrix;
    }
    std::size_t length() const noexcept {
      return _word.size();
    }

    SmallVector act(SmallVector const& v) const {
      return _matrix * v;
    }

    RationalVector act(RationalVector const& v) const {
      if (v.size() != _matrix.cols()) {
        fail(ErrorKind::DimensionMismatch, "vector dimension differs from ambient rank");
      }
      RationalVector out(v.size(), Rational(0));
      for (std::size_t i = 0; i < _matrix.rows(); ++i) {
        for (std::size_t j = 0; j < _matrix.cols(); ++j) {
          if (_matrix(i, j) != 0) {
            out[i] += Rational(_matrix(i, j)) * v[j];
          }
        }
      }
      return out;
    }

    IntVector act(IntVector const& v) const {
      if (v.size() != _matrix.cols()) {
        fail(ErrorKind::DimensionMismatch, "vector dimension differs from ambient rank");
      }
      IntVector out(v.size(), Integer(0));
      for (std::size_t i = 0; i < _matrix.rows(); ++i) {
        for (std::size_t j = 0; j < _matrix.cols(); ++j) {
          if (_matrix(i, j) != 0) {
            out[i] += Integer(_matrix(i, j)) * v[j];
          }
        }
      }
      return out;
    }

    friend bool operator==(WeylElement const& a, WeylElement const& b) {
      return a._matrix == b._matrix;
    }

   private:
    Word        _word;
    SmallMatrix _matrix;
  };

  //! s_i(v) = v - <v, coroot_i> alpha_i, extended to words.
  inline RationalVector apply(WeylElement const& w, RationalVector const& v) {
    return w.act(v);
  }

  //! "s1,s2,s1"; the identity renders as "e".
  inline std::string word_to_string(Word const& word) {
    if (word.empty()) {
      return "e";
    }
    std::string out;
    for (std::size_t k = 0; k < word.size(); ++k) {
      if (k != 0) {
        out += ',';
      }
      out += 's' + std::to_string(word[k] + 1);
    }
    return out;
  }

  //! Accepts "e", "s1,s2", "1,2", "s1s2" (1-based indices).
  inline Word parse_word(std::string_view text) {
    Word word;
    if (text.empty() || text == "e") {
      return word;
    }
    std::size_t i = 0;
    while (i < text.size()) {
      char c = text[i];
      if (c == ',' || c == ' ' || c == 's') {
        ++i;
        continue;
      }
      if (c < '0' || c > '9') {
        fail(ErrorKind::InvalidArgument, "malformed word '" + std::string(text) + "'");
      }
      std::size_t n = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        n = n * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
      if (n == 0) {
        fail(ErrorKind::InvalidArgument, "simple reflection indices start at 1");
      }
      word.push_back(n - 1);
    }
    return word;
  }

  //! The whole Weyl group, enumerated in ShortLex order (length, then the
  //! lexicographically least reduced word) with matrix-based lookup.
  class WeylGroup {
   public:
    explicit WeylGroup(RootDatum datum, std::size_t cap = default_group_cap)
        : _datum(std::move(datum)) {
      std::size_t const n = _datum.ambient_rank();
      add(WeylElement({}, SmallMatrix::identity(n)));
      std::size_t level_begin = 0;
      while (level_begin < _elements.size()) {
        std::size_t const level_end = _elements.size();
        std::vector<WeylElement> candidates;
        for (std::size_t k = level_begin; k < level_end; ++k) {
          for (std::size_t i = 0; i < _datum.rank(); ++i) {
            auto const& e = _elements[k];
            if (!e.word().empty() && e.word().back() == i) {
              continue;
            }
            Word w = e.word();
            w.push_back(i);
            candidates.emplace_back(std::move(w), e.matrix() * _datum.reflection(i));
          }
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](auto const& a, auto const& b) { return a.word() < b.word(); });
        for (auto& c : candidates) {
          if (_index.count(c.matrix().data()) == 0) {
            if (_elements.size() >= cap) {
              fail(ErrorKind::GroupTooLarge,
                   "Weyl group exceeds the cap of " + std::to_string(cap) + " elements");
            }
            add(std::move(c));
          }
        }
        level_begin = level_end;
      }
    }

    RootDatum const& datum() const noexcept {
      return _datum;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::vector<WeylElement> const& elements() const noexcept {
      return _elements;
    }
    WeylElement const& operator[](std::size_t i) const {
      return _elements[i];
    }
    WeylElement const& longest() const {
      return _elements.back();
    }

    std::size_t index_of(SmallMatrix const& m) const {
      auto it = _index.find(m.data());
      if (it == _index.end()) {
        fail(ErrorKind::InvalidArgument, "matrix is not an element of this Weyl group");
      }
      return it->second;
    }
    std::size_t index_of(WeylElement const& w) const {
      return index_of(w.matrix());
    }
    std::size_t index_of_word(Word const& word) const {
      return index_of(WeylElement::from_word(_datum, word).matrix());
    }

    std::size_t multiply(std::size_t a, std::size_t b) const {
      return index_of(_elements[a].matrix() * _elements[b].matrix());
    }
    std::size_t inverse(std::size_t a) const {
      Word w = _elements[a].word();
      std::reverse(w.begin(), w.end());
      return index_of_word(w);
    }

    //! Number of positive roots sent to negative roots.
    std::size_t inversion_count(std::size_t a) const {
      std::size_t count = 0;
      for (auto const& root : _datum.positive_roots()) {
        if (_datum.is_negative_root(_elements[a].act(root.vector))) {
          ++count;
        }
      }
      return count;
    }

    //! w(alpha_i) > 0 for every i in subset.
    bool keeps_positive(std::size_t a, std::vector<std::size_t> const& subset) const {
      for (auto i : subset) {
        if (!_datum.is_positive_root(_elements[a].act(_datum.simple_root(i)))) {
          return false;
        }
      }
      return true;
    }

    //! Element indices of the standard parabolic subgroup W_P.
    std::vector<std::size_t> parabolic(std::vector<std::size_t> const& subset) const {
      std::set<std::size_t> allowed(subset.begin(), subset.end());
      std::vector<std::size_t> out;
      for (std::size_t k = 0; k < _elements.size(); ++k) {
        auto const& w = _elements[k].word();
        if (std::all_of(w.begin(), w.end(), [&](auto i) { return allowed.count(i) != 0; })) {
          out.push_back(k);
        }
      }
      return out;
    }

    //! All reduced words of an element (exponential; small groups only).
    std::vector<Word> reduced_words(std::size_t a) const {
      std::map<std::size_t, std::vector<Word>> memo;
      return reduced_words_impl(a, memo);
    }

   private:
    std::vector<Word> reduced_words_impl(std::size_t a,
                                         std::map<std::size_t, std::vector<Word>>& memo) const {
      if (auto it = memo.find(a); it != memo.end()) {
        return it->second;
      }
      std::vector<Word> out;
      std::size_t const len = _elements[a].length();
      if (len == 0) {
        out.push_back({});
      } else {
        for (std::size_t i = 0; i < _datum.rank(); ++i) {
          // right descent: l(w s_i) < l(w)
          std::size_t b = index_of(_elements[a].matrix() * _datum.reflection(i));
          if (_elements[b].length() + 1 == len) {
            for (auto w : reduced_words_impl(b, memo)) {
              w.push_back(i);
              out.push_back(std::move(w));
            }
          }
        }
        std::sort(out.begin(), out.end());
      }
      memo[a] = out;
      return out;
    }

    void add(WeylElement e) {
      _index.emplace(e.matrix().data(), _elements.size());
      _elements.push_back(std::move(e));
    }

    RootDatum                                    _datum;
    std::vector<WeylElement>                     _elements;
    std::map<std::vector<std::int64_t>, std::size_t> _index;
  };

  inline std::vector<WeylElement> enumerate_weyl(RootDatum const& d,
                                                 std::size_t cap = default_group_cap) {
    return WeylGroup(d, cap).elements();
  }

  enum class CosetSide {
    left,   // w W_P: representatives with w(alpha) > 0 for alpha in the subset
    right,  // W_P w: representatives with w^{-1}(alpha) > 0
  };

  inline std::vector<std::size_t> min_coset_rep_indices(WeylGroup const&                group,
                                                        std::vector<std::size_t> const& subset,
                                                        CosetSide                       side) {
    for (auto i : subset) {
      group.datum().check_root_index(i);
    }
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < group.size(); ++k) {
      std::size_t const probe = side == CosetSide::left ? k : group.inverse(k);
      if (group.keeps_positive(probe, subset)) {
        out.push_back(k);
      }
    }
    return out;
  }

  inline std::vector<WeylElement> min_coset_reps(RootDatum const&                d,
                                                 std::vector<std::size_t> const& subset,
                                                 CosetSide                       side,
                                                 std::size_t cap = default_group_cap) {
    WeylGroup                group(d, cap);
    std::vector<WeylElement> out;
    for (auto k : min_coset_rep_indices(group, subset, side)) {
      out.push_back(group[k]);
    }
    return out;
  }

  //! The unique vector in the rational span of the simple roots pairing to 1
  //! with every simple coroot; half the sum of the positive roots.
  inline RationalVector rho(RootDatum const& d) {
    std::size_t const r = d.rank();
    RationalVector    out(d.ambient_rank(), Rational(0));
    if (r == 0) {
      return out;
    }
    auto           inv = inverse(matrix_cast<Rational>(d.cartan()));
    RationalVector c(r, Rational(0));
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t i = 0; i < r; ++i) {
        c[j] += inv(j, i);
      }
    }
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t a = 0; a < d.ambient_rank(); ++a) {
        out[a] += c[j] * d.simple_root(j)[a];
      }
    }
    return out;
  }

}  // namespace sphcomb
