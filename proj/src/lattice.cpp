#include "k3kit/lattice.hpp"

#include <cctype>
#include <functional>

namespace k3kit {

IntegerLattice::IntegerLattice(IntMatrix gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
  if (!gram_.is_square()) throw Error(ErrorKind::dimension, "Gram matrix must be square");
  if (!gram_.is_symmetric()) throw Error(ErrorKind::invalid_argument, "Gram matrix must be symmetric");
}

bool preserves_gram(const IntMatrix& gram, const RatMatrix& matrix) {
  if (matrix.rows() != gram.rows() || matrix.cols() != gram.cols()) return false;
  const RatMatrix g = to_rational(gram);
  return matrix.transpose() * g * matrix == g;
}

LatticeIsometry::LatticeIsometry(const IntegerLattice& ambient, RatMatrix matrix)
    : ambient_(ambient), matrix_(std::move(matrix)) {
  if (!preserves_gram(ambient_.gram(), matrix_)) {
    throw Error(ErrorKind::not_isometry, "matrix does not preserve the Gram matrix");
  }
}

IntegerLattice hyperbolic_plane() { return IntegerLattice(IntMatrix{{0, 1}, {1, 0}}, "U"); }

IntegerLattice e8_lattice() {
  // Bourbaki labelling: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  const std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (auto [a, b] : edges) {
    g(a - 1, b - 1) = -1;
    g(b - 1, a - 1) = -1;
  }
  return IntegerLattice(std::move(g), "E8");
}

IntegerLattice rank_one_lattice(const Integer& m) {
  return IntegerLattice(IntMatrix{{m}}, "<" + m.get_str() + ">");
}

namespace {

std::string join_label(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + " + " + b;
}

}  // namespace

IntegerLattice direct_sum(const IntegerLattice& a, const IntegerLattice& b) {
  return IntegerLattice(direct_sum(a.gram(), b.gram()), join_label(a.label(), b.label()));
}

IntegerLattice scaled(const IntegerLattice& l, const Integer& factor) {
  return IntegerLattice(l.gram().scaled(factor), l.label().empty() ? std::string{} : l.label() + "(" + factor.get_str() + ")");
}

IntegerLattice power(const IntegerLattice& l, unsigned exponent) {
  IntegerLattice out(IntMatrix(0, 0));
  for (unsigned i = 0; i < exponent; ++i) out = IntegerLattice(direct_sum(out.gram(), l.gram()));
  if (!l.label().empty()) out = IntegerLattice(out.gram(), l.label() + "^" + std::to_string(exponent));
  return out;
}

IntegerLattice k3_lattice() {
  return IntegerLattice(build_lattice("U^3 + E8(-1)^2").gram(), "U^3 + E8(-1)^2");
}

IntegerLattice extended_k3_lattice() {
  return IntegerLattice(build_lattice("U^4 + E8(-1)^2").gram(), "U^4 + E8(-1)^2");
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class LatticeParser {
 public:
  LatticeParser(std::string_view text, const std::map<std::string, Integer>& params)
      : text_(text), params_(params) {}

  IntegerLattice parse() {
    IntegerLattice l = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return IntegerLattice(l.gram(), std::string(text_));
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::parse, "lattice expression '" + std::string(text_) + "': " + why +
                                      " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(std::string_view token) {
    skip_ws();
    return text_.substr(pos_, token.size()) == token;
  }

  bool accept(std::string_view token) {
    if (!peek(token)) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  IntegerLattice expr() {
    IntegerLattice acc = term();
    while (accept("+") || accept("\xE2\x8A\x95")) acc = direct_sum(acc, term());
    return acc;
  }

  IntegerLattice term() {
    if (accept("-")) return scaled(postfix(), -1);
    return postfix();
  }

  IntegerLattice postfix() {
    IntegerLattice l = primary();
    while (true) {
      if (accept("^")) {
        Integer e = signed_literal();
        if (e < 0 || e > 1000) fail("exponent out of range");
        l = power(l, static_cast<unsigned>(e.get_ui()));
      } else if (accept("(")) {
        Integer f = signed_literal();
        expect(")");
        l = scaled(l, f);
      } else {
        return l;
      }
    }
  }

  IntegerLattice primary() {
    if (accept("E8")) return e8_lattice();
    if (accept("gram(")) {
      IntMatrix g = gram_rows();
      expect(")");
      if (!g.is_square() || !g.is_symmetric()) fail("custom Gram matrix must be square and symmetric");
      return IntegerLattice(std::move(g));
    }
    if (accept("U")) return hyperbolic_plane();
    if (accept("<")) {
      Integer m = int_expr();
      expect(">");
      return rank_one_lattice(m);
    }
    if (accept("(")) {
      IntegerLattice l = expr();
      expect(")");
      return l;
    }
    fail("expected U, E8, <m>, gram(...) or '('");
  }

  IntMatrix gram_rows() {
    const bool nested = peek("[[");
    if (nested) expect("[");
    std::vector<std::vector<Integer>> rows;
    do {
      expect("[");
      std::vector<Integer> row;
      if (!peek("]")) {
        do {
          row.push_back(int_expr());
        } while (accept(","));
      }
      expect("]");
      rows.push_back(std::move(row));
    } while (accept(","));
    if (nested) expect("]");
    for (const auto& r : rows)
      if (r.size() != rows.size()) fail("custom Gram matrix must be square");
    return IntMatrix::from_rows(rows);
  }

  Integer signed_literal() {
    skip_ws();
    bool negative = false;
    if (accept("-")) negative = true;
    else accept("+");
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    Integer v(std::string(text_.substr(start, pos_ - start)));
    return negative ? Integer(-v) : v;
  }

  // int-expr := product (('+'|'-') product)*
  Integer int_expr() {
    Integer acc = product();
    while (true) {
      if (accept("+")) acc += product();
      else if (accept("-")) acc -= product();
      else return acc;
    }
  }

  Integer product() {
    Integer acc = factor();
    while (true) {
      skip_ws();
      if (accept("*")) {
        acc *= factor();
      } else if (pos_ < text_.size() &&
                 (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '(')) {
        acc *= factor();  // implicit multiplication, as in "2n"
      } else {
        return acc;
      }
    }
  }

  Integer factor() {
    skip_ws();
    if (accept("-")) return -factor();
    if (accept("(")) {
      Integer v = int_expr();
      expect(")");
      return v;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      return signed_literal();
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected an integer or parameter");
    const std::string name(text_.substr(start, pos_ - start));
    auto it = params_.find(name);
    if (it == params_.end()) fail("unbound parameter '" + name + "'");
    return it->second;
  }

  std::string_view text_;
  const std::map<std::string, Integer>& params_;
  std::size_t pos_ = 0;
};

}  // namespace

IntegerLattice build_lattice(std::string_view expression, const std::map<std::string, Integer>& params) {
  return LatticeParser(expression, params).parse();
}

// ---------------------------------------------------------------------------

namespace {

void check_length(const IntegerLattice& l, std::size_t n) {
  if (n != l.rank()) {
    throw Error(ErrorKind::dimension, "vector of length " + std::to_string(n) +
                                          " in a lattice of rank " + std::to_string(l.rank()));
  }
}

}  // namespace

Rational gram_pairing(const IntegerLattice& l, const RatVector& x, const RatVector& y) {
  check_length(l, x.size());
  check_length(l, y.size());
  Rational acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * l.gram()(i, j) * y[j];
  }
  return acc;
}

Integer gram_pairing(const IntegerLattice& l, const IntVector& x, const IntVector& y) {
  check_length(l, x.size());
  check_length(l, y.size());
  Integer acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) acc += x[i] * l.gram()(i, j) * y[j];
  }
  return acc;
}

Integer discriminant(const IntegerLattice& l) { return determinant(l.gram()); }

IntVector discriminant_group(const IntegerLattice& l) {
  if (discriminant(l) == 0) throw Error(ErrorKind::singular, "discriminant group of a singular lattice");
  IntVector out;
  for (auto& d : smith_invariants(l.gram()))
    if (d > 1) out.push_back(d);
  return out;
}

Signature signature(const IntegerLattice& l) {
  Signature s;
  for (const auto& d : congruence_diagonal(to_rational(l.gram()))) {
    if (d > 0) ++s.positive;
    else if (d < 0) ++s.negative;
    else ++s.null;
  }
  return s;
}

bool is_primitive_vector(const IntegerLattice& l, const IntVector& x) {
  check_length(l, x.size());
  const Integer g = gcd_of(x);
  if (g == 0) throw Error(ErrorKind::invalid_argument, "primitivity of the zero vector");
  return g == 1;
}

IntMatrix restricted_gram(const IntMatrix& gram, const IntMatrix& rows) {
  return rows * gram * rows.transpose();
}

Sublattice orthogonal_complement(const IntegerLattice& l, const IntVector& v) {
  check_length(l, v.size());
  if (gcd_of(v) == 0) throw Error(ErrorKind::invalid_argument, "orthogonal complement of the zero vector");
  IntVector gv = l.gram() * v;
  IntMatrix functional(1, l.rank());
  for (std::size_t j = 0; j < l.rank(); ++j) functional(0, j) = gv[j];
  IntMatrix basis = integer_kernel(functional);
  return {IntegerLattice(restricted_gram(l.gram(), basis)), basis};
}

Sublattice invariant_sublattice(const LatticeIsometry& phi) {
  const auto& l = phi.ambient();
  RatMatrix shifted = phi.matrix() - RatMatrix::identity(l.rank());
  IntMatrix basis = integer_kernel(clear_row_denominators(shifted));
  return {IntegerLattice(restricted_gram(l.gram(), basis)), basis};
}

RatVector reflect(const IntegerLattice& l, const RatVector& u, const RatVector& x) {
  const Rational uu = gram_pairing(l, u, u);
  if (uu == 0) throw Error(ErrorKind::isotropic, "reflection through an isotropic vector");
  const Rational f = 2 * gram_pairing(l, x, u) / uu;
  RatVector out = x;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= f * u[i];
  return out;
}

RatMatrix reflection_matrix(const IntMatrix& gram, const RatVector& u) {
  const std::size_t n = gram.rows();
  if (u.size() != n) throw Error(ErrorKind::dimension, "mirror vector length mismatch");
  const RatVector gu = to_rational(gram) * u;
  Rational uu = 0;
  for (std::size_t i = 0; i < n; ++i) uu += u[i] * gu[i];
  if (uu == 0) throw Error(ErrorKind::isotropic, "reflection through an isotropic vector");
  RatMatrix r = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) -= 2 * u[i] * gu[j] / uu;
  return r;
}

std::optional<IntMatrix> find_isometry(const IntegerLattice& a, const IntegerLattice& b, int bound) {
  const std::size_t n = a.rank();
  if (n != b.rank()) return std::nullopt;
  if (n > 4) throw Error(ErrorKind::out_of_bounds, "exhaustive isometry search supports rank <= 4");
  if (bound < 0) throw Error(ErrorKind::invalid_argument, "negative coordinate bound");
  if (n == 0) return IntMatrix(0, 0);
  if (discriminant(a) != discriminant(b)) return std::nullopt;

  // candidate images for each basis vector of b, bucketed by norm
  std::vector<IntVector> candidates;
  IntVector x(n, Integer(-bound));
  while (true) {
    candidates.push_back(x);
    std::size_t k = 0;
    while (k < n && x[k] == bound) x[k++] = -bound;
    if (k == n) break;
    ++x[k];
  }

  std::vector<const IntVector*> chosen(n, nullptr);
  std::optional<IntMatrix> found;
  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (found) return;
    if (i == n) {
      IntMatrix m(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) m(r, c) = (*chosen[c])[r];
      const Integer det = determinant(m);
      if (det == 1 || det == -1) found = m;
      return;
    }
    for (const auto& cand : candidates) {
      if (gram_pairing(a, cand, cand) != b.gram()(i, i)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = gram_pairing(a, cand, *chosen[j]) == b.gram()(i, j);
      if (!ok) continue;
      chosen[i] = &cand;
      search(i + 1);
      if (found) return;
    }
  };
  search(0);
  return found;
}

}  // namespace k3kit
