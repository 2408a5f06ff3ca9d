#pragma once

// JSON codecs.  Integers are JSON numbers when they fit in 64 bits and
// decimal strings otherwise; non-integral rationals are "p/q" strings.

#include <json.hpp>

#include "k3kit/isometry.hpp"
#include "k3kit/lattice.hpp"
#include "k3kit/matrix.hpp"
#include "k3kit/mukai.hpp"
#include "k3kit/numeric.hpp"
#include "k3kit/padic.hpp"
#include "k3kit/polynomial.hpp"
#include "k3kit/zeta.hpp"

namespace nlohmann {

template <>
struct adl_serializer<mpz_class> {
  static void to_json(json& j, const mpz_class& x);
  static void from_json(const json& j, mpz_class& x);
};

template <>
struct adl_serializer<mpq_class> {
  static void to_json(json& j, const mpq_class& x);
  static void from_json(const json& j, mpq_class& x);
};

}  // namespace nlohmann

namespace k3kit {

using json = nlohmann::json;

template <class T>
void to_json(json& j, const Matrix<T>& m) {
  j = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(m.row(i));
}

template <class T>
void from_json(const json& j, Matrix<T>& m) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "matrix must be an array of rows");
  std::vector<std::vector<T>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw Error(ErrorKind::parse, "matrix row must be an array");
    rows.push_back(r.get<std::vector<T>>());
  }
  m = Matrix<T>::from_rows(rows);
}

template <class T>
void to_json(json& j, const Poly<T>& p) {
  j = p.is_zero() ? json::array({T(0)}) : json(p.coeffs());
}

template <class T>
void from_json(const json& j, Poly<T>& p) {
  if (!j.is_array()) throw Error(ErrorKind::parse, "polynomial must be a coefficient array");
  p = Poly<T>(j.get<std::vector<T>>());
}

void to_json(json& j, const IntegerLattice& l);
void from_json(const json& j, IntegerLattice& l);

void to_json(json& j, const MukaiVector& v);
/// Accepts {"r":..,"c1":[..],"s":..} or a flat coordinate array (r, c1..., s).
void from_json(const json& j, MukaiVector& v);

void to_json(json& j, const SurfaceDescriptor& S);
void from_json(const json& j, SurfaceDescriptor& S);

void to_json(json& j, const QuadraticForm& f);
/// Accepts {"diagonal": [...]} or {"gram": [[...]]}.
void from_json(const json& j, QuadraticForm& f);

void to_json(json& j, const WittClass& w);

void to_json(json& j, const MukaiIsometry& g);

void to_json(json& j, const WeilPolynomialP2& P);
/// Accepts {"q": .., "p2": [...]}.
void from_json(const json& j, WeilPolynomialP2& P);

void to_json(json& j, const WeilReport& r);
void to_json(json& j, const FactoredPoly& f);
/// Factors of degree above this are written only in factored form.
inline constexpr long kMaxExpandedDegree = 1000;
void to_json(json& j, const ZetaFunction& Z);

void to_json(json& j, const Signature& s);
void to_json(json& j, const Sublattice& s);

/// Reads a value that may be a JSON document or a shorthand such as "1,2,3".
json parse_json_argument(const std::string& text);

}  // namespace k3kit
