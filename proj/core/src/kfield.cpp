#include "unitsq/kfield.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "unitsq/arith.hpp"
#include "unitsq/error.hpp"

namespace unitsq {

namespace {

void require_basis(std::int64_t d1, std::int64_t d2) {
  if (d1 < 2 || d2 < 2 || d1 == d2 || !is_squarefree(d1) || !is_squarefree(d2) ||
      std::gcd(d1, d2) != 1) {
    throw DomainError("K = Q(sqrt " + std::to_string(d1) + ", sqrt " + std::to_string(d2) +
                      ") needs distinct coprime squarefree radicands >= 2");
  }
}

void require_same_field(const BiquadElement& u, const BiquadElement& v) {
  if (u.d1() != v.d1() || u.d2() != v.d2()) throw DomainError("elements of different fields");
}

}  // namespace

BiquadElement::BiquadElement(std::int64_t d1, std::int64_t d2) : d1_(d1), d2_(d2) {
  require_basis(d1, d2);
}

BiquadElement::BiquadElement(std::int64_t d1, std::int64_t d2, std::array<mpq_class, 4> coeffs)
    : d1_(d1), d2_(d2), c_(std::move(coeffs)) {
  require_basis(d1, d2);
  for (auto& c : c_) c.canonicalize();
}

BiquadElement BiquadElement::rational(std::int64_t d1, std::int64_t d2, const mpq_class& value) {
  return BiquadElement(d1, d2, {value, 0, 0, 0});
}

bool BiquadElement::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

BiquadElement BiquadElement::galois(int s1, int s2) const {
  BiquadElement r = *this;
  if (s1 < 0) r.c_[1] = -r.c_[1];
  if (s2 < 0) r.c_[2] = -r.c_[2];
  if (s1 * s2 < 0) r.c_[3] = -r.c_[3];
  return r;
}

BiquadElement BiquadElement::operator-() const {
  BiquadElement r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

BiquadElement operator+(const BiquadElement& u, const BiquadElement& v) {
  require_same_field(u, v);
  BiquadElement r = u;
  for (std::size_t k = 0; k < 4; ++k) r.c_[k] += v.c_[k];
  return r;
}

BiquadElement operator-(const BiquadElement& u, const BiquadElement& v) { return u + (-v); }

BiquadElement operator*(const BiquadElement& u, const BiquadElement& v) {
  require_same_field(u, v);
  // Basis 1, s1, s2, s3 with s1 s2 = s3, s1 s3 = d1 s2, s2 s3 = d2 s1,
  // s1^2 = d1, s2^2 = d2, s3^2 = d1 d2.
  const mpq_class d1(to_mpz(u.d1_)), d2(to_mpz(u.d2_));
  const mpq_class d12 = d1 * d2;
  const auto& a = u.c_;
  const auto& b = v.c_;
  BiquadElement r = u;
  r.c_[0] = a[0] * b[0] + d1 * a[1] * b[1] + d2 * a[2] * b[2] + d12 * a[3] * b[3];
  r.c_[1] = a[0] * b[1] + a[1] * b[0] + d2 * (a[2] * b[3] + a[3] * b[2]);
  r.c_[2] = a[0] * b[2] + a[2] * b[0] + d1 * (a[1] * b[3] + a[3] * b[1]);
  r.c_[3] = a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1];
  return r;
}

BiquadElement operator*(const mpq_class& k, const BiquadElement& v) {
  BiquadElement r = v;
  for (auto& c : r.c_) c *= k;
  return r;
}

bool operator==(const BiquadElement& u, const BiquadElement& v) {
  return u.d1_ == v.d1_ && u.d2_ == v.d2_ && u.c_ == v.c_;
}

std::string BiquadElement::to_string() const {
  std::ostringstream os;
  os << c_[0].get_str() << " + " << c_[1].get_str() << "*sqrt(" << d1_ << ") + "
     << c_[2].get_str() << "*sqrt(" << d2_ << ") + " << c_[3].get_str() << "*sqrt("
     << d1_ * d2_ << ")";
  return os.str();
}

BiquadElement embed(const QuadraticInteger& u, std::int64_t d1, std::int64_t d2, Subfield which) {
  const std::int64_t expected = which == Subfield::first    ? d1
                                : which == Subfield::second ? d2
                                                            : d1 * d2;
  if (u.radicand() != expected) {
    throw DomainError("embed: radicand " + std::to_string(u.radicand()) + " does not match " +
                      std::to_string(expected));
  }
  const mpz_class den = u.denom();
  std::array<mpq_class, 4> c{mpq_class(u.x(), den), 0, 0, 0};
  const std::size_t slot = which == Subfield::first ? 1 : which == Subfield::second ? 2 : 3;
  c[slot] = mpq_class(u.y(), den);
  return BiquadElement(d1, d2, std::move(c));
}

mpq_class ktrace(const BiquadElement& u) { return 4 * u[0]; }

mpq_class knorm(const BiquadElement& u) {
  const BiquadElement n = u * u.galois(-1, 1) * u.galois(1, -1) * u.galois(-1, -1);
  if (!n.is_rational()) throw InternalError("product of Galois conjugates is not rational");
  return n[0];
}

std::optional<RationalSquareWitness> rational_square_in_K(const mpq_class& q, std::int64_t d1,
                                                          std::int64_t d2) {
  // K is totally real: negative rationals are never squares, and zero is
  // excluded because it carries no information about units.
  if (sgn(q) <= 0) return std::nullopt;
  for (unsigned i = 0; i < 2; ++i) {
    for (unsigned k = 0; k < 2; ++k) {
      mpq_class scaled = q;
      if (i) scaled *= to_mpz(d1);
      if (k) scaled *= to_mpz(d2);
      scaled.canonicalize();
      auto num = exact_sqrt(scaled.get_num());
      auto den = exact_sqrt(scaled.get_den());
      if (num && den) return RationalSquareWitness{i, k, mpq_class(*num, *den)};
    }
  }
  return std::nullopt;
}

KubotaData kubota_data(const FundamentalUnit& e1, const FundamentalUnit& e2,
                       const FundamentalUnit& e3) {
  const std::int64_t d1 = e1.element.radicand();
  const std::int64_t d2 = e2.element.radicand();
  if (e3.element.radicand() != d1 * d2) {
    throw PreconditionError("third unit must come from Q(sqrt(d1 d2))");
  }
  for (const FundamentalUnit* e : {&e1, &e2, &e3}) {
    if (e->norm != -1 || norm(e->element) != -1) {
      throw PreconditionError("unit " + e->element.to_string() + " does not have norm -1");
    }
  }
  const BiquadElement u1 = embed(e1.element, d1, d2, Subfield::first);
  const BiquadElement u2 = embed(e2.element, d1, d2, Subfield::second);
  const BiquadElement u3 = embed(e3.element, d1, d2, Subfield::product);
  const BiquadElement prod = u1 * u2 * u3;

  KubotaData data{d1, d2, prod,
                  {prod + u1 + u2 - u3, prod + u1 - u2 + u3, prod - u1 + u2 + u3,
                   prod - u1 - u2 - u3},
                  {}};
  const bool integral = e1.element.denom() == 1 && e2.element.denom() == 1 &&
                        e3.element.denom() == 1;
  for (std::size_t j = 0; j < 4; ++j) {
    data.cs[j] = ktrace(data.alphas[j]);
    if (integral && data.cs[j].get_den() != 1) throw InternalError("c_j is not an integer");
    if (!(data.alphas[j] * data.alphas[j] == data.cs[j] * prod)) {
      throw InternalError("alpha_" + std::to_string(j + 1) + "^2 != c_j * e1 e2 e3 for (d1, d2) = (" +
                          std::to_string(d1) + ", " + std::to_string(d2) + ")");
    }
  }
  return data;
}

SquarenessVerdict is_square_in_K(const KubotaData& data) {
  SquarenessVerdict v;
  for (std::size_t j = 0; j < 4 && !v.witness; ++j) {
    // alpha_j = 0 would make c_j = 0 say nothing about e1 e2 e3.
    if (data.alphas[j] == BiquadElement(data.d1, data.d2)) continue;
    if (auto w = rational_square_in_K(data.cs[j], data.d1, data.d2)) {
      v.witness = SquareWitness{static_cast<int>(j + 1), std::move(*w)};
    }
  }
  v.square = v.witness.has_value();
  v.alpha1_criterion = rational_square_in_K(data.cs[0], data.d1, data.d2).has_value();
  v.criteria_agree = v.square == v.alpha1_criterion;
  return v;
}

}  // namespace unitsq
