#include "unitsq/qint.hpp"

#include <sstream>
#include <utility>

#include "unitsq/arith.hpp"
#include "unitsq/error.hpp"
#include "unitsq/zi.hpp"

namespace unitsq {

namespace {

void require_radicand(std::int64_t d) {
  if (d < 2) throw DomainError("radicand must be >= 2, got " + std::to_string(d));
  if (!is_squarefree(d)) {
    const std::int64_t r = isqrt(d);
    if (r * r == d) throw DomainError("radicand " + std::to_string(d) + " is a perfect square");
    throw DomainError("radicand " + std::to_string(d) + " is not squarefree");
  }
}

// sign(a + b*sqrt(d)) for integers a, b and d > 0.
int sign_of(const mpz_class& a, const mpz_class& b, std::int64_t d) {
  const int sa = sgn(a), sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  // Opposite signs: compare a^2 with d*b^2.
  const mpz_class lhs = a * a;
  const mpz_class rhs = to_mpz(d) * b * b;
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // impossible for squarefree d > 1 and b != 0
  return c > 0 ? sa : sb;
}

}  // namespace

QuadraticInteger::QuadraticInteger(std::int64_t d, mpz_class x, mpz_class y, unsigned denom)
    : d_(d), x_(std::move(x)), y_(std::move(y)), denom_(denom) {
  require_radicand(d_);
  if (denom_ != 1 && denom_ != 2) throw DomainError("denominator must be 1 or 2");
  canonicalize();
}

QuadraticInteger::QuadraticInteger(Unchecked, std::int64_t d, mpz_class x, mpz_class y,
                                   unsigned denom)
    : d_(d), x_(std::move(x)), y_(std::move(y)), denom_(denom) {
  canonicalize();
}

void QuadraticInteger::canonicalize() {
  if (denom_ == 1) return;
  const bool x_odd = mpz_odd_p(x_.get_mpz_t()) != 0;
  const bool y_odd = mpz_odd_p(y_.get_mpz_t()) != 0;
  if (!x_odd && !y_odd) {
    x_ /= 2;
    y_ /= 2;
    denom_ = 1;
    return;
  }
  if (x_odd != y_odd || mod_floor(d_, 4) != 1) {
    throw DomainError("(" + x_.get_str() + " + " + y_.get_str() + "*sqrt(" + std::to_string(d_) +
                      "))/2 is not in the maximal order");
  }
}

QuadraticInteger QuadraticInteger::rational(std::int64_t d, const mpz_class& x) {
  return QuadraticInteger(d, x, 0, 1);
}

int QuadraticInteger::sign() const { return sign_of(x_, y_, d_); }

QuadraticInteger QuadraticInteger::operator-() const {
  return QuadraticInteger(Unchecked{}, d_, -x_, -y_, denom_);
}

namespace {
void require_same_field(const QuadraticInteger& u, const QuadraticInteger& v) {
  if (u.radicand() != v.radicand()) {
    throw DomainError("mismatched radicands " + std::to_string(u.radicand()) + " and " +
                      std::to_string(v.radicand()));
  }
}
}  // namespace

QuadraticInteger operator+(const QuadraticInteger& u, const QuadraticInteger& v) {
  require_same_field(u, v);
  if (u.denom_ == v.denom_) {
    return QuadraticInteger(QuadraticInteger::Unchecked{}, u.d_, u.x_ + v.x_, u.y_ + v.y_,
                            u.denom_);
  }
  // Bring both to denominator 2.
  const mpz_class ux = u.denom_ == 1 ? mpz_class(2 * u.x_) : u.x_;
  const mpz_class uy = u.denom_ == 1 ? mpz_class(2 * u.y_) : u.y_;
  const mpz_class vx = v.denom_ == 1 ? mpz_class(2 * v.x_) : v.x_;
  const mpz_class vy = v.denom_ == 1 ? mpz_class(2 * v.y_) : v.y_;
  return QuadraticInteger(QuadraticInteger::Unchecked{}, u.d_, ux + vx, uy + vy, 2);
}

QuadraticInteger operator-(const QuadraticInteger& u, const QuadraticInteger& v) { return u + (-v); }

QuadraticInteger operator*(const QuadraticInteger& u, const QuadraticInteger& v) {
  require_same_field(u, v);
  const mpz_class d = to_mpz(u.d_);
  mpz_class x = u.x_ * v.x_ + d * u.y_ * v.y_;
  mpz_class y = u.x_ * v.y_ + u.y_ * v.x_;
  const unsigned den = u.denom_ * v.denom_;
  if (den == 4) {
    // Product of two half-integral elements: numerator is divisible by 2.
    x /= 2;
    y /= 2;
  }
  return QuadraticInteger(QuadraticInteger::Unchecked{}, u.d_, std::move(x), std::move(y),
                          den == 1 ? 1U : 2U);
}

bool operator==(const QuadraticInteger& u, const QuadraticInteger& v) {
  return u.d_ == v.d_ && u.denom_ == v.denom_ && u.x_ == v.x_ && u.y_ == v.y_;
}

std::string QuadraticInteger::to_string() const {
  std::ostringstream os;
  const bool half = denom_ == 2;
  if (half) os << '(';
  os << x_.get_str();
  os << (sgn(y_) < 0 ? " - " : " + ");
  mpz_class ay = abs(y_);
  if (ay != 1) os << ay.get_str() << '*';
  os << "sqrt(" << d_ << ')';
  if (half) os << ")/2";
  return os.str();
}

QuadraticInteger conj(const QuadraticInteger& u) {
  return QuadraticInteger(u.radicand(), u.x(), -u.y(), u.denom());
}

mpz_class norm(const QuadraticInteger& u) {
  mpz_class n = u.x() * u.x() - to_mpz(u.radicand()) * u.y() * u.y();
  if (u.denom() == 2) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), 4) == 0) throw InternalError("norm not integral");
    n /= 4;
  }
  return n;
}

bool less(const QuadraticInteger& a, const QuadraticInteger& b) { return (b - a).sign() > 0; }

namespace {

// PQa expansion of (P0 + sqrt d)/Q0 with Q0 | d - P0^2. Runs one full period
// and returns the partial quotients together with the convergent (G, B)
// satisfying G^2 - d B^2 = (-1)^l Q0^2, l the period length.
struct PqaRun {
  ContinuedFraction cf;
  mpz_class g;
  mpz_class b;
};

PqaRun run_pqa(std::int64_t d, std::int64_t p0, std::int64_t q0) {
  const std::int64_t s = isqrt(d);
  PqaRun run;
  run.cf.d = d;
  run.cf.half_integer_basis = q0 == 2;

  mpz_class g_prev2 = to_mpz(-p0), g_prev1 = to_mpz(q0);
  mpz_class b_prev2 = 1, b_prev1 = 0;
  std::int64_t p = p0, q = q0;
  for (std::size_t i = 0;; ++i) {
    const std::int64_t a = (p + s) / q;
    if (i == 0) {
      run.cf.leading = a;
    } else {
      run.cf.period.push_back(a);
    }
    mpz_class g = a * g_prev1 + g_prev2;
    mpz_class b = a * b_prev1 + b_prev2;
    const std::int64_t p_next = a * q - p;
    const int128 num = static_cast<int128>(d) - static_cast<int128>(p_next) * p_next;
    if (num % q != 0) throw InternalError("PQa: non-integral Q");
    const auto q_next = static_cast<std::int64_t>(num / q);
    if (q_next == q0) {
      // State (P_{i+1}, Q0) starts the next period; the last partial quotient
      // of this period is a_{i+1}.
      const std::int64_t a_last = (p_next + s) / q_next;
      run.cf.period.push_back(a_last);
      run.g = std::move(g);
      run.b = std::move(b);
      // The period is a_1 .. a_l; the loop above recorded a_1 .. a_i and
      // a_{i+1}. For i == 0 that is just a_1.
      return run;
    }
    g_prev2 = std::move(g_prev1);
    g_prev1 = std::move(g);
    b_prev2 = std::move(b_prev1);
    b_prev1 = std::move(b);
    p = p_next;
    q = q_next;
  }
}

void require_expansion_input(std::int64_t d, bool half) {
  require_radicand(d);
  if (half && mod_floor(d, 4) != 1) {
    throw DomainError("half-integer basis requires d = 1 (mod 4), got d = " + std::to_string(d));
  }
}

}  // namespace

ContinuedFraction cf_expand(std::int64_t d, bool half_integer_basis) {
  require_expansion_input(d, half_integer_basis);
  return half_integer_basis ? run_pqa(d, 1, 2).cf : run_pqa(d, 0, 1).cf;
}

FundamentalUnit fundamental_unit(std::int64_t d) {
  require_expansion_input(d, false);

  auto from_run = [d](const PqaRun& run, unsigned denom) {
    QuadraticInteger e(d, run.g, run.b, denom);
    const mpz_class n = norm(e);
    if (n != 1 && n != -1) throw InternalError("PQa convergent is not a unit");
    const int expected = run.cf.period_length() % 2 == 1 ? -1 : 1;
    if (n.get_si() != expected) throw InternalError("unit norm disagrees with period parity");
    return FundamentalUnit{std::move(e), expected, run.cf.period_length()};
  };

  FundamentalUnit best = from_run(run_pqa(d, 0, 1), 1);
  if (mod_floor(d, 4) == 1) {
    FundamentalUnit half = from_run(run_pqa(d, 1, 2), 2);
    if (!less(best.element, half.element)) best = std::move(half);
  }
  if (best.element.sign() <= 0 || !less(QuadraticInteger::rational(d, 1), best.element)) {
    throw InternalError("fundamental unit not > 1");
  }
  return best;
}

bool lemma2_norm_check(std::int64_t p1, std::int64_t p2) {
  for (std::int64_t p : {p1, p2}) {
    if (!is_prime(p) || mod_floor(p, 4) != 1) {
      throw PreconditionError("p = " + std::to_string(p) + " is not a prime = 1 (mod 4)");
    }
  }
  if (p1 == p2) throw PreconditionError("p1 and p2 must be distinct");
  const int minus_ones = (jacobi(p1, p2) == -1) + (symbol_2_over(p1) == -1) +
                         (symbol_2_over(p2) == -1);
  if (minus_ones < 2) {
    throw PreconditionError("fewer than two of (p1/p2), (2/p1), (2/p2) equal -1");
  }
  return fundamental_unit(2 * p1 * p2).norm == -1;
}

}  // namespace unitsq
