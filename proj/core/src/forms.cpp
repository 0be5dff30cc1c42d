#include "unitsq/forms.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "unitsq/arith.hpp"
#include "unitsq/error.hpp"
#include "unitsq/zi.hpp"

namespace unitsq {

bool QuadForm::is_reduced() const {
  if (sgn(a) <= 0 || sgn(discriminant()) >= 0) return false;
  const mpz_class abs_b = abs(b);
  if (abs_b > a || a > c) return false;
  if ((abs_b == a || a == c) && sgn(b) < 0) return false;
  return true;
}

bool QuadForm::is_ambiguous() const { return sgn(b) == 0 || a == b || a == c; }

std::string QuadForm::to_string() const {
  return "(" + a.get_str() + ", " + b.get_str() + ", " + c.get_str() + ")";
}

QuadForm principal_form(const mpz_class& disc) {
  if (sgn(disc) >= 0) throw DomainError("principal_form: discriminant must be negative");
  const long r = static_cast<long>(mpz_fdiv_ui(disc.get_mpz_t(), 4));
  if (r != 0 && r != 1) throw DomainError("discriminant must be 0 or 1 (mod 4)");
  QuadForm f{1, r, 0};
  f.c = (f.b * f.b - disc) / 4;
  return f;
}

QuadForm reduce(QuadForm f) {
  if (sgn(f.a) <= 0 || sgn(f.discriminant()) >= 0) {
    throw DomainError("reduce: form " + f.to_string() + " is not positive definite");
  }
  for (;;) {
    // Normalize b into (-a, a].
    if (!(-f.a < f.b && f.b <= f.a)) {
      const mpz_class two_a = 2 * f.a;
      mpz_class q, r;
      mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), f.b.get_mpz_t(), two_a.get_mpz_t());
      if (r > f.a) {
        r -= two_a;
        q += 1;
      }
      f.c -= (f.b + r) * q / 2;
      f.b = r;
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    if (f.a == f.c && sgn(f.b) < 0) f.b = -f.b;
    return f;
  }
}

QuadForm inverse(const QuadForm& f) { return reduce(QuadForm{f.a, -f.b, f.c}); }

QuadForm compose(const QuadForm& f, const QuadForm& g) {
  const mpz_class disc = f.discriminant();
  if (disc != g.discriminant()) {
    throw DomainError("compose: discriminants differ for " + f.to_string() + " and " +
                      g.to_string());
  }
  const QuadForm* f1 = &f;
  const QuadForm* f2 = &g;
  if (f1->a > f2->a) std::swap(f1, f2);
  const mpz_class s = (f1->b + f2->b) / 2;
  const mpz_class n = f2->b - s;

  mpz_class y1, d;
  if (mpz_divisible_p(f2->a.get_mpz_t(), f1->a.get_mpz_t()) != 0) {
    y1 = 0;
    d = f1->a;
  } else {
    mpz_class v;
    mpz_gcdext(d.get_mpz_t(), y1.get_mpz_t(), v.get_mpz_t(), f2->a.get_mpz_t(), f1->a.get_mpz_t());
  }
  mpz_class x2, y2, d1;
  if (mpz_divisible_p(s.get_mpz_t(), d.get_mpz_t()) != 0) {
    y2 = -1;
    x2 = 0;
    d1 = d;
  } else {
    mpz_class v;
    mpz_gcdext(d1.get_mpz_t(), x2.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
    y2 = -v;
  }
  const mpz_class v1 = f1->a / d1;
  const mpz_class v2 = f2->a / d1;
  mpz_class r = y1 * y2 * n - x2 * f2->c;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), v1.get_mpz_t());
  QuadForm out;
  out.b = f2->b + 2 * v2 * r;
  out.a = v1 * v2;
  const mpz_class num = out.b * out.b - disc;
  const mpz_class four_a = 4 * out.a;
  if (mpz_divisible_p(num.get_mpz_t(), four_a.get_mpz_t()) == 0) {
    throw InternalError("composition produced a non-integral form");
  }
  out.c = num / four_a;
  return reduce(std::move(out));
}

QuadForm power(const QuadForm& f, std::uint64_t e) {
  QuadForm result = principal_form(f.discriminant());
  QuadForm base = reduce(f);
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    e >>= 1;
    if (e > 0) base = compose(base, base);
  }
  return result;
}

bool is_fundamental_discriminant(std::int64_t disc) {
  if (disc == 0 || disc == 1) return false;
  const std::int64_t r = mod_floor(disc, 4);
  const std::int64_t abs_d = disc < 0 ? -disc : disc;
  if (r == 1) return is_squarefree(abs_d);
  if (r != 0) return false;
  const std::int64_t m = disc / 4;
  const std::int64_t rm = mod_floor(m, 4);
  return (rm == 2 || rm == 3) && is_squarefree(m < 0 ? -m : m);
}

ClassGroup::ClassGroup(std::int64_t disc, std::vector<QuadForm> classes)
    : disc_(disc), classes_(std::move(classes)) {
  if (classes_.empty()) throw DomainError("class group needs at least the principal class");
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    index_.emplace(std::make_pair(classes_[k].a, classes_[k].b), k);
  }
}

std::ptrdiff_t ClassGroup::index_of(const QuadForm& f) const {
  const auto it = index_.find(std::make_pair(f.a, f.b));
  if (it == index_.end() || !(classes_[it->second] == f)) return -1;
  return static_cast<std::ptrdiff_t>(it->second);
}

std::uint64_t ClassGroup::element_order(const QuadForm& f) const {
  const QuadForm& one = identity();
  QuadForm g = f;
  for (std::uint64_t k = 1; k <= order(); ++k) {
    if (g == one) return k;
    g = compose(g, f);
  }
  throw InternalError("element order exceeds the class number for " + f.to_string());
}

ClassGroup enumerate_reduced(std::int64_t disc) {
  if (disc >= 0) throw DomainError("discriminant must be negative");
  const std::int64_t r = mod_floor(disc, 4);
  if (r != 0 && r != 1) {
    throw DomainError("discriminant " + std::to_string(disc) + " is not 0 or 1 (mod 4)");
  }
  if (-disc > 1'000'000'000'000LL) throw DomainError("discriminant too large for enumeration");

  std::vector<QuadForm> forms;
  const std::int64_t abs_d = -disc;
  // a <= sqrt(|D|/3) for reduced forms.
  const std::int64_t a_max = isqrt(abs_d / 3);
  for (std::int64_t a = 1; a <= a_max; ++a) {
    const std::int64_t four_a = 4 * a;
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      if (mod_floor(b, 2) != r) continue;
      const std::int64_t num = b * b + abs_d;
      if (num % four_a != 0) continue;
      const std::int64_t c = num / four_a;
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (std::gcd(std::gcd(a, b < 0 ? -b : b), c) != 1) continue;
      forms.push_back(QuadForm{to_mpz(a), to_mpz(b), to_mpz(c)});
    }
  }
  // Principal form (1, r, *) is generated first since a = 1 has a single b.
  if (forms.empty() || !(forms.front() == principal_form(to_mpz(disc)))) {
    throw InternalError("principal form missing from enumeration");
  }
  return ClassGroup(disc, std::move(forms));
}

std::string TwoSylow::type_string() const {
  if (type.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < type.size(); ++k) {
    if (k) s += 'x';
    s += std::to_string(type[k]);
  }
  return s;
}

namespace {

// Number of elements of order dividing 2^k in the abelian group of the given type.
std::uint64_t predicted_count(const std::vector<std::uint64_t>& type, unsigned k) {
  std::uint64_t n = 1;
  for (std::uint64_t t : type) n *= std::min<std::uint64_t>(t, std::uint64_t{1} << k);
  return n;
}

}  // namespace

TwoSylow two_sylow(const ClassGroup& group) {
  const std::uint64_t h = group.order();
  const unsigned v = two_adic_valuation(h);
  const std::uint64_t odd = h >> v;

  TwoSylow out;
  out.h2 = std::uint64_t{1} << v;

  std::set<std::pair<mpz_class, mpz_class>> seen;
  std::vector<QuadForm> sylow;
  for (const QuadForm& g : group.classes()) {
    QuadForm s = power(g, odd);
    if (seen.emplace(s.a, s.b).second) sylow.push_back(std::move(s));
  }
  if (sylow.size() != out.h2) throw InternalError("image of g -> g^m is not the 2-Sylow subgroup");

  // count[k] = #{s : s^(2^k) = 1}
  std::vector<std::uint64_t> count(v + 1, 0);
  const QuadForm& one = group.identity();
  for (const QuadForm& s : sylow) {
    QuadForm t = s;
    unsigned k = 0;
    while (!(t == one)) {
      t = compose(t, t);
      if (++k > v) throw InternalError("2-Sylow element of order > h2");
    }
    for (unsigned j = k; j <= v; ++j) ++count[j];
  }

  // r_k = log2(count[k] / count[k-1]) factors have order >= 2^k.
  std::vector<unsigned> at_least(v + 2, 0);
  for (unsigned k = 1; k <= v; ++k) {
    const std::uint64_t ratio = count[k] / count[k - 1];
    if (ratio * count[k - 1] != count[k] || !std::has_single_bit(ratio)) {
      throw InternalError("order profile is not that of an abelian 2-group");
    }
    at_least[k] = static_cast<unsigned>(std::countr_zero(ratio));
  }
  for (unsigned k = 1; k <= v; ++k) {
    const unsigned exactly = at_least[k] - at_least[k + 1];
    for (unsigned n = 0; n < exactly; ++n) out.type.push_back(std::uint64_t{1} << k);
  }
  std::sort(out.type.begin(), out.type.end());
  out.rank = static_cast<unsigned>(out.type.size());
  out.ambiguous_classes = count.size() > 1 ? count[1] : 1;

  // The type must reproduce every count; in particular this separates
  // (2, 4) from (2, 2, 2) and (8) at h2 = 8.
  std::uint64_t product = 1;
  for (std::uint64_t t : out.type) product *= t;
  if (product != out.h2) throw InternalError("2-Sylow type does not multiply to h2");
  for (unsigned k = 0; k <= v; ++k) {
    if (predicted_count(out.type, k) != count[k]) {
      throw InternalError("2-Sylow type inconsistent with the order profile");
    }
  }
  return out;
}

TwoSylow two_sylow(std::int64_t disc) { return two_sylow(enumerate_reduced(disc)); }

ClassGroupConditions theorem_conditions_4_5(std::int64_t p1, std::int64_t p2) {
  for (std::int64_t p : {p1, p2}) {
    if (!is_prime(p) || mod_floor(p, 8) != 5) {
      throw PreconditionError(std::to_string(p) + " is not a prime = 5 (mod 8)");
    }
  }
  if (p1 == p2) throw PreconditionError("p1 and p2 must be distinct");
  if (jacobi(p1, p2) != -1) throw PreconditionError("(p1/p2) != -1");

  ClassGroupConditions out;
  out.disc = -4 * p1 * p2;
  if (!is_fundamental_discriminant(out.disc)) throw InternalError("-4 p1 p2 is not fundamental");
  const ClassGroup group = enumerate_reduced(out.disc);
  out.h = group.order();
  out.sylow = two_sylow(group);
  out.type_2x4 = out.sylow.type == std::vector<std::uint64_t>{2, 4};
  out.h2_is_8 = out.sylow.h2 == 8;
  return out;
}

}  // namespace unitsq
