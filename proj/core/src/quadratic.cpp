#include "cfn/quadratic.hpp"

#include "cfn/errors.hpp"

namespace cfn {

namespace {

Integer floor_b_sqrt(const Integer& b, const Integer& D) {
  if (b == 0) return 0;
  Integer r = isqrt(b * b * D);
  if (b > 0) return r;
  return -r - 1;
}

int sign_of(const Integer& u, const Integer& v, const Integer& D) {
  int su = sgn(u), sv = sgn(v);
  if (sv == 0) return su;
  if (su == 0) return sv;
  if (su == sv) return su;
  Integer lhs = u * u, rhs = v * v * D;
  if (lhs == rhs) return 0;
  return lhs > rhs ? su : sv;
}

}  // namespace

Quadratic::Quadratic(Integer a, Integer b, Integer c, Integer D)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), D_(std::move(D)) {
  if (c_ == 0) throw DomainError("quadratic with zero denominator");
  if (D_ < 0) throw DomainError("negative discriminant");
  normalize();
}

void Quadratic::normalize() {
  if (is_perfect_square(D_)) {
    a_ += b_ * isqrt(D_);
    b_ = 0;
  }
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  Integer g = gcd(gcd(a_, b_), c_);
  if (g > 1) {
    a_ /= g;
    b_ /= g;
    c_ /= g;
  }
}

std::optional<Rational> Quadratic::as_rational() const {
  if (b_ != 0) return std::nullopt;
  return make_rational(a_, c_);
}

Integer Quadratic::floor() const { return floor_div(a_ + floor_b_sqrt(b_, D_), c_); }

int Quadratic::sign() const { return sign_of(a_, b_, D_); }

int Quadratic::compare(const Rational& r) const {
  Integer u = r.get_den() * a_ - r.get_num() * c_;
  Integer v = r.get_den() * b_;
  return sign_of(u, v, D_);
}

Quadratic Quadratic::add(const Rational& r) const {
  return Quadratic(r.get_den() * a_ + r.get_num() * c_, r.get_den() * b_, r.get_den() * c_, D_);
}

Quadratic Quadratic::mul(const Rational& r) const {
  return Quadratic(r.get_num() * a_, r.get_num() * b_, r.get_den() * c_, D_);
}

Quadratic Quadratic::reciprocal() const {
  Integer n = a_ * a_ - b_ * b_ * D_;
  if (n == 0) throw DomainError("reciprocal of zero");
  return Quadratic(c_ * a_, -c_ * b_, n, D_);
}

Quadratic Quadratic::mobius(const Integer& A, const Integer& B, const Integer& C, const Integer& Dd) const {
  Integer n1 = A * a_ + B * c_, n2 = A * b_;
  Integer d1 = C * a_ + Dd * c_, d2 = C * b_;
  Integer norm = d1 * d1 - d2 * d2 * D_;
  if (norm == 0) throw DomainError("Moebius image has a vanishing denominator");
  return Quadratic(n1 * d1 - n2 * d2 * D_, n2 * d1 - n1 * d2, norm, D_);
}

RationalInterval Quadratic::enclose(unsigned k) const {
  Integer S;
  mpz_ui_pow_ui(S.get_mpz_t(), 10, k);
  if (b_ == 0) {
    Rational r = make_rational(a_, c_);
    return RationalInterval::closed(r, r);
  }
  Integer F = floor_b_sqrt(b_ * S, D_);
  Integer base = a_ * S + F;
  return RationalInterval::closed(make_rational(base, c_ * S), make_rational(base + 1, c_ * S));
}

double Quadratic::to_double() const {
  auto iv = enclose(25);
  return cfn::to_double(Rational((iv.lo + iv.hi) / 2));
}

std::string Quadratic::to_string() const {
  return "(" + a_.get_str() + " + " + b_.get_str() + "*sqrt(" + D_.get_str() + "))/" + c_.get_str();
}

}  // namespace cfn
