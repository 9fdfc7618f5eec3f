#include "gl2tors/numfield/number_field.hpp"

#include "gl2tors/arith/resultant.hpp"
#include "gl2tors/errors.hpp"

namespace gl2tors {

namespace {

void require_same_field(const std::shared_ptr<const IntPoly>& a, const std::shared_ptr<const IntPoly>& b) {
    if (a != b && !(*a == *b))
        fail(ErrorKind::InvalidArgument, "field mismatch: " + a->to_string() + " vs " + b->to_string());
}

}  // namespace

NumberField::NumberField(const IntPoly& defining_poly) {
    if (defining_poly.degree() < 1)
        fail(ErrorKind::InvalidField, "defining polynomial must have degree >= 1");
    if (!defining_poly.is_monic())
        fail(ErrorKind::InvalidField, "defining polynomial " + defining_poly.to_string() + " is not monic");
    if (!is_squarefree(defining_poly))
        fail(ErrorKind::InvalidField, "defining polynomial " + defining_poly.to_string() + " is not squarefree");
    poly_ = std::make_shared<const IntPoly>(defining_poly);
}

NumberField make_field(const IntPoly& f) { return NumberField(f); }

FieldElement NumberField::zero() const { return FieldElement(poly_, IntPoly{}, 1); }
FieldElement NumberField::one() const { return FieldElement(poly_, IntPoly{1}, 1); }
FieldElement NumberField::generator() const {
    return element(IntPoly{0, 1});
}

FieldElement NumberField::from_rational(const Rational& c) const {
    Rational q = c;
    q.canonicalize();
    return FieldElement(poly_, IntPoly::constant(q.get_num()), q.get_den());
}

FieldElement NumberField::from_integer(const Integer& c) const {
    return FieldElement(poly_, IntPoly::constant(c), 1);
}

FieldElement NumberField::element(const IntPoly& numerator, const Integer& denominator) const {
    if (denominator == 0) fail(ErrorKind::InvalidArgument, "field element with zero denominator");
    return FieldElement(poly_, rem_monic(numerator, *poly_), denominator);
}

Rational NumberField::norm(const FieldElement& a) const {
    require_same_field(poly_, a.poly_);
    if (a.is_zero()) return 0;
    Rational out(resultant(*poly_, a.numerator()), power(a.denominator(), static_cast<unsigned long>(degree())));
    out.canonicalize();
    return out;
}

bool NumberField::operator==(const NumberField& o) const {
    return poly_ == o.poly_ || *poly_ == *o.poly_;
}

FieldElement::FieldElement(std::shared_ptr<const IntPoly> poly, IntPoly num, Integer den)
    : poly_(std::move(poly)), num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

void FieldElement::canonicalize() {
    if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    Integer g = gcd(num_.content(), den_);
    if (g != 1) {
        num_ = num_.divexact(g);
        mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.poly_, b.poly_);
    return FieldElement(a.poly_, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.poly_, b.poly_);
    return FieldElement(a.poly_, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a.poly_, b.poly_);
    return FieldElement(a.poly_, rem_monic(a.num_ * b.num_, *a.poly_), a.den_ * b.den_);
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return (a.poly_ == b.poly_ || *a.poly_ == *b.poly_) && a.num_ == b.num_ && a.den_ == b.den_;
}

std::string FieldElement::to_string() const {
    std::string s = num_.to_string('t');
    if (den_ != 1) s = "(" + s + ")/" + den_.get_str();
    return s;
}

}  // namespace gl2tors
