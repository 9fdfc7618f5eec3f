#pragma once

#include <memory>
#include <vector>

#include "gl2tors/arith/int_poly.hpp"

namespace gl2tors {

class FieldElement;

/// Q[x]/(f) for a monic squarefree integer polynomial f. Irreducibility is
/// not certified. Copies share the defining polynomial.
class NumberField {
public:
    /// Throws InvalidField when f is not monic, has degree < 1, or is not squarefree.
    explicit NumberField(const IntPoly& defining_poly);

    const IntPoly& defining_poly() const { return *poly_; }
    int degree() const { return poly_->degree(); }

    FieldElement zero() const;
    FieldElement one() const;
    /// The class of x.
    FieldElement generator() const;
    FieldElement from_rational(const Rational& c) const;
    FieldElement from_integer(const Integer& c) const;
    /// Element (sum numerator[i] x^i) / denominator; reduced if numerator has degree >= g.
    FieldElement element(const IntPoly& numerator, const Integer& denominator = 1) const;

    /// Norm to Q: Res(f, numerator) / denominator^g, i.e. the product of a over the roots of f.
    Rational norm(const FieldElement& a) const;

    bool operator==(const NumberField& o) const;

private:
    std::shared_ptr<const IntPoly> poly_;
};

NumberField make_field(const IntPoly& f);

/// An element of a NumberField in power-basis coordinates: numerator / denominator
/// with denominator > 0 and gcd(content(numerator), denominator) = 1.
class FieldElement {
public:
    const IntPoly& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    const IntPoly& field_poly() const { return *poly_; }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

    std::string to_string() const;

private:
    friend class NumberField;
    FieldElement(std::shared_ptr<const IntPoly> poly, IntPoly num, Integer den);
    void canonicalize();

    std::shared_ptr<const IntPoly> poly_;
    IntPoly num_;
    Integer den_;
};

}  // namespace gl2tors
