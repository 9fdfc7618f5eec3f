#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "gl2tors/arith/integer.hpp"

namespace gl2tors {

/// Dense univariate polynomial over Z, lowest degree first. Trailing zeros
/// are never stored, so the zero polynomial has no coefficients.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coefficients);
    IntPoly(std::initializer_list<long> coefficients);

    static IntPoly constant(const Integer& c);
    static IntPoly monomial(const Integer& c, int degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    const std::vector<Integer>& coefficients() const { return coeffs_; }
    /// Zero beyond the degree.
    Integer coeff(int i) const;
    const Integer& leading() const { return coeffs_.back(); }

    Integer content() const;
    IntPoly primitive_part() const;
    IntPoly derivative() const;
    Integer evaluate(const Integer& x) const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const Integer& c);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator-(const IntPoly& a);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Exact division of every coefficient by c.
    IntPoly divexact(const Integer& c) const;

    std::string to_string(char var = 'x') const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

/// Division by a monic divisor over Z: returns (quotient, remainder).
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic_divisor);

/// Remainder of a modulo a monic divisor.
IntPoly rem_monic(const IntPoly& a, const IntPoly& monic_divisor);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

}  // namespace gl2tors
