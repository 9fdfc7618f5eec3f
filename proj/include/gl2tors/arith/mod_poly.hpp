#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gl2tors/arith/int_poly.hpp"

namespace gl2tors {

/// Polynomial over Z/(modulus) with every coefficient kept in [0, modulus).
/// The modulus is a prime power ell^m; the field-only operations below
/// (gcd, xgcd, powers used for factoring) require m = 1.
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(Integer modulus, std::vector<Integer> coefficients);
    ModPoly(Integer modulus, const IntPoly& p);

    static ModPoly one(const Integer& modulus);
    static ModPoly x(const Integer& modulus);
    static ModPoly constant(const Integer& modulus, const Integer& c);

    const Integer& modulus() const { return modulus_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    Integer coeff(int i) const;
    const Integer& leading() const { return coeffs_.back(); }

    /// Canonical representatives as an integer polynomial.
    IntPoly lift() const { return IntPoly(coeffs_); }
    /// Reduce to a smaller modulus dividing the current one.
    ModPoly reduce(const Integer& new_modulus) const;
    /// Scale so that the leading coefficient is 1 (leading coefficient must be a unit).
    ModPoly monic() const;
    ModPoly derivative() const;

    ModPoly& operator+=(const ModPoly& o);
    ModPoly& operator-=(const ModPoly& o);
    friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
    friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const Integer& c);
    friend bool operator==(const ModPoly& a, const ModPoly& b) {
        return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
    }

    std::string to_string(char var = 'x') const;

private:
    void normalize();
    Integer modulus_ = 1;
    std::vector<Integer> coeffs_;
};

/// Canonical order: by degree, then lexicographically on the coefficient list.
bool canonical_less(const ModPoly& a, const ModPoly& b);

/// Division with remainder; the divisor's leading coefficient must be a unit.
std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
ModPoly operator/(const ModPoly& a, const ModPoly& b);

/// Monic gcd over a prime field.
ModPoly gcd(const ModPoly& a, const ModPoly& b);

/// (g, s, t) with s*a + t*b = g, g monic, over a prime field.
std::tuple<ModPoly, ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b);

/// base^exponent mod m.
ModPoly powmod(const ModPoly& base, const Integer& exponent, const ModPoly& m);

ModPoly pow(const ModPoly& base, unsigned exponent);

}  // namespace gl2tors
