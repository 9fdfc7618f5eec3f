#include "gl2tors/arith/mod_poly.hpp"

#include <algorithm>

#include "gl2tors/errors.hpp"

namespace gl2tors {

namespace {

Integer reduce_coeff(const Integer& c, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        fail(ErrorKind::InvalidArgument, "leading coefficient " + a.get_str() + " not invertible mod " + m.get_str());
    return inv;
}

void require_same_modulus(const ModPoly& a, const ModPoly& b) {
    if (a.modulus() != b.modulus())
        fail(ErrorKind::InvalidArgument, "modulus mismatch: " + a.modulus().get_str() + " vs " + b.modulus().get_str());
}

}  // namespace

ModPoly::ModPoly(Integer modulus, std::vector<Integer> coefficients)
    : modulus_(std::move(modulus)), coeffs_(std::move(coefficients)) {
    if (modulus_ < 2) fail(ErrorKind::InvalidArgument, "ModPoly modulus must be >= 2");
    normalize();
}

ModPoly::ModPoly(Integer modulus, const IntPoly& p) : ModPoly(std::move(modulus), p.coefficients()) {}

ModPoly ModPoly::one(const Integer& modulus) { return ModPoly(modulus, std::vector<Integer>{1}); }
ModPoly ModPoly::x(const Integer& modulus) { return ModPoly(modulus, std::vector<Integer>{0, 1}); }
ModPoly ModPoly::constant(const Integer& modulus, const Integer& c) {
    return ModPoly(modulus, std::vector<Integer>{c});
}

void ModPoly::normalize() {
    for (auto& c : coeffs_)
        if (c < 0 || c >= modulus_) c = reduce_coeff(c, modulus_);
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer ModPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

ModPoly ModPoly::reduce(const Integer& new_modulus) const {
    if (modulus_ % new_modulus != 0)
        fail(ErrorKind::InvalidArgument, "reduce: " + new_modulus.get_str() + " does not divide " + modulus_.get_str());
    return ModPoly(new_modulus, coeffs_);
}

ModPoly ModPoly::monic() const {
    if (is_zero()) return *this;
    Integer inv = inverse_mod(leading(), modulus_);
    return *this * inv;
}

ModPoly ModPoly::derivative() const {
    return ModPoly(modulus_, lift().derivative());
}

ModPoly& ModPoly::operator+=(const ModPoly& o) {
    require_same_modulus(*this, o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] += o.coeffs_[i];
        if (coeffs_[i] >= modulus_) coeffs_[i] -= modulus_;
    }
    normalize();
    return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o) {
    require_same_modulus(*this, o);
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) {
        coeffs_[i] -= o.coeffs_[i];
        if (coeffs_[i] < 0) coeffs_[i] += modulus_;
    }
    normalize();
    return *this;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    if (a.is_zero() || b.is_zero()) return ModPoly(a.modulus_, std::vector<Integer>{});
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return ModPoly(a.modulus_, std::move(r));
}

ModPoly operator*(const ModPoly& a, const Integer& c) {
    std::vector<Integer> r = a.coeffs_;
    for (auto& x : r) x *= c;
    return ModPoly(a.modulus_, std::move(r));
}

std::string ModPoly::to_string(char var) const {
    return lift().to_string(var) + " (mod " + modulus_.get_str() + ")";
}

bool canonical_less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coefficients().begin(), a.coefficients().end(),
                                        b.coefficients().begin(), b.coefficients().end());
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    if (b.is_zero()) fail(ErrorKind::InvalidArgument, "ModPoly division by zero");
    const Integer& m = a.modulus();
    if (a.degree() < b.degree()) return {ModPoly(m, std::vector<Integer>{}), a};
    Integer inv = inverse_mod(b.leading(), m);
    std::vector<Integer> r = a.coefficients();
    const auto& bc = b.coefficients();
    int db = b.degree();
    std::vector<Integer> q(static_cast<size_t>(a.degree() - db + 1));
    for (int i = a.degree(); i >= db; --i) {
        Integer c = reduce_coeff(r[static_cast<size_t>(i)], m);
        if (c == 0) continue;
        c = reduce_coeff(c * inv, m);
        q[static_cast<size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) {
            auto& t = r[static_cast<size_t>(i - db + j)];
            t = reduce_coeff(t - c * bc[static_cast<size_t>(j)], m);
        }
    }
    r.resize(static_cast<size_t>(db));
    return {ModPoly(m, std::move(q)), ModPoly(m, std::move(r))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }
ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::tuple<ModPoly, ModPoly, ModPoly> xgcd(const ModPoly& a, const ModPoly& b) {
    require_same_modulus(a, b);
    const Integer& m = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::one(m), s1(m, std::vector<Integer>{});
    ModPoly t0(m, std::vector<Integer>{}), t1 = ModPoly::one(m);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Integer inv = inverse_mod(r0.leading(), m);
    return {r0 * inv, s0 * inv, t0 * inv};
}

ModPoly powmod(const ModPoly& base, const Integer& exponent, const ModPoly& m) {
    ModPoly result = ModPoly::one(base.modulus()) % m;
    ModPoly b = base % m;
    size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % m;
    }
    return result;
}

ModPoly pow(const ModPoly& base, unsigned exponent) {
    ModPoly result = ModPoly::one(base.modulus());
    for (unsigned i = 0; i < exponent; ++i) result = result * base;
    return result;
}

}  // namespace gl2tors
