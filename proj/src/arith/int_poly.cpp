#include "gl2tors/arith/int_poly.hpp"

#include <sstream>

#include "gl2tors/errors.hpp"

namespace gl2tors {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
    normalize();
}

IntPoly::IntPoly(std::initializer_list<long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long c : coefficients) coeffs_.emplace_back(c);
    normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
    std::vector<Integer> v(static_cast<size_t>(degree) + 1);
    v.back() = c;
    return IntPoly(std::move(v));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return 0;
    return coeffs_[static_cast<size_t>(i)];
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) g = gcd(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return {};
    Integer c = content();
    if (leading() < 0) c = -c;
    return divexact(c);
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

Integer IntPoly::evaluate(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

IntPoly operator-(const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.coeffs_) x = -x;
    return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::divexact(const Integer& c) const {
    std::vector<Integer> r(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) mpz_divexact(r[i].get_mpz_t(), coeffs_[i].get_mpz_t(), c.get_mpz_t());
    return IntPoly(std::move(r));
}

std::string IntPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& c = coeffs_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Integer a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
    }
    return os.str();
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& d) {
    if (!d.is_monic()) fail(ErrorKind::InvalidArgument, "divmod_monic: divisor not monic");
    if (a.degree() < d.degree()) return {IntPoly{}, a};
    std::vector<Integer> r = a.coefficients();
    std::vector<Integer> q(static_cast<size_t>(a.degree() - d.degree() + 1));
    const auto& dc = d.coefficients();
    int dd = d.degree();
    for (int i = a.degree(); i >= dd; --i) {
        Integer c = r[static_cast<size_t>(i)];
        if (c == 0) continue;
        q[static_cast<size_t>(i - dd)] = c;
        for (int j = 0; j <= dd; ++j) r[static_cast<size_t>(i - dd + j)] -= c * dc[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(dd));
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly rem_monic(const IntPoly& a, const IntPoly& d) { return divmod_monic(a, d).second; }

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) fail(ErrorKind::InvalidArgument, "pseudo_remainder: zero divisor");
    if (a.degree() < b.degree()) return a;
    std::vector<Integer> r = a.coefficients();
    const auto& bc = b.coefficients();
    const Integer& lb = b.leading();
    int db = b.degree();
    int steps = a.degree() - db + 1;
    int top = a.degree();
    for (int s = 0; s < steps; ++s, --top) {
        Integer c = r[static_cast<size_t>(top)];
        for (auto& x : r) x *= lb;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(top - db + j)] -= c * bc[static_cast<size_t>(j)];
    }
    r.resize(static_cast<size_t>(db));
    return IntPoly(std::move(r));
}

}  // namespace gl2tors
