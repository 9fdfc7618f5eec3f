#include "gl2tors/arith/resultant.hpp"

#include <utility>

#include "gl2tors/errors.hpp"

namespace gl2tors {

Integer resultant(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) fail(ErrorKind::InvalidArgument, "resultant of a zero polynomial");
    IntPoly a = f, b = g;
    Integer sign = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -1;
    }
    if (b.degree() == 0) return sign * power(b.leading(), static_cast<unsigned long>(a.degree()));

    Integer ca = a.content(), cb = b.content();
    a = a.divexact(ca);
    b = b.divexact(cb);
    Integer t = power(ca, static_cast<unsigned long>(b.degree())) * power(cb, static_cast<unsigned long>(a.degree()));
    Integer gg = 1, h = 1;
    for (;;) {
        int delta = a.degree() - b.degree();
        if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
        IntPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return 0;
        b = r.divexact(gg * power(h, static_cast<unsigned long>(delta)));
        gg = a.leading();
        if (delta >= 1) {
            Integer num = power(gg, static_cast<unsigned long>(delta));
            Integer den = power(h, static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (b.degree() <= 0) break;
    }
    // b is a nonzero constant here.
    int da = a.degree();
    Integer num = power(b.leading(), static_cast<unsigned long>(da));
    Integer out;
    if (da >= 1) {
        Integer den = power(h, static_cast<unsigned long>(da - 1));
        mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    } else {
        out = num * h;
    }
    return sign * t * out;
}

Integer resultant(const ModPoly& f, const ModPoly& g) {
    if (f.modulus() != g.modulus()) fail(ErrorKind::InvalidArgument, "resultant: modulus mismatch");
    Integer r = resultant(f.lift(), g.lift());
    Integer out;
    mpz_fdiv_r(out.get_mpz_t(), r.get_mpz_t(), f.modulus().get_mpz_t());
    return out;
}

bool is_squarefree(const IntPoly& f) {
    if (f.degree() <= 0) return !f.is_zero();
    if (f.degree() == 1) return true;
    return resultant(f, f.derivative()) != 0;
}

}  // namespace gl2tors
