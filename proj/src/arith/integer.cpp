#include "gl2tors/arith/integer.hpp"

#include <algorithm>

#include "gl2tors/errors.hpp"

namespace gl2tors {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::InvalidField: return "invalid field";
    case ErrorKind::LiftingFailure: return "lifting failure";
    case ErrorKind::InfiniteValuation: return "infinite valuation";
    case ErrorKind::InternalConsistency: return "internal consistency";
    case ErrorKind::MissingData: return "missing data";
    case ErrorKind::CorruptData: return "corrupt data";
    case ErrorKind::InvalidWindow: return "invalid window";
    case ErrorKind::Io: return "i/o";
    case ErrorKind::EmptyDataset: return "empty dataset";
    case ErrorKind::Fetch: return "fetch";
    }
    return "unknown";
}

ErrorKind error_kind_from_string(std::string_view name) {
    for (int k = 0; k <= static_cast<int>(ErrorKind::Fetch); ++k)
        if (to_string(static_cast<ErrorKind>(k)) == name) return static_cast<ErrorKind>(k);
    fail(ErrorKind::InvalidArgument, "unknown error kind '" + std::string(name) + "'");
}

long int_valuation(const Integer& n, const Integer& ell) {
    if (n == 0) fail(ErrorKind::InfiniteValuation, "valuation of zero");
    if (ell < 2) fail(ErrorKind::InvalidArgument, "valuation base must be >= 2");
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), ell.get_mpz_t()));
}

long rational_valuation(const Rational& q, const Integer& ell) {
    return int_valuation(q.get_num(), ell) - int_valuation(q.get_den(), ell);
}

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    // BPSW plus Miller-Rabin rounds; deterministic below 2^64.
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

std::vector<long> primes_in_range(long lo, long hi) {
    std::vector<long> out;
    if (hi < 2) return out;
    std::vector<bool> composite(static_cast<size_t>(hi) + 1, false);
    for (long i = 2; i * i <= hi; ++i) {
        if (composite[i]) continue;
        for (long j = i * i; j <= hi; j += i) composite[j] = true;
    }
    for (long i = std::max(2L, lo); i <= hi; ++i)
        if (!composite[i]) out.push_back(i);
    return out;
}

namespace {

Integer pollard_brent(const Integer& n) {
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1;
        auto step = [&](const Integer& v) -> Integer { return (v * v + c) % n; };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = step(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(128UL, r - k); ++i) {
                    y = step(y);
                    q = (q * abs(x - y)) % n;
                }
                g = gcd(q, n);
                k += 128;
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void collect_primes(const Integer& n, std::vector<Integer>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    Integer d = pollard_brent(n);
    collect_primes(d, out);
    collect_primes(n / d, out);
}

}  // namespace

std::vector<Integer> prime_divisors(const Integer& n) {
    if (n == 0) fail(ErrorKind::InvalidArgument, "prime divisors of zero");
    Integer m = abs(n);
    std::vector<Integer> out;
    for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            out.emplace_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) {
        if (m < Integer(10000) * 10000) {
            out.push_back(m);
        } else {
            collect_primes(m, out);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> out{1};
    Integer m = abs(n);
    for (const auto& p : prime_divisors(m)) {
        long k = int_valuation(m, p);
        size_t base = out.size();
        Integer pk = 1;
        for (long i = 1; i <= k; ++i) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Integer power(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

bool fits_int64(const Integer& n) {
    return n.fits_slong_p();
}

}  // namespace gl2tors
