#include "progrand/gf2_poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstring>
#include <numeric>

#include "progrand/errors.hpp"

namespace progrand {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

int top_bit(u128 v) {
    int r = -1;
    while (v) {
        v >>= 1;
        ++r;
    }
    return r;
}

u128 poly_mod(u128 a, u128 mod) {
    const int dm = top_bit(mod);
    for (int i = top_bit(a); i >= dm; i = top_bit(a)) {
        a ^= mod << (i - dm);
    }
    return a;
}

u128 poly_gcd(u128 a, u128 b) {
    while (b) {
        a = poly_mod(a, b);
        std::swap(a, b);
    }
    return a;
}

// residues mod p have degree < 64, so they fit in u64
u64 poly_mulmod(u64 a, u64 b, u128 mod) {
    u128 prod = 0;
    const u128 aa = a;
    while (b) {
        prod ^= aa << std::countr_zero(b);
        b &= b - 1;
    }
    return static_cast<u64>(poly_mod(prod, mod));
}

u64 poly_powmod(u64 base, u64 exp, u128 mod) {
    u64 r = 1;
    while (exp) {
        if (exp & 1) r = poly_mulmod(r, base, mod);
        base = poly_mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

// x^(2^k) mod p by k squarings
u64 frobenius(int k, u128 mod) {
    u64 r = 2;  // the polynomial x
    for (int i = 0; i < k; ++i) r = poly_mulmod(r, r, mod);
    return r;
}

u128 full_mask(const GF2Polynomial& p) {
    u128 m = 0;
    for (int e : p.exponents()) m |= u128{1} << e;
    return m;
}

// ---- integer factorization of 2^n - 1 (trial division + Pollard rho) ----

u64 mulmod_int(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod_int(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_int(r, a, m);
        a = mulmod_int(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = std::countr_zero(d);
    d >>= s;
    // deterministic witness set for 64-bit integers
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_int(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_int(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = mulmod_int(x, x, n) + c;
            if (x >= n) x -= n;
            y = mulmod_int(y, y, n) + c;
            if (y >= n) y -= n;
            y = mulmod_int(y, y, n) + c;
            if (y >= n) y -= n;
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_u64(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    for (u64 p = 2; p <= 61 && p * p <= n; ++p) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_u64(d, primes);
    factor_u64(n / d, primes);
}

std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> primes;
    factor_u64(n, primes);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    return primes;
}

}  // namespace

GF2Polynomial::GF2Polynomial(std::vector<int> exponents) {
    if (exponents.empty()) throw Error("polynomial has no terms");
    std::sort(exponents.begin(), exponents.end());
    exponents.erase(std::unique(exponents.begin(), exponents.end()), exponents.end());
    if (exponents.front() < 0) throw Error("polynomial exponent is negative");
    degree_ = exponents.back();
    if (degree_ > 64) {
        throw DegreeTooLarge("polynomial degree " + std::to_string(degree_) +
                             " exceeds the supported maximum of 64");
    }
    if (degree_ < 2) throw Error("polynomial degree must be at least 2");
    if (exponents.front() != 0) throw Error("polynomial constant term must be 1 (exponent 0 missing)");
    exponents_ = std::move(exponents);
    for (int e : exponents_) {
        if (e >= 1) feedback_mask_ |= u64{1} << (e - 1);
    }
}

std::string GF2Polynomial::to_caret() const {
    std::string out;
    for (auto it = exponents_.rbegin(); it != exponents_.rend(); ++it) {
        if (!out.empty()) out += '+';
        if (*it == 0) {
            out += '1';
        } else if (*it == 1) {
            out += 'x';
        } else {
            out += "x^" + std::to_string(*it);
        }
    }
    return out;
}

std::string GF2Polynomial::to_hex_mask() const {
    // nibble array covers exponents up to 64
    int nibbles[17] = {};
    for (int e : exponents_) nibbles[e / 4] |= 1 << (e % 4);
    std::string out;
    bool started = false;
    for (int i = 16; i >= 0; --i) {
        if (!started && nibbles[i] == 0) continue;
        started = true;
        out += "0123456789abcdef"[nibbles[i]];
    }
    return "0x" + out;
}

GF2Polynomial parse_polynomial(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) throw ParseError("empty polynomial");

    std::vector<int> exponents;
    if (s.size() > 2 && (s[0] == '0') && (s[1] == 'x' || s[1] == 'X')) {
        for (std::size_t i = 2; i < s.size(); ++i) {
            char c = static_cast<char>(std::tolower(static_cast<unsigned char>(s[i])));
            const char* digits = "0123456789abcdef";
            const char* pos = std::strchr(digits, c);
            if (!pos || c == '\0') throw ParseError("invalid hex digit in polynomial mask: " + s);
            int v = static_cast<int>(pos - digits);
            int shift = static_cast<int>((s.size() - 1 - i) * 4);
            for (int b = 0; b < 4; ++b) {
                if (v & (1 << b)) exponents.push_back(shift + b);
            }
        }
    } else {
        std::size_t start = 0;
        while (start <= s.size()) {
            std::size_t plus = s.find('+', start);
            std::string term = s.substr(start, plus == std::string::npos ? plus : plus - start);
            if (term.empty()) throw ParseError("empty term in polynomial: " + text);
            int e;
            if (term == "1") {
                e = 0;
            } else if (term == "x") {
                e = 1;
            } else if (term.rfind("x^", 0) == 0 && term.size() > 2 &&
                       std::all_of(term.begin() + 2, term.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                e = std::stoi(term.substr(2));
            } else {
                throw ParseError("malformed polynomial term '" + term + "'");
            }
            if (std::find(exponents.begin(), exponents.end(), e) != exponents.end()) {
                throw ParseError("duplicate polynomial term with exponent " + std::to_string(e));
            }
            exponents.push_back(e);
            if (plus == std::string::npos) break;
            start = plus + 1;
        }
    }

    try {
        return GF2Polynomial(std::move(exponents));
    } catch (const DegreeTooLarge&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string(e.what()) + ": " + text);
    }
}

bool is_irreducible(const GF2Polynomial& p) {
    const int n = p.degree();
    const u128 mod = full_mask(p);
    // Rabin: x^(2^n) == x mod p, and gcd(x^(2^(n/q)) - x, p) = 1 for prime q | n
    if (frobenius(n, mod) != 2) return false;
    for (u64 q : distinct_prime_factors(static_cast<u64>(n))) {
        u64 h = frobenius(static_cast<int>(n / q), mod) ^ 2u;
        if (top_bit(poly_gcd(h, mod)) != 0) return false;
    }
    return true;
}

bool is_primitive(const GF2Polynomial& p) {
    if (!is_irreducible(p)) return false;
    const int n = p.degree();
    const u128 mod = full_mask(p);
    const u64 group_order = (n == 64) ? ~u64{0} : ((u64{1} << n) - 1);
    for (u64 f : distinct_prime_factors(group_order)) {
        if (poly_powmod(2, group_order / f, mod) == 1) return false;
    }
    return true;
}

}  // namespace progrand
