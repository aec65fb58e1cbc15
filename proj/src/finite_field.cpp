#include "specgeo/finite_field.hpp"

#include "specgeo/bigint.hpp"

#include <algorithm>

namespace specgeo {

namespace {

uint64_t mod_pow(uint64_t b, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = (__uint128_t)r * b % m;
        b = (__uint128_t)b * b % m;
        e >>= 1;
    }
    return r;
}

uint64_t mod_inv(uint64_t a, uint64_t p) { return mod_pow(a, p - 2, p); }

// Polynomials over F_p as coefficient vectors (ascending), for the
// irreducibility search only.
using PolyP = std::vector<uint64_t>;

PolyP trim(PolyP f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

PolyP poly_mod(PolyP a, const PolyP& m, uint64_t p) {
    a = trim(std::move(a));
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        uint64_t lc = a.back();
        size_t shift = a.size() - 1 - dm;
        // m is monic
        for (size_t i = 0; i < m.size(); ++i) {
            uint64_t t = (__uint128_t)lc * m[i] % p;
            a[shift + i] = (a[shift + i] + p - t) % p;
        }
        a = trim(std::move(a));
    }
    return a;
}

PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& m, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + (__uint128_t)a[i] * b[j]) % p;
    return poly_mod(std::move(r), m, p);
}

PolyP poly_powmod(PolyP base, Integer e, const PolyP& m, uint64_t p) {
    PolyP r{1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

PolyP poly_gcd_p(PolyP a, PolyP b, uint64_t p) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        // reduce a mod b (b not necessarily monic)
        uint64_t inv = mod_inv(b.back(), p);
        while (a.size() >= b.size()) {
            uint64_t lc = (__uint128_t)a.back() * inv % p;
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i) {
                uint64_t t = (__uint128_t)lc * b[i] % p;
                a[shift + i] = (a[shift + i] + p - t) % p;
            }
            a = trim(std::move(a));
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// Deterministic irreducibility test: f (monic, degree n) is irreducible
// over F_p iff x^(p^n) = x mod f and gcd(x^(p^(n/r)) - x, f) = 1 for
// every prime r | n.
bool is_irreducible(const PolyP& f, uint64_t p) {
    const unsigned n = static_cast<unsigned>(f.size() - 1);
    PolyP x{0, 1};
    Integer pn = int_pow(Integer((unsigned long)p), n);
    PolyP xq = poly_powmod(x, pn, f, p);
    PolyP diff = xq;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    if (!trim(diff).empty()) return false;
    for (unsigned r = 2; r <= n; ++r) {
        if (n % r != 0) continue;
        bool prime = true;
        for (unsigned d = 2; d * d <= r; ++d)
            if (r % d == 0) { prime = false; break; }
        if (!prime) continue;
        Integer pm = int_pow(Integer((unsigned long)p), n / r);
        PolyP xm = poly_powmod(x, pm, f, p);
        PolyP g = xm;
        g.resize(std::max<size_t>(g.size(), 2), 0);
        g[1] = (g[1] + p - 1) % p;
        if (poly_gcd_p(trim(g), f, p).size() != 1) return false;
    }
    return true;
}

}  // namespace

FieldDescriptor::FieldDescriptor(uint64_t p, unsigned n, uint64_t size_cap) : p_(p), n_(n) {
    if (n == 0) throw std::invalid_argument("make_finite_field: degree must be >= 1");
    if (!is_prime(Integer(static_cast<unsigned long>(p))))
        throw std::invalid_argument("make_finite_field: " + std::to_string(p) + " is not prime");
    Integer q = int_pow(Integer(static_cast<unsigned long>(p)), n);
    if (q > Integer(static_cast<unsigned long>(size_cap)))
        throw std::invalid_argument("make_finite_field: field size cap exceeded");
    q_ = q.get_ui();

    if (n == 1) {
        modulus_ = {0, 1};  // degenerate convention: modulus x
        return;
    }
    // Lexicographically least monic irreducible of degree n, comparing
    // coefficient vectors ascending from the constant term.
    std::vector<uint64_t> c(n, 0);
    for (;;) {
        PolyP f(c.begin(), c.end());
        f.push_back(1);
        if (is_irreducible(f, p)) {
            modulus_.assign(f.begin(), f.end());
            return;
        }
        // increment c as a little-endian base-p counter
        unsigned i = 0;
        while (i < n && ++c[i] == p) c[i++] = 0;
        if (i == n) throw std::logic_error("no irreducible polynomial found");
    }
}

FieldDescriptor::Elt FieldDescriptor::one() const {
    Elt e(n_, 0);
    e[0] = 1;
    return e;
}

FieldDescriptor::Elt FieldDescriptor::from_index(uint64_t idx) const {
    Elt e(n_, 0);
    for (unsigned i = 0; i < n_; ++i) {
        e[i] = idx % p_;
        idx /= p_;
    }
    return e;
}

uint64_t FieldDescriptor::to_index(const Elt& a) const {
    uint64_t idx = 0;
    for (unsigned i = n_; i-- > 0;) idx = idx * p_ + a[i];
    return idx;
}

FieldDescriptor::Elt FieldDescriptor::add(const Elt& a, const Elt& b) const {
    Elt r(n_);
    for (unsigned i = 0; i < n_; ++i) r[i] = (a[i] + b[i]) % p_;
    return r;
}

FieldDescriptor::Elt FieldDescriptor::sub(const Elt& a, const Elt& b) const {
    Elt r(n_);
    for (unsigned i = 0; i < n_; ++i) r[i] = (a[i] + p_ - b[i]) % p_;
    return r;
}

FieldDescriptor::Elt FieldDescriptor::neg(const Elt& a) const {
    Elt r(n_);
    for (unsigned i = 0; i < n_; ++i) r[i] = (p_ - a[i]) % p_;
    return r;
}

FieldDescriptor::Elt FieldDescriptor::mul(const Elt& a, const Elt& b) const {
    std::vector<uint64_t> prod(2 * n_ - 1, 0);
    for (unsigned i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < n_; ++j)
            prod[i + j] = (prod[i + j] + (__uint128_t)a[i] * b[j]) % p_;
    }
    // reduce modulo the monic modulus
    for (unsigned d = 2 * n_ - 2; d >= n_; --d) {
        uint64_t lc = prod[d];
        if (lc) {
            prod[d] = 0;
            for (unsigned i = 0; i < n_; ++i) {
                uint64_t t = (__uint128_t)lc * modulus_[i] % p_;
                prod[d - n_ + i] = (prod[d - n_ + i] + p_ - t) % p_;
            }
        }
        if (d == n_) break;
    }
    Elt r(n_);
    for (unsigned i = 0; i < n_; ++i) r[i] = prod[i];
    return r;
}

bool FieldDescriptor::is_zero(const Elt& a) const {
    return std::all_of(a.begin(), a.end(), [](uint64_t c) { return c == 0; });
}

FieldDescriptor::Elt FieldDescriptor::pow(Elt a, uint64_t e) const {
    Elt r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

FieldDescriptor::Elt FieldDescriptor::inv(const Elt& a) const {
    if (is_zero(a)) throw std::domain_error("finite field: inverse of zero");
    return pow(a, q_ - 2);
}

std::string FieldDescriptor::encode(const Elt& a) const {
    unsigned width = 1;
    uint64_t v = p_ - 1;
    while (v >>= 8) ++width;
    std::string s;
    s.reserve(n_ * width);
    for (unsigned i = 0; i < n_; ++i)
        for (unsigned b = width; b-- > 0;)
            s.push_back(static_cast<char>((a[i] >> (8 * b)) & 0xff));
    return s;
}

}  // namespace specgeo
