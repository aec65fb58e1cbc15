#include "specgeo/charpoly.hpp"

#include <stdexcept>

namespace specgeo {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return (__uint128_t)a * b % p; }

uint64_t powmod(uint64_t b, uint64_t e, uint64_t p) {
    uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = mulmod(r, b, p);
        b = mulmod(b, b, p);
        e >>= 1;
    }
    return r;
}

// Charpoly of an n x n matrix over F_p by Hessenberg reduction; returns
// coefficients ascending, monic. O(n^3).
std::vector<uint64_t> charpoly_mod(std::vector<std::vector<uint64_t>> a, uint64_t p) {
    const size_t n = a.size();
    // Reduce to upper Hessenberg form by similarity transforms.
    for (size_t j = 0; j + 2 < n; ++j) {
        size_t piv = j + 1;
        while (piv < n && a[piv][j] == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            std::swap(a[piv], a[j + 1]);
            for (size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][j + 1]);
        }
        uint64_t inv = powmod(a[j + 1][j], p - 2, p);
        for (size_t i = j + 2; i < n; ++i) {
            if (a[i][j] == 0) continue;
            uint64_t f = mulmod(a[i][j], inv, p);
            // row_i -= f * row_{j+1}
            for (size_t k = 0; k < n; ++k) {
                uint64_t t = mulmod(f, a[j + 1][k], p);
                a[i][k] = (a[i][k] + p - t) % p;
            }
            // col_{j+1} += f * col_i
            for (size_t k = 0; k < n; ++k) {
                uint64_t t = mulmod(f, a[k][i], p);
                a[k][j + 1] = (a[k][j + 1] + t) % p;
            }
        }
    }
    // Recurrence on leading principal Hessenberg charpolys.
    std::vector<std::vector<uint64_t>> c(n + 1);
    c[0] = {1};
    for (size_t m = 1; m <= n; ++m) {
        // c_m = (x - a[m-1][m-1]) * c_{m-1} - sum over i of products of
        // subdiagonal entries times a[i][m-1] * c_i
        std::vector<uint64_t> cm(m + 1, 0);
        const auto& prev = c[m - 1];
        for (size_t i = 0; i < prev.size(); ++i) {
            cm[i + 1] = (cm[i + 1] + prev[i]) % p;
            uint64_t t = mulmod(a[m - 1][m - 1] % p, prev[i], p);
            cm[i] = (cm[i] + p - t) % p;
        }
        uint64_t beta = 1;
        for (size_t i = m - 1; i-- > 0;) {
            beta = mulmod(beta, a[i + 1][i], p);
            if (beta == 0) break;
            uint64_t f = mulmod(beta, a[i][m - 1], p);
            if (f == 0) continue;
            for (size_t k = 0; k < c[i].size(); ++k) {
                uint64_t t = mulmod(f, c[i][k], p);
                cm[k] = (cm[k] + p - t) % p;
            }
        }
        c[m] = std::move(cm);
    }
    return c[n];
}

const uint64_t kPrimes61Start = (1ull << 61);

uint64_t next_prime_above(uint64_t v) {
    Integer z(static_cast<unsigned long>(v));
    mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
    return z.get_ui();
}

}  // namespace

IntegerPolynomial integer_charpoly(const IntMatrix& m, size_t dim_cap) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("integer_charpoly: matrix not square");
    if (n > dim_cap) throw std::invalid_argument("integer_charpoly: dimension cap exceeded");
    if (n == 0) return IntegerPolynomial::constant(1);

    // Coefficient bound: |c_k| <= C(n,k) * (sqrt(k) * maxabs)^k, maximized
    // over k (c_k is a signed sum of k x k principal minors; Hadamard).
    Integer maxabs = 1;
    for (const auto& row : m)
        for (const auto& v : row) {
            Integer a = abs(v);
            if (a > maxabs) maxabs = a;
        }
    Integer bound = 1;
    for (size_t k = 1; k <= n; ++k) {
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, k);
        // (sqrt(k))^k <= k^ceil(k/2)
        Integer had = int_pow(Integer((unsigned long)k), (k + 1) / 2) * int_pow(maxabs, k);
        Integer b = binom * had;
        if (b > bound) bound = b;
    }
    // Gershgorin alternative: every eigenvalue satisfies |l| <= R (max
    // absolute row sum), so |c_k| <= C(n,k) R^k <= (1+R)^n. Tighter for
    // sparse matrices like graph adjacencies.
    Integer rowmax = 0;
    for (const auto& row : m) {
        Integer s = 0;
        for (const auto& v : row) s += abs(v);
        if (s > rowmax) rowmax = s;
    }
    Integer gersh = int_pow(rowmax + 1, n);
    if (gersh < bound) bound = gersh;
    bound = 2 * bound + 1;  // symmetric range

    std::vector<uint64_t> primes;
    Integer prod = 1;
    uint64_t cand = kPrimes61Start;
    while (prod < bound) {
        cand = next_prime_above(cand);
        primes.push_back(cand);
        prod *= Integer(Integer(static_cast<unsigned long>(cand)));
    }

    std::vector<std::vector<uint64_t>> residues;
    residues.reserve(primes.size());
    for (uint64_t p : primes) {
        std::vector<std::vector<uint64_t>> a(n, std::vector<uint64_t>(n));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                Integer r = m[i][j] % Integer(static_cast<unsigned long>(p));
                if (r < 0) r += Integer(static_cast<unsigned long>(p));
                a[i][j] = r.get_ui();
            }
        residues.push_back(charpoly_mod(std::move(a), p));
    }

    // CRT per coefficient with symmetric lift.
    std::vector<Integer> coeffs(n + 1);
    for (size_t k = 0; k <= n; ++k) {
        Integer x = 0, mod = 1;
        for (size_t i = 0; i < primes.size(); ++i) {
            Integer p(static_cast<unsigned long>(primes[i]));
            Integer r(static_cast<unsigned long>(residues[i][k]));
            // x' = x + mod * t, t = (r - x)/mod mod p
            Integer minv;
            Integer mm = mod % p;
            mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), p.get_mpz_t());
            Integer t = ((r - x) % p * minv) % p;
            if (t < 0) t += p;
            x += mod * t;
            mod *= p;
        }
        if (2 * x > mod) x -= mod;
        coeffs[k] = x;
    }
    return IntegerPolynomial(std::move(coeffs));
}

}  // namespace specgeo
