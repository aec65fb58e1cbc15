#include "specgeo/character.hpp"

#include "specgeo/bigint.hpp"

#include <algorithm>
#include <random>
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

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

using Vec = std::vector<uint64_t>;
using Mat = std::vector<Vec>;

Vec mat_vec(const Mat& m, const Vec& v, uint64_t p) {
    Vec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) {
        __uint128_t acc = 0;
        for (size_t j = 0; j < v.size(); ++j) {
            acc += (__uint128_t)m[i][j] * v[j] % p;
        }
        r[i] = acc % p;
    }
    return r;
}

// Charpoly over F_p by Hessenberg reduction, ascending coefficients.
Vec charpoly_modp(Mat a, uint64_t p) {
    const size_t n = a.size();
    for (size_t j = 0; j + 2 < n; ++j) {
        size_t piv = j + 1;
        while (piv < n && a[piv][j] == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            std::swap(a[piv], a[j + 1]);
            for (size_t i = 0; i < n; ++i) std::swap(a[i][piv], a[i][j + 1]);
        }
        uint64_t inv = invmod(a[j + 1][j], p);
        for (size_t i = j + 2; i < n; ++i) {
            if (a[i][j] == 0) continue;
            uint64_t f = mulmod(a[i][j], inv, p);
            for (size_t k = 0; k < n; ++k) {
                uint64_t t = mulmod(f, a[j + 1][k], p);
                a[i][k] = (a[i][k] + p - t) % p;
            }
            for (size_t k = 0; k < n; ++k) {
                uint64_t t = mulmod(f, a[k][i], p);
                a[k][j + 1] = (a[k][j + 1] + t) % p;
            }
        }
    }
    std::vector<Vec> c(n + 1);
    c[0] = {1};
    for (size_t m = 1; m <= n; ++m) {
        Vec cm(m + 1, 0);
        const auto& prev = c[m - 1];
        for (size_t i = 0; i < prev.size(); ++i) {
            cm[i + 1] = (cm[i + 1] + prev[i]) % p;
            uint64_t t = mulmod(a[m - 1][m - 1], prev[i], p);
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

uint64_t poly_eval_modp(const Vec& c, uint64_t x, uint64_t p) {
    uint64_t acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = (mulmod(acc, x, p) + c[i]) % p;
    return acc;
}

// Null space basis of m over F_p (m is square).
std::vector<Vec> null_space(Mat m, uint64_t p) {
    const size_t n = m.size();
    std::vector<int> pivot_col_of_row;
    std::vector<char> is_pivot(n, 0);
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(m[piv], m[row]);
        uint64_t inv = invmod(m[row][col], p);
        for (size_t k = col; k < n; ++k) m[row][k] = mulmod(m[row][k], inv, p);
        for (size_t i = 0; i < n; ++i) {
            if (i == row || m[i][col] == 0) continue;
            uint64_t f = m[i][col];
            for (size_t k = col; k < n; ++k) {
                uint64_t t = mulmod(f, m[row][k], p);
                m[i][k] = (m[i][k] + p - t) % p;
            }
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        is_pivot[col] = 1;
        ++row;
    }
    std::vector<Vec> basis;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(n, 0);
        v[free_col] = 1;
        for (size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            uint64_t val = m[r][free_col];
            if (val) v[pivot_col_of_row[r]] = p - val;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve B * x = v where the columns of B (k x d) are independent;
// returns x of length d. Used to restrict a commuting matrix to an
// invariant subspace.
Vec solve_in_basis(const std::vector<Vec>& basis_cols, const Vec& v, uint64_t p) {
    const size_t k = v.size(), d = basis_cols.size();
    Mat aug(k, Vec(d + 1, 0));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < d; ++j) aug[i][j] = basis_cols[j][i];
        aug[i][d] = v[i];
    }
    size_t row = 0;
    std::vector<int> pivcol;
    for (size_t col = 0; col < d && row < k; ++col) {
        size_t piv = row;
        while (piv < k && aug[piv][col] == 0) ++piv;
        if (piv == k) continue;
        std::swap(aug[piv], aug[row]);
        uint64_t inv = invmod(aug[row][col], p);
        for (size_t t = col; t <= d; ++t) aug[row][t] = mulmod(aug[row][t], inv, p);
        for (size_t i = 0; i < k; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            uint64_t f = aug[i][col];
            for (size_t t = col; t <= d; ++t) {
                uint64_t x = mulmod(f, aug[row][t], p);
                aug[i][t] = (aug[i][t] + p - x) % p;
            }
        }
        pivcol.push_back(static_cast<int>(col));
        ++row;
    }
    Vec x(d, 0);
    for (size_t r = 0; r < pivcol.size(); ++r) x[pivcol[r]] = aug[r][d];
    return x;
}

}  // namespace

CharacterTable character_table(const GroupPtr& g, size_t cap) {
    if (g->order() > cap)
        throw std::invalid_argument("character_table: group order cap exceeded");
    CharacterTable t;
    t.group = g;
    t.classes = conjugacy_classes(g);
    const int k = t.classes.count();
    const uint64_t n = g->order();
    t.exponent = g->exponent();

    // prime r = 1 mod exp(G), r > 2|G|
    uint64_t r = 0;
    {
        uint64_t m = (2 * n) / t.exponent + 1;
        const uint64_t search_bound = 100'000'000ull;
        for (;; ++m) {
            uint64_t cand = m * t.exponent + 1;
            if (cand <= 2 * n) continue;
            if (cand > search_bound)
                throw std::runtime_error("character_table: prime search exhausted");
            if (is_prime(Integer(static_cast<unsigned long>(cand)))) {
                r = cand;
                break;
            }
        }
    }
    t.prime = r;
    // generator of order exp(G) mod r
    {
        uint64_t cofactor = (r - 1) / t.exponent;
        uint64_t z = 0;
        for (uint64_t a = 2; a < r; ++a) {
            uint64_t c = powmod(a, cofactor, r);
            // c has order dividing exponent; check it is exactly exponent
            bool full = c != 1;
            if (!full) continue;
            uint64_t e = t.exponent;
            bool ok = true;
            for (uint64_t q = 2; q * q <= e; ++q) {
                if (e % q) continue;
                while (e % q == 0) e /= q;
                if (powmod(c, t.exponent / q, r) == 1) { ok = false; break; }
            }
            if (ok && e > 1 && powmod(c, t.exponent / e, r) == 1) ok = false;
            if (ok) { z = c; break; }
        }
        if (z == 0) throw std::runtime_error("character_table: no primitive root found");
        t.root_of_unity = z;
    }

    // class multiplication matrices: M_i[l][j] = #{x in C_i : x^-1 * rep_l in C_j}
    // i.e. the matrix of multiplication by the class sum c_i on the basis
    // {c_j}, read through a_{ij}^{l} = #{(x,y) in C_i x C_j : xy = rep_l}.
    std::vector<Mat> class_mats(k, Mat(k, Vec(k, 0)));
    for (int i = 0; i < k; ++i) {
        // enumerate C_i once
        std::vector<int> ci;
        for (size_t x = 0; x < g->order(); ++x)
            if (t.classes.class_of[x] == i) ci.push_back(static_cast<int>(x));
        for (int l = 0; l < k; ++l) {
            int rep = t.classes.class_reps[l];
            for (int x : ci) {
                int y = g->mul(g->inv(x), rep);
                int j = t.classes.class_of[y];
                ++class_mats[i][l][j];
            }
        }
        for (auto& row : class_mats[i])
            for (auto& v : row) v %= r;
    }
    // transpose convention: we want matrices acting on coordinate vectors
    // in the class-sum basis; c_i * c_j = sum_l a_{ijl} c_l, so the matrix
    // of multiplication by c_i has (l, j) entry a_{ijl}. a_{ijl} =
    // #{x in C_i : x^-1 rep_l in C_j} as computed above.

    // split the common eigenspaces
    std::vector<std::vector<Vec>> spaces;  // each: list of basis column vectors
    {
        std::vector<Vec> full;
        for (int i = 0; i < k; ++i) {
            Vec e(k, 0);
            e[i] = 1;
            full.push_back(std::move(e));
        }
        spaces.push_back(std::move(full));
    }
    std::mt19937_64 rng(0xD1C50ULL);  // fixed seed: reproducible tables
    int round = 0;
    while (true) {
        bool all_one = std::all_of(spaces.begin(), spaces.end(),
                                   [](const auto& s) { return s.size() == 1; });
        if (all_one) break;
        if (round > 2 * k + 64)
            throw std::runtime_error("character_table: eigenspace splitting did not converge");
        // matrix for this round: a single class matrix first, then
        // deterministic pseudo-random combinations
        Mat m(k, Vec(k, 0));
        if (round < k) {
            m = class_mats[round];
        } else {
            for (int i = 0; i < k; ++i) {
                uint64_t c = rng() % r;
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b)
                        m[a][b] = (m[a][b] + mulmod(c, class_mats[i][a][b], r)) % r;
            }
        }
        ++round;
        std::vector<std::vector<Vec>> next;
        for (auto& space : spaces) {
            const size_t d = space.size();
            if (d == 1) {
                next.push_back(std::move(space));
                continue;
            }
            // restriction A of m to the invariant subspace: m*B = B*A
            Mat a(d, Vec(d, 0));
            for (size_t j = 0; j < d; ++j) {
                Vec img = mat_vec(m, space[j], r);
                Vec col = solve_in_basis(space, img, r);
                for (size_t i = 0; i < d; ++i) a[i][j] = col[i];
            }
            Vec chi = charpoly_modp(a, r);
            // eigenvalues: roots of chi over F_r. All eigenvalues of class
            // matrices lie in F_r because r = 1 mod exp(G).
            std::vector<uint64_t> eigs;
            for (uint64_t lam = 0; lam < r; ++lam)
                if (poly_eval_modp(chi, lam, r) == 0) {
                    eigs.push_back(lam);
                    if (eigs.size() == d) break;
                }
            if (eigs.size() <= 1) {
                next.push_back(std::move(space));
                continue;
            }
            for (uint64_t lam : eigs) {
                Mat shifted = a;
                for (size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + r - lam) % r;
                auto ns = null_space(shifted, r);
                if (ns.empty()) continue;
                std::vector<Vec> sub;
                for (const auto& v : ns) {
                    // embed back: B * v
                    Vec w(k, 0);
                    for (size_t j = 0; j < d; ++j) {
                        if (v[j] == 0) continue;
                        for (int i2 = 0; i2 < k; ++i2)
                            w[i2] = (w[i2] + mulmod(v[j], space[j][i2], r)) % r;
                    }
                    sub.push_back(std::move(w));
                }
                next.push_back(std::move(sub));
            }
        }
        spaces = std::move(next);
    }

    // recover characters from the 1-dimensional common eigenvectors
    const uint64_t n_mod = n % r;
    std::vector<std::pair<uint64_t, Vec>> rows;  // (degree, values)
    for (const auto& space : spaces) {
        const Vec& v = space[0];
        int pivot = -1;
        for (int i = 0; i < k; ++i)
            if (v[i]) { pivot = i; break; }
        if (pivot < 0) throw std::logic_error("character_table: zero eigenvector");
        uint64_t vpinv = invmod(v[pivot], r);
        Vec omega(k);  // omega_i = |C_i| chi(g_i) / chi(1)
        for (int i = 0; i < k; ++i) {
            Vec img = mat_vec(class_mats[i], v, r);
            omega[i] = mulmod(img[pivot], vpinv, r);
        }
        // 1/d^2 = (1/|G|) sum_i omega_i * omega_{i^-1} / |C_i|
        uint64_t s = 0;
        for (int i = 0; i < k; ++i) {
            uint64_t term = mulmod(omega[i], omega[t.classes.inverse_class[i]], r);
            term = mulmod(term, invmod(t.classes.class_sizes[i] % r, r), r);
            s = (s + term) % r;
        }
        uint64_t d2 = mulmod(n_mod, invmod(s, r), r);
        uint64_t deg = 0;
        for (uint64_t d = 1; d * d <= n; ++d)
            if (mulmod(d % r, d % r, r) == d2) { deg = d; break; }
        if (deg == 0) throw std::logic_error("character_table: degree lift failed");
        Vec chi(k);
        for (int i = 0; i < k; ++i) {
            uint64_t inv_sz = invmod(t.classes.class_sizes[i] % r, r);
            chi[i] = mulmod(mulmod(deg % r, omega[i], r), inv_sz, r);
        }
        rows.emplace_back(deg, std::move(chi));
    }
    if (static_cast<int>(rows.size()) != k)
        throw std::logic_error("character_table: wrong number of irreducibles");
    // deterministic row order: trivial first, then (degree, values)
    std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        bool ta = std::all_of(a.second.begin(), a.second.end(),
                              [](uint64_t x) { return x == 1; });
        bool tb = std::all_of(b.second.begin(), b.second.end(),
                              [](uint64_t x) { return x == 1; });
        if (ta != tb) return ta;
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    for (auto& [deg, vals] : rows) {
        t.degrees.push_back(deg);
        t.values.push_back(std::move(vals));
    }

    // sum of squares of degrees
    uint64_t ssq = 0;
    for (uint64_t d : t.degrees) ssq += d * d;
    if (ssq != n) throw std::logic_error("character_table: degree sum check failed");
    // row orthogonality mod r
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            uint64_t s = 0;
            for (int i = 0; i < k; ++i) {
                uint64_t term = mulmod(t.values[a][i], t.conj_value(b, i), r);
                term = mulmod(term, t.classes.class_sizes[i] % r, r);
                s = (s + term) % r;
            }
            uint64_t expect = (a == b) ? n_mod : 0;
            if (s != expect)
                throw std::logic_error("character_table: row orthogonality failed");
        }
    return t;
}

uint64_t fixed_space_dim(const CharacterTable& t, int chi, const Subgroup& h) {
    if (chi < 0 || chi >= t.count())
        throw std::invalid_argument("fixed_space_dim: character row out of range");
    if (h.parent != t.group)
        throw std::invalid_argument("fixed_space_dim: subgroup parent mismatch");
    const uint64_t r = t.prime;
    uint64_t s = 0;
    for (int m : h.members) s = (s + t.values[chi][t.classes.class_of[m]]) % r;
    uint64_t val = mulmod(s, invmod(h.order() % r, r), r);
    // The true value is an integer in [0, deg chi]; deg chi <= sqrt|G| < r.
    if (val > t.degrees[chi])
        throw std::logic_error("fixed_space_dim: lift out of range");
    return val;
}

}  // namespace specgeo
