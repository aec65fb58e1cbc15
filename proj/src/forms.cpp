#include "specgeo/forms.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace specgeo {

std::string space_name(Space x) {
    switch (x) {
        case Space::R: return "R";
        case Space::C: return "C";
        case Space::H: return "H";
    }
    throw std::logic_error("unknown space");
}

ModelForm make_model_form(NumberFieldPtr field, std::vector<NumberFieldElement> entries,
                          int distinguished) {
    if (entries.size() < 2) throw std::invalid_argument("make_model_form: need n+1 >= 2 entries");
    if (distinguished < 0 || distinguished >= static_cast<int>(field->real_embeddings().size()))
        throw std::invalid_argument("make_model_form: bad embedding index");
    for (const auto& e : entries) {
        if (e.field() != field) throw std::invalid_argument("make_model_form: field mismatch");
        if (e.is_zero()) throw std::invalid_argument("make_model_form: zero diagonal entry");
    }
    ModelForm b{std::move(field), std::move(entries), distinguished};
    auto [p, q] = signature_at_embedding(b, distinguished);
    if (q != 1 || p != static_cast<int>(b.n()))
        throw std::invalid_argument("make_model_form: signature at the distinguished embedding "
                                    "is not (n, 1)");
    return b;
}

std::pair<int, int> signature_at_embedding(const ModelForm& b, int j) {
    if (j < 0 || j >= static_cast<int>(b.field->real_embeddings().size()))
        throw std::invalid_argument("signature_at_embedding: bad embedding index");
    const auto& emb = b.field->real_embeddings()[j];
    int p = 0, q = 0;
    for (const auto& e : b.entries) {
        int s = sign_at_embedding(e, emb);
        if (s == 0) throw std::logic_error("signature_at_embedding: zero entry");
        (s > 0 ? p : q) += 1;
    }
    return {p, q};
}

AdmissibilityReport is_admissible(const ModelForm& b) {
    if (!b.field->totally_real())
        throw std::invalid_argument("is_admissible: field not totally real");
    AdmissibilityReport r;
    r.admissible = true;
    const int ne = static_cast<int>(b.field->real_embeddings().size());
    for (int j = 0; j < ne; ++j) {
        auto sig = signature_at_embedding(b, j);
        if (j == b.distinguished) {
            if (sig != std::make_pair(static_cast<int>(b.n()), 1)) r.admissible = false;
        } else {
            if (sig != std::make_pair(static_cast<int>(b.n()) + 1, 0)) r.admissible = false;
        }
        r.signatures.push_back(sig);
    }
    return r;
}

namespace {

long coord_height(const std::vector<long>& c) {
    long h = 0;
    for (long v : c) h = std::max(h, std::labs(v));
    return h;
}

int nonzero_count(const std::vector<long>& c) {
    int k = 0;
    for (long v : c) k += v != 0;
    return k;
}

}  // namespace

std::optional<ModelForm> search_admissible_diagonal(const NumberFieldPtr& field, unsigned n,
                                                    long height) {
    if (!field->totally_real())
        throw std::invalid_argument("search_admissible_diagonal: field not totally real");
    if (height < 1) return std::nullopt;
    const int m = field->degree();

    // candidate entries: nonzero integer coordinate vectors of bounded
    // height, ordered by (height, sparsity, coordinate tuple)
    std::vector<std::vector<long>> cands;
    {
        std::vector<long> c(m, -height);
        while (true) {
            if (coord_height(c) > 0) cands.push_back(c);
            int i = 0;
            while (i < m && c[i] == height) c[i++] = -height;
            if (i == m) break;
            ++c[i];
        }
    }
    if (cands.size() > 5000)
        throw std::runtime_error("search_admissible_diagonal: height bound too large");
    std::stable_sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
        long ha = coord_height(a), hb = coord_height(b);
        if (ha != hb) return ha < hb;
        int na = nonzero_count(a), nb = nonzero_count(b);
        if (na != nb) return na < nb;
        return a < b;
    });

    // theta is read as the largest real root of the minimal polynomial, so
    // the distinguished embedding is the last one
    const int dist = field->r1() - 1;
    std::vector<NumberFieldElement> elts;
    std::vector<int> sign1;  // sign at the distinguished embedding
    const auto& emb1 = field->real_embeddings().back();
    for (const auto& c : cands) {
        std::vector<Rational> coords(c.begin(), c.end());
        elts.emplace_back(field, std::move(coords));
        sign1.push_back(sign_at_embedding(elts.back(), emb1));
    }

    // multisets of n+1 entry indices, height band by height band,
    // nondecreasing index tuples in lexicographic order
    std::vector<int> pick(n + 1, 0);
    for (long band = 1; band <= height; ++band) {
        size_t limit = 0;
        while (limit < cands.size() && coord_height(cands[limit]) <= band) ++limit;
        std::fill(pick.begin(), pick.end(), 0);
        while (true) {
            long tuple_height = 0;
            for (int i : pick) tuple_height = std::max(tuple_height, coord_height(cands[i]));
            if (tuple_height == band) {
                int negatives = 0;
                for (int i : pick) negatives += sign1[i] < 0;
                if (negatives == 1) {
                    std::vector<NumberFieldElement> entries;
                    for (int i : pick)
                        if (sign1[i] > 0) entries.push_back(elts[i]);
                    for (int i : pick)
                        if (sign1[i] < 0) entries.push_back(elts[i]);
                    ModelForm b{field, std::move(entries), dist};
                    if (is_admissible(b).admissible) return b;
                }
            }
            // next nondecreasing tuple
            int i = static_cast<int>(n);
            while (i >= 0 && pick[i] == static_cast<int>(limit) - 1) --i;
            if (i < 0) break;
            int v = pick[i] + 1;
            for (int j = i; j <= static_cast<int>(n); ++j) pick[j] = v;
        }
    }
    return std::nullopt;
}

DefinitenessReport quaternion_totally_definite(const QuaternionAlgebraDescriptor& a) {
    if (!a.base->totally_real())
        throw std::invalid_argument("quaternion_totally_definite: base not totally real");
    if (a.alpha.is_zero() || a.beta.is_zero())
        throw std::invalid_argument("quaternion_totally_definite: zero parameter");
    DefinitenessReport r;
    r.totally_definite = true;
    for (const auto& emb : a.base->real_embeddings()) {
        int sa = sign_at_embedding(a.alpha, emb);
        int sb = sign_at_embedding(a.beta, emb);
        r.signs.push_back({sa, sb});
        if (sa >= 0 || sb >= 0) r.totally_definite = false;
    }
    return r;
}

// ----- Cocompactness ---------------------------------------------------

namespace {

// Integer diagonal of a rational form, scaled by the lcm of denominators
// and reduced by the gcd.
std::vector<Integer> integral_diagonal(const ModelForm& b) {
    Integer lcm = 1;
    for (const auto& e : b.entries) {
        Integer den = e.coords()[0].get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<Integer> d;
    for (const auto& e : b.entries) {
        Rational v = e.coords()[0] * Rational(lcm);
        d.push_back(v.get_num());
    }
    Integer g = 0;
    for (const auto& v : d) {
        Integer a = abs(v);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    if (g > 1)
        for (auto& v : d) v /= g;
    return d;
}

// Does a primitive solution of sum d_i x_i^2 = 0 survive modulo m? A
// rational isotropy witness scales to a primitive integer vector, which
// keeps a coordinate coprime to the prime p underlying m.
bool primitive_solution_mod(const std::vector<long long>& d, uint64_t m, uint64_t p) {
    const size_t k = d.size();
    std::vector<uint64_t> dm(k);
    for (size_t i = 0; i < k; ++i)
        dm[i] = static_cast<uint64_t>(((d[i] % (long long)m) + (long long)m) % (long long)m);
    std::vector<uint64_t> x(k, 0);
    while (true) {
        bool some_unit = false;
        for (uint64_t v : x)
            if (v % p != 0) some_unit = true;
        if (some_unit) {
            uint64_t s = 0;
            for (size_t i = 0; i < k; ++i) s = (s + dm[i] * (x[i] * x[i] % m)) % m;
            if (s == 0) return true;
        }
        size_t i = 0;
        while (i < k && x[i] == m - 1) x[i++] = 0;
        if (i == k) return false;
        ++x[i];
    }
}

bool verify_witness(const std::vector<Integer>& d, const std::vector<Rational>& v) {
    Rational s = 0;
    bool nonzero = false;
    for (size_t i = 0; i < d.size(); ++i) {
        s += Rational(d[i]) * v[i] * v[i];
        if (v[i] != 0) nonzero = true;
    }
    return nonzero && s == 0;
}

std::optional<std::vector<Rational>> isotropy_witness(const std::vector<long long>& d,
                                                      long height) {
    const size_t k = d.size();
    auto rationalize = [](std::initializer_list<long long> v) {
        std::vector<Rational> r;
        for (long long x : v) r.push_back(Rational(Integer(static_cast<long>(x))));
        return r;
    };
    if (k == 2) {
        Integer prod = Integer(static_cast<long>(-d[0])) * Integer(static_cast<long>(d[1]));
        if (prod >= 0 && is_perfect_square(prod)) {
            Integer s = isqrt(prod);
            // d0 s^2 + d1 d0^2 = d0 (s^2 + d0 d1) = 0
            std::vector<Rational> v = {Rational(s), Rational(Integer(static_cast<long>(d[0])))};
            return v;
        }
        return std::nullopt;
    }
    if (k == 3) {
        for (long long x = 0; x <= height; ++x)
            for (long long y = (x == 0 ? 1 : 0); y <= height; ++y) {
                long long s = d[0] * x * x + d[1] * y * y;
                if (s % d[2] != 0) continue;
                long long t = -s / d[2];
                if (t < 0) continue;
                Integer ti(static_cast<long>(t));
                if (!is_perfect_square(ti)) continue;
                return rationalize({x, y, isqrt(ti).get_si()});
            }
        return std::nullopt;
    }
    if (k == 4) {
        const long long h = std::min<long long>(height, 1200);
        std::unordered_map<long long, std::pair<long long, long long>> table;
        for (long long x = 0; x <= h; ++x)
            for (long long y = 0; y <= h; ++y)
                table.emplace(d[0] * x * x + d[1] * y * y, std::make_pair(x, y));
        for (long long z = 0; z <= h; ++z)
            for (long long w = 0; w <= h; ++w) {
                auto it = table.find(-(d[2] * z * z + d[3] * w * w));
                if (it == table.end()) continue;
                auto [x, y] = it->second;
                if (x == 0 && y == 0 && z == 0 && w == 0) continue;
                return rationalize({x, y, z, w});
            }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

CocompactnessVerdict classify_cocompactness(Space x, const ModelForm& b, long search_height) {
    CocompactnessVerdict out;
    const unsigned n = b.n();
    const bool rational = b.field->degree() == 1;

    if (!rational) {
        if (!b.field->totally_real() || !is_admissible(b).admissible)
            throw std::invalid_argument(
                "classify_cocompactness: form over F != Q must be admissible");
        out.verdict = Cocompactness::cocompact;
        out.rule = "admissible form over a totally real field other than Q: the integral "
                   "orthogonal lattice is cocompact";
        return out;
    }

    if (x == Space::H) {
        out.verdict = Cocompactness::noncocompact;
        out.rule = "quaternionic hyperbolic lattices over the rational integers are "
                   "noncocompact for every form";
        return out;
    }
    if (x == Space::C && n > 1) {
        out.verdict = Cocompactness::noncocompact;
        out.rule = "complex hyperbolic lattices over the rational integers are noncocompact "
                   "for every form when n > 1";
        return out;
    }
    if (x == Space::R && n > 3) {
        out.verdict = Cocompactness::noncocompact;
        out.rule = "real hyperbolic lattices over the rational integers are noncocompact for "
                   "every form when n > 3";
        return out;
    }
    if (x != Space::R) {
        out.rule = "no rule covers complex hyperbolic n = 1 over Q";
        return out;
    }

    // X = R, F = Q, n <= 3: decide isotropy of the rational quadratic form
    auto d = integral_diagonal(b);
    std::vector<long long> dl;
    for (const auto& v : d) {
        if (abs(v) > Integer(1'000'000)) {
            out.rule = "entries exceed the bounded-search range; isotropy undecided";
            return out;
        }
        dl.push_back(v.get_si());
    }

    // residue obstructions: no primitive zero modulo m proves anisotropy
    std::vector<std::pair<uint64_t, uint64_t>> moduli = {{8, 2}, {16, 2}};
    for (uint64_t p = 3; p <= 50; p += 2) {
        if (!is_prime(Integer(static_cast<unsigned long>(p)))) continue;
        for (long long v : dl)
            if (v % (long long)p == 0) {
                moduli.emplace_back(p, p);
                moduli.emplace_back(p * p, p);
                break;
            }
    }
    const double scan_budget = 2e7;  // m^k residue tuples per modulus
    for (auto [m, p] : moduli) {
        if (std::pow(static_cast<double>(m), static_cast<double>(dl.size())) > scan_budget)
            continue;
        if (!primitive_solution_mod(dl, m, p)) {
            out.verdict = Cocompactness::cocompact;
            out.obstruction_modulus = m;
            out.rule = "anisotropic over Q: no primitive zero modulo " + std::to_string(m) +
                       ", so the rational lattice is cocompact";
            return out;
        }
    }

    if (auto w = isotropy_witness(dl, search_height)) {
        if (!verify_witness(d, *w))
            throw std::logic_error("classify_cocompactness: witness failed re-evaluation");
        out.verdict = Cocompactness::noncocompact;
        out.witness = std::move(*w);
        out.rule = "isotropic over Q: the witness vector is a nonzero rational zero of the "
                   "form, so the rational lattice is noncocompact";
        return out;
    }

    out.rule = "no residue obstruction found and the bounded isotropy search was exhausted";
    return out;
}

// ----- Projective model ------------------------------------------------

Quaternion Quaternion::operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z, w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x, w * o.z + x * o.y - y * o.x + z * o.w};
}

Quaternion standard_form_value(const ProjectivePoint& x, const ProjectivePoint& y) {
    if (x.coords.size() != y.coords.size() || x.coords.size() < 2)
        throw std::invalid_argument("standard_form_value: dimension mismatch");
    const size_t last = x.coords.size() - 1;
    Quaternion s{};
    for (size_t i = 0; i < last; ++i) s = s + y.coords[i].conj() * x.coords[i];
    Quaternion t = y.coords[last].conj() * x.coords[last];
    return s + t * -1.0;
}

ProjectivePoint make_projective_point(Space space, std::vector<Quaternion> coords) {
    if (coords.size() < 2) throw std::invalid_argument("make_projective_point: need n+1 >= 2");
    for (const auto& c : coords) {
        if (space == Space::R && (c.x != 0 || c.y != 0 || c.z != 0))
            throw std::invalid_argument("make_projective_point: nonreal coordinate for X = R");
        if (space == Space::C && (c.y != 0 || c.z != 0))
            throw std::invalid_argument("make_projective_point: noncomplex coordinate for X = C");
    }
    ProjectivePoint p{std::move(coords)};
    Quaternion bxx = standard_form_value(p, p);
    if (!(bxx.w < 0))
        throw std::invalid_argument("make_projective_point: point outside the negative cone");
    return p;
}

double hyperbolic_distance(const ProjectivePoint& x, const ProjectivePoint& y, Space space) {
    (void)space;  // coordinates were validated at construction
    Quaternion bxy = standard_form_value(x, y);
    Quaternion byx = standard_form_value(y, x);
    double num = (bxy * byx).w;
    double den = standard_form_value(x, x).w * standard_form_value(y, y).w;
    double q = num / den;
    if (q < 1.0 - 1e-12)
        throw std::domain_error("hyperbolic_distance: quotient below 1");
    if (q < 1.0) q = 1.0;
    return std::acosh(std::sqrt(q));
}

bool preserves_form(const std::vector<std::vector<Rational>>& a,
                    const std::vector<Rational>& diag) {
    const size_t n = diag.size();
    if (a.size() != n) throw std::invalid_argument("preserves_form: dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("preserves_form: dimension mismatch");
    // (A^T B A)_{ij} = sum_k a_{ki} d_k a_{kj}
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Rational s = 0;
            for (size_t k = 0; k < n; ++k) s += a[k][i] * diag[k] * a[k][j];
            if (s != (i == j ? diag[i] : Rational(0))) return false;
        }
    return true;
}

bool preserves_form(const std::vector<std::vector<double>>& a, const std::vector<double>& diag,
                    double tol) {
    const size_t n = diag.size();
    if (a.size() != n) throw std::invalid_argument("preserves_form: dimension mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("preserves_form: dimension mismatch");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            double s = 0;
            for (size_t k = 0; k < n; ++k) s += a[k][i] * diag[k] * a[k][j];
            double want = i == j ? diag[i] : 0.0;
            if (std::abs(s - want) > tol) return false;
        }
    return true;
}

}  // namespace specgeo
