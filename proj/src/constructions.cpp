#include "specgeo/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace specgeo {

namespace {

void put_u32(Encoding& e, uint32_t v) {
    for (int b = 3; b >= 0; --b) e.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
}

uint32_t get_u32(const Encoding& e, size_t off) {
    uint32_t v = 0;
    for (int b = 0; b < 4; ++b) v = (v << 8) | static_cast<unsigned char>(e[off + b]);
    return v;
}

}  // namespace

// ----- Heisenberg ------------------------------------------------------

HeisenbergCarrier::HeisenbergCarrier(FieldDescriptor f) : field(std::move(f)) {
    width = field.encode(field.zero()).size();
}

Encoding HeisenbergCarrier::encode(const FieldDescriptor::Elt& x, const FieldDescriptor::Elt& y,
                                   const FieldDescriptor::Elt& t) const {
    return field.encode(x) + field.encode(y) + field.encode(t);
}

void HeisenbergCarrier::decode(const Encoding& e, FieldDescriptor::Elt& x,
                               FieldDescriptor::Elt& y, FieldDescriptor::Elt& t) const {
    auto part = [&](size_t k) {
        FieldDescriptor::Elt v(field.n());
        size_t per = width / field.n();
        for (unsigned i = 0; i < field.n(); ++i) {
            uint64_t c = 0;
            for (size_t b = 0; b < per; ++b)
                c = (c << 8) | static_cast<unsigned char>(e[k * width + i * per + b]);
            v[i] = c;
        }
        return v;
    };
    x = part(0);
    y = part(1);
    t = part(2);
}

Encoding HeisenbergCarrier::identity() const {
    return encode(field.zero(), field.zero(), field.zero());
}

Encoding HeisenbergCarrier::mul(const Encoding& a, const Encoding& b) const {
    FieldDescriptor::Elt x1, y1, t1, x2, y2, t2;
    decode(a, x1, y1, t1);
    decode(b, x2, y2, t2);
    // [[1,x,t],[0,1,y],[0,0,1]] product: x += x2, y += y2, t += t2 + x1*y2
    auto x = field.add(x1, x2);
    auto y = field.add(y1, y2);
    auto t = field.add(field.add(t1, t2), field.mul(x1, y2));
    return encode(x, y, t);
}

Encoding HeisenbergCarrier::inv(const Encoding& a) const {
    FieldDescriptor::Elt x, y, t;
    decode(a, x, y, t);
    // inverse: (-x, -y, xy - t)
    auto nx = field.neg(x), ny = field.neg(y);
    auto nt = field.sub(field.mul(x, y), t);
    return encode(nx, ny, nt);
}

std::string HeisenbergCarrier::name() const {
    std::ostringstream os;
    os << "heisenberg(p=" << field.p() << ",n=" << field.n() << ")";
    return os.str();
}

GroupPtr heisenberg_group(uint64_t p, unsigned n, size_t cap) {
    auto F = make_finite_field(p, n);
    if (F.q() * F.q() * F.q() > cap)
        throw std::runtime_error("heisenberg_group: cap exceeded");
    auto carrier = std::make_shared<HeisenbergCarrier>(F);
    std::vector<Encoding> elements;
    elements.reserve(F.q() * F.q() * F.q());
    for (uint64_t t = 0; t < F.q(); ++t)
        for (uint64_t y = 0; y < F.q(); ++y)
            for (uint64_t x = 0; x < F.q(); ++x)
                elements.push_back(
                    carrier->encode(F.from_index(x), F.from_index(y), F.from_index(t)));
    // generators: (1,0,0), (0,1,0) and theta-multiples spanning F_q
    std::vector<Encoding> gens;
    for (unsigned i = 0; i < n; ++i) {
        FieldDescriptor::Elt e = F.zero();
        e[i] = 1;
        gens.push_back(carrier->encode(e, F.zero(), F.zero()));
        gens.push_back(carrier->encode(F.zero(), e, F.zero()));
    }
    return ConcreteGroup::from_elements(carrier, std::move(elements), std::move(gens), cap);
}

namespace {

const HeisenbergCarrier& heisenberg_carrier(const GroupPtr& g) {
    auto* c = dynamic_cast<const HeisenbergCarrier*>(g->carrier().get());
    if (!c) throw std::invalid_argument("expected a Heisenberg group");
    return *c;
}

}  // namespace

Subgroup horizontal_subgroup(const GroupPtr& heis) {
    return twisted_horizontal(heis, twist_zero(heisenberg_carrier(heis).field));
}

FieldDescriptor::Elt TwistMap::apply(const FieldDescriptor& f,
                                     const FieldDescriptor::Elt& v) const {
    const unsigned n = f.n();
    FieldDescriptor::Elt r(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        uint64_t acc = 0;
        for (unsigned j = 0; j < n; ++j) acc += matrix[i][j] * v[j] % f.p();
        r[i] = acc % f.p();
    }
    return r;
}

std::vector<uint64_t> TwistMap::flat() const {
    std::vector<uint64_t> r;
    for (const auto& row : matrix) r.insert(r.end(), row.begin(), row.end());
    return r;
}

TwistMap twist_zero(const FieldDescriptor& f) {
    return TwistMap{std::vector<std::vector<uint64_t>>(f.n(), std::vector<uint64_t>(f.n(), 0))};
}

TwistMap multiplication_operator(const FieldDescriptor& f, const FieldDescriptor::Elt& c) {
    const unsigned n = f.n();
    TwistMap t = twist_zero(f);
    for (unsigned j = 0; j < n; ++j) {
        FieldDescriptor::Elt basis(n, 0);
        basis[j] = 1;
        auto img = f.mul(c, basis);
        for (unsigned i = 0; i < n; ++i) t.matrix[i][j] = img[i];
    }
    return t;
}

std::vector<TwistMap> all_endomorphisms(const FieldDescriptor& f) {
    const unsigned n = f.n();
    const uint64_t p = f.p();
    uint64_t total = 1;
    for (unsigned i = 0; i < n * n; ++i) total *= p;
    std::vector<TwistMap> out;
    out.reserve(total);
    for (uint64_t idx = 0; idx < total; ++idx) {
        TwistMap t = twist_zero(f);
        uint64_t v = idx;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                t.matrix[i][j] = v % p;
                v /= p;
            }
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

// Row-reduce the n multiplication-operator matrices (as vectors of length
// n^2 over F_p); returns the pivot coordinates.
std::vector<int> multiplication_pivots(const FieldDescriptor& f) {
    const unsigned n = f.n();
    const uint64_t p = f.p();
    std::vector<std::vector<uint64_t>> rows;
    for (unsigned i = 0; i < n; ++i) {
        FieldDescriptor::Elt c(n, 0);
        c[i] = 1;
        rows.push_back(multiplication_operator(f, c).flat());
    }
    std::vector<int> pivots;
    size_t row = 0;
    for (size_t col = 0; col < n * n && row < rows.size(); ++col) {
        size_t piv = row;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[row]);
        // normalize and eliminate
        uint64_t inv = 1;
        {
            // Fermat inverse mod p
            uint64_t b = rows[row][col], e = p - 2, r = 1;
            while (e) {
                if (e & 1) r = r * b % p;
                b = b * b % p;
                e >>= 1;
            }
            inv = r;
        }
        for (auto& v : rows[row]) v = v * inv % p;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == row || rows[i][col] == 0) continue;
            uint64_t fct = rows[i][col];
            for (size_t k2 = 0; k2 < n * n; ++k2)
                rows[i][k2] = (rows[i][k2] + (p - fct) * rows[row][k2]) % p;
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    if (pivots.size() != n) throw std::logic_error("multiplication operators not independent");
    return pivots;
}

}  // namespace

bool is_multiplication_operator(const FieldDescriptor& f, const TwistMap& t) {
    // f(x) = c * x forces c = f(1); compare matrices.
    FieldDescriptor::Elt one = f.one();
    auto c = t.apply(f, one);
    return multiplication_operator(f, c).matrix == t.matrix;
}

std::vector<TwistMap> twist_representatives(uint64_t p, unsigned n, uint64_t size_cap) {
    auto f = make_finite_field(p, n, size_cap);
    auto pivots = multiplication_pivots(f);
    std::vector<char> is_pivot(n * n, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<int> free_coords;
    for (unsigned c = 0; c < n * n; ++c)
        if (!is_pivot[c]) free_coords.push_back(static_cast<int>(c));
    // all F_p-combinations of standard basis matrices at free coordinates
    uint64_t total = 1;
    for (size_t i = 0; i < free_coords.size(); ++i) total *= p;
    std::vector<TwistMap> out;
    out.reserve(total);
    for (uint64_t idx = 0; idx < total; ++idx) {
        TwistMap t = twist_zero(f);
        uint64_t v = idx;
        for (int c : free_coords) {
            t.matrix[c / n][c % n] = v % p;
            v /= p;
        }
        out.push_back(std::move(t));
    }
    return out;
}

Subgroup twisted_horizontal(const GroupPtr& heis, const TwistMap& f) {
    const auto& carrier = heisenberg_carrier(heis);
    const auto& F = carrier.field;
    if (f.matrix.size() != F.n())
        throw std::invalid_argument("twisted_horizontal: twist dimension mismatch");
    std::vector<int> members;
    for (uint64_t xi = 0; xi < F.q(); ++xi) {
        auto x = F.from_index(xi);
        auto enc = carrier.encode(x, F.zero(), f.apply(F, x));
        int idx = heis->index_of(enc);
        if (idx < 0) throw std::logic_error("twisted_horizontal: element missing");
        members.push_back(idx);
    }
    std::sort(members.begin(), members.end());
    Subgroup h{heis, std::move(members)};
    if (!is_subgroup_of(heis, h))
        throw std::logic_error("twisted_horizontal: not a subgroup");
    return h;
}

// ----- Affine ----------------------------------------------------------

AffineCarrier::AffineCarrier(uint64_t p_, unsigned n_) : p(p_), n(n_) {}

Encoding AffineCarrier::encode(const std::vector<uint64_t>& v,
                               const std::vector<std::vector<uint64_t>>& m) const {
    Encoding e;
    for (uint64_t c : v) e.push_back(static_cast<char>(c));
    for (const auto& row : m)
        for (uint64_t c : row) e.push_back(static_cast<char>(c));
    return e;
}

void AffineCarrier::decode(const Encoding& e, std::vector<uint64_t>& v,
                           std::vector<std::vector<uint64_t>>& m) const {
    v.assign(n, 0);
    m.assign(n, std::vector<uint64_t>(n, 0));
    size_t k = 0;
    for (unsigned i = 0; i < n; ++i) v[i] = static_cast<unsigned char>(e[k++]);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m[i][j] = static_cast<unsigned char>(e[k++]);
}

Encoding AffineCarrier::identity() const {
    std::vector<uint64_t> v(n, 0);
    std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(n, 0));
    for (unsigned i = 0; i < n; ++i) m[i][i] = 1;
    return encode(v, m);
}

Encoding AffineCarrier::mul(const Encoding& a, const Encoding& b) const {
    std::vector<uint64_t> v1, v2;
    std::vector<std::vector<uint64_t>> m1, m2;
    decode(a, v1, m1);
    decode(b, v2, m2);
    std::vector<uint64_t> v(n, 0);
    std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(n, 0));
    for (unsigned i = 0; i < n; ++i) {
        uint64_t acc = v1[i];
        for (unsigned j = 0; j < n; ++j) acc += m1[i][j] * v2[j];
        v[i] = acc % p;
        for (unsigned j = 0; j < n; ++j) {
            uint64_t s = 0;
            for (unsigned k = 0; k < n; ++k) s += m1[i][k] * m2[k][j];
            m[i][j] = s % p;
        }
    }
    return encode(v, m);
}

Encoding AffineCarrier::inv(const Encoding& a) const {
    std::vector<uint64_t> v1;
    std::vector<std::vector<uint64_t>> m1;
    decode(a, v1, m1);
    // invert m1 by Gauss-Jordan over F_p
    std::vector<std::vector<uint64_t>> aug(n, std::vector<uint64_t>(2 * n, 0));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) aug[i][j] = m1[i][j];
        aug[i][n + i] = 1;
    }
    auto invp = [this](uint64_t x) {
        uint64_t b = x % p, e = p - 2, r = 1;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (unsigned col = 0; col < n; ++col) {
        unsigned piv = col;
        while (piv < n && aug[piv][col] == 0) ++piv;
        if (piv == n) throw std::logic_error("affine inverse: singular matrix");
        std::swap(aug[piv], aug[col]);
        uint64_t iv = invp(aug[col][col]);
        for (auto& x : aug[col]) x = x * iv % p;
        for (unsigned i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            uint64_t f = aug[i][col];
            for (unsigned k = 0; k < 2 * n; ++k)
                aug[i][k] = (aug[i][k] + (p - f) * aug[col][k]) % p;
        }
    }
    std::vector<std::vector<uint64_t>> mi(n, std::vector<uint64_t>(n));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) mi[i][j] = aug[i][n + j];
    // (v, M)^-1 = (-M^-1 v, M^-1)
    std::vector<uint64_t> v(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        uint64_t acc = 0;
        for (unsigned j = 0; j < n; ++j) acc += mi[i][j] * v1[j];
        v[i] = (p - acc % p) % p;
    }
    return encode(v, mi);
}

std::string AffineCarrier::name() const {
    std::ostringstream os;
    os << "affine(p=" << p << ",n=" << n << ")";
    return os.str();
}

GroupPtr affine_group(uint64_t p, unsigned n, size_t cap) {
    auto carrier = std::make_shared<AffineCarrier>(p, n);
    // enumerate SL(n; F_p) by determinant scan over all matrices
    uint64_t total = 1;
    for (unsigned i = 0; i < n * n; ++i) total *= p;
    std::vector<std::vector<std::vector<uint64_t>>> sl;
    for (uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::vector<uint64_t>> m(n, std::vector<uint64_t>(n));
        uint64_t v = idx;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                m[i][j] = v % p;
                v /= p;
            }
        // determinant over F_p by elimination
        auto a = m;
        uint64_t det = 1;
        bool sing = false;
        for (unsigned col = 0; col < n && !sing; ++col) {
            unsigned piv = col;
            while (piv < n && a[piv][col] == 0) ++piv;
            if (piv == n) {
                sing = true;
                break;
            }
            if (piv != col) {
                std::swap(a[piv], a[col]);
                det = (p - det) % p;
            }
            det = det * a[col][col] % p;
            uint64_t ip;
            {
                uint64_t b = a[col][col], e = p - 2, r = 1;
                while (e) {
                    if (e & 1) r = r * b % p;
                    b = b * b % p;
                    e >>= 1;
                }
                ip = r;
            }
            for (unsigned i = col + 1; i < n; ++i) {
                if (a[i][col] == 0) continue;
                uint64_t f = a[i][col] * ip % p;
                for (unsigned k = col; k < n; ++k)
                    a[i][k] = (a[i][k] + (p - f) * a[col][k]) % p;
            }
        }
        if (!sing && det == 1) sl.push_back(std::move(m));
    }
    uint64_t pn = 1;
    for (unsigned i = 0; i < n; ++i) pn *= p;
    if (pn * sl.size() > cap) throw std::runtime_error("affine_group: cap exceeded");
    std::vector<Encoding> elements;
    elements.reserve(pn * sl.size());
    for (const auto& m : sl)
        for (uint64_t vi = 0; vi < pn; ++vi) {
            std::vector<uint64_t> v(n);
            uint64_t x = vi;
            for (unsigned i = 0; i < n; ++i) {
                v[i] = x % p;
                x /= p;
            }
            elements.push_back(carrier->encode(v, m));
        }
    // generators: translations by basis vectors plus SL generators
    std::vector<Encoding> gens;
    std::vector<std::vector<uint64_t>> id(n, std::vector<uint64_t>(n, 0));
    for (unsigned i = 0; i < n; ++i) id[i][i] = 1;
    for (unsigned i = 0; i < n; ++i) {
        std::vector<uint64_t> v(n, 0);
        v[i] = 1;
        gens.push_back(carrier->encode(v, id));
    }
    // transvections E_{i,j}(1) generate SL(n; F_p)
    std::vector<uint64_t> zero(n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            if (i == j) continue;
            auto m = id;
            m[i][j] = 1;
            gens.push_back(carrier->encode(zero, m));
        }
    return ConcreteGroup::from_elements(carrier, std::move(elements), std::move(gens), cap);
}

namespace {

const AffineCarrier& affine_carrier(const GroupPtr& g) {
    auto* c = dynamic_cast<const AffineCarrier*>(g->carrier().get());
    if (!c) throw std::invalid_argument("expected an affine group");
    return *c;
}

}  // namespace

Subgroup subspace_subgroup(const GroupPtr& affine,
                           const std::vector<std::vector<uint64_t>>& basis) {
    const auto& c = affine_carrier(affine);
    const uint64_t p = c.p;
    const unsigned n = c.n;
    for (const auto& b : basis)
        if (b.size() != n) throw std::invalid_argument("subspace_subgroup: vector outside F_p^n");
    // independence check by row reduction
    {
        auto rows = basis;
        size_t rank = 0;
        for (size_t col = 0; col < n && rank < rows.size(); ++col) {
            size_t piv = rank;
            while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
            if (piv == rows.size()) continue;
            std::swap(rows[piv], rows[rank]);
            uint64_t b0 = rows[rank][col] % p, e = p - 2, iv = 1;
            while (e) {
                if (e & 1) iv = iv * b0 % p;
                b0 = b0 * b0 % p;
                e >>= 1;
            }
            for (auto& x : rows[rank]) x = x % p * iv % p;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i == rank) continue;
                uint64_t f = rows[i][col] % p;
                if (!f) continue;
                for (size_t k2 = 0; k2 < n; ++k2)
                    rows[i][k2] = (rows[i][k2] % p + (p - f) * rows[rank][k2]) % p;
            }
            ++rank;
        }
        if (rank != basis.size())
            throw std::invalid_argument("subspace_subgroup: basis vectors dependent");
    }
    std::vector<std::vector<uint64_t>> id(n, std::vector<uint64_t>(n, 0));
    for (unsigned i = 0; i < n; ++i) id[i][i] = 1;
    // enumerate the span
    uint64_t count = 1;
    for (size_t i = 0; i < basis.size(); ++i) count *= p;
    std::vector<int> members;
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::vector<uint64_t> v(n, 0);
        uint64_t x = idx;
        for (const auto& b : basis) {
            uint64_t coef = x % p;
            x /= p;
            for (unsigned i = 0; i < n; ++i) v[i] = (v[i] + coef * b[i]) % p;
        }
        int e = affine->index_of(c.encode(v, id));
        if (e < 0) throw std::logic_error("subspace_subgroup: element missing");
        members.push_back(e);
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return Subgroup{affine, std::move(members)};
}

std::vector<std::vector<uint64_t>> affine_to_matrix(const GroupPtr& affine, int element) {
    const auto& c = affine_carrier(affine);
    std::vector<uint64_t> v;
    std::vector<std::vector<uint64_t>> m;
    c.decode(affine->encoding(element), v, m);
    const unsigned n = c.n;
    std::vector<std::vector<uint64_t>> big(n + 1, std::vector<uint64_t>(n + 1, 0));
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) big[i][j] = m[i][j];
        big[i][n] = v[i];
    }
    big[n][n] = 1;
    return big;
}

// ----- Semidirect products --------------------------------------------

namespace {

// Carrier on pairs (element of A, automorphism index) with a precomputed
// composition table for the closed automorphism group.
struct SemidirectCarrier : GroupCarrier {
    GroupPtr a;
    std::vector<std::vector<int>> auts;      // each a permutation of A indices
    std::vector<std::vector<int>> aut_comp;  // composition table
    std::vector<int> aut_inv;

    Encoding pack(int ai, int ti) const {
        Encoding e;
        put_u32(e, static_cast<uint32_t>(ai));
        put_u32(e, static_cast<uint32_t>(ti));
        return e;
    }
    void unpack(const Encoding& e, int& ai, int& ti) const {
        ai = static_cast<int>(get_u32(e, 0));
        ti = static_cast<int>(get_u32(e, 4));
    }
    Encoding identity() const override { return pack(0, 0); }
    Encoding mul(const Encoding& x, const Encoding& y) const override {
        int a1, t1, a2, t2;
        unpack(x, a1, t1);
        unpack(y, a2, t2);
        // (a1, t1)(a2, t2) = (a1 * t1(a2), t1 t2)
        return pack(a->mul(a1, auts[t1][a2]), aut_comp[t1][t2]);
    }
    Encoding inv(const Encoding& x) const override {
        int a1, t1;
        unpack(x, a1, t1);
        int ti = aut_inv[t1];
        return pack(auts[ti][a->inv(a1)], ti);
    }
    std::string name() const override { return "semidirect(" + a->carrier()->name() + ")"; }
};

}  // namespace

GroupPtr semidirect_product(const GroupPtr& abelian, const std::vector<std::vector<int>>& theta,
                            size_t cap) {
    const int n = static_cast<int>(abelian->order());
    // A must be abelian
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (abelian->mul(x, y) != abelian->mul(y, x))
                throw std::invalid_argument("semidirect_product: base group not abelian");
    // each theta must be an automorphism
    for (const auto& t : theta) {
        if (static_cast<int>(t.size()) != n)
            throw std::invalid_argument("semidirect_product: map size mismatch");
        std::vector<char> seen(n, 0);
        for (int v : t) {
            if (v < 0 || v >= n || seen[v])
                throw std::invalid_argument("semidirect_product: map is not a bijection");
            seen[v] = 1;
        }
        if (t[0] != 0) throw std::invalid_argument("semidirect_product: map moves the identity");
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (t[abelian->mul(x, y)] != abelian->mul(t[x], t[y]))
                    throw std::invalid_argument("semidirect_product: map is not a homomorphism");
    }
    // close <theta> under composition
    std::vector<std::vector<int>> auts;
    std::map<std::vector<int>, int> aut_index;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    auts.push_back(id);
    aut_index[id] = 0;
    for (size_t head = 0; head < auts.size(); ++head) {
        for (const auto& t : theta) {
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = auts[head][t[x]];
            if (!aut_index.count(comp)) {
                aut_index[comp] = static_cast<int>(auts.size());
                auts.push_back(comp);
                if (auts.size() * abelian->order() > cap)
                    throw std::runtime_error("semidirect_product: cap exceeded");
            }
        }
    }
    auto carrier = std::make_shared<SemidirectCarrier>();
    carrier->a = abelian;
    carrier->auts = auts;
    const int na = static_cast<int>(auts.size());
    carrier->aut_comp.assign(na, std::vector<int>(na));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            std::vector<int> comp(n);
            for (int x = 0; x < n; ++x) comp[x] = auts[i][auts[j][x]];
            carrier->aut_comp[i][j] = aut_index.at(comp);
        }
    carrier->aut_inv.assign(na, 0);
    for (int i = 0; i < na; ++i) {
        std::vector<int> invp(n);
        for (int x = 0; x < n; ++x) invp[auts[i][x]] = x;
        carrier->aut_inv[i] = aut_index.at(invp);
    }
    std::vector<Encoding> elements;
    elements.reserve(static_cast<size_t>(n) * na);
    for (int t = 0; t < na; ++t)
        for (int a = 0; a < n; ++a) elements.push_back(carrier->pack(a, t));
    std::vector<Encoding> gens;
    for (int a : abelian->generators()) gens.push_back(carrier->pack(a, 0));
    if (abelian->generators().empty() && n > 1)
        for (int a = 1; a < n; ++a) gens.push_back(carrier->pack(a, 0));
    for (const auto& t : theta) gens.push_back(carrier->pack(0, aut_index.at(t)));
    return ConcreteGroup::from_elements(carrier, std::move(elements), std::move(gens), cap);
}

Subgroup semidirect_base(const GroupPtr& sd) {
    auto* c = dynamic_cast<const SemidirectCarrier*>(sd->carrier().get());
    if (!c) throw std::invalid_argument("expected a semidirect product");
    std::vector<int> members;
    for (size_t i = 0; i < c->a->order(); ++i) {
        int idx = sd->index_of(c->pack(static_cast<int>(i), 0));
        if (idx < 0) throw std::logic_error("semidirect_base: element missing");
        members.push_back(idx);
    }
    std::sort(members.begin(), members.end());
    return Subgroup{sd, std::move(members)};
}

// ----- Small utility groups -------------------------------------------

namespace {

struct CyclicCarrier : GroupCarrier {
    uint64_t m;
    explicit CyclicCarrier(uint64_t mm) : m(mm) {}
    Encoding pack(uint64_t v) const {
        Encoding e;
        put_u32(e, static_cast<uint32_t>(v));
        return e;
    }
    Encoding identity() const override { return pack(0); }
    Encoding mul(const Encoding& a, const Encoding& b) const override {
        return pack((get_u32(a, 0) + get_u32(b, 0)) % m);
    }
    Encoding inv(const Encoding& a) const override {
        return pack((m - get_u32(a, 0)) % m);
    }
    std::string name() const override { return "cyclic(" + std::to_string(m) + ")"; }
};

struct VectorCarrier : GroupCarrier {
    uint64_t p;
    unsigned n;
    VectorCarrier(uint64_t pp, unsigned nn) : p(pp), n(nn) {}
    Encoding pack(const std::vector<uint64_t>& v) const {
        Encoding e;
        for (uint64_t c : v) e.push_back(static_cast<char>(c));
        return e;
    }
    Encoding identity() const override { return pack(std::vector<uint64_t>(n, 0)); }
    Encoding mul(const Encoding& a, const Encoding& b) const override {
        Encoding e;
        for (unsigned i = 0; i < n; ++i)
            e.push_back(static_cast<char>(
                (static_cast<unsigned char>(a[i]) + static_cast<unsigned char>(b[i])) % p));
        return e;
    }
    Encoding inv(const Encoding& a) const override {
        Encoding e;
        for (unsigned i = 0; i < n; ++i)
            e.push_back(static_cast<char>((p - static_cast<unsigned char>(a[i])) % p));
        return e;
    }
    std::string name() const override {
        return "vector(" + std::to_string(p) + "^" + std::to_string(n) + ")";
    }
};

struct PermCarrier : GroupCarrier {
    unsigned n;
    explicit PermCarrier(unsigned nn) : n(nn) {}
    Encoding identity() const override {
        Encoding e;
        for (unsigned i = 0; i < n; ++i) e.push_back(static_cast<char>(i));
        return e;
    }
    Encoding mul(const Encoding& a, const Encoding& b) const override {
        // (ab)(x) = a(b(x))
        Encoding e;
        for (unsigned i = 0; i < n; ++i)
            e.push_back(a[static_cast<unsigned char>(b[i])]);
        return e;
    }
    Encoding inv(const Encoding& a) const override {
        Encoding e(n, 0);
        for (unsigned i = 0; i < n; ++i) e[static_cast<unsigned char>(a[i])] = static_cast<char>(i);
        return e;
    }
    std::string name() const override { return "perm(" + std::to_string(n) + ")"; }
};

}  // namespace

GroupPtr cyclic_group(uint64_t m) {
    auto carrier = std::make_shared<CyclicCarrier>(m);
    std::vector<Encoding> elements;
    for (uint64_t v = 0; v < m; ++v) elements.push_back(carrier->pack(v));
    std::vector<Encoding> gens;
    if (m > 1) gens.push_back(carrier->pack(1));
    return ConcreteGroup::from_elements(carrier, std::move(elements), std::move(gens));
}

GroupPtr elementary_abelian_group(uint64_t p, unsigned n) {
    auto carrier = std::make_shared<VectorCarrier>(p, n);
    uint64_t total = 1;
    for (unsigned i = 0; i < n; ++i) total *= p;
    std::vector<Encoding> elements;
    std::vector<Encoding> gens;
    for (uint64_t idx = 0; idx < total; ++idx) {
        std::vector<uint64_t> v(n);
        uint64_t x = idx;
        for (unsigned i = 0; i < n; ++i) {
            v[i] = x % p;
            x /= p;
        }
        elements.push_back(carrier->pack(v));
    }
    for (unsigned i = 0; i < n; ++i) {
        std::vector<uint64_t> v(n, 0);
        v[i] = 1;
        gens.push_back(carrier->pack(v));
    }
    return ConcreteGroup::from_elements(carrier, std::move(elements), std::move(gens));
}

GroupPtr permutation_group(unsigned n, const std::vector<std::vector<int>>& generator_perms,
                           size_t cap) {
    auto carrier = std::make_shared<PermCarrier>(n);
    std::vector<Encoding> gens;
    for (const auto& p : generator_perms) {
        if (p.size() != n) throw std::invalid_argument("permutation_group: wrong length");
        Encoding e;
        for (int v : p) e.push_back(static_cast<char>(v));
        gens.push_back(std::move(e));
    }
    return ConcreteGroup::generate(carrier, gens, cap);
}

}  // namespace specgeo
