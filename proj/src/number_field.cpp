#include "specgeo/number_field.hpp"

#include "specgeo/charpoly.hpp"

#include <stdexcept>

namespace specgeo {

NumberField::NumberField(IntegerPolynomial minpoly) : minpoly_(std::move(minpoly)) {
    if (minpoly_.is_zero() || minpoly_.degree() < 1)
        throw std::invalid_argument("NumberField: minpoly must be nonconstant");
    if (!minpoly_.is_monic())
        throw std::invalid_argument("NumberField: minpoly must be monic");
    if (!is_squarefree(minpoly_))
        throw std::invalid_argument("NumberField: minpoly must be squarefree");
    auto roots = isolate_real_roots(minpoly_);
    real_embeddings_.reserve(roots.size());
    for (size_t i = 0; i < roots.size(); ++i)
        real_embeddings_.push_back({static_cast<int>(i), roots[i]});
}

NumberFieldElement::NumberFieldElement(NumberFieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != field_->degree())
        throw std::invalid_argument("NumberFieldElement: coordinate length != field degree");
    for (auto& c : coords_) c.canonicalize();
}

NumberFieldElement NumberFieldElement::from_rational(NumberFieldPtr field, Rational c) {
    std::vector<Rational> v(field->degree(), Rational(0));
    v[0] = std::move(c);
    return NumberFieldElement(std::move(field), std::move(v));
}

NumberFieldElement NumberFieldElement::generator(NumberFieldPtr field) {
    std::vector<Rational> v(field->degree(), Rational(0));
    if (field->degree() == 1) {
        // theta is the rational root of the degree-1 minpoly x + c.
        v[0] = Rational(-field->minpoly().coeff(0));
    } else {
        v[1] = 1;
    }
    return NumberFieldElement(std::move(field), std::move(v));
}

bool NumberFieldElement::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

void NumberFieldElement::check_same_field(const NumberFieldElement& o) const {
    if (field_ != o.field_ && !(field_->minpoly() == o.field_->minpoly()))
        throw std::invalid_argument("NumberFieldElement: field mismatch");
}

NumberFieldElement NumberFieldElement::operator+(const NumberFieldElement& o) const {
    check_same_field(o);
    std::vector<Rational> v(coords_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = coords_[i] + o.coords_[i];
    return NumberFieldElement(field_, std::move(v));
}

NumberFieldElement NumberFieldElement::operator-(const NumberFieldElement& o) const {
    check_same_field(o);
    std::vector<Rational> v(coords_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = coords_[i] - o.coords_[i];
    return NumberFieldElement(field_, std::move(v));
}

NumberFieldElement NumberFieldElement::operator-() const {
    std::vector<Rational> v(coords_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = -coords_[i];
    return NumberFieldElement(field_, std::move(v));
}

NumberFieldElement NumberFieldElement::operator*(const NumberFieldElement& o) const {
    check_same_field(o);
    const int m = field_->degree();
    std::vector<Rational> prod(2 * m - 1, Rational(0));
    for (int i = 0; i < m; ++i) {
        if (coords_[i] == 0) continue;
        for (int j = 0; j < m; ++j) prod[i + j] += coords_[i] * o.coords_[j];
    }
    // reduce modulo monic minpoly
    const auto& f = field_->minpoly().coeffs();
    for (int d = 2 * m - 2; d >= m; --d) {
        Rational lc = prod[d];
        if (lc == 0) continue;
        prod[d] = 0;
        for (int i = 0; i < m; ++i) prod[d - m + i] -= lc * Rational(f[i]);
    }
    prod.resize(m);
    return NumberFieldElement(field_, std::move(prod));
}

bool NumberFieldElement::operator==(const NumberFieldElement& o) const {
    return coords_ == o.coords_;
}

IntegerPolynomial NumberFieldElement::numerator_poly() const {
    Integer den = 1;
    for (const auto& c : coords_) {
        Integer d = c.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> v(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) {
        Rational s = coords_[i] * Rational(den);
        v[i] = s.get_num();
    }
    return IntegerPolynomial(std::move(v));
}

int sign_at_embedding(const NumberFieldElement& a, const RealEmbedding& e) {
    const auto& field = *a.field();
    if (e.index < 0 || e.index >= field.r1())
        throw std::invalid_argument("sign_at_embedding: embedding index out of range");
    const RealEmbedding& own = field.real_embeddings()[e.index];
    if (!(own.interval.lo == e.interval.lo && own.interval.hi == e.interval.hi))
        throw std::invalid_argument("sign_at_embedding: embedding does not belong to the element's field");
    if (a.is_zero()) return 0;

    IntegerPolynomial g = a.numerator_poly();
    const IntegerPolynomial& f = field.minpoly();
    RootInterval iv = e.interval;

    // The element vanishes at this root exactly when the root divides
    // gcd(f, g); possible only for reducible (squarefree) minpolys.
    IntegerPolynomial common = poly_gcd(f, g);
    if (common.degree() >= 1) {
        if (iv.is_exact()) {
            if (common.eval(iv.lo) == 0) return 0;
        } else {
            SturmSequence sc(common);
            if (common.eval(iv.lo) == 0 || sc.count_roots(iv.lo, iv.hi) > 0) return 0;
        }
    }
    if (iv.is_exact()) return sign_of(g.eval(iv.lo));

    IntegerPolynomial gsf = poly_radical(g);
    std::optional<SturmSequence> sg;
    if (gsf.degree() >= 1) sg.emplace(gsf);
    // Refine the isolating interval until g is sign-constant on it.
    for (;;) {
        bool lo_ok = g.eval(iv.lo) != 0;
        bool clear = !sg || (lo_ok && sg->count_roots(iv.lo, iv.hi) == 0);
        if (lo_ok && clear) return sign_of(g.eval(iv.lo));
        iv = refine_interval(f, iv);
        if (iv.is_exact()) return sign_of(g.eval(iv.lo));
    }
}

NumberFieldPtr make_cm_extension(const NumberFieldPtr& base, unsigned long d) {
    if (!base->totally_real())
        throw std::invalid_argument("make_cm_extension: base field must be totally real");
    if (d == 0) throw std::invalid_argument("make_cm_extension: d must be positive");
    {
        Integer dd(static_cast<long>(d));
        Integer sf;
        // square-free test: no prime square divides d
        for (unsigned long q = 2; q * q <= d; ++q)
            if (d % (q * q) == 0)
                throw std::invalid_argument("make_cm_extension: d must be square-free");
    }
    const int m = base->degree();
    const auto& f = base->minpoly();
    // Kronecker sum of the companion matrix of f and [[0,-d],[1,0]];
    // its charpoly is prod_i ((x - theta_i)^2 + d).
    IntMatrix M(2 * m, std::vector<Integer>(2 * m, Integer(0)));
    auto idx = [m](int i, int s) { return 2 * i + s; };
    for (int i = 0; i < m; ++i) {
        for (int s = 0; s < 2; ++s) {
            // companion: e_i -> e_{i+1}, e_{m-1} -> -coeffs
            if (i + 1 < m) M[idx(i + 1, s)][idx(i, s)] += 1;
            else
                for (int r = 0; r < m; ++r) M[idx(r, s)][idx(m - 1, s)] -= f.coeff(r);
        }
        // sqrt(-d) block acting on s
        M[idx(i, 0)][idx(i, 1)] += Integer(-(long)d);
        M[idx(i, 1)][idx(i, 0)] += 1;
    }
    IntegerPolynomial chi = integer_charpoly(M);
    if (!is_squarefree(chi))
        throw std::runtime_error("make_cm_extension: degenerate composite (non-generic d)");
    auto E = std::make_shared<NumberField>(chi);
    if (E->degree() != 2 * m || !E->totally_imaginary())
        throw std::runtime_error("make_cm_extension: composite is not a CM extension");
    E->is_cm = true;
    E->cm_base = base;
    return E;
}

}  // namespace specgeo
