#include "specgeo/poly.hpp"

#include <algorithm>
#include <sstream>

namespace specgeo {

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coeffs)
    : coeffs_(std::move(coeffs)) {
    trim();
}

IntegerPolynomial IntegerPolynomial::constant(Integer c) {
    return IntegerPolynomial({std::move(c)});
}

IntegerPolynomial IntegerPolynomial::monomial(int degree, Integer c) {
    std::vector<Integer> v(degree + 1, Integer(0));
    v[degree] = std::move(c);
    return IntegerPolynomial(std::move(v));
}

void IntegerPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntegerPolynomial::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Integer IntegerPolynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

IntegerPolynomial IntegerPolynomial::operator+(const IntegerPolynomial& o) const {
    std::vector<Integer> r(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator-(const IntegerPolynomial& o) const {
    std::vector<Integer> r(std::max(coeffs_.size(), o.coeffs_.size()), Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
    return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator*(const IntegerPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Integer> r(coeffs_.size() + o.coeffs_.size() - 1, Integer(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::operator-() const {
    std::vector<Integer> r = coeffs_;
    for (auto& c : r) c = -c;
    return IntegerPolynomial(std::move(r));
}

IntegerPolynomial IntegerPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> r(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * Integer(i);
    return IntegerPolynomial(std::move(r));
}

Integer IntegerPolynomial::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        Integer a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    }
    return g;
}

IntegerPolynomial IntegerPolynomial::primitive_part() const {
    if (is_zero()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    std::vector<Integer> r = coeffs_;
    for (auto& c : r) c /= g;
    return IntegerPolynomial(std::move(r));
}

Integer IntegerPolynomial::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntegerPolynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntegerPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Integer c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        first = false;
        Integer a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

struct PseudoRem {
    IntegerPolynomial rem;
    int premult_sign;  // sign of lc(b)^(number of reduction steps)
};

// Pseudo-remainder of a by b (b nonzero): repeatedly r = lc(b)*a - la*x^s*b,
// so the result is lc(b)^k * (a mod b) for the actual step count k.
PseudoRem pseudo_rem(IntegerPolynomial a, const IntegerPolynomial& b) {
    const int db = b.degree();
    const Integer& lb = b.leading();
    int psign = 1;
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Integer la = a.leading();
        std::vector<Integer> r(a.coeffs().size(), Integer(0));
        // r = lb*a - la * x^shift * b
        for (size_t i = 0; i < a.coeffs().size(); ++i) r[i] = lb * a.coeffs()[i];
        for (int i = 0; i <= db; ++i) r[i + shift] -= la * b.coeffs()[i];
        a = IntegerPolynomial(std::move(r));
        psign *= sgn(lb);
    }
    return {std::move(a), psign};
}

}  // namespace

IntegerPolynomial poly_gcd(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    IntegerPolynomial f = a.primitive_part();
    IntegerPolynomial g = b.primitive_part();
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntegerPolynomial r = pseudo_rem(f, g).rem.primitive_part();
        f = std::move(g);
        g = std::move(r);
    }
    return f.primitive_part();
}

IntegerPolynomial poly_radical(const IntegerPolynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("poly_radical: zero polynomial");
    if (f.degree() == 0) return IntegerPolynomial::constant(1);
    IntegerPolynomial g = poly_gcd(f, f.derivative());
    // Exact division f / g in Q[x]; the quotient of a poly by its gcd with
    // its derivative has the same root set with multiplicity one.
    IntegerPolynomial num = f;
    std::vector<Rational> q(num.degree() - g.degree() + 1, Rational(0));
    std::vector<Rational> rem;
    rem.reserve(num.coeffs().size());
    for (const auto& c : num.coeffs()) rem.emplace_back(c);
    const int dg = g.degree();
    for (int d = static_cast<int>(rem.size()) - 1; d >= dg; --d) {
        if (rem[d] == 0) continue;
        Rational coef = rem[d] / Rational(g.leading());
        q[d - dg] = coef;
        for (int i = 0; i <= dg; ++i) rem[d - dg + i] -= coef * Rational(g.coeffs()[i]);
    }
    // Clear denominators.
    Integer den = 1;
    for (auto& c : q) {
        c.canonicalize();
        Integer d = c.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<Integer> ic(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        Rational v = q[i] * Rational(den);
        ic[i] = v.get_num();
    }
    return IntegerPolynomial(std::move(ic)).primitive_part();
}

bool is_squarefree(const IntegerPolynomial& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

SturmSequence::SturmSequence(const IntegerPolynomial& f) {
    if (f.is_zero() || f.degree() == 0)
        throw std::invalid_argument("SturmSequence: constant polynomial");
    chain_.push_back(f);
    chain_.push_back(f.derivative());
    while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
        const IntegerPolynomial& a = chain_[chain_.size() - 2];
        const IntegerPolynomial& b = chain_.back();
        PseudoRem pr = pseudo_rem(a, b);
        if (pr.rem.is_zero()) break;
        // The chain wants -(a mod b); pseudo_rem returned
        // premult_sign * |content| * (a mod b) up to positive scaling.
        IntegerPolynomial next = pr.rem.primitive_part();  // leading sign +
        // sign of (a mod b) = sign(rem) * premult_sign
        int rem_sign = sgn(pr.rem.leading()) * pr.premult_sign;
        if (rem_sign > 0) next = -next;
        chain_.push_back(std::move(next));
    }
}

int SturmSequence::sign_changes_at(const Rational& x) const {
    int changes = 0, last = 0;
    for (const auto& p : chain_) {
        int s = sign_of(p.eval(x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
    if (lo >= hi) return 0;
    return sign_changes_at(lo) - sign_changes_at(hi);
}

Rational SturmSequence::root_bound() const {
    const IntegerPolynomial& f = chain_.front();
    Integer m = 0;
    for (const auto& c : f.coeffs()) {
        Integer a = abs(c);
        if (a > m) m = a;
    }
    Integer lead = abs(f.leading());
    // Cauchy bound 1 + max|c_i| / |lead|.
    return Rational(1) + Rational(m) / Rational(lead);
}

int SturmSequence::count_all_real_roots() const {
    Rational b = root_bound();
    return count_roots(-b, b);
}

std::vector<RootInterval> isolate_real_roots(const IntegerPolynomial& f) {
    if (f.is_zero() || f.degree() == 0)
        throw std::invalid_argument("isolate_real_roots: nonconstant polynomial required");
    if (!is_squarefree(f))
        throw std::invalid_argument("isolate_real_roots: polynomial not squarefree");
    SturmSequence st(f);
    Rational b = st.root_bound();
    std::vector<RootInterval> out;
    struct Seg { Rational lo, hi; int count; };
    std::vector<Seg> stack{{-b, b, st.count_roots(-b, b)}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.push_back({s.lo, s.hi});
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (f.eval(mid) == 0) {
            // Shrink around the exact root so both halves stay open.
            out.push_back({mid, mid});
            Rational eps = (s.hi - s.lo);
            int lc, rc;
            do {
                eps /= 2;
                lc = st.count_roots(s.lo, mid - eps);
                rc = st.count_roots(mid + eps, s.hi);
            } while (lc + rc + 1 != s.count);
            stack.push_back({s.lo, mid - eps, lc});
            stack.push_back({mid + eps, s.hi, rc});
        } else {
            stack.push_back({s.lo, mid, st.count_roots(s.lo, mid)});
            stack.push_back({mid, s.hi, st.count_roots(mid, s.hi)});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

RootInterval refine_interval(const IntegerPolynomial& f, const RootInterval& iv) {
    if (iv.is_exact()) return iv;
    Rational mid = (iv.lo + iv.hi) / 2;
    Rational fm = f.eval(mid);
    if (fm == 0) return {mid, mid};
    int slo = sign_of(f.eval(iv.lo));
    if (slo == 0) {
        // Endpoint hit can only occur for caller-supplied intervals.
        return {iv.lo, iv.lo};
    }
    if (sign_of(fm) != slo) return {iv.lo, mid};
    return {mid, iv.hi};
}

}  // namespace specgeo
