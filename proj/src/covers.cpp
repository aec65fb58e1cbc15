#include "specgeo/covers.hpp"

#include <algorithm>

namespace specgeo {

FreeWord reduce_word(std::vector<Letter> letters) {
    std::vector<Letter> out;
    for (Letter l : letters) {
        if (l > 3) throw std::invalid_argument("reduce_word: bad letter");
        if (!out.empty() && out.back() == letter_inverse(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return FreeWord{std::move(out)};
}

FreeWord word_from_string(const std::string& s) {
    std::vector<Letter> letters;
    for (char c : s) {
        switch (c) {
            case 'a': letters.push_back(0); break;
            case 'A': letters.push_back(1); break;
            case 'b': letters.push_back(2); break;
            case 'B': letters.push_back(3); break;
            default: throw std::invalid_argument("word_from_string: expected a, A, b, B");
        }
    }
    return reduce_word(std::move(letters));
}

std::string word_to_string(const FreeWord& w) {
    static const char names[4] = {'a', 'A', 'b', 'B'};
    std::string s;
    for (Letter l : w.letters) s.push_back(names[l]);
    return s;
}

namespace {

bool cyclically_reduced(const std::vector<Letter>& w) {
    if (w.size() < 2) return true;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] == letter_inverse(w[i])) return false;
    return w.front() != letter_inverse(w.back());
}

bool is_least_rotation(const std::vector<Letter>& w) {
    const size_t n = w.size();
    for (size_t r = 1; r < n; ++r)
        for (size_t i = 0; i < n; ++i) {
            Letter rot = w[(i + r) % n];
            if (rot < w[i]) return false;
            if (rot > w[i]) break;
        }
    return true;
}

bool is_primitive_necklace(const std::vector<Letter>& w) {
    const size_t n = w.size();
    for (size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool period = true;
        for (size_t i = 0; i < n && period; ++i)
            if (w[i] != w[(i + d) % n]) period = false;
        if (period) return false;
    }
    return true;
}

// All cyclically reduced necklaces of exactly this length, canonical
// rotations only.
void classes_of_length(unsigned len, std::vector<CyclicClass>& out, size_t cap) {
    if (len > 14) throw std::runtime_error("cyclic_classes: cap exceeded");
    std::vector<Letter> w(len);
    const uint64_t total = uint64_t{1} << (2 * len);
    for (uint64_t idx = 0; idx < total; ++idx) {
        uint64_t v = idx;
        for (unsigned i = 0; i < len; ++i) {
            w[i] = static_cast<Letter>(v & 3);
            v >>= 2;
        }
        if (cyclically_reduced(w) && is_least_rotation(w)) {
            out.push_back(CyclicClass{w, is_primitive_necklace(w)});
            if (out.size() > cap) throw std::runtime_error("cyclic_classes: cap exceeded");
        }
    }
}

}  // namespace

std::vector<CyclicClass> cyclic_classes(unsigned max_length, bool primitive_only, size_t cap) {
    if (max_length < 1) throw std::invalid_argument("cyclic_classes: length must be positive");
    std::vector<CyclicClass> out;
    for (unsigned len = 1; len <= max_length; ++len) classes_of_length(len, out, cap);
    if (primitive_only)
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const CyclicClass& c) { return !c.primitive; }),
                  out.end());
    return out;
}

WordMatrix word_matrix(const std::vector<Letter>& letters) {
    static const long gen[4][2][2] = {
        {{1, 2}, {0, 1}},    // a
        {{1, -2}, {0, 1}},   // a^-1
        {{1, 0}, {2, 1}},    // b
        {{1, 0}, {-2, 1}},   // b^-1
    };
    IntMatrix m = {{1, 0}, {0, 1}};
    for (Letter l : letters) {
        if (l > 3) throw std::invalid_argument("word_matrix: bad letter");
        IntMatrix r(2, std::vector<Integer>(2));
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r[i][j] = m[i][0] * gen[l][0][j] + m[i][1] * gen[l][1][j];
        m = std::move(r);
    }
    return WordMatrix{m, m[0][0] + m[1][1]};
}

Homomorphism make_homomorphism(const GroupPtr& target, int image_a, int image_b,
                               bool require_generating) {
    if (image_a < 0 || image_b < 0 || image_a >= static_cast<int>(target->order()) ||
        image_b >= static_cast<int>(target->order()))
        throw std::invalid_argument("make_homomorphism: image out of range");
    if (require_generating &&
        subgroup_from(target, {image_a, image_b}).order() != target->order())
        throw std::invalid_argument("make_homomorphism: images do not generate");
    return Homomorphism{target, image_a, image_b};
}

int apply_word(const Homomorphism& phi, const std::vector<Letter>& letters) {
    const auto& g = *phi.target;
    const int img[4] = {phi.image_a, g.inv(phi.image_a), phi.image_b, g.inv(phi.image_b)};
    int x = 0;
    for (Letter l : letters) {
        if (l > 3) throw std::invalid_argument("apply_word: bad letter");
        x = g.mul(x, img[l]);
    }
    return x;
}

Integer power_trace(const Integer& t, uint64_t m) {
    if (m == 0) return 2;
    Integer prev = 2, cur = t;
    for (uint64_t i = 1; i < m; ++i) {
        Integer next = t * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<uint64_t> coset_cycle_type(const CosetTable& cosets, int x) {
    const int n = cosets.index();
    std::vector<char> seen(n, 0);
    std::vector<uint64_t> sizes;
    for (int c = 0; c < n; ++c) {
        if (seen[c]) continue;
        uint64_t len = 0;
        int cur = c;
        while (!seen[cur]) {
            seen[cur] = 1;
            ++len;
            cur = cosets.action[x][cur];
        }
        sizes.push_back(len);
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

namespace {

// Least |trace| >= 3 among all classes of exactly this length; nullopt
// when every class of the length is parabolic or elliptic.
std::optional<Integer> min_hyperbolic_trace(unsigned len, size_t cap) {
    std::vector<CyclicClass> cls;
    classes_of_length(len, cls, cap);
    std::optional<Integer> best;
    for (const auto& c : cls) {
        Integer t = abs(word_matrix(c.canonical).trace);
        if (t < 3) continue;
        if (!best || t < *best) best = t;
    }
    return best;
}

}  // namespace

TraceSpectrum cover_trace_spectrum(const GroupPtr& g, const Subgroup& h,
                                   const Homomorphism& phi, unsigned max_length,
                                   bool primitive_only, size_t cap) {
    if (phi.target != g) throw std::invalid_argument("cover_trace_spectrum: target mismatch");
    auto cosets = coset_table(g, h);
    TraceSpectrum s;
    s.cutoff = max_length;
    s.primitive_only = primitive_only;
    for (const auto& cls : cyclic_classes(max_length, primitive_only, cap)) {
        Integer t = word_matrix(cls.canonical).trace;
        if (abs(t) < 3) continue;  // parabolic or elliptic: no geodesic
        int x = apply_word(phi, cls.canonical);
        uint64_t covered = 0;
        for (uint64_t m : coset_cycle_type(cosets, x)) {
            s.entries[abs(power_trace(t, m))] += 1;
            covered += m;
        }
        if (covered != static_cast<uint64_t>(cosets.index()))
            throw std::logic_error("cover_trace_spectrum: orbit sizes do not cover");
    }
    // The least hyperbolic trace per length is not monotone across
    // parities (18 at length 6, 14 at length 7: AAbAbAb), but it is
    // monotone within each parity. The floor therefore takes both
    // lengths L+1 and L+2, and the parity-wise monotonicity it relies on
    // is verified over the whole computed range.
    auto f1 = min_hyperbolic_trace(max_length + 1, cap);
    auto f2 = min_hyperbolic_trace(max_length + 2, cap);
    if (!f1 || !f2)
        throw std::runtime_error("cover_trace_spectrum: no hyperbolic class above cutoff");
    s.completeness_floor = std::min(*f1, *f2);
    std::optional<Integer> prev[2];
    for (unsigned len = 2; len <= max_length + 2; ++len) {
        auto cur = min_hyperbolic_trace(len, cap);
        if (!cur) continue;
        auto& p = prev[len % 2];
        if (p && *cur < *p)
            throw std::logic_error("cover_trace_spectrum: trace floor not parity-monotone");
        p = cur;
    }
    return s;
}

SpectrumComparison compare_spectra(const TraceSpectrum& s1, const TraceSpectrum& s2,
                                   SpectrumMode mode) {
    if (s1.cutoff != s2.cutoff)
        throw std::invalid_argument("compare_spectra: cutoff mismatch");
    bool want_primitive =
        mode == SpectrumMode::multiset_primitive || mode == SpectrumMode::set_primitive;
    if (s1.primitive_only != want_primitive || s2.primitive_only != want_primitive)
        throw std::invalid_argument("compare_spectra: spectra built for a different mode");
    bool multiset = mode == SpectrumMode::multiset_all || mode == SpectrumMode::multiset_primitive;

    SpectrumComparison r;
    r.compared_below = std::min(s1.completeness_floor, s2.completeness_floor);
    r.equal = true;
    auto it1 = s1.entries.begin();
    auto it2 = s2.entries.begin();
    while (true) {
        while (it1 != s1.entries.end() && it1->first >= r.compared_below) it1 = s1.entries.end();
        while (it2 != s2.entries.end() && it2->first >= r.compared_below) it2 = s2.entries.end();
        if (it1 == s1.entries.end() && it2 == s2.entries.end()) break;
        if (it1 == s1.entries.end() || it2 == s2.entries.end() || it1->first != it2->first ||
            (multiset && it1->second != it2->second)) {
            r.equal = false;
            Integer where;
            if (it1 == s1.entries.end())
                where = it2->first;
            else if (it2 == s2.entries.end())
                where = it1->first;
            else
                where = std::min(it1->first, it2->first);
            r.first_divergence = where;
            break;
        }
        ++it1;
        ++it2;
    }
    return r;
}

IntMatrix schreier_adjacency(const GroupPtr& g, const Subgroup& h,
                             const std::vector<int>& symmetric_gens) {
    // symmetric as a multiset
    {
        auto sorted = symmetric_gens;
        std::sort(sorted.begin(), sorted.end());
        auto inverted = symmetric_gens;
        for (int& x : inverted) x = g->inv(x);
        std::sort(inverted.begin(), inverted.end());
        if (sorted != inverted)
            throw std::invalid_argument("schreier_adjacency: generating multiset not symmetric");
    }
    if (subgroup_from(g, symmetric_gens).order() != g->order())
        throw std::invalid_argument("schreier_adjacency: multiset does not generate");
    auto cosets = coset_table(g, h);
    const int n = cosets.index();
    IntMatrix adj(n, std::vector<Integer>(n, 0));
    for (int c = 0; c < n; ++c)
        for (int s : symmetric_gens) adj[c][cosets.action[s][c]] += 1;
    return adj;
}

SchreierComparison schreier_spectrum_compare(const GroupPtr& g, const Subgroup& h,
                                             const Subgroup& k,
                                             const std::vector<int>& symmetric_gens,
                                             SchreierMode mode) {
    auto ph = integer_charpoly(schreier_adjacency(g, h, symmetric_gens));
    auto pk = integer_charpoly(schreier_adjacency(g, k, symmetric_gens));
    SchreierComparison r;
    if (mode == SchreierMode::set) {
        ph = poly_radical(ph);
        pk = poly_radical(pk);
    }
    r.poly_h = std::move(ph);
    r.poly_k = std::move(pk);
    r.equal = r.poly_h == r.poly_k;
    return r;
}

}  // namespace specgeo
