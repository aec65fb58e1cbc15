#pragma once

#include "specgeo/bigint.hpp"
#include "specgeo/charpoly.hpp"
#include "specgeo/group.hpp"
#include "specgeo/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace specgeo {

// Letters of the free group F_2: 0 = a, 1 = a^-1, 2 = b, 3 = b^-1.
using Letter = uint8_t;

inline Letter letter_inverse(Letter l) { return l ^ 1; }

// Freely reduced word.
struct FreeWord {
    std::vector<Letter> letters;

    size_t length() const { return letters.size(); }
};

FreeWord reduce_word(std::vector<Letter> letters);
// "abA" notation: a, A = a^-1, b, B = b^-1.
FreeWord word_from_string(const std::string& s);
std::string word_to_string(const FreeWord& w);

// Conjugacy class of F_2: the lexicographically least rotation of a
// cyclically reduced word.
struct CyclicClass {
    std::vector<Letter> canonical;
    bool primitive = false;  // not a proper power

    size_t length() const { return canonical.size(); }
};

inline constexpr size_t kDefaultClassCap = 5'000'000;

// All classes of cyclically reduced length 1..L, each once.
std::vector<CyclicClass> cyclic_classes(unsigned max_length, bool primitive_only,
                                        size_t cap = kDefaultClassCap);

// Image of a word under a |-> [[1,2],[0,1]], b |-> [[1,0],[2,1]] (free
// generators of the level-2 congruence subgroup).
struct WordMatrix {
    IntMatrix m;  // 2x2
    Integer trace;
};

WordMatrix word_matrix(const std::vector<Letter>& letters);

// Surjection F_2 ->> G given by the images of a and b.
struct Homomorphism {
    GroupPtr target;
    int image_a = 0;
    int image_b = 0;
};

// Verifies that the images generate the target. Groups needing more
// than two generators (the Heisenberg group over F_4 is one) admit no
// surjection from F_2; passing require_generating = false skips the
// check and yields a disconnected cover, which is still meaningful for
// orbit and trace bookkeeping.
Homomorphism make_homomorphism(const GroupPtr& target, int image_a, int image_b,
                               bool require_generating = true);
int apply_word(const Homomorphism& phi, const std::vector<Letter>& letters);

// t_m = tr(M^m) from t = tr(M) by t_m = t * t_{m-1} - t_{m-2}.
Integer power_trace(const Integer& t, uint64_t m);

// Exact geodesic data of a finite cover: absolute traces (>= 3) with
// multiplicities. Comparisons are meaningful strictly below the computed
// completeness floor.
struct TraceSpectrum {
    std::map<Integer, uint64_t> entries;
    unsigned cutoff = 0;  // max base word length L
    bool primitive_only = false;
    Integer completeness_floor;  // least absolute trace possibly missed
};

// Sorted orbit sizes of right multiplication by x on the cosets Hg.
std::vector<uint64_t> coset_cycle_type(const CosetTable& cosets, int x);

TraceSpectrum cover_trace_spectrum(const GroupPtr& g, const Subgroup& h,
                                   const Homomorphism& phi, unsigned max_length,
                                   bool primitive_only = false, size_t cap = kDefaultClassCap);

enum class SpectrumMode { multiset_all, set_all, multiset_primitive, set_primitive };

struct SpectrumComparison {
    bool equal = false;
    Integer compared_below;  // min of the two completeness floors
    std::optional<Integer> first_divergence;
};

SpectrumComparison compare_spectra(const TraceSpectrum& s1, const TraceSpectrum& s2,
                                   SpectrumMode mode);

// Adjacency matrix of the Schreier graph on right cosets Hg with respect
// to a symmetric generating multiset.
IntMatrix schreier_adjacency(const GroupPtr& g, const Subgroup& h,
                             const std::vector<int>& symmetric_gens);

enum class SchreierMode { multiset, set };

struct SchreierComparison {
    bool equal = false;
    IntegerPolynomial poly_h;  // charpoly, or its radical in set mode
    IntegerPolynomial poly_k;
};

SchreierComparison schreier_spectrum_compare(const GroupPtr& g, const Subgroup& h,
                                             const Subgroup& k,
                                             const std::vector<int>& symmetric_gens,
                                             SchreierMode mode);

}  // namespace specgeo
