#pragma once

#include "specgeo/number_field.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace specgeo {

enum class Space { R, C, H };

std::string space_name(Space x);

// Diagonal form diag(entries) over a totally real field, with signature
// (n, 1) at the distinguished embedding.
struct ModelForm {
    NumberFieldPtr field;
    std::vector<NumberFieldElement> entries;  // n+1 nonzero diagonal values
    int distinguished = 0;                    // index into real_embeddings

    unsigned n() const { return static_cast<unsigned>(entries.size()) - 1; }
};

// Validates: nonzero entries, valid embedding index, signature (n, 1) at
// the distinguished embedding.
ModelForm make_model_form(NumberFieldPtr field, std::vector<NumberFieldElement> entries,
                          int distinguished = 0);

// (p, q) = (#positive, #negative) diagonal signs under embedding j.
std::pair<int, int> signature_at_embedding(const ModelForm& b, int j);

struct AdmissibilityReport {
    bool admissible = false;
    std::vector<std::pair<int, int>> signatures;  // per real embedding
};

// (n, 1) at the distinguished embedding, (n+1, 0) everywhere else.
AdmissibilityReport is_admissible(const ModelForm& b);

// First admissible diagonal form under a deterministic enumeration of
// Z[theta] entries: elements ordered by (coordinate height, number of
// nonzero coordinates, coordinate tuple), entry multisets by height band
// then index order. theta is read as the largest real root, so the
// distinguished embedding is the last one. The result lists positive
// entries first. nullopt means the height bound was exhausted, not that
// no form exists.
std::optional<ModelForm> search_admissible_diagonal(const NumberFieldPtr& field, unsigned n,
                                                    long height);

// A = (alpha, beta / F): x^2 = alpha, y^2 = beta, xy = -yx.
struct QuaternionAlgebraDescriptor {
    NumberFieldPtr base;
    NumberFieldElement alpha;
    NumberFieldElement beta;
};

struct DefinitenessReport {
    bool totally_definite = false;
    std::vector<std::array<int, 2>> signs;  // (sign alpha, sign beta) per embedding
};

// Division at every real place: alpha < 0 and beta < 0 under every
// embedding of the totally real base.
DefinitenessReport quaternion_totally_definite(const QuaternionAlgebraDescriptor& a);

enum class Cocompactness { cocompact, noncocompact, indeterminate };

struct CocompactnessVerdict {
    Cocompactness verdict = Cocompactness::indeterminate;
    std::string rule;
    // nonzero rational vector with B(v, v) = 0, for noncocompact rational
    // verdicts found by isotropy search
    std::optional<std::vector<Rational>> witness;
    // modulus certifying anisotropy, for rational cocompact verdicts
    std::optional<uint64_t> obstruction_modulus;
};

CocompactnessVerdict classify_cocompactness(Space x, const ModelForm& b,
                                            long search_height = 10'000);

// ----- Floating-point projective model ---------------------------------

struct Quaternion {
    double w = 0, x = 0, y = 0, z = 0;

    Quaternion conj() const { return {w, -x, -y, -z}; }
    double norm2() const { return w * w + x * x + y * y + z * z; }
    Quaternion operator+(const Quaternion& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Quaternion operator*(const Quaternion& o) const;
    Quaternion operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
};

// Point of the negative cone of the standard form I_{n,1}; coordinates
// are quaternions, restricted to the reals or the complexes for X = R, C.
struct ProjectivePoint {
    std::vector<Quaternion> coords;
};

// B(x, y) = y^* I_{n,1} x with quaternionic conjugation.
Quaternion standard_form_value(const ProjectivePoint& x, const ProjectivePoint& y);

ProjectivePoint make_projective_point(Space space, std::vector<Quaternion> coords);

// cosh d = sqrt(B(x,y) B(y,x) / (B(x,x) B(y,y))); scale invariant.
double hyperbolic_distance(const ProjectivePoint& x, const ProjectivePoint& y, Space space);

// Exact check of A^* B A = B for a rational matrix and diagonal form.
bool preserves_form(const std::vector<std::vector<Rational>>& a,
                    const std::vector<Rational>& diag);
// Componentwise tolerance check for floating matrices.
bool preserves_form(const std::vector<std::vector<double>>& a, const std::vector<double>& diag,
                    double tol = 1e-10);

}  // namespace specgeo
