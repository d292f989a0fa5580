#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supertrop/matrix.hpp"
#include "supertrop/vector.hpp"

namespace supertrop {

/// A strict bilinear form on F^(n) given by its Gram matrix on the
/// standard base: <v, w> = sum_{i,j} v_i g_ij w_j.
class BilinearForm {
 public:
  /// Throws DimensionError unless gram is square and nonempty.
  explicit BilinearForm(Matrix gram);

  const Matrix& gram() const { return gram_; }
  std::size_t dim() const { return gram_.rows(); }

  Scalar operator()(const Vector& v, const Vector& w) const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  Matrix gram_;
};

inline Scalar eval(const BilinearForm& f, const Vector& v, const Vector& w) { return f(v, w); }

/// k x k matrix [<v_i, v_j>].
Matrix gram_of(const BilinearForm& f, std::span<const Vector> vs);

struct VectorClass {
  Scalar self_pairing;  ///< <v, v>
  bool isotropic = false;  ///< <v, v> in G0
  bool normal = false;     ///< <v, v> == 1
};

VectorClass classify_vector(const BilinearForm& f, const Vector& v);

/// v / sqrt(<v, v>). Throws DomainError when v is g-isotropic.
Vector normalize(const BilinearForm& f, const Vector& v);

/// g_ij + g_ji in G0 for all i, j; equivalent to <v,w> + <w,v> in G0 for
/// all v, w since the form is strict.
bool is_supertropically_symmetric(const BilinearForm& f);

/// Every base vector is g-isotropic, which makes a supertropically
/// symmetric form alternate on their span. Also spot-checks seeded tangible
/// combinations. Throws DomainError when f is not supertropically symmetric.
bool is_alternate(const BilinearForm& f, std::span<const Vector> base);

struct PairClass {
  bool left_orthogonal = false;   ///< <v,w> in G0
  bool right_orthogonal = false;  ///< <w,v> in G0
  bool compatible = false;        ///< <v,v>+<w,w> >=nu <v,w>+<w,v>
  bool strictly_compatible = false;
  bool weakly_cauchy_schwartz = false;  ///< <v,v><w,w> >=nu <v,w>^2+<w,v>^2
  bool cauchy_schwartz = false;         ///< strict version
  bool corner_singular = false;
};

PairClass pair_class(const BilinearForm& f, const Vector& v, const Vector& w);

/// 2x2 matrix nu-matched to [[a, ab], [ab, ab^2]] for some a, b.
bool is_corner_singular(const Matrix& gram2);

struct GramDependence {
  Scalar gram_det;
  bool dependent = false;            ///< |Gram| in G0
  bool nondegenerate = true;         ///< no spanner lies in the radical of the span
  bool independent_by_rank = false;  ///< minor-rank verdict on the same vectors
  /// False only if |Gram| is ghost on a nondegenerate span while the vectors
  /// are independent by rank, i.e. the Gram criterion is contradicted.
  bool consistent = true;
  std::optional<std::string> warning;
};

/// |Gram(vs)| in G0, with the rank cross-check and a nondegeneracy warning.
GramDependence gram_dependent(const BilinearForm& f, std::span<const Vector> vs);

/// <v, s> in G0 for every spanner s.
bool radical_member(const BilinearForm& f, std::span<const Vector> spanners, const Vector& v);

struct GSResult {
  Vector projected;  ///< v_B = sum_j (<v,b_j> / beta_j) b_j
  Vector corrected;  ///< v'_B = v + v_B
  std::vector<std::size_t> dominant;
};

/// One supertropical Gram-Schmidt step against a g-orthogonal set of
/// g-nonisotropic vectors, beta_j = tangible_lift(<b_j, b_j>).
/// Throws DomainError when f is not supertropically symmetric, when some
/// b_j is g-isotropic, or when two b_j are not g-orthogonal.
GSResult gs_step(const BilinearForm& f, std::span<const Vector> base, const Vector& v);

/// <v,v> + sum_j <v,b_j>(<v,b_j>+<b_j,v>)/beta_j, the self-pairing of the
/// corrected vector when the base is weakly Cauchy-Schwartz.
Scalar gs_self_pairing(const BilinearForm& f, std::span<const Vector> base, const Vector& v);

struct GramSchmidtResult {
  std::vector<Vector> orthogonal;  ///< normalized, pairwise g-orthogonal
  std::vector<Vector> leftover;    ///< inputs whose correction failed
};

/// Runs gs_step over vs in order. A corrected vector is accepted (after
/// normalization) when it is g-nonisotropic and Cauchy-Schwartz with every
/// accepted vector; otherwise the input goes to leftover.
GramSchmidtResult gram_schmidt(const BilinearForm& f, std::span<const Vector> vs);

/// The range of nu(beta) making v1 + beta v2 g-isotropic.
struct StripResult {
  enum class Kind { Interval, Point, Empty };

  Kind kind = Kind::Empty;
  /// Every tangible beta qualifies (both self-pairings are -inf).
  bool all = false;
  /// Interval bounds; an absent lo means unbounded below.
  std::optional<GroupValue> lo;
  std::optional<GroupValue> hi;
  /// Point location; absent means beta = -inf, i.e. w = v1 itself.
  std::optional<GroupValue> at;
  /// v1 and v2 were exchanged so that <v1,v1> <=nu <v2,v2>.
  bool swapped = false;
  /// Re-evaluation at the probe points confirmed g-isotropy.
  bool verified = false;
  std::string note;
};

/// Probe nu-values for a strip: both endpoints and the midpoint, or
/// substitutes when a side is unbounded.
std::vector<std::optional<GroupValue>> strip_probes(const StripResult& s);

/// v1 + beta v2 with beta tangible of nu-value b (beta = -inf if absent),
/// using the orientation recorded in s.
Vector strip_vector(const StripResult& s, const Vector& v1, const Vector& v2, const std::optional<GroupValue>& b);

/// The g-isotropic strip of the plane spanned by v1, v2. Throws DomainError
/// unless f is supertropically symmetric.
StripResult isotropic_strip(const BilinearForm& f, const Vector& v1, const Vector& v2);

struct Decomposition {
  std::vector<Vector> anisotropic;
  std::vector<Vector> alternate;
  /// Input index of each anisotropic / alternate vector.
  std::vector<std::size_t> anisotropic_source;
  std::vector<std::size_t> alternate_source;
  std::size_t rescues = 0;
  /// rank of anisotropic u alternate equals the size of the input base.
  bool thick = false;
};

/// g-orthogonal split of the span of an independent base into an
/// anisotropic part and an alternate part. Deterministic and dependent on
/// input order. Throws DomainError when f is not supertropically symmetric
/// or the base is dependent.
Decomposition decompose(const BilinearForm& f, std::span<const Vector> base);

struct DecompositionCheck {
  bool anisotropic_orthogonal = true;
  bool anisotropic_nonisotropic = true;
  bool anisotropic_cauchy_schwartz = true;
  bool alternate_isotropic = true;
  bool cross_ghost = true;
  bool counts = true;
  /// No anisotropic/alternate cross pair is Cauchy-Schwartz. Reported only;
  /// not part of ok().
  bool cross_not_cauchy_schwartz = true;

  bool ok() const {
    return anisotropic_orthogonal && anisotropic_nonisotropic && anisotropic_cauchy_schwartz && alternate_isotropic &&
           cross_ghost && counts;
  }
};

DecompositionCheck verify_decomposition(const BilinearForm& f, std::size_t base_size, const Decomposition& d);

}  // namespace supertrop
