#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "supertrop/bilinear.hpp"
#include "supertrop/determinant.hpp"
#include "supertrop/matrix.hpp"
#include "supertrop/random.hpp"
#include "supertrop/vector.hpp"

// Independent reference engines and seeded samplers for cross-checking the
// library.
namespace supertrop::oracle {

/// Plain n! expansion with its own nu bookkeeping. Witnesses are every
/// nu-maximal permutation in lexicographic order. n <= 8.
DetResult brute_force_det(const Matrix& a);

/// Tangible coefficients with nu-values from grid (or -inf, not all -inf)
/// whose combination lands in the ghost subspace. A witness proves
/// dependence; nullopt proves nothing. Stops after kDependenceSearchCap
/// tuples.
inline constexpr std::size_t kDependenceSearchCap = 1u << 20;
std::optional<std::vector<Scalar>> dependence_search(std::span<const Vector> vectors, std::span<const GroupValue> grid);

struct SamplerConfig {
  long lo = -10;
  long hi = 10;
  double ghost_density = 0.2;
  double zero_density = 0.1;
  std::size_t max_retries = 200;
};

// Draws from an existing generator.
Scalar draw_scalar(TrialRng& rng, const SamplerConfig& cfg);
Scalar draw_tangible(TrialRng& rng, const SamplerConfig& cfg);
Vector draw_vector(TrialRng& rng, std::size_t n, const SamplerConfig& cfg);
Vector draw_tangible_vector(TrialRng& rng, std::size_t n, const SamplerConfig& cfg);
Matrix draw_matrix(TrialRng& rng, std::size_t rows, std::size_t cols, const SamplerConfig& cfg);
Matrix draw_tangible_matrix(TrialRng& rng, std::size_t rows, std::size_t cols, const SamplerConfig& cfg);
/// Tangible entries, redrawn until det is tangible. Throws DomainError when
/// cfg.max_retries draws all come out singular.
Matrix draw_nonsingular(TrialRng& rng, std::size_t n, const SamplerConfig& cfg);
/// g_ij = g_ji off the diagonal; mixed layers throughout.
Matrix draw_symmetric_gram(TrialRng& rng, std::size_t n, const SamplerConfig& cfg);
/// close(A) of a nonsingular tangible A.
Matrix draw_closed_base(TrialRng& rng, std::size_t n, const SamplerConfig& cfg);

enum class SampleKind { Scalar, TangibleScalar, Vector, Matrix, NonsingularMatrix, SymmetricGram, ClosedBase };

using Sample = std::variant<Scalar, Vector, Matrix>;

/// Deterministic in (seed, index, kind, shape). Vectors use `rows`; square
/// kinds use `rows` for n.
Sample sample(SampleKind kind, std::size_t rows, std::size_t cols, std::uint64_t seed, std::uint64_t index,
              const SamplerConfig& cfg = {});

std::optional<SampleKind> parse_sample_kind(std::string_view name);

enum class Verdict { Pass, Counterexample, Proved };

std::string to_string(Verdict v);

struct Failure {
  std::size_t index = 0;
  std::string input;
  std::string expected;
  std::string got;

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct TrialReport {
  std::string suite;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// Sorted by trial index.
  std::vector<Failure> failures;
  Verdict verdict = Verdict::Pass;

  /// {"suite", "trials", "seed", "verdict", "failures": [...]}
  std::string to_json() const;

  friend bool operator==(const TrialReport&, const TrialReport&) = default;
};

/// Registered suite names in catalog order.
const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown name.
TrialReport run_suite(std::string_view name, std::size_t trials, std::uint64_t seed);

}  // namespace supertrop::oracle
