#include "supertrop/error.hpp"
#include "supertrop/oracle.hpp"
#include "supertrop/quasi_inverse.hpp"

namespace supertrop::oracle {

Scalar draw_scalar(TrialRng& rng, const SamplerConfig& cfg) {
  if (rng.chance(cfg.zero_density)) return Scalar::zero();
  const long x = rng.uniform(cfg.lo, cfg.hi);
  return rng.chance(cfg.ghost_density) ? Scalar::ghost(x) : Scalar::tangible(x);
}

Scalar draw_tangible(TrialRng& rng, const SamplerConfig& cfg) { return Scalar::tangible(rng.uniform(cfg.lo, cfg.hi)); }

Vector draw_vector(TrialRng& rng, std::size_t n, const SamplerConfig& cfg) {
  Vector v = Vector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = draw_scalar(rng, cfg);
  return v;
}

Vector draw_tangible_vector(TrialRng& rng, std::size_t n, const SamplerConfig& cfg) {
  Vector v = Vector::zeros(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = draw_tangible(rng, cfg);
  return v;
}

Matrix draw_matrix(TrialRng& rng, std::size_t rows, std::size_t cols, const SamplerConfig& cfg) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = draw_scalar(rng, cfg);
  return m;
}

Matrix draw_tangible_matrix(TrialRng& rng, std::size_t rows, std::size_t cols, const SamplerConfig& cfg) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = draw_tangible(rng, cfg);
  return m;
}

Matrix draw_nonsingular(TrialRng& rng, std::size_t n, const SamplerConfig& cfg) {
  for (std::size_t attempt = 0; attempt < cfg.max_retries; ++attempt) {
    Matrix m = draw_tangible_matrix(rng, n, n, cfg);
    if (det_value(m).is_tangible()) return m;
  }
  throw DomainError("sampler: no nonsingular " + std::to_string(n) + "x" + std::to_string(n) + " matrix after " +
                    std::to_string(cfg.max_retries) + " draws");
}

Matrix draw_symmetric_gram(TrialRng& rng, std::size_t n, const SamplerConfig& cfg) {
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = draw_scalar(rng, cfg);
    for (std::size_t j = i + 1; j < n; ++j) g(i, j) = g(j, i) = draw_scalar(rng, cfg);
  }
  return g;
}

Matrix draw_closed_base(TrialRng& rng, std::size_t n, const SamplerConfig& cfg) {
  return close(draw_nonsingular(rng, n, cfg));
}

namespace {

std::uint64_t stream_of(SampleKind kind) { return 0x73616d70000 + static_cast<std::uint64_t>(kind); }

}  // namespace

Sample sample(SampleKind kind, std::size_t rows, std::size_t cols, std::uint64_t seed, std::uint64_t index,
              const SamplerConfig& cfg) {
  TrialRng rng(seed, index, stream_of(kind));
  switch (kind) {
    case SampleKind::Scalar:
      return draw_scalar(rng, cfg);
    case SampleKind::TangibleScalar:
      return draw_tangible(rng, cfg);
    case SampleKind::Vector:
      return draw_vector(rng, rows, cfg);
    case SampleKind::Matrix:
      return draw_matrix(rng, rows, cols, cfg);
    case SampleKind::NonsingularMatrix:
      return draw_nonsingular(rng, rows, cfg);
    case SampleKind::SymmetricGram:
      return draw_symmetric_gram(rng, rows, cfg);
    case SampleKind::ClosedBase:
      return draw_closed_base(rng, rows, cfg);
  }
  throw DomainError("unknown sample kind");
}

std::optional<SampleKind> parse_sample_kind(std::string_view name) {
  if (name == "scalar") return SampleKind::Scalar;
  if (name == "tangible-scalar") return SampleKind::TangibleScalar;
  if (name == "vector") return SampleKind::Vector;
  if (name == "matrix") return SampleKind::Matrix;
  if (name == "nonsingular-matrix") return SampleKind::NonsingularMatrix;
  if (name == "symmetric-gram") return SampleKind::SymmetricGram;
  if (name == "closed-base") return SampleKind::ClosedBase;
  return std::nullopt;
}

}  // namespace supertrop::oracle
