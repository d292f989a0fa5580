#include <string>

#include "supertrop/bilinear.hpp"
#include "supertrop/error.hpp"
#include "supertrop/matrix.hpp"
#include "supertrop/rank.hpp"

namespace supertrop {

namespace {

void require_symmetric(const BilinearForm& f, const char* what) {
  if (!is_supertropically_symmetric(f)) {
    throw DomainError(std::string(what) +
                      " needs a supertropically symmetric form (g_ij + g_ji in G0 for all i, j)");
  }
}

// beta_j for every base vector, after checking the base is a g-orthogonal
// set of g-nonisotropic vectors.
std::vector<Scalar> base_norms(const BilinearForm& f, std::span<const Vector> base) {
  std::vector<Scalar> betas;
  betas.reserve(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    const Scalar q = f(base[j], base[j]);
    if (q.in_ghost_ideal()) {
      throw DomainError("Gram-Schmidt base vector " + std::to_string(j) + " is g-isotropic (<b,b> = " + to_string(q) +
                        ")");
    }
    betas.push_back(tangible_lift(q));
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    for (std::size_t j = 0; j < base.size(); ++j) {
      if (i != j && !f(base[i], base[j]).in_ghost_ideal()) {
        throw DomainError("Gram-Schmidt base vectors " + std::to_string(i) + " and " + std::to_string(j) +
                          " are not g-orthogonal");
      }
    }
  }
  return betas;
}

bool fits(const BilinearForm& f, std::span<const Vector> accepted, const Vector& c) {
  if (classify_vector(f, c).isotropic) return false;
  for (const auto& a : accepted) {
    if (!pair_class(f, a, c).cauchy_schwartz) return false;
  }
  return true;
}

Vector corrected(const BilinearForm& f, std::span<const Vector> base, const Vector& v) {
  return gs_step(f, base, v).corrected;
}

}  // namespace

GSResult gs_step(const BilinearForm& f, std::span<const Vector> base, const Vector& v) {
  require_symmetric(f, "Gram-Schmidt");
  if (v.dim() != f.dim()) {
    throw DimensionError("Gram-Schmidt: vector of dimension " + std::to_string(v.dim()) + " against a form of dimension " +
                         std::to_string(f.dim()));
  }
  const std::vector<Scalar> betas = base_norms(f, base);

  GSResult out{Vector::zeros(f.dim()), v, {}};
  std::vector<Scalar> weight(base.size());
  Scalar top;
  for (std::size_t j = 0; j < base.size(); ++j) {
    const Scalar vb = f(v, base[j]);
    const Scalar bv = f(base[j], v);
    const Scalar r = inv(betas[j]);
    out.projected += (vb * r) * base[j];
    const Scalar s = vb + bv;
    weight[j] = s * s * r;
    top += weight[j];
  }
  out.corrected = v + out.projected;
  for (std::size_t j = 0; j < base.size(); ++j) {
    if (nu_matched(weight[j], top)) out.dominant.push_back(j);
  }
  return out;
}

Scalar gs_self_pairing(const BilinearForm& f, std::span<const Vector> base, const Vector& v) {
  const std::vector<Scalar> betas = base_norms(f, base);
  Scalar out = f(v, v);
  for (std::size_t j = 0; j < base.size(); ++j) {
    const Scalar vb = f(v, base[j]);
    out += vb * (vb + f(base[j], v)) * inv(betas[j]);
  }
  return out;
}

GramSchmidtResult gram_schmidt(const BilinearForm& f, std::span<const Vector> vs) {
  require_symmetric(f, "Gram-Schmidt");
  GramSchmidtResult out;
  for (const auto& v : vs) {
    const Vector c = corrected(f, out.orthogonal, v);
    if (fits(f, out.orthogonal, c)) {
      out.orthogonal.push_back(normalize(f, c));
    } else {
      out.leftover.push_back(v);
    }
  }
  return out;
}

Decomposition decompose(const BilinearForm& f, std::span<const Vector> base) {
  require_symmetric(f, "decomposition");
  for (const auto& b : base) {
    if (b.dim() != f.dim()) throw DimensionError("decomposition: base vector dimension differs from the form");
  }
  if (!independent(base)) throw DomainError("decomposition needs a tropically independent base");

  Decomposition d;
  std::vector<std::size_t> pending;

  for (std::size_t i = 0; i < base.size(); ++i) {
    const Vector& v = base[i];
    const Vector c = corrected(f, d.anisotropic, v);
    if (fits(f, d.anisotropic, c)) {
      d.anisotropic.push_back(c);
      d.anisotropic_source.push_back(i);
      continue;
    }

    // Rescue: push v past its isotropic strip against the first accepted
    // vector it is Cauchy-Schwartz with.
    bool rescued = false;
    if (!classify_vector(f, v).isotropic) {
      for (const auto& w : d.anisotropic) {
        if (!pair_class(f, w, v).cauchy_schwartz) continue;
        const Scalar a11 = f(v, v);
        const Scalar a22 = tangible_lift(f(w, w));
        const Scalar alpha = f(v, w) + f(w, v);
        Scalar bound = Scalar::one() + alpha * inv(a22);
        if (!alpha.is_zero()) bound += a11 * inv(tangible_lift(alpha));
        const Scalar beta = Scalar::tangible(bound.value() + GroupValue(1));
        const Vector c2 = corrected(f, d.anisotropic, beta * w + v);
        if (fits(f, d.anisotropic, c2)) {
          d.anisotropic.push_back(c2);
          d.anisotropic_source.push_back(i);
          ++d.rescues;
          rescued = true;
        }
        break;
      }
    }
    if (!rescued) pending.push_back(i);
  }

  // Later acceptances change the corrections of earlier pending vectors.
  for (bool changed = true; changed;) {
    changed = false;
    for (auto it = pending.begin(); it != pending.end(); ++it) {
      const Vector c = corrected(f, d.anisotropic, base[*it]);
      if (fits(f, d.anisotropic, c)) {
        d.anisotropic.push_back(c);
        d.anisotropic_source.push_back(*it);
        pending.erase(it);
        changed = true;
        break;
      }
    }
  }

  for (std::size_t i : pending) {
    d.alternate.push_back(corrected(f, d.anisotropic, base[i]));
    d.alternate_source.push_back(i);
  }

  std::vector<Vector> all = d.anisotropic;
  all.insert(all.end(), d.alternate.begin(), d.alternate.end());
  d.thick = all.empty() || (all.size() <= kRankCap && rank(Matrix::from_columns(all)) == base.size());
  return d;
}

DecompositionCheck verify_decomposition(const BilinearForm& f, std::size_t base_size, const Decomposition& d) {
  DecompositionCheck c;
  const auto& an = d.anisotropic;
  const auto& al = d.alternate;
  for (std::size_t i = 0; i < an.size(); ++i) {
    if (classify_vector(f, an[i]).isotropic) c.anisotropic_nonisotropic = false;
    for (std::size_t j = i + 1; j < an.size(); ++j) {
      if (!f(an[i], an[j]).in_ghost_ideal() || !f(an[j], an[i]).in_ghost_ideal()) c.anisotropic_orthogonal = false;
      if (!pair_class(f, an[i], an[j]).cauchy_schwartz) c.anisotropic_cauchy_schwartz = false;
    }
    for (const auto& u : al) {
      if (!f(an[i], u).in_ghost_ideal() || !f(u, an[i]).in_ghost_ideal()) c.cross_ghost = false;
      if (pair_class(f, an[i], u).cauchy_schwartz) c.cross_not_cauchy_schwartz = false;
    }
  }
  for (const auto& u : al) {
    if (!classify_vector(f, u).isotropic) c.alternate_isotropic = false;
  }
  c.counts = an.size() + al.size() == base_size && d.anisotropic_source.size() == an.size() &&
             d.alternate_source.size() == al.size();
  return c;
}

}  // namespace supertrop
