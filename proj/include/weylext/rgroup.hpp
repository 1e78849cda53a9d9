// Sigma-datum validation, the reflection subgroup W(Phi1), the R-group
// R_sigma, the semidirect decomposition W(sigma) = W(Phi1) x| R_sigma, and
// the intertwining-algebra dimension computed by independent routes.

#ifndef WEYLEXT_RGROUP_HPP_
#define WEYLEXT_RGROUP_HPP_

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weylext/base.hpp"
#include "weylext/group.hpp"
#include "weylext/rootsys.hpp"

namespace weylext {

struct CliffordInts {
  int s = 1;            // multiplicity of sigma0 in sigma restricted
  int x_mod_xsigma = 1;   // [X : X(sigma)]
  int x1_mod_xsigma = 1;  // [X1(sigma) : X(sigma)]
};

// The input package from which everything downstream is computed. W(sigma)
// and Phi1 are inputs: deciding them requires representation data outside
// this library's scope. Validation enforces the combinatorial consistency
// that makes the downstream identities theorems.
struct SigmaDatum {
  const ExtendedWeylGroup* ambient = nullptr;
  EwSubgroup w_sigma;
  std::vector<int> phi1;      // sorted root indices, closed under negation
  std::vector<int> positive;  // sorted root indices, a choice of positive half
  std::optional<EwSubgroup> w_sigma_inner;
  std::optional<CliffordInts> clifford_ints;

  // cached by validate()
  std::vector<int> phi1_pos;
  bool validated = false;

  bool is_positive(int root_idx) const {
    return std::binary_search(positive.begin(), positive.end(), root_idx);
  }
};

inline SigmaDatum make_sigma_datum(
    const ExtendedWeylGroup& g, EwSubgroup w_sigma,
    std::vector<int> phi1_root_indices,
    std::optional<std::vector<int>> positive_override = std::nullopt,
    std::optional<EwSubgroup> w_sigma_inner = std::nullopt,
    std::optional<CliffordInts> clifford = std::nullopt) {
  SigmaDatum d;
  d.ambient = &g;
  d.w_sigma = std::move(w_sigma);
  d.phi1 = std::move(phi1_root_indices);
  std::sort(d.phi1.begin(), d.phi1.end());
  d.phi1.erase(std::unique(d.phi1.begin(), d.phi1.end()), d.phi1.end());
  if (positive_override)
    d.positive = std::move(*positive_override);
  else
    d.positive = g.rs.positive;
  std::sort(d.positive.begin(), d.positive.end());
  d.w_sigma_inner = std::move(w_sigma_inner);
  d.clifford_ints = clifford;
  return d;
}

// Checks all datum invariants and caches Phi1+ = Phi1 n Phi+.
inline SigmaDatum validate_sigma_datum(SigmaDatum d) {
  const ExtendedWeylGroup& g = *d.ambient;
  if (d.w_sigma.parent != &g)
    throw InputError("sigma datum: W(sigma) has a different parent group");
  for (int r : d.phi1)
    if (r < 0 || r >= g.rs.root_count())
      throw InputError("sigma datum: Phi1 contains an invalid root index");
  // positive half: exactly one of each +/- pair
  {
    std::set<int> pos(d.positive.begin(), d.positive.end());
    if (int(pos.size()) * 2 != g.rs.root_count())
      throw InputError("sigma datum: positive set has the wrong size");
    for (int p : pos) {
      if (p < 0 || p >= g.rs.root_count())
        throw InputError("sigma datum: positive set has an invalid index");
      std::vector<int> neg = g.rs.roots[p];
      for (int& c : neg) c = -c;
      int q = g.rs.index_of(neg);
      if (q < 0 || pos.count(q))
        throw InputError(
            "sigma datum: positive set must pick one of each +/- pair");
    }
  }
  // Phi1 closed under negation and reduced
  for (int r : d.phi1) {
    std::vector<int> neg = g.rs.roots[r];
    for (int& c : neg) c = -c;
    int q = g.rs.index_of(neg);
    if (q < 0 || !std::binary_search(d.phi1.begin(), d.phi1.end(), q))
      throw InputError("sigma datum: Phi1 is not closed under negation at " +
                       g.rs.root_name(r));
    for (int k = 2; k <= 4; ++k) {
      std::vector<int> scaled = g.rs.roots[r];
      for (int& c : scaled) c *= k;
      int m = g.rs.index_of(scaled);
      if (m >= 0 && std::binary_search(d.phi1.begin(), d.phi1.end(), m))
        throw InputError("sigma datum: Phi1 is not reduced at " +
                         g.rs.root_name(r));
    }
  }
  // every element of W(sigma) must stabilize Phi1 setwise
  for (int w : d.w_sigma.members) {
    for (int r : d.phi1) {
      int im = g.act_root(w, r);
      if (!std::binary_search(d.phi1.begin(), d.phi1.end(), im))
        throw InconsistentDatumError(
            "sigma datum: element " + g.label(w) + " moves " +
            g.rs.root_name(r) + " out of Phi1");
    }
  }
  if (d.w_sigma_inner) {
    if (d.w_sigma_inner->parent != &g)
      throw InputError("sigma datum: inner subgroup has a different parent");
    for (int w : d.w_sigma_inner->members) {
      if (!d.w_sigma.contains(w))
        throw InconsistentDatumError(
            "sigma datum: inner subgroup is not contained in W(sigma)");
      if (g.component_of(w) != 0)
        throw InconsistentDatumError(
            "sigma datum: inner subgroup contains the outer element " +
            g.label(w));
    }
    // normal of index dividing |Gamma|
    for (int w : d.w_sigma.members)
      for (int m : d.w_sigma_inner->members) {
        int c = g.multiply(g.multiply(w, m), g.inverse(w));
        if (!d.w_sigma_inner->contains(c))
          throw InconsistentDatumError(
              "sigma datum: inner subgroup is not normal in W(sigma)");
      }
    if (d.w_sigma.order() % d.w_sigma_inner->order() != 0 ||
        g.gamma().order() %
                (d.w_sigma.order() / d.w_sigma_inner->order()) !=
            0)
      throw InconsistentDatumError(
          "sigma datum: [W(sigma) : inner] must divide the component group "
          "order");
  }
  if (d.clifford_ints) {
    if (d.clifford_ints->s <= 0 || d.clifford_ints->x_mod_xsigma <= 0 ||
        d.clifford_ints->x1_mod_xsigma <= 0)
      throw InputError("sigma datum: clifford integers must be positive");
  }
  d.phi1_pos.clear();
  for (int r : d.phi1)
    if (d.is_positive(r)) d.phi1_pos.push_back(r);
  d.validated = true;
  return d;
}

namespace detail {

inline void require_validated(const SigmaDatum& d) {
  if (!d.validated)
    throw InputError("sigma datum: validate_sigma_datum must run first");
}

}  // namespace detail

// W(Phi1): the subgroup generated by the reflections in Phi1+. Verified to
// lie inside W(sigma) and to be normal there.
inline EwSubgroup reflection_subgroup(const SigmaDatum& d) {
  detail::require_validated(d);
  const ExtendedWeylGroup& g = *d.ambient;
  std::vector<int> gens;
  for (int r : d.phi1_pos) {
    Mat refl = reflection_matrix(g.rs, r);
    int idx = g.element_index(refl, g.gamma().identity());
    if (idx < 0)
      throw InconsistentDatumError(
          "reflection subgroup: reflection in " + g.rs.root_name(r) +
          " is not an element of the ambient group");
    gens.push_back(idx);
  }
  EwSubgroup w1 = ew_generate(g, gens);
  for (int w : w1.members)
    if (!d.w_sigma.contains(w))
      throw InconsistentDatumError(
          "reflection subgroup: W(Phi1) escapes W(sigma) at " + g.label(w));
  for (int w : d.w_sigma.members)
    for (int m : w1.members)
      if (!w1.contains(g.multiply(g.multiply(w, m), g.inverse(w))))
        throw InconsistentDatumError(
            "reflection subgroup: W(Phi1) is not normal in W(sigma)");
  return w1;
}

// R_sigma = {w in W(sigma) : w(beta) positive for all beta in Phi1+}.
inline EwSubgroup r_group(const SigmaDatum& d) {
  detail::require_validated(d);
  const ExtendedWeylGroup& g = *d.ambient;
  EwSubgroup r;
  r.parent = &g;
  for (int w : d.w_sigma.members) {
    bool keep = true;
    for (int beta : d.phi1_pos)
      if (!d.is_positive(g.act_root(w, beta))) {
        keep = false;
        break;
      }
    if (keep) r.members.push_back(w);
  }
  // closure is a theorem for validated data; treat failure as an assertion
  for (int a : r.members)
    for (int b : r.members)
      if (!r.contains(g.multiply(a, b)))
        throw TheoremViolationError(
            "r_group: filtered set is not closed under multiplication");
  return r;
}

struct SemidirectDecomposition {
  EwSubgroup w_phi1;
  EwSubgroup r_sigma;
  SemidirectReport check;            // from the materialized W(sigma) table
  std::vector<std::string> factorizations;  // "w = u * r" per element
};

// W(sigma) = W(Phi1) x| R_sigma, verified on the materialized subgroup
// table. Failure signals corrupted input, since the decomposition is a
// theorem for valid data.
inline SemidirectDecomposition semidirect_decompose(const SigmaDatum& d) {
  detail::require_validated(d);
  SemidirectDecomposition out;
  out.w_phi1 = reflection_subgroup(d);
  out.r_sigma = r_group(d);
  GroupTable t = ew_subgroup_table(d.w_sigma);
  auto local = [&](const EwSubgroup& s) {
    Subgroup ls;
    ls.parent = nullptr;  // set after t is stable
    for (int m : s.members) {
      auto it =
          std::lower_bound(d.w_sigma.members.begin(), d.w_sigma.members.end(), m);
      ls.members.push_back(int(it - d.w_sigma.members.begin()));
    }
    return ls;
  };
  Subgroup ln = local(out.w_phi1);
  Subgroup lh = local(out.r_sigma);
  ln.parent = &t;
  lh.parent = &t;
  out.check = semidirect_check(t, ln, lh);
  if (!out.check.ok)
    throw TheoremViolationError(
        "semidirect_decompose: W(sigma) != W(Phi1) x| R_sigma (" +
        out.check.detail + "); the sigma datum is corrupted");
  for (int i = 0; i < t.order(); ++i) {
    auto [a, b] = out.check.factorization[i];
    out.factorizations.push_back(t.label(i) + " = " + t.label(a) + " * " +
                                 t.label(b));
  }
  return out;
}

struct DimensionReport {
  int dimension = 1;
  int by_rgroup_order = 1;    // |R_sigma|
  int by_index = 1;           // |W(sigma)| / |W(Phi1)|
  std::optional<int> by_inner;  // |R0_sigma| * [W(sigma) : W_inner(sigma)]
};

// dim C(sigma), computed as |R_sigma|, as |W(sigma)|/|W(Phi1)|, and (when
// the inner stabilizer is supplied) as |R0_sigma| * [W(sigma):W_inner].
// Any mismatch aborts.
inline DimensionReport dim_commuting_algebra(const SigmaDatum& d) {
  detail::require_validated(d);
  DimensionReport rep;
  EwSubgroup w1 = reflection_subgroup(d);
  EwSubgroup r = r_group(d);
  rep.by_rgroup_order = r.order();
  if (d.w_sigma.order() % w1.order() != 0)
    throw TheoremViolationError(
        "dim_commuting_algebra: |W(Phi1)| does not divide |W(sigma)|");
  rep.by_index = d.w_sigma.order() / w1.order();
  if (rep.by_index != rep.by_rgroup_order)
    throw TheoremViolationError(
        "dim_commuting_algebra: |R_sigma| = " +
        std::to_string(rep.by_rgroup_order) + " but |W(sigma)|/|W(Phi1)| = " +
        std::to_string(rep.by_index));
  if (d.w_sigma_inner) {
    const ExtendedWeylGroup& g = *d.ambient;
    int r0 = 0;
    for (int w : d.w_sigma_inner->members) {
      bool keep = true;
      for (int beta : d.phi1_pos)
        if (!d.is_positive(g.act_root(w, beta))) {
          keep = false;
          break;
        }
      if (keep) ++r0;
    }
    int index = d.w_sigma.order() / d.w_sigma_inner->order();
    rep.by_inner = r0 * index;
    if (*rep.by_inner != rep.by_rgroup_order)
      throw TheoremViolationError(
          "dim_commuting_algebra: inner route gives " +
          std::to_string(*rep.by_inner) + " but |R_sigma| = " +
          std::to_string(rep.by_rgroup_order));
  }
  rep.dimension = rep.by_rgroup_order;
  return rep;
}

struct Section5Report {
  int s = 1;
  int x_mod_xsigma = 1;
  int x1_mod_xsigma = 1;
  long long lhs = 1;       // s^2 [X/X(sigma)] [X1(sigma)/X(sigma)]
  long long ratio = 1;     // |W(sigma0)| / |W(sigma)|
  int dim_c_sigma = 1;
  long long dim_c_sigma0 = 1;  // dim C(sigma) * lhs
};

// Verifies s^2 [X/X(sigma)] [X1/X(sigma)] = |W(sigma0)|/|W(sigma)| and
// reports the induced dimension of the connected-side commuting algebra.
inline Section5Report section5_identity_check(const SigmaDatum& d,
                                              const EwSubgroup& w_sigma0) {
  detail::require_validated(d);
  if (!d.clifford_ints)
    throw InputError("section5_identity_check: clifford integers missing");
  if (w_sigma0.parent != d.ambient)
    throw InputError("section5_identity_check: W(sigma0) has a different "
                     "parent group");
  for (int w : d.w_sigma.members)
    if (!w_sigma0.contains(w))
      throw InconsistentDatumError(
          "section5_identity_check: W(sigma) is not contained in W(sigma0)");
  Section5Report rep;
  rep.s = d.clifford_ints->s;
  rep.x_mod_xsigma = d.clifford_ints->x_mod_xsigma;
  rep.x1_mod_xsigma = d.clifford_ints->x1_mod_xsigma;
  rep.lhs = (long long)rep.s * rep.s * rep.x_mod_xsigma * rep.x1_mod_xsigma;
  if (w_sigma0.order() % d.w_sigma.order() != 0)
    throw InconsistentDatumError(
        "section5_identity_check: |W(sigma0)|/|W(sigma)| is not an integer");
  rep.ratio = w_sigma0.order() / d.w_sigma.order();
  if (rep.lhs != rep.ratio)
    throw InconsistentDatumError(
        "section5_identity_check: s^2 [X/X(sigma)] [X1/X(sigma)] = " +
        std::to_string(rep.lhs) + " but |W(sigma0)|/|W(sigma)| = " +
        std::to_string(rep.ratio));
  rep.dim_c_sigma = dim_commuting_algebra(d).dimension;
  rep.dim_c_sigma0 = rep.dim_c_sigma * rep.lhs;
  return rep;
}

struct ProjectionReport {
  bool surjective = false;
  bool homomorphism = false;
  bool kernel_matches = false;
  int domain_order = 0;
  int kernel_order = 0;
  int image_order = 0;
};

// Verifies that a supplied labeling W(sigma0,sigma) -> W(sigma) is a
// surjective homomorphism with kernel exactly W_M(sigma0), giving
// |W(sigma)| = |W(sigma0,sigma)| / |W_M(sigma0)|.
inline ProjectionReport projection_p_check(const GroupTable& domain,
                                           const Subgroup& w_sigma0_sigma,
                                           const Subgroup& w_m_sigma0,
                                           const GroupTable& w_sigma,
                                           const std::vector<int>& labeling) {
  if (w_sigma0_sigma.parent != &domain || w_m_sigma0.parent != &domain)
    throw InputError("projection_p_check: subgroup has a different parent");
  if (labeling.size() != w_sigma0_sigma.members.size())
    throw InputError(
        "projection_p_check: labeling must cover W(sigma0,sigma)");
  for (int v : labeling)
    if (v < 0 || v >= w_sigma.order())
      throw InputError("projection_p_check: label out of range");
  for (int m : w_m_sigma0.members)
    if (!w_sigma0_sigma.contains(m))
      throw InconsistentDatumError(
          "projection_p_check: claimed kernel is not inside the domain");
  auto label_of = [&](int elem) {
    auto it = std::lower_bound(w_sigma0_sigma.members.begin(),
                               w_sigma0_sigma.members.end(), elem);
    if (it == w_sigma0_sigma.members.end() || *it != elem)
      throw InconsistentDatumError(
          "projection_p_check: domain is not closed under multiplication");
    return labeling[it - w_sigma0_sigma.members.begin()];
  };
  ProjectionReport rep;
  rep.domain_order = w_sigma0_sigma.order();
  rep.homomorphism = true;
  for (int a : w_sigma0_sigma.members)
    for (int b : w_sigma0_sigma.members) {
      int ab = domain.mult(a, b);
      if (label_of(ab) != w_sigma.mult(label_of(a), label_of(b))) {
        rep.homomorphism = false;
        break;
      }
    }
  if (!rep.homomorphism)
    throw InconsistentDatumError(
        "projection_p_check: labeling is not a homomorphism");
  std::set<int> image;
  std::vector<int> kernel;
  for (size_t i = 0; i < w_sigma0_sigma.members.size(); ++i) {
    image.insert(labeling[i]);
    if (labeling[i] == w_sigma.identity)
      kernel.push_back(w_sigma0_sigma.members[i]);
  }
  rep.image_order = int(image.size());
  rep.kernel_order = int(kernel.size());
  rep.surjective = rep.image_order == w_sigma.order();
  rep.kernel_matches = kernel == w_m_sigma0.members;
  if (!rep.surjective)
    throw InconsistentDatumError("projection_p_check: labeling is not onto");
  if (!rep.kernel_matches)
    throw InconsistentDatumError(
        "projection_p_check: kernel does not equal W_M(sigma0)");
  return rep;
}

}  // namespace weylext

#endif  // WEYLEXT_RGROUP_HPP_
