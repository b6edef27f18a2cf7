#pragma once

#include <functional>
#include <optional>
#include <string>

#include "whk/genetic.hpp"
#include "whk/snf.hpp"

namespace whk {

/// The product of the cyclic sections N_P(S)/S over a genetic basis, with one
/// labeled component per entry. Trivial components (S = P, modulus 1) are
/// kept as zero-width columns so that component indices stay stable across
/// basis paths and deflation maps; they simply never carry a nonzero value.
struct GammaGroup {
  const FiniteGroup* parent = nullptr;
  std::vector<std::int64_t> moduli;  // p^{r_i} per entry, in basis order

  std::size_t size() const { return moduli.size(); }
  std::int64_t order() const;
};

/// Exponent vector over the components of Gamma, entry i reduced mod p^{r_i}.
/// Each value is the discrete log of the component with respect to the
/// entry's chosen generator coset, so products in Gamma are modular additions.
struct RelationVector {
  std::vector<std::int64_t> e;
  // provenance when this is a relation u_{H,g}: a generator of H, and g
  std::optional<Elem> h_gen;
  std::optional<Elem> g;
};

struct Cl1Options {
  std::size_t max_order = 0;     // all_subgroups bound for the general path (0 = p^4)
  int workers = 1;
  std::function<void(std::size_t, std::size_t)> progress;  // (done, total)
};

GammaGroup build_gamma(const GeneticBasis& basis);

/// The relation vector u_{H,g} of a cyclic subgroup H and g in C_P(H).
///
/// Component at an entry S: over the double-coset representatives x of
/// H<g>\P/N_P(S) with H^x n N_P(S) <= S, let m = [<g> : <g> n (H * ^xN_P(S))]
/// and write g^m = h * ^x(l) with h in H, l in N_P(S); the component picks up
/// the discrete log of l's coset in N_P(S)/S. The class of l is independent
/// of the choices; the representative policy only exists so independence can
/// be property-tested.
RelationVector u_vector(const FiniteGroup& g, const GeneticBasis& basis,
                        const Subgroup& h, Elem gelem,
                        RepPolicy policy = RepPolicy::Least);

enum class GeneratorSetMode { Minimal, FullCentralizer };

/// One u_{H,g} per conjugacy-class representative H of cyclic subgroups and
/// per g in a lift of a minimal generating set of C_P(H)/H (or all of C_P(H)
/// with FullCentralizer, for robustness checks). Deterministic order; may run
/// on several workers.
std::vector<RelationVector> relation_generators(
    const FiniteGroup& g, const GeneticBasis& basis, int workers = 1,
    GeneratorSetMode mode = GeneratorSetMode::Minimal,
    const std::function<void(std::size_t, std::size_t)>& progress = {});

/// Invariant factors of Gamma/<relations> by exact Smith reduction of the
/// stacked matrix [diag(moduli); relations] (computed over Z/p^s, s the top
/// modulus exponent, which is lossless here and cannot overflow).
AbelianInvariants smith_quotient(const GammaGroup& gamma,
                                 const std::vector<RelationVector>& relations);

/// Cl_1(ZP): builds a genetic basis (fast path for (almost) extra-special
/// groups), assembles the relation subgroup, and reduces.
AbelianInvariants cl1_structure(const FiniteGroup& g, const Cl1Options& opts = {});

/// Deflation data for a normal subgroup N: the induced surjection
/// Cl_1(ZP) -> Cl_1(Z(P/N)) obtained by keeping the components with N <= S,
/// its kernel K, and both ends computed explicitly.
struct DeflationData {
  Subgroup n;
  // component_map[i] = index of entry i's image in the quotient basis, or -1.
  std::vector<int> component_map;
  AbelianInvariants cl1_parent;
  AbelianInvariants cl1_quotient;
  AbelianInvariants kernel;
  bool surjective = false;  // verified: |Cl1(P)| = |K| * |Cl1(P/N)|
};
DeflationData deflation(const FiniteGroup& g, const Subgroup& n,
                        const Cl1Options& opts = {});

/// A minimal generating set of Cl_1(ZP) made of images of canonical Gamma
/// basis vectors, for elementary abelian and (almost) extra-special groups:
/// index-p components realizing a basis of Cl_1(Z(P/Phi)) plus, when the
/// deflation kernel is nontrivial, a generator of the Y component.
struct MinimalGenerators {
  struct Item {
    std::size_t component;
    std::string label;  // "P", "Q<i>" (index-p) or "Y"
  };
  std::vector<Item> items;
  AbelianInvariants cl1;
};
MinimalGenerators minimal_generators(const FiniteGroup& g, const Cl1Options& opts = {});

/// The witness element w = u_{1,g}^-1 * prod_a u_{H_a,g} for the two special
/// cases (extra-special of order p^5 and exponent p^2; almost extra-special
/// of order p^6), built from a generator g of the distinguished cyclic
/// subgroup C and commuting order-p elements a, b with [a,b] generating the
/// derived subgroup. All index-p components of w vanish and the Y component
/// lands in the center's section; its order decides the deflation kernel.
struct WitnessReport {
  RelationVector w;
  std::size_t y_component = 0;
  bool hyperplane_components_trivial = false;
  std::int64_t y_dlog = 0;
  std::int64_t y_value_order = 1;  // order of w_Y inside the Y component
  std::int64_t y_modulus = 1;
  Elem g = 0, a = 0, b = 0;
};
WitnessReport witness_w(const FiniteGroup& g, const Cl1Options& opts = {});

/// Whitehead-group summary: free rank from the real/rational irreducible
/// counts, torsion from Cl_1. The torsion equals the full SK_1 exactly when
/// the derived subgroup is central (true for every family built here).
struct WhiteheadSummary {
  std::int64_t free_rank = 0;
  AbelianInvariants torsion;
  bool sk1_equals_cl1 = false;
};
WhiteheadSummary whitehead_summary(const FiniteGroup& g, const Cl1Options& opts = {});

// JSON encoding of AbelianInvariants:
//   {"invariant_factors":[...], "elementary_rank": k-or-null, "order":"3^21"}
std::string invariants_to_json(const AbelianInvariants& inv, int p);
AbelianInvariants invariants_from_json(const std::string& text);

}  // namespace whk
