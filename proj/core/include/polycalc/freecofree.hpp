#ifndef POLYCALC_FREECOFREE_HPP
#define POLYCALC_FREECOFREE_HPP

#include "polycalc/coclosures.hpp"

namespace poly {

// A finite prefix of the cofree-comonoid limit chain or the free-monoid
// colimit chain, with its connecting maps.
//   cofree: s0 = y, s_{k+1} = (base <| s_k) x y, links[k]: s_{k+1} -> s_k
//   free:   s0 = y, s_{k+1} = y + (base <| s_k), links[k]: s_k -> s_{k+1}
struct TruncChain {
  Poly base;
  int depth = 0;
  bool is_free = false;
  std::vector<Poly> stages;
  std::vector<PolyMap> links;
  int stabilized_at = -1;  // least k with links[k] an iso; -1 if none in range
};

TruncChain cofree_trunc(const Poly& p, int depth);
TruncChain free_trunc(const Poly& p, int depth);

// Composite of links between two stages (identity when from == to).
PolyMap chain_link_composite(const TruncChain& c, int from, int to);

// ---- cofree comonoid structure (truncated) ----

// Comultiplication stage map s_{m+n} -> s_m <| s_n.
PolyMap cofree_comult(const TruncChain& c, int m, int n);
// Counit composite s_k -> y.
PolyMap cofree_counit(const TruncChain& c, int k);
// Lax unit y -> (cofree of y) stage k.
PolyMap cofree_unit_y(int k);
// Lax tensor stage map s^p_k ox s^q_k -> s^{p ox q}_k.
PolyMap cofree_lax_tensor(const Poly& p, const Poly& q, int k);
// Comonoid hom stage map  c[p,q]_k ox c[p',q']_k -> c[p+p',q+q']_k.
PolyMap cofree_hom_map(const Poly& p, const Poly& q, const Poly& p2, const Poly& q2, int k);

// Positions of cofree stages are trees of height <= k over the base; the
// codecs below are shared with the tests.
struct CofreeTree {
  int root = -1;  // -1 is the depth-0 stub
  std::vector<CofreeTree> kids;
};
CofreeTree cofree_pos_decode(const TruncChain& c, int k, std::uint64_t pos);
std::uint64_t cofree_pos_encode(const TruncChain& c, int k, const CofreeTree& t);

// ---- free monoid structure (truncated) ----

// Unit composite y -> s_k.
PolyMap free_eta(const TruncChain& c, int k);
// Grafting multiplication stage map s_m <| s_n -> s_{m+n}.
PolyMap free_mu(const TruncChain& c, int m, int n);
// Functorial stage map on a morphism of bases.
PolyMap free_incl_map(const PolyMap& phi, const TruncChain& cp, const TruncChain& cq, int k);

// Free p-algebra on X at depth k: the set s_k <| X = eval(s_k, X).
FinSet free_algebra(const Poly& p, FinSet x, int k);
// The canonical injection  eval(s_k(p), X) -> eval(s_{k+1}(p+X), 0); a
// bijection once both chains have stabilized by the relevant depth.
FinFn free_algebra_inclusion(const Poly& p, FinSet x, int k);

enum class VeeLaxKind { Plus, Tensor, Subst, Vee };
// Target depth of the stage map for each kind.
int vee_lax_target_depth(VeeLaxKind which, int k);
// Stage map  (m_p stage k) . (m_q stage k) -> m_{p v q} stage d(k), where .
// is +, ox, <| or v per `which`.
PolyMap free_vee_lax(const Poly& p, const Poly& q, int k, VeeLaxKind which);

}  // namespace poly

#endif
