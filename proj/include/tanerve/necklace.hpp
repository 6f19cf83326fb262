#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace tanerve {

// A necklace (T,p): a wedge of standard simplices glued at endpoints,
// encoded by its spine length p >= 0 and the joint set
// T = {0 = t_0 < t_1 < ... < t_k = p}. Delta^0 is (p=0, T={0}) and has
// no beads. Values are immutable after construction.
class Necklace {
 public:
  Necklace() : spine_(0), joints_{0} {}
  Necklace(int spine, std::vector<int> joints);

  static Necklace simplex(int n);
  static Necklace from_beads(const std::vector<int>& beads);
  // Comma-separated bead lengths, e.g. "2,3"; the empty string is Delta^0.
  static Necklace parse(const std::string& text);

  int spine() const { return spine_; }
  const std::vector<int>& joints() const { return joints_; }
  std::vector<int> beads() const;
  int bead_count() const { return static_cast<int>(joints_.size()) - 1; }
  int dim() const { return spine_ - bead_count(); }
  int signature() const;
  bool is_joint(int v) const;
  // Local necklace of bead k (1-based): Delta^{n_k}.
  Necklace bead(int k) const;
  // U^{<k} and U^{>k}: the wedge of beads strictly before/after bead k.
  Necklace before(int k) const;
  Necklace after(int k) const;
  std::string encode() const;

  auto operator<=>(const Necklace&) const = default;

 private:
  int spine_;
  std::vector<int> joints_;
};

Necklace wedge(const Necklace& a, const Necklace& b);

// Endpoint-preserving monotone map of spines carrying the joint condition
// joints(dst) subset of map(joints(src)).
class NecklaceMap {
 public:
  NecklaceMap(Necklace src, Necklace dst, std::vector<int> values);

  const Necklace& src() const { return src_; }
  const Necklace& dst() const { return dst_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int v) const { return values_[static_cast<size_t>(v)]; }

  auto operator<=>(const NecklaceMap&) const = default;

 private:
  Necklace src_;
  Necklace dst_;
  std::vector<int> values_;
};

struct MapClass {
  bool inert = false;
  bool active = false;
  bool injective = false;
  bool surjective = false;
  bool spine_collapsing = false;
  bool bead_reducing = false;
};

NecklaceMap identity_map(const Necklace& t);
// f after g (usual composition order); source/target mismatch throws.
NecklaceMap compose(const NecklaceMap& f, const NecklaceMap& g);
NecklaceMap wedge(const NecklaceMap& a, const NecklaceMap& b);
MapClass classify(const NecklaceMap& f);

// Unique factorization f = m . e with e active surjective and m injective.
std::pair<NecklaceMap, NecklaceMap> factor_epi_mono(const NecklaceMap& f);
// Unique factorization f = f_inert . f_act.
std::pair<NecklaceMap, NecklaceMap> factor_active_inert(const NecklaceMap& f);
// Unique (g1,g2) with g = g1 v g2 for injective g into t1 v t2.
std::pair<NecklaceMap, NecklaceMap> split_injective(const NecklaceMap& g,
                                                    const Necklace& t1,
                                                    const Necklace& t2);
// g o_k f = g . (id_{U^{<k}} v f v id_{U^{>k}}); bead index k is 1-based and
// f must land in bead k of the source of g.
NecklaceMap compose_at(const NecklaceMap& g, int k, const NecklaceMap& f);

// All injective maps U -> T in canonical order: by source spine, then the
// underlying map tuple, then the source joints, lexicographically.
std::vector<NecklaceMap> enumerate_injective_into(const Necklace& t);
// All inert maps S -> Delta^n; bijective with subsets of {1,...,n-1}.
std::vector<NecklaceMap> enumerate_inert_into(int n);
// All inert maps into a necklace (wedges of the single-bead ones).
std::vector<NecklaceMap> enumerate_inert_into_necklace(const Necklace& u);
// All necklace maps src -> dst.
std::vector<NecklaceMap> enumerate_maps(const Necklace& src,
                                        const Necklace& dst);
std::vector<Necklace> enumerate_necklaces(int max_spine);

// Signature statistics, kept as plain integers; parity is taken only where
// a sign is applied.
int eps_g(const std::vector<int>& parts);
int eps_c(const std::vector<int>& cuts);
// Signature phi of an inert map, and the single-bead special case
// phi_k(nu) = dim(U^{<k}) * (ell(S) - 1) for nu: S -> Delta^{n_k}.
int phi(const NecklaceMap& mu);
int phi_k(const Necklace& ambient, int k, const NecklaceMap& nu);
long long koszul_sigma(const std::vector<int>& degrees);

// Simplex-category generators as necklace maps. Only inner cofaces exist
// in the necklace category.
NecklaceMap delta_map(int n, int j);  // Delta^{n-1} -> Delta^n, 0 < j < n
NecklaceMap sigma_map(int n, int i);  // Delta^{n+1} -> Delta^n, 0 <= i <= n
// Inert inclusion Delta^{p_1} v ... v Delta^{p_r} -> Delta^{p_1+...+p_r}.
NecklaceMap nu_map(const std::vector<int>& parts);

}  // namespace tanerve
