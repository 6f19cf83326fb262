#pragma once

#include "tanerve/ainfty.hpp"
#include "tanerve/linear.hpp"
#include "tanerve/necklace.hpp"
#include "tanerve/tensor.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace tanerve {

// One summand of the ambient space of nerve candidates at (T, objects):
// an injective necklace map g: U -> T together with the object path its
// vertex images force and the factor degrees of (sA)_U.
struct AmbientComponent {
  NecklaceMap g;
  std::vector<int> path;     // objects at the joints of U, length ell+1
  std::vector<int> degrees;  // bead length minus one, per bead
  std::vector<int> dims;     // hom dimension per factor
  int offset = 0;            // first column in the ambient coordinate order
  int size = 0;              // product of dims
};

// The decorated ambient sum over all injective g: U -> T, with columns in
// canonical order: components in the canonical enumeration order of g,
// label tuples lexicographically inside each component.
class NerveAmbient {
 public:
  NerveAmbient(std::shared_ptr<const AInftyCategory> cat, Necklace t,
               std::vector<int> objects);

  const AInftyCategory& category() const { return *cat_; }
  std::shared_ptr<const AInftyCategory> category_ptr() const { return cat_; }
  const Necklace& necklace() const { return t_; }
  const std::vector<int>& objects() const { return objects_; }
  int from_object() const { return objects_.front(); }
  int to_object() const { return objects_.back(); }
  int total_dim() const { return total_dim_; }
  const std::vector<AmbientComponent>& components() const {
    return components_;
  }
  int component_index(const NecklaceMap& g) const;
  // column of a basis vector inside a component
  int column(int comp, const std::vector<int>& labels) const;
  std::vector<int> labels_at(int comp, int column_in_comp) const;
  // the component's basis tuple as a one-term tensor element
  TensorElement basis_tensor(int comp, const std::vector<int>& labels) const;

  bool operator==(const NerveAmbient& rhs) const {
    return cat_ == rhs.cat_ && t_ == rhs.t_ && objects_ == rhs.objects_;
  }

 private:
  std::shared_ptr<const AInftyCategory> cat_;
  Necklace t_;
  std::vector<int> objects_;
  std::vector<AmbientComponent> components_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index_;
  int total_dim_ = 0;
};

// An element of the ambient sum; membership in the nerve is decided by
// tan_residuals, not assumed.
class NerveElement {
 public:
  explicit NerveElement(std::shared_ptr<const NerveAmbient> ambient)
      : ambient_(std::move(ambient)) {}
  NerveElement(std::shared_ptr<const NerveAmbient> ambient,
               std::vector<Scalar> dense);

  const NerveAmbient& ambient() const { return *ambient_; }
  std::shared_ptr<const NerveAmbient> ambient_ptr() const { return ambient_; }
  const std::map<int, Scalar>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  void add(int column, const Scalar& coeff);
  void add_scaled(const NerveElement& other, const Scalar& coeff);
  Scalar coord(int column) const;
  std::vector<Scalar> dense() const;
  // the component at g as a tensor element (single forced path)
  TensorElement component(int comp) const;

  bool operator==(const NerveElement& rhs) const;

 private:
  std::shared_ptr<const NerveAmbient> ambient_;
  std::map<int, Scalar> coords_;
};

struct TanRow {
  int component;  // index of g
  int bead;       // k, 1-based
  int out_label;  // row's basis index within the output label block
};

// The TAN constraint system for one ambient: one row per (g, bead k,
// output basis element), in that order, skipping beads of length one and
// zero-dimensional output blocks.
struct TanSystem {
  std::shared_ptr<const NerveAmbient> ambient;
  std::vector<TanRow> rows;
  LinearSystem matrix;
};

struct TanResidual {
  int component;
  int bead;
  TensorElement value;
};

// Computes nerve components as exact kernels and memoizes per necklace
// and decoration. Safe for concurrent use; insertion is serialized.
class NerveEngine {
 public:
  explicit NerveEngine(std::shared_ptr<const AInftyCategory> cat)
      : cat_(std::move(cat)) {}

  const AInftyCategory& category() const { return *cat_; }
  std::shared_ptr<const AInftyCategory> category_ptr() const { return cat_; }

  std::shared_ptr<const NerveAmbient> ambient(const Necklace& t,
                                              const std::vector<int>& objects);
  std::shared_ptr<const TanSystem> tan_system(const Necklace& t,
                                              const std::vector<int>& objects);
  // Exact basis of N_T at the decoration; every vector has all residuals
  // identically zero.
  const std::vector<NerveElement>& nerve_basis(const Necklace& t,
                                               const std::vector<int>& objects);
  int dimension(const Necklace& t, const std::vector<int>& objects);

 private:
  struct Entry {
    std::shared_ptr<const NerveAmbient> ambient;
    std::shared_ptr<const TanSystem> system;
    std::shared_ptr<const std::vector<NerveElement>> basis;
  };
  Entry& entry(const Necklace& t, const std::vector<int>& objects);

  std::shared_ptr<const AInftyCategory> cat_;
  std::map<std::pair<Necklace, std::vector<int>>, Entry> cache_;
  std::mutex mutex_;
};

std::shared_ptr<const TanSystem> build_tan_system(
    std::shared_ptr<const NerveAmbient> ambient);

// All nonzero residuals of the decomposed TAN relations of y, one entry
// per (g, bead) with a nonzero defect; empty iff y lies in the nerve.
std::vector<TanResidual> tan_residuals(const NerveElement& y);

// f^*: N_{T'} -> N_T for a necklace map f: T -> T', via the unique
// epi-mono factorization of f . g and the bar functor on epis. Defined on
// raw ambient elements; TAN membership is preserved, not required.
NerveElement structure_map(NerveEngine& engine, const NecklaceMap& f,
                           const NerveElement& y);

// Inner face, degeneracy and comultiplication as instances of the above.
NerveElement face(NerveEngine& engine, int j, const NerveElement& y);
NerveElement degeneracy(NerveEngine& engine, int i, const NerveElement& y);
// restriction along nu_{p,q}; the splitting into a sum of tensor pairs is
// the coordinate re-indexing of wedge components
NerveElement comult(NerveEngine& engine, int p, int q, const NerveElement& y);

// The composition isomorphism N_{T1} (x) N_{T2} -> N_{T1 v T2}.
NerveElement tensor_elements(NerveEngine& engine, const NerveElement& y1,
                             const NerveElement& y2);

// The templicial map induced by an A-infinity functor, componentwise
// f_T(y)_g = sum over inert nu of (sign) (f_* (x) ... (x) f_*)(y_{g.nu}).
NerveElement functor_image(const AInftyFunctor& f, NerveEngine& target_engine,
                           const NerveElement& y);

}  // namespace tanerve
