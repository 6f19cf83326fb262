#include "tanerve/nerve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tanerve {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("nerve: " + msg);
}

}  // namespace

NerveAmbient::NerveAmbient(std::shared_ptr<const AInftyCategory> cat,
                           Necklace t, std::vector<int> objects)
    : cat_(std::move(cat)), t_(std::move(t)), objects_(std::move(objects)) {
  if (static_cast<int>(objects_.size()) != t_.spine() + 1)
    fail("decoration must assign an object to every vertex of the spine");
  for (int o : objects_)
    if (o < 0 || o >= cat_->object_count()) fail("decoration object unknown");
  for (const auto& g : enumerate_injective_into(t_)) {
    AmbientComponent comp;
    comp.g = g;
    const auto& joints = g.src().joints();
    for (int v : joints)
      comp.path.push_back(objects_[static_cast<size_t>(g(v))]);
    for (int b : g.src().beads()) comp.degrees.push_back(b - 1);
    comp.size = 1;
    for (size_t i = 0; i < comp.degrees.size(); ++i) {
      int dim = cat_->hom_dim(comp.path[i], comp.path[i + 1], comp.degrees[i]);
      comp.dims.push_back(dim);
      comp.size *= dim;
    }
    comp.offset = total_dim_;
    total_dim_ += comp.size;
    index_[{g.values(), g.src().joints()}] =
        static_cast<int>(components_.size());
    components_.push_back(std::move(comp));
  }
}

int NerveAmbient::component_index(const NecklaceMap& g) const {
  auto it = index_.find({g.values(), g.src().joints()});
  if (it == index_.end()) fail("component lookup failed");
  return it->second;
}

int NerveAmbient::column(int comp, const std::vector<int>& labels) const {
  const auto& c = components_[static_cast<size_t>(comp)];
  if (labels.size() != c.dims.size()) fail("label tuple has wrong length");
  int at = 0;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= c.dims[i]) fail("label out of range");
    at = at * c.dims[i] + labels[i];
  }
  return c.offset + at;
}

std::vector<int> NerveAmbient::labels_at(int comp, int column_in_comp) const {
  const auto& c = components_[static_cast<size_t>(comp)];
  std::vector<int> labels(c.dims.size(), 0);
  int rest = column_in_comp;
  for (size_t i = c.dims.size(); i-- > 0;) {
    labels[i] = rest % c.dims[i];
    rest /= c.dims[i];
  }
  return labels;
}

TensorElement NerveAmbient::basis_tensor(int comp,
                                         const std::vector<int>& labels) const {
  const auto& c = components_[static_cast<size_t>(comp)];
  TensorElement x(cat_->field(), c.degrees);
  x.add(TensorKey{c.path, labels}, Scalar::one(cat_->field()));
  return x;
}

NerveElement::NerveElement(std::shared_ptr<const NerveAmbient> ambient,
                           std::vector<Scalar> dense)
    : ambient_(std::move(ambient)) {
  if (static_cast<int>(dense.size()) != ambient_->total_dim())
    fail("dense coordinate vector has wrong length");
  for (size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) coords_.emplace(static_cast<int>(i), dense[i]);
}

void NerveElement::add(int column, const Scalar& coeff) {
  if (column < 0 || column >= ambient_->total_dim())
    fail("coordinate out of range");
  if (coeff.is_zero()) return;
  auto [it, inserted] = coords_.emplace(column, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

void NerveElement::add_scaled(const NerveElement& other, const Scalar& coeff) {
  if (!(*ambient_ == other.ambient())) fail("ambient mismatch");
  for (const auto& [col, value] : other.coords_) add(col, value * coeff);
}

Scalar NerveElement::coord(int column) const {
  auto it = coords_.find(column);
  return it == coords_.end() ? Scalar::zero(ambient_->category().field())
                             : it->second;
}

std::vector<Scalar> NerveElement::dense() const {
  std::vector<Scalar> out(static_cast<size_t>(ambient_->total_dim()),
                          Scalar::zero(ambient_->category().field()));
  for (const auto& [col, value] : coords_)
    out[static_cast<size_t>(col)] = value;
  return out;
}

TensorElement NerveElement::component(int comp) const {
  const auto& c = ambient_->components()[static_cast<size_t>(comp)];
  TensorElement x(ambient_->category().field(), c.degrees);
  auto it = coords_.lower_bound(c.offset);
  for (; it != coords_.end() && it->first < c.offset + c.size; ++it)
    x.add(TensorKey{c.path, ambient_->labels_at(comp, it->first - c.offset)},
          it->second);
  return x;
}

bool NerveElement::operator==(const NerveElement& rhs) const {
  return *ambient_ == rhs.ambient() && coords_ == rhs.coords_;
}

std::shared_ptr<const TanSystem> build_tan_system(
    std::shared_ptr<const NerveAmbient> ambient) {
  const auto& amb = *ambient;
  const AInftyCategory& cat = amb.category();
  const Field& field = cat.field();

  // first pass: row layout
  std::vector<TanRow> rows;
  struct Block {
    int comp;
    int bead;
    std::vector<int> out_dims;
    int out_size;
    int row_offset;
  };
  std::vector<Block> blocks;
  int row_count = 0;
  for (int ci = 0; ci < static_cast<int>(amb.components().size()); ++ci) {
    const auto& c = amb.components()[static_cast<size_t>(ci)];
    const Necklace& u = c.g.src();
    for (int k = 1; k <= u.bead_count(); ++k) {
      int nk = u.beads()[static_cast<size_t>(k - 1)];
      if (nk < 2) continue;  // the output space (sA)_0 vanishes
      Block block{ci, k, {}, 1, row_count};
      for (size_t i = 0; i < c.degrees.size(); ++i) {
        int d = c.degrees[i] - (static_cast<int>(i) == k - 1 ? 1 : 0);
        int dim = cat.hom_dim(c.path[i], c.path[i + 1], d);
        block.out_dims.push_back(dim);
        block.out_size *= dim;
      }
      if (block.out_size == 0) continue;
      for (int r = 0; r < block.out_size; ++r)
        rows.push_back(TanRow{ci, k, r});
      row_count += block.out_size;
      blocks.push_back(std::move(block));
    }
  }

  LinearSystem matrix(field, row_count, amb.total_dim());
  auto out_row = [](const Block& b, const std::vector<int>& labels) {
    int at = 0;
    for (size_t i = 0; i < labels.size(); ++i)
      at = at * b.out_dims[i] + labels[i];
    return b.row_offset + at;
  };

  for (const auto& block : blocks) {
    const auto& c = amb.components()[static_cast<size_t>(block.comp)];
    const Necklace& u = c.g.src();
    int k = block.bead;
    int nk = u.beads()[static_cast<size_t>(k - 1)];
    int dim_before = u.before(k).dim();

    // left side: inert maps nu: S -> Delta^{n_k}
    for (const auto& nu : enumerate_inert_into(nk)) {
      const Necklace& s = nu.src();
      NecklaceMap refined = compose_at(c.g, k, nu);
      int src_comp = amb.component_index(refined);
      const auto& sc = amb.components()[static_cast<size_t>(src_comp)];
      long long printed =
          s.signature() + static_cast<long long>(s.bead_count()) * dim_before;
      Scalar sign = sign_of(field, printed);
      for (int col = 0; col < sc.size; ++col) {
        TensorElement x =
            amb.basis_tensor(src_comp, amb.labels_at(src_comp, col));
        TensorElement image = apply_graded_op(cat.mult_op(s.bead_count()), k,
                                              x, cat.convention());
        for (const auto& [key, coeff] : image.terms()) {
          if (key.path != c.path) fail("tan assembly: path drift");
          matrix.add(out_row(block, key.labels), sc.offset + col,
                     coeff * sign);
        }
      }
    }

    // right side: inner faces of bead k
    for (int j = 1; j <= nk - 1; ++j) {
      NecklaceMap faced = compose_at(c.g, k, delta_map(nk, j));
      int src_comp = amb.component_index(faced);
      const auto& sc = amb.components()[static_cast<size_t>(src_comp)];
      Scalar sign = -sign_of(field, j - 1);
      for (int col = 0; col < sc.size; ++col)
        matrix.add(out_row(block, amb.labels_at(src_comp, col)),
                   sc.offset + col, sign);
    }
  }

  auto system = std::make_shared<TanSystem>(
      TanSystem{std::move(ambient), std::move(rows), std::move(matrix)});
  return system;
}

NerveEngine::Entry& NerveEngine::entry(const Necklace& t,
                                       const std::vector<int>& objects) {
  // caller holds mutex_
  auto key = std::pair{t, objects};
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    Entry e;
    e.ambient = std::make_shared<const NerveAmbient>(cat_, t, objects);
    it = cache_.emplace(key, std::move(e)).first;
  }
  return it->second;
}

std::shared_ptr<const NerveAmbient> NerveEngine::ambient(
    const Necklace& t, const std::vector<int>& objects) {
  std::lock_guard<std::mutex> lock(mutex_);
  return entry(t, objects).ambient;
}

std::shared_ptr<const TanSystem> NerveEngine::tan_system(
    const Necklace& t, const std::vector<int>& objects) {
  std::lock_guard<std::mutex> lock(mutex_);
  Entry& e = entry(t, objects);
  if (!e.system) e.system = build_tan_system(e.ambient);
  return e.system;
}

const std::vector<NerveElement>& NerveEngine::nerve_basis(
    const Necklace& t, const std::vector<int>& objects) {
  std::lock_guard<std::mutex> lock(mutex_);
  Entry& e = entry(t, objects);
  if (!e.system) e.system = build_tan_system(e.ambient);
  if (!e.basis) {
    auto vectors = kernel_basis(e.system->matrix);
    auto basis = std::make_shared<std::vector<NerveElement>>();
    for (auto& v : vectors) basis->emplace_back(e.ambient, std::move(v));
    e.basis = std::move(basis);
  }
  return *e.basis;
}

int NerveEngine::dimension(const Necklace& t, const std::vector<int>& objects) {
  return static_cast<int>(nerve_basis(t, objects).size());
}

std::vector<TanResidual> tan_residuals(const NerveElement& y) {
  auto system = build_tan_system(y.ambient_ptr());
  auto values = system->matrix.apply(y.dense());
  const auto& amb = y.ambient();
  const AInftyCategory& cat = amb.category();
  std::vector<TanResidual> out;
  for (size_t r = 0; r < values.size(); ++r) {
    if (values[r].is_zero()) continue;
    const TanRow& row = system->rows[r];
    // rebuild the residual tensor for this (g, bead) pair
    const auto& c = amb.components()[static_cast<size_t>(row.component)];
    std::vector<int> out_degrees = c.degrees;
    out_degrees[static_cast<size_t>(row.bead - 1)] -= 1;
    TanResidual* slot = nullptr;
    for (auto& existing : out)
      if (existing.component == row.component && existing.bead == row.bead)
        slot = &existing;
    if (!slot) {
      out.push_back(TanResidual{row.component, row.bead,
                                TensorElement(cat.field(), out_degrees)});
      slot = &out.back();
    }
    std::vector<int> dims;
    for (size_t i = 0; i < out_degrees.size(); ++i)
      dims.push_back(cat.hom_dim(c.path[i], c.path[i + 1],
                                 out_degrees[i]));
    std::vector<int> labels(dims.size(), 0);
    int rest = row.out_label;
    for (size_t i = dims.size(); i-- > 0;) {
      labels[i] = rest % dims[i];
      rest /= dims[i];
    }
    slot->value.add(TensorKey{c.path, labels}, values[r]);
  }
  return out;
}

namespace {

// The bar functor on a spine-collapsing epi e: U ->> U': copies the factor
// for identity beads and inserts the unit for collapsed ones; null for
// everything else.
struct BarAction {
  bool nonzero = false;
  // for each bead of U: the factor index of U' it copies, or -1 for a unit
  std::vector<int> source_factor;
};

BarAction bar_action(const NecklaceMap& e) {
  BarAction action;
  auto cls = classify(e);
  if (!(cls.active && cls.surjective && cls.spine_collapsing)) return action;
  action.nonzero = true;
  const auto& joints = e.src().joints();
  int at = 0;
  for (size_t i = 1; i < joints.size(); ++i) {
    int n = joints[i] - joints[i - 1];
    int m = e(joints[i]) - e(joints[i - 1]);
    if (m == n)
      action.source_factor.push_back(at++);
    else
      action.source_factor.push_back(-1);  // a collapsed Delta^1
  }
  return action;
}

}  // namespace

NerveElement structure_map(NerveEngine& engine, const NecklaceMap& f,
                           const NerveElement& y) {
  const auto& src_amb = y.ambient();
  if (f.dst() != src_amb.necklace())
    fail("structure_map: map must land in the element's necklace");
  std::vector<int> objects;
  for (int v : f.values())
    objects.push_back(src_amb.objects()[static_cast<size_t>(v)]);
  auto out_amb = engine.ambient(f.src(), objects);
  NerveElement out(out_amb);
  const AInftyCategory& cat = src_amb.category();

  for (int ci = 0; ci < static_cast<int>(out_amb->components().size()); ++ci) {
    const auto& c = out_amb->components()[static_cast<size_t>(ci)];
    if (c.size == 0) continue;
    auto [e, gprime] = factor_epi_mono(compose(f, c.g));
    auto action = bar_action(e);
    if (!action.nonzero) continue;
    int src_comp = src_amb.component_index(gprime);
    const auto& sc = src_amb.components()[static_cast<size_t>(src_comp)];
    // transport each stored coordinate of the source component
    auto it = y.coords().lower_bound(sc.offset);
    for (; it != y.coords().end() && it->first < sc.offset + sc.size; ++it) {
      auto src_labels = src_amb.labels_at(src_comp, it->first - sc.offset);
      std::vector<int> labels;
      for (size_t b = 0; b < action.source_factor.size(); ++b) {
        int sf = action.source_factor[b];
        if (sf >= 0) {
          labels.push_back(src_labels[static_cast<size_t>(sf)]);
        } else {
          labels.push_back(cat.unit_label(c.path[b]));
        }
      }
      out.add(out_amb->column(ci, labels), it->second);
    }
  }
  return out;
}

NerveElement face(NerveEngine& engine, int j, const NerveElement& y) {
  const Necklace& t = y.ambient().necklace();
  if (t.bead_count() != 1) fail("face: element must live over a simplex");
  int n = t.spine();
  if (j <= 0 || j >= n) fail("face: only inner faces exist");
  return structure_map(engine, delta_map(n, j), y);
}

NerveElement degeneracy(NerveEngine& engine, int i, const NerveElement& y) {
  const Necklace& t = y.ambient().necklace();
  if (t.bead_count() > 1) fail("degeneracy: element must live over a simplex");
  int n = t.spine();
  if (i < 0 || i > n) fail("degeneracy: index out of range");
  return structure_map(engine, sigma_map(n, i), y);
}

NerveElement comult(NerveEngine& engine, int p, int q, const NerveElement& y) {
  const Necklace& t = y.ambient().necklace();
  if (t.bead_count() != 1) fail("comult: element must live over a simplex");
  if (p <= 0 || q <= 0 || p + q != t.spine())
    fail("comult: parts must be positive and sum to the spine");
  NecklaceMap nu = nu_map({p, q});
  return structure_map(engine, nu, y);
}

NerveElement tensor_elements(NerveEngine& engine, const NerveElement& y1,
                             const NerveElement& y2) {
  const auto& a1 = y1.ambient();
  const auto& a2 = y2.ambient();
  if (a1.to_object() != a2.from_object())
    fail("tensor_elements: endpoint mismatch");
  Necklace t = wedge(a1.necklace(), a2.necklace());
  std::vector<int> objects = a1.objects();
  objects.insert(objects.end(), a2.objects().begin() + 1, a2.objects().end());
  auto out_amb = engine.ambient(t, objects);
  NerveElement out(out_amb);

  for (int ci = 0; ci < static_cast<int>(out_amb->components().size()); ++ci) {
    const auto& c = out_amb->components()[static_cast<size_t>(ci)];
    if (c.size == 0) continue;
    auto [g1, g2] = split_injective(c.g, a1.necklace(), a2.necklace());
    int c1 = a1.component_index(g1);
    int c2 = a2.component_index(g2);
    const auto& sc1 = a1.components()[static_cast<size_t>(c1)];
    const auto& sc2 = a2.components()[static_cast<size_t>(c2)];
    auto it1 = y1.coords().lower_bound(sc1.offset);
    for (; it1 != y1.coords().end() && it1->first < sc1.offset + sc1.size;
         ++it1) {
      auto l1 = a1.labels_at(c1, it1->first - sc1.offset);
      auto it2 = y2.coords().lower_bound(sc2.offset);
      for (; it2 != y2.coords().end() && it2->first < sc2.offset + sc2.size;
           ++it2) {
        auto l2 = a2.labels_at(c2, it2->first - sc2.offset);
        std::vector<int> labels = l1;
        labels.insert(labels.end(), l2.begin(), l2.end());
        out.add(out_amb->column(ci, labels), it1->second * it2->second);
      }
    }
  }
  return out;
}

NerveElement functor_image(const AInftyFunctor& f, NerveEngine& target_engine,
                           const NerveElement& y) {
  const auto& src_amb = y.ambient();
  if (&f.source() != &src_amb.category() &&
      f.source_ptr().get() != src_amb.category_ptr().get())
    fail("functor_image: element lives over a different category");
  std::vector<int> objects;
  for (int o : src_amb.objects()) objects.push_back(f.map_object(o));
  auto out_amb = target_engine.ambient(src_amb.necklace(), objects);
  NerveElement out(out_amb);
  const Field& field = f.target().field();

  for (int ci = 0; ci < static_cast<int>(out_amb->components().size()); ++ci) {
    const auto& c = out_amb->components()[static_cast<size_t>(ci)];
    if (c.size == 0) continue;
    const Necklace& u = c.g.src();
    for (const auto& nu : enumerate_inert_into_necklace(u)) {
      NecklaceMap refined = compose(c.g, nu);
      int src_comp = src_amb.component_index(refined);
      const auto& sc = src_amb.components()[static_cast<size_t>(src_comp)];
      if (sc.size == 0) continue;
      // split nu over the beads of u and collect signature data
      const auto& uj = u.joints();
      std::vector<GradedOp> ops;
      long long printed = phi(nu);
      for (size_t i = 1; i < uj.size(); ++i) {
        std::vector<int> local{0};
        for (int v : nu.src().joints())
          if (v > uj[i - 1] && v <= uj[i]) local.push_back(v - uj[i - 1]);
        Necklace piece(uj[i] - uj[i - 1], local);
        printed += piece.signature();
        ops.push_back(f.component_op(piece.bead_count()));
      }
      Scalar sign = sign_of(field, printed);
      TensorElement part = apply_op_tensor(ops, y.component(src_comp),
                                           src_amb.category().convention());
      for (const auto& [key, coeff] : part.terms()) {
        // the term path is still in source objects; its image must agree
        // with the forced target path
        std::vector<int> mapped_path;
        for (int o : key.path) mapped_path.push_back(f.map_object(o));
        if (mapped_path != c.path) fail("functor_image: path drift");
        out.add(out_amb->column(ci, key.labels), coeff * sign);
      }
    }
  }
  return out;
}

}  // namespace tanerve
