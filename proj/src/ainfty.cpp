#include "tanerve/ainfty.hpp"

#include "tanerve/necklace.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tanerve {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("ainfty: " + msg);
}

std::string tuple_str(const AInftyCategory& cat, const std::vector<int>& path,
                      const std::vector<int>& degrees,
                      const std::vector<int>& labels) {
  std::ostringstream os;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) os << " (x) ";
    os << cat.hom_basis(path[i], path[i + 1],
                        degrees[i])[static_cast<size_t>(labels[i])]
       << "[" << cat.object_name(path[i]) << "->"
       << cat.object_name(path[i + 1]) << ",d=" << degrees[i] << "]";
  }
  return os.str();
}

std::string sparse_str(const AInftyCategory& cat, int a, int b, int d,
                       const std::map<int, Scalar>& v) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [label, coeff] : v) {
    if (!first) os << " + ";
    os << coeff.str() << "*"
       << cat.hom_basis(a, b, d)[static_cast<size_t>(label)];
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

int AInftyCategory::object_id(const std::string& name) const {
  auto it = object_ids_.find(name);
  if (it == object_ids_.end()) fail("unknown object '" + name + "'");
  return it->second;
}

const std::vector<std::string>& AInftyCategory::hom_basis(int a, int b,
                                                          int d) const {
  static const std::vector<std::string> empty;
  auto it = homs_.find({a, b, d});
  return it == homs_.end() ? empty : it->second;
}

int AInftyCategory::hom_dim(int a, int b, int d) const {
  return static_cast<int>(hom_basis(a, b, d).size());
}

int AInftyCategory::label_id(int a, int b, int d,
                             const std::string& label) const {
  auto it = label_ids_.find({a, b, d});
  if (it != label_ids_.end()) {
    auto jt = it->second.find(label);
    if (jt != it->second.end()) return jt->second;
  }
  fail("unknown basis label '" + label + "' in hom(" + object_name(a) + "," +
       object_name(b) + ")_" + std::to_string(d));
}

bool AInftyCategory::is_unit_factor(int a, int b, int d, int label) const {
  return a == b && d == 0 && label == unit_label_[static_cast<size_t>(a)];
}

std::map<int, Scalar> AInftyCategory::mult(
    int k, const std::vector<int>& path, const std::vector<int>& degrees,
    const std::vector<int>& labels) const {
  if (k < 1 || static_cast<int>(labels.size()) != k ||
      path.size() != labels.size() + 1 || degrees.size() != labels.size())
    fail("mult: malformed input tuple");
  std::map<int, Scalar> out;
  int units = 0, unit_at = -1;
  for (int i = 0; i < k; ++i)
    if (is_unit_factor(path[static_cast<size_t>(i)],
                       path[static_cast<size_t>(i) + 1],
                       degrees[static_cast<size_t>(i)],
                       labels[static_cast<size_t>(i)])) {
      ++units;
      unit_at = i;
    }
  if (units > 0) {
    // strict unit laws: m_2 with a unit is the identity, everything else
    // with a unit input vanishes (including m_1 on units)
    if (k == 2) {
      int keep = unit_at == 0 ? 1 : 0;
      if (units == 2) keep = 0;  // unit times unit is the unit
      out.emplace(labels[static_cast<size_t>(keep)],
                  Scalar::one(field_));
    }
    return out;
  }
  auto kt = tables_.find(k);
  if (kt == tables_.end()) return out;
  FactorTuple key{path, degrees, labels};
  auto it = kt->second.find(key);
  if (it == kt->second.end()) return out;
  return it->second;
}

GradedOp AInftyCategory::mult_op(int k) const {
  GradedOp op;
  op.degree = k - 2;
  op.arity = k;
  op.eval = [this, k](const std::vector<int>& path,
                      const std::vector<int>& degrees,
                      const std::vector<int>& labels) {
    return mult(k, path, degrees, labels);
  };
  return op;
}

bool AInftyCategory::mult_table_empty(int k) const {
  auto it = tables_.find(k);
  return it == tables_.end() || it->second.empty();
}

bool AInftyCategory::has_nonzero_table(int k) const {
  auto it = tables_.find(k);
  if (it == tables_.end()) return false;
  for (const auto& [key, value] : it->second)
    if (!value.empty()) return true;
  return false;
}

std::vector<FactorTuple> AInftyCategory::composable_tuples(int k) const {
  std::vector<FactorTuple> out;
  FactorTuple cur;
  auto rec = [&](auto&& self, int depth, int at) -> void {
    if (depth == k) {
      out.push_back(cur);
      return;
    }
    for (int b = 0; b < object_count(); ++b) {
      for (int d = 0; d <= dmax_; ++d) {
        int dim = hom_dim(at, b, d);
        for (int l = 0; l < dim; ++l) {
          cur.path.push_back(b);
          cur.degrees.push_back(d);
          cur.labels.push_back(l);
          self(self, depth + 1, b);
          cur.path.pop_back();
          cur.degrees.pop_back();
          cur.labels.pop_back();
        }
      }
    }
  };
  for (int a = 0; a < object_count(); ++a) {
    cur = FactorTuple{{a}, {}, {}};
    rec(rec, 0, a);
  }
  return out;
}

AInftyCategory AInftyCategory::with_convention(SignConvention conv) const {
  AInftyCategory copy = *this;
  copy.conv_ = conv;
  return copy;
}

CategoryBuilder::CategoryBuilder(Field field, SignConvention conv) {
  cat_.field_ = field;
  cat_.conv_ = conv;
}

int CategoryBuilder::add_object(const std::string& name) {
  if (cat_.object_ids_.count(name)) fail("duplicate object '" + name + "'");
  int id = cat_.object_count();
  cat_.objects_.push_back(name);
  cat_.object_ids_[name] = id;
  return id;
}

void CategoryBuilder::add_hom(const std::string& from, const std::string& to,
                              int degree,
                              const std::vector<std::string>& basis) {
  if (degree < 0) fail("hom degrees must be non-negative");
  int a = cat_.object_id(from), b = cat_.object_id(to);
  auto& slot = cat_.homs_[{a, b, degree}];
  auto& ids = cat_.label_ids_[{a, b, degree}];
  for (const auto& label : basis) {
    if (ids.count(label))
      fail("duplicate label '" + label + "' in hom(" + from + "," + to +
           ")_" + std::to_string(degree));
    ids[label] = static_cast<int>(slot.size());
    slot.push_back(label);
  }
  cat_.dmax_ = std::max(cat_.dmax_, degree);
}

void CategoryBuilder::set_unit(const std::string& obj,
                               const std::string& label) {
  pending_units_[obj] = label;
}

void CategoryBuilder::add_mult(
    int k,
    const std::vector<std::tuple<std::string, std::string, int, std::string>>&
        inputs,
    const std::string& out_label, const Scalar& coeff) {
  pending_mults_.emplace_back(k, inputs, out_label, coeff);
}

AInftyCategory CategoryBuilder::build() {
  if (built_) fail("builder already consumed");
  built_ = true;
  cat_.unit_label_.assign(static_cast<size_t>(cat_.object_count()), -1);
  for (int a = 0; a < cat_.object_count(); ++a) {
    auto it = pending_units_.find(cat_.object_name(a));
    if (it == pending_units_.end())
      fail("object '" + cat_.object_name(a) + "' has no unit");
    cat_.unit_label_[static_cast<size_t>(a)] =
        cat_.label_id(a, a, 0, it->second);
  }
  for (const auto& [k, inputs, out_label, coeff] : pending_mults_) {
    if (k < 1) fail("m_k arity must be positive");
    if (static_cast<int>(inputs.size()) != k)
      fail("m_" + std::to_string(k) + " entry with " +
           std::to_string(inputs.size()) + " inputs");
    FactorTuple key;
    int degree_sum = 0;
    for (const auto& [from, to, d, label] : inputs) {
      int a = cat_.object_id(from), b = cat_.object_id(to);
      if (!key.path.empty() && key.path.back() != a)
        fail("m_" + std::to_string(k) + " inputs are not composable");
      if (key.path.empty()) key.path.push_back(a);
      key.path.push_back(b);
      key.degrees.push_back(d);
      int l = cat_.label_id(a, b, d, label);
      if (cat_.is_unit_factor(a, b, d, l))
        fail("multiplication tables may not mention units; the strict unit "
             "laws are synthesized");
      key.labels.push_back(l);
      degree_sum += d;
    }
    int out_degree = degree_sum + k - 2;
    int a = key.path.front(), b = key.path.back();
    if (out_degree < 0 || out_degree > cat_.dmax_)
      fail("m_" + std::to_string(k) + " output degree " +
           std::to_string(out_degree) + " out of range");
    int out_id = cat_.label_id(a, b, out_degree, out_label);
    auto& cell = cat_.tables_[k][key];
    auto [it, inserted] = cell.emplace(out_id, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) cell.erase(it);
    }
  }
  return std::move(cat_);
}

AInftyFunctor::AInftyFunctor(std::shared_ptr<const AInftyCategory> source,
                             std::shared_ptr<const AInftyCategory> target,
                             std::vector<int> object_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      f0_(std::move(object_map)) {
  if (static_cast<int>(f0_.size()) != source_->object_count())
    fail("functor object map has wrong size");
  if (source_->field() != target_->field())
    fail("functor endpoints live over different fields");
  for (int id : f0_)
    if (id < 0 || id >= target_->object_count())
      fail("functor object map out of range");
}

void AInftyFunctor::add_component(int k, const FactorTuple& inputs,
                                  int out_label, const Scalar& coeff) {
  if (k < 1) fail("f_k arity must be positive");
  for (size_t i = 0; i < inputs.labels.size(); ++i)
    if (source_->is_unit_factor(inputs.path[i], inputs.path[i + 1],
                                inputs.degrees[i], inputs.labels[i]))
      fail("functor tables may not mention units");
  auto& cell = tables_[k][inputs];
  auto [it, inserted] = cell.emplace(out_label, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) cell.erase(it);
  }
}

std::map<int, Scalar> AInftyFunctor::component(
    int k, const std::vector<int>& path, const std::vector<int>& degrees,
    const std::vector<int>& labels) const {
  std::map<int, Scalar> out;
  int units = 0;
  for (size_t i = 0; i < labels.size(); ++i)
    if (source_->is_unit_factor(path[i], path[i + 1], degrees[i], labels[i]))
      ++units;
  if (units > 0) {
    if (k == 1)
      out.emplace(target_->unit_label(map_object(path.front())),
                  Scalar::one(target_->field()));
    return out;
  }
  auto kt = tables_.find(k);
  if (kt == tables_.end()) return out;
  auto it = kt->second.find(FactorTuple{path, degrees, labels});
  if (it == kt->second.end()) return out;
  return it->second;
}

GradedOp AInftyFunctor::component_op(int k) const {
  GradedOp op;
  op.degree = k - 1;
  op.arity = k;
  op.eval = [this, k](const std::vector<int>& path,
                      const std::vector<int>& degrees,
                      const std::vector<int>& labels) {
    return component(k, path, degrees, labels);
  };
  return op;
}

int AInftyFunctor::arity_bound() const {
  // f_k has degree k-1, so it vanishes identically once k-1 exceeds the
  // target degree cap
  return target_->dmax() + 1;
}

bool AInftyFunctor::has_nonzero_component(int k) const {
  auto it = tables_.find(k);
  if (it == tables_.end()) return false;
  for (const auto& [key, value] : it->second)
    if (!value.empty()) return true;
  return false;
}

namespace {

TensorElement unit_tuple_element(const AInftyCategory& cat,
                                 const FactorTuple& t) {
  TensorElement x(cat.field(), t.degrees);
  x.add(TensorKey{t.path, t.labels}, Scalar::one(cat.field()));
  return x;
}

// sum over r+s+t=k, s>=1 of (-1)^(r+st) outer(id^r (x) m_s (x) id^t)
// evaluated on the tuple; outer is m_{r+1+t} for the relation checker and
// f_{r+1+t} for the functor checker's left side.
std::map<int, Scalar> stasheff_side(
    const AInftyCategory& cat, const FactorTuple& t, int k,
    const std::function<std::map<int, Scalar>(int arity,
                                              const TensorElement&)>& outer) {
  std::map<int, Scalar> acc;
  for (int s = 1; s <= k; ++s) {
    for (int r = 0; r + s <= k; ++r) {
      int tt = k - r - s;
      TensorElement inner = apply_graded_op(cat.mult_op(s), r + 1,
                                            unit_tuple_element(cat, t),
                                            cat.convention());
      auto value = outer(r + 1 + tt, inner);
      Scalar sign = sign_of(cat.field(), r + static_cast<long long>(s) * tt);
      for (const auto& [label, coeff] : value) {
        auto [it, inserted] = acc.emplace(label, coeff * sign);
        if (!inserted) {
          it->second += coeff * sign;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
  }
  return acc;
}

std::map<int, Scalar> full_apply(const AInftyCategory& cat, const GradedOp& op,
                                 const TensorElement& x) {
  std::map<int, Scalar> acc;
  for (const auto& [key, coeff] : x.terms()) {
    auto value = op.eval(key.path, x.degrees(), key.labels);
    for (const auto& [label, c] : value) {
      auto [it, inserted] = acc.emplace(label, coeff * c);
      if (!inserted) {
        it->second += coeff * c;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  (void)cat;
  return acc;
}

}  // namespace

CheckReport check_relations(const AInftyCategory& a, int k_max) {
  if (k_max < 1) fail("check_relations: k_max must be positive");
  CheckReport report;
  for (int k = 1; k <= k_max; ++k) {
    for (const auto& t : a.composable_tuples(k)) {
      auto residual = stasheff_side(
          a, t, k, [&](int arity, const TensorElement& inner) {
            return full_apply(a, a.mult_op(arity), inner);
          });
      if (!residual.empty()) {
        int out_degree =
            std::accumulate(t.degrees.begin(), t.degrees.end(), 0) + k - 3;
        report.add("k=" + std::to_string(k) + " on " +
                       tuple_str(a, t.path, t.degrees, t.labels),
                   "residual " + sparse_str(a, t.path.front(), t.path.back(),
                                            out_degree, residual));
      }
    }
  }
  return report;
}

CheckReport check_relations(const AInftyCategory& a) {
  // past k = dmax + 3 every term of the relation lands in a zero hom
  return check_relations(a, a.arity_bound() + 1);
}

CheckReport check_units(const AInftyCategory& a) {
  CheckReport report;
  for (int x = 0; x < a.object_count(); ++x) {
    // units are degree-0 cycles
    std::vector<int> upath{x, x};
    auto du = a.mult(1, upath, {0}, {a.unit_label(x)});
    if (!du.empty())
      report.add("unit " + a.object_name(x), "differential of unit nonzero");
  }
  for (int x = 0; x < a.object_count(); ++x) {
    for (int b = 0; b < a.object_count(); ++b) {
      for (int d = 0; d <= a.dmax(); ++d) {
        for (int l = 0; l < a.hom_dim(x, b, d); ++l) {
          auto left = a.mult(2, {x, x, b}, {0, d}, {a.unit_label(x), l});
          std::map<int, Scalar> expect{{l, Scalar::one(a.field())}};
          if (left != expect)
            report.add("m2(u (x) id) on " +
                           a.hom_basis(x, b, d)[static_cast<size_t>(l)],
                       "not the identity");
          auto right = a.mult(2, {x, b, b}, {d, 0}, {l, a.unit_label(b)});
          if (right != expect)
            report.add("m2(id (x) u) on " +
                           a.hom_basis(x, b, d)[static_cast<size_t>(l)],
                       "not the identity");
        }
      }
    }
  }
  // higher multiplications must vanish on any unit input
  for (int k = 3; k <= a.arity_bound(); ++k) {
    for (const auto& t : a.composable_tuples(k)) {
      bool has_unit = false;
      for (size_t i = 0; i < t.labels.size(); ++i)
        if (a.is_unit_factor(t.path[i], t.path[i + 1], t.degrees[i],
                             t.labels[i]))
          has_unit = true;
      if (!has_unit) continue;
      if (!a.mult(k, t.path, t.degrees, t.labels).empty())
        report.add("m" + std::to_string(k) + " on " +
                       tuple_str(a, t.path, t.degrees, t.labels),
                   "nonzero on a unit input");
    }
  }
  return report;
}

CheckReport check_functor(const AInftyFunctor& f) {
  CheckReport report;
  const AInftyCategory& a = f.source();
  const AInftyCategory& b = f.target();
  // unit conditions
  for (int x = 0; x < a.object_count(); ++x) {
    auto v = f.component(1, {x, x}, {0}, {a.unit_label(x)});
    std::map<int, Scalar> expect{
        {b.unit_label(f.map_object(x)), Scalar::one(b.field())}};
    if (v != expect)
      report.add("f1 on unit " + a.object_name(x), "unit not preserved");
  }
  // both sides of the relation at k land in degree >= k - 2, so the
  // relation is vacuous once k exceeds the target degree cap plus two
  int k_max = std::max(a.arity_bound(), b.arity_bound()) + 1;
  for (int k = 1; k <= k_max; ++k) {
    for (const auto& t : a.composable_tuples(k)) {
      // left: sum (-1)^(r+st) f_{r+1+t}(id^r (x) m_s (x) id^t)
      auto lhs = stasheff_side(
          a, t, k, [&](int arity, const TensorElement& inner) {
            return full_apply(b, f.component_op(arity), inner);
          });
      // right: sum (-1)^eps_g m_r(f_{i_1} (x) ... (x) f_{i_r})
      std::map<int, Scalar> rhs;
      std::vector<int> parts;
      auto emit = [&]() {
        std::vector<GradedOp> ops;
        for (int i : parts) ops.push_back(f.component_op(i));
        TensorElement mapped = apply_op_tensor(
            ops, unit_tuple_element(a, t), a.convention());
        auto value = full_apply(
            b, b.mult_op(static_cast<int>(parts.size())), mapped);
        Scalar sign = sign_of(b.field(), eps_g(parts));
        for (const auto& [label, coeff] : value) {
          auto [it, inserted] = rhs.emplace(label, coeff * sign);
          if (!inserted) {
            it->second += coeff * sign;
            if (it->second.is_zero()) rhs.erase(it);
          }
        }
      };
      auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
          emit();
          return;
        }
        for (int i = 1; i <= remaining; ++i) {
          parts.push_back(i);
          self(self, remaining - i);
          parts.pop_back();
        }
      };
      rec(rec, k);
      if (lhs != rhs)
        report.add("functor relation k=" + std::to_string(k) + " on " +
                       tuple_str(a, t.path, t.degrees, t.labels),
                   "sides differ");
    }
  }
  return report;
}

AInftyFunctor identity_functor(std::shared_ptr<const AInftyCategory> a) {
  std::vector<int> f0(static_cast<size_t>(a->object_count()));
  std::iota(f0.begin(), f0.end(), 0);
  AInftyFunctor f(a, a, std::move(f0));
  for (const auto& t : a->composable_tuples(1)) {
    if (a->is_unit_factor(t.path[0], t.path[1], t.degrees[0], t.labels[0]))
      continue;
    f.add_component(1, t, t.labels[0], Scalar::one(a->field()));
  }
  return f;
}

AInftyFunctor compose_functors(const AInftyFunctor& g, const AInftyFunctor& f) {
  if (f.target_ptr().get() != g.source_ptr().get())
    fail("compose_functors: object maps are not composable");
  std::vector<int> f0;
  for (int x : f.object_map()) f0.push_back(g.map_object(x));
  AInftyFunctor gf(f.source_ptr(), g.target_ptr(), std::move(f0));
  const AInftyCategory& a = f.source();
  int bound = std::max({a.arity_bound(), f.arity_bound(), g.arity_bound()});
  for (int k = 1; k <= bound; ++k) {
    for (const auto& t : a.composable_tuples(k)) {
      bool has_unit = false;
      for (size_t i = 0; i < t.labels.size(); ++i)
        if (a.is_unit_factor(t.path[i], t.path[i + 1], t.degrees[i],
                             t.labels[i]))
          has_unit = true;
      if (has_unit) continue;
      std::map<int, Scalar> acc;
      std::vector<int> parts;
      auto emit = [&]() {
        std::vector<GradedOp> ops;
        for (int i : parts) ops.push_back(f.component_op(i));
        TensorElement mapped = apply_op_tensor(
            ops, unit_tuple_element(a, t), a.convention());
        auto value = full_apply(g.target(),
                                g.component_op(static_cast<int>(parts.size())),
                                mapped);
        Scalar sign = sign_of(a.field(), eps_g(parts));
        for (const auto& [label, coeff] : value) {
          auto [it, inserted] = acc.emplace(label, coeff * sign);
          if (!inserted) {
            it->second += coeff * sign;
            if (it->second.is_zero()) acc.erase(it);
          }
        }
      };
      auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
          emit();
          return;
        }
        for (int i = 1; i <= remaining; ++i) {
          parts.push_back(i);
          self(self, remaining - i);
          parts.pop_back();
        }
      };
      rec(rec, k);
      for (const auto& [label, coeff] : acc)
        gf.add_component(k, t, label, coeff);
    }
  }
  return gf;
}

AInftyCategory from_dg(const AInftyCategory& candidate) {
  for (int k = 3; k <= candidate.arity_bound(); ++k)
    if (candidate.has_nonzero_table(k))
      fail("from_dg: input has a nonzero m_" + std::to_string(k));
  auto report = check_relations(candidate, 3);
  if (!report.ok())
    fail("from_dg: input is not a dg-category (" +
         report.issues.front().location + ")");
  return candidate;
}

AInftyCategory pullback(const std::vector<std::string>& new_objects,
                        const std::vector<int>& to_old,
                        const AInftyCategory& a) {
  if (new_objects.size() != to_old.size())
    fail("pullback: object list and map must have equal length");
  CategoryBuilder builder(a.field(), a.convention());
  for (const auto& name : new_objects) builder.add_object(name);
  for (size_t x = 0; x < to_old.size(); ++x) {
    for (size_t y = 0; y < to_old.size(); ++y) {
      for (int d = 0; d <= a.dmax(); ++d) {
        const auto& basis = a.hom_basis(to_old[x], to_old[y], d);
        if (!basis.empty())
          builder.add_hom(new_objects[x], new_objects[y], d, basis);
      }
    }
    builder.set_unit(new_objects[x],
                     a.hom_basis(to_old[x], to_old[x],
                                 0)[static_cast<size_t>(
                         a.unit_label(to_old[x]))]);
  }
  // re-route every stored table entry along all preimage paths
  for (int k = 1; k <= a.arity_bound(); ++k) {
    for (const auto& t : a.composable_tuples(k)) {
      auto value = a.mult(k, t.path, t.degrees, t.labels);
      if (value.empty()) continue;
      bool has_unit = false;
      for (size_t i = 0; i < t.labels.size(); ++i)
        if (a.is_unit_factor(t.path[i], t.path[i + 1], t.degrees[i],
                             t.labels[i]))
          has_unit = true;
      if (has_unit) continue;
      // preimage paths
      std::vector<std::vector<int>> fibers(t.path.size());
      bool reachable = true;
      for (size_t i = 0; i < t.path.size(); ++i) {
        for (size_t x = 0; x < to_old.size(); ++x)
          if (to_old[x] == t.path[i]) fibers[i].push_back(static_cast<int>(x));
        if (fibers[i].empty()) reachable = false;
      }
      if (!reachable) continue;
      std::vector<int> choice(t.path.size(), 0);
      while (true) {
        std::vector<std::tuple<std::string, std::string, int, std::string>>
            inputs;
        for (size_t i = 0; i < t.labels.size(); ++i) {
          inputs.emplace_back(
              new_objects[static_cast<size_t>(
                  fibers[i][static_cast<size_t>(choice[i])])],
              new_objects[static_cast<size_t>(
                  fibers[i + 1][static_cast<size_t>(choice[i + 1])])],
              t.degrees[i],
              a.hom_basis(t.path[i], t.path[i + 1],
                          t.degrees[i])[static_cast<size_t>(t.labels[i])]);
        }
        int out_degree =
            std::accumulate(t.degrees.begin(), t.degrees.end(), 0) + k - 2;
        for (const auto& [label, coeff] : value)
          builder.add_mult(k, inputs,
                           a.hom_basis(t.path.front(), t.path.back(),
                                       out_degree)[static_cast<size_t>(label)],
                           coeff);
        size_t i = choice.size();
        while (i > 0) {
          --i;
          if (++choice[i] < static_cast<int>(fibers[i].size())) break;
          choice[i] = 0;
          if (i == 0) {
            i = choice.size() + 1;
            break;
          }
        }
        if (i == choice.size() + 1) break;
      }
    }
  }
  return builder.build();
}

AInftyCategory standard_simplex_dg(int n, const Field& field,
                                   SignConvention conv) {
  if (n < 0) fail("standard_simplex_dg: n must be non-negative");
  CategoryBuilder builder(field, conv);
  auto name = [](int i) { return std::to_string(i); };
  auto gen = [](int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int i = 0; i <= n; ++i) builder.add_object(name(i));
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      builder.add_hom(name(i), name(j), 0, {gen(i, j)});
  for (int i = 0; i <= n; ++i) builder.set_unit(name(i), gen(i, i));
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        builder.add_mult(2,
                         {{name(i), name(j), 0, gen(i, j)},
                          {name(j), name(k), 0, gen(j, k)}},
                         gen(i, k), Scalar::one(field));
  return builder.build();
}

AInftyFunctor standard_simplex_functor(
    std::shared_ptr<const AInftyCategory> src,
    std::shared_ptr<const AInftyCategory> dst, const std::vector<int>& theta) {
  if (static_cast<int>(theta.size()) != src->object_count())
    fail("standard_simplex_functor: vertex map has wrong length");
  for (size_t i = 1; i < theta.size(); ++i)
    if (theta[i] < theta[i - 1])
      fail("standard_simplex_functor: vertex map must be monotone");
  AInftyFunctor f(src, dst, std::vector<int>(theta));
  int n = src->object_count() - 1;
  auto gen = [](int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      if (i == j) continue;  // units are synthesized
      FactorTuple t{{i, j}, {0}, {src->label_id(i, j, 0, gen(i, j))}};
      int out = dst->label_id(theta[static_cast<size_t>(i)],
                              theta[static_cast<size_t>(j)], 0,
                              gen(theta[static_cast<size_t>(i)],
                                  theta[static_cast<size_t>(j)]));
      f.add_component(1, t, out, Scalar::one(src->field()));
    }
  }
  return f;
}

}  // namespace tanerve
