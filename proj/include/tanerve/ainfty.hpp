#pragma once

#include "tanerve/scalar.hpp"
#include "tanerve/tensor.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace tanerve {

struct CheckIssue {
  std::string location;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckIssue> issues;
  bool ok() const { return issues.empty(); }
  void add(std::string location, std::string detail) {
    issues.push_back({std::move(location), std::move(detail)});
  }
};

// A basis tuple of composable hom factors.
struct FactorTuple {
  std::vector<int> path;     // objects, length k+1
  std::vector<int> degrees;  // length k
  std::vector<int> labels;   // length k

  auto operator<=>(const FactorTuple&) const = default;
};

// A finite strictly unital A-infinity category with chosen bases. Hom
// spaces are concentrated in degrees 0..dmax. Multiplication tables are
// stored on non-unit basis tuples only; unit behaviour is synthesized from
// the strict unit laws.
class AInftyCategory {
 public:
  friend class CategoryBuilder;

  const Field& field() const { return field_; }
  SignConvention convention() const { return conv_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  const std::vector<std::string>& objects() const { return objects_; }
  int object_id(const std::string& name) const;
  const std::string& object_name(int id) const {
    return objects_[static_cast<size_t>(id)];
  }
  int dmax() const { return dmax_; }
  // Higher multiplications vanish for degree reasons beyond this arity.
  int arity_bound() const { return dmax_ + 2; }

  const std::vector<std::string>& hom_basis(int a, int b, int d) const;
  int hom_dim(int a, int b, int d) const;
  int label_id(int a, int b, int d, const std::string& label) const;
  int unit_label(int a) const { return unit_label_[static_cast<size_t>(a)]; }
  bool is_unit_factor(int a, int b, int d, int label) const;

  // m_k on a basis tuple, with strict-unit synthesis; sparse result in
  // hom(path.front(), path.back(), sum(degrees) + k - 2).
  std::map<int, Scalar> mult(int k, const std::vector<int>& path,
                             const std::vector<int>& degrees,
                             const std::vector<int>& labels) const;
  GradedOp mult_op(int k) const;
  bool mult_table_empty(int k) const;
  // True if some stored m_k entry with the given arity is nonzero.
  bool has_nonzero_table(int k) const;

  std::vector<FactorTuple> composable_tuples(int k) const;

  AInftyCategory with_convention(SignConvention conv) const;

 private:
  Field field_ = Field::rationals();
  SignConvention conv_ = SignConvention::koszul;
  std::vector<std::string> objects_;
  std::map<std::string, int> object_ids_;
  int dmax_ = 0;
  std::map<std::tuple<int, int, int>, std::vector<std::string>> homs_;
  std::map<std::tuple<int, int, int>, std::map<std::string, int>> label_ids_;
  std::vector<int> unit_label_;
  std::map<int, std::map<FactorTuple, std::map<int, Scalar>>> tables_;
};

class CategoryBuilder {
 public:
  explicit CategoryBuilder(Field field,
                           SignConvention conv = SignConvention::koszul);
  int add_object(const std::string& name);
  void add_hom(const std::string& from, const std::string& to, int degree,
               const std::vector<std::string>& basis);
  void set_unit(const std::string& obj, const std::string& label);
  void add_mult(int k,
                const std::vector<std::tuple<std::string, std::string, int,
                                             std::string>>& inputs,
                const std::string& out_label, const Scalar& coeff);
  // Validates units and table shapes.
  AInftyCategory build();

 private:
  AInftyCategory cat_;
  std::vector<std::tuple<int, std::vector<std::tuple<std::string, std::string,
                                                     int, std::string>>,
                         std::string, Scalar>>
      pending_mults_;
  std::map<std::string, std::string> pending_units_;
  bool built_ = false;
};

// A strictly unital A-infinity functor with component tables f_k of degree
// k-1, stored on non-unit tuples; unit behaviour synthesized.
class AInftyFunctor {
 public:
  AInftyFunctor(std::shared_ptr<const AInftyCategory> source,
                std::shared_ptr<const AInftyCategory> target,
                std::vector<int> object_map);

  const AInftyCategory& source() const { return *source_; }
  const AInftyCategory& target() const { return *target_; }
  std::shared_ptr<const AInftyCategory> source_ptr() const { return source_; }
  std::shared_ptr<const AInftyCategory> target_ptr() const { return target_; }
  int map_object(int a) const { return f0_[static_cast<size_t>(a)]; }
  const std::vector<int>& object_map() const { return f0_; }

  void add_component(int k, const FactorTuple& inputs, int out_label,
                     const Scalar& coeff);

  // f_k on a basis tuple of the source, sparse in
  // hom(f(path.front()), f(path.back()), sum(degrees) + k - 1).
  std::map<int, Scalar> component(int k, const std::vector<int>& path,
                                  const std::vector<int>& degrees,
                                  const std::vector<int>& labels) const;
  GradedOp component_op(int k) const;
  int arity_bound() const;
  bool has_nonzero_component(int k) const;

 private:
  std::shared_ptr<const AInftyCategory> source_;
  std::shared_ptr<const AInftyCategory> target_;
  std::vector<int> f0_;
  std::map<int, std::map<FactorTuple, std::map<int, Scalar>>> tables_;
};

// Residuals of the Stasheff relations for k = 1..k_max on every basis
// tuple; failures are report content, not errors.
CheckReport check_relations(const AInftyCategory& a, int k_max);
// Default bound 2*arity_bound - 1, past which every term vanishes.
CheckReport check_relations(const AInftyCategory& a);
CheckReport check_units(const AInftyCategory& a);
CheckReport check_functor(const AInftyFunctor& f);

AInftyFunctor identity_functor(std::shared_ptr<const AInftyCategory> a);
AInftyFunctor compose_functors(const AInftyFunctor& g, const AInftyFunctor& f);

// Validates that the input is a dg-category (no m_k for k > 2, associative
// m_2, Leibniz rule); throws otherwise.
AInftyCategory from_dg(const AInftyCategory& candidate);
// Reindexes homs along a map of object sets into Ob(a).
AInftyCategory pullback(const std::vector<std::string>& new_objects,
                        const std::vector<int>& to_old,
                        const AInftyCategory& a);
// The cosimplicial dg-category A_infinity[Delta^n].
AInftyCategory standard_simplex_dg(int n, const Field& field,
                                   SignConvention conv);
// The dg-functor A_infinity[Delta^m] -> A_infinity[Delta^n] induced by a
// monotone vertex map.
AInftyFunctor standard_simplex_functor(
    std::shared_ptr<const AInftyCategory> src,
    std::shared_ptr<const AInftyCategory> dst, const std::vector<int>& theta);

}  // namespace tanerve
