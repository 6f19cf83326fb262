#pragma once

#include "tanerve/scalar.hpp"

#include <functional>
#include <map>
#include <vector>

namespace tanerve {

// Whether applying a graded operator in a tensor slot picks up the Koszul
// operator-passing sign from the factors it moves past. Resolved against
// the identity suite; koszul is the convention that passes and ships as
// the default.
enum class SignConvention { koszul, plain };

SignConvention parse_convention(const std::string& text);
std::string describe(SignConvention conv);

// One basis summand of an element of a tensor space over the object set:
// an object path c_0, ..., c_l and one basis-label index per factor.
struct TensorKey {
  std::vector<int> path;    // length l+1, object ids
  std::vector<int> labels;  // length l, basis indices within each hom

  auto operator<=>(const TensorKey&) const = default;
};

// A sparse element of a tensor space with fixed factor degrees. Zero
// coefficients are never stored. The degree vector is shared by all terms;
// paths may differ term by term.
class TensorElement {
 public:
  TensorElement(Field field, std::vector<int> degrees)
      : field_(field), degrees_(std::move(degrees)) {}

  const Field& field() const { return field_; }
  const std::vector<int>& degrees() const { return degrees_; }
  int factor_count() const { return static_cast<int>(degrees_.size()); }
  const std::map<TensorKey, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const TensorKey& key, const Scalar& coeff);
  void add_scaled(const TensorElement& other, const Scalar& coeff);
  Scalar coefficient(const TensorKey& key) const;

  bool operator==(const TensorElement& rhs) const;

 private:
  Field field_;
  std::vector<int> degrees_;
  std::map<TensorKey, Scalar> terms_;
};

// Bilinear concatenation; the end object of each x-term must match the
// start object of each y-term it meets.
TensorElement tensor(const TensorElement& x, const TensorElement& y);

// A homogeneous multilinear operator on consecutive tensor factors. Given
// the sub-path and sub-labels of the slots it consumes, it emits the sparse
// result as (label -> coefficient) pairs of the output hom, whose degree is
// the consumed degree sum plus the operator degree.
struct GradedOp {
  int degree = 0;
  int arity = 1;
  std::function<std::map<int, Scalar>(const std::vector<int>& sub_path,
                                      const std::vector<int>& sub_degrees,
                                      const std::vector<int>& sub_labels)>
      eval;
};

// Replaces factors slot..slot+arity-1 (1-based slot) of x by the operator
// value. Under the koszul convention the result is scaled by
// (-1)^(degree * sum of the degrees of the factors before the slot).
TensorElement apply_graded_op(const GradedOp& op, int slot,
                              const TensorElement& x, SignConvention conv);

// Applies op_1 x ... x op_r to consecutive blocks covering every factor of
// x, one output factor per operator. Under the koszul convention each pair
// (block a, op_b) with a < b contributes (-1)^(deg op_b * deg block a).
TensorElement apply_op_tensor(const std::vector<GradedOp>& ops,
                              const TensorElement& x, SignConvention conv);

}  // namespace tanerve
