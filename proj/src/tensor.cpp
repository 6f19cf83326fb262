#include "tanerve/tensor.hpp"

#include <numeric>
#include <stdexcept>

namespace tanerve {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("tensor: " + msg);
}

}  // namespace

SignConvention parse_convention(const std::string& text) {
  if (text == "koszul") return SignConvention::koszul;
  if (text == "plain") return SignConvention::plain;
  fail("bad sign convention '" + text + "' (expected koszul or plain)");
}

std::string describe(SignConvention conv) {
  return conv == SignConvention::koszul ? "koszul" : "plain";
}

void TensorElement::add(const TensorKey& key, const Scalar& coeff) {
  if (key.path.size() != key.labels.size() + 1 ||
      key.labels.size() != degrees_.size())
    fail("term shape does not match the degree vector");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void TensorElement::add_scaled(const TensorElement& other,
                               const Scalar& coeff) {
  if (other.degrees_ != degrees_) fail("degree vector mismatch");
  if (coeff.is_zero()) return;
  for (const auto& [key, value] : other.terms_) add(key, value * coeff);
}

Scalar TensorElement::coefficient(const TensorKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

bool TensorElement::operator==(const TensorElement& rhs) const {
  return degrees_ == rhs.degrees_ && terms_ == rhs.terms_;
}

TensorElement tensor(const TensorElement& x, const TensorElement& y) {
  std::vector<int> degrees = x.degrees();
  degrees.insert(degrees.end(), y.degrees().begin(), y.degrees().end());
  TensorElement out(x.field(), std::move(degrees));
  for (const auto& [kx, cx] : x.terms()) {
    for (const auto& [ky, cy] : y.terms()) {
      if (!kx.path.empty() && !ky.path.empty() &&
          kx.path.back() != ky.path.front())
        fail("object mismatch in tensor concatenation");
      TensorKey key;
      key.path = kx.path;
      if (key.path.empty())
        key.path = ky.path;
      else if (!ky.path.empty())
        key.path.insert(key.path.end(), ky.path.begin() + 1, ky.path.end());
      key.labels = kx.labels;
      key.labels.insert(key.labels.end(), ky.labels.begin(), ky.labels.end());
      out.add(key, cx * cy);
    }
  }
  return out;
}

TensorElement apply_graded_op(const GradedOp& op, int slot,
                              const TensorElement& x, SignConvention conv) {
  const auto& degrees = x.degrees();
  int l = x.factor_count();
  if (slot < 1 || op.arity < 1 || slot + op.arity - 1 > l)
    fail("slot/arity out of range");
  std::vector<int> sub_degrees(degrees.begin() + (slot - 1),
                               degrees.begin() + (slot - 1) + op.arity);
  int consumed = std::accumulate(sub_degrees.begin(), sub_degrees.end(), 0);
  std::vector<int> out_degrees;
  out_degrees.insert(out_degrees.end(), degrees.begin(),
                     degrees.begin() + (slot - 1));
  out_degrees.push_back(consumed + op.degree);
  out_degrees.insert(out_degrees.end(), degrees.begin() + (slot - 1) + op.arity,
                     degrees.end());
  TensorElement out(x.field(), std::move(out_degrees));

  for (const auto& [key, coeff] : x.terms()) {
    long long passed = 0;
    for (int i = 0; i < slot - 1; ++i) passed += degrees[static_cast<size_t>(i)];
    Scalar sign = conv == SignConvention::koszul
                      ? sign_of(x.field(), static_cast<long long>(op.degree) *
                                               passed)
                      : Scalar::one(x.field());
    std::vector<int> sub_path(key.path.begin() + (slot - 1),
                              key.path.begin() + (slot - 1) + op.arity + 1);
    std::vector<int> sub_labels(key.labels.begin() + (slot - 1),
                                key.labels.begin() + (slot - 1) + op.arity);
    auto value = op.eval(sub_path, sub_degrees, sub_labels);
    for (const auto& [out_label, out_coeff] : value) {
      TensorKey out_key;
      out_key.path.insert(out_key.path.end(), key.path.begin(),
                          key.path.begin() + (slot - 1) + 1);
      out_key.path.insert(out_key.path.end(),
                          key.path.begin() + (slot - 1) + op.arity,
                          key.path.end());
      out_key.labels.insert(out_key.labels.end(), key.labels.begin(),
                            key.labels.begin() + (slot - 1));
      out_key.labels.push_back(out_label);
      out_key.labels.insert(out_key.labels.end(),
                            key.labels.begin() + (slot - 1) + op.arity,
                            key.labels.end());
      out.add(out_key, coeff * sign * out_coeff);
    }
  }
  return out;
}

TensorElement apply_op_tensor(const std::vector<GradedOp>& ops,
                              const TensorElement& x, SignConvention conv) {
  const auto& degrees = x.degrees();
  int covered = 0;
  for (const auto& op : ops) covered += op.arity;
  if (covered != x.factor_count())
    fail("operator tensor must cover every factor");

  std::vector<int> block_start(ops.size());
  std::vector<long long> block_degree(ops.size(), 0);
  std::vector<int> out_degrees;
  int at = 0;
  for (size_t b = 0; b < ops.size(); ++b) {
    block_start[b] = at;
    int sum = 0;
    for (int i = 0; i < ops[b].arity; ++i)
      sum += degrees[static_cast<size_t>(at + i)];
    block_degree[b] = sum;
    out_degrees.push_back(sum + ops[b].degree);
    at += ops[b].arity;
  }
  long long sign_exp = 0;
  if (conv == SignConvention::koszul)
    for (size_t a = 0; a < ops.size(); ++a)
      for (size_t b = a + 1; b < ops.size(); ++b)
        sign_exp += static_cast<long long>(ops[b].degree) * block_degree[a];

  TensorElement out(x.field(), out_degrees);
  for (const auto& [key, coeff] : x.terms()) {
    // expand block by block
    std::vector<std::map<int, Scalar>> block_values;
    bool dead = false;
    for (size_t b = 0; b < ops.size() && !dead; ++b) {
      int s = block_start[b];
      std::vector<int> sub_path(key.path.begin() + s,
                                key.path.begin() + s + ops[b].arity + 1);
      std::vector<int> sub_degrees(degrees.begin() + s,
                                   degrees.begin() + s + ops[b].arity);
      std::vector<int> sub_labels(key.labels.begin() + s,
                                  key.labels.begin() + s + ops[b].arity);
      block_values.push_back(ops[b].eval(sub_path, sub_degrees, sub_labels));
      if (block_values.back().empty()) dead = true;
    }
    if (dead) continue;
    std::vector<std::map<int, Scalar>::const_iterator> cursor;
    for (const auto& bv : block_values) cursor.push_back(bv.begin());
    while (true) {
      TensorKey out_key;
      Scalar c = coeff * sign_of(x.field(), sign_exp);
      for (size_t b = 0; b < ops.size(); ++b) {
        out_key.path.push_back(key.path[static_cast<size_t>(block_start[b])]);
        out_key.labels.push_back(cursor[b]->first);
        c *= cursor[b]->second;
      }
      out_key.path.push_back(key.path.back());
      out.add(out_key, c);
      size_t b = ops.size();
      while (b > 0) {
        --b;
        if (++cursor[b] != block_values[b].end()) break;
        cursor[b] = block_values[b].begin();
        if (b == 0) {
          b = ops.size() + 1;
          break;
        }
      }
      if (b == ops.size() + 1 || ops.empty()) break;
    }
  }
  return out;
}

}  // namespace tanerve
