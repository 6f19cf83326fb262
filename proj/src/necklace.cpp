#include "tanerve/necklace.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tanerve {

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("necklace: " + msg);
}

}  // namespace

Necklace::Necklace(int spine, std::vector<int> joints)
    : spine_(spine), joints_(std::move(joints)) {
  if (spine_ < 0) fail("negative spine");
  if (joints_.empty() || joints_.front() != 0 || joints_.back() != spine_)
    fail("joints must contain 0 and the spine length");
  for (size_t i = 1; i < joints_.size(); ++i)
    if (joints_[i] <= joints_[i - 1]) fail("joints must strictly increase");
}

Necklace Necklace::simplex(int n) {
  if (n < 0) fail("negative simplex dimension");
  if (n == 0) return Necklace();
  return Necklace(n, {0, n});
}

Necklace Necklace::from_beads(const std::vector<int>& beads) {
  std::vector<int> joints{0};
  int p = 0;
  for (int b : beads) {
    if (b < 1) fail("bead lengths must be positive");
    p += b;
    joints.push_back(p);
  }
  return Necklace(p, std::move(joints));
}

Necklace Necklace::parse(const std::string& text) {
  if (text.empty()) return Necklace();
  std::vector<int> beads;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(part, &pos);
    } catch (const std::exception&) {
      fail("bad bead length '" + part + "'");
    }
    if (pos != part.size()) fail("bad bead length '" + part + "'");
    beads.push_back(value);
  }
  if (beads.empty()) fail("bad necklace encoding '" + text + "'");
  return from_beads(beads);
}

std::vector<int> Necklace::beads() const {
  std::vector<int> out;
  for (size_t i = 1; i < joints_.size(); ++i)
    out.push_back(joints_[i] - joints_[i - 1]);
  return out;
}

int Necklace::signature() const { return eps_g(beads()); }

bool Necklace::is_joint(int v) const {
  return std::binary_search(joints_.begin(), joints_.end(), v);
}

Necklace Necklace::bead(int k) const {
  if (k < 1 || k > bead_count()) fail("bead index out of range");
  return Necklace::simplex(joints_[static_cast<size_t>(k)] -
                           joints_[static_cast<size_t>(k - 1)]);
}

Necklace Necklace::before(int k) const {
  if (k < 1 || k > bead_count()) fail("bead index out of range");
  int cut = joints_[static_cast<size_t>(k - 1)];
  std::vector<int> joints(joints_.begin(), joints_.begin() + k);
  if (joints.empty() || joints.back() != cut) joints.push_back(cut);
  return Necklace(cut, std::move(joints));
}

Necklace Necklace::after(int k) const {
  if (k < 1 || k > bead_count()) fail("bead index out of range");
  int cut = joints_[static_cast<size_t>(k)];
  std::vector<int> joints;
  for (size_t i = static_cast<size_t>(k); i < joints_.size(); ++i)
    joints.push_back(joints_[i] - cut);
  return Necklace(spine_ - cut, std::move(joints));
}

std::string Necklace::encode() const {
  std::string out;
  bool first = true;
  for (int b : beads()) {
    if (!first) out += ',';
    out += std::to_string(b);
    first = false;
  }
  return out;
}

Necklace wedge(const Necklace& a, const Necklace& b) {
  std::vector<int> joints = a.joints();
  for (int u : b.joints()) joints.push_back(a.spine() + u);
  std::sort(joints.begin(), joints.end());
  joints.erase(std::unique(joints.begin(), joints.end()), joints.end());
  return Necklace(a.spine() + b.spine(), std::move(joints));
}

NecklaceMap::NecklaceMap(Necklace src, Necklace dst, std::vector<int> values)
    : src_(std::move(src)), dst_(std::move(dst)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != src_.spine() + 1)
    fail("map must be defined on every vertex of the source spine");
  if (values_.front() != 0 || values_.back() != dst_.spine())
    fail("map must preserve endpoints");
  for (size_t i = 1; i < values_.size(); ++i)
    if (values_[i] < values_[i - 1]) fail("map must be monotone");
  for (int t : dst_.joints()) {
    bool hit = false;
    for (int v : src_.joints())
      if (values_[static_cast<size_t>(v)] == t) hit = true;
    if (!hit) fail("target joints must be covered by source joint images");
  }
}

NecklaceMap identity_map(const Necklace& t) {
  std::vector<int> values(static_cast<size_t>(t.spine()) + 1);
  std::iota(values.begin(), values.end(), 0);
  return NecklaceMap(t, t, std::move(values));
}

NecklaceMap compose(const NecklaceMap& f, const NecklaceMap& g) {
  if (g.dst() != f.src()) fail("compose: target of g must be source of f");
  std::vector<int> values;
  values.reserve(g.values().size());
  for (int v : g.values()) values.push_back(f(v));
  return NecklaceMap(g.src(), f.dst(), std::move(values));
}

NecklaceMap wedge(const NecklaceMap& a, const NecklaceMap& b) {
  Necklace src = wedge(a.src(), b.src());
  Necklace dst = wedge(a.dst(), b.dst());
  std::vector<int> values = a.values();
  for (size_t i = 1; i < b.values().size(); ++i)
    values.push_back(a.dst().spine() + b.values()[i]);
  return NecklaceMap(std::move(src), std::move(dst), std::move(values));
}

MapClass classify(const NecklaceMap& f) {
  MapClass c;
  const auto& vals = f.values();
  c.injective = true;
  for (size_t i = 1; i < vals.size(); ++i)
    if (vals[i] == vals[i - 1]) c.injective = false;
  std::set<int> image(vals.begin(), vals.end());
  c.surjective = static_cast<int>(image.size()) == f.dst().spine() + 1;
  c.inert = f.src().spine() == f.dst().spine();
  if (c.inert)
    for (size_t i = 0; i < vals.size(); ++i)
      if (vals[i] != static_cast<int>(i)) c.inert = false;
  std::set<int> joint_image;
  for (int v : f.src().joints()) joint_image.insert(f(v));
  c.active = joint_image ==
             std::set<int>(f.dst().joints().begin(), f.dst().joints().end());
  if (c.active && c.surjective) {
    c.spine_collapsing = true;
    c.bead_reducing = true;
    const auto& sj = f.src().joints();
    for (size_t i = 1; i < sj.size(); ++i) {
      int n = sj[i] - sj[i - 1];
      int m = f(sj[i]) - f(sj[i - 1]);
      if (m < 1) c.bead_reducing = false;
      if (!(m == n || (n == 1 && m == 0))) c.spine_collapsing = false;
    }
  }
  return c;
}

std::pair<NecklaceMap, NecklaceMap> factor_epi_mono(const NecklaceMap& f) {
  std::vector<int> image(f.values());
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  int m = static_cast<int>(image.size()) - 1;
  auto index_of = [&image](int w) {
    return static_cast<int>(std::lower_bound(image.begin(), image.end(), w) -
                            image.begin());
  };
  std::vector<int> mid_joints;
  for (int v : f.src().joints()) mid_joints.push_back(index_of(f(v)));
  std::sort(mid_joints.begin(), mid_joints.end());
  mid_joints.erase(std::unique(mid_joints.begin(), mid_joints.end()),
                   mid_joints.end());
  Necklace mid(m, mid_joints);
  std::vector<int> epi_values;
  for (int v : f.values()) epi_values.push_back(index_of(v));
  NecklaceMap e(f.src(), mid, std::move(epi_values));
  NecklaceMap mono(mid, f.dst(), image);
  return {std::move(e), std::move(mono)};
}

std::pair<NecklaceMap, NecklaceMap> factor_active_inert(const NecklaceMap& f) {
  std::vector<int> joint_image;
  for (int v : f.src().joints()) joint_image.push_back(f(v));
  std::sort(joint_image.begin(), joint_image.end());
  joint_image.erase(std::unique(joint_image.begin(), joint_image.end()),
                    joint_image.end());
  Necklace mid(f.dst().spine(), joint_image);
  NecklaceMap act(f.src(), mid, f.values());
  NecklaceMap ine = identity_map(f.dst());
  return {std::move(act), NecklaceMap(mid, f.dst(), ine.values())};
}

std::pair<NecklaceMap, NecklaceMap> split_injective(const NecklaceMap& g,
                                                    const Necklace& t1,
                                                    const Necklace& t2) {
  if (wedge(t1, t2) != g.dst())
    fail("split_injective: target is not the given wedge");
  if (!classify(g).injective)
    fail("split_injective: map must be injective");
  int p1 = t1.spine();
  // The middle joint of the wedge is hit by exactly one source joint.
  int cut = -1;
  for (int v : g.src().joints())
    if (g(v) == p1) cut = v;
  if (cut < 0) fail("split_injective: wedge joint not covered");
  std::vector<int> j1, j2;
  for (int v : g.src().joints()) {
    if (v <= cut) j1.push_back(v);
    if (v >= cut) j2.push_back(v - cut);
  }
  Necklace u1(cut, std::move(j1));
  Necklace u2(g.src().spine() - cut, std::move(j2));
  std::vector<int> v1(g.values().begin(), g.values().begin() + cut + 1);
  std::vector<int> v2;
  for (size_t i = static_cast<size_t>(cut); i < g.values().size(); ++i)
    v2.push_back(g.values()[i] - p1);
  return {NecklaceMap(std::move(u1), t1, std::move(v1)),
          NecklaceMap(std::move(u2), t2, std::move(v2))};
}

NecklaceMap compose_at(const NecklaceMap& g, int k, const NecklaceMap& f) {
  const Necklace& u = g.src();
  if (k < 1 || k > u.bead_count()) fail("compose_at: bead index out of range");
  if (f.dst() != u.bead(k))
    fail("compose_at: map must land in the selected bead");
  NecklaceMap padded = wedge(wedge(identity_map(u.before(k)), f),
                             identity_map(u.after(k)));
  return compose(g, padded);
}

std::vector<NecklaceMap> enumerate_injective_into(const Necklace& t) {
  std::vector<NecklaceMap> out;
  int p = t.spine();
  if (p == 0) {
    out.push_back(identity_map(t));
    return out;
  }
  // choose the image I (vertices, containing 0 and p and all joints of t),
  // then any source joint set containing the preimage of t's joints
  std::vector<int> interior;
  for (int v = 1; v < p; ++v) interior.push_back(v);
  int n_int = static_cast<int>(interior.size());
  for (int mask = 0; mask < (1 << n_int); ++mask) {
    std::vector<int> image{0};
    for (int i = 0; i < n_int; ++i)
      if (mask & (1 << i)) image.push_back(interior[static_cast<size_t>(i)]);
    image.push_back(p);
    bool covers = true;
    for (int j : t.joints())
      if (!std::binary_search(image.begin(), image.end(), j)) covers = false;
    if (!covers) continue;
    int q = static_cast<int>(image.size()) - 1;
    std::vector<int> forced;
    for (int v = 0; v <= q; ++v)
      if (t.is_joint(image[static_cast<size_t>(v)])) forced.push_back(v);
    std::vector<int> optional;
    for (int v = 1; v < q; ++v)
      if (!std::binary_search(forced.begin(), forced.end(), v))
        optional.push_back(v);
    int n_opt = static_cast<int>(optional.size());
    for (int sub = 0; sub < (1 << n_opt); ++sub) {
      std::vector<int> joints = forced;
      for (int i = 0; i < n_opt; ++i)
        if (sub & (1 << i)) joints.push_back(optional[static_cast<size_t>(i)]);
      std::sort(joints.begin(), joints.end());
      out.emplace_back(Necklace(q, std::move(joints)), t, image);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const NecklaceMap& a, const NecklaceMap& b) {
              auto ka = std::tuple(a.src().spine(), a.values(),
                                   a.src().joints());
              auto kb = std::tuple(b.src().spine(), b.values(),
                                   b.src().joints());
              return ka < kb;
            });
  return out;
}

std::vector<NecklaceMap> enumerate_inert_into(int n) {
  if (n < 1) fail("enumerate_inert_into: n must be positive");
  Necklace target = Necklace::simplex(n);
  std::vector<NecklaceMap> out;
  std::vector<int> identity(static_cast<size_t>(n) + 1);
  std::iota(identity.begin(), identity.end(), 0);
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> joints{0};
    for (int v = 1; v < n; ++v)
      if (mask & (1 << (v - 1))) joints.push_back(v);
    joints.push_back(n);
    out.emplace_back(Necklace(n, std::move(joints)), target, identity);
  }
  std::sort(out.begin(), out.end(),
            [](const NecklaceMap& a, const NecklaceMap& b) {
              return a.src().joints() < b.src().joints();
            });
  return out;
}

std::vector<NecklaceMap> enumerate_inert_into_necklace(const Necklace& u) {
  std::vector<NecklaceMap> out;
  std::vector<int> identity(static_cast<size_t>(u.spine()) + 1);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> choices{{}};
  const auto& joints = u.joints();
  for (size_t b = 1; b < joints.size(); ++b) {
    int lo = joints[b - 1], hi = joints[b];
    std::vector<std::vector<int>> next;
    for (int mask = 0; mask < (1 << std::max(0, hi - lo - 1)); ++mask) {
      std::vector<int> extra;
      for (int v = lo + 1; v < hi; ++v)
        if (mask & (1 << (v - lo - 1))) extra.push_back(v);
      for (const auto& prefix : choices) {
        std::vector<int> joined = prefix;
        joined.insert(joined.end(), extra.begin(), extra.end());
        next.push_back(std::move(joined));
      }
    }
    choices = std::move(next);
  }
  for (const auto& extra : choices) {
    std::vector<int> src_joints = joints;
    src_joints.insert(src_joints.end(), extra.begin(), extra.end());
    std::sort(src_joints.begin(), src_joints.end());
    out.emplace_back(Necklace(u.spine(), std::move(src_joints)), u, identity);
  }
  std::sort(out.begin(), out.end(),
            [](const NecklaceMap& a, const NecklaceMap& b) {
              return a.src().joints() < b.src().joints();
            });
  return out;
}

std::vector<Necklace> enumerate_necklaces(int max_spine) {
  std::vector<Necklace> out;
  for (int p = 0; p <= max_spine; ++p) {
    if (p == 0) {
      out.emplace_back();
      continue;
    }
    for (int mask = 0; mask < (1 << (p - 1)); ++mask) {
      std::vector<int> joints{0};
      for (int v = 1; v < p; ++v)
        if (mask & (1 << (v - 1))) joints.push_back(v);
      joints.push_back(p);
      out.emplace_back(p, std::move(joints));
    }
  }
  return out;
}

std::vector<NecklaceMap> enumerate_maps(const Necklace& src,
                                        const Necklace& dst) {
  std::vector<NecklaceMap> out;
  int q = src.spine(), p = dst.spine();
  std::vector<int> values(static_cast<size_t>(q) + 1, 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v > q) {
      if (values.back() != p) return;
      for (int t : dst.joints()) {
        bool hit = false;
        for (int s : src.joints())
          if (values[static_cast<size_t>(s)] == t) hit = true;
        if (!hit) return;
      }
      out.emplace_back(src, dst, values);
      return;
    }
    for (int w = values[static_cast<size_t>(v - 1)]; w <= p; ++w) {
      values[static_cast<size_t>(v)] = w;
      self(self, v + 1);
    }
  };
  if (q == 0) {
    if (p == 0) out.push_back(identity_map(src));
    return out;
  }
  rec(rec, 1);
  return out;
}

int eps_g(const std::vector<int>& parts) {
  int r = static_cast<int>(parts.size());
  int total = 0;
  for (int l = 1; l < r; ++l)
    total += (r - l) * (parts[static_cast<size_t>(l - 1)] - 1);
  return total;
}

int eps_c(const std::vector<int>& cuts) {
  int l = static_cast<int>(cuts.size()) + 1;
  int total = 0;
  for (int c : cuts) total += c;
  return total - l * (l - 1) / 2;
}

int phi(const NecklaceMap& mu) {
  if (!classify(mu).inert) fail("phi: map must be inert");
  const Necklace& s = mu.dst();
  const auto& sj = s.joints();
  // decompose the source over the ambient beads
  std::vector<int> dims, ells;
  for (size_t i = 1; i < sj.size(); ++i) {
    int lo = sj[i - 1], hi = sj[i];
    int joints_inside = 0;
    for (int v : mu.src().joints())
      if (v >= lo && v <= hi) ++joints_inside;
    int ell = joints_inside - 1;
    dims.push_back((hi - lo) - ell);
    ells.push_back(ell);
  }
  int total = 0;
  for (size_t i = 0; i < dims.size(); ++i)
    for (size_t j = i + 1; j < dims.size(); ++j)
      total += dims[i] * (ells[j] - 1);
  return total;
}

int phi_k(const Necklace& ambient, int k, const NecklaceMap& nu) {
  if (!classify(nu).inert) fail("phi_k: map must be inert");
  if (k < 1 || k > ambient.bead_count()) fail("phi_k: bead out of range");
  if (nu.dst() != ambient.bead(k)) fail("phi_k: map must land in bead k");
  return ambient.before(k).dim() * (nu.src().bead_count() - 1);
}

long long koszul_sigma(const std::vector<int>& degrees) {
  long long total = 0;
  for (size_t a = 0; a < degrees.size(); ++a)
    for (size_t b = a + 1; b < degrees.size(); ++b)
      total += static_cast<long long>(degrees[a]) * degrees[b];
  return total;
}

NecklaceMap delta_map(int n, int j) {
  if (j <= 0 || j >= n) fail("delta_map: only inner cofaces exist");
  std::vector<int> values;
  for (int v = 0; v <= n - 1; ++v) values.push_back(v < j ? v : v + 1);
  return NecklaceMap(Necklace::simplex(n - 1), Necklace::simplex(n),
                     std::move(values));
}

NecklaceMap sigma_map(int n, int i) {
  if (i < 0 || i > n) fail("sigma_map: index out of range");
  std::vector<int> values;
  for (int v = 0; v <= n + 1; ++v) values.push_back(v <= i ? v : v - 1);
  return NecklaceMap(Necklace::simplex(n + 1), Necklace::simplex(n),
                     std::move(values));
}

NecklaceMap nu_map(const std::vector<int>& parts) {
  Necklace src = Necklace::from_beads(parts);
  Necklace dst = Necklace::simplex(src.spine());
  std::vector<int> values(static_cast<size_t>(src.spine()) + 1);
  std::iota(values.begin(), values.end(), 0);
  return NecklaceMap(std::move(src), std::move(dst), std::move(values));
}

}  // namespace tanerve
