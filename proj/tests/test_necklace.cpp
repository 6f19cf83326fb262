#include <doctest.h>

#include "tanerve/necklace.hpp"

#include <map>
#include <set>

using namespace tanerve;

TEST_CASE("necklace encoding and statistics") {
  Necklace d0;
  CHECK(d0.spine() == 0);
  CHECK(d0.bead_count() == 0);
  CHECK(d0.encode() == "");
  CHECK(Necklace::parse("") == d0);

  Necklace t = Necklace::parse("2,3");
  CHECK(t.spine() == 5);
  CHECK(t.joints() == std::vector<int>{0, 2, 5});
  CHECK(t.bead_count() == 2);
  CHECK(t.dim() == 3);
  CHECK(t.encode() == "2,3");

  Necklace w = wedge(Necklace::simplex(1), Necklace::simplex(2));
  CHECK(w.joints() == std::vector<int>{0, 1, 3});
  CHECK(w.spine() == 3);
  CHECK(wedge(Necklace(), t) == t);
  CHECK(wedge(t, Necklace()) == t);

  Necklace v = wedge(Necklace::simplex(2), Necklace::simplex(3));
  CHECK(v.bead_count() == 2);
  CHECK(v.spine() == 5);
  CHECK(v.dim() == 3);

  CHECK_THROWS(Necklace(2, {0, 1}));    // missing endpoint
  CHECK_THROWS(Necklace::parse("0,2"));  // empty bead
}

TEST_CASE("signatures") {
  for (int n = 0; n <= 6; ++n) CHECK(Necklace::simplex(n).signature() == 0);
  CHECK(Necklace::parse("2,3").signature() == 1);
  CHECK(eps_g({2, 3}) == 1);
  CHECK(eps_c({2}) == 1);
  // the two signature formulas agree on every necklace
  for (const auto& t : enumerate_necklaces(6)) {
    if (t.bead_count() == 0) continue;
    std::vector<int> cuts(t.joints().begin() + 1, t.joints().end() - 1);
    CHECK(eps_g(t.beads()) == eps_c(cuts));
  }
  CHECK(koszul_sigma({1, 1}) == 1);
  CHECK(koszul_sigma({2, 3, 1}) == 2 * 3 + 2 * 1 + 3 * 1);
}

TEST_CASE("composition and wedge functoriality") {
  auto sigma0 = sigma_map(1, 0);   // Delta^2 -> Delta^1
  auto delta1 = delta_map(2, 1);   // Delta^1 -> Delta^2
  auto id1 = identity_map(Necklace::simplex(1));
  CHECK(compose(sigma0, delta1) == id1);
  CHECK(compose(id1, sigma0) == sigma0);
  CHECK(compose(sigma0, identity_map(Necklace::simplex(2))) == sigma0);
  CHECK_THROWS(compose(sigma0, sigma0));

  // (f1 v f2) . (g1 v g2) = (f1.g1) v (f2.g2)
  CHECK(compose(wedge(sigma0, sigma0), wedge(delta1, delta1)) ==
        wedge(id1, id1));
}

TEST_CASE("classification") {
  // sigma_0: Delta^1 -> Delta^0 collapses a whole bead: spine collapsing
  auto collapse = sigma_map(0, 0);
  CHECK(classify(collapse).spine_collapsing);
  // sigma_0: Delta^2 -> Delta^1 shrinks inside a bead: active surjective
  // but not spine collapsing (it drops the dimension)
  auto sigma0 = sigma_map(1, 0);
  auto c = classify(sigma0);
  CHECK(c.active);
  CHECK(c.surjective);
  CHECK(!c.spine_collapsing);
  CHECK(c.bead_reducing);
  CHECK(!c.injective);

  auto nu = nu_map({1, 1});
  auto cn = classify(nu);
  CHECK(cn.inert);
  CHECK(cn.injective);
  CHECK(cn.surjective);
  CHECK(!cn.active);

  // spine collapsing iff active surjective with dim preserved, exhaustively
  for (const auto& src : enumerate_necklaces(5)) {
    for (const auto& dst : enumerate_necklaces(src.spine())) {
      for (const auto& f : enumerate_maps(src, dst)) {
        auto cls = classify(f);
        if (!(cls.active && cls.surjective)) continue;
        CHECK(src.dim() >= dst.dim());
        CHECK(cls.spine_collapsing == (src.dim() == dst.dim()));
      }
    }
  }
}

TEST_CASE("epi-mono factorization") {
  // injective maps factor as (id, f); epis as (f, id)
  auto delta1 = delta_map(2, 1);
  auto [e1, m1] = factor_epi_mono(delta1);
  CHECK(e1 == identity_map(Necklace::simplex(1)));
  CHECK(m1 == delta1);

  auto sigma0 = sigma_map(1, 0);
  auto [e2, m2] = factor_epi_mono(sigma0);
  CHECK(e2 == sigma0);
  CHECK(m2 == identity_map(Necklace::simplex(1)));

  // h: Delta^2 -> Delta^2 with underlying (0,0,2)
  Necklace d2 = Necklace::simplex(2);
  NecklaceMap h(d2, d2, {0, 0, 2});
  auto [e, m] = factor_epi_mono(h);
  CHECK(e == NecklaceMap(d2, Necklace::simplex(1), {0, 0, 1}));
  CHECK(m == delta_map(2, 1));

  // recomposition and uniqueness, exhaustively over small spines
  for (const auto& src : enumerate_necklaces(4)) {
    for (const auto& dst : enumerate_necklaces(4)) {
      for (const auto& f : enumerate_maps(src, dst)) {
        auto [ee, mm] = factor_epi_mono(f);
        CHECK(compose(mm, ee) == f);
        CHECK(classify(ee).active);
        CHECK(classify(ee).surjective);
        CHECK(classify(mm).injective);
        // search every alternative factorization through any middle necklace
        int found = 0;
        for (const auto& mid : enumerate_necklaces(dst.spine())) {
          for (const auto& cand_e : enumerate_maps(src, mid)) {
            if (!(classify(cand_e).active && classify(cand_e).surjective))
              continue;
            for (const auto& cand_m : enumerate_maps(mid, dst)) {
              if (!classify(cand_m).injective) continue;
              if (compose(cand_m, cand_e) == f) ++found;
            }
          }
        }
        CHECK(found == 1);
      }
    }
  }
}

TEST_CASE("active-inert factorization") {
  // nu_{1,1}: active part has full image joints, inert part the inclusion
  auto nu = nu_map({1, 1});
  auto [act, ine] = factor_active_inert(nu);
  CHECK(classify(act).active);
  CHECK(classify(ine).inert);
  CHECK(compose(ine, act) == nu);
  CHECK(act.dst() == Necklace(2, {0, 1, 2}));

  for (const auto& src : enumerate_necklaces(4)) {
    for (const auto& dst : enumerate_necklaces(4)) {
      for (const auto& f : enumerate_maps(src, dst)) {
        auto [a, i] = factor_active_inert(f);
        CHECK(compose(i, a) == f);
        CHECK(classify(a).active);
        CHECK(classify(i).inert);
        if (classify(f).inert) CHECK(a == identity_map(src));
        if (classify(f).active) CHECK(i == identity_map(dst));
      }
    }
  }
}

TEST_CASE("split_injective") {
  Necklace d1 = Necklace::simplex(1), d2 = Necklace::simplex(2);
  Necklace w = wedge(d1, d1);
  auto idw = identity_map(w);
  auto [g1, g2] = split_injective(idw, d1, d1);
  CHECK(g1 == identity_map(d1));
  CHECK(g2 == identity_map(d1));

  // the only injective Delta^1 v Delta^1 -> Delta^1 v Delta^1 is the identity
  auto injs = enumerate_injective_into(w);
  REQUIRE(injs.size() == 1);
  CHECK(injs[0] == idw);

  auto built = wedge(delta_map(2, 1), identity_map(d1));
  auto [h1, h2] = split_injective(built, d2, d1);
  CHECK(h1 == delta_map(2, 1));
  CHECK(h2 == identity_map(d1));

  CHECK_THROWS(split_injective(
      NecklaceMap(w, w, {0, 1, 2}), d2, Necklace()));  // wrong wedge shape

  // round trip over all wedges of small injectives
  for (const auto& t1 : enumerate_necklaces(3)) {
    for (const auto& t2 : enumerate_necklaces(3)) {
      for (const auto& a : enumerate_injective_into(t1)) {
        for (const auto& b : enumerate_injective_into(t2)) {
          auto g = wedge(a, b);
          auto [s1, s2] = split_injective(g, t1, t2);
          CHECK(s1 == a);
          CHECK(s2 == b);
        }
      }
    }
  }
}

TEST_CASE("enumerate injective") {
  CHECK(enumerate_injective_into(Necklace::simplex(1)).size() == 1);
  auto into_d2 = enumerate_injective_into(Necklace::simplex(2));
  REQUIRE(into_d2.size() == 3);
  // canonical order: spine length, then map tuple, then source joints;
  // nu_{1,1} precedes the identity because {0,1,2} < {0,2}
  CHECK(into_d2[0] == delta_map(2, 1));
  CHECK(into_d2[1] == nu_map({1, 1}));
  CHECK(into_d2[2] == identity_map(Necklace::simplex(2)));
  for (int n = 1; n <= 5; ++n) {
    // count 3^(n-1): choose interior image vertices, then joints among them
    size_t expect = 1;
    for (int i = 1; i < n; ++i) expect *= 3;
    CHECK(enumerate_injective_into(Necklace::simplex(n)).size() == expect);
  }
  CHECK(enumerate_injective_into(Necklace()).size() == 1);
}

TEST_CASE("enumerate inert") {
  CHECK(enumerate_inert_into(1).size() == 1);
  auto n2 = enumerate_inert_into(2);
  REQUIRE(n2.size() == 2);
  CHECK(n2[0] == nu_map({1, 1}));
  CHECK(n2[1] == identity_map(Necklace::simplex(2)));
  CHECK(enumerate_inert_into(3).size() == 4);
  for (int n = 1; n <= 8; ++n)
    CHECK(enumerate_inert_into(n).size() == (size_t{1} << (n - 1)));

  // wedge version multiplies
  auto u = Necklace::parse("2,3");
  CHECK(enumerate_inert_into_necklace(u).size() == 2 * 4);
  for (const auto& mu : enumerate_inert_into_necklace(u))
    CHECK(classify(mu).inert);
}

TEST_CASE("compose_at") {
  auto delta1 = delta_map(3, 1);
  auto id3 = identity_map(Necklace::simplex(3));
  CHECK(compose_at(id3, 1, delta1) == delta1);

  Necklace d2d2 = Necklace::parse("2,2");
  auto nu = nu_map({1, 1});
  auto got = compose_at(identity_map(d2d2), 2, nu);
  CHECK(got.src() == Necklace::parse("2,1,1"));
  CHECK(classify(got).inert);

  CHECK_THROWS(compose_at(id3, 2, delta1));  // bead index out of range
}

TEST_CASE("phi and the magic formula") {
  // phi_2 over ambient Delta^2 v Delta^3 with nu: Delta^1 v Delta^2 -> Delta^3
  Necklace ambient = Necklace::parse("2,3");
  NecklaceMap nu(Necklace::parse("1,2"), Necklace::simplex(3), {0, 1, 2, 3});
  CHECK(phi_k(ambient, 2, nu) == 1);

  // phi(mu) = eps(T) + eps(S) - sum eps(T_i) - eps_g(ell(T_1)..ell(T_l))
  // as a parity identity (signatures only ever enter exponents of -1; the
  // integer difference is 2*eps(S) already for mu the identity),
  // exhaustively for all ambient necklaces of spine <= 5
  for (const auto& s : enumerate_necklaces(5)) {
    for (const auto& mu : enumerate_inert_into_necklace(s)) {
      const Necklace& t = mu.src();
      int rhs = t.signature() + s.signature();
      std::vector<int> ells;
      const auto& sj = s.joints();
      for (size_t i = 1; i < sj.size(); ++i) {
        std::vector<int> local{0};
        for (int v : t.joints())
          if (v > sj[i - 1] && v <= sj[i]) local.push_back(v - sj[i - 1]);
        Necklace piece(sj[i] - sj[i - 1], local);
        rhs -= piece.signature();
        ells.push_back(piece.bead_count());
      }
      rhs -= eps_g(ells);
      CHECK((phi(mu) - rhs) % 2 == 0);
    }
  }

  // the phi_k corollary identity, same parity reading
  for (const auto& v : enumerate_necklaces(5)) {
    for (int k = 1; k <= v.bead_count(); ++k) {
      int nk = v.beads()[static_cast<size_t>(k - 1)];
      for (const auto& nu2 : enumerate_inert_into(nk)) {
        const Necklace& w = nu2.src();
        Necklace glued = wedge(wedge(v.before(k), w), v.after(k));
        int lhs = glued.signature();
        int rhs = v.signature() + w.signature() + phi_k(v, k, nu2) -
                  (w.bead_count() - 1) * v.after(k).bead_count();
        CHECK((lhs - rhs) % 2 == 0);
      }
    }
  }

  CHECK_THROWS(phi(delta_map(2, 1)));  // not inert
}

TEST_CASE("inert map combinatorics bijections") {
  // (a): pairs (nu, mu_1..mu_r) of nested inerts match inerts with a
  // composition of their bead count
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= 3; ++r) {
      std::map<std::pair<std::vector<int>, std::vector<int>>, int> images;
      for (const auto& nu : enumerate_inert_into(n)) {
        if (nu.src().bead_count() != r) continue;
        std::vector<std::vector<NecklaceMap>> levels;
        for (int m : nu.src().beads()) levels.push_back(enumerate_inert_into(m));
        std::vector<size_t> idx(levels.size(), 0);
        while (true) {
          NecklaceMap mu = levels[0][idx[0]];
          for (size_t i = 1; i < levels.size(); ++i)
            mu = wedge(mu, levels[i][idx[i]]);
          NecklaceMap target(mu.src(), nu.src(), mu.values());
          auto eta = compose(nu, target);
          std::vector<int> ells;
          for (size_t i = 0; i < levels.size(); ++i)
            ells.push_back(levels[i][idx[i]].src().bead_count());
          images[{eta.src().joints(), ells}]++;
          size_t j = idx.size();
          while (j > 0) {
            --j;
            if (++idx[j] < levels[j].size()) break;
            idx[j] = 0;
            if (j == 0) {
              j = idx.size() + 1;
              break;
            }
          }
          if (j == idx.size() + 1) break;
        }
      }
      // right side: inert eta with a composition of ell(T) into r parts
      std::map<std::pair<std::vector<int>, std::vector<int>>, int> expected;
      for (const auto& eta : enumerate_inert_into(n)) {
        int ell = eta.src().bead_count();
        std::vector<int> parts;
        auto rec = [&](auto&& self, int remaining, int slots) -> void {
          if (slots == 0) {
            if (remaining == 0) expected[{eta.src().joints(), parts}]++;
            return;
          }
          for (int i = 1; i <= remaining - slots + 1; ++i) {
            parts.push_back(i);
            self(self, remaining - i, slots - 1);
            parts.pop_back();
          }
        };
        if (ell >= r) rec(rec, ell, r);
      }
      CHECK(images == expected);
    }
  }

  // (b): triples (mu, k, nu) match (eta, r, s, t) with r+s+t = ell(T)
  for (int n = 1; n <= 4; ++n) {
    std::map<std::tuple<std::vector<int>, int, int, int>, int> images;
    for (const auto& mu : enumerate_inert_into(n)) {
      for (int k = 1; k <= mu.src().bead_count(); ++k) {
        int nk = mu.src().beads()[static_cast<size_t>(k - 1)];
        for (const auto& nu : enumerate_inert_into(nk)) {
          auto eta = compose_at(mu, k, nu);
          images[{eta.src().joints(), k - 1, nu.src().bead_count(),
                  mu.src().bead_count() - k}]++;
        }
      }
    }
    std::map<std::tuple<std::vector<int>, int, int, int>, int> expected;
    for (const auto& eta : enumerate_inert_into(n)) {
      int ell = eta.src().bead_count();
      for (int r = 0; r < ell; ++r)
        for (int s = 1; r + s <= ell; ++s)
          expected[{eta.src().joints(), r, s, ell - r - s}]++;
    }
    CHECK(images == expected);
  }

  // (c): pairs (mu, j) with j-th interior non-joint match pairs (mu', i)
  for (int n = 2; n <= 4; ++n) {
    std::map<std::pair<std::vector<int>, int>, int> images;
    for (const auto& mu : enumerate_inert_into(n)) {
      std::vector<int> missing;
      for (int v = 1; v < n; ++v)
        if (!mu.src().is_joint(v)) missing.push_back(v);
      for (int j = 0; j < static_cast<int>(missing.size()); ++j) {
        int i = missing[static_cast<size_t>(j)];
        // mu' on Delta^{n-1}: remove vertex i and reindex
        std::vector<int> joints;
        for (int v : mu.src().joints()) joints.push_back(v < i ? v : v - 1);
        images[{joints, i}]++;
      }
    }
    std::map<std::pair<std::vector<int>, int>, int> expected;
    for (const auto& mu2 : enumerate_inert_into(n - 1))
      for (int i = 1; i < n; ++i)
        expected[{mu2.src().joints(), i}]++;
    CHECK(images == expected);
  }
}
