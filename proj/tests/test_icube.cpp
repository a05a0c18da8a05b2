#include <doctest.h>

#include <algorithm>
#include <set>

#include "icube4/enumeration.hpp"
#include "icube4/icube.hpp"

using namespace icube4;

namespace {

Quat q(i64 a, i64 b, i64 c, i64 d) { return Quat::from_coeffs(a, b, c, d); }

ICube cube(std::vector<IVec> vs) { return ICube{std::move(vs)}; }

std::vector<Quat> lipschitz_pool(i64 max_norm) {
  std::vector<Quat> out;
  for (i64 n = 1; n <= max_norm; ++n)
    for (const Quat& x : elements_of_norm(n))
      if (x.is_lipschitz()) out.push_back(x);
  return out;
}

}  // namespace

TEST_CASE("twin characterization") {
  CHECK(are_twins(quat_one(), quat_i()));
  CHECK(are_twins(q(1, 1, 0, 0), q(1, -1, 0, 0)));
  CHECK_FALSE(are_twins(q(1, 1, 0, 0), q(1, 0, 1, 0)));  // dot product 1
  CHECK_THROWS_AS(are_twins(Quat{}, quat_one()), Error);

  SUBCASE("agrees with the vector definition on an exhaustive small box") {
    std::vector<Quat> box;
    for (i64 a = -1; a <= 1; ++a)
      for (i64 b = -1; b <= 1; ++b)
        for (i64 c = -1; c <= 1; ++c)
          for (i64 d = -1; d <= 1; ++d)
            if (a || b || c || d) box.push_back(q(a, b, c, d));
    for (const Quat& x : box)
      for (const Quat& y : box) {
        bool vec_def = x.norm() == y.norm() &&
                       dot(vec_from_quat(x), vec_from_quat(y)) == 0;
        CHECK(are_twins(x, y) == vec_def);
      }
  }

  SUBCASE("one-sided multiplication preserves twins") {
    auto pool = lipschitz_pool(4);
    for (size_t s = 0; s < pool.size(); s += 5)
      for (size_t t = 0; t < pool.size(); t += 7) {
        const Quat &a = pool[s], &b = pool[t];
        if (a.norm() != b.norm() || !are_twins(a, b)) continue;
        for (size_t u = 0; u < pool.size(); u += 11) {
          const Quat& g = pool[u];
          CHECK(are_twins(a * g, b * g));
          CHECK(are_twins(g * a, g * b));
        }
      }
  }
}

TEST_CASE("icube validation") {
  CHECK(validate_icube(cube({{1, 0, 0, 0}, {0, 1, 0, 0}})));
  CHECK_FALSE(validate_icube(cube({{1, 0, 0, 0}, {1, 1, 0, 0}})));
  CHECK(validate_icube(cube({{1, 2, 3, 4}, {2, -1, 4, -3}, {3, -4, -1, 2}, {4, 3, -2, -1}})));
  CHECK_FALSE(validate_icube(cube({{0, 0, 0, 0}})));
  CHECK_FALSE(validate_icube(cube({})));

  auto why = icube_violation(cube({{1, 0, 0, 0}, {1, 1, 0, 0}}));
  REQUIRE(why.has_value());
  CHECK(why->find("0 and 1") != std::string::npos);
}

TEST_CASE("parity signature of an icube") {
  CHECK(parity_signature(cube({{1, 0, 0, 0}, {0, 1, 0, 0}})) ==
        ParitySignature{KElem::One, KElem::I});
  CHECK(parity_signature(cube({{0, -1, -1, -1}, {1, 0, -1, 1}})) ==
        ParitySignature{KElem::One, KElem::I});
  CHECK(is_orderly(parity_signature(cube({{0, -1, -1, -1}, {1, 0, -1, 1}}))));

  // Swapping the 1 and i coordinate positions moves the leader into the
  // class of i and breaks orderliness.
  KPerm swap1i;
  swap1i.image = {KElem::I, KElem::One, KElem::J, KElem::K};
  ICube permuted = permute_components(cube({{0, -1, -1, -1}, {1, 0, -1, 1}}), swap1i);
  CHECK(parity_signature(permuted) == ParitySignature{KElem::I, KElem::One});
  CHECK_FALSE(is_orderly(parity_signature(permuted)));

  CHECK_THROWS_AS(parity_signature(cube({{1, 1, 0, 0}})), Error);  // even norm
}

TEST_CASE("component permutations") {
  ICube c = cube({{0, -1, -1, -1}, {1, 0, -1, 1}});
  CHECK(permute_components(c, KPerm{}) == c);

  KPerm swapij;
  swapij.image = {KElem::One, KElem::J, KElem::I, KElem::K};
  CHECK(parity_signature(permute_components(c, swapij)) ==
        ParitySignature{KElem::One, KElem::J});
  CHECK(permute_components(permute_components(c, swapij), swapij) == c);

  for (const KPerm& r : all_kperms())
    CHECK(permute_components(permute_components(c, r), r.inverse()) == c);
}

TEST_CASE("to_orderly") {
  ICube orderly = cube({{0, -1, -1, -1}, {1, 0, -1, 1}});
  auto [r0, c0] = to_orderly(orderly);
  CHECK(r0 == KPerm{});
  CHECK(c0 == orderly);

  KPerm swap1i;
  swap1i.image = {KElem::I, KElem::One, KElem::J, KElem::K};
  ICube shuffled = permute_components(orderly, swap1i);
  auto [r1, c1] = to_orderly(shuffled);
  CHECK(r1 == swap1i);  // the transposition (1 i), already lex-least
  CHECK(is_orderly(parity_signature(c1)));
  CHECK(permute_components(c1, r1.inverse()) == shuffled);
}

TEST_CASE("dyadic reduction of icubes") {
  SUBCASE("odd norm passes through") {
    ICube c = cube({{1, 0, 0, 0}, {0, 1, 0, 0}});
    auto red = reduce_dyadic(c);
    CHECK(red.power == 0);
    CHECK_FALSE(red.eta.has_value());
    CHECK(red.odd_icube == c);
  }

  SUBCASE("norm 2 strips one eta") {
    ICube c = cube({{1, 1, 0, 0}, {-1, 1, 0, 0}});  // (1+i, (1+i)i)
    auto red = reduce_dyadic(c);
    CHECK(red.power == 1);
    CHECK(red.eta == q(1, 1, 0, 0));
    CHECK(red.odd_icube == cube({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  }

  SUBCASE("every odd icube lifts to exactly three icubes of doubled norm") {
    for (const ICube& c : enumerate_icubes(2, 3)) {
      int liftings = 0;
      for (const Quat& eta : {q(1, 1, 0, 0), q(1, 0, 1, 0), q(1, 0, 0, 1)}) {
        ICube lifted;
        for (const IVec& v : c.vectors)
          lifted.vectors.push_back(vec_from_quat(eta * quat_from_vec(v)));
        CHECK(validate_icube(lifted));
        CHECK(lifted.edge_norm() == 6);
        auto red = reduce_dyadic(lifted);
        CHECK(red.power == 1);
        CHECK(red.eta == eta);
        CHECK(red.odd_icube == c);
        ++liftings;
      }
      CHECK(liftings == 3);
    }
  }
}

TEST_CASE("decomposition certificates") {
  SUBCASE("the unit 2-icube") {
    Decomposition d = decompose(cube({{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK(d.gamma == quat_one());
    CHECK(d.delta == quat_one());
    CHECK(d.signs == std::vector<int>{1, 1});
    CHECK(d.dyadic_power == 0);
    CHECK(d.scalar_content == 1);
  }

  SUBCASE("a norm-3 2-icube") {
    Decomposition d = decompose(cube({{0, -1, -1, -1}, {1, 0, -1, 1}}));
    CHECK(d.gamma == q(0, -1, -1, -1));
    CHECK(d.delta == quat_one());
    CHECK(d.signs == std::vector<int>{1, 1});
  }

  SUBCASE("round-trip and certificate stability over enumerated icubes") {
    for (i64 n : {1, 2, 3, 4, 5, 6, 9}) {
      for (int m = 1; m <= 4; ++m) {
        auto cubes = enumerate_icubes(m, n);
        for (size_t t = 0; t < cubes.size(); t += 17) {
          const ICube& c = cubes[t];
          Decomposition d = decompose(c);
          CHECK(compose(d, m) == c);
          if (m >= 2) CHECK(decompose(compose(d, m)) == d);
          CHECK(ipow_checked(2, d.dyadic_power) * d.gamma.norm() * d.delta.norm() *
                    d.scalar_content * d.scalar_content ==
                c.edge_norm());
          if (m == 2) CHECK(is_primitive(d.gamma * quat_i() * d.gamma.conjugate()));
          if (m >= 3) CHECK(is_primitive(d.gamma));
        }
      }
    }
  }

  SUBCASE("for odd norms the total count is the orderly count times the type count") {
    for (i64 n : {1, 3, 5, 9, 15}) {
      for (int m = 1; m <= 4; ++m) {
        i64 orderly = 0;
        for (const ICube& c : enumerate_icubes(m, n))
          if (is_orderly(parity_signature(c))) ++orderly;
        i64 fact = 1;
        for (int t = 2; t <= 4 - m; ++t) fact *= t;
        CHECK(count_icubes_brute(m, n) == 24 / fact * orderly);
      }
    }
  }

  SUBCASE("content and delta primitivity track icube primitivity") {
    for (int m : {2, 3}) {
      for (const ICube& c : enumerate_icubes(m, 9)) {
        Decomposition d = decompose(c);
        CHECK(is_primitive(d.delta));
        CHECK(is_primitive_icube(c) == (d.scalar_content == 1));
      }
    }
  }

  SUBCASE("invalid icubes are rejected up front") {
    try {
      decompose(cube({{1, 0, 0, 0}, {1, 1, 0, 0}}));
      FAIL("expected rejection");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::invalid_icube);
    }
    CHECK_THROWS_AS(extend_z4(cube({{1, 0, 0, 0}, {1, 1, 0, 0}})), Error);
    CHECK_THROWS_AS(extend_by_minors(cube({{1, 0, 0, 0}, {0, 1, 0, 0}})), Error);  // m != n-1
  }

  SUBCASE("compose rejects inconsistent certificates") {
    Decomposition d = decompose(cube({{1, 0, 0, 0}, {0, 1, 0, 0}}));
    CHECK_THROWS_AS(compose(d, 3), Error);
    Decomposition bad = d;
    bad.signs = {1, 2};
    CHECK_THROWS_AS(compose(bad, 2), Error);
    bad = d;
    bad.gamma = q(3, 0, 0, 0);  // not primary
    CHECK_THROWS_AS(compose(bad, 2), Error);
    bad = d;
    bad.scalar_content = 2;
    CHECK_THROWS_AS(compose(bad, 2), Error);
    bad = d;
    bad.eta = q(1, 1, 0, 0);  // eta without a dyadic power
    CHECK_THROWS_AS(compose(bad, 2), Error);
  }
}

TEST_CASE("extension inside Z^4") {
  SUBCASE("a single axis vector gains its canonical twin") {
    ICube out = extend_z4(cube({{1, 0, 0, 0}}));
    CHECK(out.vectors[0] == IVec{1, 0, 0, 0});
    CHECK(out.vectors[1] == IVec{0, 1, 0, 0});
  }

  SUBCASE("norm-30 pair extends and keeps its prefix") {
    ICube c = cube({{1, 2, 3, 4}, {2, -1, 4, -3}});
    ICube out = extend_z4(c);
    CHECK(out.size() == 3);
    CHECK(validate_icube(out));
    CHECK(out.vectors[0] == c.vectors[0]);
    CHECK(out.vectors[1] == c.vectors[1]);
    CHECK(norm_of(out.vectors[2]) == 30);
  }

  SUBCASE("iterating extension always reaches a full 4-icube") {
    for (i64 n : {2, 5, 12, 20}) {
      auto pairs = enumerate_icubes(2, n);
      for (size_t t = 0; t < pairs.size(); t += 23) {
        ICube c = pairs[t];
        while (c.size() < 4) {
          ICube bigger = extend_z4(c);
          CHECK(bigger.size() == c.size() + 1);
          CHECK(validate_icube(bigger));
          for (int u = 0; u < c.size(); ++u) CHECK(bigger.vectors[u] == c.vectors[u]);
          c = bigger;
        }
      }
    }
  }

  CHECK_THROWS_AS(extend_z4(cube({{1, 0, 0, 0},
                                  {0, 1, 0, 0},
                                  {0, 0, 1, 0},
                                  {0, 0, 0, 1}})),
                  Error);
}

TEST_CASE("extension by maximal minors") {
  SUBCASE("dimension 2: the rotated twin") {
    ICube out = extend_by_minors(cube({{3, 1}}));
    CHECK(out.vectors[1] == IVec{1, -3});
  }

  SUBCASE("dimension 4: the remaining axis") {
    ICube out = extend_by_minors(cube({{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}}));
    CHECK(out.vectors[3] == IVec{0, 0, 0, 1});
  }

  SUBCASE("dimension 3 with a square norm") {
    ICube out = extend_by_minors(cube({{1, 2, 2}, {2, 1, -2}}));
    CHECK(out.vectors[2] == IVec{2, -2, 1});
    CHECK(validate_icube(out));
  }

  SUBCASE("dimension 3 with a nonsquare norm is impossible") {
    try {
      extend_by_minors(cube({{1, 1, 0}, {1, -1, 0}}));
      FAIL("expected failure");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::odd_dimension_nonsquare_norm);
    }
  }

  SUBCASE("the appended vector is one of exactly two sign variants") {
    ICube c = cube({{1, 2, 3, 4}, {2, -1, 4, -3}, {3, -4, -1, 2}});
    ICube out = extend_by_minors(c);
    CHECK(out.vectors[3] == IVec{4, 3, -2, -1});
    int extensions = 0;
    for (const IVec& v : vectors_of_norm(30, 4)) {
      bool ok = true;
      for (const IVec& u : c.vectors)
        if (dot(u, v) != 0) ok = false;
      if (ok) {
        ++extensions;
        IVec neg = v;
        for (i64& x : neg) x = -x;
        CHECK((v == out.vectors[3] || neg == out.vectors[3]));
      }
    }
    CHECK(extensions == 2);
  }
}

TEST_CASE("multiplication-table extensions") {
  SUBCASE("dimension 8 at a basis vector gives signed basis rows") {
    ICube out = cayley_extension(IVec{1, 0, 0, 0, 0, 0, 0, 0});
    CHECK(out.size() == 8);
    CHECK(validate_icube(out));
    CHECK(out.edge_norm() == 1);
    std::set<int> nonzero_positions;
    for (int r = 0; r < 8; ++r)
      for (int c = 0; c < 8; ++c)
        if (out.vectors[r][c] != 0) nonzero_positions.insert(c);
    CHECK(nonzero_positions.size() == 8);
  }

  SUBCASE("dimension 4 instantiates the quaternion table") {
    ICube out = cayley_extension(IVec{1, 2, 3, 4});
    CHECK(out == cube({{1, 2, 3, 4}, {2, -1, 4, -3}, {3, -4, -1, 2}, {4, 3, -2, -1}}));
  }

  SUBCASE("dimension 2") {
    CHECK(cayley_extension(IVec{5, -7}) == cube({{5, -7}, {-7, -5}}));
  }

  SUBCASE("arbitrary vectors always give valid icubes") {
    CHECK(validate_icube(cayley_extension(IVec{3, -1, 4, 1, -5, 9, -2, 6})));
    CHECK(validate_icube(cayley_extension(IVec{0, 0, 0, 7})));
  }

  SUBCASE("rejections") {
    try {
      cayley_extension(IVec{1, 2, 3});
      FAIL("expected failure");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unsupported_dimension);
    }
    CHECK_THROWS_AS(cayley_extension(IVec{0, 0}), Error);
  }
}
