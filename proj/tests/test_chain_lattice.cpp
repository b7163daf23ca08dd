#include <doctest.h>

#include "uniso/chain_lattice.hpp"
#include "uniso/error.hpp"

using namespace uniso;

namespace {

// Finite chains modeled as K[x]/x^n, with the morphism 1 -> x^j.
struct XPower {
  std::uint64_t n, m, j;  // source length, target length, exponent
  bool zero() const { return j >= m; }
  std::uint64_t kernel() const { return n - (m - j); }
};

}  // namespace

TEST_CASE("make_shift accepts only realizable shapes") {
  const ChainClass f3 = ChainClass::finite(3), f2 = ChainClass::finite(2);
  CHECK(make_shift(f3, f3, 0, 0).is_injective());
  CHECK(make_shift(f3, f2, 1, 0).is_surjective());
  CHECK(make_shift(f2, f3, 0, 1).image_offset == ExtNat{1});
  CHECK_THROWS_AS(make_shift(f3, f3, 1, 0), Error);
  CHECK_THROWS_AS(make_shift(f3, f3, 3, 0), Error);
  CHECK_THROWS_AS(make_shift(f3, f3, std::nullopt, 0), Error);
  CHECK(make_shift(f3, f2, std::nullopt, std::nullopt).is_zero());

  const ChainClass a = ChainClass::ascending(), d = ChainClass::descending(), full = ChainClass::full();
  CHECK_NOTHROW(make_shift(a, a, 7, 0));
  CHECK_THROWS_AS(make_shift(a, a, 0, 1), Error);
  CHECK_NOTHROW(make_shift(d, d, 0, 7));
  CHECK_THROWS_AS(make_shift(d, d, 1, 0), Error);
  CHECK_THROWS_AS(make_shift(full, full, 0, 1), Error);
  CHECK_THROWS_AS(make_shift(a, d, 0, 0), Unsupported);
  CHECK(to_string(std::nullopt) == "inf");
  CHECK(ChainClass::finite(4).name() == "finite(4)");
}

TEST_CASE("finite compositions match multiplication by powers of x") {
  std::size_t cases = 0;
  for (std::uint64_t n = 1; n <= 6; ++n) {
    for (std::uint64_t m = 1; m <= 6; ++m) {
      for (std::uint64_t p = 1; p <= 6; ++p) {
        for (std::uint64_t j1 = (n >= m ? 0 : m - n); j1 < m; ++j1) {
          for (std::uint64_t j2 = (m >= p ? 0 : p - m); j2 < p; ++j2) {
            const XPower x1{n, m, j1}, x2{m, p, j2}, x21{n, p, j1 + j2};
            const ShiftMorphism f = make_shift(ChainClass::finite(n), ChainClass::finite(m), x1.kernel(), j1);
            const ShiftMorphism g = make_shift(ChainClass::finite(m), ChainClass::finite(p), x2.kernel(), j2);
            const ShiftMorphism gf = compose_shifts(g, f);
            CAPTURE(n);
            CAPTURE(m);
            CAPTURE(p);
            CAPTURE(j1);
            CAPTURE(j2);
            if (x21.zero()) {
              CHECK(gf.is_zero());
            } else {
              CHECK(gf.kernel_index == ExtNat{x21.kernel()});
              CHECK(gf.image_offset == ExtNat{j1 + j2});
            }
            ++cases;
          }
        }
      }
    }
  }
  CHECK(cases > 200);
}

TEST_CASE("composition is associative where modeled") {
  const ChainClass d = ChainClass::descending(), a = ChainClass::ascending();
  for (std::uint64_t x = 0; x < 5; ++x) {
    for (std::uint64_t y = 0; y < 5; ++y) {
      for (std::uint64_t z = 0; z < 5; ++z) {
        const ShiftMorphism f = make_shift(d, d, 0, x), g = make_shift(d, d, 0, y), h = make_shift(d, d, 0, z);
        CHECK(compose_shifts(h, compose_shifts(g, f)) == compose_shifts(compose_shifts(h, g), f));
        const ShiftMorphism p = make_shift(a, a, x, 0), q = make_shift(a, a, y, 0), r = make_shift(a, a, z, 0);
        CHECK(compose_shifts(r, compose_shifts(q, p)) == compose_shifts(compose_shifts(r, q), p));
      }
    }
  }
  const ChainClass f4 = ChainClass::finite(4);
  CHECK(compose_shifts(identity_shift(f4), make_shift(f4, f4, 2, 2)) == make_shift(f4, f4, 2, 2));
  CHECK(compose_shifts(zero_shift(f4, f4), identity_shift(f4)).is_zero());
  CHECK_THROWS_AS(compose_shifts(identity_shift(f4), identity_shift(ChainClass::finite(3))), NotComposable);
  const ChainClass full = ChainClass::full();
  CHECK_THROWS_AS(compose_shifts(make_shift(full, full, 1, 0), make_shift(full, full, 1, 0)), Unsupported);
  CHECK(identity_shift(ChainClass::finite(0)).is_zero());
}

TEST_CASE("descending offsets: a fixed submodule forces offset zero") {
  const ChainClass d = ChainClass::descending();
  for (std::uint64_t j = 0; j <= 100; ++j) {
    const ShiftMorphism h = make_shift(d, d, 0, j);
    for (std::uint64_t i = 0; i <= 100; ++i) {
      if (fixes_submodule(h, i) != (j == 0)) FAIL("i=" << i << " j=" << j);
    }
  }
  CHECK_FALSE(fixes_submodule(zero_shift(d, d), 0));
  CHECK_THROWS_AS(fixes_submodule(make_shift(ChainClass::finite(2), ChainClass::finite(3), 0, 1), 0), Error);
}

TEST_CASE("fixed points force an isomorphism for every chain class") {
  for (const auto& c : all_chain_kinds(4)) {
    CAPTURE(c.name());
    const ShiftMorphism id = identity_shift(c);
    const FixedPointReport r = fixed_point_forces_iso(c, id, id);
    CHECK(r.iso_forced);
    CHECK(r.hypothesis_consistent);
    CHECK(r.forced_offset == 0);
    CHECK_FALSE(r.argument.empty());
  }
  const ChainClass d = ChainClass::descending();
  CHECK_FALSE(fixed_point_forces_iso(d, make_shift(d, d, 0, 2), identity_shift(d)).hypothesis_consistent);
  const ChainClass a = ChainClass::ascending();
  CHECK_FALSE(fixed_point_forces_iso(a, make_shift(a, a, 1, 0), identity_shift(a)).hypothesis_consistent);
  const ChainClass f3 = ChainClass::finite(3);
  CHECK_FALSE(fixed_point_forces_iso(f3, make_shift(f3, f3, 1, 1), identity_shift(f3)).hypothesis_consistent);
}

TEST_CASE("powers of an epimorphism with simple kernel") {
  const GfPowerReport one = gf_power_scenario(1);
  REQUIRE(one.powers.size() == 1);
  CHECK(one.powers[0].kernel_index == ExtNat{2});
  const GfPowerReport r = gf_power_scenario(5);
  REQUIRE(r.powers.size() == 5);
  for (const auto& row : r.powers) {
    CHECK(row.surjective);
    CHECK_FALSE(row.injective);
    CHECK(row.kernel_index == ExtNat{2 * row.n});
  }
  CHECK_FALSE(r.iso_claimed);
  CHECK_FALSE(r.fixed_point_forced);

  const InjectiveVariantReport v = gf_power_injective_variant();
  CHECK(v.outside_scenario);
  CHECK(v.would_force_iso);
}

TEST_CASE("full chain self-shifts") {
  CHECK(full_chain_injective_self_offsets(100) == std::vector<std::uint64_t>{0});
}

TEST_CASE("scenarios") {
  const auto names = lattice_scenario_names();
  CHECK(names.size() == 5);
  for (const auto& n : names) {
    CAPTURE(n);
    const LatticeScenario s = run_lattice_scenario(n);
    CHECK(s.passed);
    CHECK(s.name == n);
  }
  CHECK(run_lattice_scenario("prop-chain").headline == "fixed point forces offset 0");
  CHECK(run_lattice_scenario("gf-power").details.size() == 11);
  CHECK_THROWS_AS(run_lattice_scenario("nope"), Error);
}
