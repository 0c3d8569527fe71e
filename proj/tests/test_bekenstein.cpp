#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wavent/bekenstein.hpp"
#include "wavent/random_fields.hpp"

using namespace wavent;

namespace {

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

TEST_CASE("local energy: full box and supported data") {
  GridSpec g(2, 128, 4.0);
  Rng rng(201u);
  CauchyData a(random_bump_field(g, rng), random_bump_field(g, rng), 1.0);

  const double margin = 2 * g.dx();
  Region full = Region::box({-4.0 + margin, -4.0 + margin, 0},
                            {4.0 - margin, 4.0 - margin, 0});
  // Equality up to the spectral-ringing floor of t00 outside the support.
  CHECK(rel_diff(local_energy(a, full), total_energy(a)) <= 1e-8);

  Region ball = Region::ball({0.0, 0.0, 0.0}, 2.2);
  BumpFieldOptions opt;
  opt.support = Region::ball({0.0, 0.0, 0.0}, 1.9);
  CauchyData b = random_cauchy(g, 1.0, 202u, opt);
  CHECK(rel_diff(local_energy(b, ball), total_energy(b)) <= 1e-6);

  // With g-only data t00 carries no gradient ringing: equality is exact.
  Rng rng2(203u);
  CauchyData c(Field(g), random_bump_field(g, rng2, opt), 1.0);
  CHECK(rel_diff(local_energy(c, ball), total_energy(c)) <= 1e-12);
}

TEST_CASE("local energy: ball region against quasi-Monte-Carlo oracle") {
  GridSpec g(2, 256, 2.0);
  // Explicit bumps so the oracle evaluates t00 analytically, independent of
  // the grid; the support crosses the ball boundary.
  std::vector<Bump> fb{{{0.45, -0.2, 0}, 0.8, 0.9}, {{-0.5, 0.45, 0}, 0.9, -0.7}};
  std::vector<Bump> gb{{{0.1, 0.3, 0}, 0.85, 0.55}};
  Field f(g), gg(g);
  for (std::int64_t i = 0; i < f.size(); ++i) {
    for (const Bump& b : fb) f.v[i] += b.value(f.point(i), 2);
    for (const Bump& b : gb) gg.v[i] += b.value(f.point(i), 2);
  }
  const double m = 1.0;
  CauchyData a(f, gg, m);
  Region ball = Region::ball({0.0, 0.0, 0.0}, 1.0);

  auto t00_analytic = [&](double x, double y) {
    double fx = 0.0, fy = 0.0, fv = 0.0, gv = 0.0;
    for (const Bump& b : fb) {
      fv += b.value({x, y, 0}, 2);
      fx += b.derivative({x, y, 0}, 2, 0);
      fy += b.derivative({x, y, 0}, 2, 1);
    }
    for (const Bump& b : gb) gv += b.value({x, y, 0}, 2);
    return 0.5 * (fx * fx + fy * fy + m * m * fv * fv + gv * gv);
  };

  const std::uint64_t nsamp = 10'000'000;
  double acc = 0.0;
  for (std::uint64_t i = 0; i < nsamp; ++i) {
    const double x = -1.0 + 2.0 * oracles::halton(i, 2);
    const double y = -1.0 + 2.0 * oracles::halton(i, 3);
    if (x * x + y * y <= 1.0) acc += t00_analytic(x, y);
  }
  const double oracle = acc * 4.0 / static_cast<double>(nsamp);
  CHECK(rel_diff(local_energy(a, ball), oracle) <= 1e-4);
}

TEST_CASE("check_localized: massless ball bound with positive margin") {
  GridSpec g(2, 256, 2.0);
  Region ball = Region::ball({0.0, 0.0, 0.0}, 1.0);
  BumpFieldOptions opt;
  opt.support = ball;
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    CauchyData a = random_cauchy(g, 0.0, seed, opt);
    BoundReport rep = check_localized(a, ball);
    CHECK(rep.pass);
    CHECK(rep.surrogate_is_exact);
    CHECK(rep.margin > 0.0);
    CHECK(std::abs(rep.identity_gap) <= 1e-8 * rep.bound);
    CHECK(rep.s_plus >= 0.0);
    CHECK(rep.s_minus >= 0.0);
  }
}

TEST_CASE("check_localized: the half-space mean identity is exact") {
  GridSpec g(1, 1024, 8.0);
  Region box = Region::box({-1.3, 0, 0}, {2.1, 0, 0});
  BumpFieldOptions opt;
  opt.support = box;
  for (std::uint64_t seed : {21u, 22u}) {
    CauchyData a = random_cauchy(g, 1.0, seed, opt);
    BoundReport rep = check_localized(a, box);
    CHECK(rep.pass);
    CHECK(std::abs(rep.identity_gap) <= 1e-8 * rep.bound);
    CHECK(rep.half_width == doctest::Approx(1.7));
  }
}

TEST_CASE("check_localized: g-only data respects pi R int g^2") {
  GridSpec g(1, 1024, 8.0);
  Region box = Region::box({-1.0, 0, 0}, {1.5, 0, 0});
  Rng rng(23u);
  BumpFieldOptions opt;
  opt.support = box;
  Field gb = random_bump_field(g, rng, opt);
  CauchyData a(Field(g), gb, 1.0);
  BoundReport rep = check_localized(a, box);

  double g2 = 0.0;
  for (double v : gb.v) g2 += v * v;
  g2 *= g.cell_volume();
  CHECK(rel_diff(rep.bound, M_PI * rep.half_width * g2) <= 1e-12);
  CHECK(rep.entropy_surrogate <= rep.bound * (1 + 1e-12));
  // With f = 0 there is no gradient ringing: the mean identity is exact.
  CHECK(std::abs(rep.identity_gap) <= 1e-10 * rep.bound);
  CHECK(rep.pass);
}

TEST_CASE("check_localized: rejects leaking data") {
  GridSpec g(2, 128, 4.0);
  CauchyData a = random_cauchy(g, 1.0, 25u);  // support box wider than the ball
  Region small = Region::ball({0.0, 0.0, 0.0}, 0.8);
  CHECK_THROWS_AS(check_localized(a, small), NotLocalized);
}

TEST_CASE("massless modular profile: closed-form values and consistency") {
  RadialProfile m = massless_modular_profile(2048);
  CHECK(0.5 * (1.0 - 0.0) == 0.5);  // M(0)
  CHECK(0.5 * (1.0 - 1.0) == 0.0);  // M(+-1)
  for (std::size_t i = 0; i < m.r.size(); ++i) {
    CHECK(m.value[i] >= 0.0);
    CHECK(m.value[i] <= 1.0);  // M <= R = 1 on the unit ball
    CHECK(m.value[i] == 0.5 * (1.0 - m.r[i] * m.r[i]));
  }

  GridSpec g(2, 256, 2.0);
  Region ball = Region::ball({0.0, 0.0, 0.0}, 1.0);
  BumpFieldOptions opt;
  opt.support = ball;
  Rng rng(27u);
  Field gb = random_bump_field(g, rng, opt);
  CauchyData a(Field(g), gb, 0.0);
  CHECK(rel_diff(modular_profile_entropy(m, gb, ball), ball_entropy_massless(a, ball)) <=
        1e-6);
}

TEST_CASE("modular bound margins") {
  GridSpec g(2, 256, 2.0);
  Region ball = Region::ball({0.0, 0.0, 0.0}, 1.0);
  BumpFieldOptions opt;
  opt.support = ball;

  // Zero data: both margins vanish.
  CauchyData zero{Field(g), Field(g), 0.0};
  ModularMargins z = modular_bound_margins(zero, ball);
  CHECK(z.g_margin == 0.0);
  CHECK(z.f_margin == 0.0);

  // g-only massless: margin = pi R \int g^2 - (pi/2) \int (1-r^2) g^2 > 0,
  // both sides by direct quadrature.
  Rng rng(29u);
  Field gb = random_bump_field(g, rng, opt);
  CauchyData a(Field(g), gb, 0.0);
  ModularMargins mm = modular_bound_margins(a, ball);
  double g2 = 0.0, wg2 = 0.0;
  for (std::int64_t i = 0; i < gb.size(); ++i) {
    const auto x = gb.point(i);
    const double w = 1.0 - (x[0] * x[0] + x[1] * x[1]);
    g2 += gb.v[i] * gb.v[i];
    if (w > 0.0) wg2 += w * gb.v[i] * gb.v[i];
  }
  g2 *= g.cell_volume();
  wg2 *= g.cell_volume();
  CHECK(rel_diff(mm.g_margin, M_PI * g2 - 0.5 * M_PI * wg2) <= 1e-10);
  CHECK(mm.g_margin > 0.0);
  CHECK(mm.f_margin >= 0.0);
}

TEST_CASE("modular bound margins: massive interval sweep") {
  GridSpec g(1, 512, 8.0);
  Region box = Region::box({-1.2, 0, 0}, {1.2, 0, 0});
  BumpFieldOptions opt;
  opt.support = box;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    CauchyData a = random_cauchy(g, 1.0, 1000 + seed, opt);
    ModularMargins mm = modular_bound_margins(a, box);
    CHECK(mm.g_margin >= -1e-10);
    CHECK(mm.f_margin >= -1e-10);
  }
}

TEST_CASE("euclidean covariance of the report") {
  GridSpec g(2, 128, 2.0);
  Region ball = Region::ball({0.3, -0.2, 0.0}, 0.8);
  BumpFieldOptions opt;
  opt.support = ball;
  CauchyData a = random_cauchy(g, 0.0, 31u, opt);

  // Quarter-turn about the box centre: (x, y) -> (-y, x) maps the grid to
  // itself up to the periodic seam.
  auto rotate = [&](const Field& f) {
    Field out(g);
    for (std::int64_t i = 0; i < f.size(); ++i) {
      auto k = f.unindex(i);
      const int n = g.n;
      std::array<int, 3> kr{(2 * (n / 2) - k[1]) % n, k[0], 0};
      out.v[out.index(kr)] = f.v[i];
    }
    return out;
  };
  CauchyData ar(rotate(a.f), rotate(a.g), 0.0);
  Region ball_r = Region::ball({0.2, 0.3, 0.0}, 0.8);

  BoundReport r0 = check_localized(a, ball);
  BoundReport r1 = check_localized(ar, ball_r);
  CHECK(rel_diff(r0.energy, r1.energy) <= 1e-8);
  CHECK(rel_diff(*r0.s_ball, *r1.s_ball) <= 1e-8);
  CHECK(rel_diff(r0.bound, r1.bound) <= 1e-8);

  // Integer-cell translation together with the region.
  const double shift = 8 * g.dx();
  auto roll = [&](const Field& f) {
    Field out(g);
    for (std::int64_t i = 0; i < f.size(); ++i) {
      auto k = f.unindex(i);
      k[0] = (k[0] + 8) % g.n;
      out.v[out.index(k)] = f.v[i];
    }
    return out;
  };
  CauchyData at(roll(a.f), roll(a.g), 0.0);
  Region ball_t = Region::ball({0.3 + shift, -0.2, 0.0}, 0.8);
  BoundReport r2 = check_localized(at, ball_t);
  CHECK(rel_diff(r0.energy, r2.energy) <= 1e-12);
  CHECK(rel_diff(*r0.s_ball, *r2.s_ball) <= 1e-12);
}

TEST_CASE("massless ball entropy grows with the ball") {
  GridSpec g(2, 256, 2.0);
  Region inner = Region::ball({0.0, 0.0, 0.0}, 0.75);
  BumpFieldOptions opt;
  opt.support = inner;
  CauchyData a = random_cauchy(g, 0.0, 33u, opt);
  double prev = ball_entropy_massless(a, inner);
  for (double R : {0.85, 1.0, 1.2, 1.4}) {
    const double s = ball_entropy_massless(a, Region::ball({0, 0, 0}, R));
    CHECK(s >= prev * (1.0 - 1e-12));
    prev = s;
  }
}
