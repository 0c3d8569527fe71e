#include "wavent/spectral_bounds.hpp"

#include <cmath>

#include "wavent/fft.hpp"

namespace wavent {

RadialMesh RadialMesh::make(int n, int dim) {
  if (n < 16) throw BadField("RadialMesh: n >= 16 required");
  if (dim < 1 || dim > 3) throw BadField("RadialMesh: dim in {1,2,3}");
  RadialMesh m;
  m.n = n;
  m.dim = dim;
  m.dr = 1.0 / n;
  m.r.resize(n);
  for (int i = 0; i < n; ++i) m.r[i] = (i + 0.5) * m.dr;
  return m;
}

namespace {

// \int_a^b r^k dr.
double rmom(int k, double a, double b) {
  return (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
}

// Element integrals on [a, b] for P1 shapes la(r) = (b-r)/(b-a),
// lb(r) = (r-a)/(b-a) against weight r^{d-1} (mass) and the constant-slope
// product against (1+r^2) r^{d-1} (stiffness). All integrals are polynomial
// and evaluated exactly.
struct Element {
  double k_aa, k_ab, k_bb;  // stiffness
  double m_aa, m_ab, m_bb;  // mass
};

Element element(double a, double b, int d) {
  Element e;
  const double h = b - a;
  const double w_stiff = rmom(d - 1, a, b) + rmom(d + 1, a, b);
  e.k_aa = e.k_bb = w_stiff / (h * h);
  e.k_ab = -w_stiff / (h * h);

  // Mass: \int la^2 r^{d-1}, la lb r^{d-1}, lb^2 r^{d-1}.
  auto p = [&](int k) { return rmom(k, a, b); };
  const double i0 = p(d - 1), i1 = p(d), i2 = p(d + 1);
  // la = (b - r)/h, lb = (r - a)/h.
  e.m_aa = (b * b * i0 - 2 * b * i1 + i2) / (h * h);
  e.m_bb = (i2 - 2 * a * i1 + a * a * i0) / (h * h);
  e.m_ab = ((a + b) * i1 - i2 - a * b * i0) / (h * h);
  return e;
}

}  // namespace

RadialForms assemble_radial(const RadialMesh& mesh) {
  const int n = mesh.n;
  RadialForms f;
  f.a_diag.assign(n, 0.0);
  f.a_off.assign(n - 1, 0.0);
  f.m_diag.assign(n, 0.0);
  f.m_off.assign(n - 1, 0.0);

  // Interior elements between staggered nodes.
  for (int i = 0; i + 1 < n; ++i) {
    Element e = element(mesh.r[i], mesh.r[i + 1], mesh.dim);
    f.a_diag[i] += e.k_aa;
    f.a_diag[i + 1] += e.k_bb;
    f.a_off[i] += e.k_ab;
    f.m_diag[i] += e.m_aa;
    f.m_diag[i + 1] += e.m_bb;
    f.m_off[i] += e.m_ab;
  }
  // (0, r_0): u extends as the constant u_0 (no stiffness, full mass).
  f.m_diag[0] += rmom(mesh.dim - 1, 0.0, mesh.r[0]);
  // (r_{n-1}, 1]: linear drop to the Dirichlet value u(1) = 0.
  Element last = element(mesh.r[n - 1], 1.0, mesh.dim);
  f.a_diag[n - 1] += last.k_aa;
  f.m_diag[n - 1] += last.m_aa;
  return f;
}

namespace {

double form_value(const std::vector<double>& diag, const std::vector<double>& off,
                  const std::vector<double>& u) {
  double acc = 0.0;
  const std::size_t n = u.size();
  for (std::size_t i = 0; i < n; ++i) acc += diag[i] * u[i] * u[i];
  for (std::size_t i = 0; i + 1 < n; ++i) acc += 2.0 * off[i] * u[i] * u[i + 1];
  return acc;
}

// Solve (diag, off) tridiagonal SPD system by LDL^T (Thomas).
std::vector<double> tridiag_solve(const std::vector<double>& diag,
                                  const std::vector<double>& off,
                                  std::vector<double> rhs) {
  const std::size_t n = diag.size();
  std::vector<double> d(n), l(n - 1);
  d[0] = diag[0];
  if (!(d[0] > 0.0)) throw EigSolveFailure("radial solve: matrix not SPD");
  for (std::size_t i = 0; i + 1 < n; ++i) {
    l[i] = off[i] / d[i];
    d[i + 1] = diag[i + 1] - l[i] * off[i];
    if (!(d[i + 1] > 0.0)) throw EigSolveFailure("radial solve: matrix not SPD");
  }
  for (std::size_t i = 1; i < n; ++i) rhs[i] -= l[i - 1] * rhs[i - 1];
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= d[i];
  for (std::size_t i = n - 1; i-- > 0;) rhs[i] -= l[i] * rhs[i + 1];
  return rhs;
}

struct EigPair {
  double lambda = 0.0;
  std::vector<double> vec;
  int iterations = 0;
};

EigPair smallest_eig(const RadialMesh& mesh) {
  RadialForms f = assemble_radial(mesh);
  const int n = mesh.n;
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = 1.0 - mesh.r[i] * mesh.r[i];

  double lambda = 0.0, prev = -1.0;
  double plateau_lo = 0.0, plateau_hi = 0.0;
  int it = 0;
  bool converged = false;
  for (; it < 500; ++it) {
    // y = M x, then solve A z = y.
    std::vector<double> y(n, 0.0);
    for (int i = 0; i < n; ++i) {
      y[i] = f.m_diag[i] * x[i];
      if (i > 0) y[i] += f.m_off[i - 1] * x[i - 1];
      if (i + 1 < n) y[i] += f.m_off[i] * x[i + 1];
    }
    x = tridiag_solve(f.a_diag, f.a_off, std::move(y));
    const double mnorm = std::sqrt(form_value(f.m_diag, f.m_off, x));
    if (!(mnorm > 0.0)) throw EigSolveFailure("inverse iteration: breakdown");
    for (double& v : x) v /= mnorm;
    lambda = form_value(f.a_diag, f.a_off, x);
    if (prev >= 0.0 && std::abs(lambda - prev) <= 1e-12 * std::max(1.0, lambda)) {
      converged = true;
      break;
    }
    // Rounding can trap the update in a tiny limit cycle; accept once the
    // value has stopped moving beyond a 1e-9 relative plateau.
    if (it % 10 == 0) {
      if (it > 0 && plateau_hi - plateau_lo <= 1e-9 * std::max(1.0, lambda) &&
          lambda >= plateau_lo && lambda <= plateau_hi) {
        converged = true;
        break;
      }
      plateau_lo = plateau_hi = lambda;
    } else {
      plateau_lo = std::min(plateau_lo, lambda);
      plateau_hi = std::max(plateau_hi, lambda);
    }
    prev = lambda;
  }
  if (!converged) throw EigSolveFailure("inverse iteration: no convergence");
  if (x[0] < 0.0)
    for (double& v : x) v = -v;
  EigPair out;
  out.lambda = lambda;
  out.vec = std::move(x);
  out.iterations = it;
  return out;
}

}  // namespace

double rayleigh_quotient(const RadialMesh& mesh, const std::vector<double>& u) {
  if (static_cast<int>(u.size()) != mesh.n)
    throw BadField("rayleigh_quotient: size mismatch");
  RadialForms f = assemble_radial(mesh);
  const double den = form_value(f.m_diag, f.m_off, u);
  if (!(den > 0.0)) throw ZeroDenominator("rayleigh_quotient: zero trial function");
  return form_value(f.a_diag, f.a_off, u) / den;
}

Lambda1Result lambda1(int dim, int n) {
  Lambda1Result out;
  EigPair coarse = smallest_eig(RadialMesh::make(n, dim));
  EigPair fine = smallest_eig(RadialMesh::make(2 * n, dim));
  out.lambda_n = coarse.lambda;
  out.lambda_2n = fine.lambda;
  out.extrapolated = (4.0 * fine.lambda - coarse.lambda) / 3.0;
  out.ground_state = std::move(coarse.vec);
  out.iterations = coarse.iterations + fine.iterations;
  return out;
}

DivergenceIdentity divergence_identity_residual(const Field& f, const Field& g,
                                                const Field& u, const Region& ball) {
  require_same_grid(f.grid, g.grid, "divergence_identity_residual");
  require_same_grid(f.grid, u.grid, "divergence_identity_residual");
  const GridSpec& gs = f.grid;
  ball.require_inside(gs);

  SpectralField ghat = fft::forward(g);
  SpectralField fhat = fft::forward(f);
  Field div_ugradg(gs);
  Field grad_dot(gs);
  std::vector<Field> flux(gs.d, Field(gs));
  for (int ax = 0; ax < gs.d; ++ax) {
    Field dg = fft::backward(fft::derivative(ghat, ax));
    Field df = fft::backward(fft::derivative(fhat, ax));
    // The product doubles the bandwidth; differentiate its dealiased band.
    Field udg = fft::dealiased_product(u, dg);
    flux[ax] = udg;
    Field ddg = spectral_derivative(udg, ax);
    for (std::int64_t i = 0; i < ddg.size(); ++i) {
      div_ugradg.v[i] += ddg.v[i];
      grad_dot.v[i] += df.v[i] * udg.v[i];
    }
  }
  Field vol1(gs), vol2(gs);
  for (std::int64_t i = 0; i < vol1.size(); ++i) {
    vol1.v[i] = f.v[i] * div_ugradg.v[i];
    vol2.v[i] = grad_dot.v[i];
  }

  DivergenceIdentity out;
  out.volume_1 = integrate_region(ball, vol1);
  out.volume_2 = integrate_region(ball, vol2);

  const SurfaceQuadrature sq = ball_surface(ball, gs);
  double surf = 0.0;
  for (std::size_t q = 0; q < sq.points.size(); ++q) {
    double fn = interpolate6(f, sq.points[q]);
    double dn = 0.0;
    for (int ax = 0; ax < gs.d; ++ax)
      dn += sq.normals[q][ax] * interpolate6(flux[ax], sq.points[q]);
    surf += sq.weights[q] * fn * dn;
  }
  out.surface_term = surf;
  out.residual = out.volume_1 + out.volume_2 - out.surface_term;
  out.scale = std::abs(out.volume_1) + std::abs(out.volume_2) +
              std::abs(out.surface_term);
  if (out.scale == 0.0) out.scale = 1.0;
  return out;
}

DivergenceIdentity ball_laplacian_identity(const Field& f, const Region& ball) {
  const GridSpec& gs = f.grid;
  ball.require_inside(gs);
  Field lap = fft::laplacian_of_square(f);
  Field f2(gs);
  for (std::int64_t i = 0; i < f2.size(); ++i) f2.v[i] = f.v[i] * f.v[i];

  const double R = ball.radius;
  Field weighted(gs);
  for (std::int64_t i = 0; i < weighted.size(); ++i) {
    const auto x = weighted.point(i);
    double r2 = 0.0;
    for (int ax = 0; ax < gs.d; ++ax)
      r2 += (x[ax] - ball.center[ax]) * (x[ax] - ball.center[ax]);
    const double w = 1.0 - r2 / (R * R);
    weighted.v[i] = w > 0.0 ? w * lap.v[i] : 0.0;
  }
  double lhs = 0.0;
  for (double v : weighted.v) lhs += v;
  lhs *= gs.cell_volume();

  DivergenceIdentity out;
  out.volume_1 = lhs;
  // Green's identity with u = 1 - r^2/R^2: du/dn = -2/R on the sphere,
  // lap u = -2d/R^2.
  const double surf = 2.0 / R * surface_integral(ball, f2);
  const double bulk = 2.0 * gs.d / (R * R) * integrate_region(ball, f2);
  out.surface_term = surf - bulk;
  out.residual = out.volume_1 - out.surface_term;
  out.scale = std::abs(out.volume_1) + std::abs(surf) + std::abs(bulk);
  if (out.scale == 0.0) out.scale = 1.0;
  return out;
}

}  // namespace wavent
