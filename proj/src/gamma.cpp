#include "wavent/gamma.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <algorithm>
#include <cmath>

#include "wavent/fft.hpp"

namespace wavent {

BoundaryData BoundaryData::constant(int d, int angles, double value) {
  if (d == 1) return interval(value, value);
  return circle(std::vector<double>(angles, value));
}

ExteriorGeometry ExteriorGeometry::scaled(double lambda) const {
  ExteriorGeometry g = *this;
  g.mass = mass / lambda;
  g.a *= lambda;
  g.b *= lambda;
  g.eps *= lambda;
  g.cx *= lambda;
  g.cy *= lambda;
  g.rho *= lambda;
  g.l_out *= lambda;
  return g;
}

namespace {

// ---------------------------------------------------------------------------
// d = 1: two tridiagonal segments with weight x.
// ---------------------------------------------------------------------------

// Logarithmic ladder with a fixed step: meshes for different outer
// truncations share their nodes in the common range exactly.
std::vector<double> log_ladder(double lo, double hi, double step) {
  std::vector<double> x{lo};
  for (int i = 1;; ++i) {
    const double v = lo * std::exp(step * i);
    if (v >= hi * (1.0 - 1e-12)) break;
    x.push_back(v);
  }
  x.push_back(hi);
  return x;
}

// Element integrals over [a, b] with weight x against P1 shapes.
struct Seg {
  double k;                 // stiffness coupling
  double maa, mab, mbb;     // mass with weight x
};

Seg seg_element(double a, double b) {
  Seg e;
  const double h = b - a;
  const double i0 = (b * b - a * a) / 2.0;           // \int x
  const double i1 = (b * b * b - a * a * a) / 3.0;   // \int x^2
  const double i2 = (std::pow(b, 4) - std::pow(a, 4)) / 4.0;
  e.k = i0 / (h * h);
  e.maa = (b * b * i0 - 2 * b * i1 + i2) / (h * h);
  e.mbb = (i2 - 2 * a * i1 + a * a * i0) / (h * h);
  e.mab = ((a + b) * i1 - i2 - a * b * i0) / (h * h);
  return e;
}

// Solve one segment with Dirichlet values (u_left, u_right); returns all
// nodal values including the ends.
std::vector<double> solve_segment(const std::vector<double>& x, double m,
                                  double u_left, double u_right) {
  const int n = static_cast<int>(x.size());
  const int nf = n - 2;
  std::vector<double> diag(nf, 0.0), off(nf - 1, 0.0), rhs(nf, 0.0);
  const double m2 = m * m;
  for (int c = 0; c + 1 < n; ++c) {
    Seg e = seg_element(x[c], x[c + 1]);
    const double kaa = e.k + m2 * e.maa;
    const double kbb = e.k + m2 * e.mbb;
    const double kab = -e.k + m2 * e.mab;
    const int ia = c - 1, ib = c;  // free indices of nodes c, c+1
    if (ia >= 0) diag[ia] += kaa;
    if (ib < nf) diag[ib] += kbb;
    if (ia >= 0 && ib < nf) off[ia] += kab;
    if (ia < 0 && ib < nf) rhs[ib] -= kab * u_left;      // node 0 Dirichlet
    if (ib >= nf && ia >= 0) rhs[ia] -= kab * u_right;   // node n-1 Dirichlet
  }
  // Thomas solve (SPD).
  std::vector<double> d(nf), l(std::max(nf - 1, 0));
  d[0] = diag[0];
  for (int i = 0; i + 1 < nf; ++i) {
    if (!(d[i] > 0.0)) throw SolveFailure("segment solve: not SPD");
    l[i] = off[i] / d[i];
    d[i + 1] = diag[i + 1] - l[i] * off[i];
  }
  if (!(d[nf - 1] > 0.0)) throw SolveFailure("segment solve: not SPD");
  for (int i = 1; i < nf; ++i) rhs[i] -= l[i - 1] * rhs[i - 1];
  for (int i = 0; i < nf; ++i) rhs[i] /= d[i];
  for (int i = nf - 1; i-- > 0;) rhs[i] -= l[i] * rhs[i + 1];

  std::vector<double> u(n);
  u[0] = u_left;
  u[n - 1] = u_right;
  for (int i = 0; i < nf; ++i) u[i + 1] = rhs[i];
  return u;
}

double segment_energy(const std::vector<double>& x, const std::vector<double>& u,
                      double m) {
  const double m2 = m * m;
  double acc = 0.0;
  for (std::size_t c = 0; c + 1 < x.size(); ++c) {
    Seg e = seg_element(x[c], x[c + 1]);
    const double du = u[c + 1] - u[c];
    acc += e.k * du * du +
           m2 * (e.maa * u[c] * u[c] + 2 * e.mab * u[c] * u[c + 1] +
                 e.mbb * u[c + 1] * u[c + 1]);
  }
  return acc;
}

// Derivative at x[3] of the cubic through four (x, u) samples.
double onesided_derivative4(const double x[4], const double u[4]) {
  double acc = 0.0;
  for (int i = 0; i < 3; ++i) {
    double num = 1.0, den = 1.0;
    for (int j = 0; j < 4; ++j) {
      if (j == i) continue;
      if (j != 3) num *= x[3] - x[j];
      den *= x[i] - x[j];
    }
    acc += u[i] * num / den;
  }
  double s3 = 0.0;
  for (int j = 0; j < 3; ++j) s3 += 1.0 / (x[3] - x[j]);
  acc += u[3] * s3;
  return acc;
}

// ---------------------------------------------------------------------------
// d = 2: polar-graded triangulation of the clipped annulus.
// ---------------------------------------------------------------------------

struct DiskMesh {
  ExteriorGeometry geo;
  int K = 0;
  std::vector<double> ring_r;

  int rings() const { return static_cast<int>(ring_r.size()); }
  int node(int ring, int j) const { return ring * K + ((j % K) + K) % K; }
  std::array<double, 2> pos(int ring, int j) const {
    const double th = 2.0 * M_PI * (((j % K) + K) % K) / K;
    return {geo.cx + ring_r[ring] * std::cos(th),
            geo.cy + ring_r[ring] * std::sin(th)};
  }
};

DiskMesh make_disk_mesh(const ExteriorGeometry& geo) {
  DiskMesh m;
  m.geo = geo;
  m.K = geo.angles * geo.refine;
  // Ladder in units of rho: geometrically graded spacings. Built from the
  // ratio l_out/rho only, so scaled geometries mesh identically.
  const double ratio = geo.l_out / geo.rho;
  const double d0 = (2.0 * M_PI / m.K) * 0.75;
  const double q = 1.06;
  double s = 1.0, step = d0;
  m.ring_r.push_back(geo.rho);
  while (s < ratio * (1.0 - 1e-12)) {
    s = std::min(s + step, ratio);
    step *= q;
    m.ring_r.push_back(geo.rho * s);
  }
  m.ring_r.back() = geo.l_out;
  return m;
}

// \int_P x dA over the part of triangle P in {x > 0} (exact polygon clip).
double clipped_x_integral(const std::array<std::array<double, 2>, 3>& t) {
  // Clip against x > 0 (Sutherland-Hodgman).
  std::array<std::array<double, 2>, 7> poly;
  int np = 0;
  for (int i = 0; i < 3; ++i) {
    const auto& p = t[i];
    const auto& pn = t[(i + 1) % 3];
    const bool pin = p[0] > 0.0, nin = pn[0] > 0.0;
    if (pin) poly[np++] = p;
    if (pin != nin) {
      const double s = p[0] / (p[0] - pn[0]);
      poly[np++] = {0.0, p[1] + s * (pn[1] - p[1])};
    }
  }
  if (np < 3) return 0.0;
  // Green's theorem: \int_P x dA = (1/6) sum (x_i^2 + x_i x_j + x_j^2)(y_j - y_i).
  // The magnitude absorbs the winding orientation; the clipped polygon is
  // convex with x >= 0, so the integral itself is nonnegative.
  double acc = 0.0;
  for (int i = 0; i < np; ++i) {
    const auto& p = poly[i];
    const auto& pn = poly[(i + 1) % np];
    acc += (p[0] * p[0] + p[0] * pn[0] + pn[0] * pn[0]) * (pn[1] - p[1]);
  }
  return std::abs(acc) / 6.0;
}

struct Tri {
  int v[3];
  double grad_dot[3][3];  // W_T * gradphi_i . grad phi_j
  double mass[3][3];      // m^2-free mass with weight (x)_+ (midedge rule)
  double wt = 0.0;        // \int_T (x)_+
  double area = 0.0;
};

struct DiskAssembly {
  DiskMesh mesh;
  std::vector<Tri> tris;
  std::vector<char> alive;  // node participates in a positive-weight element
};

DiskAssembly assemble_disk(const ExteriorGeometry& geo) {
  DiskAssembly out;
  out.mesh = make_disk_mesh(geo);
  const DiskMesh& m = out.mesh;
  const int nnodes = m.rings() * m.K;
  out.alive.assign(nnodes, 0);

  for (int k = 0; k + 1 < m.rings(); ++k) {
    for (int j = 0; j < m.K; ++j) {
      const int quad[4] = {m.node(k, j), m.node(k, j + 1), m.node(k + 1, j + 1),
                           m.node(k + 1, j)};
      const std::array<double, 2> p[4] = {m.pos(k, j), m.pos(k, j + 1),
                                          m.pos(k + 1, j + 1), m.pos(k + 1, j)};
      const int split[2][3] = {{0, 1, 2}, {0, 2, 3}};
      for (const auto& s : split) {
        Tri t;
        std::array<std::array<double, 2>, 3> xy;
        for (int i = 0; i < 3; ++i) {
          t.v[i] = quad[s[i]];
          xy[i] = p[s[i]];
        }
        const double det = (xy[1][0] - xy[0][0]) * (xy[2][1] - xy[0][1]) -
                           (xy[2][0] - xy[0][0]) * (xy[1][1] - xy[0][1]);
        t.area = 0.5 * std::abs(det);
        if (t.area <= 0.0) continue;
        t.wt = clipped_x_integral(xy);
        if (t.wt <= 0.0) continue;
        // P1 gradients.
        double bg[3], cg[3];
        for (int i = 0; i < 3; ++i) {
          const auto& pa = xy[(i + 1) % 3];
          const auto& pb = xy[(i + 2) % 3];
          bg[i] = (pa[1] - pb[1]) / det;
          cg[i] = (pb[0] - pa[0]) / det;
        }
        for (int i = 0; i < 3; ++i)
          for (int jj = 0; jj < 3; ++jj)
            t.grad_dot[i][jj] = t.wt * (bg[i] * bg[jj] + cg[i] * cg[jj]);
        // Midedge rule for \int (x)_+ phi_i phi_j.
        for (int i = 0; i < 3; ++i)
          for (int jj = 0; jj < 3; ++jj) t.mass[i][jj] = 0.0;
        for (int e = 0; e < 3; ++e) {
          const int r = e, ss = (e + 1) % 3;
          const double mx = 0.5 * (xy[r][0] + xy[ss][0]);
          const double w = std::max(mx, 0.0) * t.area / 3.0;
          t.mass[r][r] += 0.25 * w;
          t.mass[ss][ss] += 0.25 * w;
          t.mass[r][ss] += 0.25 * w;
          t.mass[ss][r] += 0.25 * w;
        }
        for (int i = 0; i < 3; ++i) out.alive[t.v[i]] = 1;
        out.tris.push_back(t);
      }
    }
  }
  return out;
}

std::vector<double> interp_trace(const BoundaryData& h, int K) {
  const int n = static_cast<int>(h.values.size());
  std::vector<double> out(K);
  for (int j = 0; j < K; ++j) {
    const double s = static_cast<double>(j) * n / K;
    const int i0 = static_cast<int>(std::floor(s)) % n;
    const double t = s - std::floor(s);
    out[j] = (1.0 - t) * h.values[i0] + t * h.values[(i0 + 1) % n];
  }
  return out;
}

ExteriorSolution solve_disk(const ExteriorGeometry& geo, const BoundaryData& h) {
  DiskAssembly asem = assemble_disk(geo);
  const DiskMesh& mesh = asem.mesh;
  const int K = mesh.K;
  const int nr = mesh.rings();
  const int nnodes = nr * K;
  const double m2 = geo.mass * geo.mass;

  std::vector<double> trace = interp_trace(h, K);
  std::vector<double> fixed(nnodes, 0.0);
  std::vector<char> is_fixed(nnodes, 0);
  for (int j = 0; j < K; ++j) {
    fixed[mesh.node(0, j)] = trace[j];
    is_fixed[mesh.node(0, j)] = 1;
    is_fixed[mesh.node(nr - 1, j)] = 1;  // outer truncation, value 0
  }
  for (int i = 0; i < nnodes; ++i)
    if (!asem.alive[i]) is_fixed[i] = 1;  // dead weight region

  std::vector<int> index(nnodes, -1);
  int nfree = 0;
  for (int i = 0; i < nnodes; ++i)
    if (!is_fixed[i]) index[i] = nfree++;

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(asem.tris.size() * 9);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nfree);
  for (const Tri& t : asem.tris) {
    for (int i = 0; i < 3; ++i) {
      const int gi = t.v[i];
      if (is_fixed[gi]) continue;
      for (int j = 0; j < 3; ++j) {
        const int gj = t.v[j];
        const double kij = t.grad_dot[i][j] + m2 * t.mass[i][j];
        if (is_fixed[gj])
          rhs(index[gi]) -= kij * fixed[gj];
        else if (index[gj] >= index[gi])
          trips.emplace_back(index[gi], index[gj], kij);
      }
    }
  }
  Eigen::SparseMatrix<double> A(nfree, nfree);
  A.setFromTriplets(trips.begin(), trips.end());
  Eigen::VectorXd sol;
  if (nfree <= 200000) {
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>, Eigen::Upper> ldlt(A);
    if (ldlt.info() != Eigen::Success)
      throw SolveFailure("disk solve: factorization failed");
    sol = ldlt.solve(rhs);
  } else {
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Upper> cg(A);
    cg.setTolerance(1e-12);
    sol = cg.solve(rhs);
    if (cg.info() != Eigen::Success)
      throw SolveFailure("disk solve: conjugate gradient did not converge");
  }

  ExteriorSolution out;
  out.geo = geo;
  out.angles = K;
  out.nodes_x = mesh.ring_r;
  out.values.assign(nnodes, 0.0);
  for (int i = 0; i < nnodes; ++i)
    out.values[i] = is_fixed[i] ? fixed[i] : sol(index[i]);
  out.energy = out.energy_of(out.values);

  // Boundary flux: dn = -dr (into B), quadratic one-sided stencil.
  double flux = 0.0;
  const double dth = 2.0 * M_PI / K;
  for (int j = 0; j < K; ++j) {
    const double xr[4] = {mesh.ring_r[3], mesh.ring_r[2], mesh.ring_r[1],
                          mesh.ring_r[0]};
    const double ur[4] = {out.values[mesh.node(3, j)], out.values[mesh.node(2, j)],
                          out.values[mesh.node(1, j)], out.values[mesh.node(0, j)]};
    const double du = onesided_derivative4(xr, ur);
    // dn = -dr: the exterior normal on dB points toward the disk centre.
    const double x1 = mesh.pos(0, j)[0];
    flux += geo.rho * dth * x1 * trace[j] * (-du);
  }
  out.flux = flux;
  return out;
}

}  // namespace

double ExteriorSolution::energy_of(const std::vector<double>& nodal) const {
  if (geo.dim == 1) {
    const int n1 = inner_nodes;
    std::vector<double> x1(nodes_x.begin(), nodes_x.begin() + n1);
    std::vector<double> u1(nodal.begin(), nodal.begin() + n1);
    std::vector<double> x2(nodes_x.begin() + n1, nodes_x.end());
    std::vector<double> u2(nodal.begin() + n1, nodal.end());
    return segment_energy(x1, u1, geo.mass) + segment_energy(x2, u2, geo.mass);
  }
  DiskAssembly asem = assemble_disk(geo);
  const double m2 = geo.mass * geo.mass;
  double acc = 0.0;
  for (const Tri& t : asem.tris) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        acc += nodal[t.v[i]] * nodal[t.v[j]] *
               (t.grad_dot[i][j] + m2 * t.mass[i][j]);
  }
  return acc;
}

double ExteriorSolution::eval(const std::array<double, 3>& x) const {
  if (geo.dim == 1) {
    const double xx = x[0];
    auto interp = [&](int lo, int hi) {
      const auto first = nodes_x.begin() + lo, last = nodes_x.begin() + hi;
      if (xx <= *first || xx >= *(last - 1)) {
        if (xx == *first) return values[lo];
        if (xx == *(last - 1)) return values[hi - 1];
        return 0.0;
      }
      const auto it = std::upper_bound(first, last, xx);
      const int i = static_cast<int>(it - nodes_x.begin());
      const double t = (xx - nodes_x[i - 1]) / (nodes_x[i] - nodes_x[i - 1]);
      return (1.0 - t) * values[i - 1] + t * values[i];
    };
    if (xx >= geo.eps && xx <= geo.a) return interp(0, inner_nodes);
    if (xx >= geo.b && xx <= geo.l_out)
      return interp(inner_nodes, static_cast<int>(nodes_x.size()));
    return 0.0;
  }
  const double dx0 = x[0] - geo.cx, dy0 = x[1] - geo.cy;
  const double r = std::sqrt(dx0 * dx0 + dy0 * dy0);
  if (r >= geo.l_out || r < geo.rho) return (r < geo.rho) ? 0.0 : 0.0;
  if (x[0] <= 0.0) return 0.0;
  const auto it = std::upper_bound(nodes_x.begin(), nodes_x.end(), r);
  int k = static_cast<int>(it - nodes_x.begin());
  k = std::min(std::max(k, 1), static_cast<int>(nodes_x.size()) - 1);
  const double tr = (r - nodes_x[k - 1]) / (nodes_x[k] - nodes_x[k - 1]);
  double th = std::atan2(dy0, dx0);
  if (th < 0.0) th += 2.0 * M_PI;
  const double s = th / (2.0 * M_PI) * angles;
  const int j = static_cast<int>(std::floor(s));
  const double tj = s - j;
  auto val = [&](int ring, int jj) {
    return values[ring * angles + ((jj % angles) + angles) % angles];
  };
  const double lo = (1.0 - tj) * val(k - 1, j) + tj * val(k - 1, j + 1);
  const double hi = (1.0 - tj) * val(k, j) + tj * val(k, j + 1);
  return (1.0 - tr) * lo + tr * hi;
}

ExteriorSolution solve_minimizer(const ExteriorGeometry& geo, const BoundaryData& h) {
  if (geo.dim == 1) {
    if (!(0.0 < geo.eps && geo.eps < geo.a && geo.a < geo.b && geo.b < geo.l_out))
      throw BadField("exterior problem: need 0 < eps < a < b < l_out");
    if (h.values.size() != 2)
      throw BadField("exterior problem: interval trace needs two values");
    // Fixed logarithmic step density: enlarging l_out extends the mesh with
    // the same nodes in the common range, so truncation studies measure the
    // tail and not a remeshing effect.
    const double step1 = std::log(1000.0) / (160.0 * geo.refine);
    const double step2 = std::log(24.0 / 2.5) / (280.0 * geo.refine);
    std::vector<double> x1 = log_ladder(geo.eps, geo.a, step1);
    std::vector<double> x2 = log_ladder(geo.b, geo.l_out, step2);
    const int n1 = static_cast<int>(x1.size());
    std::vector<double> u1 = solve_segment(x1, geo.mass, 0.0, h.values[0]);
    std::vector<double> u2 = solve_segment(x2, geo.mass, h.values[1], 0.0);

    ExteriorSolution out;
    out.geo = geo;
    out.inner_nodes = n1;
    out.nodes_x = x1;
    out.nodes_x.insert(out.nodes_x.end(), x2.begin(), x2.end());
    out.values = u1;
    out.values.insert(out.values.end(), u2.begin(), u2.end());
    out.energy = segment_energy(x1, u1, geo.mass) + segment_energy(x2, u2, geo.mass);
    // Flux with the exterior outward normal (pointing into B).
    const double xa[4] = {x1[n1 - 4], x1[n1 - 3], x1[n1 - 2], x1[n1 - 1]};
    const double ua[4] = {u1[n1 - 4], u1[n1 - 3], u1[n1 - 2], u1[n1 - 1]};
    const double dua = onesided_derivative4(xa, ua);
    const double xb[4] = {x2[3], x2[2], x2[1], x2[0]};
    const double ub[4] = {u2[3], u2[2], u2[1], u2[0]};
    const double dub = onesided_derivative4(xb, ub);
    // Gamma = a h_a u'(a-) - b h_b u'(b+), the exterior-normal orientation.
    out.flux = geo.a * h.values[0] * dua - geo.b * h.values[1] * dub;
    return out;
  }
  if (geo.dim == 2) {
    if (!(geo.rho > 0.0 && geo.cx > geo.rho))
      throw BadField("exterior problem: disk must sit in {x1 > 0}");
    if (static_cast<int>(h.values.size()) != geo.angles)
      throw BadField("exterior problem: trace sample count != angles");
    return solve_disk(geo, h);
  }
  throw BadField("exterior problem: dim must be 1 or 2");
}

GammaResult gamma(const ExteriorGeometry& geo, const BoundaryData& h,
                  double truncation_tol) {
  GammaResult out;
  ExteriorSolution base = solve_minimizer(geo, h);
  out.value = base.energy;
  out.flux = base.flux;
  ExteriorGeometry wide = geo;
  wide.l_out = 2.0 * geo.l_out;
  out.value_wide = solve_minimizer(wide, h).energy;
  out.truncation_shift = std::abs(out.value_wide - out.value);
  if (truncation_tol >= 0.0 &&
      out.truncation_shift > truncation_tol * std::max(out.value, 1e-300))
    throw TruncationNotConverged("gamma: doubling l_out moved the value");
  return out;
}

GammaProperties gamma_properties_report(const ExteriorGeometry& geo,
                                        const BoundaryData& h1,
                                        const BoundaryData& h2,
                                        const std::vector<double>& masses) {
  GammaProperties out;
  auto G = [&](const ExteriorGeometry& g, const BoundaryData& h) {
    return solve_minimizer(g, h).energy;
  };

  const double g1 = G(geo, h1);
  BoundaryData h1x2 = h1;
  for (double& v : h1x2.values) v *= 2.0;
  out.homogeneity_gap = std::abs(G(geo, h1x2) - 4.0 * g1) / std::max(g1, 1e-300);

  const double lambda = 1.5;
  const double expect = std::pow(lambda, geo.dim - 1) * g1;
  out.scaling_gap = std::abs(G(geo.scaled(lambda), h1) - expect) /
                    std::max(std::abs(expect), 1e-300);

  BoundaryData mid = h1;
  for (std::size_t i = 0; i < mid.values.size(); ++i)
    mid.values[i] = 0.5 * (h1.values[i] + h2.values[i]);
  out.h_convexity_gap = 0.5 * (g1 + G(geo, h2)) - G(geo, mid);

  for (double m : masses) {
    ExteriorGeometry g = geo;
    g.mass = m;
    out.gamma_of_mass.push_back(G(g, h1));
  }
  for (std::size_t i = 0; i + 1 < out.gamma_of_mass.size(); ++i)
    if (out.gamma_of_mass[i + 1] < out.gamma_of_mass[i] * (1.0 - 1e-12))
      out.m_monotone = false;
  for (std::size_t i = 0; i + 2 < out.gamma_of_mass.size(); ++i) {
    // Midpoint gaps only where the list is equispaced.
    if (std::abs((masses[i + 2] - masses[i + 1]) - (masses[i + 1] - masses[i])) >
        1e-12)
      continue;
    out.m_convexity_gaps.push_back(
        0.5 * (out.gamma_of_mass[i] + out.gamma_of_mass[i + 2]) -
        out.gamma_of_mass[i + 1]);
  }
  return out;
}

BoundaryData trace_of(const Field& f, const Region& b, int angles) {
  const GridSpec& g = f.grid;
  if (g.d == 1) {
    auto [lo, hi] = b.strip_interval(1);
    return BoundaryData::interval(fft::eval_trig_1d(fft::forward(f), lo),
                                  fft::eval_trig_1d(fft::forward(f), hi));
  }
  if (b.kind != Region::Kind::Ball)
    throw BadField("trace_of: ball region required in d >= 2");
  std::vector<double> v(angles);
  for (int j = 0; j < angles; ++j) {
    const double th = 2.0 * M_PI * j / angles;
    v[j] = interpolate6(f, {b.center[0] + b.radius * std::cos(th),
                            b.center[1] + b.radius * std::sin(th), 0.0});
  }
  return BoundaryData::circle(std::move(v));
}

Field glue_extension(const Field& f, const ExteriorSolution& u, const Region& b,
                     double trace_tol) {
  const GridSpec& g = f.grid;
  // Offset between the wave-grid frame and the exterior-solver frame.
  std::array<double, 3> off{0.0, 0.0, 0.0};
  if (g.d == 1) {
    auto [lo, hi] = b.strip_interval(1);
    off[0] = lo - u.geo.a;
    (void)hi;
  } else {
    off[0] = b.center[0] - u.geo.cx;
    off[1] = b.center[1] - u.geo.cy;
  }

  // Trace compatibility, relative to the field scale.
  const int kang = (g.d == 1) ? 2 : u.angles;
  BoundaryData ft = trace_of(f, b, kang);
  double scale = 1e-300;
  for (double v : f.v) scale = std::max(scale, std::abs(v));
  if (g.d == 1) {
    if (std::abs(ft.values[0] - u.values[u.inner_nodes - 1]) > trace_tol * scale ||
        std::abs(ft.values[1] - u.values[u.inner_nodes]) > trace_tol * scale)
      throw TraceMismatch("glue_extension: boundary traces differ");
  } else {
    for (int j = 0; j < u.angles; ++j)
      if (std::abs(ft.values[j] - u.values[j]) > trace_tol * scale)
        throw TraceMismatch("glue_extension: boundary traces differ");
  }

  Field out(g);
  for (std::int64_t i = 0; i < out.size(); ++i) {
    const auto x = out.point(i);
    if (b.contains(x, g.d)) {
      out.v[i] = f.v[i];
    } else {
      out.v[i] = u.eval({x[0] - off[0], x[1] - off[1], 0.0});
    }
  }
  return out;
}

}  // namespace wavent
