#include "dunkl/grid.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "dunkl/error.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl {

int QuadratureGrid::flat(const std::vector<int>& idx) const {
  int f = 0;
  for (int j = 0; j < dim; ++j) f = f * n_axis + idx[j];
  return f;
}

std::vector<int> QuadratureGrid::unflat(int i) const {
  std::vector<int> idx(dim);
  for (int j = dim - 1; j >= 0; --j) {
    idx[j] = i % n_axis;
    i /= n_axis;
  }
  return idx;
}

namespace {

void half_axis(double kappa, double R, int half, int panels, std::vector<double>& x,
               std::vector<double>& w) {
  const double h = R / panels;
  const double c = std::pow(2.0, kappa);
  x.clear();
  w.clear();
  // split the half count evenly across panels, first panel takes the remainder
  const int per = half / panels;
  const int first = half - per * (panels - 1);
  const auto gj = gauss_jacobi(first, 0.0, 2.0 * kappa);
  const double s = c * std::pow(h / 2.0, 2.0 * kappa + 1.0);
  for (int i = 0; i < first; ++i) {
    x.push_back(h / 2.0 * (1.0 + gj.nodes[i]));
    w.push_back(s * gj.weights[i]);
  }
  if (panels > 1) {
    const auto gl = gauss_legendre(per);
    for (int p = 1; p < panels; ++p) {
      for (int i = 0; i < per; ++i) {
        const double xi = p * h + h / 2.0 * (1.0 + gl.nodes[i]);
        x.push_back(xi);
        w.push_back(c * std::pow(xi, 2.0 * kappa) * h / 2.0 * gl.weights[i]);
      }
    }
  }
}

}  // namespace

std::shared_ptr<const QuadratureGrid> build_grid(const RootSystem& rs, double R, int N,
                                                 int panels) {
  require(rs.kind() == GroupKind::Z2Product, ErrorKind::Capability, "transform",
          "grids are built for Z2 products only");
  require(R > 0.0, ErrorKind::Input, "transform", "grid half-width must be positive");
  require(N >= 2 && N % 2 == 0, ErrorKind::Input, "transform",
          "node count per axis must be even so the grid stays reflection-closed");
  require(panels >= 1 && N / 2 >= panels, ErrorKind::Input, "transform",
          "need at least one node per panel");

  auto g = std::make_shared<QuadratureGrid>();
  g->rs = rs;
  g->group = generate_group(rs);
  g->dim = rs.dimension();
  g->n_axis = N;
  g->R = R;
  g->panels = panels;
  const int d = g->dim;
  const int half = N / 2;

  for (int j = 0; j < d; ++j) {
    std::vector<double> x, w;
    half_axis(rs.axis_multiplicities()[j], R, half, panels, x, w);
    std::vector<double> nx(N), nw(N);
    for (int i = 0; i < half; ++i) {
      nx[half + i] = x[i];
      nw[half + i] = w[i];
      nx[half - 1 - i] = -x[i];
      nw[half - 1 - i] = w[i];
    }
    g->axis_nodes.push_back(std::move(nx));
    g->axis_mu.push_back(std::move(nw));
  }

  std::size_t total = 1;
  for (int j = 0; j < d; ++j) total *= N;
  g->nodes.resize(total);
  g->mu.resize(static_cast<Eigen::Index>(total));
  g->negation.resize(total);
  g->axis_flip.assign(d, std::vector<int>(total));
  for (std::size_t i = 0; i < total; ++i) {
    const auto idx = g->unflat(static_cast<int>(i));
    Vec p(d);
    double m = 1.0;
    for (int j = 0; j < d; ++j) {
      p(j) = g->axis_nodes[j][idx[j]];
      m *= g->axis_mu[j][idx[j]];
    }
    g->nodes[i] = p;
    g->mu(static_cast<Eigen::Index>(i)) = m;
    auto neg = idx;
    for (int j = 0; j < d; ++j) neg[j] = N - 1 - idx[j];
    g->negation[i] = g->flat(neg);
    for (int j = 0; j < d; ++j) {
      auto f = idx;
      f[j] = N - 1 - idx[j];
      g->axis_flip[j][i] = g->flat(f);
    }
  }

  // every element of a Z2 product is a diagonal sign matrix
  for (const auto& e : g->group.elements()) {
    std::vector<int> map(total);
    for (std::size_t i = 0; i < total; ++i) {
      auto idx = g->unflat(static_cast<int>(i));
      for (int j = 0; j < d; ++j)
        if (e(j, j) < 0.0) idx[j] = N - 1 - idx[j];
      map[i] = g->flat(idx);
      require((e * g->nodes[i] - g->nodes[map[i]]).norm() <= 1e-12, ErrorKind::Structural,
              "transform", "grid is not closed under the group");
    }
    g->reflection_map.push_back(std::move(map));
  }
  return g;
}

Vec sample(const QuadratureGrid& g, const std::function<double(const Vec&)>& f) {
  Vec v(static_cast<Eigen::Index>(g.size()));
  for (std::size_t i = 0; i < g.size(); ++i) v(static_cast<Eigen::Index>(i)) = f(g.nodes[i]);
  return v;
}

double integrate(const QuadratureGrid& g, const Vec& f) {
  require(static_cast<std::size_t>(f.size()) == g.size(), ErrorKind::Input, "transform",
          "sample length does not match the grid");
  return g.mu.dot(f);
}

double norm(const QuadratureGrid& g, const CVec& f, double p) {
  require(static_cast<std::size_t>(f.size()) == g.size(), ErrorKind::Input, "transform",
          "sample length does not match the grid");
  if (std::isinf(p)) return f.cwiseAbs().maxCoeff();
  double s = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) s += g.mu(i) * std::pow(std::abs(f(i)), p);
  return std::pow(s, 1.0 / p);
}

std::complex<double> inner(const QuadratureGrid& g, const CVec& f, const CVec& h) {
  require(static_cast<std::size_t>(f.size()) == g.size() &&
              static_cast<std::size_t>(h.size()) == g.size(),
          ErrorKind::Input, "transform", "sample length does not match the grid");
  std::complex<double> s = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) s += g.mu(i) * f(i) * std::conj(h(i));
  return s;
}

void write_csv(std::ostream& os, const QuadratureGrid& g, const CVec& f) {
  require(static_cast<std::size_t>(f.size()) == g.size(), ErrorKind::Input, "transform",
          "sample length does not match the grid");
  for (int j = 0; j < g.dim; ++j) os << 'x' << j << ',';
  os << "weight,value,imag\n";
  os << std::setprecision(17);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (int j = 0; j < g.dim; ++j) os << g.nodes[i](j) << ',';
    const auto k = static_cast<Eigen::Index>(i);
    os << g.mu(k) << ',' << f(k).real() << ',' << f(k).imag() << '\n';
  }
}

CVec read_csv(std::istream& is, const QuadratureGrid& g) {
  std::string line;
  require(static_cast<bool>(std::getline(is, line)), ErrorKind::Input, "transform",
          "empty sampled-function CSV");
  CVec f(static_cast<Eigen::Index>(g.size()));
  std::size_t row = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    require(row < g.size(), ErrorKind::Input, "transform", "CSV has more rows than the grid");
    std::vector<double> cols;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cols.push_back(std::stod(cell));
    require(static_cast<int>(cols.size()) >= g.dim + 2, ErrorKind::Input, "transform",
            "CSV row is too short");
    for (int j = 0; j < g.dim; ++j)
      require(std::abs(cols[j] - g.nodes[row](j)) <= 1e-9 * (1.0 + std::abs(cols[j])),
              ErrorKind::Input, "transform", "CSV nodes do not match the grid");
    const double im = static_cast<int>(cols.size()) > g.dim + 2 ? cols[g.dim + 2] : 0.0;
    f(static_cast<Eigen::Index>(row)) = {cols[g.dim + 1], im};
    ++row;
  }
  require(row == g.size(), ErrorKind::Input, "transform", "CSV has fewer rows than the grid");
  return f;
}

}  // namespace dunkl
