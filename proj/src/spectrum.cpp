#include "qes/spectrum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qes {

Eigen::ArrayXd GridSpec::nodes() const {
  validate();
  Eigen::ArrayXd x(points);
  const double step = h();
  for (int i = 0; i < points; ++i) x[i] = x_min + i * step;
  x[points - 1] = x_max;
  return x;
}

void GridSpec::validate() const {
  if (!(x_min < x_max)) throw std::invalid_argument("GridSpec: x_min must be < x_max");
  if (points < 3) throw std::invalid_argument("GridSpec: points must be >= 3");
}

GridSpec GridSpec::parse(const std::string& text) {
  GridSpec g;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> g.x_min >> c1 >> g.x_max >> c2 >> g.points) || c1 != ':' || c2 != ':')
    throw std::invalid_argument("GridSpec: expected \"min:max:points\", got \"" + text + "\"");
  g.validate();
  return g;
}

GridSpec default_grid(const CoordinateMap& map) {
  if (std::isinf(map.x_min)) return {-10.0, 10.0, 20001};
  if (std::isinf(map.x_max)) return {map.x_min + 1e-8, 12.0, 24001};
  // finite interval (trigonometric class): stay off both endpoints
  double pad = 1e-8 * (map.x_max - map.x_min);
  return {map.x_min + pad, map.x_max - pad, 20001};
}

namespace {

// Composite Simpson weights; falls back to a 3/8 tail when the interval
// count is odd.
template <typename Scalar>
Scalar simpson(const Eigen::Array<Scalar, Eigen::Dynamic, 1>& f, double h) {
  const Eigen::Index n = f.size();
  if (n < 3) throw std::invalid_argument("simpson: need at least 3 points");
  Scalar total = Scalar(0);
  Eigen::Index limit = n;
  bool tail38 = false;
  if (n % 2 == 0) {  // odd interval count: Simpson up to n-4, 3/8 on the last 3
    if (n < 4) throw std::invalid_argument("simpson: unsupported point count");
    limit = n - 3;
    tail38 = true;
  }
  for (Eigen::Index i = 0; i + 2 < limit + (tail38 ? 1 : 0); i += 2)
    total += (h / 3.0) * (f[i] + 4.0 * f[i + 1] + f[i + 2]);
  if (tail38)
    total += (3.0 * h / 8.0) * (f[n - 4] + 3.0 * f[n - 3] + 3.0 * f[n - 2] + f[n - 1]);
  return total;
}

int count_sign_changes(const Eigen::ArrayXcd& f) {
  double peak = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) peak = std::max(peak, std::abs(f[i]));
  const double dead_band = 1e-12 * peak;
  int changes = 0;
  int last_sign = 0;
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    double v = f[i].real();
    if (std::abs(v) <= dead_band) continue;
    int sign = v > 0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return changes;
}

bool effectively_real(const Eigen::ArrayXcd& f) {
  double peak = 0.0, im = 0.0;
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    peak = std::max(peak, std::abs(f[i]));
    im = std::max(im, std::abs(f[i].imag()));
  }
  return im <= 1e-10 * std::max(peak, 1e-300);
}

}  // namespace

double norm_squared(const Eigen::ArrayXcd& f, double h) {
  Eigen::ArrayXd a = f.abs2();
  return simpson<double>(a, h);
}

QesState finalize_state(const GridSpec& grid, Eigen::ArrayXcd raw, Complex energy,
                        double domain_min, bool normalize, bool strict) {
  grid.validate();
  QesState st;
  st.energy = energy;
  st.grid = grid;

  const double n2 = norm_squared(raw, grid.h());
  st.norm = std::sqrt(n2);

  if (strict) {
    double peak = 0.0;
    for (Eigen::Index i = 0; i < raw.size(); ++i) peak = std::max(peak, std::abs(raw[i]));
    if (std::abs(raw[raw.size() - 1]) > 1e-10 * peak)
      throw std::runtime_error("state truncation inadequate at x_max; enlarge the grid");
    if (std::isinf(domain_min) || domain_min < grid.x_min - 1e-12) {
      if (std::isinf(domain_min)) {
        if (std::abs(raw[0]) > 1e-10 * peak)
          throw std::runtime_error("state truncation inadequate at x_min; enlarge the grid");
      } else {
        // finite natural boundary: bound the omitted strip's probability mass
        const double strip = std::norm(raw[0]) * (grid.x_min - domain_min);
        if (strip > 1e-7 * n2)
          throw std::runtime_error("grid starts too far from the domain boundary; shrink x_min");
      }
    }
  }

  if (normalize && st.norm > 0.0) raw /= st.norm;
  st.samples = std::move(raw);
  st.nodes = effectively_real(st.samples) ? count_sign_changes(st.samples) : -1;
  return st;
}

namespace {

QesState sample_common(const ModelSpec& spec, const RootSet& roots, const GridSpec& grid,
                       bool normalize, bool strict) {
  const CompiledModel cm(spec);
  if (!(grid.x_min > cm.map.x_min && grid.x_max < cm.map.x_max))
    throw std::invalid_argument("grid exceeds the physical domain");
  Eigen::ArrayXd x = grid.nodes();
  Eigen::ArrayXcd raw(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) raw[i] = cm.phi(roots.roots, x[i]);
  const Complex e = cm.pot.energy(roots.sum());
  QesState st = finalize_state(grid, std::move(raw), e, cm.map.x_min, normalize, strict);
  st.source = roots;
  return st;
}

}  // namespace

QesState build_state(const ModelSpec& spec, const RootSet& roots, const GridSpec& grid) {
  return sample_common(spec, roots, grid, true, true);
}

QesState sample_state(const ModelSpec& spec, const RootSet& roots, const GridSpec& grid) {
  return sample_common(spec, roots, grid, false, false);
}

Eigen::MatrixXcd orthogonality(const std::vector<QesState>& states) {
  const std::size_t n = states.size();
  Eigen::MatrixXcd gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (states[i].grid.points != states[j].grid.points ||
          states[i].grid.x_min != states[j].grid.x_min ||
          states[i].grid.x_max != states[j].grid.x_max)
        throw std::invalid_argument("orthogonality: states must share a grid");
      Eigen::ArrayXcd prod = states[i].samples.conjugate() * states[j].samples;
      gram(i, j) = simpson<Complex>(prod, states[i].grid.h());
    }
  }
  return gram;
}

}  // namespace qes
