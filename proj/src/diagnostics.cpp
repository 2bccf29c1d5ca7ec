#include "fvlim/diagnostics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fvlim/textio.hpp"

namespace fvlim {

namespace {

constexpr std::array<double, 5> kGlNodes = {
    -0.90617984593866399, -0.53846931010568309, 0.0, 0.53846931010568309, 0.90617984593866399};
constexpr std::array<double, 5> kGlWeights = {
    0.23692688505618909, 0.47862867049936647, 0.56888888888888889, 0.47862867049936647,
    0.23692688505618909};

// Integral of f over [a, b] split at interior breakpoints.
template <class F>
double integrate_cell(F&& f, double a, double b, std::span<const double> splits) {
  double edges[8];
  int ne = 0;
  edges[ne++] = a;
  for (double s : splits)
    if (s > a && s < b && ne < 7) edges[ne++] = s;
  edges[ne++] = b;
  std::sort(edges, edges + ne);
  double sum = 0.0;
  for (int k = 0; k + 1 < ne; ++k) {
    const double lo = edges[k];
    const double hi = edges[k + 1];
    if (!(hi > lo)) continue;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double part = 0.0;
    for (int q = 0; q < 5; ++q) part += kGlWeights[q] * f(mid + half * kGlNodes[q]);
    sum += half * part;
  }
  return sum;
}

}  // namespace

CellField cell_averages(const std::function<double(double)>& f, const Grid1D& grid,
                        std::span<const double> split_points) {
  CellField out(grid, 1);
  const double dx = grid.dx();
  for (int i = 0; i < grid.n; ++i)
    out(i) = integrate_cell(f, grid.left_edge(i), grid.left_edge(i + 1), split_points) / dx;
  return out;
}

CellField cell_averages(const InitialCondition& ic, const Grid1D& grid, double gamma) {
  if (ic.components == 1) return cell_averages(ic.value, grid, ic.breakpoints);
  CellField out(grid, 3);
  const double dx = grid.dx();
  for (int c = 0; c < 3; ++c) {
    auto f = [&](double x) {
      const EulerConservative u = to_conservative(ic.primitive(x), gamma);
      return c == 0 ? u.rho : (c == 1 ? u.mom : u.energy);
    };
    for (int i = 0; i < grid.n; ++i)
      out(i, c) = integrate_cell(f, grid.left_edge(i), grid.left_edge(i + 1), ic.breakpoints) / dx;
  }
  return out;
}

namespace {

template <class Op>
double reduce_diff(const CellField& a, const CellField& b, int comp, ErrorRange range, Op&& op,
                   double init) {
  if (!a.same_layout(b)) throw std::invalid_argument("error norm: grids do not match");
  const Grid1D& g = a.grid();
  double acc = init;
  for (int i = 0; i < g.n; ++i) {
    if (range) {
      const double x = g.center(i);
      if (x < range->first || x > range->second) continue;
    }
    acc = op(acc, std::abs(a(i, comp) - b(i, comp)));
  }
  return acc;
}

}  // namespace

double l1_error(const CellField& a, const CellField& b, int comp, ErrorRange range) {
  return a.grid().dx() *
         reduce_diff(a, b, comp, range, [](double s, double d) { return s + d; }, 0.0);
}

double linf_error(const CellField& a, const CellField& b, int comp, ErrorRange range) {
  return reduce_diff(a, b, comp, range, [](double s, double d) { return std::max(s, d); }, 0.0);
}

double total_variation(const CellField& field, int comp, bool periodic) {
  const int n = field.grid().n;
  if (n < 2) throw std::invalid_argument("total_variation: need at least two cells");
  double tv = 0.0;
  for (int i = 0; i + 1 < n; ++i) tv += std::abs(field(i + 1, comp) - field(i, comp));
  if (periodic) tv += std::abs(field(0, comp) - field(n - 1, comp));
  return tv;
}

double total_mass(const CellField& field, int comp) {
  double sum = 0.0;
  for (int i = 0; i < field.grid().n; ++i) sum += field(i, comp);
  return sum * field.grid().dx();
}

void annotate_orders(std::vector<ErrorReport>& reports) {
  for (std::size_t k = 1; k < reports.size(); ++k) {
    if (reports[k].n_cells <= reports[k - 1].n_cells)
      throw std::invalid_argument("annotate_orders: n must be strictly increasing");
    const double ratio = static_cast<double>(reports[k].n_cells) / reports[k - 1].n_cells;
    if (reports[k].l1 > 0.0 && reports[k - 1].l1 > 0.0)
      reports[k].order_l1 = std::log(reports[k - 1].l1 / reports[k].l1) / std::log(ratio);
    if (reports[k].linf > 0.0 && reports[k - 1].linf > 0.0)
      reports[k].order_linf = std::log(reports[k - 1].linf / reports[k].linf) / std::log(ratio);
  }
}

ReferenceSolution ReferenceSolution::from_field(const CellField& field, std::string scheme,
                                                double t_end, double gamma,
                                                std::string config_hash) {
  ReferenceSolution ref;
  ref.scheme = std::move(scheme);
  ref.n = field.grid().n;
  ref.t_end = t_end;
  ref.gamma = gamma;
  ref.config_hash = std::move(config_hash);
  ref.x_left = field.grid().x_left;
  ref.x_right = field.grid().x_right;
  ref.components = field.components();
  ref.values.resize(static_cast<std::size_t>(ref.n) * ref.components);
  for (int i = 0; i < ref.n; ++i)
    for (int c = 0; c < ref.components; ++c)
      ref.values[static_cast<std::size_t>(i) * ref.components + c] = field(i, c);
  return ref;
}

void ReferenceSolution::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write reference file '" + path + "'");
  out << "scheme: " << scheme << "\n";
  out << "n: " << n << "\n";
  out << "t_end: " << fmt17(t_end) << "\n";
  out << "gamma: " << fmt17(gamma) << "\n";
  out << "config_hash: " << config_hash << "\n";
  out << "x_left: " << fmt17(x_left) << "\n";
  out << "x_right: " << fmt17(x_right) << "\n";
  out << "components: " << components << "\n";
  out << "\n";
  const Grid1D g(n, x_left, x_right);
  for (int i = 0; i < n; ++i) {
    out << fmt17(g.center(i));
    for (int c = 0; c < components; ++c)
      out << (c == 0 ? " " : ", ") << fmt17(values[static_cast<std::size_t>(i) * components + c]);
    out << "\n";
  }
  if (!out) throw std::runtime_error("write failed for reference file '" + path + "'");
}

ReferenceSolution ReferenceSolution::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read reference file '" + path + "'");
  ReferenceSolution ref;
  std::string line;
  bool in_header = true;
  int row = 0;
  while (std::getline(in, line)) {
    if (in_header) {
      if (line.empty()) {
        in_header = false;
        ref.values.assign(static_cast<std::size_t>(ref.n) * ref.components, 0.0);
        continue;
      }
      const auto colon = line.find(": ");
      if (colon == std::string::npos)
        throw std::runtime_error("reference file: malformed header line '" + line + "'");
      const std::string key = line.substr(0, colon);
      const std::string value = line.substr(colon + 2);
      if (key == "scheme") ref.scheme = value;
      else if (key == "n") ref.n = std::stoi(value);
      else if (key == "t_end") ref.t_end = std::stod(value);
      else if (key == "gamma") ref.gamma = std::stod(value);
      else if (key == "config_hash") ref.config_hash = value;
      else if (key == "x_left") ref.x_left = std::stod(value);
      else if (key == "x_right") ref.x_right = std::stod(value);
      else if (key == "components") ref.components = std::stoi(value);
      else throw std::runtime_error("reference file: unknown header key '" + key + "'");
      continue;
    }
    if (line.empty()) continue;
    if (row >= ref.n) throw std::runtime_error("reference file: more rows than n");
    std::istringstream ls(line);
    double x = 0.0;
    ls >> x;
    for (int c = 0; c < ref.components; ++c) {
      double v = 0.0;
      ls >> v;
      if (!ls) throw std::runtime_error("reference file: short row " + std::to_string(row));
      ref.values[static_cast<std::size_t>(row) * ref.components + c] = v;
      if (c + 1 < ref.components) {
        char sep = 0;
        ls >> sep;  // the comma
      }
    }
    ++row;
  }
  if (row != ref.n) throw std::runtime_error("reference file: expected " + std::to_string(ref.n) +
                                             " rows, got " + std::to_string(row));
  return ref;
}

ReferenceSolution ReferenceSolution::load_checked(const std::string& path,
                                                  const std::string& expected_hash) {
  ReferenceSolution ref = load(path);
  if (ref.config_hash != expected_hash)
    throw std::runtime_error("reference file '" + path + "': config hash mismatch (file " +
                             ref.config_hash + ", expected " + expected_hash + ")");
  return ref;
}

CellField ReferenceSolution::restrict_to(const Grid1D& coarse) const {
  if (coarse.n > n) throw std::invalid_argument("restrict_to: coarse grid finer than reference");
  if (coarse.x_left != x_left || coarse.x_right != x_right)
    throw std::invalid_argument("restrict_to: domain mismatch");
  CellField out(coarse, components);
  const Grid1D fine(n, x_left, x_right);
  const double dxf = fine.dx();
  const double dxc = coarse.dx();
  if (n % coarse.n == 0) {
    const int ratio = n / coarse.n;
    for (int i = 0; i < coarse.n; ++i)
      for (int c = 0; c < components; ++c) {
        double sum = 0.0;
        for (int k = 0; k < ratio; ++k)
          sum += values[static_cast<std::size_t>(i * ratio + k) * components + c];
        out(i, c) = sum / ratio;
      }
    return out;
  }
  for (int i = 0; i < coarse.n; ++i) {
    const double a = coarse.left_edge(i);
    const double b = coarse.left_edge(i + 1);
    const int first = std::max(0, static_cast<int>(std::floor((a - x_left) / dxf)));
    for (int c = 0; c < components; ++c) {
      double sum = 0.0;
      for (int j = first; j < n; ++j) {
        const double fl = fine.left_edge(j);
        if (fl >= b) break;
        const double overlap = std::min(b, fine.left_edge(j + 1)) - std::max(a, fl);
        if (overlap > 0.0) sum += overlap * values[static_cast<std::size_t>(j) * components + c];
      }
      out(i, c) = sum / dxc;
    }
  }
  return out;
}

}  // namespace fvlim
