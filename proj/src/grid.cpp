#include "geomvi/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace geomvi {

namespace {

void check_same_size(const GridFn& a, const GridFn& b, const char* op) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(op) + ": grid size mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
}

double dot_trapezoid(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t m = a.size();
  const double h = 1.0 / static_cast<double>(m - 1);
  double acc = 0.5 * (a[0] * b[0] + a[m - 1] * b[m - 1]);
  for (std::size_t i = 1; i + 1 < m; ++i) acc += a[i] * b[i];
  return acc * h;
}

}  // namespace

GridFn::GridFn(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 3) {
    throw std::invalid_argument("GridFn: need at least 3 grid points");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw std::invalid_argument("GridFn: non-finite value at index " +
                                  std::to_string(i));
    }
  }
}

GridFn GridFn::zeros(std::size_t m) { return GridFn(std::vector<double>(m, 0.0)); }

GridFn GridFn::constant(std::size_t m, double value) {
  return GridFn(std::vector<double>(m, value));
}

DomainMap::DomainMap(double lo_, double hi_) : lo(lo_), hi(hi_) {
  if (!(std::isfinite(lo) && std::isfinite(hi)) || !(hi > lo)) {
    throw std::invalid_argument("DomainMap: require finite lo < hi");
  }
}

GridFn operator+(const GridFn& a, const GridFn& b) {
  check_same_size(a, b, "operator+");
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return GridFn(std::move(v));
}

GridFn operator-(const GridFn& a, const GridFn& b) {
  check_same_size(a, b, "operator-");
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
  return GridFn(std::move(v));
}

GridFn operator*(double c, const GridFn& f) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = c * f[i];
  return GridFn(std::move(v));
}

GridFn hadamard(const GridFn& a, const GridFn& b) {
  check_same_size(a, b, "hadamard");
  std::vector<double> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] * b[i];
  return GridFn(std::move(v));
}

double integrate(const GridFn& f) {
  const std::size_t m = f.size();
  const double h = f.step();
  double acc = 0.5 * (f[0] + f[m - 1]);
  for (std::size_t i = 1; i + 1 < m; ++i) acc += f[i];
  return acc * h;
}

double inner(const GridFn& f, const GridFn& g) {
  check_same_size(f, g, "inner");
  return dot_trapezoid(f.values(), g.values());
}

double l2_norm(const GridFn& f) { return std::sqrt(inner(f, f)); }

std::vector<GridFn> gram_schmidt(const std::vector<GridFn>& raw) {
  std::vector<GridFn> out;
  out.reserve(raw.size());
  for (std::size_t j = 0; j < raw.size(); ++j) {
    if (j > 0) check_same_size(raw[0], raw[j], "gram_schmidt");
    std::vector<double> u = raw[j].values();
    for (int pass = 0; pass < 2; ++pass) {
      for (const GridFn& e : out) {
        const double c = dot_trapezoid(u, e.values());
        for (std::size_t i = 0; i < u.size(); ++i) u[i] -= c * e[i];
      }
    }
    const double nrm = std::sqrt(dot_trapezoid(u, u));
    if (nrm < 1e-12) {
      throw std::runtime_error("gram_schmidt: input " + std::to_string(j) +
                               " is numerically dependent on its predecessors");
    }
    for (double& x : u) x /= nrm;
    out.emplace_back(std::move(u));
  }
  return out;
}

GridFn to_unit(const GridFn& f, const DomainMap& map) {
  return map.width() * f;
}

GridFn from_unit(const GridFn& f, const DomainMap& map) {
  return (1.0 / map.width()) * f;
}

void write_csv(std::ostream& os, const GridFn& f) {
  os << "t,value\n";
  char buf[80];
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", f.t(i), f[i]);
    os << buf;
  }
}

GridFn read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line.rfind("t,value", 0) != 0) {
    throw std::runtime_error("GridFn csv: missing 't,value' header");
  }
  std::vector<double> v;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error("GridFn csv: malformed row '" + line + "'");
    }
    v.push_back(std::stod(line.substr(comma + 1)));
  }
  return GridFn(std::move(v));
}

void write_csv_file(const std::string& path, const GridFn& f) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_csv(os, f);
}

GridFn read_csv_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open for reading: " + path);
  return read_csv(is);
}

}  // namespace geomvi
