#include "geomvi/sphere.hpp"

#include <algorithm>
#include <cmath>

namespace geomvi {

namespace {

constexpr double kDust = 1e-8;  // tolerated negative excursion

void clamp_dust(std::vector<double>& v) {
  for (double& x : v) {
    if (x < 0.0 && x >= -kDust) x = 0.0;
  }
}

std::vector<double> normalized_psi(std::vector<double> v) {
  const std::size_t m = v.size();
  const double h = 1.0 / static_cast<double>(m - 1);
  double acc = 0.5 * (v[0] * v[0] + v[m - 1] * v[m - 1]);
  for (std::size_t i = 1; i + 1 < m; ++i) acc += v[i] * v[i];
  const double nrm = std::sqrt(acc * h);
  if (!(nrm > 0.0)) throw std::invalid_argument("Srd: zero norm");
  for (double& x : v) x /= nrm;
  return v;
}

void check_footpoint(const TangentVec& v, const Srd& psi, const char* op) {
  if (v.at.size() != psi.size()) {
    throw std::invalid_argument(std::string(op) + ": footpoint grid mismatch");
  }
  double dev = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    dev = std::max(dev, std::abs(v.at.psi()[i] - psi.psi()[i]));
  }
  if (dev > 1e-10) {
    throw std::invalid_argument(std::string(op) +
                                ": tangent vector footed at a different point");
  }
}

}  // namespace

Srd Srd::from_pdf(const GridFn& pdf) {
  std::vector<double> p = pdf.values();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < -1e-12) {
      throw std::invalid_argument("Srd::from_pdf: negative density at index " +
                                  std::to_string(i));
    }
    if (p[i] < 0.0) p[i] = 0.0;
  }
  const double mass = integrate(GridFn(p));
  if (std::abs(mass - 1.0) > 1e-3) {
    throw std::invalid_argument("Srd::from_pdf: mass " + std::to_string(mass) +
                                " is not within 1e-3 of one");
  }
  for (double& x : p) x = std::sqrt(x / mass);
  return Srd(GridFn(std::move(p)), Unchecked{});
}

Srd Srd::from_psi(GridFn psi) {
  std::vector<double> v = psi.values();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < -kDust) {
      throw std::invalid_argument("Srd::from_psi: negative value at index " +
                                  std::to_string(i));
    }
  }
  clamp_dust(v);
  GridFn g(std::move(v));
  const double sq = inner(g, g);
  if (std::abs(sq - 1.0) > 1e-8) {
    throw std::invalid_argument("Srd::from_psi: squared norm " +
                                std::to_string(sq) + " is not within 1e-8 of one");
  }
  return Srd(std::move(g), Unchecked{});
}

Srd Srd::uniform(std::size_t m) {
  return Srd(GridFn::constant(m, 1.0), Unchecked{});
}

GridFn Srd::pdf() const { return hadamard(psi_, psi_); }

double geodesic_distance(const Srd& psi1, const Srd& psi2) {
  const double ip = std::clamp(inner(psi1.psi(), psi2.psi()), -1.0, 1.0);
  return std::acos(ip);
}

Srd exp_map(const Srd& psi, const TangentVec& v) {
  check_footpoint(v, psi, "exp_map");
  // Stay honestly tangent even if roundoff crept in.
  const double along = inner(v.v, psi.psi());
  if (std::abs(along) > 1e-6) {
    throw std::invalid_argument("exp_map: vector is not tangent at the footpoint");
  }
  std::vector<double> w(v.v.values());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= along * psi.psi()[i];
  const double nrm = l2_norm(GridFn(w));
  if (nrm < 1e-14) return psi;

  const double c = std::cos(nrm), s = std::sin(nrm) / nrm;
  std::vector<double> r(w.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = c * psi.psi()[i] + s * w[i];
    worst = std::min(worst, r[i]);
  }
  if (worst < -kDust) {
    throw StepTooLarge("exp_map: step of length " + std::to_string(nrm) +
                       " leaves the positive orthant (min value " +
                       std::to_string(worst) + ")");
  }
  clamp_dust(r);
  return Srd(GridFn(normalized_psi(std::move(r))), Srd::Unchecked{});
}

TangentVec inv_exp_map(const Srd& psi1, const Srd& psi2) {
  if (psi1.size() != psi2.size()) {
    throw std::invalid_argument("inv_exp_map: grid size mismatch");
  }
  const double u = geodesic_distance(psi1, psi2);
  if (u < 1e-14) return TangentVec{psi1, GridFn::zeros(psi1.size())};
  const double scale = u / std::sin(u), c = std::cos(u);
  std::vector<double> v(psi1.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = scale * (psi2.psi()[i] - c * psi1.psi()[i]);
  }
  return TangentVec{psi1, GridFn(std::move(v))};
}

TangentVec parallel_transport(const TangentVec& v, const Srd& psi1, const Srd& psi2) {
  check_footpoint(v, psi1, "parallel_transport");
  if (psi1.size() != psi2.size()) {
    throw std::invalid_argument("parallel_transport: grid size mismatch");
  }
  GridFn sum = psi1.psi() + psi2.psi();
  const double denom = inner(sum, sum);
  if (std::sqrt(denom) < 1e-8) {
    throw std::runtime_error("parallel_transport: footpoints are antipodal");
  }
  const double c = 2.0 * inner(v.v, psi2.psi()) / denom;
  std::vector<double> w(v.v.values());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] -= c * sum[i];
  return TangentVec{psi2, GridFn(std::move(w))};
}

double hellinger(const GridFn& p, const GridFn& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("hellinger: grid size mismatch");
  }
  double acc = 0.0;
  const std::size_t m = p.size();
  for (std::size_t i = 0; i < m; ++i) {
    const double prod = std::max(0.0, p[i]) * std::max(0.0, q[i]);
    acc += trapezoid_weight(i, m) * std::sqrt(prod);
  }
  return std::sqrt(std::max(0.0, 1.0 - acc));
}

}  // namespace geomvi
