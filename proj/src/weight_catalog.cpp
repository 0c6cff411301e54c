#include "hardydiv/weight_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hardydiv/cusp_geometry.hpp"

namespace hardydiv {

namespace {
const double kLn2 = std::log(2.0);
}

WeightSpec WeightSpec::power(double beta) {
  WeightSpec w;
  w.kind_ = Kind::Power;
  w.param_ = beta;
  return w;
}

WeightSpec WeightSpec::log_power(double alpha) {
  WeightSpec w;
  w.kind_ = Kind::LogPower;
  w.param_ = alpha;
  return w;
}

WeightSpec WeightSpec::tabulated(std::vector<double> x, std::vector<double> w) {
  if (x.size() != w.size() || x.size() < 2)
    throw std::invalid_argument("tabulated weight needs >= 2 (x, omega) samples");
  WeightSpec spec;
  spec.kind_ = Kind::Tabulated;
  double prev = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > prev) || !(x[i] <= 1.0))
      throw std::invalid_argument("tabulated weight: x1 must be strictly increasing in (0, 1]");
    if (!(w[i] > 0.0) || !std::isfinite(w[i]))
      throw std::invalid_argument("tabulated weight: samples must be positive");
    spec.tab_logx_.push_back(std::log(x[i]));
    spec.tab_logw_.push_back(std::log(w[i]));
    prev = x[i];
  }
  return spec;
}

WeightSpec WeightSpec::from_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open weight CSV: " + path.string());
  std::vector<double> xs, ws;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ss(line);
    double x, w;
    if (ss >> x >> w) {
      xs.push_back(x);
      ws.push_back(w);
    }
  }
  return tabulated(std::move(xs), std::move(ws));
}

double WeightSpec::log_value(double x1) const { return log_value_from_logx(std::log(x1)); }

double WeightSpec::log_value_from_logx(double lx) const {
  switch (kind_) {
    case Kind::Power:
      return param_ * lx;
    case Kind::LogPower:
      return param_ * std::log(1.0 - lx);
    case Kind::Tabulated: {
      if (lx <= tab_logx_.front()) return tab_logw_.front();
      if (lx >= tab_logx_.back()) return tab_logw_.back();
      const auto it = std::upper_bound(tab_logx_.begin(), tab_logx_.end(), lx);
      const std::size_t j = static_cast<std::size_t>(it - tab_logx_.begin());
      const double t = (lx - tab_logx_[j - 1]) / (tab_logx_[j] - tab_logx_[j - 1]);
      return tab_logw_[j - 1] + t * (tab_logw_[j] - tab_logw_[j - 1]);
    }
  }
  return 0.0;
}

double WeightSpec::operator()(double x1) const {
  if (!(x1 > 0.0) || !(x1 < 1.0 + 1e-15))
    throw std::domain_error("weight evaluation requires x1 in (0, 1]");
  return std::exp(log_value(x1));
}

AdmissibilityReport admissibility(const WeightSpec& w, double p, double gamma,
                                  std::int64_t i_max) {
  if (i_max < 1) throw std::invalid_argument("admissibility: i_max >= 1 required");
  conjugate_exponent(p);
  AdmissibilityReport rep;
  for (std::int64_t i = 0; i <= i_max; ++i) {
    // the families here are monotone in x1, so sup/inf sit at the strip ends
    const double la = w.log_value_from_logx(-static_cast<double>(i + 2) * kLn2);
    const double lb = w.log_value_from_logx(-static_cast<double>(i) * kLn2);
    rep.per_subdomain_ratios.push_back(std::exp(std::abs(la - lb)));
  }
  rep.c_omega = *std::max_element(rep.per_subdomain_ratios.begin(),
                                  rep.per_subdomain_ratios.end());
  switch (w.kind()) {
    case WeightSpec::Kind::Power:
      rep.c_omega = std::max(rep.c_omega, std::exp2(2.0 * std::abs(w.beta())));
      rep.integrable = w.beta() * p + gamma > -1.0;
      break;
    case WeightSpec::Kind::LogPower:
      rep.c_omega = std::max(rep.c_omega, std::pow(1.0 + 2.0 * kLn2, std::abs(w.alpha())));
      rep.integrable = true;
      break;
    case WeightSpec::Kind::Tabulated: {
      // local power-law fit at the small-x1 end decides the tail
      const double l0 = w.log_value_from_logx(-static_cast<double>(i_max + 2) * kLn2);
      const double l1 = w.log_value_from_logx(-static_cast<double>(i_max) * kLn2);
      const double slope = (l1 - l0) / (2.0 * kLn2);  // d ln(omega) / d ln(x1)
      rep.integrable = slope * p + gamma > -1.0;
      break;
    }
  }
  return rep;
}

SequenceWeight hardy_sequence(const WeightSpec& w, double gamma, double p, std::int64_t n) {
  if (!(gamma >= 1.0)) throw std::domain_error("gamma >= 1 required");
  conjugate_exponent(p);
  (void)n;  // truncation chosen per call site; the generator is unbounded
  const double log_pre = std::log(measure_prefactor(gamma));
  return SequenceWeight::from_log_generator([=](std::int64_t i) {
    const double fi = static_cast<double>(i);
    return log_pre - (gamma + 1.0) * fi * kLn2 + p * w.log_value_from_logx(-fi * kLn2);
  });
}

double power_ch_bound(double beta, double gamma, double p) {
  const double q = conjugate_exponent(p);
  const double r = std::exp2(-p * beta - gamma - 1.0);
  if (!(r < 1.0)) throw std::domain_error("power_ch_bound: beta <= -(gamma+1)/p is inadmissible");
  return 4.0 * std::pow(1.0 / (r * (1.0 - r)), 1.0 / p) *
         std::pow(1.0 / (std::pow(r, 1.0 - q) - 1.0), 1.0 / q);
}

LogWeightResult log_weight_A(double alpha, double gamma, double p, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("log_weight_A: n >= 2 required");
  const double q = conjugate_exponent(p);
  const auto u = hardy_sequence(WeightSpec::log_power(alpha), gamma, p, n);
  LogWeightResult out;
  out.a = characterization_A(u, u, p, n).value;
  // For alpha < 0 the constant converges only like |alpha|/N, so the
  // doubling test runs at a truncation of at least 10^6 regardless of the
  // reporting truncation n.
  const std::int64_t n_check = std::max<std::int64_t>(n, 1000000);
  const auto a1 = characterization_A(u, u, p, n_check);
  const auto a2 = characterization_A(u, u, p, 2 * n_check);
  out.finite = a1.finite && a2.finite && std::abs(a2.value - a1.value) <= 1e-6 * a1.value;

  // integral quotient of the tail analysis:
  //   int_1^{N+1} rt^t (1+t ln2)^at dt  /  (rt^N (1+N ln2)^at),
  // evaluated in normalized form; its limit is rt/ln(rt).
  const double log_rt = (gamma + 1.0) * (q - 1.0) * kLn2;
  const double at = -alpha * q;
  const double fn = static_cast<double>(n);
  const double lo = std::max(1.0, fn - 60.0 / log_rt);
  const double hi = fn + 1.0;
  const auto integrand = [&](double t) {
    return std::exp((t - fn) * log_rt) *
           std::pow((1.0 + t * kLn2) / (1.0 + fn * kLn2), at);
  };
  const int m = 4096;  // Simpson panels
  const double h = (hi - lo) / (2 * m);
  double s = integrand(lo) + integrand(hi);
  for (int k = 1; k < 2 * m; ++k) s += integrand(lo + k * h) * (k % 2 ? 4.0 : 2.0);
  out.quotient = s * h / 3.0;
  out.quotient_limit = std::exp(log_rt) / log_rt;
  return out;
}

CounterexampleIntegrals counterexample_integrals(double gamma, double eps) {
  if (!(gamma >= 1.0)) throw std::domain_error("gamma >= 1 required");
  if (!(eps > 0.0) || !(eps < 1.0)) throw std::domain_error("eps must lie in (0, 1)");
  CounterexampleIntegrals out;
  out.l1 = std::log(1.0 - std::log(eps));
  out.weighted_l2 = 1.0 - 1.0 / (1.0 - std::log(eps));
  return out;
}

}  // namespace hardydiv
