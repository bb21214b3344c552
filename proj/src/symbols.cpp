#include "torusctl/symbols.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace torusctl {

std::string_view symmetry_name(Symmetry s) {
  switch (s) {
    case Symmetry::H2: return "H2";
    case Symmetry::H3: return "H3";
    default: return "none";
  }
}

double eigenvalue(const DispersionSymbol& sym, ModeIndex k) { return k.k1 * sym.b(k); }

namespace {

int sgn(int v) { return (v > 0) - (v < 0); }

DispersionSymbol make_dgbozk(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("dgbozk: alpha must be > 0");
  DispersionSymbol sym;
  sym.name = "dgbozk:" + std::to_string(alpha);
  // trim trailing zeros for a stable display name
  while (sym.name.back() == '0') sym.name.pop_back();
  if (sym.name.back() == '.') sym.name.pop_back();
  sym.b = [alpha](ModeIndex k) {
    return std::pow(std::abs(static_cast<double>(k.k1)), alpha) +
           static_cast<double>(k.k2) * k.k2;
  };
  sym.order_r = std::max(alpha + 1.0, 3.0);
  sym.growth_c = 2.0;
  sym.threshold_n0 = 1.0;
  sym.declared_symmetry = Symmetry::H3;
  return sym;
}

}  // namespace

DispersionSymbol builtin_symbol(std::string_view spec) {
  if (spec == "zk") {
    DispersionSymbol sym;
    sym.name = "zk";
    sym.b = [](ModeIndex k) {
      return static_cast<double>(k.k1) * k.k1 + static_cast<double>(k.k2) * k.k2;
    };
    sym.order_r = 3.0;
    sym.growth_c = 1.0;
    sym.threshold_n0 = 1.0;
    sym.declared_symmetry = Symmetry::H3;
    return sym;
  }
  if (spec == "bo2d") {
    DispersionSymbol sym;
    sym.name = "bo2d";
    sym.b = [](ModeIndex k) { return static_cast<double>(k.k2) * sgn(k.k1); };
    sym.order_r = 2.0;
    sym.growth_c = 1.0;
    sym.threshold_n0 = 1.0;
    sym.declared_symmetry = Symmetry::H2;
    return sym;
  }
  if (spec == "bozk") {
    DispersionSymbol sym;
    sym.name = "bozk";
    sym.b = [](ModeIndex k) {
      return std::abs(static_cast<double>(k.k1)) + static_cast<double>(k.k2) * k.k2;
    };
    sym.order_r = 3.0;
    sym.growth_c = 2.0;
    sym.threshold_n0 = 1.0;
    sym.declared_symmetry = Symmetry::H3;
    return sym;
  }
  if (spec.starts_with("dgbozk:")) {
    const std::string_view alpha_str = spec.substr(7);
    double alpha = 0.0;
    const auto [ptr, ec] =
        std::from_chars(alpha_str.data(), alpha_str.data() + alpha_str.size(), alpha);
    if (ec != std::errc() || ptr != alpha_str.data() + alpha_str.size())
      throw std::invalid_argument("dgbozk: cannot parse alpha from '" + std::string(spec) + "'");
    return make_dgbozk(alpha);
  }
  throw std::invalid_argument("unknown symbol '" + std::string(spec) +
                              "' (expected zk, bo2d, bozk, or dgbozk:<alpha>)");
}

std::optional<double> builtin_analytic_gamma_prime(std::string_view model_name) {
  if (model_name == "zk" || model_name == "bo2d" || model_name == "bozk" ||
      model_name.substr(0, 7) == "dgbozk:")
    return 1.0;
  return std::nullopt;
}

GrowthReport symbol_growth_check(const DispersionSymbol& sym, int radius) {
  if (radius < 1) throw std::invalid_argument("symbol_growth_check: radius must be >= 1");
  GrowthReport report;
  const double floor = std::max(sym.threshold_n0, 1.0);
  for (const ModeIndex k : box_modes(radius)) {
    const double abs_k = k.abs();
    if (abs_k < floor) continue;
    const double denom = std::pow(abs_k * abs_k, 0.5 * (sym.order_r - 1.0));
    const double ratio = std::abs(sym.b(k)) / denom;
    if (ratio > report.worst_ratio) {
      report.worst_ratio = ratio;
      report.worst_mode = k;
    }
  }
  report.holds = report.worst_ratio <= sym.growth_c;
  return report;
}

EigenvalueTable::EigenvalueTable(const DispersionSymbol& sym, int radius)
    : radius_(radius), symmetry_(sym.declared_symmetry), symbol_name_(sym.name) {
  if (radius < 0) throw std::invalid_argument("EigenvalueTable: radius must be >= 0");
  const int side = 2 * radius + 1;
  lambda_.resize(side * side);
  for (const ModeIndex k : box_modes(radius))
    lambda_[(k.k1 + radius) * side + (k.k2 + radius)] = eigenvalue(sym, k);
}

double EigenvalueTable::lambda(ModeIndex k) const {
  if (k.k1 < -radius_ || k.k1 > radius_ || k.k2 < -radius_ || k.k2 > radius_)
    throw std::out_of_range("EigenvalueTable::lambda: mode outside lattice box");
  return lambda_[(k.k1 + radius_) * (2 * radius_ + 1) + (k.k2 + radius_)];
}

SpectralField propagate_free(const SpectralField& u0, const EigenvalueTable& table, double t) {
  if (u0.radius() != table.radius())
    throw std::invalid_argument("propagate_free: field and table radii differ");
  SpectralField u(u0.radius(), u0.sobolev_index());
  const int n = u0.box_size();
  for (int i = 0; i < n; ++i) {
    const double phase = table.lambda(u0.mode_at(i)) * t;
    u.data()[i] = u0.data()[i] * Complex(std::cos(phase), std::sin(phase));
  }
  return u;
}

}  // namespace torusctl
