#include "h2c/params.hpp"

#include <cstdio>
#include <istream>
#include <sstream>

#include "h2c/kgraph.hpp"

namespace h2c {

ParamSet ParamSet::pipeline_defaults() { return ParamSet{}; }

ParamSet ParamSet::extremal_defaults() {
  ParamSet p;
  p.gamma = 0.05;
  p.beta = 0.02;
  p.beta2 = 0.08;
  p.beta1 = 0.2;
  p.rho = 0.2;
  p.psi = 0.1;
  p.mu = 0.25;
  return p;
}

namespace {

struct Field {
  const char* name;
  double ParamSet::* ptr;
};

constexpr Field kFields[] = {
    {"eps", &ParamSet::eps},         {"gamma", &ParamSet::gamma},
    {"beta", &ParamSet::beta},       {"omega", &ParamSet::omega},
    {"phi", &ParamSet::phi},         {"alpha", &ParamSet::alpha},
    {"lambda", &ParamSet::lambda},   {"mu", &ParamSet::mu},
    {"kappa", &ParamSet::kappa},     {"eta", &ParamSet::eta},
    {"rho", &ParamSet::rho},         {"psi", &ParamSet::psi},
    {"beta1", &ParamSet::beta1},     {"beta2", &ParamSet::beta2},
    {"beta1p", &ParamSet::beta1p},   {"beta2p", &ParamSet::beta2p},
    {"c", &ParamSet::c},
};

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void ParamSet::set(const std::string& key, const std::string& value) {
  size_t pos = 0;
  if (key == "D") {
    int v = std::stoi(value, &pos);
    require(pos == value.size() && v >= 1, "params: bad value for D");
    D = v;
    return;
  }
  for (const Field& f : kFields) {
    if (key == f.name) {
      double v = std::stod(value, &pos);
      require(pos == value.size(), "params: malformed value for " + key);
      require(v > 0.0 && v < 1.0, "params: " + key + " must lie in (0,1)");
      this->*f.ptr = v;
      return;
    }
  }
  throw contract_error("params: unknown key " + key);
}

ParamSet ParamSet::parse(std::istream& in, ParamSet base) {
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    size_t last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    size_t eq = line.find('=');
    require(eq != std::string::npos, "params: expected key=value, got: " + line);
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto strip = [](std::string s) {
      size_t a = s.find_first_not_of(" \t");
      size_t b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    base.set(strip(key), strip(value));
  }
  return base;
}

std::string ParamSet::echo() const {
  std::ostringstream out;
  out << "D=" << D << "\n";
  for (const Field& f : kFields) out << f.name << "=" << format_double(this->*f.ptr) << "\n";
  return out.str();
}

std::vector<std::string> ParamSet::hierarchy_warnings(double factor) const {
  struct Link {
    const char* lo;
    double lo_val;
    const char* hi;
    double hi_val;
  };
  const Link chain[] = {
      {"1/D", 1.0 / D, "eps", eps}, {"eps", eps, "gamma", gamma},
      {"gamma", gamma, "beta", beta}, {"beta", beta, "omega", omega},
      {"omega", omega, "phi", phi},   {"phi", phi, "alpha", alpha},
      {"alpha", alpha, "lambda", lambda}, {"lambda", lambda, "mu", mu},
      {"mu", mu, "kappa", kappa},     {"kappa", kappa, "eta", eta},
      {"eta", eta, "c", c},           {"c", c, "1", 1.0},
  };
  std::vector<std::string> warnings;
  for (const Link& l : chain) {
    if (!(l.lo_val * factor <= l.hi_val)) {
      warnings.push_back(std::string(l.lo) + "=" + format_double(l.lo_val) + " not << " + l.hi +
                         "=" + format_double(l.hi_val));
    }
  }
  return warnings;
}

}  // namespace h2c
