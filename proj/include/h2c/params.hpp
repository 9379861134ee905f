#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace h2c {

// the full constant bundle; desk defaults are tuned so the constructive
// pipeline succeeds on dense hosts around n = 32..64, the asymptotic
// ordering chain is validated only advisorily at this scale
struct ParamSet {
  int D = 9;
  double eps = 0.1;
  double gamma = 0.02;
  double beta = 0.05;
  double omega = 0.08;
  double phi = 0.1;
  double alpha = 0.12;
  double lambda = 0.15;
  double mu = 0.46;
  double kappa = 0.005;
  double eta = 0.25;
  double rho = 0.25;
  double psi = 0.1;
  double beta1 = 0.2;
  double beta2 = 0.08;
  double beta1p = 0.1;
  double beta2p = 0.04;
  double c = 0.3;

  static ParamSet pipeline_defaults();
  static ParamSet extremal_defaults();

  // throws contract_error on unknown key or malformed value
  void set(const std::string& key, const std::string& value);

  // flat key=value lines; '#' comments and blank lines ignored
  static ParamSet parse(std::istream& in, ParamSet base);

  std::string echo() const;

  // unmet "<<" relations of the asymptotic chain, empty when all hold
  // with the given separation factor
  std::vector<std::string> hierarchy_warnings(double factor = 2.0) const;
};

}  // namespace h2c
