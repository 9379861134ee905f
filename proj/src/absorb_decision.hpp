#pragma once

#include "h2c/kgraph.hpp"

namespace h2c::detail {

// boolean form of the absorbing tester; stops scanning pairs once the verdict
// is forced, so it carries no counts
bool absorbing_decision(const KGraph& h, double alpha, double beta);

}  // namespace h2c::detail
