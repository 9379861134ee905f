#include "h2c/kgraph.hpp"

namespace h2c {}
