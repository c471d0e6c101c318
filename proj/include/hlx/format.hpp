#pragma once

#include <string>

namespace hlx {

// Shortest round-trip decimal form.
std::string format_shortest(double v);
// Exactly 17 significant digits in %g style.
std::string format_17g(double v);

}  // namespace hlx
