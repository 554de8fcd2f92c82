#include "symfer/rational.hpp"

// Header-only helpers; this TU anchors the target.
