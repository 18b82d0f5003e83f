#pragma once

// Umbrella header: stable weighted graphs, contraction posets, tropical
// moduli cone complexes, valued series and tropicalization.

#include "tmw/automorphism.hpp"
#include "tmw/canonical.hpp"
#include "tmw/complex.hpp"
#include "tmw/contraction.hpp"
#include "tmw/dot_io.hpp"
#include "tmw/enumeration.hpp"
#include "tmw/errors.hpp"
#include "tmw/graph.hpp"
#include "tmw/json_io.hpp"
#include "tmw/model.hpp"
#include "tmw/poset.hpp"
#include "tmw/rational.hpp"
#include "tmw/series.hpp"
#include "tmw/tropical.hpp"
#include "tmw/weierstrass.hpp"
