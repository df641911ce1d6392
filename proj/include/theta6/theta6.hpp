#pragma once

// Convenience header: the whole library.

#include "theta6/scalar.hpp"
#include "theta6/geometry.hpp"
#include "theta6/graph.hpp"
#include "theta6/augment.hpp"
#include "theta6/bits.hpp"
#include "theta6/blocking.hpp"
#include "theta6/bounds.hpp"
#include "theta6/coloring.hpp"
#include "theta6/faces.hpp"
#include "theta6/generators.hpp"
#include "theta6/io.hpp"
#include "theta6/matching.hpp"
#include "theta6/spanning.hpp"
#include "theta6/triangles.hpp"
#include "theta6/verify.hpp"
