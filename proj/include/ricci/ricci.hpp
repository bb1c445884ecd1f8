#pragma once

#include "ricci/curvature.hpp"
#include "ricci/enumerate.hpp"
#include "ricci/error.hpp"
#include "ricci/families.hpp"
#include "ricci/graph.hpp"
#include "ricci/graph6.hpp"
#include "ricci/lap.hpp"
#include "ricci/rational.hpp"
#include "ricci/transport.hpp"
