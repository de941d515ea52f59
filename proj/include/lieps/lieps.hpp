#pragma once

#include "lieps/error.hpp"
#include "lieps/rational.hpp"
#include "lieps/linalg.hpp"
#include "lieps/lie_algebra.hpp"
#include "lieps/isotropy.hpp"
#include "lieps/invariants.hpp"
#include "lieps/poisson.hpp"
#include "lieps/foliation.hpp"
#include "lieps/connections.hpp"
#include "lieps/catalog.hpp"
#include "lieps/bivector_syntax.hpp"
