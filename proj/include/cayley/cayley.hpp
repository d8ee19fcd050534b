#pragma once

// Umbrella header.

#include "cayley/bounds.hpp"
#include "cayley/certificates.hpp"
#include "cayley/common.hpp"
#include "cayley/covers.hpp"
#include "cayley/dihedral.hpp"
#include "cayley/engine.hpp"
#include "cayley/exemplars.hpp"
#include "cayley/graph.hpp"
#include "cayley/group.hpp"
#include "cayley/group_spec.hpp"
#include "cayley/heisenberg.hpp"
#include "cayley/hom.hpp"
#include "cayley/matrix.hpp"
#include "cayley/perm.hpp"
#include "cayley/semidirect_group.hpp"
