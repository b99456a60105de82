// Umbrella header.
#pragma once

#include "hesslab/ci_cohomology.hpp"
#include "hesslab/common.hpp"
#include "hesslab/finitefield.hpp"
#include "hesslab/hessenberg.hpp"
#include "hesslab/linalg.hpp"
#include "hesslab/monodromy.hpp"
#include "hesslab/orbits.hpp"
#include "hesslab/partition.hpp"
#include "hesslab/poincare.hpp"
#include "hesslab/springer.hpp"
