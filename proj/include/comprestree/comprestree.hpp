#pragma once

#include "comprestree/algorithms/arborescence.hpp"
#include "comprestree/algorithms/baselines.hpp"
#include "comprestree/algorithms/local_improve.hpp"
#include "comprestree/algorithms/reductions.hpp"
#include "comprestree/algorithms/treestar.hpp"
#include "comprestree/algorithms/unicast.hpp"
#include "comprestree/algorithms/wcds.hpp"
#include "comprestree/ctree.hpp"
