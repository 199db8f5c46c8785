#pragma once

#include "equipart/coloring.hpp"
#include "equipart/elimination.hpp"
#include "equipart/errors.hpp"
#include "equipart/generators.hpp"
#include "equipart/graph.hpp"
#include "equipart/oracle.hpp"
#include "equipart/partition.hpp"
#include "equipart/partitioners.hpp"
#include "equipart/serialize.hpp"
#include "equipart/setmerge.hpp"
#include "equipart/verify.hpp"
