#pragma once

#include "forcinglab/classify.hpp"
#include "forcinglab/construction.hpp"
#include "forcinglab/families.hpp"
#include "forcinglab/forcing.hpp"
#include "forcinglab/forts.hpp"
#include "forcinglab/graph.hpp"
#include "forcinglab/graph6.hpp"
#include "forcinglab/random_families.hpp"
#include "forcinglab/report.hpp"
#include "forcinglab/search.hpp"
#include "forcinglab/vertex_set.hpp"
