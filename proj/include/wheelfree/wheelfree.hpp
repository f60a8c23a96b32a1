#pragma once

#include "graph.hpp"
#include "wheel.hpp"
#include "spectral.hpp"
#include "partition.hpp"
#include "canonical.hpp"
#include "enumeration.hpp"
#include "search.hpp"
#include "report.hpp"
