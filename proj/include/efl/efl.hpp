#pragma once

#include "efl/classify.hpp"
#include "efl/coloring.hpp"
#include "efl/error.hpp"
#include "efl/generators.hpp"
#include "efl/hypergraph.hpp"
#include "efl/io.hpp"
#include "efl/oracle.hpp"
