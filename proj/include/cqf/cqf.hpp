#pragma once

// Umbrella header: everything in the library.

#include "cqf/composition.hpp"
#include "cqf/engine.hpp"
#include "cqf/graph.hpp"
#include "cqf/json_io.hpp"
#include "cqf/qpolynomial.hpp"
#include "cqf/qsym.hpp"
#include "cqf/ribbon.hpp"
#include "cqf/theorem_lab.hpp"
