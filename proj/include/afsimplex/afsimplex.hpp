#pragma once

#include "afsimplex/dictionary.hpp"
#include "afsimplex/dual_phase1.hpp"
#include "afsimplex/errors.hpp"
#include "afsimplex/generator.hpp"
#include "afsimplex/lp_format.hpp"
#include "afsimplex/oracle.hpp"
#include "afsimplex/phase1_af.hpp"
#include "afsimplex/phase1_traditional.hpp"
#include "afsimplex/phase2.hpp"
#include "afsimplex/problem.hpp"
#include "afsimplex/scalar.hpp"
#include "afsimplex/solver.hpp"
#include "afsimplex/trace.hpp"
